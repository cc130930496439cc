"""The Stanley-Reisner complex of the initial ideal, two ways.

A face is a pair (A, A') of vertex subsets standing for the x- and
y-variables it contains.  The defining route tests the face monomial
against the minimal initial generators of the ascending-labeling basis;
the second route rebuilds the family of forbidden vertex sets directly
from tree paths and must agree with the first.  Face counts feed the
graded series and the complex-side Krull dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .lssbasis import corollary_basis
from .polyengine import initial_gens
from .treekit import TreePath, all_paths, is_independent

DEFAULT_FACE_CAP = 12


class EnumerationCapError(RuntimeError):
    """The requested exhaustive enumeration exceeds the configured cap."""


def minimal_initial_gens(tree):
    """Minimal generators of the initial ideal of the ascending basis."""
    basis = corollary_basis(tree)
    return initial_gens([b.polynomial for b in basis])


def _supports(mono, n):
    xs = frozenset(v for v in range(1, n + 1) if mono[v - 1])
    ys = frozenset(v for v in range(1, n + 1) if mono[n + v - 1])
    return xs, ys


def face_via_initial(tree, a_side, y_side, min_gens):
    """Face test by support: (A, A') is a face when no minimal initial
    generator has all of its variables inside x_A union y_A'."""
    a_set = set(a_side)
    y_set = set(y_side)
    n = tree.n
    for mono in min_gens:
        xs, ys = _supports(mono, n)
        if xs <= a_set and ys <= y_set:
            return False
    return True


@dataclass(frozen=True)
class PathFamily:
    """The forbidden vertex sets attached to an independent set A: short
    "edge" members and trimmed longer paths."""

    edges_part: tuple
    paths_part: tuple

    @property
    def members(self):
        return self.edges_part + self.paths_part


def path_star(tree, a_side):
    """Family of paths whose vertex sets must escape A' for (A, A') to be
    a face.

    Edge members: tree edges {u, v} having an endpoint adjacent to some
    a in A with u, v > a (the chain u - v - a; u itself need not touch
    a).  Path members: each path P such that
      (1) the minimum-label vertex of P is outside A,
      (2) that minimum is not an endpoint of P,
      (3) the endpoints carrying x-variables in P's basis element lie in
          A (both endpoints for odd length, the smaller one for even),
      (4) every vertex at distance > 2 from both endpoints is outside A,
    contributes P minus its x-endpoints.
    """
    a_set = frozenset(a_side)
    if not is_independent(tree, a_set):
        raise ValueError("the x-side set must be independent in the tree")
    edges_part = []
    for u, v in tree.edges:
        for a in a_set:
            if a < u and a < v and (a in tree.adj[u] or a in tree.adj[v]):
                edges_part.append(TreePath((u, v)))
                break
    paths_part = []
    for path in all_paths(tree):
        verts = path.vertices
        mn = min(verts)
        if mn in a_set:
            continue
        if mn == verts[0] or mn == verts[-1]:
            continue
        if path.odd_length:
            x_ends = set(path.endpoints)
        else:
            x_ends = {verts[0]}
        if not x_ends <= a_set:
            continue
        k = len(verts)
        if any(verts[i] in a_set for i in range(3, k - 3)):
            continue
        trimmed = verts[1:-1] if path.odd_length else verts[1:]
        paths_part.append(TreePath(trimmed))
    paths_part = sorted(set(paths_part), key=lambda p: p.vertices)
    return PathFamily(tuple(edges_part), tuple(paths_part))


def face_via_paths(tree, a_side, y_side):
    """Face test via the path family: A independent and no family member
    has all of its vertices inside A'."""
    a_set = frozenset(a_side)
    if not is_independent(tree, a_set):
        return False
    y_set = set(y_side)
    family = path_star(tree, a_set)
    for member in family.members:
        if set(member.vertices) <= y_set:
            return False
    return True


@dataclass(frozen=True)
class FVector:
    """Face counts by cardinality: counts[i] is the number of faces with
    i vertices, so counts[0] = 1 is the empty face."""

    counts: tuple

    @property
    def dim(self):
        return len(self.counts) - 2

    @property
    def total(self):
        return sum(self.counts)

    def f(self, i):
        """f_i: faces of dimension i (i = -1 gives the empty face)."""
        return self.counts[i + 1] if -1 <= i < len(self.counts) - 1 else 0

    def delta(self, i):
        """Graded face count: faces (A, A') with |A| + |A'| = i."""
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def to_json(self):
        return {"f": list(self.counts), "dim_complex": self.dim}


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1-t)^denominator_power with ascending integer
    coefficients; stored as computed unless normalize() is called."""

    numerator: tuple
    denominator_power: int
    normalized: bool = False

    def normalize(self):
        """Cancel common (1-t) factors; never applied silently."""
        num = list(self.numerator)
        power = self.denominator_power
        while power > 0 and num and sum(num) == 0:
            prefix = []
            acc = 0
            for c in num[:-1]:
                acc += c
                prefix.append(acc)
            num = prefix or [0]
            power -= 1
        return HilbertSeries(tuple(num), power, True)

    def to_json(self):
        return {
            "numerator": list(self.numerator),
            "denominator_power": self.denominator_power,
            "normalized": self.normalized,
        }


def _generator_masks(tree, min_gens):
    n = tree.n
    masks = []
    for mono in min_gens:
        xm = ym = 0
        for v in range(1, n + 1):
            if mono[v - 1]:
                xm |= 1 << (v - 1)
            if mono[n + v - 1]:
                ym |= 1 << (v - 1)
        masks.append((xm, ym))
    return masks


def _minimal_masks(masks):
    out = []
    for m in sorted(masks, key=lambda x: bin(x).count("1")):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _avoiding_counts(n, forbidden, binom):
    """Count, by popcount, the subsets of an n-set containing none of the
    forbidden masks.  Inclusion-exclusion for small families, a
    superset-sweep over all 2^n masks otherwise."""
    if not forbidden:
        return [binom[n][j] for j in range(n + 1)]
    forbidden = _minimal_masks(forbidden)
    counts = [0] * (n + 1)
    if len(forbidden) <= 14:
        weight = {}

        def walk(idx, union, sign):
            if idx == len(forbidden):
                b = union.bit_count()
                weight[b] = weight.get(b, 0) + sign
                return
            walk(idx + 1, union, sign)
            walk(idx + 1, union | forbidden[idx], -sign)

        walk(0, 0, 1)
        for b, w in weight.items():
            if w == 0:
                continue
            for j in range(b, n + 1):
                counts[j] += w * binom[n - b][j - b]
        return counts
    size = 1 << n
    bad = bytearray(size)
    for m in forbidden:
        bad[m] = 1
    for b in range(n):
        bit = 1 << b
        for m in range(size):
            if m & bit and bad[m ^ bit]:
                bad[m] = 1
    for m in range(size):
        if not bad[m]:
            counts[m.bit_count()] += 1
    return counts


def _face_size_counts(tree, cap):
    """Exhaustive face counts by |A| + |A'|, pruned to independent A."""
    n = tree.n
    if n > cap:
        raise EnumerationCapError(
            f"face enumeration for n={n} exceeds the cap {cap}; raise the cap to force it"
        )
    masks = _generator_masks(tree, minimal_initial_gens(tree))
    edge_masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in tree.edges]
    binom = [[comb(a, b) for b in range(n + 1)] for a in range(n + 1)]
    counts = [0] * (2 * n + 1)
    for a_mask in range(1 << n):
        if any(a_mask & em == em for em in edge_masks):
            continue
        active = [ym for xm, ym in masks if xm & ~a_mask == 0]
        good = _avoiding_counts(n, active, binom)
        base = a_mask.bit_count()
        for j, cnt in enumerate(good):
            counts[base + j] += cnt
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def f_vector(tree, cap=DEFAULT_FACE_CAP):
    """Face counts of the complex by exhaustive enumeration with
    independence pruning; the support test is the defining predicate."""
    return FVector(tuple(_face_size_counts(tree, cap)))


def dim_from_complex(tree, cap=DEFAULT_FACE_CAP):
    """Krull dimension from the complex: the largest |A| + |A'| of a face."""
    return len(_face_size_counts(tree, cap)) - 1


def hilbert_series(tree, cap=DEFAULT_FACE_CAP):
    """Graded series of the quotient: sum over faces of (t/(1-t))^size,
    collected over the common denominator (1-t)^(dim+1)."""
    counts = _face_size_counts(tree, cap)
    d = len(counts) - 1
    num = [0] * (d + 1)
    for i, fi in enumerate(counts):
        for k in range(d - i + 1):
            num[i + k] += fi * comb(d - i, k) * (-1) ** k
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(tuple(num), d)


def series_expand(series, degree):
    """Taylor coefficients of numerator / (1-t)^p up to the given degree."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    num = series.numerator
    p = series.denominator_power
    out = []
    for k in range(degree + 1):
        if p == 0:
            out.append(num[k] if k < len(num) else 0)
        else:
            out.append(
                sum(num[i] * comb(k - i + p - 1, p - 1) for i in range(min(k, len(num) - 1) + 1))
            )
    return out


def standard_monomial_counts(tree, degree):
    """Independent oracle: count monomials of each total degree <= degree
    in the 2n variables that no minimal initial generator divides."""
    from .polyengine import divides

    gens = minimal_initial_gens(tree)
    nv = 2 * tree.n
    counts = [1]  # the monomial 1 is never divisible by a generator
    level = [(0,) * nv]
    for _ in range(degree):
        nxt = set()
        for mono in level:
            for i in range(nv):
                nxt.add(mono[:i] + (mono[i] + 1,) + mono[i + 1 :])
        level = sorted(nxt)
        counts.append(sum(1 for m in level if not any(divides(g, m) for g in gens)))
    return counts
