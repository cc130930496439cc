"""Krull dimension of the quotient by three independent routes.

Route one reads the dimension off the face complex; route two maximizes
|V| + c(T[V]) over vertex subsets (exhaustively, or by a rooted dynamic
program); route three counts the pendant-path peeling.  The report
bundles the routes, checks the pendant-count bounds, and carries a
maximizing witness subset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .srcomplex import DEFAULT_FACE_CAP, EnumerationCapError, dim_from_complex
from .treekit import (
    ascending_labeling,
    is_ascending,
    pendant_decomposition,
    relabel,
)

DEFAULT_SUBSET_CAP = 22

_EXC, _TOP, _OPEN = 0, 1, 2


def dim_subset_max(tree, cap=DEFAULT_SUBSET_CAP):
    """Exhaustive max of |V| + c(T[V]) with its lexicographically least
    maximizing witness.

    Induced subgraphs of a tree are forests, so the objective equals
    2|V| minus the number of edges inside V.
    """
    n = tree.n
    if n > cap:
        raise EnumerationCapError(
            f"subset enumeration for n={n} exceeds the cap {cap}; use dim_subset_dp"
        )
    adj_mask = [0] * n
    for u, v in tree.edges:
        adj_mask[u - 1] |= 1 << (v - 1)
        adj_mask[v - 1] |= 1 << (u - 1)
    size = 1 << n
    edges_in = [0] * size
    best = 0
    witness = ()
    for m in range(1, size):
        low = m & -m
        rest = m ^ low
        v = low.bit_length() - 1
        e = edges_in[rest] + (adj_mask[v] & rest).bit_count()
        edges_in[m] = e
        val = 2 * m.bit_count() - e
        if val > best:
            best = val
            witness = _mask_vertices(m)
        elif val == best:
            cand = _mask_vertices(m)
            if cand < witness:
                witness = cand
    return best, witness


def _mask_vertices(mask):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _subset_dp(tree):
    """Rooted DP over three per-vertex states: excluded, included with
    the component charged here, included with the charge left open for
    the parent.  Returns the dp table and a child-order list for
    backtracking."""
    n = tree.n
    root = 1
    parent = [0] * (n + 1)
    order = [root]
    parent[root] = -1
    children = {v: [] for v in range(1, n + 1)}
    for v in order:
        for w in sorted(tree.adj[v]):
            if parent[w] == 0 and w != root:
                parent[w] = v
                children[v].append(w)
                order.append(w)
    dp = [[0, 0, 0] for _ in range(n + 1)]
    for v in reversed(order):
        exc = top = open_ = 0
        for c in children[v]:
            exc += max(dp[c][_EXC], dp[c][_TOP])
            open_ += max(dp[c][_EXC], dp[c][_OPEN])
        dp[v][_EXC] = exc
        dp[v][_TOP] = 2 + open_
        dp[v][_OPEN] = 1 + open_
    return dp, children, root


def dim_subset_dp(tree):
    """Polynomial-time evaluation of the subset-max objective."""
    dp, _, root = _subset_dp(tree)
    return max(dp[root][_EXC], dp[root][_TOP])


def dim_subset_dp_witness(tree):
    """Subset-max value with one optimal witness, by DP backtracking."""
    dp, children, root = _subset_dp(tree)
    value = max(dp[root][_EXC], dp[root][_TOP])
    included = []
    state0 = _EXC if dp[root][_EXC] >= dp[root][_TOP] else _TOP
    stack = [(root, state0)]
    while stack:
        v, state = stack.pop()
        if state != _EXC:
            included.append(v)
        for c in children[v]:
            if state == _EXC:
                pick = _EXC if dp[c][_EXC] >= dp[c][_TOP] else _TOP
            else:
                pick = _EXC if dp[c][_EXC] >= dp[c][_OPEN] else _OPEN
            stack.append((c, pick))
    return value, tuple(sorted(included))


def dim_pendant(tree):
    """Dimension from the pendant peeling: path vertices plus path count."""
    dec = pendant_decomposition(tree)
    return len(dec.path_vertices) + dec.path_count


def dim_bounds(tree):
    """(n + 1, p + n - 1) with p the pendant count; (2, 2) for n = 1."""
    if tree.n == 1:
        return (2, 2)
    p = sum(1 for v in range(1, tree.n + 1) if tree.degree(v) == 1)
    return (tree.n + 1, p + tree.n - 1)


def pendant_face_witness(tree):
    """A face (A, A') of the ascending complex realizing the pendant-route
    dimension: per layer, the largest residual pendant of each path on
    the x side, and every path vertex on the y side."""
    dec = pendant_decomposition(tree)
    alive = set(range(1, tree.n + 1))
    a_side = set()
    for layer in dec.layers:
        for path in layer.paths:
            cands = [
                v
                for v in path.vertices
                if sum(1 for w in tree.adj[v] if w in alive) <= 1
            ]
            a_side.add(max(cands))
        alive -= layer.vertices | layer.neighbors
    return frozenset(a_side), dec.path_vertices


@dataclass(frozen=True)
class DimReport:
    dim_complex: object  # int or None when the route was skipped
    dim_subset_max: int
    dim_pendant: int
    lower_bound: int
    upper_bound: int
    witness: tuple
    agree: bool

    @property
    def dim(self):
        return self.dim_complex if self.dim_complex is not None else self.dim_subset_max

    def to_json(self):
        return {
            "dim": self.dim,
            "routes": {
                "complex": self.dim_complex,
                "subset_max": self.dim_subset_max,
                "pendant": self.dim_pendant,
            },
            "bounds": [self.lower_bound, self.upper_bound],
            "witness": list(self.witness),
            "agree": self.agree,
        }


def dim_report(tree, subset_cap=DEFAULT_SUBSET_CAP, face_cap=DEFAULT_FACE_CAP):
    """Run every dimension route available at this size and compare.

    The complex route relabels to an ascending labeling first and is
    skipped (reported as None) above the face cap; the subset route
    falls back to the dynamic program above its own cap.
    """
    if tree.n <= subset_cap:
        subset_val, witness = dim_subset_max(tree, subset_cap)
    else:
        subset_val, witness = dim_subset_dp_witness(tree)
    pend = dim_pendant(tree)
    lo, hi = dim_bounds(tree)
    if tree.n <= face_cap:
        ascending = tree if is_ascending(tree) else relabel(tree, ascending_labeling(tree))
        cx = dim_from_complex(ascending, face_cap)
    else:
        cx = None
    dims = {d for d in (cx, subset_val, pend) if d is not None}
    agree = len(dims) == 1 and lo <= next(iter(dims)) <= hi
    return DimReport(cx, subset_val, pend, lo, hi, witness, agree)
