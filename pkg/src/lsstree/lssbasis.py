"""LSS-ideal generators of a tree and its explicit path-built Groebner
bases, with a Buchberger-based verification oracle.

The ideal is generated by x_u*x_v + y_u*y_v over the tree edges.  The
explicit basis attaches one element to every odd-length path and, for
even-length paths, one element per admissible "odd subset" of interior
vertices; for ascending labelings the empty subset suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .polyengine import Polynomial, VariableOrder, buchberger, reduce, spoly
from .treekit import LabeledTree, TreePath, all_paths, ascending_violation, AscendingLabelingError


@dataclass(frozen=True)
class Provenance:
    """Where a basis element came from: an edge, an odd-length path, or
    an even-length path with its odd subset."""

    kind: str  # "edge" | "odd_path" | "even_path"
    path: tuple
    odd_subset: tuple = ()

    def describe(self):
        if self.kind == "edge":
            return f"edge {self.path}"
        if self.kind == "odd_path":
            return f"odd path {self.path}"
        return f"even path {self.path}, odd subset {self.odd_subset}"


@dataclass(frozen=True)
class BasisElement:
    polynomial: Polynomial
    provenance: Provenance


@dataclass(frozen=True)
class GeneratorSet:
    tree: LabeledTree
    generators: tuple

    @property
    def order(self):
        return VariableOrder(self.tree.n)


def edge_polynomial(order, u, v):
    """x_u*x_v + y_u*y_v."""
    return Polynomial(
        order,
        [(1, order.monomial(xs=(u, v))), (1, order.monomial(ys=(u, v)))],
    )


def odd_path_element(order, path):
    """Element of an odd-length path: the edge binomial of the two
    endpoints times y_v over every interior vertex."""
    if path.odd_length is False:
        raise ValueError(f"path {path} has even length")
    a, b = path.endpoints
    interior = path.interior
    return Polynomial(
        order,
        [
            (1, order.monomial(xs=(a, b), ys=interior)),
            (1, order.monomial(ys=(a, b) + interior)),
        ],
    )


def even_path_element(order, path, odd_subset=()):
    """Element of an even-length path: (x_a*y_b - x_b*y_a) times x_v over
    the odd subset and y_v over the remaining interior vertices."""
    if path.odd_length:
        raise ValueError(f"path {path} has odd length")
    a, b = path.endpoints
    chosen = tuple(odd_subset)
    rest = tuple(v for v in path.interior if v not in set(chosen))
    return Polynomial(
        order,
        [
            (1, order.monomial(xs=(a,) + chosen, ys=(b,) + rest)),
            (-1, order.monomial(xs=(b,) + chosen, ys=(a,) + rest)),
        ],
    )


def odd_subsets(path):
    """All subsets of the odd-position interior vertices of an
    even-length path, smallest first; positions count along the
    canonical orientation and exclude the endpoints."""
    if path.odd_length:
        raise ValueError("odd subsets are defined for even-length paths only")
    candidates = path.vertices[2:-2:2]
    out = []
    for r in range(len(candidates) + 1):
        out.extend(combinations(candidates, r))
    return out


def edge_generators(tree):
    """The ideal's edge generators, one per tree edge, canonical order."""
    order = VariableOrder(tree.n)
    gens = tuple(
        BasisElement(edge_polynomial(order, u, v), Provenance("edge", (u, v)))
        for u, v in tree.edges
    )
    return GeneratorSet(tree, gens)


def _path_blocks(tree):
    odd, even = [], []
    for path in all_paths(tree):
        if path.odd_length:
            odd.append(path)
        else:
            even.append(path)
    return odd, even


def theorem_basis(tree):
    """The full path-built Groebner basis, valid for any labeling.

    Edges come first, then longer odd-length paths by endpoints, then
    even-length paths with every odd subset in enumeration order.
    """
    order = VariableOrder(tree.n)
    odd, even = _path_blocks(tree)
    out = [
        BasisElement(edge_polynomial(order, u, v), Provenance("edge", (u, v)))
        for u, v in tree.edges
    ]
    for path in odd:
        if path.length == 1:
            continue
        out.append(
            BasisElement(
                odd_path_element(order, path), Provenance("odd_path", path.vertices)
            )
        )
    for path in even:
        for subset in odd_subsets(path):
            out.append(
                BasisElement(
                    even_path_element(order, path, subset),
                    Provenance("even_path", path.vertices, tuple(sorted(subset))),
                )
            )
    return out


def corollary_basis(tree):
    """The ascending-labeling basis: one element per path, empty odd
    subsets throughout.  Raises AscendingLabelingError otherwise."""
    violation = ascending_violation(tree)
    if violation is not None:
        raise AscendingLabelingError(violation)
    order = VariableOrder(tree.n)
    odd, even = _path_blocks(tree)
    out = [
        BasisElement(edge_polynomial(order, u, v), Provenance("edge", (u, v)))
        for u, v in tree.edges
    ]
    for path in odd:
        if path.length == 1:
            continue
        out.append(
            BasisElement(
                odd_path_element(order, path), Provenance("odd_path", path.vertices)
            )
        )
    for path in even:
        out.append(
            BasisElement(
                even_path_element(order, path), Provenance("even_path", path.vertices)
            )
        )
    return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    total: int
    failures: tuple  # (description, remainder string) pairs

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            "total": self.total,
            "failures": [list(f) for f in self.failures],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class GroebnerReport:
    """Outcome of the three-way Groebner verification."""

    membership: CheckResult
    generation: CheckResult
    spairs: CheckResult

    @property
    def passed(self):
        return self.membership.passed and self.generation.passed and self.spairs.passed

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": {
                "membership": self.membership.to_json(),
                "generation": self.generation.to_json(),
                "spairs": self.spairs.to_json(),
            },
        }


def verify_groebner(candidate, gens):
    """Check a candidate basis against the edge generators three ways:

    (a) every candidate element reduces to zero against a Buchberger
        basis of the edge generators (ideal membership),
    (b) every edge generator reduces to zero against the candidate
        (the candidate generates), and
    (c) every S-polynomial of a candidate pair reduces to zero against
        the candidate (Buchberger's criterion, no pair skipped).

    Failures are recorded in the report, never raised.
    """
    cand_polys = [b.polynomial for b in candidate]
    gen_polys = [g.polynomial for g in gens.generators]

    oracle = buchberger(gen_polys)
    membership_failures = []
    for el in candidate:
        rem, _ = reduce(el.polynomial, oracle)
        if not rem.is_zero:
            membership_failures.append((el.provenance.describe(), str(rem)))

    generation_failures = []
    for gen in gens.generators:
        if cand_polys:
            rem, _ = reduce(gen.polynomial, cand_polys)
        else:
            rem = gen.polynomial
        if not rem.is_zero:
            generation_failures.append((gen.provenance.describe(), str(rem)))

    spair_failures = []
    npairs = 0
    for i in range(len(candidate)):
        for j in range(i + 1, len(candidate)):
            npairs += 1
            s = spoly(cand_polys[i], cand_polys[j])
            if s.is_zero:
                continue
            rem, _ = reduce(s, cand_polys)
            if not rem.is_zero:
                spair_failures.append(
                    (
                        f"S({candidate[i].provenance.describe()}; "
                        f"{candidate[j].provenance.describe()})",
                        str(rem),
                    )
                )

    return GroebnerReport(
        CheckResult("membership", len(candidate), tuple(membership_failures)),
        CheckResult("generation", len(gens.generators), tuple(generation_failures)),
        CheckResult("spairs", npairs, tuple(spair_failures)),
    )


def element_to_json(element):
    poly = element.polynomial
    prov = element.provenance
    return {
        "provenance": {
            "kind": prov.kind,
            "path": list(prov.path),
            "odd_subset": list(prov.odd_subset),
        },
        "polynomial": str(poly),
        "terms": [
            [coef.numerator, coef.denominator, list(mono)] for coef, mono in poly.terms
        ],
    }


def basis_to_json(elements):
    return [element_to_json(e) for e in elements]
