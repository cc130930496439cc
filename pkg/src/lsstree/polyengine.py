"""Exact sparse polynomial arithmetic over Q in x_1..x_n, y_1..y_n.

Monomials are plain exponent tuples of length 2n (index v-1 holds the
exponent of x_v, index n+v-1 that of y_v).  The ambient order is the
lexicographic order in which every x-variable beats every y-variable and
both blocks list the vertices the same way.  On top of the arithmetic:
the division algorithm with quotients, S-polynomials, Buchberger's
algorithm with a deterministic pair strategy, reduced Groebner bases,
and minimal generators of the initial ideal.  Everything is exact
(fractions.Fraction); nothing here is randomized.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionError(ValueError):
    """Monomial length does not match the 2n variables of the order."""


@dataclass(frozen=True)
class VariableOrder:
    """Lex order on 2n variables induced by a vertex sequence.

    The sequence lists vertices by descending priority; the x-block of
    the sequence precedes the whole y-block, and both blocks use the
    same vertex sequence, so invalid block orders are unrepresentable.
    """

    n: int
    vertices: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        verts = tuple(self.vertices) or tuple(range(1, self.n + 1))
        if sorted(verts) != list(range(1, self.n + 1)):
            raise ValueError("vertex sequence must be a permutation of 1..n")
        object.__setattr__(self, "vertices", verts)
        seq = tuple(v - 1 for v in verts) + tuple(self.n + v - 1 for v in verts)
        object.__setattr__(self, "_sequence", seq)

    @property
    def nvars(self):
        return 2 * self.n

    def sort_key(self, mono):
        """Tuple key that sorts monomials ascending in the lex order."""
        return tuple(mono[i] for i in self._sequence)

    def one(self):
        return (0,) * (2 * self.n)

    def monomial(self, xs=(), ys=()):
        """Build an exponent tuple from vertex lists (repeats add up)."""
        exps = [0] * (2 * self.n)
        for v in xs:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
            exps[v - 1] += 1
        for v in ys:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
            exps[self.n + v - 1] += 1
        return tuple(exps)


def lex_compare(a, b, order):
    """Return -1, 0, or 1 as a <, =, > b in the order's lex comparison."""
    if len(a) != order.nvars or len(b) != order.nvars:
        raise DimensionError("monomial length does not match the variable order")
    for i in order._sequence:
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


def mul_mono(a, b):
    return tuple(x + y for x, y in zip(a, b))


def divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def div_mono(a, b):
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def lcm_mono(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomial_str(mono, n):
    """Render an exponent tuple as x<v>/y<v> factors, or "1"."""
    parts = []
    for v in range(1, n + 1):
        e = mono[v - 1]
        if e == 1:
            parts.append(f"x{v}")
        elif e > 1:
            parts.append(f"x{v}^{e}")
    for v in range(1, n + 1):
        e = mono[n + v - 1]
        if e == 1:
            parts.append(f"y{v}")
        elif e > 1:
            parts.append(f"y{v}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial: terms sorted strictly descending, no zeros."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=()):
        nv = order.nvars
        acc = {}
        for coef, mono in terms:
            if len(mono) != nv:
                raise DimensionError("term length does not match the variable order")
            mono = tuple(mono)
            c = acc.get(mono, _ZERO) + Fraction(coef)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        key = order.sort_key
        self.order = order
        self.terms = tuple(
            sorted(((c, m) for m, c in acc.items()), key=lambda t: key(t[1]), reverse=True)
        )

    @classmethod
    def zero(cls, order):
        return cls(order)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lm(self):
        """Initial (leading) monomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no initial monomial")
        return self.terms[0][1]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no initial coefficient")
        return self.terms[0][0]

    def monic(self):
        if self.is_zero:
            return self
        c = self.lc
        if c == 1:
            return self
        return Polynomial(self.order, ((coef / c, m) for coef, m in self.terms))

    def mul_term(self, coef, mono):
        if coef == 0:
            return Polynomial(self.order)
        return Polynomial(
            self.order, ((c * coef, mul_mono(m, mono)) for c, m in self.terms)
        )

    def __neg__(self):
        return Polynomial(self.order, ((-c, m) for c, m in self.terms))

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError("polynomials use different variable orders")
        return Polynomial(self.order, self.terms + other.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.order != other.order:
            raise ValueError("polynomials use different variable orders")
        acc = []
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                acc.append((c1 * c2, mul_mono(m1, m2)))
        return Polynomial(self.order, acc)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.order == other.order
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.order, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        n = self.order.n
        pieces = []
        for i, (coef, mono) in enumerate(self.terms):
            mag = abs(coef)
            ms = monomial_str(mono, n)
            if mag == 1 and ms != "1":
                body = ms
            elif ms == "1":
                body = str(mag)
            else:
                body = f"{mag}*{ms}"
            if i == 0:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


def _check_divisors(G):
    if not G:
        return
    order = G[0].order
    for g in G:
        if g.is_zero:
            raise ValueError("divisors must be nonzero")
        if g.order != order:
            raise ValueError("divisors use different variable orders")


def spoly(f, g):
    """S-polynomial: the leading-term cancellation combination of f and g."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial needs nonzero inputs")
    if f.order != g.order:
        raise ValueError("polynomials use different variable orders")
    l = lcm_mono(f.lm, g.lm)
    return f.mul_term(_ONE / f.lc, div_mono(l, f.lm)) - g.mul_term(
        _ONE / g.lc, div_mono(l, g.lm)
    )


def reduce(f, G):
    """Divide f by the sequence G; return (remainder, quotients).

    Deterministic: each step divides the current initial term by the
    first divisor in G whose initial monomial divides it.  No monomial
    of the remainder is divisible by any in(G_i), and f equals
    sum(quotients[i] * G[i]) + remainder.
    """
    G = list(G)
    _check_divisors(G)
    order = f.order
    if G and G[0].order != order:
        raise ValueError("polynomials use different variable orders")
    key = order.sort_key
    lms = [(g.lm, g.lc) for g in G]
    quotients = [{} for _ in G]
    remainder = {}
    work = {}
    for c, m in f.terms:
        work[m] = c
    while work:
        mono = max(work, key=key)
        coef = work.pop(mono)
        for i, (glm, glc) in enumerate(lms):
            if divides(glm, mono):
                qm = div_mono(mono, glm)
                qc = coef / glc
                quotients[i][qm] = quotients[i].get(qm, _ZERO) + qc
                for c2, m2 in G[i].terms[1:]:
                    mm = mul_mono(qm, m2)
                    nc = work.get(mm, _ZERO) - qc * c2
                    if nc:
                        work[mm] = nc
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[mono] = coef
    rem = Polynomial(order, ((c, m) for m, c in remainder.items()))
    quots = [Polynomial(order, ((c, m) for m, c in q.items())) for q in quotients]
    return rem, quots


def buchberger(F):
    """Groebner basis of the ideal generated by F.

    Pair strategy: always process the unprocessed pair whose initial
    monomials have the lex-smallest lcm, ties broken by generator
    insertion indices; pairs with coprime initial monomials are skipped.
    Accepted remainders are appended monic, so the output is a
    deterministic function of the input sequence.
    """
    F = list(F)
    _check_divisors(F)
    if not F:
        return []
    order = F[0].order
    key = order.sort_key
    G = list(F)
    heap = []
    for j in range(len(G)):
        for i in range(j):
            heapq.heappush(heap, (key(lcm_mono(G[i].lm, G[j].lm)), i, j))
    while heap:
        _, i, j = heapq.heappop(heap)
        if coprime(G[i].lm, G[j].lm):
            continue
        rem, _ = reduce(spoly(G[i], G[j]), G)
        if rem.is_zero:
            continue
        rem = rem.monic()
        k = len(G)
        for i0 in range(k):
            heapq.heappush(heap, (key(lcm_mono(G[i0].lm, rem.lm)), i0, k))
        G.append(rem)
    return G


def reduce_basis(G):
    """The reduced Groebner basis of the ideal of the Groebner basis G.

    Monic elements, initial monomials forming a divisibility antichain,
    every element fully reduced against the others, sorted by initial
    monomial descending.  Unique for a fixed ideal and order.
    """
    G = [g for g in G if not g.is_zero]
    _check_divisors(G)
    if not G:
        return []
    order = G[0].order
    key = order.sort_key
    # Minimalize: ascending initial monomials, keep an antichain.
    minimal = []
    for g in sorted((g.monic() for g in G), key=lambda g: key(g.lm)):
        if not any(divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    # Interreduce tails; initial monomials are already an antichain so
    # one pass leaves every element fully reduced.
    reduced = list(minimal)
    for idx in range(len(reduced)):
        others = reduced[:idx] + reduced[idx + 1 :]
        rem, _ = reduce(reduced[idx], others)
        reduced[idx] = rem
    reduced.sort(key=lambda g: key(g.lm), reverse=True)
    return reduced


def initial_gens(G):
    """Minimal generating set of the initial ideal of the basis G.

    Returns the divisibility antichain of the initial monomials, sorted
    descending.
    """
    G = [g for g in G if not g.is_zero]
    _check_divisors(G)
    if not G:
        return ()
    order = G[0].order
    key = order.sort_key
    lms = sorted({g.lm for g in G}, key=key)
    minimal = []
    for m in lms:
        if not any(divides(h, m) for h in minimal):
            minimal.append(m)
    minimal.sort(key=key, reverse=True)
    return tuple(minimal)
