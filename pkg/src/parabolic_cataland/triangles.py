"""Root posets, nonnesting partitions and the bivariate count polynomials.

``H`` counts antichains of the root poset by size and by boundary-root
content; ``Mbar`` and ``M`` are the Moebius-weighted rank pair generating
functions of the noncrossing partitions and of the core label order; ``F``
is the rational substitution ``x^r H((x+1)/x, (y+1)/(x+1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .noncrossing import enumerate_nc, nc_poset
from .polynomials import ONE, LaurentPoly2, RationalPoly2, X, Y
from .posets import FinitePoset
from .symgroup import Composition


@dataclass(frozen=True)
class RootPoset:
    """The transpositions forced by the region boundaries.

    ``(i, j) <= (k, l)`` holds when ``i >= k`` and ``j <= l``; the ground
    set is the filter generated by the boundary transpositions
    ``(s_i, s_i + 1)``.
    """

    comp: Composition
    elements: tuple
    simples: frozenset
    poset: FinitePoset


def root_poset(comp: Composition) -> RootPoset:
    s = comp.prefix
    simples = frozenset((s[i], s[i] + 1) for i in range(1, comp.r))

    def dominates(t, sr) -> bool:  # sr <= t in the root order
        return t[0] <= sr[0] and sr[1] <= t[1]

    elements = tuple(
        (i, j)
        for i in range(1, comp.n + 1)
        for j in range(i + 1, comp.n + 1)
        if any(dominates((i, j), sr) for sr in simples)
    )
    poset = FinitePoset.from_leq(
        elements, lambda a, b: a[0] >= b[0] and a[1] <= b[1]
    )
    return RootPoset(comp=comp, elements=elements, simples=simples, poset=poset)


def nonnesting_partitions(comp: Composition,
                          rp: Optional[RootPoset] = None) -> list:
    """All antichains of the root poset, the empty one included."""
    if rp is None:
        rp = root_poset(comp)
    p = rp.poset
    n = p.n
    incomp = []
    for i in range(n):
        mask = 0
        for j in range(i + 1, n):
            if not (p.leq(i, j) or p.leq(j, i)):
                mask |= 1 << j
        incomp.append(mask)
    out = []

    def rec(chosen: tuple, allowed: int, start: int):
        out.append(frozenset(rp.elements[i] for i in chosen))
        m = allowed & ~((1 << (start)) - 1) if start else allowed
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            rec(chosen + (i,), allowed & incomp[i], i + 1)

    rec((), (1 << n) - 1, 0)
    return sorted(out, key=lambda a: (len(a), sorted(a)))


def h_triangle(comp: Composition, rp: Optional[RootPoset] = None,
               antichains: Optional[list] = None) -> LaurentPoly2:
    """Antichain counts graded by size and boundary-root content."""
    if rp is None:
        rp = root_poset(comp)
    if antichains is None:
        antichains = nonnesting_partitions(comp, rp)
    acc = LaurentPoly2.zero()
    for a in antichains:
        acc = acc + LaurentPoly2.monomial(1, len(a), len(a & rp.simples))
    return acc


def mobius_rank_polynomial(poset: FinitePoset, grades: list) -> LaurentPoly2:
    """``sum mu(a, b) x^grade(a) y^grade(b)`` over comparable pairs."""
    acc: dict = {}
    for a in range(poset.n):
        row = poset._mobius_row(a)  # noqa: SLF001 - cached per poset
        ga = grades[a]
        for b, mu in row.items():
            if mu:
                key = (ga, grades[b])
                acc[key] = acc.get(key, 0) + mu
    return LaurentPoly2(acc)


def mbar_triangle(comp: Composition,
                  nc: Optional[FinitePoset] = None) -> LaurentPoly2:
    """Moebius-weighted rank pairs of the noncrossing partition order."""
    if nc is None:
        nc = nc_poset(comp)
    grades = [p.num_bumps for p in nc.labels]
    return mobius_rank_polynomial(nc, grades)


def m_triangle(comp: Composition,
               clo: Optional[FinitePoset] = None) -> LaurentPoly2:
    """Moebius-weighted rank pairs of the core label order.

    The core label order lives on the avoiding permutations; the grading
    transports bump counts through the bijection, which is just the number
    of descents.
    """
    if clo is None:
        from .symgroup import descents
        from .tamari import tamari_lattice
        from . import lattices

        tam = tamari_lattice(comp)
        clo = lattices.core_label_order(tam.tables, tam.labeling)
        grades = [len(descents(w)) for w in tam.elements]
    else:
        from .symgroup import descents

        grades = [len(descents(w)) for w in clo.labels]
    return mobius_rank_polynomial(clo, grades)


@dataclass(frozen=True)
class FTriangle:
    """The substitution result in both shapes, plus the positivity verdict."""

    rational: RationalPoly2
    laurent: LaurentPoly2
    is_polynomial: bool
    is_nonnegative_polynomial: bool


def f_triangle(comp: Composition,
               h: Optional[LaurentPoly2] = None) -> FTriangle:
    """``x^k H((x+1)/x, (y+1)/(x+1))`` with ``k`` the number of boundary
    roots (one less than the number of parts), evaluated exactly.

    Every antichain has at least as many elements as boundary roots it
    contains, so the substitution expands term by term into the Laurent
    ring directly: ``x^i y^j -> x^(k-i) (x+1)^(i-j) (y+1)^j``.
    """
    if h is None:
        h = h_triangle(comp)
    k = comp.r - 1
    x_plus_1 = X + 1
    y_plus_1 = Y + 1
    acc = LaurentPoly2.zero()
    for (i, j), c in h.terms.items():
        assert i >= j >= 0
        acc = acc + c * LaurentPoly2.monomial(1, k - i, 0) \
            * (x_plus_1 ** (i - j)) * (y_plus_1 ** j)
    rational = RationalPoly2.from_poly(acc)
    poly = acc.is_polynomial()
    return FTriangle(
        rational=rational,
        laurent=acc,
        is_polynomial=poly,
        is_nonnegative_polynomial=poly and acc.has_nonnegative_coefficients(),
    )


@dataclass(frozen=True)
class HMIdentity:
    holds: bool
    residual: RationalPoly2


def check_hm_identity(comp: Composition,
                      h: Optional[LaurentPoly2] = None,
                      m: Optional[LaurentPoly2] = None) -> HMIdentity:
    """Compare ``H(x, y)`` against the prefactored substitution into ``M``.

    The right-hand side is ``(x(y-1)+1)^(r-1) M(y/(y-1), x(y-1)/(x(y-1)+1))``
    computed over a single explicit common denominator, and the comparison
    is exact cross multiplication.
    """
    if h is None:
        h = h_triangle(comp)
    if m is None:
        m = m_triangle(comp)
    r = comp.r
    y_minus_1 = Y - 1
    u = X * Y - X + 1  # x(y-1) + 1
    b1_max = max((ex for (ex, _ey) in m.terms), default=0)
    b2_max = max((ey for (_ex, ey) in m.terms), default=0)
    num = LaurentPoly2.zero()
    for (b1, b2), c in m.terms.items():
        num = num + c * (Y ** b1) * (y_minus_1 ** (b1_max - b1)) \
            * ((X * Y - X) ** b2) * (u ** (b2_max - b2))
    den = (y_minus_1 ** b1_max) * (u ** b2_max)
    rhs = RationalPoly2(num, den) * RationalPoly2.from_poly(u ** (r - 1))
    lhs = RationalPoly2.from_poly(h)
    residual = lhs - rhs
    return HMIdentity(holds=residual.is_zero(), residual=residual)


def at_most_one_part_exceeds_one(comp: Composition) -> bool:
    return sum(1 for p in comp.parts if p > 1) <= 1
