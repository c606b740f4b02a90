"""The Tamari lattice of a composition and its join-irreducible calculus.

The lattice lives on the pattern-avoiding quotient permutations under weak
order.  Its join-irreducibles are the permutations ``w_{a,b}`` with a single
descent ``(a, b)``; they admit a closed one-line formula, a canonical total
order realised by the labels along one distinguished maximal chain, and a
purely combinatorial description of the Galois graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from . import lattices
from .lattices import EdgeLabeling, GaloisGraph, LatticeTables
from .noncrossing import AlphaPartition, phi_inverse
from .posets import FinitePoset
from .symgroup import (
    Composition,
    avoiders,
    descents,
    inversions,
    longest_quotient_element,
    pi_down,
    quotient_elements,
    region_of,
    weak_order_poset,
)


class SameRegion(Exception):
    """Both coordinates of a would-be irreducible share a region."""


@dataclass(frozen=True)
class JoinIrreducibleWab:
    """The avoider with single descent ``(a, b)``; ``region`` holds ``a``."""

    a: int
    b: int
    region: int
    perm: tuple

    @property
    def name(self) -> str:
        return f"w_{{{self.a},{self.b}}}"


def wab(comp: Composition, a: int, b: int) -> JoinIrreducibleWab:
    """Build ``w_{a,b}`` from its closed one-line formula."""
    if not (1 <= a < b <= comp.n):
        raise ValueError(f"need 1 <= a < b <= n, got {(a, b)}")
    j = region_of(comp, a)
    if j == region_of(comp, b):
        raise SameRegion(f"{a} and {b} lie in region {j}")
    s = comp.prefix
    w = [0] * comp.n
    for i in range(1, comp.n + 1):
        if i < a or i > b:
            w[i - 1] = i
        elif i <= s[j]:
            w[i - 1] = a + b - s[j] + (i - a)
        else:
            w[i - 1] = a + (i - s[j]) - 1
    perm = tuple(w)
    assert descents(perm) == frozenset({(a, b)})
    return JoinIrreducibleWab(a=a, b=b, region=j, perm=perm)


def ji_count(comp: Composition) -> int:
    """Number of join-irreducibles; also the lattice length."""
    parts = comp.parts
    return sum(
        parts[i] * sum(parts[i + 1:]) for i in range(len(parts) - 1)
    )


def all_wab(comp: Composition) -> list:
    """Every admissible ``w_{a,b}``, ordered by ``(a, b)``."""
    out = []
    for a in range(1, comp.n + 1):
        for b in range(a + 1, comp.n + 1):
            if region_of(comp, a) != region_of(comp, b):
                out.append(wab(comp, a, b))
    assert len(out) == ji_count(comp)
    return out


def canonical_ji_order(comp: Composition) -> list:
    """The total order of the irreducibles read off the distinguished chain.

    Starting from ``w_{s_1, s_1 + 1}``, the successor map walks ``b`` up
    through its region, drops ``a`` and restarts ``b`` at the region start,
    then moves on to the next pair of regions.
    """
    f = ji_count(comp)
    if f == 0:
        return []
    s = comp.prefix
    r = comp.r
    cur = wab(comp, s[1], s[1] + 1)
    order = [cur]
    while len(order) < f:
        a, b = cur.a, cur.b
        i, j = region_of(comp, a), region_of(comp, b)
        if b < s[j]:
            nxt = wab(comp, a, b + 1)
        elif a > s[i - 1] + 1:
            nxt = wab(comp, a - 1, s[j - 1] + 1)
        elif b < comp.n:
            nxt = wab(comp, s[i], s[j] + 1)
        else:
            assert i < r - 1, "successor rule ran past the last irreducible"
            nxt = wab(comp, s[i + 1], s[i + 1] + 1)
        order.append(nxt)
        cur = nxt
    assert len({x.perm for x in order}) == f
    return order


def irreducibles_poset(comp: Composition):
    """Weak order on the irreducibles, plus its connected components.

    The order is computed from the coordinate rule (same opener region and
    ``a' <= a < b <= b'``) and cross-checked against inversion containment.
    Returns ``(poset, components)`` with components listed by opener region.
    """
    elems = all_wab(comp)

    def coord_leq(x: JoinIrreducibleWab, y: JoinIrreducibleWab) -> bool:
        return x.region == y.region and y.a <= x.a < x.b <= y.b

    inv = {x.perm: inversions(x.perm) for x in elems}
    for x in elems:
        for y in elems:
            assert coord_leq(x, y) == (inv[x.perm] <= inv[y.perm]), \
                "coordinate rule disagrees with inversion containment"
    poset = FinitePoset.from_leq(elems, coord_leq)
    components = []
    for i in range(1, comp.r):
        members = [k for k, x in enumerate(elems) if x.region == i]
        if members:
            components.append(tuple(members))
    return poset, components


def galois_graph_combinatorial(comp: Composition) -> GaloisGraph:
    """The Galois graph straight from the coordinates of the irreducibles.

    Vertex ``s`` is the ``s``-th irreducible in the canonical order.  There
    is an edge ``w_{a,b} -> w_{a',b'}`` when the openers share a region and
    ``a <= a' < b' <= b``, or the openers differ, ``a' < a < b' <= b`` and
    ``a`` and ``b'`` lie in different regions as well.
    """
    order = canonical_ji_order(comp)
    n = len(order)
    edges = set()
    for si, x in enumerate(order):
        for ti, y in enumerate(order):
            if si == ti:
                continue
            a, b, ap, bp = x.a, x.b, y.a, y.b
            if x.region == y.region:
                if a <= ap < bp <= b:
                    edges.add((si + 1, ti + 1))
            else:
                if ap < a < bp <= b and region_of(comp, a) != region_of(comp, bp):
                    edges.add((si + 1, ti + 1))
    g = GaloisGraph(size=n, edges=frozenset(edges), vertex_elements=tuple(order))
    assert g.is_acyclic()
    return g


def canonical_join_rep_coordinates(w: tuple, comp: Composition) -> frozenset:
    """Canonical join representation of an avoider via its descents."""
    return frozenset(wab(comp, a, b) for (a, b) in descents(w))


# ----------------------------------------------------------------------


class TamariLattice:
    """The avoiding permutations under weak order, with lazy lattice data."""

    def __init__(self, comp: Composition):
        self.comp = comp
        self.elements = avoiders(comp)
        self.poset = weak_order_poset(self.elements)
        self.elements = list(self.poset.labels)
        self._index = {w: i for i, w in enumerate(self.elements)}
        top = self.poset.top()
        assert top is not None and self.poset.bottom() is not None
        assert self.elements[top] == longest_quotient_element(comp)
        assert self.poset.is_lattice()

    def index(self, w: tuple) -> int:
        return self._index[w]

    @cached_property
    def tables(self) -> LatticeTables:
        return LatticeTables(self.poset)

    @cached_property
    def labeling(self) -> EdgeLabeling:
        return lattices.cu_labeling(self.tables)

    @cached_property
    def ji_order(self) -> list:
        return canonical_ji_order(self.comp)

    @cached_property
    def canonical_chain(self) -> tuple:
        """The distinguished maximal chain: fold joins over the canonical
        order of the irreducibles, checking each step is a cover with the
        expected label."""
        chain = [self.poset.bottom()]
        for x in self.ji_order:
            j = self.index(x.perm)
            nxt = self.tables.jt[chain[-1]][j]
            assert chain[-1] in self.poset.lower_covers(nxt)
            assert self.labeling.of(chain[-1], nxt) == j
            chain.append(nxt)
        assert len(chain) - 1 == ji_count(self.comp)
        assert chain[-1] == self.poset.top()
        return tuple(chain)

    @cached_property
    def extremal_ordering(self) -> lattices.ExtremalOrdering:
        return lattices.extremal_ordering(
            self.tables, chain=self.canonical_chain, labeling=self.labeling
        )

    def wab_index(self, x: JoinIrreducibleWab) -> int:
        return self.index(x.perm)


def tamari_lattice(comp: Composition) -> TamariLattice:
    return TamariLattice(comp)


def tamari_lattice_via_projection(comp: Composition) -> FinitePoset:
    """Cross-check construction through the projection onto avoiders.

    The quotient classes are the projection fibres; classes are ordered by
    the existence of weakly comparable representatives.  The result must
    coincide with the direct restriction of weak order to the avoiders.
    """
    avoiding = avoiders(comp)
    fibres = {w: [] for w in avoiding}
    for u in quotient_elements(comp):
        fibres[pi_down(u, comp, avoiding)].append(u)
    inv = {u: inversions(u) for us in fibres.values() for u in us}

    def class_leq(w1, w2):
        return any(inv[x] <= inv[y] for x in fibres[w1] for y in fibres[w2])

    poset = weak_order_poset(avoiding)
    projected = FinitePoset.from_leq(poset.labels, class_leq)
    assert projected.order_equals(poset)
    return projected


def x_set_wab(w: tuple, comp: Composition) -> frozenset:
    """Related pairs of the paired partition, as irreducibles."""
    from .noncrossing import x_set

    return frozenset(wab(comp, a, b) for (a, b) in x_set(w, comp))
