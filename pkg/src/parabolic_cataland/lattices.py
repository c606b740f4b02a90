"""Structural lattice theory on top of :class:`FinitePoset`.

Covers congruences and congruence-uniformity, the join-irreducible edge
labelling, semidistributivity, canonical join representations, the kappa
map, extremality / left-modularity / trimness, extremal orderings, Galois
graphs, core label orders and the intersection property.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .posets import FinitePoset, NotALattice, PosetError


class LabelNotUnique(PosetError):
    """More than one join-irreducible is perspective to a cover."""


class LabelMissing(PosetError):
    """No join-irreducible is perspective to a cover."""


class OrderingImpossible(PosetError):
    """No extremal ordering exists along the given chain."""


class PsiCollision(PosetError):
    """Two distinct elements share a core label set."""


# ----------------------------------------------------------------------


class LatticeTables:
    """A lattice together with dense meet/join tables and irreducibles.

    Building the tables verifies lattice-ness once; everything downstream
    indexes into plain lists (scalar loops) or numpy arrays (vectorised
    sweeps over triples).
    """

    def __init__(self, poset: FinitePoset):
        if not poset.is_lattice():
            raise NotALattice("meet/join tables need a lattice")
        self.poset = poset
        n = poset.n
        self.n = n
        self.bottom = poset.bottom()
        self.top = poset.top()
        jt = [[0] * n for _ in range(n)]
        mt = [[0] * n for _ in range(n)]
        for a in range(n):
            jt[a][a] = mt[a][a] = a
            for b in range(a + 1, n):
                j = poset.join(a, b)
                m = poset.meet(a, b)
                jt[a][b] = jt[b][a] = j
                mt[a][b] = mt[b][a] = m
        self.jt = jt
        self.mt = mt
        irr = poset.irreducibles()
        self.ji = irr.join
        self.mi = irr.meet
        self.j_star = irr.j_star
        self.m_star = irr.m_star
        self._jt_np = None
        self._mt_np = None
        self._leq_np = None

    @property
    def jt_np(self) -> np.ndarray:
        if self._jt_np is None:
            self._jt_np = np.array(self.jt, dtype=np.int32)
        return self._jt_np

    @property
    def mt_np(self) -> np.ndarray:
        if self._mt_np is None:
            self._mt_np = np.array(self.mt, dtype=np.int32)
        return self._mt_np

    @property
    def leq_np(self) -> np.ndarray:
        if self._leq_np is None:
            arr = np.zeros((self.n, self.n), dtype=bool)
            for b in range(self.n):
                for a in self.poset.mask_elements(self.poset.down_mask(b)):
                    arr[a, b] = True
            self._leq_np = arr
        return self._leq_np

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)


# ----------------------------------------------------------------------
# congruences


@dataclass(frozen=True)
class Congruence:
    """A lattice congruence as a partition of element indices."""

    blocks: tuple
    key: tuple = field(compare=False, default=())

    @classmethod
    def from_parent(cls, parent: list) -> "Congruence":
        find = _find_factory(parent)
        groups: dict = {}
        for i in range(len(parent)):
            groups.setdefault(find(i), []).append(i)
        blocks = tuple(sorted(tuple(g) for g in groups.values()))
        seen: dict = {}
        key = []
        for i in range(len(parent)):
            r = find(i)
            key.append(seen.setdefault(r, len(seen)))
        return cls(blocks=blocks, key=tuple(key))

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)


def _find_factory(parent: list):
    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    return find


def congruence_generated(tables: LatticeTables, pairs) -> Congruence:
    """Smallest lattice congruence identifying all the given pairs.

    Fixpoint closure: whenever ``x == y`` is forced, so are ``x v z == y v z``
    and ``x ^ z == y ^ z`` for every ``z``.
    """
    n = tables.n
    jt, mt = tables.jt, tables.mt
    parent = list(range(n))
    find = _find_factory(parent)
    work = deque(pairs)
    while work:
        x, y = work.popleft()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        jx, mx = jt[x], mt[x]
        jy, my = jt[y], mt[y]
        for z in range(n):
            a, b = jx[z], jy[z]
            if find(a) != find(b):
                work.append((a, b))
            a, b = mx[z], my[z]
            if find(a) != find(b):
                work.append((a, b))
    return Congruence.from_parent(parent)


def cover_congruence(tables: LatticeTables, a: int, b: int) -> Congruence:
    return congruence_generated(tables, [(a, b)])


def is_congruence_uniform(tables: LatticeTables):
    """Whether the lattice is congruence uniform.

    Only the principal cover congruences of the irreducibles are compared
    for pairwise distinctness, on both sides; this is quadratic instead of
    walking the whole congruence lattice.  Returns ``(flag, witness)`` where
    the witness names a colliding pair of irreducibles on failure.
    """
    seen: dict = {}
    for j in tables.ji:
        cg = congruence_generated(tables, [(tables.j_star[j], j)])
        if cg.key in seen:
            return False, ("join", seen[cg.key], j)
        seen[cg.key] = j
    seen = {}
    for m in tables.mi:
        cg = congruence_generated(tables, [(m, tables.m_star[m])])
        if cg.key in seen:
            return False, ("meet", seen[cg.key], m)
        seen[cg.key] = m
    return True, None


# ----------------------------------------------------------------------
# the edge labelling of a congruence-uniform lattice


@dataclass(frozen=True)
class EdgeLabeling:
    """Cover ``(a, b)`` -> join-irreducible ``j`` with ``a v j = b`` and
    ``a ^ j = j_*`` (the cover is perspective to ``(j_*, j)``)."""

    labels: dict

    def of(self, a: int, b: int) -> int:
        return self.labels[(a, b)]

    def chain_labels(self, chain) -> tuple:
        return tuple(self.labels[(chain[i], chain[i + 1])]
                     for i in range(len(chain) - 1))


def cu_labeling(tables: LatticeTables) -> EdgeLabeling:
    """Label every cover by its unique perspective join-irreducible."""
    jt, mt = tables.jt, tables.mt
    labels = {}
    for a, b in tables.poset.covers:
        found = None
        for j in tables.ji:
            if jt[a][j] == b and mt[a][j] == tables.j_star[j]:
                if found is not None:
                    raise LabelNotUnique(f"cover {(a, b)}: {found} and {j}")
                found = j
        if found is None:
            raise LabelMissing(f"cover {(a, b)} has no perspective irreducible")
        labels[(a, b)] = found
    return EdgeLabeling(labels=labels)


def canonical_join_representation(tables: LatticeTables,
                                  labeling: EdgeLabeling, a: int) -> frozenset:
    """Canonical join representation of ``a``: labels of its lower covers."""
    rep = frozenset(labeling.of(b, a) for b in tables.poset.lower_covers(a))
    acc = tables.bottom
    for j in rep:
        acc = tables.jt[acc][j]
    assert acc == a, "canonical join representation does not join back"
    for x in rep:
        for y in rep:
            if x != y:
                assert not tables.leq(x, y), "representation is not an antichain"
    return rep


# ----------------------------------------------------------------------
# semidistributivity and kappa


def is_semidistributive(tables: LatticeTables) -> dict:
    """Brute-force both semidistributive implications over all triples."""
    n = tables.n
    jt, mt = tables.jt_np, tables.mt_np
    join_sd = True
    for a in range(n):
        ja = jt[a]
        same = ja[:, None] == ja[None, :]
        folded = ja[mt] == ja[:, None]
        if not (folded | ~same).all():
            join_sd = False
            break
    meet_sd = True
    for a in range(n):
        ma = mt[a]
        same = ma[:, None] == ma[None, :]
        folded = ma[jt] == ma[:, None]
        if not (folded | ~same).all():
            meet_sd = False
            break
    return {"join_sd": join_sd, "meet_sd": meet_sd}


def kappa(tables: LatticeTables, j: int) -> Optional[int]:
    """Greatest element above ``j_*`` but not above ``j``, if it exists."""
    p = tables.poset
    mask = p.up_mask(tables.j_star[j]) & ~p.up_mask(j)
    return p.unique_greatest(mask)


def kappa_is_bijection(tables: LatticeTables) -> bool:
    values = [kappa(tables, j) for j in tables.ji]
    if any(v is None for v in values):
        return False
    return len(set(values)) == len(tables.ji) and set(values) <= set(tables.mi)


# ----------------------------------------------------------------------
# extremality, left-modularity, trimness


def left_modular_elements(tables: LatticeTables) -> frozenset:
    """Elements ``a`` with ``(b v a) ^ c == b v (a ^ c)`` for all ``b < c``."""
    n = tables.n
    jt, mt = tables.jt_np, tables.mt_np
    strict = tables.leq_np & ~np.eye(n, dtype=bool)
    out = []
    for a in range(n):
        lhs = mt[jt[:, a]]           # (b, c) -> (b v a) ^ c
        rhs = jt[:, mt[:, a]]        # (b, c) -> b v (a ^ c)
        if ((lhs == rhs) | ~strict).all():
            out.append(a)
    return frozenset(out)


def is_left_modular(tables: LatticeTables,
                    lm: Optional[frozenset] = None) -> bool:
    """Some maximum-length maximal chain lies in the left-modular set."""
    if lm is None:
        lm = left_modular_elements(tables)
    p = tables.poset
    target = p.longest_chain_length()
    best = {tables.bottom: 0} if tables.bottom in lm else {}
    for v in p.topo_order():
        if v not in lm or v == tables.bottom:
            continue
        vals = [best[u] for u in p.lower_covers(v) if u in best]
        if vals:
            best[v] = 1 + max(vals)
    return best.get(tables.top, -1) == target


def is_extremal(tables: LatticeTables) -> bool:
    length = tables.poset.longest_chain_length()
    return len(tables.ji) == length == len(tables.mi)


def is_trim(tables: LatticeTables) -> bool:
    return is_extremal(tables) and is_left_modular(tables)


# ----------------------------------------------------------------------
# extremal orderings and Galois graphs


@dataclass(frozen=True)
class ExtremalOrdering:
    """Orders ``j_1..j_n`` and ``m_1..m_n`` along a witness chain so that
    ``j_1 v ... v j_s = a_s = m_{s+1} ^ ... ^ m_n`` at every step."""

    chain: tuple
    ji_order: tuple
    mi_order: tuple


def lex_least_maximum_chain(poset: FinitePoset) -> tuple:
    """Lexicographically least maximal chain of maximum length."""
    height = poset.height_above()
    length = poset.longest_chain_length()
    bot = poset.bottom()
    if bot is None:
        candidates = [m for m in poset.minimals() if height[m] == length]
        bot = min(candidates)
    chain = [bot]
    while poset.upper_covers(chain[-1]):
        step = len(chain)
        nxt = [u for u in poset.upper_covers(chain[-1])
               if height[u] == length - step]
        if not nxt:
            break
        chain.append(min(nxt))
    return tuple(chain)


def extremal_ordering(tables: LatticeTables, chain=None,
                      labeling: Optional[EdgeLabeling] = None) -> ExtremalOrdering:
    """Order all irreducibles along a maximum-length maximal chain.

    For congruence-uniform lattices (pass the labelling) the join order is
    additionally checked against the labels along the chain, and the meet
    order against kappa.
    """
    p = tables.poset
    length = p.longest_chain_length()
    if not is_extremal(tables):
        raise OrderingImpossible("lattice is not extremal")
    if chain is None:
        chain = lex_least_maximum_chain(p)
    chain = tuple(chain)
    if len(chain) != length + 1:
        raise OrderingImpossible("chain does not have maximum length")

    ji_order = [None] * length
    for j in tables.ji:
        s = next(s for s in range(1, length + 1) if p.leq(j, chain[s]))
        if ji_order[s - 1] is not None:
            raise OrderingImpossible(f"join-irreducibles {ji_order[s-1]} and "
                                     f"{j} enter the chain at step {s}")
        ji_order[s - 1] = j
    mi_order = [None] * length
    for m in tables.mi:
        s = max(s for s in range(length) if p.leq(chain[s], m))
        if mi_order[s] is not None:
            raise OrderingImpossible(f"meet-irreducibles {mi_order[s]} and "
                                     f"{m} leave the chain at step {s}")
        mi_order[s] = m

    acc = tables.bottom
    for s in range(length):
        acc = tables.jt[acc][ji_order[s]]
        assert acc == chain[s + 1], "prefix joins do not follow the chain"
    acc = tables.top
    for s in range(length, 0, -1):
        acc = tables.mt[acc][mi_order[s - 1]]
        assert acc == chain[s - 1], "suffix meets do not follow the chain"

    if labeling is not None:
        for s in range(length):
            assert labeling.of(chain[s], chain[s + 1]) == ji_order[s], \
                "labels along the chain disagree with the extremal order"
            assert kappa(tables, ji_order[s]) == mi_order[s], \
                "meet order disagrees with kappa"

    return ExtremalOrdering(chain=chain, ji_order=tuple(ji_order),
                            mi_order=tuple(mi_order))


@dataclass(frozen=True)
class GaloisGraph:
    """Directed graph on ``1..size`` (the ordered irreducibles)."""

    size: int
    edges: frozenset
    vertex_elements: tuple = ()

    def is_acyclic(self) -> bool:
        adj = {s: [] for s in range(1, self.size + 1)}
        indeg = {s: 0 for s in adj}
        for s, t in self.edges:
            adj[s].append(t)
            indeg[t] += 1
        queue = [v for v in adj if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in adj[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.size


def galois_graph(tables: LatticeTables, ordering: ExtremalOrdering,
                 labeling: Optional[EdgeLabeling] = None) -> GaloisGraph:
    """Edges ``s -> t`` whenever ``s != t`` and ``j_s`` is not below ``m_t``.

    With a labelling present (congruence-uniform case) the edge set is
    recomputed from joins with the lower covers of the irreducibles and both
    rules must agree; comparabilities among the irreducibles must also show
    up as edges.
    """
    p = tables.poset
    js, ms = ordering.ji_order, ordering.mi_order
    n = len(js)
    edges = frozenset(
        (s, t)
        for s in range(1, n + 1)
        for t in range(1, n + 1)
        if s != t and not p.leq(js[s - 1], ms[t - 1])
    )
    if labeling is not None:
        jt = tables.jt
        alt = frozenset(
            (s, t)
            for s in range(1, n + 1)
            for t in range(1, n + 1)
            if s != t and p.leq(js[t - 1],
                                jt[tables.j_star[js[t - 1]]][js[s - 1]])
        )
        assert alt == edges, "the two Galois edge rules disagree"
        for s in range(1, n + 1):
            for t in range(1, n + 1):
                if s != t and p.leq(js[t - 1], js[s - 1]):
                    assert (s, t) in edges, \
                        "comparable irreducibles are missing an edge"
    g = GaloisGraph(size=n, edges=edges, vertex_elements=tuple(js))
    assert g.is_acyclic(), "Galois graph has a directed cycle"
    return g


# ----------------------------------------------------------------------
# core label order


def core_label_sets(tables: LatticeTables, labeling: EdgeLabeling) -> dict:
    """The label set of the interval below each element.

    ``psi(a)`` collects the labels of all covers inside ``[a_down, a]``
    where ``a_down`` is the meet of the lower covers of ``a``.
    """
    p = tables.poset
    psi = {}
    for a in range(tables.n):
        lows = p.lower_covers(a)
        if not lows:
            psi[a] = frozenset()
            continue
        a_down = lows[0]
        for b in lows[1:]:
            a_down = tables.mt[a_down][b]
        labs = {
            lab
            for (u, v), lab in labeling.labels.items()
            if p.leq(a_down, u) and p.leq(v, a)
        }
        assert len(labs) >= len(lows)
        psi[a] = frozenset(labs)
    return psi


def core_label_order(tables: LatticeTables, labeling: EdgeLabeling,
                     psi: Optional[dict] = None) -> FinitePoset:
    """Reorder the lattice elements by containment of core label sets."""
    if psi is None:
        psi = core_label_sets(tables, labeling)
    seen: dict = {}
    for a, s in psi.items():
        if s in seen:
            raise PsiCollision(f"elements {seen[s]} and {a} share labels {sorted(s)}")
        seen[s] = a
    return FinitePoset.from_leq(
        list(range(tables.n)), lambda a, b: psi[a] <= psi[b]
    )


def has_intersection_property(tables: LatticeTables, labeling: EdgeLabeling,
                              psi: Optional[dict] = None) -> bool:
    """Every pairwise intersection of core label sets is a core label set."""
    if psi is None:
        psi = core_label_sets(tables, labeling)
    all_sets = set(psi.values())
    items = list(psi.values())
    for i, sa in enumerate(items):
        for sb in items[i + 1:]:
            if sa & sb not in all_sets:
                return False
    return True
