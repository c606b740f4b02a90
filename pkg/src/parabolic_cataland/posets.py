"""Finite posets on dense integer indices, backed by bitset reachability.

Elements are indices ``0..n-1`` carrying opaque labels.  The reflexive and
transitive closure of the cover relation is stored as one integer bitmask
per element, with bit positions following a fixed topological order.  That
makes order queries, meets, joins and Moebius values a handful of integer
operations each, which is all this package needs at desk scale (posets of
at most a few thousand elements).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence


class PosetError(Exception):
    """Base class for poset construction and query failures."""


class CycleDetected(PosetError):
    """The given cover relation contains a directed cycle."""


class NotReduced(PosetError):
    """A cover is implied transitively by the others."""


class NotAntisymmetric(PosetError):
    """The given relation identifies two distinct elements."""


class NotTransitive(PosetError):
    """The given relation is not transitively closed."""


class NotBounded(PosetError):
    """The poset lacks a unique minimum or maximum."""


class NotRanked(PosetError):
    """The poset admits no rank function."""


class NotComparable(PosetError):
    """Interval endpoints are not comparable."""


class NotALattice(PosetError):
    """The operation requires a lattice."""


@dataclass(frozen=True)
class IrreducibleSets:
    """Join- and meet-irreducible elements of a lattice.

    ``j_star[j]`` is the unique lower cover of the join-irreducible ``j``,
    and ``m_star[m]`` the unique upper cover of the meet-irreducible ``m``.
    """

    join: tuple
    meet: tuple
    j_star: dict
    m_star: dict


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Immutable finite poset given by its Hasse diagram."""

    __slots__ = (
        "labels", "n", "covers", "_index_of", "_topo", "_tpos",
        "_dn", "_up", "_lower", "_upper", "_mobius_rows", "_semilattice",
    )

    def __init__(self, labels: Sequence, covers, auto_reduce: bool = False):
        labels = tuple(labels)
        n = len(labels)
        covers = {(int(a), int(b)) for (a, b) in covers}
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"cover index out of range: {(a, b)}")
            if a == b:
                raise CycleDetected(f"self-loop at {a}")

        upper = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in covers:
            upper[a].append(b)
            indeg[b] += 1

        # Kahn topological sort; leftovers mean a directed cycle.
        topo = [i for i in range(n) if indeg[i] == 0]
        head = 0
        while head < len(topo):
            v = topo[head]
            head += 1
            for w in upper[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    topo.append(w)
        if len(topo) != n:
            raise CycleDetected("cover relation contains a directed cycle")

        tpos = [0] * n
        for pos, v in enumerate(topo):
            tpos[v] = pos

        lower = [[] for _ in range(n)]
        for a, b in covers:
            lower[b].append(a)

        dn = [0] * n
        for v in topo:
            m = 1 << tpos[v]
            for u in lower[v]:
                m |= dn[u]
            dn[v] = m
        up = [0] * n
        for v in reversed(topo):
            m = 1 << tpos[v]
            for w in upper[v]:
                m |= up[w]
            up[v] = m

        # Recompute the transitive reduction from the closure; extra input
        # edges are either rejected or silently dropped.
        reduced = set()
        for a in range(n):
            strict = up[a] ^ (1 << tpos[a])
            reach = 0
            for pos in sorted(_iter_bits(strict)):
                if (1 << pos) & reach:
                    continue
                b = topo[pos]
                reduced.add((a, b))
                reach |= up[b]
        if reduced != covers:
            if not auto_reduce:
                extra = sorted(covers - reduced)
                raise NotReduced(f"transitively implied covers: {extra}")
            upper = [[] for _ in range(n)]
            lower = [[] for _ in range(n)]
            for a, b in reduced:
                upper[a].append(b)
                lower[b].append(a)

        self.labels = labels
        self.n = n
        self.covers = tuple(sorted(reduced))
        self._index_of = None
        self._topo = topo
        self._tpos = tpos
        self._dn = dn
        self._up = up
        self._lower = [tuple(sorted(c)) for c in lower]
        self._upper = [tuple(sorted(c)) for c in upper]
        self._mobius_rows = {}
        self._semilattice = None

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_covers(cls, labels, covers, auto_reduce: bool = False) -> "FinitePoset":
        """Build a poset from labels and a set of cover pairs."""
        return cls(labels, covers, auto_reduce=auto_reduce)

    @classmethod
    def from_leq(cls, labels, leq: Callable) -> "FinitePoset":
        """Build a poset from a comparison predicate on the labels.

        The predicate must be a partial order; violations raise
        :class:`NotAntisymmetric` or :class:`NotTransitive`.
        """
        labels = tuple(labels)
        n = len(labels)
        strict = [0] * n  # plain-index bitmask of elements strictly above i
        for i in range(n):
            li = labels[i]
            for j in range(n):
                if i != j and leq(li, labels[j]):
                    strict[i] |= 1 << j
        for i in range(n):
            row = strict[i]
            for j in _iter_bits(row):
                if strict[j] & (1 << i):
                    raise NotAntisymmetric(f"{labels[i]!r} and {labels[j]!r}")
                if strict[j] & ~row:
                    raise NotTransitive(f"via {labels[i]!r} < {labels[j]!r}")

        # Scanning each strict up-set along a linear extension keeps only
        # its minimal elements, which are exactly the upper covers.
        order = sorted(range(n), key=lambda v: (-strict[v].bit_count(), v))
        rank_in_order = [0] * n
        for pos, v in enumerate(order):
            rank_in_order[v] = pos
        covers = set()
        for a in range(n):
            reach = 0
            for b in sorted(_iter_bits(strict[a]), key=rank_in_order.__getitem__):
                if reach & (1 << b):
                    continue
                covers.add((a, b))
                reach |= strict[b] | (1 << b)
        return cls(labels, covers)

    # ------------------------------------------------------------------
    # basic queries

    def index(self, label) -> int:
        if self._index_of is None:
            self._index_of = {lab: i for i, lab in enumerate(self.labels)}
        return self._index_of[label]

    def leq(self, a: int, b: int) -> bool:
        return bool((self._dn[b] >> self._tpos[a]) & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def down_mask(self, a: int) -> int:
        """Bitmask (over topological positions) of ``{b : b <= a}``."""
        return self._dn[a]

    def up_mask(self, a: int) -> int:
        return self._up[a]

    def mask_elements(self, mask: int) -> list:
        """Element indices for a topological bitmask, ascending."""
        return sorted(self._topo[p] for p in _iter_bits(mask))

    def unique_greatest(self, mask: int):
        """Greatest element of a topological bitmask, or ``None``."""
        if not mask:
            return None
        c = self._topo[mask.bit_length() - 1]
        return c if not (mask & ~self._dn[c]) else None

    def unique_least(self, mask: int):
        if not mask:
            return None
        c = self._topo[(mask & -mask).bit_length() - 1]
        return c if not (mask & ~self._up[c]) else None

    def topo_order(self) -> tuple:
        """Element indices in one fixed linear extension, bottom up."""
        return tuple(self._topo)

    def lower_covers(self, a: int) -> tuple:
        return self._lower[a]

    def upper_covers(self, a: int) -> tuple:
        return self._upper[a]

    def minimals(self) -> list:
        return [i for i in range(self.n) if not self._lower[i]]

    def maximals(self) -> list:
        return [i for i in range(self.n) if not self._upper[i]]

    def bottom(self):
        mins = self.minimals()
        return mins[0] if len(mins) == 1 else None

    def top(self):
        maxs = self.maximals()
        return maxs[0] if len(maxs) == 1 else None

    def is_bounded(self) -> bool:
        return self.bottom() is not None and self.top() is not None

    def order_equals(self, other: "FinitePoset") -> bool:
        """Same element count and same cover pairs (indices must align)."""
        return self.n == other.n and set(self.covers) == set(other.covers)

    # ------------------------------------------------------------------
    # meets, joins, semilattice detection

    def meet(self, a: int, b: int):
        """Greatest lower bound of ``a`` and ``b``, or ``None``."""
        return self.unique_greatest(self._dn[a] & self._dn[b])

    def join(self, a: int, b: int):
        """Least upper bound of ``a`` and ``b``, or ``None``."""
        return self.unique_least(self._up[a] & self._up[b])

    def semilattice_kind(self) -> dict:
        """Which of the semilattice properties hold, as a dict."""
        if self._semilattice is None:
            meet_ok = join_ok = True
            dn, up, topo = self._dn, self._up, self._topo
            for a in range(self.n):
                da, ua = dn[a], up[a]
                for b in range(a + 1, self.n):
                    if meet_ok:
                        m = da & dn[b]
                        if not m:
                            meet_ok = False
                        else:
                            c = topo[m.bit_length() - 1]
                            if m & ~dn[c]:
                                meet_ok = False
                    if join_ok:
                        m = ua & up[b]
                        if not m:
                            join_ok = False
                        else:
                            c = topo[(m & -m).bit_length() - 1]
                            if m & ~up[c]:
                                join_ok = False
                    if not meet_ok and not join_ok:
                        break
                if not meet_ok and not join_ok:
                    break
            self._semilattice = {
                "meet": meet_ok,
                "join": join_ok,
                "lattice": meet_ok and join_ok,
            }
        return dict(self._semilattice)

    def is_lattice(self) -> bool:
        return self.semilattice_kind()["lattice"]

    def irreducibles(self) -> IrreducibleSets:
        """Join/meet-irreducible elements (lattice only)."""
        if not self.is_lattice():
            raise NotALattice("irreducibles are defined for lattices")
        join = tuple(i for i in range(self.n) if len(self._lower[i]) == 1)
        meet = tuple(i for i in range(self.n) if len(self._upper[i]) == 1)
        return IrreducibleSets(
            join=join,
            meet=meet,
            j_star={j: self._lower[j][0] for j in join},
            m_star={m: self._upper[m][0] for m in meet},
        )

    # ------------------------------------------------------------------
    # Moebius function

    def _mobius_row(self, a: int) -> dict:
        row = self._mobius_rows.get(a)
        if row is None:
            row = {a: 1}
            ua = self._up[a]
            abit = 1 << self._tpos[a]
            for pos in sorted(_iter_bits(ua ^ abit)):
                z = self._topo[pos]
                s = 0
                for q in _iter_bits(self._dn[z] & ua & ~(1 << pos)):
                    s += row[self._topo[q]]
                row[z] = -s
            self._mobius_rows[a] = row
        return row

    def mobius(self, a: int, b: int) -> int:
        """Moebius function value ``mu(a, b)``; zero unless ``a <= b``."""
        if not self.leq(a, b):
            return 0
        return self._mobius_row(a)[b]

    def mobius_number(self) -> int:
        """``mu(bottom, top)``; raises :class:`NotBounded` otherwise."""
        lo, hi = self.bottom(), self.top()
        if lo is None or hi is None:
            raise NotBounded("Moebius number needs a bounded poset")
        return self.mobius(lo, hi)

    # ------------------------------------------------------------------
    # ranks, chains, antichains

    def rank_function(self):
        """The rank function as a dict, or ``None`` if the poset is unranked."""
        rk = [0] * self.n
        for v in self._topo:
            lows = self._lower[v]
            if lows:
                rk[v] = rk[lows[0]] + 1
        for a, b in self.covers:
            if rk[b] != rk[a] + 1:
                return None
        return {i: rk[i] for i in range(self.n)}

    def rank_sizes(self) -> list:
        rk = self.rank_function()
        if rk is None:
            raise NotRanked("rank sizes need a ranked poset")
        sizes = [0] * (max(rk.values()) + 1 if rk else 0)
        for r in rk.values():
            sizes[r] += 1
        return sizes

    def longest_chain_length(self) -> int:
        """Length (cover steps) of a longest maximal chain."""
        lp = [0] * self.n
        best = 0
        for v in self._topo:
            if self._lower[v]:
                lp[v] = 1 + max(lp[u] for u in self._lower[v])
                if lp[v] > best:
                    best = lp[v]
        return best

    def height_above(self) -> list:
        """Longest path length from each element up to a maximal element."""
        h = [0] * self.n
        for v in reversed(self._topo):
            if self._upper[v]:
                h[v] = 1 + max(h[w] for w in self._upper[v])
        return h

    def maximal_chains(self) -> Iterator[tuple]:
        """All maximal chains, as tuples of element indices bottom-up."""
        stack = [(m, [m]) for m in reversed(self.minimals())]
        while stack:
            v, chain = stack.pop()
            if not self._upper[v]:
                yield tuple(chain)
            else:
                for w in reversed(self._upper[v]):
                    stack.append((w, chain + [w]))

    def max_antichain_size(self) -> int:
        if self.n <= 60:
            return self.max_antichain_exact()
        return self.max_antichain_dilworth()

    def max_antichain_exact(self) -> int:
        """Maximum antichain by exact search over independent sets."""
        if self.n > 60:
            raise PosetError("exact antichain search is capped at 60 elements")
        n = self.n
        comp = [0] * n
        for a in range(n):
            for b in range(n):
                if a != b and (self.leq(a, b) or self.leq(b, a)):
                    comp[a] |= 1 << b
        memo = {}

        def mis(mask: int) -> int:
            if not mask:
                return 0
            r = memo.get(mask)
            if r is None:
                v = (mask & -mask).bit_length() - 1
                skip = mis(mask & (mask - 1))
                take = 1 + mis(mask & ~(comp[v] | (1 << v)))
                r = max(skip, take)
                memo[mask] = r
            return r

        return mis((1 << n) - 1)

    def max_antichain_dilworth(self) -> int:
        """Maximum antichain via Dilworth and bipartite matching."""
        n = self.n
        adj = [[b for b in range(n) if self.lt(a, b)] for a in range(n)]
        match = [-1] * n
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

        def augment(u: int, seen: list) -> bool:
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    if match[v] < 0 or augment(match[v], seen):
                        match[v] = u
                        return True
            return False

        matched = sum(augment(u, [False] * n) for u in range(n))
        return n - matched

    # ------------------------------------------------------------------
    # derived posets

    def subposet(self, elements) -> "FinitePoset":
        """Induced subposet; new indices follow the sorted element order."""
        elems = sorted(set(elements))
        pos = {e: k for k, e in enumerate(elems)}
        chosen = 0
        for e in elems:
            chosen |= 1 << self._tpos[e]
        covers = set()
        for x in elems:
            for y in elems:
                if x != y and self.leq(x, y):
                    between = self._up[x] & self._dn[y] & chosen
                    between &= ~(1 << self._tpos[x])
                    between &= ~(1 << self._tpos[y])
                    if not between:
                        covers.add((pos[x], pos[y]))
        return FinitePoset([self.labels[e] for e in elems], covers)

    def interval(self, a: int, b: int) -> "FinitePoset":
        """The induced poset on ``[a, b]``; endpoints must be comparable."""
        if not self.leq(a, b):
            raise NotComparable(f"{a} is not below {b}")
        return self.subposet(self.mask_elements(self._up[a] & self._dn[b]))

    def interval_size(self, a: int, b: int) -> int:
        return (self._up[a] & self._dn[b]).bit_count()

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.labels, [(b, a) for (a, b) in self.covers])

    # ------------------------------------------------------------------
    # export

    def to_json_dict(self, label_fn: Callable = None) -> dict:
        fn = label_fn if label_fn is not None else _default_label
        return {
            "labels": [fn(lab) for lab in self.labels],
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self, label_fn: Callable = str) -> str:
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
        for i, lab in enumerate(self.labels):
            text = label_fn(lab).replace('"', r"\"")
            lines.append(f'  n{i} [label="{text}"];')
        for a, b in self.covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _default_label(lab):
    if isinstance(lab, (int, str, float, bool)) or lab is None:
        return lab
    if isinstance(lab, (tuple, list)):
        return [_default_label(x) for x in lab]
    return str(lab)


# ----------------------------------------------------------------------
# classic small posets, used as fixtures and corpus members

def chain_poset(k: int) -> FinitePoset:
    """A chain with ``k`` elements."""
    return FinitePoset(list(range(k)), [(i, i + 1) for i in range(k - 1)])


def antichain_poset(k: int) -> FinitePoset:
    return FinitePoset(list(range(k)), [])


def boolean_lattice(k: int) -> FinitePoset:
    """Subsets of ``{0..k-1}`` ordered by inclusion."""
    labels = [frozenset(j for j in range(k) if (s >> j) & 1) for s in range(1 << k)]
    return FinitePoset.from_leq(labels, lambda a, b: a <= b)


def diamond_m3() -> FinitePoset:
    """The modular lattice M3: three incomparable atoms."""
    return FinitePoset(
        ["0", "a", "b", "c", "1"],
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )


def pentagon_n5() -> FinitePoset:
    """The pentagon N5: 0 < a < c < 1 on one flank, 0 < b < 1 on the other."""
    return FinitePoset(
        ["0", "a", "c", "b", "1"],
        [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )


def grid_poset(p: int, q: int) -> FinitePoset:
    """Direct product of a ``p``-chain and a ``q``-chain."""
    labels = [(i, j) for i in range(p) for j in range(q)]
    return FinitePoset.from_leq(
        labels, lambda a, b: a[0] <= b[0] and a[1] <= b[1]
    )


# ----------------------------------------------------------------------
# isomorphism testing (small posets only)

def are_isomorphic(p: FinitePoset, q: FinitePoset) -> bool:
    """Backtracking poset isomorphism with colour refinement."""
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False

    def refine(poset):
        col = [(len(poset.lower_covers(i)), len(poset.upper_covers(i)),
                poset.down_mask(i).bit_count(), poset.up_mask(i).bit_count())
               for i in range(poset.n)]
        for _ in range(poset.n):
            nxt = []
            for i in range(poset.n):
                dn = tuple(sorted(col[j] for j in poset.lower_covers(i)))
                up = tuple(sorted(col[j] for j in poset.upper_covers(i)))
                nxt.append((col[i], dn, up))
            canon = {c: k for k, c in enumerate(sorted(set(nxt)))}
            nxt = [canon[c] for c in nxt]
            if nxt == col:
                break
            col = nxt
        return col

    cp, cq = refine(p), refine(q)
    if sorted(cp) != sorted(cq):
        return False
    by_colour = {}
    for j, c in enumerate(cq):
        by_colour.setdefault(c, []).append(j)

    order = sorted(range(p.n), key=lambda i: (len(by_colour.get(cp[i], ())), i))
    image = [-1] * p.n
    used = [False] * q.n

    def consistent(i, j):
        for a in p.lower_covers(i):
            if image[a] >= 0 and (image[a], j) not in q_cover_set:
                return False
        for b in p.upper_covers(i):
            if image[b] >= 0 and (j, image[b]) not in q_cover_set:
                return False
        deg = (len(p.lower_covers(i)), len(p.upper_covers(i)))
        if deg != (len(q.lower_covers(j)), len(q.upper_covers(j))):
            return False
        return True

    q_cover_set = set(q.covers)

    def assign(k: int) -> bool:
        if k == p.n:
            mapped = {(image[a], image[b]) for a, b in p.covers}
            return mapped == q_cover_set
        i = order[k]
        for j in by_colour.get(cp[i], ()):
            if not used[j] and consistent(i, j):
                image[i] = j
                used[j] = True
                if assign(k + 1):
                    return True
                image[i] = -1
                used[j] = False
        return False

    return assign(0)
