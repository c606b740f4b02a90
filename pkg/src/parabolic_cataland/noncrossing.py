"""Noncrossing partitions adapted to a composition, and their bijection
with the pattern-avoiding quotient permutations.

A partition of ``1..n`` is admissible for a composition when no part meets
a region twice.  Bumps are the consecutive pairs inside a part.  In the
arc diagram a bump ``(a, b)`` leaves ``a`` at the bottom, dips below the
rest of ``a``'s region and runs above everything else up to ``b``; the
positions strictly between the end of ``a``'s region and ``b`` are the
ones lying under the arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .posets import FinitePoset
from .symgroup import (
    Composition,
    avoiders,
    descents,
    is_alpha_231_avoiding,
    is_in_quotient,
    region_of,
)


class NotNoncrossing(Exception):
    """The partition violates one of the two noncrossing conditions."""


class NotAvoiding(Exception):
    """The permutation contains the forbidden pattern."""


@dataclass(frozen=True)
class AlphaPartition:
    """A set partition of ``1..n`` with no part meeting a region twice."""

    comp: Composition
    parts: tuple

    @classmethod
    def from_parts(cls, comp: Composition, parts: Iterable) -> "AlphaPartition":
        canon = tuple(sorted((tuple(sorted(p)) for p in parts),
                             key=lambda p: p[0]))
        seen = set()
        for part in canon:
            if not part:
                raise ValueError("empty part")
            regions = [region_of(comp, x) for x in part]
            if len(set(regions)) != len(regions):
                raise ValueError(f"part {part} meets a region twice")
            seen.update(part)
        if seen != set(range(1, comp.n + 1)):
            raise ValueError("parts do not partition 1..n")
        return cls(comp=comp, parts=canon)

    @classmethod
    def from_bumps(cls, comp: Composition, bumps: Iterable) -> "AlphaPartition":
        """Partition generated by chaining the given pairs into parts."""
        parent = {x: x for x in range(1, comp.n + 1)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in bumps:
            parent[find(a)] = find(b)
        groups: dict = {}
        for x in range(1, comp.n + 1):
            groups.setdefault(find(x), []).append(x)
        return cls.from_parts(comp, groups.values())

    @classmethod
    def discrete(cls, comp: Composition) -> "AlphaPartition":
        return cls.from_parts(comp, [[x] for x in range(1, comp.n + 1)])

    @property
    def bumps(self) -> tuple:
        """Consecutive pairs inside each part, sorted."""
        out = []
        for part in self.parts:
            out.extend(zip(part, part[1:]))
        return tuple(sorted(out))

    @property
    def num_bumps(self) -> int:
        return self.comp.n - len(self.parts)

    def part_of(self) -> dict:
        return {x: k for k, part in enumerate(self.parts) for x in part}

    def related(self, a: int, b: int) -> bool:
        po = self.part_of()
        return po[a] == po[b]

    def refines(self, other: "AlphaPartition") -> bool:
        po = other.part_of()
        return all(po[a] == po[b] for a, b in self.bumps)

    def to_json_dict(self) -> dict:
        return {"alpha": list(self.comp.parts),
                "parts": [list(p) for p in self.parts]}

    def __str__(self):
        return "/".join("".join(str(x) for x in p) for p in self.parts)


# ----------------------------------------------------------------------
# the noncrossing conditions


def is_noncrossing(partition: AlphaPartition):
    """Check both crossing patterns; returns ``(flag, witness)``.

    Interleaved bumps ``a1 < a2 < b1 < b2`` need ``a1, a2`` or ``b1, a2``
    in a shared region; nested bumps ``a1 < a2 < b2 < b1`` need ``a1, a2``
    in different regions.
    """
    comp = partition.comp
    bumps = partition.bumps
    for idx, (a1, b1) in enumerate(bumps):
        for (a2, b2) in bumps[idx + 1:]:
            if a2 > a1 or (a2 == a1 and b2 > b1):
                lo, hi = (a1, b1), (a2, b2)
            else:
                lo, hi = (a2, b2), (a1, b1)
            (a1_, b1_), (a2_, b2_) = lo, hi
            if a1_ < a2_ < b1_ < b2_:
                same_open = region_of(comp, a1_) == region_of(comp, a2_)
                same_mid = region_of(comp, b1_) == region_of(comp, a2_)
                if not (same_open or same_mid):
                    return False, (lo, hi)
            elif a1_ < a2_ < b2_ < b1_:
                if region_of(comp, a1_) == region_of(comp, a2_):
                    return False, (lo, hi)
    return True, None


def alpha_compatible(b1, b2, comp: Composition) -> bool:
    """Whether some noncrossing partition has exactly these two bumps.

    Pairs that cannot coexist as the bumps of any admissible partition
    (shared openers or closers, or a merged part meeting a region twice)
    are incompatible.
    """
    b1, b2 = tuple(b1), tuple(b2)
    if b1 == b2:
        return True
    try:
        partition = AlphaPartition.from_bumps(comp, [b1, b2])
    except ValueError:
        return False
    if set(partition.bumps) != {b1, b2}:
        return False
    return is_noncrossing(partition)[0]


# ----------------------------------------------------------------------
# enumeration and the refinement order


def _set_partitions(n: int):
    """All set partitions of ``1..n`` (restricted growth strings)."""

    def rec(k, blocks):
        if k > n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(k)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([k])
        yield from rec(k + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


@lru_cache(maxsize=None)
def _enumerate_nc_cached(parts: tuple) -> tuple:
    comp = Composition(parts)
    out = []
    for blocks in _set_partitions(comp.n):
        try:
            p = AlphaPartition.from_parts(comp, blocks)
        except ValueError:
            continue
        if is_noncrossing(p)[0]:
            out.append(p)
    return tuple(sorted(out, key=lambda p: (p.num_bumps, p.parts)))


def enumerate_nc(comp: Composition) -> list:
    """All noncrossing partitions for the composition, sorted by rank."""
    return list(_enumerate_nc_cached(comp.parts))


def nc_poset(comp: Composition,
             elements: Optional[list] = None) -> FinitePoset:
    """The noncrossing partitions under refinement."""
    if elements is None:
        elements = enumerate_nc(comp)
    return FinitePoset.from_leq(elements, lambda p, q: p.refines(q))


def nc_meet(p1: AlphaPartition, p2: AlphaPartition) -> AlphaPartition:
    """Common refinement of two noncrossing partitions.

    The result is usually the meet under refinement, but not always: for
    some compositions with an inner region of size at least two the common
    refinement of two noncrossing partitions crosses (and the pair then
    has no meet at all, only incomparable maximal common lower bounds).
    The smallest example lives over (1,1,2,1), with parts {1,2,4,5}/{3}
    against {1,4}/{2,3,5}.  :class:`NotNoncrossing` is raised in that case.
    """
    assert p1.comp == p2.comp
    po2 = p2.part_of()
    pieces: dict = {}
    for k, part in enumerate(p1.parts):
        for x in part:
            pieces.setdefault((k, po2[x]), []).append(x)
    out = AlphaPartition.from_parts(p1.comp, pieces.values())
    ok, witness = is_noncrossing(out)
    if not ok:
        raise NotNoncrossing(
            f"common refinement of {p1} and {p2} crosses at {witness}"
        )
    return out


# ----------------------------------------------------------------------
# the bijection with avoiding permutations


def _starts_directly_below(opener: int, part: tuple, comp: Composition) -> bool:
    """Whether a part opening at ``opener`` sits under an arc of ``part``."""
    s = comp.prefix
    for c, d in zip(part, part[1:]):
        if s[region_of(comp, c)] < opener < d:
            return True
    return False


def phi_inverse(partition: AlphaPartition) -> tuple:
    """The avoiding permutation whose descents are the partition's bumps.

    Each part receives a window of consecutive values, assigned in
    decreasing order along its positions.  The window of the part opening
    at the smallest position is placed just above the windows of all parts
    starting below it (under its arcs, transitively); the remaining parts
    are stacked higher, recursively.
    """
    ok, witness = is_noncrossing(partition)
    if not ok:
        raise NotNoncrossing(f"{partition}: bumps {witness} cross")
    comp = partition.comp
    w = [0] * (comp.n + 1)

    def assign(family: list, values: list):
        if not family:
            return
        family = sorted(family, key=lambda p: p[0])
        pbar, rest = family[0], family[1:]
        below, frontier = [], [pbar]
        while frontier:
            moved = [q for q in rest
                     if any(_starts_directly_below(q[0], r, comp)
                            for r in frontier)]
            rest = [q for q in rest if q not in moved]
            below.extend(moved)
            frontier = moved
        s = len(pbar)
        m = s + sum(len(q) for q in below)
        window = values[m - s:m]
        assert window[-1] - window[0] == s - 1, \
            "part values must be consecutive"
        for offset, pos in enumerate(pbar):
            w[pos] = window[-1] - offset
        assign(below, values[:m - s])
        assign(rest, values[m:])

    assign(list(partition.parts), list(range(1, comp.n + 1)))
    perm = tuple(w[1:])
    assert is_in_quotient(perm, comp) and is_alpha_231_avoiding(perm, comp)
    assert descents(perm) == frozenset(partition.bumps)
    return perm


@lru_cache(maxsize=None)
def _phi_table(parts: tuple) -> dict:
    comp = Composition(parts)
    table = {}
    for p in _enumerate_nc_cached(parts):
        w = phi_inverse(p)
        assert w not in table, "two partitions map to the same permutation"
        table[w] = p
    assert len(table) == len(avoiders(comp)), \
        "the noncrossing partitions must be in bijection with the avoiders"
    return table


def phi(w: tuple, comp: Composition) -> AlphaPartition:
    """The noncrossing partition paired with an avoiding permutation."""
    if not is_alpha_231_avoiding(w, comp):
        raise NotAvoiding(str(w))
    return _phi_table(comp.parts)[w]


def x_set(w: tuple, comp: Composition) -> frozenset:
    """All related pairs ``(a, b)`` of the partition paired with ``w``.

    Every pair lying in a common part contributes, not just the bumps.
    """
    p = phi(w, comp)
    out = []
    for part in p.parts:
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                out.append((part[i], part[j]))
    return frozenset(out)
