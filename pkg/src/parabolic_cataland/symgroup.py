"""Compositions, permutations, parabolic quotients and the weak order.

Permutations are plain tuples in one-line notation over ``1..n``.  The
descent notion used throughout this package is value-adjacency: a descent
of ``w`` is an inversion ``(i, j)`` with ``w[i] == w[j] + 1``, where the
positions ``i < j`` need not be adjacent.  This is not the classical
descent (positions ``i, i+1``); the whole labelling and bump machinery
keys on the value-adjacent notion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .posets import FinitePoset


class NotInQuotient(Exception):
    """The permutation is not increasing inside every region."""


class MaxNotUnique(Exception):
    """The set of avoiders below an element has several maxima."""


@dataclass(frozen=True)
class Composition:
    """An integer composition, carving ``1..n`` into consecutive regions."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def prefix(self) -> tuple:
        """Prefix sums ``s_0 = 0, s_1, ..., s_r = n``."""
        out = [0]
        for p in self.parts:
            out.append(out[-1] + p)
        return tuple(out)

    def region_of(self, position: int) -> int:
        """1-based region index of a position in ``1..n``."""
        s = self.prefix
        for i in range(1, self.r + 1):
            if position <= s[i]:
                return i
        raise ValueError(f"position {position} out of range for {self.parts}")

    def region_positions(self, i: int) -> range:
        s = self.prefix
        return range(s[i - 1] + 1, s[i] + 1)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@lru_cache(maxsize=None)
def _region_lookup(parts: tuple) -> tuple:
    comp = Composition(parts)
    lookup = [0] * (comp.n + 1)
    for i in range(1, comp.r + 1):
        for p in comp.region_positions(i):
            lookup[p] = i
    return tuple(lookup)


def region_of(comp: Composition, position: int) -> int:
    return _region_lookup(comp.parts)[position]


# ----------------------------------------------------------------------
# permutation basics


def identity(n: int) -> tuple:
    return tuple(range(1, n + 1))


def inversions(w: tuple) -> frozenset:
    """Position pairs ``(i, j)`` with ``i < j`` and ``w[i] > w[j]`` (1-based)."""
    n = len(w)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if w[i - 1] > w[j - 1]
    )


def descents(w: tuple) -> frozenset:
    """Inversions whose values are adjacent: ``w[i] == w[j] + 1``."""
    n = len(w)
    pos = {v: k + 1 for k, v in enumerate(w)}
    out = []
    for v in range(2, n + 1):
        i, j = pos[v], pos[v - 1]
        if i < j:
            out.append((i, j))
    return frozenset(out)


def perm_text(w: tuple, comp: Optional[Composition] = None) -> str:
    """One-line notation with ``|`` separating the regions."""
    if comp is None:
        return " ".join(str(v) for v in w)
    chunks = []
    for i in range(1, comp.r + 1):
        chunks.append(" ".join(str(w[p - 1]) for p in comp.region_positions(i)))
    return "|".join(chunks)


def perm_json(w: tuple, comp: Composition) -> dict:
    return {"alpha": list(comp.parts), "one_line": list(w)}


def is_in_quotient(w: tuple, comp: Composition) -> bool:
    for i in range(1, comp.r + 1):
        reg = list(comp.region_positions(i))
        for a, b in zip(reg, reg[1:]):
            if w[a - 1] > w[b - 1]:
                return False
    return True


def quotient_elements(comp: Composition) -> list:
    """All permutations increasing inside every region, sorted by length."""
    out = []

    def rec(values, parts, acc):
        if not parts:
            out.append(tuple(acc))
            return
        k = parts[0]
        for chosen in combinations(values, k):
            rest = tuple(v for v in values if v not in chosen)
            rec(rest, parts[1:], acc + list(chosen))

    rec(tuple(range(1, comp.n + 1)), comp.parts, [])
    return sorted_by_length(out)


def sorted_by_length(perms: Iterable[tuple]) -> list:
    return sorted(perms, key=lambda w: (len(inversions(w)), w))


def longest_quotient_element(comp: Composition) -> tuple:
    """The unique maximal element of the quotient under weak order."""
    n, s = comp.n, comp.prefix
    out = []
    for i in range(1, comp.r + 1):
        start = n - s[i] + 1
        out.extend(range(start, start + comp.parts[i - 1]))
    return tuple(out)


# ----------------------------------------------------------------------
# weak order


def weak_order_poset(perms: Iterable[tuple]) -> FinitePoset:
    """Weak order (inversion-set containment) on a set of permutations."""
    perms = sorted_by_length(set(perms))
    inv = {w: inversions(w) for w in perms}
    return FinitePoset.from_leq(perms, lambda u, v: inv[u] <= inv[v])


def weak_join(x: tuple, y: tuple) -> tuple:
    """Join in weak order: close the union of the inversion sets.

    The closure adds ``(a, c)`` whenever ``(a, b)`` and ``(b, c)`` are
    present, and the result is checked to be the inversion set of an
    actual permutation, which is returned.
    """
    n = len(x)
    assert len(y) == n
    rel = [[False] * (n + 1) for _ in range(n + 1)]
    for (a, b) in inversions(x) | inversions(y):
        rel[a][b] = True
    for b in range(1, n + 1):
        for a in range(1, b):
            if rel[a][b]:
                row_b = rel[b]
                row_a = rel[a]
                for c in range(b + 1, n + 1):
                    if row_b[c]:
                        row_a[c] = True
    # for positions a < b, rel[a][b] says the values are inverted
    w = [0] * n
    for i in range(1, n + 1):
        bigger = sum(
            1 for j in range(1, n + 1)
            if j != i and ((j < i and rel[j][i]) or (i < j and not rel[i][j]))
        )
        w[i - 1] = n - bigger
    w = tuple(w)
    assert sorted(w) == list(range(1, n + 1)), "closure is not an inversion set"
    got = inversions(w)
    want = frozenset(
        (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rel[a][b]
    )
    assert got == want, "closure is not an inversion set"
    return w


# ----------------------------------------------------------------------
# pattern avoidance and the projection onto avoiders


def is_alpha_231_avoiding(w: tuple, comp: Composition) -> bool:
    """No positions ``i < j < k`` in three distinct regions realise the
    pattern ``w[k] < w[i] < w[j]`` with ``w[i] == w[k] + 1``."""
    if not is_in_quotient(w, comp):
        raise NotInQuotient(perm_text(w, comp))
    n = comp.n
    reg = _region_lookup(comp.parts)
    pos = {v: k + 1 for k, v in enumerate(w)}
    for v in range(1, n):
        k, i = pos[v], pos[v + 1]  # w[i] == w[k] + 1
        if not (i < k and reg[i] < reg[k]):
            continue
        for j in range(i + 1, k):
            if reg[i] < reg[j] < reg[k] and w[j - 1] > w[i - 1]:
                return False
    return True


def avoiders(comp: Composition) -> list:
    return [w for w in quotient_elements(comp) if is_alpha_231_avoiding(w, comp)]


def pi_down(w: tuple, comp: Composition,
            avoiding: Optional[list] = None) -> tuple:
    """Greatest avoider weakly below ``w``.

    Computed by filtering the inversion-order down-set of ``w`` to the
    avoiders and checking that a unique maximum exists.
    """
    if avoiding is None:
        avoiding = avoiders(comp)
    target = inversions(w)
    below = [u for u in avoiding if inversions(u) <= target]
    maxima = [
        u for u in below
        if not any(u != v and inversions(u) < inversions(v) for v in below)
    ]
    if len(maxima) != 1:
        raise MaxNotUnique(f"{perm_text(w, comp)} has maxima {maxima}")
    return maxima[0]
