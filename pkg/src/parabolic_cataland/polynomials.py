"""Exact bivariate polynomial arithmetic with arbitrary-precision integers.

``LaurentPoly2`` is Laurent in ``x`` and polynomial in ``y``; coefficients
are Python ints, so alternating Moebius sums cancel exactly.  Rational
functions are plain numerator/denominator pairs compared by cross
multiplication; no polynomial gcd is needed at the degrees this package
reaches.
"""

from __future__ import annotations

from math import gcd
from typing import Optional


class ZeroDenominator(Exception):
    pass


def _term_sort_key(item):
    (ex, ey), _ = item
    return (-(ex + ey), -ex, -ey)


class LaurentPoly2:
    """A polynomial ``sum c * x^ex * y^ey`` with ``ey >= 0``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (ex, ey), c in (terms or {}).items():
            c = int(c)
            if c:
                if ey < 0:
                    raise ValueError("y exponents must be nonnegative")
                clean[(int(ex), int(ey))] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, ex: int, ey: int) -> "LaurentPoly2":
        return cls({(ex, ey): c})

    @classmethod
    def x(cls) -> "LaurentPoly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "LaurentPoly2":
        return cls({(0, 1): 1})

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for (ax, ay), ac in self.terms.items():
            for (bx, by), bc in other.terms.items():
                k = (ax + bx, ay + by)
                out[k] = out.get(k, 0) + ac * bc
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers need a rational function")
        out = LaurentPoly2.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=_term_sort_key)

    def min_x_exponent(self) -> int:
        return min((ex for (ex, _e) in self.terms), default=0)

    def is_polynomial(self) -> bool:
        return self.min_x_exponent() >= 0

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        return g

    def shift_x(self, k: int) -> "LaurentPoly2":
        return LaurentPoly2({(ex + k, ey): c for (ex, ey), c in self.terms.items()})

    def evaluate(self, x_val, y_val):
        """Exact evaluation; ``x_val`` must be invertible if needed."""
        from fractions import Fraction

        total = Fraction(0)
        for (ex, ey), c in self.terms.items():
            total += Fraction(c) * Fraction(x_val) ** ex * Fraction(y_val) ** ey
        return total

    def substitute(self, rx: "RationalPoly2", ry: "RationalPoly2") -> "RationalPoly2":
        """Plug rational functions into ``x`` and ``y``."""
        acc = RationalPoly2.zero()
        for (ex, ey), c in self.terms.items():
            term = RationalPoly2.from_poly(LaurentPoly2.const(c))
            term = term * (rx ** ex) * (ry ** ey)
            acc = acc + term
        return acc

    # -- formatting -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for (ex, ey), c in self.sorted_terms():
            mon = []
            if ex:
                mon.append("x" if ex == 1 else f"x^{ex}")
            if ey:
                mon.append("y" if ey == 1 else f"y^{ey}")
            body = "*".join(mon)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not chunks:
                chunks.append(text if c > 0 else f"-{text}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + text)
        return " ".join(chunks)

    __repr__ = __str__

    def to_json_terms(self) -> list:
        return [[ex, ey, str(c)] for (ex, ey), c in self.sorted_terms()]


X = LaurentPoly2.x()
Y = LaurentPoly2.y()
ONE = LaurentPoly2.const(1)


class RationalPoly2:
    """A quotient of two :class:`LaurentPoly2`, reduced by integer content."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly2, den: LaurentPoly2):
        if not den:
            raise ZeroDenominator("denominator is the zero polynomial")
        if not num:
            den = ONE
        else:
            g = gcd(num.content(), den.content())
            if g > 1:
                num = LaurentPoly2({k: c // g for k, c in num.terms.items()})
                den = LaurentPoly2({k: c // g for k, c in den.terms.items()})
            # pull common monomial factors of x out of both sides
            shift = min(num.min_x_exponent(), den.min_x_exponent())
            if shift:
                num = num.shift_x(-shift)
                den = den.shift_x(-shift)
            lead = den.sorted_terms()[0][1]
            if lead < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RationalPoly2":
        return cls(LaurentPoly2.zero(), ONE)

    @classmethod
    def from_poly(cls, p: LaurentPoly2) -> "RationalPoly2":
        return cls(p, ONE)

    def __add__(self, other: "RationalPoly2") -> "RationalPoly2":
        return RationalPoly2(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: "RationalPoly2") -> "RationalPoly2":
        return RationalPoly2(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "RationalPoly2") -> "RationalPoly2":
        return RationalPoly2(self.num * other.num, self.den * other.den)

    def __pow__(self, k: int) -> "RationalPoly2":
        if k >= 0:
            return RationalPoly2(self.num ** k, self.den ** k)
        if not self.num:
            raise ZeroDenominator("cannot invert zero")
        return RationalPoly2(self.den ** (-k), self.num ** (-k))

    def equals(self, other: "RationalPoly2") -> bool:
        return self.num * other.den == other.num * self.den

    __eq__ = equals

    def __hash__(self):  # pragma: no cover - not used as dict keys
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def as_laurent(self) -> Optional[LaurentPoly2]:
        """The quotient as a Laurent polynomial, if the division is exact."""
        return try_exact_division(self.num, self.den)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def try_exact_division(num: LaurentPoly2, den: LaurentPoly2) -> Optional[LaurentPoly2]:
    """Divide exactly in the Laurent ring, or return ``None``.

    Monomial-in-x shifts are always exact; the remaining polynomial part is
    handled by leading-term long division under the lex order used for
    printing, bailing out as soon as a step is not divisible.
    """
    if not den:
        raise ZeroDenominator("division by zero polynomial")
    if not num:
        return LaurentPoly2.zero()
    shift = num.min_x_exponent() - den.min_x_exponent()
    p = num.shift_x(-num.min_x_exponent())
    q = den.shift_x(-den.min_x_exponent())
    (qx, qy), qc = q.sorted_terms()[0]
    out = {}
    guard = len(p.terms) * max(len(q.terms), 1) * 64 + 64
    while p:
        (px, py), pc = p.sorted_terms()[0]
        ex, ey = px - qx, py - qy
        if ey < 0 or ex < 0 or pc % qc:
            return None
        c = pc // qc
        out[(ex, ey)] = out.get((ex, ey), 0) + c
        p = p - LaurentPoly2.monomial(c, ex, ey) * q
        guard -= 1
        if guard <= 0:
            return None
    return LaurentPoly2(out).shift_x(shift)
