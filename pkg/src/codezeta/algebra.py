"""Exact arithmetic in Q(sqrt(q)), dense univariate polynomials and truncated series.

Every value in this package lives in the real quadratic extension Q(sqrt(q))
for a fixed integer base q >= 2, represented as a pair of rationals (a, b)
meaning a + b*sqrt(q).  When q is a perfect square the sqrt(q) part is folded
into the rational part at construction, so equal values always have equal
representations.  All operations are pure; no value is mutated after
construction.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction]


def _as_fraction(value: "RationalLike | QuadExt") -> Fraction:
    if isinstance(value, QuadExt):
        if value.b != 0:
            raise ValueError(f"{value} is irrational, expected a rational value")
        return value.a
    return Fraction(value)


class QuadExt:
    """An element a + b*sqrt(q) of Q(sqrt(q)), with exact rational a, b."""

    __slots__ = ("q", "a", "b")

    def __init__(self, q: int, a: RationalLike = 0, b: RationalLike = 0) -> None:
        if not isinstance(q, int) or q < 2:
            raise ValueError(f"base must be an integer >= 2, got {q!r}")
        a = Fraction(a)
        b = Fraction(b)
        root = math.isqrt(q)
        if root * root == q and b != 0:
            a += b * root
            b = Fraction(0)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt_base(cls, q: int) -> "QuadExt":
        """The element sqrt(q)."""
        return cls(q, 0, 1)

    # -- coercion ------------------------------------------------------

    def _coerce(self, other: "QuadExt | RationalLike") -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.q != self.q:
                raise ValueError(f"mismatched bases: sqrt({self.q}) vs sqrt({other.q})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.q, other)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.q, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.q, self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        return (-self) + other

    def __neg__(self) -> "QuadExt":
        return QuadExt(self.q, -self.a, -self.b)

    def __mul__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.q,
            self.a * other.a + self.b * other.b * self.q,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # 1/(a + b*s) = (a - b*s)/(a^2 - b^2 q); the norm vanishes only at 0
        # because sqrt(q) is irrational for canonical non-square q.
        norm = self.a * self.a - self.b * self.b * self.q
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(q))")
        return QuadExt(self.q, self.a / norm, -self.b / norm)

    def __truediv__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: "QuadExt | RationalLike") -> "QuadExt":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt(self.q, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return self.q == other.q and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.q, self.a, self.b))

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(q), by exact rational comparison."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 q; equality cannot occur
        # for canonical values since it would make sqrt(q) rational
        lhs, rhs = a * a, b * b * self.q
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def __lt__(self, other: "QuadExt | RationalLike") -> bool:
        other = self._coerce(other)
        return (self - other).sign() < 0

    def __le__(self, other: "QuadExt | RationalLike") -> bool:
        other = self._coerce(other)
        return (self - other).sign() <= 0

    def __gt__(self, other: "QuadExt | RationalLike") -> bool:
        other = self._coerce(other)
        return (self - other).sign() > 0

    def __ge__(self, other: "QuadExt | RationalLike") -> bool:
        other = self._coerce(other)
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    # -- text form -----------------------------------------------------

    _PARSE = re.compile(
        r"^(?P<a>[+-]?\d+(?:/\d+)?)"
        r"(?:(?P<sign>[+-])(?P<b>\d+(?:/\d+)?)\*sqrt\((?P<q>\d+)\))?$"
    )

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b > 0:
            return f"{self.a}+{self.b}*sqrt({self.q})"
        return f"{self.a}-{-self.b}*sqrt({self.q})"

    def __repr__(self) -> str:
        return f"QuadExt({self.q}, {self.a!r}, {self.b!r})"

    @classmethod
    def parse(cls, text: str, q: int) -> "QuadExt":
        """Parse the canonical text form ("a" or "a+b*sqrt(q)") for base q."""
        m = cls._PARSE.match(text.replace(" ", ""))
        if m is None:
            raise ValueError(f"cannot parse {text!r} as an element of Q(sqrt({q}))")
        a = Fraction(m.group("a"))
        if m.group("b") is None:
            return cls(q, a)
        if int(m.group("q")) != q:
            raise ValueError(f"base mismatch in {text!r}: expected sqrt({q})")
        b = Fraction(m.group("b"))
        if m.group("sign") == "-":
            b = -b
        return cls(q, a, b)


def sign_exact(x: QuadExt) -> int:
    """Exact sign of x as a real number: -1, 0 or +1.  Never uses floats."""
    return x.sign()


def half_power(q: int, exponent: RationalLike) -> QuadExt:
    """q**exponent for a half-integer exponent, as an exact QuadExt.

    Integer exponents give a rational; odd half-integers give q**m * sqrt(q).
    Negative exponents are allowed.
    """
    e = Fraction(exponent)
    twice = e * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent must be a half-integer, got {e}")
    if e.denominator == 1:
        return QuadExt(q, Fraction(q) ** int(e))
    m = (twice.numerator - 1) // 2  # e = m + 1/2
    return QuadExt(q, 0, Fraction(q) ** m)


class UniPoly:
    """Dense univariate polynomial over Q(sqrt(q)); index i holds the T^i coefficient."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable[QuadExt | RationalLike] = ()) -> None:
        cs = [c if isinstance(c, QuadExt) else QuadExt(q, c) for c in coeffs]
        for c in cs:
            if c.q != q:
                raise ValueError(f"coefficient base sqrt({c.q}) does not match sqrt({q})")
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls, q: int) -> "UniPoly":
        return cls(q, ())

    @classmethod
    def one(cls, q: int) -> "UniPoly":
        return cls(q, (1,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> QuadExt:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return QuadExt(self.q, 0)

    def _coerce(self, other: "UniPoly | QuadExt | RationalLike") -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.q != self.q:
                raise ValueError("mismatched polynomial bases")
            return other
        return UniPoly(self.q, (other,))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    def __add__(self, other: "UniPoly | QuadExt | RationalLike") -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.q, (self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: "UniPoly | QuadExt | RationalLike") -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.q, (self[i] - other[i] for i in range(n)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.q, (-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly | QuadExt | RationalLike") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        if other.q != self.q:
            raise ValueError("mismatched polynomial bases")
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.q)
        out = [QuadExt(self.q, 0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j, d in enumerate(other.coeffs):
                if d:
                    out[i + j] = out[i + j] + c * d
        return UniPoly(self.q, out)

    __rmul__ = __mul__

    def scale(self, factor: QuadExt | RationalLike) -> "UniPoly":
        """Coefficientwise product with a scalar."""
        f = factor if isinstance(factor, QuadExt) else QuadExt(self.q, factor)
        return UniPoly(self.q, (c * f for c in self.coeffs))

    def compose_linear(self, factor: QuadExt | RationalLike) -> "UniPoly":
        """The substitution T -> factor*T, i.e. the polynomial f(factor*T)."""
        f = factor if isinstance(factor, QuadExt) else QuadExt(self.q, factor)
        power = QuadExt(self.q, 1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power = power * f
        return UniPoly(self.q, out)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by T**k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        zero = QuadExt(self.q, 0)
        return UniPoly(self.q, (zero,) * k + self.coeffs)

    def __call__(self, point: QuadExt | RationalLike) -> QuadExt:
        """Exact Horner evaluation at a rational or Q(sqrt(q)) point."""
        p = point if isinstance(point, QuadExt) else QuadExt(self.q, point)
        acc = QuadExt(self.q, 0)
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        """Double-precision Horner evaluation at a complex point."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = f"({c})" if i == 0 else f"({c})*T^{i}"
            parts.append(term)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.q}, {[str(c) for c in self.coeffs]})"


def reciprocal_transform(f: UniPoly, m: int) -> UniPoly:
    """T**m * f(1/T): the coefficient vector reversed into length m+1."""
    if m < f.degree:
        raise ValueError(f"m = {m} is smaller than deg f = {f.degree}")
    return UniPoly(f.q, (f[m - i] for i in range(m + 1)))


def is_self_reciprocal(f: UniPoly) -> bool:
    """True iff the coefficient vector of f is palindromic."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no degree to reflect around")
    n = f.degree
    return all(f[i] == f[n - i] for i in range(n // 2 + 1))


class TruncatedSeries:
    """Power series over Q(sqrt(q)) kept exactly through T**order."""

    __slots__ = ("q", "order", "coeffs")

    def __init__(self, q: int, order: int, coeffs: Iterable[QuadExt | RationalLike]) -> None:
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [c if isinstance(c, QuadExt) else QuadExt(q, c) for c in coeffs]
        if len(cs) < order + 1:
            cs.extend(QuadExt(q, 0) for _ in range(order + 1 - len(cs)))
        elif len(cs) > order + 1:
            cs = cs[: order + 1]
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, f: UniPoly, order: int) -> "TruncatedSeries":
        return cls(f.q, order, f.coeffs)

    @classmethod
    def constant(cls, q: int, value: QuadExt | RationalLike, order: int) -> "TruncatedSeries":
        return cls(q, order, (value,))

    def _check(self, other: "TruncatedSeries") -> None:
        if other.q != self.q or other.order != self.order:
            raise ValueError("series mismatch (base or truncation order)")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.q == other.q and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.q, self.order, self.coeffs))

    def __add__(self, other: "TruncatedSeries | QuadExt | RationalLike") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.q, other, self.order)
        self._check(other)
        return TruncatedSeries(
            self.q, self.order, (x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | QuadExt | RationalLike") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.q, other, self.order)
        self._check(other)
        return TruncatedSeries(
            self.q, self.order, (x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries | QuadExt | RationalLike") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            o = other if isinstance(other, QuadExt) else QuadExt(self.q, other)
            return TruncatedSeries(self.q, self.order, (c * o for c in self.coeffs))
        self._check(other)
        zero = QuadExt(self.q, 0)
        out = [zero] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j in range(self.order + 1 - i):
                d = other.coeffs[j]
                if d:
                    out[i + j] = out[i + j] + c * d
        return TruncatedSeries(self.q, self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = QuadExt(self.q, 0)
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(self.q, self.order, out)

    def to_poly(self) -> UniPoly:
        return UniPoly(self.q, self.coeffs)

    def __str__(self) -> str:
        return str(self.to_poly()) + f" + O(T^{self.order + 1})"


def series_expand(num: UniPoly, den: UniPoly, order: int) -> TruncatedSeries:
    """The quotient series num/den, exact through T**order.

    Requires den(0) != 0.
    """
    if den.is_zero() or not den[0]:
        raise ZeroDivisionError("denominator has zero constant term")
    if num.q != den.q:
        raise ValueError("mismatched polynomial bases")
    n = TruncatedSeries.from_poly(num, order)
    d = TruncatedSeries.from_poly(den, order)
    return n * d.inverse()


def binomial(n: int, k: int) -> int:
    """C(n, k) with the usual convention of 0 outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def poly_from_strings(q: int, items: Sequence[str | int | float]) -> UniPoly:
    """Build a UniPoly from canonical coefficient strings (or plain integers)."""
    coeffs = []
    for item in items:
        if isinstance(item, str):
            coeffs.append(QuadExt.parse(item, q))
        elif isinstance(item, int):
            coeffs.append(QuadExt(q, item))
        else:
            raise ValueError(f"coefficient {item!r} is not exact")
    return UniPoly(q, coeffs)
