"""Exact scalars: arbitrary-precision rationals and quadratic irrationals.

``Rational`` is ``fractions.Fraction``, which is already canonical (reduced,
positive denominator), so rational arithmetic is plain operator use.
``QuadValue`` adds exact real values a + b*sqrt(n) with rational a, b and a
squarefree integer radicand n; this is the smallest number field that holds
every Kahler-cone boundary root produced downstream.  Sums of distinct
radicals never occur in this problem and are rejected.

All values are immutable, arithmetic is referentially transparent, and no
floating point is used anywhere (comparisons against rationals are decided
by exact sign analysis).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantViolationError, MixedRadicalError

Rational = Fraction

_RATIONAL_TYPES = (int, Fraction)


def as_rational(x) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats (no rounding)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"not an exact rational: {x!r}")


def format_rational(q) -> str:
    """Serialize a rational as the canonical 'p/q' string (always with /q)."""
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse 'p/q' or a bare integer string."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational literal: {s!r}") from exc


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Write m >= 1 as s^2 * n with n squarefree; returns (s, n).

    Trial division only: every radicand this library meets is tiny
    (|9 - 4*gamma| stays below a few hundred on the supported range).
    """
    if m < 1:
        raise DomainError(f"squarefree decomposition needs m >= 1, got {m}")
    s, n, d = 1, 1, 2
    while d * d <= m:
        if m % d == 0:
            mult = 0
            while m % d == 0:
                m //= d
                mult += 1
            s *= d ** (mult // 2)
            if mult % 2:
                n *= d
        d += 1
    return s, n * m


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = int(m**0.5)
    while r * r > m:
        r -= 1
    while (r + 1) * (r + 1) <= m:
        r += 1
    return r * r == m


@dataclass(frozen=True)
class QuadValue:
    """Exact real number a + b*sqrt(n), stored in canonical form.

    Canonical form: if b == 0 then n == 0; otherwise n is squarefree and
    n >= 2.  Use :meth:`make` (or the arithmetic operators) so values are
    always canonical; the constructor validates but does not normalize.
    """

    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self):
        if not isinstance(self.a, Fraction) or not isinstance(self.b, Fraction):
            raise DomainError("QuadValue parts must be Fractions")
        if self.b == 0:
            if self.n != 0:
                raise DomainError("canonical form requires n = 0 when b = 0")
        else:
            if self.n < 2:
                raise DomainError("canonical form requires a squarefree n >= 2")
            s, nf = squarefree_decompose(self.n)
            if s != 1 or nf != self.n:
                raise DomainError(f"radicand {self.n} is not squarefree")

    @classmethod
    def make(cls, a, b=0, n: int = 0) -> "QuadValue":
        """Build a + b*sqrt(n), normalizing into canonical form."""
        a, b = as_rational(a), as_rational(b)
        if b == 0 or n == 0:
            return cls(a, Fraction(0), 0)
        if n < 0:
            raise DomainError("radicand must be nonnegative")
        s, nf = squarefree_decompose(n)
        b = b * s
        if nf == 1:
            return cls(a + b, Fraction(0), 0)
        return cls(a, b, nf)

    @classmethod
    def rational(cls, q) -> "QuadValue":
        return cls(as_rational(q), Fraction(0), 0)

    # --- structure -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.a

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * float(self.n) ** 0.5

    def __repr__(self) -> str:
        return f"QuadValue({self})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.n})"

    # --- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QuadValue":
        if isinstance(x, QuadValue):
            return x
        return QuadValue.rational(as_rational(x))

    def _join_radicand(self, other: "QuadValue") -> int:
        if self.b == 0:
            return other.n
        if other.b == 0:
            return self.n
        if self.n != other.n:
            raise MixedRadicalError(
                f"cannot combine sqrt({self.n}) with sqrt({other.n})"
            )
        return self.n

    def __add__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        other = self._coerce(other)
        n = self._join_radicand(other)
        return QuadValue.make(self.a + other.a, self.b + other.b, n)

    __radd__ = __add__

    def __neg__(self):
        return QuadValue.make(-self.a, -self.b, self.n)

    def __sub__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        other = self._coerce(other)
        n = self._join_radicand(other)
        a = self.a * other.a + self.b * other.b * n
        b = self.a * other.b + self.b * other.a
        return QuadValue.make(a, b, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QuadValue):
            if not other.is_rational:
                raise DomainError("division by an irrational QuadValue is out of scope")
            other = other.a
        other = as_rational(other)
        if other == 0:
            raise DomainError("division by zero")
        return QuadValue.make(self.a / other, self.b / other, self.n)

    # --- exact ordering --------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(n) via case split and squaring."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        lhs, rhs = self.a * self.a, self.b * self.b * self.n
        if lhs == rhs:
            # a^2 = b^2 n would make sqrt(n) rational; n is squarefree >= 2
            raise InvariantViolationError(f"impossible sign tie for {self!r}")
        return sa if lhs > rhs else sb

    def _cmp_sign(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __eq__(self, other):
        if isinstance(other, QuadValue):
            return (self.a, self.b, self.n) == (other.a, other.b, other.n)
        if isinstance(other, _RATIONAL_TYPES):
            return self.is_rational and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __lt__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self._cmp_sign(other) < 0

    def __le__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self._cmp_sign(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self._cmp_sign(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (QuadValue, *_RATIONAL_TYPES)):
            return NotImplemented
        return self._cmp_sign(other) >= 0

    # --- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b), "n": self.n}

    @classmethod
    def from_json_dict(cls, d: dict) -> "QuadValue":
        return cls.make(parse_rational(d["a"]), parse_rational(d["b"]), int(d["n"]))


def sqrt_to_quad(q) -> QuadValue:
    """Exact square root of a nonnegative rational, as s*sqrt(n).

    The result squares back to q exactly; it is rational iff the
    canonicalized radicand collapses to n = 0.

    >>> sqrt_to_quad(Fraction(45, 4))
    QuadValue(0 + 3/2*sqrt(5))
    >>> sqrt_to_quad(Fraction(9, 4))
    QuadValue(3/2)
    """
    q = as_rational(q)
    if q < 0:
        raise DomainError(f"sqrt of negative rational {q}")
    if q == 0:
        return QuadValue.rational(0)
    p, r = q.numerator, q.denominator
    s, n = squarefree_decompose(p * r)  # sqrt(p/r) = sqrt(p*r)/r
    return QuadValue.make(0, Fraction(s, r), n)


def quad_is_rational(v: QuadValue) -> bool:
    return v.is_rational
