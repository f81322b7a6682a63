"""Chow ring of the projectivized bundle Z = P(E) over P2, with E of rank 3.

Generators are xi = c1(O_Z(1)) and h = the pulled-back hyperplane class
(written H below); F = H^2 is the fiber class.  Two relations cut the ring
down: H^3 = 0 (the base is a surface) and the tautological relation

    xi^3 = c1 * xi^2 H  -  c2 * xi H^2

where (c1, c2) are the Chern numbers of E.  Everything is stored reduced in
the monomial basis {1; xi, H; xi^2, xi*H, H^2; xi^2*H, xi*H^2; xi^2*H^2},
and the degree-4 coefficient is the integral against the point class
xi^2 H^2.  Coefficients are exact (Fraction, or QuadValue for boundary-root
computations); integrality of geometric quantities is asserted, never
assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import DomainError, InvariantViolationError

# Basis monomials as (xi-exponent, H-exponent), grouped by total degree.
MONOMIALS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2))
MONOMIAL_NAMES = ("1", "xi", "h", "xi2", "xi_h", "h2", "xi2_h", "xi_h2", "xi2_h2")
_INDEX = {m: i for i, m in enumerate(MONOMIALS)}

_ZERO = Fraction(0)


@dataclass(frozen=True)
class ChernPair:
    """Chern numbers (c1(E).h, c2(E)) of a rank-3 bundle on P2."""

    c1: int
    c2: int

    @property
    def gamma(self) -> int:
        """The twist-invariant c1^2 - 3*c2."""
        return self.c1 * self.c1 - 3 * self.c2

    def twist(self, t: int) -> "ChernPair":
        """Chern numbers of E tensored with O(t)."""
        return ChernPair(self.c1 + 3 * t, self.c2 + 2 * t * self.c1 + 3 * t * t)


@dataclass(frozen=True)
class ChowClass:
    """A (possibly inhomogeneous) reduced class, as coefficients on MONOMIALS."""

    coeffs: tuple

    @classmethod
    def zero(cls) -> "ChowClass":
        return cls((_ZERO,) * 9)

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "ChowClass":
        if (i, j) not in _INDEX:
            raise DomainError(f"xi^{i} H^{j} is not a basis monomial")
        coeffs = [_ZERO] * 9
        coeffs[_INDEX[(i, j)]] = _as_coeff(coeff)
        return cls(tuple(coeffs))

    @classmethod
    def one(cls) -> "ChowClass":
        return cls.monomial(0, 0)

    @classmethod
    def degree1(cls, xi_coef, h_coef) -> "ChowClass":
        coeffs = [_ZERO] * 9
        coeffs[_INDEX[(1, 0)]] = _as_coeff(xi_coef)
        coeffs[_INDEX[(0, 1)]] = _as_coeff(h_coef)
        return cls(tuple(coeffs))

    def coefficient(self, i: int, j: int):
        return self.coeffs[_INDEX[(i, j)]]

    @property
    def point_coefficient(self):
        """Degree-4 part, i.e. the integral against xi^2 H^2."""
        return self.coeffs[8]

    def degree_part(self, d: int) -> "ChowClass":
        coeffs = [
            c if i + j == d else _ZERO
            for (i, j), c in zip(MONOMIALS, self.coeffs)
        ]
        return ChowClass(tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_homogeneous(self, d: int) -> bool:
        return all(c == 0 for (i, j), c in zip(MONOMIALS, self.coeffs) if i + j != d)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(tuple(-a for a in self.coeffs))

    def scale(self, k) -> "ChowClass":
        if isinstance(k, ChowClass):
            raise DomainError("'*' scales by numbers; ring products need mul(x, y, c)")
        k = _as_coeff(k)
        return ChowClass(tuple(k * a for a in self.coeffs))

    __rmul__ = scale
    __mul__ = scale

    def mul(self, other: "ChowClass", c: ChernPair) -> "ChowClass":
        return mul(self, other, c)

    def to_coeff_map(self) -> dict:
        return {
            name: coeff
            for name, coeff in zip(MONOMIAL_NAMES, self.coeffs)
            if coeff != 0
        }

    def __str__(self) -> str:
        terms = [f"{c}*{n}" if n != "1" else str(c) for n, c in self.to_coeff_map().items()]
        return " + ".join(terms) if terms else "0"


def _as_coeff(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def as_integer(q) -> int:
    """Assert a coefficient is an integer and return it."""
    if isinstance(q, int):
        return q
    if isinstance(q, Fraction):
        if q.denominator != 1:
            raise InvariantViolationError(f"expected an integer, got {q}")
        return q.numerator
    raise InvariantViolationError(f"expected an integer, got {q!r}")


def reduce_monomial(i: int, j: int, c: ChernPair) -> ChowClass:
    """Rewrite xi^i H^j in the canonical basis.

    H^3 = 0 and xi^3 = c1*xi^2 H - c2*xi H^2 are applied until the xi
    exponent drops to at most 2; anything of total degree above 4 dies.
    """
    if i < 0 or j < 0:
        raise DomainError("exponents must be nonnegative")
    if j >= 3 or i + j > 4:
        return ChowClass.zero()
    if i <= 2:
        return ChowClass.monomial(i, j)
    lower = reduce_monomial(i - 1, j + 1, c).scale(c.c1)
    lowest = reduce_monomial(i - 2, j + 2, c).scale(c.c2)
    return lower - lowest


def mul(x: ChowClass, y: ChowClass, c: ChernPair) -> ChowClass:
    """Graded product, fully reduced; commutative and associative."""
    out = ChowClass.zero()
    for (i1, j1), a in zip(MONOMIALS, x.coeffs):
        if a == 0:
            continue
        for (i2, j2), b in zip(MONOMIALS, y.coeffs):
            if b == 0:
                continue
            out = out + reduce_monomial(i1 + i2, j1 + j2, c).scale(a * b)
    return out


def intersect4(f1: ChowClass, f2: ChowClass, f3: ChowClass, f4: ChowClass, c: ChernPair):
    """Total intersection number of four degree-1 classes on Z."""
    for f in (f1, f2, f3, f4):
        if not f.is_homogeneous(1):
            raise DomainError("intersect4 needs purely degree-1 classes")
    return mul(mul(mul(f1, f2, c), f3, c), f4, c).point_coefficient


def anticanonical(c: ChernPair) -> ChowClass:
    """-K_Z = 3*xi + (3 - c1)*H."""
    return ChowClass.degree1(3, 3 - c.c1)


def minus_k_quartic(c: ChernPair) -> int:
    """(-K_Z)^4, which evaluates to 27*gamma + 486."""
    a = anticanonical(c)
    return as_integer(intersect4(a, a, a, a, c))


def _dual_chern_pullbacks(c: ChernPair) -> tuple[ChowClass, ...]:
    """Pullbacks of the Chern classes of the dual bundle: 1, -c1*H, c2*H^2, 0."""
    return (
        ChowClass.one(),
        ChowClass.monomial(0, 1, -c.c1),
        ChowClass.monomial(0, 2, c.c2),
        ChowClass.zero(),
    )


def tangent_chern_classes(c: ChernPair) -> tuple[ChowClass, ChowClass, ChowClass, ChowClass]:
    """Chern classes c1..c4 of the tangent bundle of Z.

    Computed as c(p^* T_P2) * c(p^* E-dual tensor O_Z(1)); the rank-3 twist
    is expanded from the Chern roots, so the degree-3 piece of the twisted
    factor vanishes by the defining relation.
    """
    dual = _dual_chern_pullbacks(c)
    twisted = []  # degree-k Chern class of p^*(E dual) (x) O_Z(1), k = 0..3
    for k in range(4):
        acc = ChowClass.zero()
        for i in range(0, min(k, 2) + 1):
            xi_pow = reduce_monomial(k - i, 0, c)
            acc = acc + mul(dual[i], xi_pow, c).scale(math.comb(3 - i, k - i))
        twisted.append(acc)
    base = (ChowClass.one(), ChowClass.monomial(0, 1, 3), ChowClass.monomial(0, 2, 3))
    total = ChowClass.zero()
    for bd, bcls in enumerate(base):
        for td in range(4):
            total = total + mul(bcls, twisted[td], c)
    return tuple(total.degree_part(d) for d in (1, 2, 3, 4))


def euler_number(c: ChernPair) -> int:
    """Integral of c4(T_Z); the topological Euler number of Z (always 9)."""
    return as_integer(tangent_chern_classes(c)[3].point_coefficient)


def cy_chern_lifts(c: ChernPair) -> tuple[ChowClass, ChowClass]:
    """Degree-2 and degree-3 classes on Z restricting to c2(X) and c3(X).

    Adjunction for X in |-K_Z|: c(T_X) lifts to c(T_Z) * (1 + K + K^2 + ...)
    with K = K_Z.  The degree-1 part must cancel exactly (X is Calabi-Yau);
    that cancellation is asserted.
    """
    c1z, c2z, c3z, c4z = tangent_chern_classes(c)
    k = -anticanonical(c)
    k_pow = [ChowClass.one()]
    for _ in range(4):
        k_pow.append(mul(k_pow[-1], k, c))
    total_tz = ChowClass.one() + c1z + c2z + c3z + c4z
    inv_normal = k_pow[0] + k_pow[1] + k_pow[2] + k_pow[3] + k_pow[4]
    total = mul(total_tz, inv_normal, c)
    if not total.degree_part(1).is_zero():
        raise InvariantViolationError("adjunction did not cancel c1 on the hypersurface")
    return total.degree_part(2), total.degree_part(3)


def c2_of_x(c: ChernPair) -> ChowClass:
    """The degree-2 class on Z whose restriction to X is c2(X)."""
    return cy_chern_lifts(c)[0]


def c3_of_x(c: ChernPair) -> int:
    """The Euler number of X, integrated through the ambient ring."""
    lift = cy_chern_lifts(c)[1]
    return as_integer(mul(lift, anticanonical(c), c).point_coefficient)


def pair_on_cy(u: ChowClass, v: ChowClass, c: ChernPair):
    """Intersection number of u.v restricted to X, i.e. u.v.(-K_Z) on Z."""
    return mul(mul(u, v, c), anticanonical(c), c).point_coefficient


@dataclass(frozen=True)
class GramMatrix:
    """Pairing matrix of the degree-4 basis (F, xi*H, xi^2), with determinant."""

    entries: tuple[tuple[int, int, int], ...]
    det: int


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def gram_matrix(c: ChernPair) -> GramMatrix:
    basis = (
        ChowClass.monomial(0, 2),  # F = H^2
        ChowClass.monomial(1, 1),  # xi*H
        ChowClass.monomial(2, 0),  # xi^2
    )
    entries = tuple(
        tuple(as_integer(mul(u, v, c).point_coefficient) for v in basis) for u in basis
    )
    return GramMatrix(entries, _det3(entries))


@dataclass(frozen=True)
class ExceptionalSurfaceClass:
    """Numerical class data of a potential anticanonically-contracted surface.

    ``coeffs`` are the (xi^2, xi*H, F) coefficients of the mu-multiplied
    class.  ``mu_candidates`` lists the positive integers mu compatible with
    integrality of the class over the unimodular degree-4 basis together
    with the forced fiber degree (mu * G.F = 9 with G.F a positive integer
    at most xi^2.F = 1, so mu = 9 must be admissible); an empty tuple means
    no such surface class can exist.  ``reduced`` is the integral class for
    mu = 9 when admissible.
    """

    coeffs: tuple[int, int, int]
    mu_candidates: tuple[int, ...]
    reduced: tuple[int, int, int] | None

    def reduced_class(self) -> ChowClass | None:
        if self.reduced is None:
            return None
        g2, g11, gf = self.reduced
        return (
            ChowClass.monomial(2, 0, g2)
            + ChowClass.monomial(1, 1, g11)
            + ChowClass.monomial(0, 2, gf)
        )


def exceptional_surface_class(c: ChernPair) -> ExceptionalSurfaceClass:
    coeffs = (
        9,
        -(6 * c.c1 + 9),
        9 * c.c2 + 3 * c.c1 + 9 - 2 * c.c1 * c.c1,
    )
    g = math.gcd(math.gcd(9, abs(coeffs[1])), abs(coeffs[2]))
    if g % 9 == 0:
        candidates = tuple(d for d in (1, 3, 9) if g % d == 0)
        reduced = tuple(v // 9 for v in coeffs)
    else:
        candidates, reduced = (), None
    return ExceptionalSurfaceClass(coeffs, candidates, reduced)


def split_section_product(e2: int, e3: int, c: ChernPair) -> ChowClass:
    """(xi - e2*H)(xi - e3*H): the class of the section P(O(e1)) in a split bundle."""
    return mul(ChowClass.degree1(1, -e2), ChowClass.degree1(1, -e3), c)


def chern_pair_of_split(e1: int, e2: int, e3: int) -> ChernPair:
    return ChernPair(e1 + e2 + e3, e1 * e2 + e1 * e3 + e2 * e3)


def split_types(emin: int, emax: int):
    """All monotone exponent triples with entries in [emin, emax]."""
    return list(combinations_with_replacement(range(emin, emax + 1), 3))
