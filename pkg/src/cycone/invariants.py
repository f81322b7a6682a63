"""Numerical invariants of the Calabi-Yau hypersurface X in |-K_Z|.

Every pairing on X is computed twice: through the ambient Chow engine
(restriction is multiplication by -K_Z) and through closed forms; the two
routes must agree exactly or an InvariantViolationError is raised.  The
closed forms are, with gamma = c1^2 - 3 c2:

    O_X(1)^3          = gamma + c1^2 + 3 c1
    O_X(1)^2 . pi*h   = 2 c1 + 3
    O_X(1) . F        = 3
    O_X(1) . c2(X)    = 36 + 12 c1 + 2 gamma
    pi*h . c2(X)      = 36
    c3(X)             = -6 gamma - 162      (so rho = 2 forces gamma >= -27)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow
from .bundles import BundleSpec
from .chow import ChernPair, as_integer
from .cohom import h0_line
from .errors import InvariantViolationError


def gamma(c: ChernPair) -> int:
    """The twist-invariant gamma = c1^2 - 3 c2."""
    return c.gamma


@dataclass(frozen=True)
class XPairings:
    """The six intersection pairings on X (all integers)."""

    o1_cubed: int
    o1_sq_h: int
    o1_fiber: int
    o1_c2: int
    h_c2: int
    c3: int

    def as_tuple(self):
        return (self.o1_cubed, self.o1_sq_h, self.o1_fiber, self.o1_c2, self.h_c2, self.c3)


def closed_form_pairings(c: ChernPair) -> XPairings:
    g = c.gamma
    return XPairings(
        o1_cubed=g + c.c1 * c.c1 + 3 * c.c1,
        o1_sq_h=2 * c.c1 + 3,
        o1_fiber=3,
        o1_c2=36 + 12 * c.c1 + 2 * g,
        h_c2=36,
        c3=-6 * g - 162,
    )


def engine_pairings(c: ChernPair) -> XPairings:
    xi = chow.ChowClass.monomial(1, 0)
    h = chow.ChowClass.monomial(0, 1)
    fiber = chow.ChowClass.monomial(0, 2)
    c2x = chow.c2_of_x(c)
    return XPairings(
        o1_cubed=as_integer(chow.pair_on_cy(xi, chow.mul(xi, xi, c), c)),
        o1_sq_h=as_integer(chow.pair_on_cy(xi, chow.mul(xi, h, c), c)),
        o1_fiber=as_integer(chow.pair_on_cy(xi, fiber, c)),
        o1_c2=as_integer(chow.pair_on_cy(xi, c2x, c)),
        h_c2=as_integer(chow.pair_on_cy(h, c2x, c)),
        c3=chow.c3_of_x(c),
    )


@dataclass(frozen=True)
class CYInvariants:
    gamma: int
    c3: int
    h12: int | None  # 3*gamma + 83, only once rho(X) = 2 is established
    pairings: XPairings
    gamma_in_rho2_range: bool  # gamma >= -27, forced by c3(X) <= 4 when rho = 2


def cy_invariants(c: ChernPair, rho: int | None = None) -> CYInvariants:
    closed = closed_form_pairings(c)
    engine = engine_pairings(c)
    if closed != engine:
        raise InvariantViolationError(
            f"pairing tables disagree for {c}: closed {closed} vs engine {engine}"
        )
    g = c.gamma
    return CYInvariants(
        gamma=g,
        c3=closed.c3,
        h12=3 * g + 83 if rho == 2 else None,
        pairings=closed,
        gamma_in_rho2_range=g >= -27,
    )


def divisor_cube(c: ChernPair, d: tuple[int, int]) -> int:
    """(alpha*O_X(1) + beta*pi*h)^3 on X."""
    alpha, beta = d
    p = closed_form_pairings(c)
    return (
        alpha**3 * p.o1_cubed
        + 3 * alpha**2 * beta * p.o1_sq_h
        + 3 * alpha * beta**2 * p.o1_fiber
    )


def divisor_dot_c2(c: ChernPair, d: tuple[int, int]) -> int:
    alpha, beta = d
    p = closed_form_pairings(c)
    return alpha * p.o1_c2 + beta * p.h_c2


def chi_cubic_coefficients(c: ChernPair, d: tuple[int, int]) -> tuple[Fraction, Fraction]:
    """(a, b) with chi(m D|X) = a m^3 + b m; no quadratic or constant term
    since K_X = 0."""
    return Fraction(divisor_cube(c, d), 6), Fraction(divisor_dot_c2(c, d), 12)


def chi_on_cy(c: ChernPair, d: tuple[int, int], m: int) -> Fraction:
    """Riemann-Roch on X: chi(m D|X) = m^3 D^3 / 6 + m D.c2(X) / 12.

    Equals h^0 when D|X is ample (Kodaira vanishing, K_X = 0); knowing
    ampleness is the caller's business.
    """
    a, b = chi_cubic_coefficients(c, d)
    return a * m**3 + b * m


@dataclass(frozen=True)
class SectionBounds:
    """Section-count bounds, all conditional on O_X(1) ample and -K_Z nef."""

    lower_bound_o1_minus_h: Fraction  # h^0(O_X(1) - pi*h) is at least this
    chi_o1: Fraction                  # chi(O_X(1)) = h^0 under ampleness
    normal_bound: int                 # h^0(N_{X|Z}) >= 5*gamma + 91
    c1_ge_minus_1: bool               # necessary once the hypotheses hold
    positive_bound_forces_c1_ge_1: bool
    assumes: tuple[str, ...] = ("O_X(1) ample", "-K_Z nef")


def section_bounds(c: ChernPair) -> SectionBounds:
    g = c.gamma
    lb = Fraction(g, 3) + Fraction(c.c1 * c.c1, 6) + Fraction(c.c1, 2)
    chi_o1 = chi_on_cy(c, (1, 0), 1)
    return SectionBounds(
        lower_bound_o1_minus_h=lb,
        chi_o1=chi_o1,
        normal_bound=5 * g + 91,
        c1_ge_minus_1=c.c1 >= -1,
        positive_bound_forces_c1_ge_1=lb > 0,
    )


@dataclass(frozen=True)
class RhoResult:
    value: int | None
    reason: str


def _normalized_type(spec: BundleSpec) -> tuple[int, int, int] | None:
    """Splitting type twisted so that c1 lands in {1, 2, 3}."""
    stype = spec.splitting_type
    if stype is None:
        return None
    c1 = spec.chern.c1
    target = (c1 - 1) % 3 + 1
    t = (target - c1) // 3
    return tuple(e + t for e in stype)


def rho_of_x(spec: BundleSpec, minus_k=None) -> RhoResult:
    """Picard number of X: 2 + h^2(End E) when -K_Z is big and nef.

    Falls back to the splitting-type criterion (uniform type, normalized so
    c1 is in {1,2,3}, different from (0,0,3) forces rho = 2) when End
    cohomology is out of reach; returns unknown otherwise.
    """
    if minus_k is None:
        from . import cone  # deferred: cone imports this module

        minus_k = cone.anticanonical_status(spec)
    if not (minus_k.nef is True and minus_k.big is True):
        return RhoResult(None, "anticanonical-not-known-big-nef")
    diffs = spec.end_difference_exponents()
    if diffs is not None:
        h2 = sum(h0_line(-3 - d) for d in diffs)  # Serre duality per summand
        return RhoResult(2 + h2, "end-cohomology")
    if spec.uniform:
        ntype = _normalized_type(spec)
        if ntype is not None and ntype != (0, 0, 3):
            return RhoResult(2, "splitting-type-criterion")
        if ntype == (0, 0, 3):
            return RhoResult(None, "splitting-type-inconclusive")
    return RhoResult(None, "insufficient-data")
