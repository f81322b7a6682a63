"""Kahler-cone analysis for X in |-K_Z|, Z = P(E) over P2, rho(X) = 2.

The pieces, all in exact arithmetic:

* status of -K_Z (nef / ample / big / more than one section), decided by
  the line test 3 e1 + 3 - c1 for uniform splitting types and by
  (-K_Z)^4 = 27 gamma + 486 for bigness;
* the boundary root of {D^3 = 0} along the ray through O_X(3) and pi*h:
  k = c1 + 3/2 - sqrt(9/4 - gamma), kept as an exact quadratic value in
  both the O_Z(3) and O_Z(1) normalizations (the scaled root is k/3);
* positivity of c2(X) on the closed cone: the boundary value is exactly
  18 + 2 gamma + 12 sqrt(9/4 - gamma), the pi*h ray gives exactly 36, and
  above gamma = 2 the anticanonical ray gives 6 gamma + 216;
* the admissible splitting-type table for -1 <= c1 <= 4;
* the restriction-equality classification K(X) = K(Z)|X (Kollar case,
  canonical-side case, or an exceptional-surface candidate whose class is
  pinned numerically);
* the rationality verdict with a first-match trail of criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow, invariants
from .bundles import BundleSpec, h0_anticanonical
from .chow import ChernPair, ExceptionalSurfaceClass, exceptional_surface_class
from .errors import DomainError, InvariantViolationError
from .exactnum import QuadValue, sqrt_to_quad

RATIONAL, UNKNOWN = "Rational", "Unknown"
EQUALITY, EXCEPTIONAL_CANDIDATE, NOT_DETERMINED = (
    "equality",
    "exceptional_candidate",
    "not_determined",
)
OZ3, OZ1 = "OZ3", "OZ1"


@dataclass(frozen=True)
class MinusKStatus:
    """Tri-state positivity record for -K_Z (None means unknown)."""

    nef: bool | None
    ample: bool | None
    big: bool | None
    h0_gt_1: bool | None
    witnesses: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.ample is True and self.nef is False:
            raise DomainError("ample implies nef")


def anticanonical_status(spec: BundleSpec) -> MinusKStatus:
    """Positivity of -K_Z from the spec.

    Uniform splitting types admit the exact line test on every line;
    Chern-only specs leave nef and ample undecided, and bigness undecided
    too since the top self-intersection alone proves nothing without
    nefness.
    """
    c = spec.chern
    quartic = chow.minus_k_quartic(c)
    witnesses = [("minus_k_quartic", str(quartic))]
    nef = ample = big = None
    stype = spec.splitting_type
    if stype is not None and spec.uniform:
        line_value = 3 * stype[0] + 3 - c.c1
        witnesses.append(("line_test_min_summand", str(line_value)))
        nef = line_value >= 0
        ample = line_value > 0
        if nef:
            big = quartic > 0
        # without nefness the top self-intersection proves nothing; big stays unknown
    h0 = h0_anticanonical(spec)
    if h0.value is not None:
        witnesses.append(("h0_minus_k", str(h0.value)))
    return MinusKStatus(nef, ample, big, h0.gt1, tuple(witnesses))


@dataclass(frozen=True)
class BoundaryRoot:
    """Roots of D^3 = 0 along the ray; ``k`` is the smaller branch."""

    k: QuadValue | None
    k_other: QuadValue | None
    exists: bool
    normalization: str


def boundary_root_for_gamma(g: int, c1: int, normalization: str = OZ3) -> BoundaryRoot:
    """Solve D^3 = 0 for D = O_X(3) - k pi*h (or O_X(1) - k pi*h for OZ1).

    In the OZ3 normalization k = c1 + 3/2 -+ sqrt(9/4 - gamma); no real
    root exists once gamma exceeds 9/4.

    >>> boundary_root_for_gamma(-9, 3).k
    QuadValue(9/2 - 3/2*sqrt(5))
    >>> boundary_root_for_gamma(3, 3).exists
    False
    """
    if normalization not in (OZ3, OZ1):
        raise DomainError(f"unknown normalization {normalization!r}")
    disc = Fraction(9, 4) - g
    if disc < 0:
        return BoundaryRoot(None, None, False, normalization)
    root = sqrt_to_quad(disc)
    center = QuadValue.rational(Fraction(2 * c1 + 3, 2))
    low, high = center - root, center + root
    if normalization == OZ1:
        low, high = low / 3, high / 3
    return BoundaryRoot(low, high, True, normalization)


def boundary_root(c: ChernPair, normalization: str = OZ3) -> BoundaryRoot:
    return boundary_root_for_gamma(c.gamma, c.c1, normalization)


@dataclass(frozen=True)
class C2Positivity:
    """c2(X)-values on the boundary rays of the (candidate) nef cone."""

    boundary_value: QuadValue | None  # at the O_Z(1)-normalized root, if it exists
    minus_k_ray: int                  # -K_Z|X . c2(X) = 6*gamma + 216
    h_ray: int                        # pi*h . c2(X), always 36
    positive: bool
    gamma_in_rho2_range: bool


def c2_bound_for_gamma(g: int) -> QuadValue | None:
    """The closed lower bound 18 + 2 gamma + 12 sqrt(9/4 - gamma), if real."""
    disc = Fraction(9, 4) - g
    if disc < 0:
        return None
    return QuadValue.rational(18 + 2 * g) + 12 * sqrt_to_quad(disc)


def c2_positivity_for_gamma(g: int) -> C2Positivity:
    boundary = c2_bound_for_gamma(g)
    minus_k_ray = 6 * g + 216
    values = [minus_k_ray, 36] if boundary is None else [boundary, minus_k_ray, 36]
    return C2Positivity(
        boundary_value=boundary,
        minus_k_ray=minus_k_ray,
        h_ray=36,
        positive=all(v > 0 for v in values),
        gamma_in_rho2_range=g >= -27,
    )


def c2_positivity(c: ChernPair) -> C2Positivity:
    """Evaluate D.c2(X) at the cone-boundary data of the given bundle.

    When the root exists the boundary value is computed through the pairing
    D.c2(X) = (36 + 12 c1 + 2 gamma) - 36 k' with the exact quadratic k',
    and cross-checked against the closed gamma-only bound.
    """
    report = c2_positivity_for_gamma(c.gamma)
    root = boundary_root(c, OZ1)
    if root.exists:
        pairing = invariants.closed_form_pairings(c)
        via_root = QuadValue.rational(pairing.o1_c2) - 36 * root.k
        if via_root != report.boundary_value:
            raise InvariantViolationError(
                f"boundary c2-value mismatch for {c}: {via_root} vs {report.boundary_value}"
            )
    return report


def allowed_splitting_types(c1: int) -> list[tuple[int, int, int]]:
    """Splitting types (a <= b <= c) compatible with the boundary analysis.

    Empty outside -1 <= c1 <= 4.  Inside, a is bounded below by the nef
    line test ceil(c1/3 - 1) and b by the strict test 3b + 3 - c1 > 0.
    """
    if c1 < -1 or c1 > 4:
        return []
    a_min = -((3 - c1) // 3)  # ceil((c1 - 3)/3)
    b_min = (c1 - 3) // 3 + 1  # smallest b with 3b + 3 - c1 > 0
    out = []
    for a in range(a_min, c1 // 3 + 1):
        for b in range(max(a, b_min), (c1 - a) // 2 + 1):
            out.append((a, b, c1 - a - b))
    return out


@dataclass(frozen=True)
class ConeRestriction:
    """Whether K(X) = K(Z)|X, and through which mechanism."""

    case: str
    via: str | None = None
    surface: ExceptionalSurfaceClass | None = None


def cone_restriction_case(spec: BundleSpec, minus_k: MinusKStatus | None = None) -> ConeRestriction:
    """Classify the restriction equality K(X) = K(Z)|X.

    Ample -K_Z gives equality outright; non-nef -K_Z gives equality on the
    canonical side; big and nef but not ample is the one exceptional
    pattern, which still collapses to equality when the contracted-surface
    class admits no integral multiple (empty mu-candidate set).
    """
    if minus_k is None:
        minus_k = anticanonical_status(spec)
    if minus_k.ample is True:
        return ConeRestriction(EQUALITY, "ample-anticanonical")
    if minus_k.nef is False:
        return ConeRestriction(EQUALITY, "canonical-side-only")
    if minus_k.nef is True and minus_k.big is True and minus_k.ample is False:
        surface = exceptional_surface_class(spec.chern)
        if not surface.mu_candidates:
            return ConeRestriction(EQUALITY, "exceptional-class-impossible", surface)
        return ConeRestriction(EXCEPTIONAL_CANDIDATE, None, surface)
    if minus_k.nef is True and minus_k.big is False:
        return ConeRestriction(EQUALITY, "outside-exceptional-pattern")
    return ConeRestriction(NOT_DETERMINED)


@dataclass(frozen=True)
class RationalityResult:
    verdict: str
    trail: tuple[str, ...]
    notes: tuple[str, ...]

    def __post_init__(self):
        if self.verdict == RATIONAL and not self.trail:
            raise DomainError("a Rational verdict needs a nonempty trail")


def rationality_verdict(
    spec: BundleSpec,
    minus_k: MinusKStatus | None = None,
    rho: invariants.RhoResult | None = None,
) -> RationalityResult:
    """Is the boundary of the Kahler cone of X spanned by rational classes?

    Decision procedure (first match wins), under the standing rho(X) = 2
    hypothesis, which is flagged when contradicted:

    1. h^0(-K_Z) > 1: the boundary is rational.
    2. gamma >= -18 (equivalently c3(X) <= -54): same conclusion, since
       this forces h^0(-K_Z) > 1.
    3. no real root of D^3 = 0 on the ray, or a rational one: boundary
       rays off the cubic {D^3 = 0} are rational, and a rational root
       covers the rays on it (conditional on the boundary lying in that
       cubic; tagged as such).
    4. otherwise open: this is exactly the h^0(-K_Z) = 1 territory.
    """
    if minus_k is None:
        minus_k = anticanonical_status(spec)
    if rho is None:
        rho = invariants.rho_of_x(spec, minus_k)
    notes = []
    if rho.value is not None and rho.value != 2:
        notes.append(f"rho(X) = {rho.value} contradicts the rho(X) = 2 hypothesis")
    g = spec.gamma
    h0 = h0_anticanonical(spec)
    if h0.gt1 is True:
        # the trail records how the section bound was established
        if h0.reason == "exact":
            trail = ("h0-minus-k-gt-1",)
        else:
            trail = ("gamma-ge-minus-18", "h0-minus-k-gt-1")
        return RationalityResult(RATIONAL, trail, tuple(notes))
    if g >= -18:
        return RationalityResult(RATIONAL, ("gamma-ge-minus-18",), tuple(notes))
    root = boundary_root(spec.chern)
    if not root.exists:
        notes.append("conditional-on-boundary-in-cubic")
        return RationalityResult(RATIONAL, ("no-real-cubic-root",), tuple(notes))
    if root.k.is_rational:
        notes.append("conditional-on-boundary-in-cubic")
        return RationalityResult(RATIONAL, ("rational-cubic-root",), tuple(notes))
    notes.append("h0(-K_Z) may equal 1; open territory")
    return RationalityResult(UNKNOWN, (), tuple(notes))


@dataclass(frozen=True)
class ConeReport:
    """Aggregate cone-side verdict for one bundle spec."""

    minus_k: MinusKStatus
    k_root: BoundaryRoot          # OZ3 normalization
    k_root_scaled: BoundaryRoot   # OZ1 normalization
    verdict: str
    trail: tuple[str, ...]
    notes: tuple[str, ...]
    c2: C2Positivity
    restriction: ConeRestriction
    w_contains_boundary: bool | None  # open question; reported, never assumed


def cone_report(spec: BundleSpec, rho: invariants.RhoResult | None = None) -> ConeReport:
    minus_k = anticanonical_status(spec)
    verdict = rationality_verdict(spec, minus_k, rho)
    return ConeReport(
        minus_k=minus_k,
        k_root=boundary_root(spec.chern, OZ3),
        k_root_scaled=boundary_root(spec.chern, OZ1),
        verdict=verdict.verdict,
        trail=verdict.trail,
        notes=verdict.notes,
        c2=c2_positivity(spec.chern),
        restriction=cone_restriction_case(spec, minus_k),
        w_contains_boundary=None,
    )
