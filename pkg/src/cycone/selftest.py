"""Built-in regression checks, runnable via ``cycone selftest``.

Each check recomputes a pinned exact value or sweeps a property grid; any
mismatch raises with a diagnostic.  Checks call through module attributes
so a tampered implementation is caught by name.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from . import bundles, chow, cohom, cone, invariants
from .bundles import BundleSpec
from .chow import ChernPair
from .exactnum import QuadValue, is_perfect_square, sqrt_to_quad

CHERN_GRID = [ChernPair(c1, c2) for c1 in range(-6, 7) for c2 in range(-10, 11)]
SPLIT_GRID = list(combinations_with_replacement(range(-4, 5), 3))


class CheckFailure(AssertionError):
    pass


def _require(ok: bool, message: str):
    if not ok:
        raise CheckFailure(message)


def check_anticanonical_contraction_example():
    """Split (0,1,2): (-K_Z)^4 = 567, big and nef but not ample, and the
    contracted-surface class matches the split-section product."""
    spec = BundleSpec.split(0, 1, 2)
    c = spec.chern
    _require(chow.minus_k_quartic(c) == 567, "(-K_Z)^4 != 567 for split (0,1,2)")
    status = cone.anticanonical_status(spec)
    _require(
        (status.nef, status.ample, status.big) == (True, False, True),
        f"unexpected -K_Z status for split (0,1,2): {status}",
    )
    restriction = cone.cone_restriction_case(spec, status)
    _require(
        restriction.case == cone.EXCEPTIONAL_CANDIDATE,
        f"expected an exceptional candidate, got {restriction.case}",
    )
    surface = restriction.surface
    _require(surface.coeffs == (9, -27, 18), f"surface coeffs {surface.coeffs}")
    _require(surface.mu_candidates == (1, 3, 9), f"mu candidates {surface.mu_candidates}")
    oracle = chow.split_section_product(1, 2, c)
    _require(
        surface.reduced_class() == oracle,
        f"reduced class {surface.reduced} does not match the section product",
    )


def check_picard_rank_four_example():
    """Split (0,0,3): (-K_Z)^4 = 729, h^2(End E) = 2, rho(X) = 4."""
    spec = BundleSpec.split(0, 0, 3)
    _require(chow.minus_k_quartic(spec.chern) == 729, "(-K_Z)^4 != 729")
    end = cohom.EndOf(cohom.DirectSum(*[cohom.LineBundle(e) for e in (0, 0, 3)]))
    _require(cohom.cohom_expr(end).h2 == 2, "h^2(End E) != 2 for 2O+O(3)")
    rho = invariants.rho_of_x(spec)
    _require(rho.value == 4, f"rho(X) = {rho.value}, expected 4")


def check_gamma_catalog():
    """The four uniform (0,1,2) bundles carry gamma = 3, 0, 0, -9."""
    expected = dict(zip(bundles.UNIFORM_012_NAMES, (3, 0, 0, -9)))
    for name, g in expected.items():
        spec = BundleSpec.named(name)
        _require(spec.gamma == g, f"gamma({name}) = {spec.gamma}, expected {g}")
        _require(spec.splitting_type == (0, 1, 2), f"{name} splitting type")


def check_pairing_closed_forms():
    """Engine pairings equal the closed forms on the whole Chern grid."""
    for c in CHERN_GRID:
        closed = invariants.closed_form_pairings(c)
        engine = invariants.engine_pairings(c)
        _require(closed == engine, f"pairings disagree at {c}: {closed} vs {engine}")
        _require(closed.c3 == -6 * c.gamma - 162, f"c3 closed form broken at {c}")


def check_chi_end_formula():
    """chi(End E) = 2*gamma + 9 for split E, by cohomology and Riemann-Roch."""
    for exps in SPLIT_GRID:
        c = chow.chern_pair_of_split(*exps)
        end = cohom.EndOf(cohom.DirectSum(*[cohom.LineBundle(e) for e in exps]))
        expected = 2 * c.gamma + 9
        via_table = cohom.cohom_expr(end).chi
        via_rr = cohom.chi_rr(end)
        _require(
            via_table == via_rr == expected,
            f"chi(End) at {exps}: table {via_table}, rr {via_rr}, expected {expected}",
        )


def check_splitting_type_table():
    """The admissible-type table for c1 in [-1, 4] is exactly the known one."""
    expected = {
        -1: [(-1, -1, 1), (-1, 0, 0)],
        0: [(-1, 0, 1), (0, 0, 0)],
        1: [(0, 0, 1)],
        2: [(0, 0, 2), (0, 1, 1)],
        3: [(0, 1, 2), (1, 1, 1)],
        4: [(1, 1, 2)],
    }
    for c1, rows in expected.items():
        got = cone.allowed_splitting_types(c1)
        _require(got == rows, f"splitting table row {c1}: {got} != {rows}")
    _require(cone.allowed_splitting_types(-2) == [], "row below range not empty")
    _require(cone.allowed_splitting_types(5) == [], "row above range not empty")
    total = sum(len(v) for v in expected.values())
    _require(total == 10, "table should hold 10 types across 6 rows")


def check_riemann_roch_on_x():
    """chi(O_X(1)) closed forms for c1 = 2 and 3, and the c1 = -1 cubic."""
    for c2 in range(-6, 7):
        c = ChernPair(2, c2)
        g = c.gamma
        _require(
            invariants.chi_on_cy(c, (1, 0), 1) == Fraction(g, 3) + Fraction(20, 3),
            f"chi(O_X(1)) broken for {c}",
        )
        c = ChernPair(3, c2)
        g = c.gamma
        _require(
            invariants.chi_on_cy(c, (1, 0), 1) == Fraction(g, 3) + 9,
            f"chi(O_X(1)) broken for {c}",
        )
        c = ChernPair(-1, c2)
        g = c.gamma
        for m in range(-4, 5):
            expected = (Fraction(9 * g, 2) - 9) * m**3 + (Fraction(g, 2) + 6) * m
            _require(
                invariants.chi_on_cy(c, (3, 0), m) == expected,
                f"cubic chi broken for {c}, m = {m}",
            )


def check_plethysm_sections():
    """h^0(S^2 E(-1)) = 3 for E = S^2(T(-1)), via the plethysm sequence."""
    expr = cohom.TwistBy(
        cohom.SymPower(cohom.SymPower(cohom.SymTangent(1, -1), 2), 2), -1
    )
    _require(cohom.cohom_expr(expr).h0 == 3, "plethysm h^0 != 3")
    _require(cohom.cohom_sym_tangent(4, -5).h0 == 0, "h^0(S^4 T(-5)) != 0")
    _require(cohom.h0_line(1) == 3, "h^0(O(1)) != 3")


def check_boundary_root_exactness():
    """k = 9/2 - (3/2) sqrt(5) at (gamma, c1) = (-9, 3); D^3 re-evaluates to 0;
    rationality of the root is exactly the perfect-square condition."""
    c = ChernPair(3, 6)  # gamma = -9
    root = cone.boundary_root(c)
    expected = QuadValue.rational(Fraction(9, 2)) - Fraction(3, 2) * sqrt_to_quad(5)
    _require(root.exists and root.k == expected, f"root {root.k} != {expected}")
    _require(not root.k.is_rational, "root should be irrational")
    d = chow.ChowClass.degree1(QuadValue.rational(3), -root.k)
    cube = chow.intersect4(d, d, d, chow.anticanonical(c), c)
    _require(cube == 0, f"D^3 = {cube}, expected exact 0")
    for g in range(-27, 3):
        k = cone.boundary_root_for_gamma(g, 0).k
        _require(
            k.is_rational == is_perfect_square(9 - 4 * g),
            f"rationality mismatch at gamma = {g}",
        )


def check_gram_unimodularity():
    """det of the degree-4 pairing matrix is -1 on the whole Chern grid."""
    for c in CHERN_GRID:
        gram = chow.gram_matrix(c)
        _require(gram.det == -1, f"Gram determinant {gram.det} at {c}")


def check_c2_positivity_sweep():
    """All boundary values of D.c2(X) are positive for gamma in [-27, 27]."""
    for g in range(-27, 28):
        rep = cone.c2_positivity_for_gamma(g)
        _require(rep.h_ray == 36, "pi*h ray must give exactly 36")
        _require(rep.positive, f"c2 positivity fails at gamma = {g}")
        if g <= 2:
            bound = cone.c2_bound_for_gamma(g)
            _require(bound is not None and bound > 0, f"closed bound fails at gamma = {g}")
        else:
            _require(rep.boundary_value is None, "no root expected above gamma = 2")
            _require(rep.minus_k_ray == 6 * g + 216, "anticanonical-ray value broken")


def check_nef_gamma_survey():
    """Nef -K_Z forces gamma >= -18 over split types in [-4, 4], and every
    nef case gets a Rational verdict."""
    for exps in SPLIT_GRID:
        spec = BundleSpec.split(*exps)
        status = cone.anticanonical_status(spec)
        if status.nef:
            _require(spec.gamma >= -18, f"nef split {exps} with gamma {spec.gamma}")
            verdict = cone.rationality_verdict(spec, status)
            _require(verdict.verdict == cone.RATIONAL, f"verdict not Rational at {exps}")


def check_mu_candidates_empty_for_c1_2():
    """c1 = 2 admits no integral multiple of the contracted-surface class."""
    for c2 in range(-10, 11):
        surface = chow.exceptional_surface_class(ChernPair(2, c2))
        _require(
            surface.mu_candidates == (),
            f"mu candidates {surface.mu_candidates} at c2 = {c2}, expected none",
        )


def check_euler_number():
    """Integral of c4(T_Z) is the Euler number 9 of a P2-bundle over P2."""
    for c in (ChernPair(0, 0), ChernPair(3, 2), ChernPair(-4, 7), ChernPair(5, -9), ChernPair(1, 1)):
        _require(chow.euler_number(c) == 9, f"Euler number != 9 at {c}")


def check_adjunction_degree_one():
    """Degree-1 part of c(T_Z) equals -K_Z for every Chern pair."""
    for c in CHERN_GRID[:: 7]:
        c1z = chow.tangent_chern_classes(c)[0]
        _require(c1z == chow.anticanonical(c), f"c1(T_Z) != -K_Z at {c}")


def check_twist_invariance():
    """gamma and the verdict data are invariant under E -> E(t)."""
    for c in (ChernPair(3, 2), ChernPair(-1, 4), ChernPair(2, -5)):
        for t in range(-3, 4):
            _require(c.twist(t).gamma == c.gamma, f"gamma moved under twist at {c}, t={t}")
    spec = BundleSpec.split(0, 1, 2)
    for t in (-2, 1, 3):
        twisted = spec.twist(t)
        _require(
            bundles.h0_anticanonical(twisted).value == 115,
            "h0(-K_Z) must not move under twisting",
        )


CHECKS = (
    ("split-012-regression", check_anticanonical_contraction_example),
    ("split-003-regression", check_picard_rank_four_example),
    ("gamma-catalog", check_gamma_catalog),
    ("pairing-closed-forms-grid", check_pairing_closed_forms),
    ("chi-end-grid", check_chi_end_formula),
    ("splitting-type-table", check_splitting_type_table),
    ("riemann-roch-on-x", check_riemann_roch_on_x),
    ("plethysm-h0", check_plethysm_sections),
    ("boundary-root-exactness", check_boundary_root_exactness),
    ("gram-unimodularity", check_gram_unimodularity),
    ("c2-positivity-sweep", check_c2_positivity_sweep),
    ("nef-gamma-survey", check_nef_gamma_survey),
    ("mu-candidates-empty-c1-2", check_mu_candidates_empty_for_c1_2),
    ("euler-number-9", check_euler_number),
    ("adjunction-degree-1", check_adjunction_degree_one),
    ("twist-invariance", check_twist_invariance),
)


def run_selftest(emit=print) -> list[str]:
    """Run every check; returns the names of the failing ones."""
    failures = []
    for name, fn in CHECKS:
        try:
            fn()
        except Exception as exc:  # a failing check must not stop the rest
            failures.append(name)
            emit(f"FAIL {name}: {exc}")
        else:
            emit(f"PASS {name}")
    if failures:
        emit(f"{len(failures)} of {len(CHECKS)} checks failed")
    else:
        emit(f"all {len(CHECKS)} checks passed")
    return failures
