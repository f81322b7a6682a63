"""Cone analysis: anticanonical status, boundary roots, c2, verdicts."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from cycone import chow, invariants
from cycone.bundles import BundleSpec
from cycone.chow import ChernPair, ChowClass
from cycone.cone import (
    EQUALITY,
    EXCEPTIONAL_CANDIDATE,
    NOT_DETERMINED,
    OZ1,
    OZ3,
    RATIONAL,
    UNKNOWN,
    MinusKStatus,
    allowed_splitting_types,
    anticanonical_status,
    boundary_root,
    boundary_root_for_gamma,
    c2_bound_for_gamma,
    c2_positivity,
    c2_positivity_for_gamma,
    cone_report,
    cone_restriction_case,
    rationality_verdict,
)
from cycone.errors import DomainError
from cycone.exactnum import QuadValue, is_perfect_square, sqrt_to_quad


# --- anticanonical status ------------------------------------------------------


def test_status_split_012():
    s = anticanonical_status(BundleSpec.split(0, 1, 2))
    assert (s.nef, s.ample, s.big, s.h0_gt_1) == (True, False, True, True)
    assert ("minus_k_quartic", "567") in s.witnesses


def test_status_split_001_is_ample():
    s = anticanonical_status(BundleSpec.split(0, 0, 1))
    assert (s.nef, s.ample) == (True, True)


def test_status_split_003():
    s = anticanonical_status(BundleSpec.split(0, 0, 3))
    assert (s.nef, s.ample, s.big) == (True, False, True)
    assert ("minus_k_quartic", "729") in s.witnesses


def test_status_chern_only_is_unknown():
    s = anticanonical_status(BundleSpec.chern_only(3, 2))
    assert (s.nef, s.ample, s.big) == (None, None, None)
    assert s.h0_gt_1 is True  # gamma = 3 >= -18


def test_status_non_nef_split():
    s = anticanonical_status(BundleSpec.split(-2, 2, 3))
    assert s.nef is False and s.ample is False
    assert s.big is None  # top power alone decides nothing without nefness


def test_status_rejects_inconsistent_construction():
    with pytest.raises(DomainError):
        MinusKStatus(nef=False, ample=True, big=None, h0_gt_1=None)


# --- boundary roots --------------------------------------------------------------


def test_root_example_gamma_minus_nine():
    c = ChernPair(3, 6)  # gamma = -9
    root = boundary_root(c, OZ3)
    expected = QuadValue.rational(Fraction(9, 2)) - Fraction(3, 2) * sqrt_to_quad(5)
    assert root.exists and root.k == expected
    assert not root.k.is_rational
    assert root.k_other == QuadValue.rational(Fraction(9, 2)) + Fraction(3, 2) * sqrt_to_quad(5)


def test_root_gamma_zero_c1_zero_is_rational_zero():
    root = boundary_root_for_gamma(0, 0, OZ3)
    assert root.exists and root.k == 0
    assert root.k.is_rational


def test_root_absent_for_gamma_three():
    root = boundary_root(ChernPair(3, 2), OZ3)
    assert not root.exists and root.k is None


def test_scaled_normalization_is_one_third():
    c = ChernPair(3, 6)
    k3 = boundary_root(c, OZ3).k
    k1 = boundary_root(c, OZ1).k
    assert k1 * 3 == k3


def test_root_plugs_back_to_zero():
    for c in (ChernPair(3, 6), ChernPair(0, 0), ChernPair(-1, 3), ChernPair(2, 4)):
        root = boundary_root(c, OZ3)
        if not root.exists:
            continue
        for k in (root.k, root.k_other):
            d = ChowClass.degree1(QuadValue.rational(3), -k)
            cube = chow.intersect4(d, d, d, chow.anticanonical(c), c)
            assert cube == 0


def test_root_rationality_is_perfect_square_condition():
    for g in range(-27, 3):
        k = boundary_root_for_gamma(g, 0).k
        assert k.is_rational == is_perfect_square(9 - 4 * g)
    assert [g for g in range(-27, 3) if is_perfect_square(9 - 4 * g)] == [-18, -10, -4, 0, 2]


def test_root_rejects_bad_normalization():
    with pytest.raises(DomainError):
        boundary_root(ChernPair(0, 0), "OZ2")


# --- c2 positivity ----------------------------------------------------------------


def test_c2_boundary_value_at_gamma_minus_27():
    rep = c2_positivity_for_gamma(-27)
    assert rep.boundary_value == QuadValue.make(-36, 18, 13)
    assert rep.boundary_value > 0
    assert rep.positive and rep.gamma_in_rho2_range


def test_c2_above_gamma_two_uses_nef_rays():
    rep = c2_positivity_for_gamma(3)
    assert rep.boundary_value is None
    assert rep.minus_k_ray == 6 * 3 + 216
    assert rep.h_ray == 36 and rep.positive


def test_c2_h_ray_is_36_everywhere():
    for g in range(-27, 28):
        assert c2_positivity_for_gamma(g).h_ray == 36


def test_c2_engine_route_matches_closed_bound():
    # pairing route (36 + 12 c1 + 2 gamma) - 36 k' against the gamma-only bound
    for c in (ChernPair(3, 6), ChernPair(0, 0), ChernPair(-1, 1), ChernPair(4, 8)):
        rep = c2_positivity(c)
        assert rep.boundary_value == c2_bound_for_gamma(c.gamma)


def test_c2_closed_bound_positive_up_to_gamma_two():
    for g in range(-27, 3):
        assert c2_bound_for_gamma(g) > 0


# --- admissible splitting types ------------------------------------------------------


def test_splitting_type_table_rows():
    assert allowed_splitting_types(-1) == [(-1, -1, 1), (-1, 0, 0)]
    assert allowed_splitting_types(0) == [(-1, 0, 1), (0, 0, 0)]
    assert allowed_splitting_types(1) == [(0, 0, 1)]
    assert allowed_splitting_types(2) == [(0, 0, 2), (0, 1, 1)]
    assert allowed_splitting_types(3) == [(0, 1, 2), (1, 1, 1)]
    assert allowed_splitting_types(4) == [(1, 1, 2)]


def test_splitting_types_empty_outside_range():
    assert allowed_splitting_types(-2) == []
    assert allowed_splitting_types(5) == []
    assert allowed_splitting_types(9) == []


def test_splitting_table_entries_are_consistent():
    for c1 in range(-1, 5):
        for a, b, c in allowed_splitting_types(c1):
            assert a <= b <= c and a + b + c == c1
            assert 3 * b + 3 - c1 > 0
            assert 3 * a + 3 - c1 >= 0


# --- restriction classification --------------------------------------------------------


def test_restriction_exceptional_candidate_012():
    res = cone_restriction_case(BundleSpec.split(0, 1, 2))
    assert res.case == EXCEPTIONAL_CANDIDATE
    assert res.surface.coeffs == (9, -27, 18)
    assert res.surface.mu_candidates == (1, 3, 9)


def test_restriction_equality_for_ample():
    res = cone_restriction_case(BundleSpec.split(0, 0, 1))
    assert (res.case, res.via) == (EQUALITY, "ample-anticanonical")


def test_restriction_equality_for_non_nef():
    res = cone_restriction_case(BundleSpec.split(-2, 2, 3))
    assert (res.case, res.via) == (EQUALITY, "canonical-side-only")


def test_restriction_c1_2_downgrades_to_equality():
    # statuses asserted externally: big and nef, not ample
    asserted = MinusKStatus(nef=True, ample=False, big=True, h0_gt_1=None)
    res = cone_restriction_case(BundleSpec.chern_only(2, 5), asserted)
    assert (res.case, res.via) == (EQUALITY, "exceptional-class-impossible")
    assert res.surface.mu_candidates == ()


def test_restriction_not_determined_without_status():
    res = cone_restriction_case(BundleSpec.chern_only(3, 2))
    assert res.case == NOT_DETERMINED


# --- rationality verdict -----------------------------------------------------------------


def test_verdict_split_012():
    v = rationality_verdict(BundleSpec.split(0, 1, 2))
    assert v.verdict == RATIONAL
    assert v.trail == ("h0-minus-k-gt-1",)


def test_verdict_gamma_minus_20_is_open():
    v = rationality_verdict(BundleSpec.chern_only(1, 7))  # gamma = -20
    assert v.verdict == UNKNOWN
    assert v.trail == ()


def test_verdict_gamma_minus_18_boundary():
    spec = BundleSpec.chern_only(0, 6)  # gamma = -18, c3 = -54
    v = rationality_verdict(spec)
    assert v.verdict == RATIONAL
    assert v.trail[0] == "gamma-ge-minus-18"
    assert invariants.cy_invariants(spec.chern).c3 == -54


def test_verdict_flags_rho_contradiction():
    v = rationality_verdict(BundleSpec.split(0, 0, 3))
    assert v.verdict == RATIONAL
    assert any("rho(X) = 4" in note for note in v.notes)


def test_verdict_rational_root_clause():
    # gamma = -22 < -18 with no h0 information, root exists and is irrational
    v = rationality_verdict(BundleSpec.chern_only(2, 2 + 8))  # gamma = 4 - 30 = -26
    assert v.verdict == UNKNOWN
    # force the root-rationality clause: fake status with unknown h0
    blank = MinusKStatus(nef=None, ample=None, big=None, h0_gt_1=None)
    rho = invariants.RhoResult(None, "test")
    spec20 = BundleSpec.chern_only(1, 7)  # gamma = -20, 9 - 4g = 89: irrational
    assert rationality_verdict(spec20, blank, rho).verdict == UNKNOWN


def test_verdict_monotone_in_h0():
    # h0 > 1 dominates even when the root is irrational
    spec = BundleSpec.named("S2TP2(-1)")  # gamma = -9, root irrational
    assert not boundary_root(spec.chern).k.is_rational
    v = rationality_verdict(spec)
    assert v.verdict == RATIONAL and "h0-minus-k-gt-1" in v.trail


def test_nef_survey_gamma_bound_and_verdicts():
    for exps in combinations_with_replacement(range(-4, 5), 3):
        spec = BundleSpec.split(*exps)
        status = anticanonical_status(spec)
        if status.nef:
            assert spec.gamma >= -18
            assert rationality_verdict(spec, status).verdict == RATIONAL


# --- aggregate report ---------------------------------------------------------------------


def test_cone_report_aggregates():
    rep = cone_report(BundleSpec.split(0, 1, 2))
    assert rep.verdict == RATIONAL
    assert rep.k_root.normalization == OZ3
    assert rep.k_root_scaled.normalization == OZ1
    assert rep.restriction.case == EXCEPTIONAL_CANDIDATE
    assert rep.c2.positive
    assert rep.w_contains_boundary is None


def test_cone_data_is_twist_equivariant():
    # twisting E leaves Z alone: statuses and verdicts are unchanged, and
    # the boundary root just shifts by 3t along the relabeled ray
    for exps in ((0, 1, 2), (0, 0, 3), (-1, 0, 2)):
        spec = BundleSpec.split(*exps)
        base_status = anticanonical_status(spec)
        base_verdict = rationality_verdict(spec)
        base_root = boundary_root(spec.chern)
        for t in (-2, 1, 3):
            twisted = spec.twist(t)
            status = anticanonical_status(twisted)
            assert (status.nef, status.ample, status.big) == (
                base_status.nef, base_status.ample, base_status.big
            )
            verdict = rationality_verdict(twisted)
            assert (verdict.verdict, verdict.trail) == (
                base_verdict.verdict, base_verdict.trail
            )
            root = boundary_root(twisted.chern)
            assert root.exists == base_root.exists
            if root.exists:
                assert root.k == base_root.k + 3 * t
