"""Sheaf cohomology engine: tables, Riemann-Roch, grammar, plethysm."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycone.chow import chern_pair_of_split
from cycone.cohom import (
    CohomologyTable,
    DirectSum,
    DualOf,
    EndOf,
    LineBundle,
    SymPower,
    SymTangent,
    TwistBy,
    chern_data,
    chi_rr,
    cohom_expr,
    cohom_line,
    cohom_sym_tangent,
    h0_line,
    line_bundle_exponents,
    normalize,
    parse_sheaf_expr,
)
from cycone.errors import DomainError, UnsupportedExpressionError


def table(h0, h1, h2):
    return CohomologyTable(h0, h1, h2)


def split_sum(*exps):
    return DirectSum(*[LineBundle(e) for e in exps])


# --- line bundles -------------------------------------------------------------


@pytest.mark.parametrize(
    "k, expected",
    [(0, (1, 0, 0)), (1, (3, 0, 0)), (-3, (0, 0, 1)), (-1, (0, 0, 0)), (4, (15, 0, 0))],
)
def test_line_bundle_tables(k, expected):
    t = cohom_line(k)
    assert (t.h0, t.h1, t.h2) == expected


def test_line_bundle_serre_duality():
    for k in range(-9, 9):
        t, dual = cohom_line(k), cohom_line(-3 - k)
        assert (t.h0, t.h1, t.h2) == (dual.h2, dual.h1, dual.h0)


def test_line_bundle_chi_is_binomial():
    for k in range(-9, 9):
        assert cohom_line(k).chi == (k + 1) * (k + 2) // 2


# --- symmetric powers of the tangent bundle ------------------------------------


def test_tangent_sections():
    # global vector fields of the plane: dim PGL_3 = 8
    assert cohom_sym_tangent(1, 0) == table(8, 0, 0)


def test_s4_tangent_twisted_down_has_no_sections():
    assert cohom_sym_tangent(4, -5).h0 == 0


def test_cotangent_h1_is_one():
    # T(-3) is the cotangent bundle; h^1 = 1, chi = -1
    assert cohom_sym_tangent(1, -3) == table(0, 1, 0)
    assert chi_rr(SymTangent(1, -3)) == -1


def test_sym_tangent_h0_vanishes_below_diagonal():
    for a in range(0, 7):
        for b in range(-12, 12):
            if a + b < 0:
                assert cohom_sym_tangent(a, b).h0 == 0


def test_sym_tangent_serre_duality():
    for a in range(0, 5):
        for b in range(-8, 5):
            t = cohom_sym_tangent(a, b)
            dual = cohom_sym_tangent(a, -3 * a - b - 3)
            assert (t.h0, t.h1, t.h2) == (dual.h2, dual.h1, dual.h0)


def test_sym_tangent_degenerate_degree_zero():
    assert cohom_sym_tangent(0, 2) == cohom_line(2)


# --- expression evaluation ------------------------------------------------------


def test_end_of_003_split():
    t = cohom_expr(EndOf(split_sum(0, 0, 3)))
    assert t.h2 == 2
    assert t == table(25, 0, 2)


def test_end_chi_example():
    assert cohom_expr(EndOf(split_sum(0, 1, 2))).chi == 15  # 2*gamma + 9, gamma = 3


def test_plethysm_sections():
    e = TwistBy(SymPower(SymPower(SymTangent(1, -1), 2), 2), -1)
    t = cohom_expr(e)
    assert t.h0 == 3
    assert t == table(3, 0, 0)
    assert chi_rr(e) == 3


def test_plethysm_serre_duality():
    e = SymPower(SymPower(SymTangent(1, -1), 2), 2)  # S^2 S^2 T(-4)
    dual_twisted = TwistBy(DualOf(e), -3)
    t, s = cohom_expr(e), cohom_expr(dual_twisted)
    assert (t.h0, t.h1, t.h2) == (s.h2, s.h1, s.h0)


def test_serre_duality_for_every_evaluable_shape():
    exprs = [
        LineBundle(2),
        split_sum(-2, 0, 3),
        SymTangent(2, -4),
        EndOf(split_sum(0, 1, 3)),
        SymPower(split_sum(-1, 2), 2),
        TwistBy(SymPower(SymPower(SymTangent(1, -1), 2), 2), -1),
        DualOf(SymTangent(3, 1)),
    ]
    for e in exprs:
        t = cohom_expr(e)
        s = cohom_expr(TwistBy(DualOf(e), -3))
        assert (t.h0, t.h1, t.h2) == (s.h2, s.h1, s.h0)


def test_additivity_of_direct_sums():
    @given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5))
    @settings(max_examples=40)
    def run(exps):
        total = cohom_expr(split_sum(*exps))
        parts = [cohom_line(e) for e in exps]
        summed = parts[0]
        for p in parts[1:]:
            summed = summed + p
        assert total == summed

    run()


def test_twist_and_dual_normalization():
    assert normalize(TwistBy(LineBundle(2), -5)) == (LineBundle(-3),)
    assert normalize(DualOf(SymTangent(2, 1))) == (SymTangent(2, -7),)
    assert normalize(SymPower(SymTangent(1, -1), 3)) == (SymTangent(3, -3),)
    assert normalize(SymPower(LineBundle(4), 0)) == (LineBundle(0),)
    assert normalize(SymPower(split_sum(0, 1), 2)) == (
        LineBundle(0),
        LineBundle(1),
        LineBundle(2),
    )


def test_unsupported_expressions_name_the_node():
    bad = SymPower(SymTangent(2, 0), 3)
    with pytest.raises(UnsupportedExpressionError) as err:
        cohom_expr(bad)
    assert err.value.node == bad
    with pytest.raises(UnsupportedExpressionError):
        cohom_expr(EndOf(SymTangent(1, 0)))
    with pytest.raises(UnsupportedExpressionError):
        cohom_expr(SymPower(DirectSum(SymTangent(1, 0), LineBundle(0)), 3))


def test_chi_rr_matches_tables_where_evaluable():
    exprs = [
        split_sum(0, 1, 2),
        EndOf(split_sum(-1, 0, 2)),
        SymTangent(3, -2),
        TwistBy(SymPower(SymPower(SymTangent(1, -1), 2), 2), -1),
        DualOf(SymTangent(2, 1)),
        SymPower(split_sum(1, 2), 3),
    ]
    for e in exprs:
        assert chi_rr(e) == cohom_expr(e).chi


def test_chi_end_grid():
    from itertools import combinations_with_replacement

    for exps in combinations_with_replacement(range(-4, 5), 3):
        c = chern_pair_of_split(*exps)
        assert chi_rr(EndOf(split_sum(*exps))) == 2 * c.gamma + 9


def test_chern_data_examples():
    t = chern_data(SymTangent(1, 0))
    assert (t.rank, t.c1, t.c2) == (2, 3, 3)
    s2 = chern_data(SymPower(SymTangent(1, -1), 2))
    assert (s2.rank, s2.c1, s2.c2) == (3, 3, 6)  # S^2(T(-1))
    end = chern_data(EndOf(split_sum(0, 1, 2)))
    assert (end.rank, end.c1) == (9, 0)


def test_memoized_tables_are_stable():
    first = cohom_sym_tangent(3, -2)
    cohom_sym_tangent.cache_clear()
    cohom_line.cache_clear()
    h0_line.cache_clear()
    assert cohom_sym_tangent(3, -2) == first


# --- grammar ---------------------------------------------------------------------


def test_parse_line_bundle_sums():
    assert parse_sheaf_expr("O") == LineBundle(0)
    assert parse_sheaf_expr("O(-2)") == LineBundle(-2)
    e = parse_sheaf_expr("O+O(1)+O(2)")
    assert line_bundle_exponents(e) == [0, 1, 2]
    e = parse_sheaf_expr("2O+O(3)")
    assert line_bundle_exponents(e) == [0, 0, 3]
    e = parse_sheaf_expr("2O(-3) + 5O + 2O(3)")
    assert line_bundle_exponents(e) == [-3, -3, 0, 0, 0, 0, 0, 3, 3]


def test_parse_operators():
    assert parse_sheaf_expr("SymT(2,-1)") == SymTangent(2, -1)
    assert parse_sheaf_expr("twist(O(1),3)") == TwistBy(LineBundle(1), 3)
    assert parse_sheaf_expr("sym(SymT(1,-1),2)") == SymPower(SymTangent(1, -1), 2)
    assert parse_sheaf_expr("end(O+O(3))") == EndOf(DirectSum(LineBundle(0), LineBundle(3)))
    assert parse_sheaf_expr("dual(SymT(1,0))") == DualOf(SymTangent(1, 0))
    nested = parse_sheaf_expr("twist(sym(sym(SymT(1,-1),2),2),-1)")
    assert cohom_expr(nested).h0 == 3


@pytest.mark.parametrize("text", ["", "O(", "Q(3)", "O(3))", "sym(O,)", "O(1)+", "0O"])
def test_parse_rejects_malformed(text):
    with pytest.raises(DomainError):
        parse_sheaf_expr(text)


def test_sym_tangent_rejects_negative_degree():
    with pytest.raises(DomainError):
        SymTangent(-1, 0)
