from math import comb

import pytest
from hypothesis import given, strategies as st

from toralorders.algebra import (
    TruncatedLocalRing,
    central_nilpotent_ideal,
    cycle_type,
    is_hereditary_finite,
    is_normal_with_uniformiser,
    matrix_algebra,
    quotient,
    simples_with_action,
)
from toralorders.fields import field
from toralorders.hj import IntersectionData
from toralorders.orders import (
    AssumptionSetup,
    OrderError,
    ValuationLattice,
    build_delta_d,
    expected_dimension,
    expected_projective_classes,
    flags_and_projectives,
    hj_setup,
    hom_closed_form,
    hom_table,
    no_secondary_setup,
    sample_points,
    uniformiser_and_checks,
    verify_assumption,
    with_secondary_setup,
)
from toralorders.symbols import (
    CyclicExtension,
    SymbolPresentation,
    build_cover,
    build_hj_symbol,
    build_symbol,
    parse_monomial,
)


def dvr(q=3, N=5):
    return TruncatedLocalRing(field(q), ["s"], N).algebra()


def symbol(q, n, a, b, N=3):
    F = field(q)
    return build_symbol(SymbolPresentation(F, n, 1, parse_monomial(F, a), parse_monomial(F, b), N))


def hj_delta(m_list=(2, 2), q=7, N=5):
    F = field(q)
    S = build_cover(IntersectionData(list(m_list)), F, N)
    return build_hj_symbol(S, CyclicExtension.default(F, S.m))


S_ = {1: 1}


def test_d1_is_base():
    R = dvr()
    T = build_delta_d(R, S_, 1)
    assert T.dim == R.dim
    assert T.uniformiser() == S_


@pytest.mark.parametrize("N", [3, 5, 6])
def test_dimension_d2_dvr(N):
    T = build_delta_d(dvr(N=N), S_, 2)
    assert T.dim == 3 * N + (N - 1)
    assert T.dim == expected_dimension(N, N - 1, 2)


def test_t_squared_is_z():
    T = build_delta_d(dvr(), S_, 2)
    t = T.uniformiser()
    assert T.entry(t, 0, 1) == {0: 1} and T.entry(t, 1, 0) == S_
    assert T.pow(t, 2) == T.diagonal(S_)


def test_d3_quotient_is_three_copies():
    T = build_delta_d(dvr(), S_, 3)
    rep = uniformiser_and_checks(T)
    assert rep.passed and rep.quotient_dim == 3


def test_z_must_be_normal():
    A = matrix_algebra(field(3), 2)
    with pytest.raises(OrderError):
        build_delta_d(A, {1: 1}, 2)


@pytest.mark.parametrize("N", [5, 6])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_uniformiser_dvr_and_hj(N, d):
    R = dvr(N=N)
    assert uniformiser_and_checks(build_delta_d(R, S_, d)).passed
    A = hj_delta(N=N)
    rep = uniformiser_and_checks(build_delta_d(A, A.f1, d))
    assert rep.passed and rep.quotient_dim == rep.expected_quotient_dim
    assert rep.quotient_dim % d == 0


@pytest.mark.parametrize("d", [1, 2, 3])
def test_uniformiser_is_normal_with_radical_generated(d):
    T = build_delta_d(dvr(N=4), S_, d)
    assert is_normal_with_uniformiser(T, T.uniformiser())


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_simples_cycle_dvr(d):
    T = build_delta_d(dvr(q=5, N=4), S_, d)
    simples, perm = simples_with_action(T, T.uniformiser())
    assert len(simples) == d and cycle_type(perm) == [d]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_simples_cycle_symbol(d):
    A = symbol(7, 2, "u", "3")
    T = build_delta_d(A, A.x, d)
    simples, perm = simples_with_action(T, T.uniformiser())
    assert len(simples) == d and cycle_type(perm) == [d]
    assert all(s.center_degree == 2 for s in simples)


def test_central_nilpotent_quotient_d1():
    T = build_delta_d(dvr(N=4), S_, 1)
    I = central_nilpotent_ideal(T)
    assert is_hereditary_finite(quotient(T, I).algebra)


@pytest.mark.parametrize("d", [2, 3])
def test_central_nilpotent_quotient_counterexample(d):
    # For d ≥ 2, Δ_d/(central nilpotents) still carries the cyclic quiver with
    # zero relations ab = ba = 0, which is not hereditary. Pinned as a known gap.
    T = build_delta_d(dvr(N=4), S_, d)
    assert is_normal_with_uniformiser(T, T.uniformiser())
    Q = quotient(T, central_nilpotent_ideal(T)).algebra
    assert Q.dim == d * d
    assert not is_hereditary_finite(Q)


def test_hom_examples():
    assert hom_table(2, 0, 0) == (0, "Δ")
    assert hom_table(2, 1, 0) == (0, "Δ")
    assert hom_table(2, 0, 1) == (1, "rad Δ")


@pytest.mark.parametrize("d", range(1, 7))
def test_hom_table_matches_closed_form(d):
    for i in range(2 * d):
        for j in range(2 * d):
            expected = hom_closed_form(d, i, j)
            if expected is not None:
                assert hom_table(d, i, j)[1] == expected


@given(st.integers(1, 6), st.integers(0, 20))
def test_t_power_d_is_pi(d, i):
    P = ValuationLattice.projective(d).times_t_power(i)
    assert P.times_t_power(d).vals == tuple(a + 1 for a in P.vals)


@pytest.mark.parametrize("d,r,algebra", [
    (2, 1, lambda: dvr(q=3, N=1)),
    (3, 1, lambda: dvr(q=3, N=1)),
    (2, 2, lambda: matrix_algebra(field(2), 2)),
])
def test_flag_projectives(d, r, algebra):
    rep = flags_and_projectives(algebra(), d)
    assert rep.r == r
    assert rep.classes == expected_projective_classes(d, r) == comb(d + r - 1, r)
    assert rep.tops_have_r_simples
    if r == 1:
        assert rep.all_local and len(rep.flags) == d
    else:
        assert rep.note


def test_flag_budget():
    big = matrix_algebra(field(3), 9)
    with pytest.raises(OrderError):
        flags_and_projectives(big, 2)


def test_sample_points():
    assert sample_points(field(7)) == [1, 2, 3, 4, 5, 6]
    pts = sample_points(field(25), seed=1)
    assert len(pts) == 16 and pts == sample_points(field(25), seed=1)


def test_assumption_no_secondary():
    rep = verify_assumption(no_secondary_setup(symbol(7, 3, "u", "3")))
    assert rep.passed, rep


def test_assumption_with_secondary():
    rep = verify_assumption(with_secondary_setup(symbol(7, 3, "2*u", "3*v", N=4)))
    assert rep.passed, rep


def test_assumption_hj():
    rep = verify_assumption(hj_setup(hj_delta()))
    assert rep.passed, rep
    assert "dim 3" in rep.hereditary.detail


def test_assumption_fails_for_wrong_prime():
    # z = u instead of v: the v-prime does not kill Δ/uΔ and the chain quotient keeps v nilpotent
    good = no_secondary_setup(symbol(7, 3, "u", "3"))
    bad = AssumptionSetup(good.algebra, good.algebra.element("u"), good.support, good.transversal,
                          good.chain, good.specialize)
    rep = verify_assumption(bad)
    assert not rep.support.passed and not rep.hereditary.passed
    assert rep.radical.passed


def test_setup_shape_errors():
    with pytest.raises(OrderError):
        no_secondary_setup(symbol(7, 3, "u^2", "3"))
    with pytest.raises(OrderError):
        with_secondary_setup(symbol(7, 3, "u", "3"))
