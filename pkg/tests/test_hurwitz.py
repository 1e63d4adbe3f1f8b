"""Hurwitz multiple zeta values: direct, Taylor, and regularized routes."""

import pytest
from mpmath import mp

from mzvparity import (
    DomainError,
    NonAdmissibleError,
    eval_admissible_mzv,
    eval_hurwitz_direct,
    eval_hurwitz_star,
    eval_hurwitz_taylor,
    eval_shifted,
    eval_tpoly,
    regularize,
    shift_expand,
    tau_series,
    tau_value,
)


def test_direct_at_zero_matches_plain_mzv(ctx30):
    for c in [(2,), (3,), (1, 2), (2, 3), (1, 1, 2)]:
        h = eval_hurwitz_direct(c, 0, ctx30)
        m = eval_admissible_mzv(c, ctx30)
        assert abs(h.value - m.value) < mp.mpf(10) ** (-ctx30.working_dps + 4), c


def test_direct_depth_one_matches_hurwitz_zeta(ctx30):
    with mp.workdps(ctx30.working_dps + 10):
        for z in (mp.mpf("0.3"), mp.mpf("-0.4"), mp.mpc("0.25", "0.2"), mp.mpc(2, 5)):
            for k in (2, 3, 5):
                h = eval_hurwitz_direct((k,), z, ctx30)
                ref = mp.zeta(k, 1 + z)
                assert abs(h.value - ref) < mp.mpf(10) ** (-ctx30.working_dps + 4)


def test_direct_empty_index_is_one(ctx30):
    assert eval_hurwitz_direct((), mp.mpf("0.3"), ctx30).value == 1


def test_direct_rejects_divergent_and_poles(ctx30):
    with pytest.raises(NonAdmissibleError):
        eval_hurwitz_direct((2, 1), 0.3, ctx30)
    with pytest.raises(DomainError):
        eval_hurwitz_direct((2,), -2, ctx30)


def test_taylor_matches_direct_real(ctx10):
    z = mp.mpf("0.3")
    ty = eval_hurwitz_taylor((2,), z, ctx10)
    hd = eval_hurwitz_direct((2,), z, ctx10)
    assert abs(ty.value - hd.value) < mp.mpf(10) ** -8
    assert abs(ty.value - hd.value) < ty.bound + hd.bound


def test_taylor_matches_direct_complex(ctx10):
    z = mp.mpc("0.25", "0.2")
    ty = eval_hurwitz_taylor((1, 3), z, ctx10)
    hd = eval_hurwitz_direct((1, 3), z, ctx10)
    assert abs(ty.value - hd.value) < mp.mpf(10) ** -6


def test_taylor_at_zero_is_order_zero_coefficient(ctx30):
    v = eval_hurwitz_taylor((2,), 0, ctx30)
    m = eval_admissible_mzv((2,), ctx30)
    assert abs(v.value - m.value) < mp.mpf(10) ** -25


def test_taylor_preconditions(ctx10):
    with pytest.raises(DomainError):
        eval_hurwitz_taylor((2,), mp.mpf("0.7"), ctx10)
    with pytest.raises(NonAdmissibleError):
        eval_hurwitz_taylor((2, 1), mp.mpf("0.3"), ctx10)  # needs T
    # with T supplied the divergent index is fine
    v = eval_hurwitz_taylor((2, 1), mp.mpf("0.3"), ctx10, T_value=0)
    assert v.value != 0


def test_star_equals_direct_on_admissible(ctx30):
    z = mp.mpc("0.25", "0.2")
    s = eval_hurwitz_star((1, 3), z, 0, ctx30)
    d = eval_hurwitz_direct((1, 3), z, ctx30)
    assert abs(s.value - d.value) < mp.mpf(10) ** (-ctx30.digits)


def test_star_matches_literal_taylor_on_divergent(ctx10):
    # the homomorphism route must agree with the term-by-term Taylor sum
    z = mp.mpf("0.3")
    for T in (0, 1):
        s = eval_hurwitz_star((2, 1), z, T, ctx10)
        t = eval_hurwitz_taylor((2, 1), z, ctx10, T_value=T)
        assert abs(s.value - t.value) < mp.mpf(10) ** -8, T


def test_star_radius_enforced(ctx10):
    with pytest.raises(DomainError):
        eval_hurwitz_star((2,), mp.mpf("0.8"), 0, ctx10)


def test_tau_series_matches_digamma(ctx30):
    for z in (mp.mpf("0.3"), mp.mpc("0.25", "0.2"), mp.mpf("-0.45")):
        tv = tau_value(z, 0, ctx30)
        ts = tau_series(z, 0, ctx30)
        assert abs(tv - ts.value) < mp.mpf(10) ** (-ctx30.working_dps + 2)
    assert tau_value(0, 5, ctx30) == 5


def test_shifted_value_finite_difference_oracle(ctx30):
    # shift order 1 is the z-derivative of the shifted nested sum at z = 0
    with mp.workdps(60):
        h = mp.mpf(10) ** -15
        for c in [(2,), (1, 2)]:
            plus = eval_hurwitz_direct(c, h, ctx30).value
            minus = eval_hurwitz_direct(c, -h, ctx30).value
            derivative = (plus - minus) / (2 * h)
            symbolic = eval_shifted(c, 1, 0, ctx30).value
            assert abs(derivative - symbolic) < mp.mpf(10) ** -25, c


def test_shifted_value_is_regularized_shift_expansion(ctx30):
    v1 = eval_shifted((1, 2), 2, 0, ctx30).value
    v2 = eval_tpoly(regularize(shift_expand(2, (1, 2))), 0, ctx30).value
    assert v1 == v2
