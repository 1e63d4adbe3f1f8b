"""Monotangents and multitangents: closed forms, direct sums, regularization."""

import pytest
from mpmath import mp

from mzvparity import (
    DomainError,
    eval_monotangent,
    eval_multitangent_direct,
    eval_multitangent_regularized,
    monotangent_symmetric_oracle,
    multitangent_regularized_series,
    PrecisionContext,
)


def test_monotangent_closed_values(ctx30):
    with mp.workdps(ctx30.working_dps + 5):
        v1 = eval_monotangent(1, mp.mpf("0.25"), ctx30)
        assert abs(v1.value - mp.pi) < mp.mpf(10) ** -35
        v2 = eval_monotangent(2, mp.mpf("0.5"), ctx30)
        assert abs(v2.value - mp.pi**2) < mp.mpf(10) ** -35


def test_monotangent_vs_symmetric_series(ctx30):
    for s in range(2, 7):
        for z in (mp.mpf("0.3"), mp.mpf("0.45"), mp.mpc("0.25", "0.2")):
            closed = eval_monotangent(s, z, ctx30)
            series = monotangent_symmetric_oracle(s, complex(z), cutoff=20_000)
            assert abs(closed.value - series.value) < 1e-8, (s, z)
            assert abs(closed.value - series.value) < series.bound + 1e-12


def test_monotangent_rejects_integers(ctx30):
    with pytest.raises(DomainError):
        eval_monotangent(2, 1, ctx30)
    with pytest.raises(DomainError):
        eval_monotangent(1, mp.mpf(-3), ctx30)
    with pytest.raises(ValueError):
        eval_monotangent(0, mp.mpf("0.3"), ctx30)


def test_depth_one_multitangent_is_monotangent(ctx30):
    for k in (2, 3, 4, 5, 6):
        for z in (mp.mpf("0.3"), mp.mpf("0.5"), mp.mpc("0.25", "0.2")):
            reg = eval_multitangent_regularized((k,), z, 0, ctx30)
            mono = eval_monotangent(k, z, ctx30)
            assert abs(reg.value - mono.value) < mp.mpf(10) ** -20, (k, z)


def test_multitangent_direct_cross_checks(ctx30):
    z = mp.mpf("0.3")
    d = eval_multitangent_direct((2, 2), z, ctx30, cutoff=100_000)
    r = eval_multitangent_regularized((2, 2), z, 0, ctx30)
    assert abs(d.value - r.value) < d.bound
    assert abs(d.value - r.value) < 1e-3
    zc = mp.mpc("0.25", "0.2")
    d33 = eval_multitangent_direct((3, 3), zc, ctx30, cutoff=100_000)
    r33 = eval_multitangent_regularized((3, 3), zc, 0, ctx30)
    assert abs(d33.value - r33.value) < 1e-6
    assert abs(d33.value - r33.value) < d33.bound


def test_multitangent_direct_preconditions(ctx30):
    with pytest.raises(DomainError):
        eval_multitangent_direct((1, 2), 0.3, ctx30)
    with pytest.raises(DomainError):
        eval_multitangent_direct((2, 1), 0.3, ctx30)
    with pytest.raises(DomainError):
        eval_multitangent_direct((2, 2), 2, ctx30)


def test_multitangent_regularized_domain(ctx30):
    with pytest.raises(DomainError):
        eval_multitangent_regularized((2,), 0, 0, ctx30)
    with pytest.raises(DomainError):
        eval_multitangent_regularized((2,), mp.mpf("0.75"), 0, ctx30)
    with pytest.raises(ValueError):
        eval_multitangent_regularized((), mp.mpf("0.3"), 0, ctx30)


def test_regularized_matches_literal_series():
    ctx = PrecisionContext(digits=12, guard_digits=10)
    z = mp.mpf("0.3")
    for c in [(2,), (1, 2), (2, 1)]:
        prod = eval_multitangent_regularized(c, z, 0, ctx)
        lit = multitangent_regularized_series(c, z, 0, ctx, order=22)
        assert abs(prod.value - lit.value) < lit.bound + mp.mpf(10) ** -8, c


def test_t_dependence_structure(ctx30):
    """T cancels when the ends converge; otherwise the T-slope is explicit.

    With first and last part >= 2 the regularized multitangent equals the
    honest doubly infinite sum, so its value cannot depend on T.  For
    (1, k) the expansion carries the single T-word at the reversed head,
    and the T-slope works out to -Psi_k(z); check both statements.
    """
    z = mp.mpf("0.3")
    with mp.workdps(ctx30.working_dps + 5):
        conv0 = eval_multitangent_regularized((2, 2), z, 0, ctx30)
        conv1 = eval_multitangent_regularized((2, 2), z, 1, ctx30)
        assert abs(conv0.value - conv1.value) < mp.mpf(10) ** -20

        for k in (2, 3):
            v0 = eval_multitangent_regularized((1, k), z, 0, ctx30)
            v1 = eval_multitangent_regularized((1, k), z, 1, ctx30)
            slope = v1.value - v0.value
            mono = eval_monotangent(k, z, ctx30)
            assert abs(slope + mono.value) < mp.mpf(10) ** -20, k
