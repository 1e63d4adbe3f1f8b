"""Verification harness: single identities, sweeps, report semantics."""

import pytest
from mpmath import mp

from mzvparity import (
    IDENTITIES,
    ResidualReport,
    VerificationFailure,
    eval_admissible_mzv,
    sweep,
    verify_bouillot,
    verify_fund_eq2,
    verify_main,
    verify_main2,
    verify_main3,
    weight,
)


def test_fund_eq2_cases(ctx30):
    assert verify_fund_eq2((2,), ctx30).passed
    assert verify_fund_eq2((1,), ctx30, T_value=0).passed
    assert verify_fund_eq2((1,), ctx30, T_value=1).passed
    assert verify_fund_eq2((1, 1), ctx30).passed
    assert verify_fund_eq2((2, 3), ctx30, T_value=1).passed


def test_main_euler_cases(ctx30):
    rep = verify_main((1, 2), ctx30)
    assert rep.passed
    z3 = eval_admissible_mzv((3,), ctx30).value
    assert abs(rep.rhs - z3) < mp.mpf(10) ** -30
    rep2 = verify_main((2,), ctx30)
    assert rep2.passed
    with mp.workdps(40):
        assert abs(rep2.rhs - mp.pi**2 / 6) < mp.mpf(10) ** -30


def test_main_skips_are_first_class(ctx30):
    rep = verify_main((2, 2), ctx30)
    assert rep.skipped and rep.status == "skip"
    assert "parity" in rep.reason
    rep2 = verify_main((2, 1), ctx30)
    assert rep2.skipped
    assert "admissible" in rep2.reason


def test_main_residual_t_invariant(ctx30):
    # the reduction is T-free, so its value cannot move with T
    from mzvparity import eval_pigraded, reduce_main

    red = reduce_main((1, 1, 4)).expanded
    v0 = eval_pigraded(red, 0, ctx30).value
    v1 = eval_pigraded(red, 1, ctx30).value
    assert abs(v0 - v1) < mp.mpf(10) ** (-ctx30.digits + 5)


def test_main2_and_main3(ctx30):
    assert verify_main2((1, 1, 1), ctx30).passed
    assert verify_main2((2, 1), ctx30).passed
    assert verify_main3((2, 1), ctx30).passed
    assert verify_main3((1, 1, 2, 1), ctx30).passed
    assert verify_main3((2, 2), ctx30).skipped


def test_bouillot_cases(ctx30):
    z = mp.mpf("0.3")
    rep = verify_bouillot((2,), z, ctx30)
    assert rep.passed and rep.residual < mp.mpf(10) ** -20
    rep11 = verify_bouillot((1, 1), mp.mpc("0.25", "0.2"), ctx30)
    assert rep11.passed
    rep33 = verify_bouillot((3, 3), z, ctx30)
    assert rep33.passed
    for T in (0, 1):
        assert verify_bouillot((1, 2), z, ctx30, T_value=T).passed


def test_sweep_empty_and_order(ctx30):
    assert sweep(0, "main", ctx30) == []
    reps = sweep(3, "main", ctx30)
    comps = [r.composition for r in reps]
    assert comps == [(1,), (1, 1), (2,), (1, 1, 1), (1, 2), (2, 1), (3,)]
    weights = [weight(c) for c in comps]
    assert weights == sorted(weights)


def test_sweep_statuses(ctx30):
    reps = sweep(4, "main", ctx30)
    by_status = {s: [r for r in reps if r.status == s] for s in ("pass", "fail", "skip")}
    assert not by_status["fail"]
    assert by_status["pass"]
    assert by_status["skip"]
    ran = sweep(4, "main", ctx30, include_skipped=False)
    assert all(not r.skipped for r in ran)


def test_sweep_requires_z_for_bouillot(ctx30):
    from mzvparity import DomainError

    with pytest.raises(DomainError):
        sweep(2, "bouillot", ctx30)


def test_sweep_unknown_identity(ctx30):
    with pytest.raises(ValueError):
        sweep(2, "nonsense", ctx30)


def test_pass_iff_residual_below_bound(ctx30):
    reps = sweep(5, "main2", ctx30)
    for r in reps:
        assert r.passed == (r.residual <= r.bound)


def test_fail_fast_raises(ctx30, monkeypatch):
    def always_fail(c, ctx, T_values=(0, 1)):
        return ResidualReport(
            identity="main2",
            composition=c,
            digits=ctx.digits,
            residual=mp.mpf(1),
            bound=ctx.residual_bound(),
            status="fail",
            lhs=mp.mpf(1),
            rhs=mp.mpf(0),
        )

    monkeypatch.setitem(IDENTITIES, "main2", always_fail)
    with pytest.raises(VerificationFailure) as err:
        sweep(2, "main2", ctx30, fail_fast=True)
    assert err.value.report.composition == (1,)


def test_reports_reproducible(ctx30):
    a = verify_fund_eq2((2, 3), ctx30)
    b = verify_fund_eq2((2, 3), ctx30)
    assert a.residual == b.residual
    assert a.lhs == b.lhs and a.rhs == b.rhs


def test_describe_formats(ctx30):
    rep = verify_main((1, 2), ctx30)
    text = rep.describe()
    assert "PASS" in text and "(1,2)" in text
    skip = verify_main((2, 2), ctx30)
    assert skip.describe().startswith("SKIP")
