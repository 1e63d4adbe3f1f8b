"""Residual verification of every identity, single cases and weight sweeps.

Each verifier evaluates both sides of one identity numerically at working
precision and reports the residual against the tolerance
10^-(digits - 5).  Precondition violations are reported as skipped
entries, never silently dropped, so sweeps document their coverage.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import factorial
from typing import Callable, Optional

from mpmath import mp

from .errors import DomainError
from .harmonic import (
    Composition,
    WordCombo,
    as_composition,
    compositions_up_to,
    depth,
    is_admissible,
    stuffle,
    weight,
)
from .hurwitz import eval_shifted
from .multitangent import (
    eval_monotangent,
    eval_multitangent_direct,
    eval_multitangent_regularized,
)
from .mzv import eval_admissible_mzv, eval_pigraded, eval_tpoly
from .precision import PrecisionContext
from .reduction import (
    build_main2_identity,
    expand_depth_certificate,
    reduce_main,
    reduce_main3,
)
from .regularization import regularize
from .special import bernoulli, delta

__all__ = [
    "IDENTITIES",
    "ResidualReport",
    "VerificationFailure",
    "sweep",
    "verify_bouillot",
    "verify_fund_eq2",
    "verify_main",
    "verify_main2",
    "verify_main3",
]


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of one identity check at one evaluation point."""

    identity: str
    composition: Composition
    digits: int
    residual: object  # mpf, 0 for skipped entries
    bound: object
    status: str  # "pass" | "fail" | "skip"
    reason: Optional[str] = None
    z: object = None
    T: object = None
    lhs: object = None
    rhs: object = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def skipped(self) -> bool:
        return self.status == "skip"

    def describe(self) -> str:
        comp = ",".join(str(k) for k in self.composition)
        head = f"{self.identity:9s} ({comp})"
        if self.status == "skip":
            return f"SKIP {head}: {self.reason}"
        res = mp.nstr(self.residual, 3)
        bnd = mp.nstr(self.bound, 3)
        tag = "PASS" if self.status == "pass" else "FAIL"
        extra = ""
        if self.z is not None:
            extra += f" z={mp.nstr(mp.mpmathify(self.z), 8)}"
        if self.T is not None:
            extra += f" T={self.T}"
        return f"{tag} {head}{extra}: residual {res} (bound {bnd}, {self.wall_time:.2f}s)"


class VerificationFailure(AssertionError):
    """Raised by fail-fast sweeps; carries the offending report."""

    def __init__(self, report: ResidualReport):
        self.report = report
        detail = (
            f"{report.describe()}\n  lhs = {report.lhs}\n  rhs = {report.rhs}"
        )
        super().__init__(detail)


def _finish(
    identity: str,
    c: Composition,
    ctx: PrecisionContext,
    residual,
    lhs,
    rhs,
    t0: float,
    z=None,
    T=None,
    extra_ok: bool = True,
    reason: Optional[str] = None,
) -> ResidualReport:
    bound = ctx.residual_bound()
    ok = bool(residual <= bound) and extra_ok
    return ResidualReport(
        identity=identity,
        composition=c,
        digits=ctx.digits,
        residual=residual,
        bound=bound,
        status="pass" if ok else "fail",
        reason=reason if not ok else None,
        z=z,
        T=T,
        lhs=lhs,
        rhs=rhs,
        wall_time=time.time() - t0,
    )


def _skip(identity: str, c: Composition, ctx: PrecisionContext, reason: str) -> ResidualReport:
    return ResidualReport(
        identity=identity,
        composition=c,
        digits=ctx.digits,
        residual=mp.mpf(0),
        bound=ctx.residual_bound(),
        status="skip",
        reason=reason,
    )


def verify_fund_eq2(c, ctx: PrecisionContext, T_value=0) -> ResidualReport:
    """Residual of the reflection identity for the z^0 coefficient.

    LHS: sum_j (-1)^(k_{j+1}+...+k_d) (reversed head) * (tail), regularized.
    RHS: the all-ones correction plus the Bernoulli-weighted shifted-value
    sum over splits a + 2m + b = k_j.
    """
    c = as_composition(c)
    if not c:
        raise ValueError("the identity needs a nonempty composition")
    t0 = time.time()
    d = len(c)
    w = weight(c)
    prefix = [0] * (d + 1)
    for i in range(d):
        prefix[i + 1] = prefix[i] + c[i]
    with mp.workdps(ctx.working_dps + 5):
        pi = +mp.pi
        lhs = mp.mpf(0)
        for j in range(d + 1):
            sign = -1 if (w - prefix[j]) % 2 else 1
            prod = stuffle(WordCombo.word(c[:j][::-1]), WordCombo.word(c[j:]))
            lhs += sign * eval_tpoly(regularize(prod), T_value, ctx).value
        dl = delta(c)
        rhs = mp.mpf(0)
        if not dl.is_zero:
            rhs += mp.mpf(dl.coeff.numerator) / dl.coeff.denominator * pi**dl.pi_exp
        for j in range(1, d + 1):
            kj = c[j - 1]
            rev_head = c[: j - 1][::-1]
            tail = c[j:]
            tail_sign = -1 if (w - prefix[j]) % 2 else 1
            for a in range(kj + 1):
                va = eval_shifted(rev_head, a, T_value, ctx)
                if va.value == 0:
                    continue
                for b in range(kj - a + 1):
                    if (kj - a - b) % 2:
                        continue
                    m = (kj - a - b) // 2
                    vb = eval_shifted(tail, b, T_value, ctx)
                    if vb.value == 0:
                        continue
                    sign = tail_sign * (-1 if (b + m + 1) % 2 else 1)
                    bm = bernoulli(2 * m) / factorial(2 * m)
                    coeff = (
                        sign
                        * mp.mpf(bm.numerator)
                        / bm.denominator
                        * (2 * pi) ** (2 * m)
                    )
                    rhs += coeff * va.value * vb.value
        residual = abs(lhs - rhs)
    return _finish("fundeq2", c, ctx, residual, lhs, rhs, t0, T=T_value)


def verify_main2(c, ctx: PrecisionContext, T_values=(0, 1)) -> ResidualReport:
    """Residual of the star/plain alternating identity at each T value."""
    c = as_composition(c)
    t0 = time.time()
    expr = build_main2_identity(c)
    residual = mp.mpf(0)
    vals = []
    for T in T_values:
        v = eval_pigraded(expr, T, ctx)
        vals.append(v.value)
        residual = max(residual, abs(v.value))
    return _finish(
        "main2", c, ctx, residual, vals[0], mp.mpf(0), t0, T=tuple(T_values)
    )


def verify_main3(c, ctx: PrecisionContext, T_values=(0, 1)) -> ResidualReport:
    """Residual of the regularized reduction against the direct value."""
    c = as_composition(c)
    if weight(c) % 2 == depth(c) % 2:
        return _skip("main3", c, ctx, "weight and depth have the same parity")
    t0 = time.time()
    red = reduce_main3(c)
    tp = regularize(c)
    residual = mp.mpf(0)
    lhs = rhs = None
    for T in T_values:
        lhs = eval_tpoly(tp, T, ctx).value
        rhs = eval_pigraded(red.expanded, T, ctx).value
        residual = max(residual, abs(lhs - rhs))
    return _finish("main3", c, ctx, residual, lhs, rhs, t0, T=tuple(T_values))


def verify_main(c, ctx: PrecisionContext) -> ResidualReport:
    """Residual of the depth reduction for an admissible index.

    Also asserts the structural guarantees: the reduction is T-free and
    every expanded word has depth at most d-1.
    """
    c = as_composition(c)
    if not is_admissible(c):
        return _skip("main", c, ctx, "not admissible (last part must be >= 2)")
    if weight(c) % 2 == depth(c) % 2:
        return _skip("main", c, ctx, "weight and depth have the same parity")
    t0 = time.time()
    red = reduce_main(c)
    t_free = red.expanded.t_degree in (None, 0)
    cert = expand_depth_certificate(red.expanded, depth(c))
    lhs = eval_admissible_mzv(c, ctx).value
    rhs = eval_pigraded(red.expanded, 0, ctx).value
    residual = abs(lhs - rhs)
    reason = None
    if not t_free:
        reason = f"reduction has T-degree {red.expanded.t_degree}"
    elif not cert:
        reason = "depth certificate failed"
    return _finish(
        "main", c, ctx, residual, lhs, rhs, t0, extra_ok=t_free and cert, reason=reason
    )


def verify_bouillot(c, z, ctx: PrecisionContext, T_value=0) -> ResidualReport:
    """Residual of the monotangent reduction of the multitangent.

    LHS: the regularized multitangent.  RHS: the all-ones correction plus
    monotangents weighted by shifted values over splits a + s + b = k_j.
    For indices with first and last part >= 2 the LHS is additionally
    cross-checked against the truncated doubly infinite sum within its
    stated tail estimate.
    """
    c = as_composition(c)
    t0 = time.time()
    d = len(c)
    prefix = [0] * (d + 1)
    for i in range(d):
        prefix[i + 1] = prefix[i] + c[i]
    with mp.workdps(ctx.working_dps + 5):
        pi = +mp.pi
        lhs = eval_multitangent_regularized(c, z, T_value, ctx).value
        dl = delta(c)
        rhs = mp.mpf(0)
        if not dl.is_zero:
            rhs += mp.mpf(dl.coeff.numerator) / dl.coeff.denominator * pi**dl.pi_exp
        for j in range(1, d + 1):
            kj = c[j - 1]
            rev_head = c[: j - 1][::-1]
            tail = c[j:]
            head_sign = -1 if prefix[j - 1] % 2 else 1
            for a in range(kj):
                va = eval_shifted(rev_head, a, T_value, ctx)
                if va.value == 0:
                    continue
                sign = head_sign if a % 2 == 0 else -head_sign
                for s in range(1, kj - a + 1):
                    b = kj - a - s
                    vb = eval_shifted(tail, b, T_value, ctx)
                    if vb.value == 0:
                        continue
                    mono = eval_monotangent(s, z, ctx)
                    rhs += sign * va.value * vb.value * mono.value
        residual = abs(lhs - rhs)
        extra_ok = True
        reason = None
        if c[0] >= 2 and c[-1] >= 2:
            direct = eval_multitangent_direct(c, z, ctx)
            gap = abs(lhs - direct.value)
            if gap > direct.bound + ctx.residual_bound():
                extra_ok = False
                reason = (
                    f"direct-series cross-check off by {mp.nstr(gap, 3)} "
                    f"(tail estimate {mp.nstr(direct.bound, 3)})"
                )
    return _finish(
        "bouillot", c, ctx, residual, lhs, rhs, t0,
        z=z, T=T_value, extra_ok=extra_ok, reason=reason,
    )


def _dispatch(identity: str) -> Callable:
    try:
        return IDENTITIES[identity]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity!r}; choose from {sorted(IDENTITIES)}"
        ) from None


IDENTITIES = {
    "main": verify_main,
    "main2": verify_main2,
    "main3": verify_main3,
    "fundeq2": verify_fund_eq2,
    "bouillot": verify_bouillot,
}


def sweep(
    max_weight: int,
    identity: str,
    ctx: PrecisionContext,
    z=None,
    T_value=0,
    T_values=(0, 1),
    fail_fast: bool = False,
    include_skipped: bool = True,
    weight_cap: int = 12,
) -> list:
    """Run one identity over all compositions of weight 1..max_weight.

    Enumeration is deterministic (weight-major, then lexicographic).
    Skipped (precondition-violating) cases are reported as first-class
    entries unless ``include_skipped`` is false.  With ``fail_fast`` a
    failing report raises :class:`VerificationFailure` immediately.
    ``weight_cap`` guards against runaway sweeps (2^(w-1) cases per weight);
    raise it deliberately for bigger runs.
    """
    if max_weight > weight_cap:
        raise ValueError(
            f"max_weight {max_weight} exceeds the configured cap {weight_cap}"
        )
    verifier = _dispatch(identity)
    reports = []
    for c in compositions_up_to(max_weight):
        if identity == "main":
            rep = verifier(c, ctx)
        elif identity in ("main2", "main3"):
            rep = verifier(c, ctx, T_values=T_values)
        elif identity == "fundeq2":
            rep = verifier(c, ctx, T_value=T_value)
        else:  # bouillot
            if z is None:
                raise DomainError("the multitangent identity needs an evaluation point z")
            rep = verifier(c, z, ctx, T_value=T_value)
        if rep.skipped and not include_skipped:
            continue
        reports.append(rep)
        if fail_fast and rep.status == "fail":
            raise VerificationFailure(rep)
    return reports
