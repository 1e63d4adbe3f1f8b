"""Monotangent and multitangent functions.

Monotangents are the doubly infinite depth-1 sums sum_{m in Z} (z+m)^(-s);
they have closed forms as polynomials in cot(pi z).  Multitangents are the
doubly infinite nested sums; the direct evaluator truncates them
symmetrically, while the regularized evaluator splits the summation chain
at the sign change and assembles the value from regularized Hurwitz
generating values at z and -z.
"""

from __future__ import annotations

from fractions import Fraction
from math import log
from typing import Optional

import numpy as np
from mpmath import mp

from .errors import DomainError
from .harmonic import as_composition
from .hurwitz import eval_hurwitz_star, eval_shifted, _normalize_z
from .precision import Approx, PrecisionContext

__all__ = [
    "eval_monotangent",
    "eval_multitangent_direct",
    "eval_multitangent_regularized",
    "monotangent_symmetric_oracle",
    "multitangent_regularized_series",
]


_MONO_POLYS: list = [None, (Fraction(0), Fraction(1))]  # Q_1(x) = x


def _mono_poly(s: int) -> tuple:
    """Coefficients of Q_s with Psi_s(z) = pi^s Q_s(cot(pi z)).

    Recursion via Psi_{s+1} = -(1/s) dPsi_s/dz and (cot)' = -pi (1+cot^2):
    Q_{s+1}(x) = Q_s'(x) (1+x^2) / s.
    """
    while len(_MONO_POLYS) <= s:
        prev = _MONO_POLYS[-1]
        n = len(_MONO_POLYS) - 1  # prev is Q_n
        dq = tuple(prev[i + 1] * (i + 1) for i in range(len(prev) - 1))
        nxt = [Fraction(0)] * (len(dq) + 2)
        for i, ci in enumerate(dq):
            nxt[i] += ci
            nxt[i + 2] += ci
        _MONO_POLYS.append(tuple(x / n for x in nxt))
    return _MONO_POLYS[s]


def _reject_integer_z(zv, wp: int) -> None:
    if (not isinstance(zv, mp.mpc)) or zv.imag == 0:
        zr = zv.real if isinstance(zv, mp.mpc) else zv
        if abs(zr - mp.nint(zr)) < mp.mpf(10) ** (-(wp - 5)):
            raise DomainError("multitangent functions have poles at integer z")


def eval_monotangent(s: int, z, ctx: PrecisionContext) -> Approx:
    """Psi_s(z) = sum_{m in Z} (z+m)^(-s) via the cotangent closed form.

    For s = 1 the symmetric (Eisenstein) summation pi*cot(pi z) is used.
    """
    if s < 1:
        raise ValueError("monotangent order must be >= 1")
    wp = ctx.working_dps + 10
    zv = _normalize_z(z, wp)
    with mp.workdps(wp):
        _reject_integer_z(zv, wp)
        x = mp.cot(mp.pi * zv)
        poly = _mono_poly(s)
        acc = mp.mpf(0)
        for ci in reversed(poly):
            acc = acc * x + mp.mpf(ci.numerator) / ci.denominator
        val = mp.pi**s * acc
        return Approx(val, mp.mpf(10) ** (-(wp - 6)) * (1 + abs(val)))


def monotangent_symmetric_oracle(s: int, z, cutoff: int = 100_000) -> Approx:
    """Symmetric partial sums of Psi_s plus midpoint-integral tail estimates.

    Convergent for s >= 2; float64 precision, intended as an independent
    cross-check of the closed form.
    """
    if s < 2:
        raise ValueError("the symmetric series oracle needs s >= 2")
    zc = complex(z)
    if abs(zc.imag) == 0 and abs(zc.real - round(zc.real)) < 1e-12:
        raise DomainError("multitangent functions have poles at integer z")
    M = cutoff
    m = np.arange(-M, M + 1, dtype=np.float64)
    vals = (zc + m) ** (-s)
    total = complex(np.sum(vals))
    # one-sided tails by the midpoint rule
    total += (zc + M + 0.5) ** (1 - s) / (s - 1)
    total += (-1) ** s * (M + 0.5 - zc) ** (1 - s) / (s - 1)
    err = s / 12.0 * (M - abs(zc)) ** (-s - 1) * 2 + 5e-13 * abs(zc) ** (-s)
    return Approx(mp.mpmathify(total), mp.mpf(err))


def eval_multitangent_direct(
    c, z, ctx: PrecisionContext, cutoff: Optional[int] = None
) -> Approx:
    """Truncated doubly infinite nested sum over -M <= m_1 < ... < m_d <= M.

    Requires first and last part >= 2 (absolute convergence).  float64
    precision with a stated O(M^(1-min(k_1,k_d))) tail estimate; intended
    for low-precision cross-checks only.
    """
    c = as_composition(c)
    if not c or c[0] < 2 or c[-1] < 2:
        raise DomainError(
            "direct multitangent sums need first and last part >= 2"
        )
    zc = complex(z)
    if abs(zc.imag) == 0 and abs(zc.real - round(zc.real)) < 1e-12:
        raise DomainError("multitangent functions have poles at integer z")
    M = cutoff if cutoff is not None else ctx.multitangent_cutoff
    d = len(c)
    m = np.arange(-M, M + 1, dtype=np.float64)
    prev = np.ones(m.shape, dtype=np.complex128)
    for k in c:
        term = np.empty_like(prev)
        term[0] = 0.0
        term[1:] = (zc + m[1:]) ** (-k) * prev[:-1]
        # prev held the chain count ending strictly before the current index
        prev = np.cumsum(term)
    value = complex(prev[-1])

    # Chains escape past +-M through the first or the last slot; the
    # complementary chain factor is estimated by the full one-slot sums,
    # which can be as large as |z|^(-k) near m = 0 plus a log factor for
    # slots with exponent 1.
    logf = 4.0 * log(2 * M + 1)
    zabs = abs(zc)

    def _side_estimate(k_escape: int, others: tuple) -> float:
        prod = 1.0
        for k in others:
            prod *= zabs ** (-k) + logf
        return (M - zabs) ** (1 - k_escape) / (k_escape - 1) * prod

    est = _side_estimate(c[0], c[1:]) + _side_estimate(c[-1], c[:-1])
    fp = 1e-11 * (1 + abs(value))
    return Approx(mp.mpmathify(value), mp.mpf(est + fp))


def eval_multitangent_regularized(c, z, T_value, ctx: PrecisionContext) -> Approx:
    """Regularized multitangent via the split-at-zero decomposition.

    Splits the summation chain at the sign change: negative indices give a
    reversed-index generating value at -z, positive indices one at z, and
    a chain passing through a single gap contributes z^(-k_j).  All factors
    are regularized Hurwitz generating values, so no admissibility is
    required; defined for 0 < |z| <= 1/2.
    """
    c = as_composition(c)
    if not c:
        raise ValueError("multitangent needs a nonempty index")
    wp = ctx.working_dps + 10
    zv = _normalize_z(z, wp)
    with mp.workdps(wp):
        zabs = abs(zv)
        if zabs == 0:
            raise DomainError("z = 0 is a pole of the multitangent")
        if zabs > mp.mpf("0.5") * (1 + mp.mpf(10) ** -12):
            raise DomainError("regularized multitangents are evaluated for 0 < |z| <= 1/2")
        d = len(c)
        prefix = [0] * (d + 1)
        for i in range(d):
            prefix[i + 1] = prefix[i] + c[i]
        total = mp.mpc(0)
        bound = mp.mpf(0)
        for i in range(d + 1):
            sign = -1 if prefix[i] % 2 else 1
            left = eval_hurwitz_star(c[:i][::-1], -zv, T_value, ctx)
            right = eval_hurwitz_star(c[i:], zv, T_value, ctx)
            total += sign * left.value * right.value
            bound += abs(left.value) * right.bound + abs(right.value) * left.bound
        for j in range(1, d + 1):
            sign = -1 if prefix[j - 1] % 2 else 1
            left = eval_hurwitz_star(c[: j - 1][::-1], -zv, T_value, ctx)
            right = eval_hurwitz_star(c[j:], zv, T_value, ctx)
            gap = zv ** (-c[j - 1])
            total += sign * left.value * right.value * gap
            bound += abs(gap) * (
                abs(left.value) * right.bound + abs(right.value) * left.bound
            )
        if (not isinstance(total, mp.mpc)) or total.imag == 0:
            total = total.real if isinstance(total, mp.mpc) else total
        return Approx(total, bound + mp.mpf(10) ** (-(wp - 8)))


def multitangent_regularized_series(
    c, z, T_value, ctx: PrecisionContext, order: int = 16
) -> Approx:
    """Literal truncated double-sum form of the regularized multitangent.

    Sums z^(a+b) (and z^(a+b-k_j) for the gap terms) against numeric shifted
    values, truncated at a + b <= order with a geometric tail estimate.
    Slow; used to cross-check the production evaluator on small indices.
    """
    c = as_composition(c)
    if not c:
        raise ValueError("multitangent needs a nonempty index")
    wp = ctx.working_dps + 6
    zv = _normalize_z(z, wp)
    with mp.workdps(wp):
        zabs = abs(zv)
        if zabs == 0 or zabs > mp.mpf("0.5") * (1 + mp.mpf(10) ** -12):
            raise DomainError("the series form is evaluated for 0 < |z| <= 1/2")
        d = len(c)
        prefix = [0] * (d + 1)
        for i in range(d):
            prefix[i + 1] = prefix[i] + c[i]
        total = mp.mpc(0)
        max_coeff = mp.mpf(1)
        for j in range(d + 1):
            rev_head = c[:j][::-1]
            tail = c[j:]
            base_sign = -1 if prefix[j] % 2 else 1
            for a in range(order + 1):
                va = eval_shifted(rev_head, a, T_value, ctx)
                if va.value == 0:
                    continue
                for b in range(order + 1 - a):
                    vb = eval_shifted(tail, b, T_value, ctx)
                    if vb.value == 0:
                        continue
                    sign = base_sign if a % 2 == 0 else -base_sign
                    total += sign * zv ** (a + b) * va.value * vb.value
                    max_coeff = max(max_coeff, abs(va.value * vb.value))
        for j in range(1, d + 1):
            rev_head = c[: j - 1][::-1]
            tail = c[j:]
            base_sign = -1 if prefix[j - 1] % 2 else 1
            for a in range(order + 1):
                va = eval_shifted(rev_head, a, T_value, ctx)
                if va.value == 0:
                    continue
                for b in range(order + 1 - a):
                    vb = eval_shifted(tail, b, T_value, ctx)
                    if vb.value == 0:
                        continue
                    sign = base_sign if a % 2 == 0 else -base_sign
                    total += sign * zv ** (a + b - c[j - 1]) * va.value * vb.value
                    max_coeff = max(max_coeff, abs(va.value * vb.value))
        tail_est = 4 * max_coeff * (order + 2) * zabs ** (order + 1) / (1 - zabs)
        if (not isinstance(total, mp.mpc)) or total.imag == 0:
            total = total.real if isinstance(total, mp.mpc) else total
        return Approx(total, tail_est)
