"""Exact special numbers: Bernoulli numbers, even zeta values, all-ones correction.

Everything here is exact rational arithmetic; pi appears only as a formal
even power carried by :class:`PiTerm`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .harmonic import as_composition

__all__ = ["PiTerm", "bernoulli", "delta", "even_zeta"]


@dataclass(frozen=True)
class PiTerm:
    """An exact rational multiple of an even power of pi."""

    coeff: Fraction
    pi_exp: int = 0

    def __post_init__(self):
        if not isinstance(self.coeff, Fraction):
            object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.pi_exp < 0 or self.pi_exp % 2:
            raise ValueError(f"pi exponent must be even and >= 0, got {self.pi_exp}")

    @classmethod
    def zero(cls) -> "PiTerm":
        return cls(Fraction(0), 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeff

    def __add__(self, other: "PiTerm") -> "PiTerm":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.pi_exp != other.pi_exp:
            raise ValueError("cannot add PiTerms with different pi exponents")
        return PiTerm(self.coeff + other.coeff, self.pi_exp)

    def __mul__(self, other):
        if isinstance(other, PiTerm):
            c = self.coeff * other.coeff
            return PiTerm(c, self.pi_exp + other.pi_exp) if c else PiTerm.zero()
        c = self.coeff * Fraction(other)
        return PiTerm(c, self.pi_exp) if c else PiTerm.zero()

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self) -> "PiTerm":
        return PiTerm(-self.coeff, self.pi_exp)

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        if self.pi_exp == 0:
            return f"{self.coeff}"
        return f"({self.coeff})*pi^{self.pi_exp}"


_BERNOULLI: list = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), memoized.

    Uses the defining recurrence sum_{k=0..n} C(n+1, k) B_k = 0.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            s = sum(comb(m + 1, k) * _BERNOULLI[k] for k in range(m))
            _BERNOULLI.append(Fraction(-s, m + 1))
    return _BERNOULLI[n]


def even_zeta(m: int) -> PiTerm:
    """zeta(2m) as an exact rational multiple of pi^(2m).

    The coefficient is (-1)^(m+1) * 2^(2m) * B_{2m} / (2 * (2m)!).
    """
    if m < 1:
        raise ValueError("even zeta index must be >= 1")
    sign = 1 if m % 2 else -1
    coeff = Fraction(sign * 4**m, 2 * factorial(2 * m)) * bernoulli(2 * m)
    return PiTerm(coeff, 2 * m)


def delta(c) -> PiTerm:
    """All-ones correction term: (-1)^n pi^(2n) / (2n)! when the index is
    2n ones (n >= 0, the empty index included), and 0 otherwise."""
    c = as_composition(c)
    if len(c) % 2 or any(k != 1 for k in c):
        return PiTerm.zero()
    n = len(c) // 2
    sign = -1 if n % 2 else 1
    return PiTerm(Fraction(sign, factorial(2 * n)), 2 * n)
