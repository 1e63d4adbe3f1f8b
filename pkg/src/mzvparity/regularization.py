"""Stuffle regularization: T-polynomials with admissible-word coefficients.

Divergent indices (trailing part 1) are rewritten as polynomials in the
formal symbol T, the regularized value of the single part (1), by peeling
trailing ones with the stuffle relation.  The map is the unique algebra
homomorphism from the harmonic algebra to ``(admissible span)[T]`` that is
the identity on admissible words and sends (1) to T.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .harmonic import (
    Composition,
    WordCombo,
    as_composition,
    is_admissible,
    star_expand,
    stuffle,
    _stuffle_words,
)

__all__ = ["TPoly", "antipode_combo", "regularize"]


class TPoly:
    """Polynomial in the regularization symbol T with WordCombo coefficients.

    Every composition stored in any coefficient is admissible.  Ring
    operations are exact; multiplication multiplies coefficients with the
    stuffle product.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[Mapping, None] = None):
        data: dict = {}
        if coeffs:
            for t, combo in coeffs.items():
                if not isinstance(t, int) or t < 0:
                    raise ValueError(f"T-exponent must be an integer >= 0, got {t!r}")
                if not isinstance(combo, WordCombo):
                    combo = WordCombo(combo)
                if combo.is_zero:
                    continue
                for w in combo.words():
                    if not is_admissible(w):
                        raise ValueError(
                            f"non-admissible word {w!r} in TPoly coefficient"
                        )
                data[t] = combo
        self._coeffs = data

    @classmethod
    def _raw(cls, data: dict) -> "TPoly":
        self = object.__new__(cls)
        self._coeffs = data
        return self

    @classmethod
    def zero(cls) -> "TPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "TPoly":
        return cls._raw({0: WordCombo.word(())})

    @classmethod
    def from_word(cls, w, coeff=1) -> "TPoly":
        w = as_composition(w)
        if not is_admissible(w):
            raise ValueError(f"word {w!r} is not admissible")
        combo = WordCombo.word(w, coeff)
        return cls._raw({0: combo}) if combo else cls.zero()

    @classmethod
    def from_combo(cls, combo: WordCombo, t: int = 0) -> "TPoly":
        return cls({t: combo})

    def coeff(self, t: int) -> WordCombo:
        return self._coeffs.get(t, WordCombo.zero())

    def items(self):
        return self._coeffs.items()

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def t_degree(self):
        """Largest T-exponent with nonzero coefficient; None when zero."""
        return max(self._coeffs) if self._coeffs else None

    def max_word_depth(self) -> int:
        return max((c.max_depth() for c in self._coeffs.values()), default=0)

    def words(self):
        for combo in self._coeffs.values():
            yield from combo.words()

    def shift_t(self, n: int) -> "TPoly":
        """Multiply by T^n."""
        if n == 0:
            return self
        return TPoly._raw({t + n: combo for t, combo in self._coeffs.items()})

    def __add__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        data = dict(self._coeffs)
        for t, combo in other._coeffs.items():
            s = data.get(t)
            s = combo if s is None else s + combo
            if s.is_zero:
                data.pop(t, None)
            else:
                data[t] = s
        return TPoly._raw(data)

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __neg__(self) -> "TPoly":
        return TPoly._raw({t: -combo for t, combo in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TPoly):
            data: dict = {}
            for s, cs in self._coeffs.items():
                for t, ct in other._coeffs.items():
                    prod = stuffle(cs, ct)
                    if prod.is_zero:
                        continue
                    key = s + t
                    acc = data.get(key)
                    acc = prod if acc is None else acc + prod
                    if acc.is_zero:
                        data.pop(key, None)
                    else:
                        data[key] = acc
            return TPoly._raw(data)
        q = other if isinstance(other, Fraction) else Fraction(other)
        if not q:
            return TPoly.zero()
        return TPoly._raw({t: combo * q for t, combo in self._coeffs.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset((t, c) for t, c in self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for t in sorted(self._coeffs):
            head = "" if t == 0 else ("T*" if t == 1 else f"T^{t}*")
            parts.append(f"{head}[{self._coeffs[t]!r}]")
        return " + ".join(parts)


_REG_CACHE: dict = {}


def _regularize_word(w: Composition) -> TPoly:
    cached = _REG_CACHE.get(w)
    if cached is not None:
        return cached
    if is_admissible(w):
        res = TPoly._raw({0: WordCombo.word(w)})
    else:
        # Peel one trailing 1: in v * (1) the word w occurs with positive
        # multiplicity and every other word has strictly fewer trailing
        # ones, so the recursion terminates.
        v = w[:-1]
        prod = dict(_stuffle_words(v, (1,)))
        mult = prod.pop(w)
        res = _regularize_word(v).shift_t(1)
        for word, n in prod.items():
            res = res - _regularize_word(word) * Fraction(n)
        if mult != 1:
            res = res * Fraction(1, mult)
    _REG_CACHE[w] = res
    return res


def regularize(x) -> TPoly:
    """Stuffle-regularize a composition or combination into a TPoly.

    Admissible words map to themselves at T-degree 0; the single part (1)
    maps to T; the extension to arbitrary words is forced by requiring an
    algebra homomorphism for the stuffle product.
    """
    if isinstance(x, WordCombo):
        acc = TPoly.zero()
        for w, q in x.items():
            acc = acc + _regularize_word(w) * q
        return acc
    return _regularize_word(as_composition(x))


def antipode_combo(j: int, c) -> TPoly:
    """Alternating star/reversed-plain convolution, regularized.

    Returns the regularized expansion of
    ``sum_{i=0..j} (-1)^i  star(k_1..k_i) * (k_j, ..., k_{i+1})``.
    The result is exactly zero for every j >= 1 and the unit for j = 0.
    """
    c = as_composition(c)
    if not 0 <= j <= len(c):
        raise ValueError(f"j must satisfy 0 <= j <= depth, got j={j} for {c!r}")
    total = TPoly.zero()
    for i in range(j + 1):
        head = star_expand(c[:i])
        seg = c[i:j][::-1]
        prod = stuffle(head, WordCombo.word(seg))
        term = regularize(prod)
        total = total + term if i % 2 == 0 else total - term
    return total
