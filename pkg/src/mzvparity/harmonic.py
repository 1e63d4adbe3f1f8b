"""Harmonic (quasi-shuffle) algebra on integer compositions.

A composition is a plain tuple of positive integers ``(k_1, ..., k_d)``,
stored left-to-right; the rightmost slot decides admissibility: the nested
series ``zeta(k_1, ..., k_d) = sum_{0 < m_1 < ... < m_d} prod_j m_j^(-k_j)``
converges exactly when ``k_d >= 2``.  :class:`WordCombo` is a finite
Q-linear combination of compositions with exact rational coefficients; the
stuffle product turns it into the harmonic algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Union

Composition = tuple[int, ...]

__all__ = [
    "Composition",
    "WordCombo",
    "as_composition",
    "compositions_of",
    "compositions_up_to",
    "depth",
    "is_admissible",
    "shift_expand",
    "star_expand",
    "stuffle",
    "trailing_ones",
    "weight",
]


def as_composition(parts: Iterable) -> Composition:
    """Normalize an index into a composition tuple, validating all parts."""
    c = tuple(parts)
    for k in c:
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise ValueError(f"composition parts must be integers >= 1, got {c!r}")
    return c


def weight(c: Composition) -> int:
    return sum(c)


def depth(c: Composition) -> int:
    return len(c)


def is_admissible(c: Composition) -> bool:
    """True iff the composition is empty or its last part is >= 2."""
    return not c or c[-1] >= 2


def trailing_ones(c: Composition) -> int:
    n = 0
    for k in reversed(c):
        if k != 1:
            break
        n += 1
    return n


def compositions_of(w: int) -> Iterator[Composition]:
    """All compositions of ``w``, in lexicographic order."""
    if w < 0:
        return
    if w == 0:
        yield ()
        return
    for first in range(1, w + 1):
        for rest in compositions_of(w - first):
            yield (first,) + rest


def compositions_up_to(max_weight: int) -> Iterator[Composition]:
    """All nonempty compositions of weight 1..max_weight, weight-major then lex."""
    for w in range(1, max_weight + 1):
        yield from compositions_of(w)


def _format_word(c: Composition) -> str:
    return "zeta(" + ",".join(str(k) for k in c) + ")"


class WordCombo:
    """Finite formal Q-linear combination of compositions.

    Coefficients are exact :class:`fractions.Fraction` values; zero
    coefficients are never stored.  Instances are treated as immutable:
    every operation returns a fresh combination.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                word = as_composition(word)
                q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if not q:
                    continue
                q2 = data.get(word, 0) + q
                if q2:
                    data[word] = q2
                elif word in data:
                    del data[word]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict) -> "WordCombo":
        # internal constructor: data already validated/pruned
        self = object.__new__(cls)
        self._terms = data
        return self

    @classmethod
    def zero(cls) -> "WordCombo":
        return cls._raw({})

    @classmethod
    def word(cls, c: Iterable, coeff=1) -> "WordCombo":
        q = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        if not q:
            return cls.zero()
        return cls._raw({as_composition(c): q})

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def __getitem__(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def max_depth(self) -> int:
        """Largest depth among stored words (0 for the zero combination)."""
        return max((len(w) for w in self._terms), default=0)

    def __add__(self, other: "WordCombo") -> "WordCombo":
        if not isinstance(other, WordCombo):
            return NotImplemented
        data = dict(self._terms)
        _iadd_terms(data, other._terms.items(), 1)
        return WordCombo._raw(data)

    def __sub__(self, other: "WordCombo") -> "WordCombo":
        if not isinstance(other, WordCombo):
            return NotImplemented
        data = dict(self._terms)
        _iadd_terms(data, other._terms.items(), -1)
        return WordCombo._raw(data)

    def __neg__(self) -> "WordCombo":
        return WordCombo._raw({w: -q for w, q in self._terms.items()})

    def __mul__(self, other) -> "WordCombo":
        if isinstance(other, WordCombo):
            return stuffle(self, other)
        q = other if isinstance(other, Fraction) else Fraction(other)
        if not q:
            return WordCombo.zero()
        return WordCombo._raw({w: c * q for w, c in self._terms.items()})

    def __rmul__(self, other) -> "WordCombo":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordCombo):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms):
            q = self._terms[w]
            parts.append(f"({q})*{_format_word(w)}")
        return " + ".join(parts)


def _iadd_terms(acc: dict, items, scale) -> None:
    """In-place ``acc += scale * items`` over (word, coeff) pairs."""
    if scale == 1:
        for w, q in items:
            q2 = acc.get(w, 0) + q
            if q2:
                acc[w] = q2
            elif w in acc:
                del acc[w]
    else:
        for w, q in items:
            q2 = acc.get(w, 0) + q * scale
            if q2:
                acc[w] = q2
            elif w in acc:
                del acc[w]


@lru_cache(maxsize=1 << 16)
def _stuffle_words(u: Composition, v: Composition):
    """Stuffle product of two bare words as a tuple of (word, int) pairs.

    Recursion on the leading parts: with a = u[0], b = v[0],
    u * v = a.(u' * v) + b.(u * v') + (a+b).(u' * v').
    """
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    a = u[0]
    b = v[0]
    acc: dict = {}
    for w, n in _stuffle_words(u[1:], v):
        key = (a,) + w
        acc[key] = acc.get(key, 0) + n
    for w, n in _stuffle_words(u, v[1:]):
        key = (b,) + w
        acc[key] = acc.get(key, 0) + n
    for w, n in _stuffle_words(u[1:], v[1:]):
        key = (a + b,) + w
        acc[key] = acc.get(key, 0) + n
    return tuple(acc.items())


def stuffle(u, v) -> WordCombo:
    """Stuffle (quasi-shuffle) product; accepts compositions or combinations.

    Bilinear, commutative and associative; the empty composition is the
    identity element.
    """
    cu = u if isinstance(u, WordCombo) else WordCombo.word(as_composition(u))
    cv = v if isinstance(v, WordCombo) else WordCombo.word(as_composition(v))
    acc: dict = {}
    for wu, qu in cu.items():
        for wv, qv in cv.items():
            q = qu * qv
            for w, n in _stuffle_words(wu, wv):
                q2 = acc.get(w, 0) + q * n
                if q2:
                    acc[w] = q2
                elif w in acc:
                    del acc[w]
    return WordCombo._raw(acc)


def star_expand(c) -> WordCombo:
    """Expand a star index into the sum of its 2^(d-1) comma/plus contractions.

    Every choice of separator ("keep the comma" or "merge the neighbours")
    contributes the contracted composition with coefficient +1; the empty
    composition expands to itself.
    """
    c = as_composition(c)
    d = len(c)
    if d == 0:
        return WordCombo.word(())
    acc: dict = {}
    for mask in range(1 << (d - 1)):
        parts = [c[0]]
        for i in range(1, d):
            if (mask >> (i - 1)) & 1:
                parts[-1] += c[i]
            else:
                parts.append(c[i])
        w = tuple(parts)
        acc[w] = acc.get(w, 0) + Fraction(1)
    return WordCombo._raw(acc)


def _weak_compositions(total: int, slots: int) -> Iterator[tuple]:
    """All tuples of ``slots`` nonnegative integers summing to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, slots - 1):
            yield (first,) + rest


def shift_expand(a: int, c) -> WordCombo:
    """Expand the a-th Taylor-shift of an index into plain indices.

    Returns ``(-1)^a * sum over a_1+...+a_d = a`` of
    ``prod_j C(k_j - 1 + a_j, a_j) * (k_1 + a_1, ..., k_d + a_d)``,
    the coefficient of z^a in ``prod_j (z + m_j)^(-k_j)`` summed over the
    nested index chain.  For the empty composition the result is 1 when
    a = 0 and 0 otherwise.
    """
    if a < 0:
        raise ValueError("shift order must be >= 0")
    c = as_composition(c)
    if not c:
        return WordCombo.word(()) if a == 0 else WordCombo.zero()
    if a == 0:
        return WordCombo.word(c)
    sign = -1 if a % 2 else 1
    acc: dict = {}
    for extra in _weak_compositions(a, len(c)):
        coeff = sign
        for k, e in zip(c, extra):
            coeff *= comb(k - 1 + e, e)
        w = tuple(k + e for k, e in zip(c, extra))
        acc[w] = acc.get(w, 0) + Fraction(coeff)
    return WordCombo._raw(acc)
