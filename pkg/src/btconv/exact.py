"""Exact rational arithmetic and binomial-coefficient kernels.

Every quantity in this package is an arbitrary-precision rational; ``Rat``
(an alias of :class:`fractions.Fraction`) is the universal scalar.  Fraction
already guarantees the representation invariants we need: values are stored
in lowest terms with a positive denominator, and zero is ``0/1``.

All functions here are pure.  The factorial memo table grows monotonically
and is only ever appended to; precompute it (by calling :func:`factorial`
once with the largest argument) before sharing across threads, or guard it
externally.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rat = Fraction
RatLike = Union[Rat, int]

ZERO = Fraction(0)
ONE = Fraction(1)

#: Factorials up to this index are kept in the memo table; larger arguments
#: are computed on demand without being cached.
FACTORIAL_MEMO_CAP = 256

_fact_table: list[int] = [1]


class ZeroBinomialError(ZeroDivisionError):
    """Raised when the reciprocal of a vanishing binomial coefficient is requested."""


def factorial(n: int) -> int:
    """n! for n >= 0, memoized up to ``FACTORIAL_MEMO_CAP``."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    if n > FACTORIAL_MEMO_CAP:
        return math.factorial(n)
    while len(_fact_table) <= n:
        _fact_table.append(_fact_table[-1] * len(_fact_table))
    return _fact_table[n]


@lru_cache(maxsize=None)
def binom_int(n: int, k: int) -> Rat:
    """Binomial coefficient C(n, k) for integer n >= 0 and any integer k.

    Returns 0 when k < 0 or k > n, matching the summation conventions used
    throughout the package.
    """
    if n < 0:
        raise ValueError(f"binom_int requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return ZERO
    return Fraction(math.comb(n, k))


def binom_rat(r: RatLike, k: int) -> Rat:
    """Generalized binomial coefficient C(r, k) for rational r and integer k.

    Defined through the falling factorial r(r-1)...(r-k+1)/k! for k >= 0,
    and 0 for k < 0.  Agrees with :func:`binom_int` whenever r is a
    non-negative integer.
    """
    return _binom_rat_cached(Fraction(r), k)


@lru_cache(maxsize=None)
def _binom_rat_cached(r: Rat, k: int) -> Rat:
    if k < 0:
        return ZERO
    num = ONE
    for i in range(k):
        num *= r - i
        if num == 0:
            return ZERO
    return num / factorial(k)


def inv_binom(r: RatLike, k: int) -> Rat:
    """Reciprocal of C(r, k); raises :class:`ZeroBinomialError` if C(r, k) = 0."""
    value = binom_rat(r, k)
    if value == 0:
        raise ZeroBinomialError(
            f"binomial coefficient C({Fraction(r)}, {k}) is zero; reciprocal undefined"
        )
    return 1 / value


def kron_delta(i: int, j: int) -> Rat:
    """Kronecker delta: 1 if i = j, else 0."""
    return ONE if i == j else ZERO


def alt_sign(k: int) -> Rat:
    """(-1)**k as a rational, used as the alternating-sum weight."""
    return ONE if k % 2 == 0 else -ONE
