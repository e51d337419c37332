"""Exact generators for the special sequences used across the package.

Fibonacci, Lucas and gibonacci values are defined for every integer index
(negative indices follow the standard backward extensions); everything else
is defined on non-negative integers only.  Harmonic symbols in particular
are total only on non-negative integers: identities that would need them at
other arguments are handled elsewhere through already-reduced rational
forms.

All generators are pure and memoized; the memo tables follow the same
concurrency contract as the factorial table in :mod:`btconv.exact`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .exact import ONE, ZERO, Rat, RatLike, binom_int


@dataclass(frozen=True)
class Seq:
    """A finite prefix (index 0..N) of a rational-valued sequence.

    Indexing outside 0..N, including any negative index, raises IndexError:
    prefixes never wrap around, and constructions that would peek at index
    -1 must use their delta-corrected forms instead.
    """

    values: tuple[Rat, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("a Seq must contain at least the index-0 value")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def from_func(cls, f: Callable[[int], RatLike], n: int, label: str = "") -> "Seq":
        """Prefix (f(0), ..., f(n))."""
        return cls(tuple(Fraction(f(k)) for k in range(n + 1)), label)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Rat]:
        return iter(self.values)

    def __getitem__(self, k: int) -> Rat:
        if not 0 <= k < len(self.values):
            raise IndexError(f"Seq index {k} outside prefix range 0..{self.n_max}")
        return self.values[k]


_fib: list[Rat] = [ZERO, ONE]
_lucas: list[Rat] = [Fraction(2), ONE]


def fibonacci(n: int) -> Rat:
    """F(n) for any integer n, with F(-n) = (-1)**(n-1) * F(n)."""
    if n < 0:
        value = fibonacci(-n)
        return value if n % 2 else -value
    while len(_fib) <= n:
        _fib.append(_fib[-1] + _fib[-2])
    return _fib[n]


def lucas(n: int) -> Rat:
    """L(n) for any integer n, with L(-n) = (-1)**n * L(n)."""
    if n < 0:
        value = lucas(-n)
        return -value if n % 2 else value
    while len(_lucas) <= n:
        _lucas.append(_lucas[-1] + _lucas[-2])
    return _lucas[n]


def gibonacci(g0: RatLike, g1: RatLike, n: int) -> Rat:
    """Fibonacci recurrence with arbitrary rational seeds g0, g1.

    Extends backward through G(m-1) = G(m+1) - G(m).  The all-zero seed is
    degenerate but harmless; it only earns a warning.
    """
    g0 = Fraction(g0)
    g1 = Fraction(g1)
    if g0 == 0 and g1 == 0:
        warnings.warn("gibonacci with g0 = g1 = 0 is identically zero", stacklevel=2)
    return _gibonacci_cached(g0, g1, n)


@lru_cache(maxsize=None)
def _gibonacci_cached(g0: Rat, g1: Rat, n: int) -> Rat:
    a, b = g0, g1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


_bernoulli: list[Rat] = [ONE]


def bernoulli_number(n: int) -> Rat:
    """Exact Bernoulli number B(n), with B(1) = -1/2.

    Computed through the recurrence sum(C(n+1, k) * B(k), k=0..n-1)
    = -(n+1) * B(n), memoized.
    """
    if n < 0:
        raise ValueError(f"bernoulli_number requires n >= 0, got {n}")
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        acc = sum((binom_int(m + 1, k) * _bernoulli[k] for k in range(m)), ZERO)
        _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def bernoulli_poly(n: int, x: RatLike) -> Rat:
    """Bernoulli polynomial B_n(x) = sum(C(n, k) * B(k) * x**(n-k)).

    The finite sum is well defined at x = 0 (where it returns B(n)), unlike
    the x**n-normalized form.
    """
    if n < 0:
        raise ValueError(f"bernoulli_poly requires n >= 0, got {n}")
    return _bernoulli_poly_cached(n, Fraction(x))


@lru_cache(maxsize=None)
def _bernoulli_poly_cached(n: int, x: Rat) -> Rat:
    return sum(
        (binom_int(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1)),
        ZERO,
    )


def catalan(n: int) -> Rat:
    """Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got {n}")
    return binom_int(2 * n, n) / (n + 1)


_harmonic: list[Rat] = [ZERO]
_odd_harmonic: list[Rat] = [ZERO]


def harmonic(n: int) -> Rat:
    """H(n) = sum(1/k, k=1..n), with H(0) = 0."""
    if n < 0:
        raise ValueError(f"harmonic requires n >= 0, got {n}")
    while len(_harmonic) <= n:
        _harmonic.append(_harmonic[-1] + Fraction(1, len(_harmonic)))
    return _harmonic[n]


def odd_harmonic(n: int) -> Rat:
    """O(n) = sum(1/(2k-1), k=1..n), with O(0) = 0."""
    if n < 0:
        raise ValueError(f"odd_harmonic requires n >= 0, got {n}")
    while len(_odd_harmonic) <= n:
        _odd_harmonic.append(_odd_harmonic[-1] + Fraction(1, 2 * len(_odd_harmonic) - 1))
    return _odd_harmonic[n]
