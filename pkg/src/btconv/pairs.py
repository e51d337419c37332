"""Binomial transforms of both kinds and the transform-pair machinery.

A first-kind pair ``{(s_k), (sigma_k)}`` satisfies, for every n in range,

    sigma_n = sum((-1)**k * C(n, k) * s_k, k=0..n),

a relation that is its own inverse.  A second-kind pair satisfies

    sigma_n = sum(C(n, k) * s_k, k=0..n),

with inverse weights (-1)**(n-k).  This module provides:

* the transforms themselves on finite prefixes (:func:`bt_first`,
  :func:`bt_second`, :func:`bt_second_inverse`);
* a catalog of closed-form pairs (:func:`catalog_pair`), each validated on
  construction by direct summation;
* constructors that derive new pairs from old ones (index shifts, k-weights,
  k**m-weights, partial-sum variants) and conversion between the two kinds;
* classification of fixed points of the first-kind transform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Mapping

from .exact import (
    ONE,
    ZERO,
    Rat,
    RatLike,
    alt_sign,
    binom_int,
    binom_rat,
    inv_binom,
)
from .seqlib import (
    Seq,
    bernoulli_number,
    bernoulli_poly,
    catalan,
    fibonacci,
    gibonacci,
    harmonic,
    lucas,
    odd_harmonic,
)

Gen = Callable[[int], Rat]

#: Depth to which newly constructed pairs are checked against the defining
#: transform, unless the caller overrides it.
DEFAULT_CHECK_DEPTH = 8


class Kind(Enum):
    FIRST = "first"
    SECOND = "second"


class Classification(Enum):
    INVARIANT = "invariant"
    INVERSE_INVARIANT = "inverse-invariant"
    NEITHER = "neither"


class PairValidationError(ValueError):
    """A claimed closed-form pair failed its direct-summation check."""


class KindMismatchError(ValueError):
    """An operation received a pair of the wrong transform kind."""


@dataclass(frozen=True)
class Pair:
    """A binomial-transform pair: two generators plus a kind tag.

    ``left`` plays the role of the original sequence and ``right`` its
    transform.  ``max_index`` bounds the valid index range for pairs built
    from finite data (None means unbounded).
    """

    kind: Kind
    left: Gen
    right: Gen
    params: Mapping = field(default_factory=dict)
    label: str = ""
    max_index: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    def left_seq(self, n: int) -> Seq:
        return Seq.from_func(self.left, n, label=f"{self.label}:left")

    def right_seq(self, n: int) -> Seq:
        return Seq.from_func(self.right, n, label=f"{self.label}:right")

    def check_depth(self, depth: int) -> int:
        """Largest index usable for a validation sweep of the given depth."""
        if self.max_index is None:
            return depth
        return min(depth, self.max_index)

    def validate(self, depth: int = DEFAULT_CHECK_DEPTH) -> None:
        """Check the defining transform relation for all n up to depth."""
        for n in range(self.check_depth(depth) + 1):
            expected = _transform_value(self.kind, self.left, n)
            actual = self.right(n)
            if expected != actual:
                raise PairValidationError(
                    f"pair {self.label!r} violates the {self.kind.value}-kind "
                    f"relation at n={n}: transform gives {expected}, "
                    f"closed form gives {actual}"
                )


def _transform_value(kind: Kind, gen: Gen, n: int) -> Rat:
    if kind is Kind.FIRST:
        return sum(
            (alt_sign(k) * binom_int(n, k) * gen(k) for k in range(n + 1)), ZERO
        )
    return sum((binom_int(n, k) * gen(k) for k in range(n + 1)), ZERO)


def require_kind(pair: Pair, kind: Kind, role: str = "pair") -> None:
    if pair.kind is not kind:
        raise KindMismatchError(
            f"{role} must be a {kind.value}-kind pair, got {pair.kind.value}"
        )


def _cached(gen: Gen) -> Gen:
    return lru_cache(maxsize=None)(gen)


# ---------------------------------------------------------------------------
# Transforms on finite prefixes
# ---------------------------------------------------------------------------


def bt_first(s: Seq) -> Seq:
    """First-kind transform: sigma_n = sum((-1)**k * C(n, k) * s_k)."""
    values = tuple(
        sum((alt_sign(k) * binom_int(n, k) * s[k] for k in range(n + 1)), ZERO)
        for n in range(len(s))
    )
    return Seq(values, label=f"bt1({s.label})" if s.label else "")


def bt_second(s: Seq) -> Seq:
    """Second-kind transform: sigma_n = sum(C(n, k) * s_k)."""
    values = tuple(
        sum((binom_int(n, k) * s[k] for k in range(n + 1)), ZERO)
        for n in range(len(s))
    )
    return Seq(values, label=f"bt2({s.label})" if s.label else "")


def bt_second_inverse(sigma: Seq) -> Seq:
    """Inverse of :func:`bt_second`: s_n = sum((-1)**(n-k) * C(n, k) * sigma_k)."""
    values = tuple(
        sum(
            (alt_sign(n - k) * binom_int(n, k) * sigma[k] for k in range(n + 1)),
            ZERO,
        )
        for n in range(len(sigma))
    )
    return Seq(values, label=f"bt2inv({sigma.label})" if sigma.label else "")


def involution_check(s: Seq) -> bool:
    """True iff applying the first-kind transform twice recovers s."""
    return bt_first(bt_first(s)).values == s.values


def classify(s: Seq) -> Classification:
    """Classify s as a fixed point of the first-kind transform.

    INVARIANT if the transform reproduces s on the whole prefix,
    INVERSE_INVARIANT if it reproduces -s, NEITHER otherwise.  Requires at
    least two values; a length-1 prefix is always trivially fixed.
    """
    if len(s) < 2:
        raise ValueError("classify requires a prefix of length >= 2")
    transformed = bt_first(s)
    if transformed.values == s.values:
        return Classification.INVARIANT
    if all(t == -v for t, v in zip(transformed.values, s.values)):
        return Classification.INVERSE_INVARIANT
    return Classification.NEITHER


def convert_kind(pair: Pair) -> Pair:
    """Convert between the two kinds.

    First to second maps the original sequence through s_k -> (-1)**k s_k
    while keeping the transform side; second to first is the same twist,
    which makes the conversion an involution.
    """
    left = pair.left
    new_left = _cached(lambda k: alt_sign(k) * left(k))
    new_kind = Kind.SECOND if pair.kind is Kind.FIRST else Kind.FIRST
    return Pair(
        kind=new_kind,
        left=new_left,
        right=pair.right,
        params=dict(pair.params),
        label=f"convert({pair.label})" if pair.label else "",
        max_index=pair.max_index,
    )


# ---------------------------------------------------------------------------
# Random pairs (for property tests and seeded verification sweeps)
# ---------------------------------------------------------------------------


def random_rational_seq(
    rng: random.Random, length: int = 12, label: str = "random"
) -> Seq:
    """Draw a prefix of small random rationals (numerators within +/-20)."""
    values = tuple(
        Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(length)
    )
    return Seq(values, label=label)


def random_pair(kind: Kind, seed: int | str, length: int = 12) -> Pair:
    """A pair whose left side is a seeded random prefix and whose right side
    is its exact transform.  Deterministic for a given (kind, seed, length)."""
    rng = random.Random(f"{kind.value}:{seed}")
    seq = random_rational_seq(rng, length, label=f"random[{seed}]")
    transform = bt_first(seq) if kind is Kind.FIRST else bt_second(seq)
    return Pair(
        kind=kind,
        left=seq.__getitem__,
        right=transform.__getitem__,
        params={"seed": str(seed), "length": length},
        label=f"random-{kind.value}[{seed}]",
        max_index=length - 1,
    )


def fibonacci_pair() -> Pair:
    """(F_k) with first-kind transform (-F_k)."""
    return Pair(
        Kind.FIRST,
        _cached(lambda k: fibonacci(k)),
        _cached(lambda k: -fibonacci(k)),
        label="fibonacci",
    )


def lucas_pair() -> Pair:
    """(L_k), a fixed point of the first-kind transform."""
    gen = _cached(lambda k: lucas(k))
    return Pair(Kind.FIRST, gen, gen, label="lucas")


# ---------------------------------------------------------------------------
# Catalog of closed-form pairs
# ---------------------------------------------------------------------------


def _as_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"parameter {name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise ValueError(f"parameter {name} must be an integer, got {value!r}")


def _build_binom_upper(x, y) -> Pair:
    # Both lower arguments (x on the left, y - x on the right) must be
    # non-negative integers to stay inside falling-factorial territory.
    # Past index y the closed form needs Gamma-pole cancellation that the
    # falling factorial cannot reproduce, so the pair is bounded by y.
    x = _as_int(x, "x")
    y = _as_int(y, "y")
    if x < 0 or y - x < 0:
        raise ValueError(f"binom_upper requires 0 <= x <= y, got x={x}, y={y}")
    return Pair(
        Kind.FIRST,
        _cached(lambda k: binom_rat(y - k, x)),
        _cached(lambda k: binom_rat(y - k, y - x)),
        params={"x": x, "y": y},
        label=f"binom_upper(x={x},y={y})",
        max_index=y,
    )


def _build_harmonic_shift_frac(m) -> Pair:
    m = _as_int(m, "m")
    if m < 1:
        raise ValueError(f"harmonic_shift_frac requires integer m >= 1, got {m}")
    return Pair(
        Kind.FIRST,
        _cached(lambda k: harmonic(k + m) / (k + m)),
        _cached(lambda k: (harmonic(k + m) - harmonic(k)) / m * inv_binom(k + m, k)),
        params={"m": m},
        label=f"harmonic_shift_frac(m={m})",
    )


def _build_gibonacci_ratio(g0, g1, t, r) -> Pair:
    t = _as_int(t, "t")
    r = _as_int(r, "r")
    if t == 0:
        raise ValueError("gibonacci_ratio requires t != 0")
    g0 = Fraction(g0)
    g1 = Fraction(g1)
    lt = lucas(t)
    sign = alt_sign(r)
    return Pair(
        Kind.FIRST,
        _cached(lambda k: gibonacci(g0, g1, t * k + r) / lt**k),
        _cached(
            lambda k: sign
            / lt**k
            * (g0 * lucas(t * k - r) - gibonacci(g0, g1, t * k - r))
        ),
        params={"g0": g0, "g1": g1, "t": t, "r": r},
        label=f"gibonacci_ratio(g0={g0},g1={g1},t={t},r={r})",
    )


def _build_binom_ratio(x, y) -> Pair:
    x = Fraction(x)
    y = Fraction(y)
    # C(y, k) vanishes for k > y when y is a non-negative integer, so the
    # reciprocal bounds the usable index range.
    max_index = None
    if y.denominator == 1 and y >= 0:
        max_index = y.numerator
    return Pair(
        Kind.FIRST,
        _cached(lambda k: binom_rat(x, k) * inv_binom(y, k)),
        _cached(lambda k: binom_rat(y - x, k) * inv_binom(y, k)),
        params={"x": x, "y": y},
        label=f"binom_ratio(x={x},y={y})",
        max_index=max_index,
    )


def _build_harmonic_plus_m(m) -> Pair:
    m = _as_int(m, "m")
    if m < 0:
        raise ValueError(f"harmonic_plus_m requires integer m >= 0, got {m}")

    def right(k: int) -> Rat:
        if k == 0:
            return harmonic(m)
        return -inv_binom(k + m, m) / k

    return Pair(
        Kind.FIRST,
        _cached(lambda k: harmonic(k + m)),
        _cached(right),
        params={"m": m},
        label=f"harmonic_plus_m(m={m})",
    )


def _build_odd_harmonic() -> Pair:
    def right(k: int) -> Rat:
        if k == 0:
            return ZERO
        return -(Fraction(2) ** (2 * k - 1)) * inv_binom(2 * k, k) / k

    return Pair(
        Kind.FIRST,
        _cached(lambda k: odd_harmonic(k)),
        _cached(right),
        label="odd_harmonic",
    )


def _build_central_floor() -> Pair:
    half = Fraction(1, 2)
    return Pair(
        Kind.FIRST,
        _cached(lambda k: half**k * binom_int(k, k // 2)),
        _cached(lambda k: half**k * catalan(k)),
        label="central_floor",
    )


def _build_delta_binom(j) -> Pair:
    j = _as_int(j, "j")
    if j < 0:
        raise ValueError(f"delta_binom requires integer j >= 0, got {j}")
    sign = alt_sign(j)
    return Pair(
        Kind.FIRST,
        _cached(lambda k: binom_int(k, j)),
        _cached(lambda k: sign if k == j else ZERO),
        params={"j": j},
        label=f"delta_binom(j={j})",
    )


def _build_power(x) -> Pair:
    x = Fraction(x)
    return Pair(
        Kind.FIRST,
        _cached(lambda k: x**k),
        _cached(lambda k: (1 - x) ** k),
        params={"x": x},
        label=f"power(x={x})",
    )


def _build_bernoulli() -> Pair:
    return Pair(
        Kind.SECOND,
        _cached(lambda k: bernoulli_number(k)),
        _cached(lambda k: alt_sign(k) * bernoulli_number(k)),
        label="bernoulli",
    )


def _build_bernoulli_poly_shift(x, y) -> Pair:
    x = Fraction(x)
    y = Fraction(y)
    if y == 0:
        raise ValueError("bernoulli_poly_shift requires y != 0")
    return Pair(
        Kind.SECOND,
        _cached(lambda k: bernoulli_poly(k, x) / y**k),
        _cached(lambda k: bernoulli_poly(k, x + y) / y**k),
        params={"x": x, "y": y},
        label=f"bernoulli_poly_shift(x={x},y={y})",
    )


def _build_binom_x(x) -> Pair:
    x = Fraction(x)
    return Pair(
        Kind.SECOND,
        _cached(lambda k: binom_rat(x, k)),
        _cached(lambda k: binom_rat(x + k, k)),
        params={"x": x},
        label=f"binom_x(x={x})",
    )


def _build_binom_xz(x, z) -> Pair:
    x = Fraction(x)
    z = _as_int(z, "z")
    return Pair(
        Kind.SECOND,
        _cached(lambda k: binom_rat(x, k + z)),
        _cached(lambda k: binom_rat(x + k, k + z)),
        params={"x": x, "z": z},
        label=f"binom_xz(x={x},z={z})",
    )


def _build_harmonic_binom_m(m) -> Pair:
    m = _as_int(m, "m")
    if m < 0:
        raise ValueError(f"harmonic_binom_m requires integer m >= 0, got {m}")
    return Pair(
        Kind.SECOND,
        _cached(lambda k: binom_int(m, k) * harmonic(k)),
        _cached(
            lambda k: binom_rat(k + m, m)
            * (harmonic(m) + harmonic(k) - harmonic(k + m))
        ),
        params={"m": m},
        label=f"harmonic_binom_m(m={m})",
    )


def _build_inv_binom_trif(m, p) -> Pair:
    # Indices n with m - n - p < 0 would hit a vanishing C(m, p + n) or a
    # zero m - n + 1 denominator, so the pair is bounded by m - p.
    m = _as_int(m, "m")
    p = _as_int(p, "p")
    if p < 0 or m - p < 0:
        raise ValueError(
            f"inv_binom_trif requires integers 0 <= p <= m, got m={m}, p={p}"
        )
    return Pair(
        Kind.SECOND,
        _cached(lambda k: inv_binom(m, p + k)),
        _cached(lambda k: Fraction(m + 1, m - k + 1) * inv_binom(m - k, p)),
        params={"m": m, "p": p},
        label=f"inv_binom_trif(m={m},p={p})",
        max_index=m - p,
    )


def _build_power2(x) -> Pair:
    x = Fraction(x)
    return Pair(
        Kind.SECOND,
        _cached(lambda k: x**k),
        _cached(lambda k: (1 + x) ** k),
        params={"x": x},
        label=f"power2(x={x})",
    )


def _build_binom_2k_j(j) -> Pair:
    j = _as_int(j, "j")
    if j < 0:
        raise ValueError(f"binom_2k_j requires integer j >= 0, got {j}")
    half = Fraction(1, 2)
    sign = alt_sign(j)
    return Pair(
        Kind.FIRST,
        _cached(lambda k: half**k * binom_int(k, j)),
        _cached(lambda k: sign * half**k * binom_int(k, j)),
        params={"j": j},
        label=f"binom_2k_j(j={j})",
    )


def _build_binom_2k_j_up(j) -> Pair:
    j = _as_int(j, "j")
    if j < 0:
        raise ValueError(f"binom_2k_j_up requires integer j >= 0, got {j}")
    two_j = Fraction(2) ** j
    return Pair(
        Kind.FIRST,
        _cached(lambda k: binom_int(k, j) * Fraction(2) ** k),
        _cached(lambda k: alt_sign(k) * binom_int(k, j) * two_j),
        params={"j": j},
        label=f"binom_2k_j_up(j={j})",
    )


#: Stable catalog identifiers; these names are part of the public surface
#: consumed by the verification registry and CLI.
CATALOG: dict[str, Callable[..., Pair]] = {
    "binom_upper": _build_binom_upper,
    "harmonic_shift_frac": _build_harmonic_shift_frac,
    "gibonacci_ratio": _build_gibonacci_ratio,
    "binom_ratio": _build_binom_ratio,
    "harmonic_plus_m": _build_harmonic_plus_m,
    "odd_harmonic": _build_odd_harmonic,
    "central_floor": _build_central_floor,
    "delta_binom": _build_delta_binom,
    "power": _build_power,
    "bernoulli": _build_bernoulli,
    "bernoulli_poly_shift": _build_bernoulli_poly_shift,
    "binom_x": _build_binom_x,
    "binom_xz": _build_binom_xz,
    "harmonic_binom_m": _build_harmonic_binom_m,
    "inv_binom_trif": _build_inv_binom_trif,
    "power2": _build_power2,
    "binom_2k_j": _build_binom_2k_j,
    "binom_2k_j_up": _build_binom_2k_j_up,
}


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(CATALOG))


def catalog_pair(name: str, check_depth: int = DEFAULT_CHECK_DEPTH, **params) -> Pair:
    """Construct a cataloged closed-form pair and validate it by summation.

    Raises ValueError for an unknown name or out-of-domain parameters, and
    PairValidationError if the closed form fails its direct check (a guard
    against transcription slips in the catalog itself).
    """
    try:
        builder = CATALOG[name]
    except KeyError:
        raise ValueError(
            f"unknown catalog pair {name!r}; known names: {', '.join(catalog_names())}"
        ) from None
    pair = builder(**params)
    pair.validate(check_depth)
    return pair


# ---------------------------------------------------------------------------
# Constructors deriving new pairs from old
# ---------------------------------------------------------------------------


def _derived_max(pair: Pair, shrink: int = 0) -> int | None:
    if pair.max_index is None:
        return None
    return pair.max_index - shrink


def shift_pair(p: Pair, m: int, check_depth: int = DEFAULT_CHECK_DEPTH) -> Pair:
    """Shift a first-kind pair: (s_{k+m}) pairs with the m-fold alternating
    difference sum((-1)**q * C(m, q) * sigma_{k+q}, q=0..m)."""
    require_kind(p, Kind.FIRST)
    if m < 0:
        raise ValueError(f"shift_pair requires m >= 0, got {m}")
    if m == 0:
        return p
    left, right = p.left, p.right
    new = Pair(
        Kind.FIRST,
        _cached(lambda k: left(k + m)),
        _cached(
            lambda k: sum(
                (alt_sign(q) * binom_int(m, q) * right(k + q) for q in range(m + 1)),
                ZERO,
            )
        ),
        params={**p.params, "shift": m},
        label=f"shift[{m}]({p.label})",
        max_index=_derived_max(p, m),
    )
    new.validate(check_depth)
    return new


def times_k_pair(p: Pair, check_depth: int = DEFAULT_CHECK_DEPTH) -> Pair:
    """Weight a first-kind pair by k: (k * s_k) pairs with n(sigma_n - sigma_{n-1})."""
    require_kind(p, Kind.FIRST)
    left, right = p.left, p.right

    def new_right(k: int) -> Rat:
        if k == 0:
            return ZERO
        return k * (right(k) - right(k - 1))

    new = Pair(
        Kind.FIRST,
        _cached(lambda k: k * left(k)),
        _cached(new_right),
        params=dict(p.params),
        label=f"times_k({p.label})",
        max_index=_derived_max(p),
    )
    new.validate(check_depth)
    return new


def s_m_value(p: Pair, m: int, k: int) -> Rat:
    """The m-th iterated difference weight S_m(k): S_0(k) = sigma_k and
    S_m(k) = k * (S_{m-1}(k) - S_{m-1}(k-1)), with S_m(0) = 0 for m >= 1."""
    require_kind(p, Kind.FIRST)
    if m < 0 or k < 0:
        raise ValueError("s_m_value requires m >= 0 and k >= 0")
    row = [p.right(i) for i in range(k + 1)]
    for _ in range(m):
        row = [ZERO] + [i * (row[i] - row[i - 1]) for i in range(1, k + 1)]
    return row[k]


def s_m_pair(p: Pair, m: int, check_depth: int = DEFAULT_CHECK_DEPTH) -> Pair:
    """Weight a first-kind pair by k**m: (k**m * s_k) pairs with S_m(n)."""
    require_kind(p, Kind.FIRST)
    if m < 0:
        raise ValueError(f"s_m_pair requires m >= 0, got {m}")
    if m == 0:
        return p
    left = p.left
    new = Pair(
        Kind.FIRST,
        _cached(lambda k: k**m * left(k)),
        _cached(lambda k: s_m_value(p, m, k)),
        params={**p.params, "power": m},
        label=f"s_m[{m}]({p.label})",
        max_index=_derived_max(p),
    )
    new.validate(check_depth)
    return new


#: Selectors for :func:`partial_sum_pairs`, in the order the variants are
#: introduced: prefix sums of one or both sides, with or without the
#: 1/(k+1)-style weights.
PARTIAL_SUM_VARIANTS = ("a", "b", "c", "d", "e", "f")


def partial_sum_pairs(
    p: Pair, which: str, check_depth: int = DEFAULT_CHECK_DEPTH
) -> Pair:
    """Derive a new first-kind pair from prefix sums of an existing one.

    Variants (t = p.left, tau = p.right; empty sums are 0):

    * ``"a"``: (-sum(tau_{j-1}, j=1..k),  0 at k=0 then t_{k-1})
    * ``"b"``: prefix sums of both sides, lagged one step (0 for k <= 1)
    * ``"c"``: (sum(t_j, j<=k) / ((k+1)(k+2)),  same with tau)
    * ``"d"``: (sum(tau_j, j<=k) / (k+1),  t_k / (k+1))
    * ``"e"``: (-sum(tau_{j-1}, j=1..k) / (k+1),  sum(t_{j-1}, j=1..k) / (k+1))
    * ``"f"``: (sum(t_j/(j+1), j<=k) / (k+1),  sum(tau_j, j<=k) / (k+1)**2)
    """
    require_kind(p, Kind.FIRST)
    if which not in PARTIAL_SUM_VARIANTS:
        raise ValueError(
            f"unknown partial-sum variant {which!r}; expected one of "
            f"{', '.join(PARTIAL_SUM_VARIANTS)}"
        )
    left, right = p.left, p.right

    @lru_cache(maxsize=None)
    def sum_left(k: int) -> Rat:
        return ZERO if k < 0 else sum_left(k - 1) + left(k)

    @lru_cache(maxsize=None)
    def sum_right(k: int) -> Rat:
        return ZERO if k < 0 else sum_right(k - 1) + right(k)

    @lru_cache(maxsize=None)
    def sum_left_weighted(k: int) -> Rat:
        return ZERO if k < 0 else sum_left_weighted(k - 1) + left(k) / (k + 1)

    if which == "a":
        new_left: Gen = lambda k: -sum_right(k - 1)
        new_right: Gen = lambda k: ZERO if k == 0 else left(k - 1)
    elif which == "b":
        new_left = lambda k: sum_left(k - 2)
        new_right = lambda k: sum_right(k - 2)
    elif which == "c":
        new_left = lambda k: sum_left(k) / ((k + 1) * (k + 2))
        new_right = lambda k: sum_right(k) / ((k + 1) * (k + 2))
    elif which == "d":
        new_left = lambda k: sum_right(k) / (k + 1)
        new_right = lambda k: left(k) / (k + 1)
    elif which == "e":
        new_left = lambda k: -sum_right(k - 1) / (k + 1)
        new_right = lambda k: sum_left(k - 1) / (k + 1)
    else:  # "f"
        new_left = lambda k: sum_left_weighted(k) / (k + 1)
        new_right = lambda k: sum_right(k) / (k + 1) ** 2

    new = Pair(
        Kind.FIRST,
        _cached(new_left),
        _cached(new_right),
        params={**p.params, "variant": which},
        label=f"partial_sum[{which}]({p.label})",
        max_index=_derived_max(p),
    )
    new.validate(check_depth)
    return new
