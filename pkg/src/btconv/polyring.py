"""Dense univariate polynomials over the rationals.

Polynomials are coefficient tuples indexed by degree, kept canonical by
trimming trailing zeros (the zero polynomial is the empty tuple).  The
module verifies the package's polynomial identities coefficientwise, which
is exhaustive in the indeterminate, and transfers identities of the shape

    sum(f(k) * t**p(k)) = sum(g(k) * (1 - t)**q(k))

onto arbitrary transform pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .convolve import SideReport
from .exact import ONE, ZERO, Rat, RatLike, alt_sign, binom_int, binom_rat, inv_binom
from .pairs import Kind, Pair, require_kind
from .seqlib import bernoulli_poly, harmonic, odd_harmonic

_TWO = Fraction(2)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of t**i."""

    coeffs: tuple[Rat, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Rat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_add(self, poly_scale(other, -ONE))

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __call__(self, x: RatLike) -> Rat:
        return poly_eval(self, x)


ZERO_POLY = Poly()
ONE_POLY = Poly((ONE,))
T = Poly((ZERO, ONE))


def poly_add(a: Poly, b: Poly) -> Poly:
    la, lb = a.coeffs, b.coeffs
    if len(la) < len(lb):
        la, lb = lb, la
    out = list(la)
    for i, c in enumerate(lb):
        out[i] += c
    return Poly(tuple(out))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return ZERO_POLY
    out = [ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return Poly(tuple(out))


def poly_scale(a: Poly, c: RatLike) -> Poly:
    c = Fraction(c)
    return Poly(tuple(x * c for x in a.coeffs))


def poly_eval(p: Poly, x: RatLike) -> Rat:
    """Exact Horner evaluation."""
    x = Fraction(x)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def monomial(coeff: RatLike, exponent: int) -> Poly:
    if exponent < 0:
        raise ValueError(f"monomial exponent must be >= 0, got {exponent}")
    return Poly((ZERO,) * exponent + (Fraction(coeff),))


@lru_cache(maxsize=None)
def affine_power(a: Rat, b: Rat, e: int) -> Poly:
    """(a + b*t)**e expanded through the binomial theorem."""
    if e < 0:
        raise ValueError(f"affine_power exponent must be >= 0, got {e}")
    return Poly(
        tuple(binom_int(e, i) * a ** (e - i) * b**i for i in range(e + 1))
    )


def shift_compose(p: Poly, a: RatLike, b: RatLike) -> Poly:
    """Compose with an affine map: returns p(a + b*t)."""
    a = Fraction(a)
    b = Fraction(b)
    acc = ZERO_POLY
    inner = Poly((a, b))
    for c in reversed(p.coeffs):
        acc = poly_add(poly_mul(acc, inner), Poly((c,)))
    return acc


def _term_sum(terms: Iterable[tuple[Rat, int]], base: Poly) -> Poly:
    """sum(coeff * base**exponent) over (coeff, exponent) terms."""
    acc = ZERO_POLY
    for coeff, exponent in terms:
        if coeff == 0:
            continue
        acc = poly_add(acc, poly_scale(affine_power(base.coefficient(0), base.coefficient(1), exponent), coeff))
    return acc


_T_BASE = Poly((ZERO, ONE))
_ONE_MINUS_T = Poly((ONE, -ONE))
_ONE_PLUS_T = Poly((ONE, ONE))


@dataclass(frozen=True)
class PolyIdentityForm:
    """A verified identity sum(f_i t**p_i) = sum(g_i (1-t)**q_i).

    Construction validates the polynomial equality coefficientwise and
    rejects negative exponents, so an instance always carries a true
    identity that can be transferred onto transform pairs.
    """

    left_terms: tuple[tuple[Rat, int], ...]
    right_terms: tuple[tuple[Rat, int], ...]

    def __post_init__(self) -> None:
        left = tuple((Fraction(c), int(e)) for c, e in self.left_terms)
        right = tuple((Fraction(c), int(e)) for c, e in self.right_terms)
        if any(e < 0 for _, e in left + right):
            raise ValueError("PolyIdentityForm exponents must be non-negative")
        object.__setattr__(self, "left_terms", left)
        object.__setattr__(self, "right_terms", right)
        lhs = _term_sum(left, _T_BASE)
        rhs = _term_sum(right, _ONE_MINUS_T)
        if lhs != rhs:
            raise ValueError(
                "PolyIdentityForm sides disagree as polynomials: "
                f"{lhs.coeffs} vs {rhs.coeffs}"
            )


def sun_lemma_form(m: int, n: int, r: int) -> PolyIdentityForm:
    """The double-binomial identity connecting powers of t and 1-t, packaged
    as a transferable form.  Requires r <= min(m, n) so no exponent is
    negative."""
    if min(m, n, r) < 0:
        raise ValueError("sun_lemma_form requires m, n, r >= 0")
    if r > m or r > n:
        raise ValueError(
            f"sun_lemma_form requires r <= min(m, n); got m={m}, n={n}, r={r}"
        )
    left = tuple(
        (alt_sign(k - r) * binom_int(n, k) * binom_rat(k + m, r), k + m - r)
        for k in range(n + 1)
    )
    right = tuple(
        (alt_sign(k) * binom_int(m, k) * binom_rat(k + n, r), n + k - r)
        for k in range(m + 1)
    )
    return PolyIdentityForm(left, right)


def check_sun_lemma(m: int, n: int, r: int) -> bool:
    """Coefficientwise check of the double-binomial t/(1-t) identity."""
    form = sun_lemma_form(m, n, r)  # raises on negative exponents
    lhs = _term_sum(form.left_terms, _T_BASE)
    rhs = _term_sum(form.right_terms, _ONE_MINUS_T)
    return lhs == rhs


def transfer_identity(form: PolyIdentityForm, pair: Pair) -> SideReport:
    """Evaluate a polynomial-form identity on a transform pair.

    For a first-kind pair the powers map straight onto sequence indices:
    sum(f_i s_{p_i}) = sum(g_i sigma_{q_i}).  For a second-kind pair the
    left side picks up the extra weight (-1)**p_i.
    """
    if pair.kind is Kind.FIRST:
        lhs = sum((c * pair.left(e) for c, e in form.left_terms), ZERO)
    else:
        lhs = sum(
            (alt_sign(e) * c * pair.left(e) for c, e in form.left_terms), ZERO
        )
    rhs = sum((c * pair.right(e) for c, e in form.right_terms), ZERO)
    return SideReport(lhs, rhs, {"pair": pair.label, "kind": pair.kind.value})


def check_poly_first(p: Pair, n: int) -> bool:
    """Coefficientwise identity attached to a first-kind pair:
    sum(C(n,k) s_{n-k} y**k) = sum((-1)**(n-k) C(n,k) sigma_{n-k} (1+y)**k)."""
    require_kind(p, Kind.FIRST)
    if n < 0:
        raise ValueError("check_poly_first requires n >= 0")
    lhs = Poly(tuple(binom_int(n, k) * p.left(n - k) for k in range(n + 1)))
    rhs = _term_sum(
        (
            (alt_sign(n - k) * binom_int(n, k) * p.right(n - k), k)
            for k in range(n + 1)
        ),
        _ONE_PLUS_T,
    )
    return lhs == rhs


def check_poly_second(p: Pair, n: int) -> bool:
    """Coefficientwise identity attached to a second-kind pair:
    sum((-1)**k C(n,k) s_{n-k} y**k) = sum((-1)**k C(n,k) sigma_{n-k} (1+y)**k)."""
    require_kind(p, Kind.SECOND)
    if n < 0:
        raise ValueError("check_poly_second requires n >= 0")
    lhs = Poly(tuple(alt_sign(k) * binom_int(n, k) * p.left(n - k) for k in range(n + 1)))
    rhs = _term_sum(
        ((alt_sign(k) * binom_int(n, k) * p.right(n - k), k) for k in range(n + 1)),
        _ONE_PLUS_T,
    )
    return lhs == rhs


# ---------------------------------------------------------------------------
# Named polynomial identities, verified coefficientwise in t
# ---------------------------------------------------------------------------


def _one_plus_t_pow(e: int) -> Poly:
    return affine_power(ONE, ONE, e)


def _named_harmonic_poly(m: int, n: int) -> bool:
    """sum(C(n,k) H_{k+m} t**k) = H_m (1+t)**n
    + sum_{k>=1}((-1)**(k-1) C(n,k) / (k C(k+m,m)) t**k (1+t)**(n-k))."""
    if m < 0 or n < 0:
        raise ValueError("harmonic_poly requires m >= 0 and n >= 0")
    lhs = Poly(tuple(binom_int(n, k) * harmonic(k + m) for k in range(n + 1)))
    rhs = poly_scale(_one_plus_t_pow(n), harmonic(m))
    for k in range(1, n + 1):
        coeff = alt_sign(k - 1) * binom_int(n, k) * inv_binom(k + m, m) / k
        rhs = poly_add(rhs, poly_scale(poly_mul(monomial(ONE, k), _one_plus_t_pow(n - k)), coeff))
    return lhs == rhs


def _named_odd_harmonic_poly(n: int) -> bool:
    """sum(C(n,k) O_k t**k)
    = sum_{k>=1}((-1)**(k-1) C(n,k) 2**(2k-1) / (k C(2k,k)) t**k (1+t)**(n-k))."""
    if n < 0:
        raise ValueError("odd_harmonic_poly requires n >= 0")
    lhs = Poly(tuple(binom_int(n, k) * odd_harmonic(k) for k in range(n + 1)))
    rhs = ZERO_POLY
    for k in range(1, n + 1):
        coeff = (
            alt_sign(k - 1)
            * binom_int(n, k)
            * _TWO ** (2 * k - 1)
            * inv_binom(2 * k, k)
            / k
        )
        rhs = poly_add(rhs, poly_scale(poly_mul(monomial(ONE, k), _one_plus_t_pow(n - k)), coeff))
    return lhs == rhs


def _named_bernoulli_poly_identity(x: RatLike, y: RatLike, n: int) -> bool:
    """sum((-1)**k C(n,k) y**k B_{n-k}(x) t**k)
    = sum((-1)**k C(n,k) y**k B_{n-k}(x+y) (1+t)**k)."""
    if n < 0:
        raise ValueError("bernoulli_poly_identity requires n >= 0")
    x = Fraction(x)
    y = Fraction(y)
    lhs = Poly(
        tuple(
            alt_sign(k) * y**k * binom_int(n, k) * bernoulli_poly(n - k, x)
            for k in range(n + 1)
        )
    )
    rhs = _term_sum(
        (
            (alt_sign(k) * binom_int(n, k) * y**k * bernoulli_poly(n - k, x + y), k)
            for k in range(n + 1)
        ),
        _ONE_PLUS_T,
    )
    return lhs == rhs


def _named_binom_poly(x: int, y: int, n: int) -> bool:
    """sum((-1)**(n-k) C(n,k) C(y-k,x) t**(n-k))
    = sum((-1)**k C(n,k) C(y-k,y-x) (1-t)**(n-k))."""
    if n < 0:
        raise ValueError("binom_poly requires n >= 0")
    if x < 0 or y - x < 0:
        raise ValueError(f"binom_poly requires 0 <= x <= y, got x={x}, y={y}")
    lhs = _term_sum(
        (
            (alt_sign(n - k) * binom_int(n, k) * binom_rat(y - k, x), n - k)
            for k in range(n + 1)
        ),
        _T_BASE,
    )
    rhs = _term_sum(
        (
            (alt_sign(k) * binom_int(n, k) * binom_rat(y - k, y - x), n - k)
            for k in range(n + 1)
        ),
        _ONE_MINUS_T,
    )
    return lhs == rhs


def _named_shifted_harmonic_poly(m: int, n: int) -> bool:
    """sum(C(n,k) H_{k+m} t**(n-k)) = H_m (1+t)**n
    - sum_{k>=1}((-1)**k C(n,k) / (k C(k+m,m)) (1+t)**(n-k))."""
    if m < 0 or n < 0:
        raise ValueError("shifted_harmonic_poly requires m >= 0 and n >= 0")
    lhs = _term_sum(
        ((binom_int(n, k) * harmonic(k + m), n - k) for k in range(n + 1)), _T_BASE
    )
    rhs = poly_scale(_one_plus_t_pow(n), harmonic(m))
    for k in range(1, n + 1):
        coeff = -alt_sign(k) * binom_int(n, k) * inv_binom(k + m, m) / k
        rhs = poly_add(rhs, poly_scale(_one_plus_t_pow(n - k), coeff))
    return lhs == rhs


def _named_partial_sum_poly(n: int) -> bool:
    """sum(C(n+1,k+1) H_k t**k) = sum((H_k - H_{n-k}) (1+t)**k)."""
    if n < 0:
        raise ValueError("partial_sum_poly requires n >= 0")
    lhs = Poly(tuple(binom_int(n + 1, k + 1) * harmonic(k) for k in range(n + 1)))
    rhs = _term_sum(
        ((harmonic(k) - harmonic(n - k), k) for k in range(n + 1)), _ONE_PLUS_T
    )
    return lhs == rhs


def _named_prefix_power_poly(n: int) -> bool:
    """sum((1+t)**k, k=0..n) = sum(C(n+1,k+1) t**k)."""
    if n < 0:
        raise ValueError("prefix_power_poly requires n >= 0")
    lhs = _term_sum(((ONE, k) for k in range(n + 1)), _ONE_PLUS_T)
    rhs = Poly(tuple(binom_int(n + 1, k + 1) for k in range(n + 1)))
    return lhs == rhs


#: Stable named-identity identifiers consumed by the verification registry.
NAMED_POLY_IDS = {
    "harmonic_poly": _named_harmonic_poly,
    "odd_harmonic_poly": _named_odd_harmonic_poly,
    "bernoulli_poly_identity": _named_bernoulli_poly_identity,
    "binom_poly": _named_binom_poly,
    "jy2d3um_poly": _named_shifted_harmonic_poly,
    "partial_sum_poly": _named_partial_sum_poly,
    "ps67scn_poly": _named_prefix_power_poly,
}


def named_poly_ids() -> tuple[str, ...]:
    return tuple(sorted(NAMED_POLY_IDS))


def check_named_poly(name: str, **params) -> bool:
    """Run one of the named coefficientwise identity checks."""
    try:
        checker = NAMED_POLY_IDS[name]
    except KeyError:
        raise ValueError(
            f"unknown named polynomial identity {name!r}; known ids: "
            f"{', '.join(named_poly_ids())}"
        ) from None
    return checker(**params)
