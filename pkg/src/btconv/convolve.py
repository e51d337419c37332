"""Evaluators for the binomial-convolution and symmetry relations.

Each checker evaluates both sides of a relation by direct summation and
returns them in a :class:`SideReport`; deciding equality (and reporting a
discrepancy exactly) is the caller's job.  Index parameters that a relation
excludes are expected to be filtered by the caller's sweep, mirroring the
summation limits of the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .exact import ONE, ZERO, Rat, alt_sign, binom_int
from .pairs import Kind, Pair, require_kind, s_m_value
from .seqlib import Seq

_HALF = Fraction(1, 2)
_TWO = Fraction(2)


@dataclass(frozen=True)
class SideReport:
    """Both sides of a checked relation, with the inputs echoed back."""

    lhs: Rat
    rhs: Rat
    params: Mapping = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def conv_alt(a: Seq, b: Seq, n: int) -> Rat:
    """Alternating binomial convolution sum((-1)**k C(n,k) a_k b_{n-k})."""
    if not 0 <= n <= min(a.n_max, b.n_max):
        raise IndexError(
            f"conv_alt needs 0 <= n <= {min(a.n_max, b.n_max)}, got n={n}"
        )
    return sum(
        (alt_sign(k) * binom_int(n, k) * a[k] * b[n - k] for k in range(n + 1)), ZERO
    )


def conv_plain(a: Seq, b: Seq, n: int) -> Rat:
    """Binomial convolution sum(C(n,k) a_k b_{n-k}) without signs."""
    if not 0 <= n <= min(a.n_max, b.n_max):
        raise IndexError(
            f"conv_plain needs 0 <= n <= {min(a.n_max, b.n_max)}, got n={n}"
        )
    return sum((binom_int(n, k) * a[k] * b[n - k] for k in range(n + 1)), ZERO)


def check_main1(p: Pair, q: Pair, n: int) -> SideReport:
    """Convolution relation between two first-kind pairs:
    sum((-1)**(n-k) C(n,k) s_k t_{n-k}) = sum((-1)**k C(n,k) sigma_k tau_{n-k})."""
    require_kind(p, Kind.FIRST, "p")
    require_kind(q, Kind.FIRST, "q")
    lhs = sum(
        (
            alt_sign(n - k) * binom_int(n, k) * p.left(k) * q.left(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * p.right(k) * q.right(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "q": q.label, "n": n})


def check_main2(p: Pair, q: Pair, n: int) -> SideReport:
    """Convolution relation between two second-kind pairs: the alternating
    convolution of the originals equals that of the transforms."""
    require_kind(p, Kind.SECOND, "p")
    require_kind(q, Kind.SECOND, "q")
    lhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * p.left(k) * q.left(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * p.right(k) * q.right(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "q": q.label, "n": n})


def check_swap(p: Pair, q: Pair, n: int) -> SideReport:
    """Cross convolution for second-kind pairs:
    sum(C(n,k) s_k tau_{n-k}) = sum(C(n,k) sigma_k t_{n-k})."""
    require_kind(p, Kind.SECOND, "p")
    require_kind(q, Kind.SECOND, "q")
    lhs = sum(
        (binom_int(n, k) * p.left(k) * q.right(n - k) for k in range(n + 1)), ZERO
    )
    rhs = sum(
        (binom_int(n, k) * p.right(k) * q.left(n - k) for k in range(n + 1)), ZERO
    )
    return SideReport(lhs, rhs, {"p": p.label, "q": q.label, "n": n})


def check_mixed(p: Pair, q: Pair, n: int) -> SideReport:
    """Mixed-kind convolution (p first kind, q second kind):
    sum(C(n,k) s_k t_{n-k}) = sum((-1)**k C(n,k) sigma_k tau_{n-k})."""
    require_kind(p, Kind.FIRST, "p")
    require_kind(q, Kind.SECOND, "q")
    lhs = sum(
        (binom_int(n, k) * p.left(k) * q.left(n - k) for k in range(n + 1)), ZERO
    )
    rhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * p.right(k) * q.right(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "q": q.label, "n": n})


def check_symmetry_first(p: Pair, m: int, n: int) -> SideReport:
    """Shifted-transform symmetry for a first-kind pair:
    sum_{k<=n}((-1)**k C(n,k) s_{k+m}) = sum_{k<=m}((-1)**k C(m,k) sigma_{k+n})."""
    require_kind(p, Kind.FIRST)
    if m < 0 or n < 0:
        raise ValueError("check_symmetry_first requires m, n >= 0")
    lhs = sum(
        (alt_sign(k) * binom_int(n, k) * p.left(k + m) for k in range(n + 1)), ZERO
    )
    rhs = sum(
        (alt_sign(k) * binom_int(m, k) * p.right(k + n) for k in range(m + 1)), ZERO
    )
    return SideReport(lhs, rhs, {"p": p.label, "m": m, "n": n})


def check_symmetry_second(p: Pair, m: int, n: int) -> SideReport:
    """Shifted-transform symmetry for a second-kind pair:
    sum_{k<=n}(C(n,k) s_{k+m}) = sum_{k<=m}((-1)**(k+m) C(m,k) sigma_{k+n})."""
    require_kind(p, Kind.SECOND)
    if m < 0 or n < 0:
        raise ValueError("check_symmetry_second requires m, n >= 0")
    lhs = sum((binom_int(n, k) * p.left(k + m) for k in range(n + 1)), ZERO)
    rhs = sum(
        (alt_sign(k + m) * binom_int(m, k) * p.right(k + n) for k in range(m + 1)),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "m": m, "n": n})


def check_gen1(p: Pair, q: Pair, m: int, r: int, n: int) -> SideReport:
    """Two-shift generalization of the first-kind convolution relation."""
    require_kind(p, Kind.FIRST, "p")
    require_kind(q, Kind.FIRST, "q")
    if m < 0 or r < 0 or n < 0:
        raise ValueError("check_gen1 requires m, r, n >= 0")
    lhs = sum(
        (
            alt_sign(k)
            * binom_int(n, k)
            * p.left(n - k + m)
            * sum(
                (alt_sign(qq) * binom_int(r, qq) * q.right(k + qq) for qq in range(r + 1)),
                ZERO,
            )
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (
            alt_sign(k)
            * binom_int(n, k)
            * q.left(n - k + r)
            * sum(
                (alt_sign(pp) * binom_int(m, pp) * p.right(k + pp) for pp in range(m + 1)),
                ZERO,
            )
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "q": q.label, "m": m, "r": r, "n": n})


def _alt_window(gen, order: int, base: int) -> Rat:
    """sum((-1)**p * C(order, p) * gen(base + p), p=0..order)."""
    return sum(
        (alt_sign(pp) * binom_int(order, pp) * gen(base + pp) for pp in range(order + 1)),
        ZERO,
    )


def check_nested_shift(p: Pair, m: int, r: int, n: int) -> SideReport:
    """Doubly shifted transform relation for a first-kind pair:
    sum_k((-1)**k C(n,k) sum_p((-1)**p C(r,p) s_{k+p+m}))
    = sum_k((-1)**k C(m,k) sigma_{n+k+r})."""
    require_kind(p, Kind.FIRST)
    if m < 0 or r < 0 or n < 0:
        raise ValueError("check_nested_shift requires m, r, n >= 0")
    lhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * _alt_window(p.left, r, k + m)
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (alt_sign(k) * binom_int(m, k) * p.right(n + k + r) for k in range(m + 1)),
        ZERO,
    )
    return SideReport(lhs, rhs, {"p": p.label, "m": m, "r": r, "n": n})


def check_gen2(
    p: Pair, q: Pair, m: int, n: int, r: int, u: int, v: int
) -> SideReport:
    """Five-index double-window generalization for two first-kind pairs."""
    require_kind(p, Kind.FIRST, "p")
    require_kind(q, Kind.FIRST, "q")
    if min(m, n, r, u, v) < 0:
        raise ValueError("check_gen2 requires all indices >= 0")
    lhs = sum(
        (
            alt_sign(k)
            * binom_int(n, k)
            * _alt_window(p.left, r, n - k + m)
            * _alt_window(q.left, u, k + v)
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (
            alt_sign(k)
            * binom_int(n, k)
            * _alt_window(p.right, m, k + r)
            * _alt_window(q.right, v, n - k + u)
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(
        lhs, rhs, {"p": p.label, "q": q.label, "m": m, "n": n, "r": r, "u": u, "v": v}
    )


#: Selectors accepted by :func:`check_extensions`.
EXTENSION_VARIANTS = ("i", "ii", "iii", "iv", "v")


def check_extensions(
    p: Pair,
    variant: str,
    j: int = 0,
    m: int = 0,
    n: int = 0,
    q: Pair | None = None,
) -> SideReport:
    """Power-of-two and weighted extension relations.

    * ``"i"`` (first kind, 0 <= j <= n):
      sum((-1)**k C(n-j,k) 2**(n-k) s_k) = 2**j sum(C(n-j,k) sigma_k).
    * ``"ii"`` (first kind, j >= 0):
      sum((-1)**(n-k) C(n,k) C(n-k,j) 2**k s_k)
      = sum((-1)**(j-k) C(n,k) C(n-k,j) 2**k sigma_k).
    * ``"iii"`` (both second kind):
      sum(C(n,k) 2**-k s_k tau_{n-k})
      = sum(C(n,k) 2**-k t_{n-k} sum_{i<=k}(C(k,i) sigma_i)).
    * ``"iv"`` (both first kind):
      sum_{k>=1}((-1)**(n-k-1) C(n,k) s_{k-1} t_{n-k})
      = sum_{k>=1}((-1)**k C(n,k) tau_{n-k} sum_{i=1..k}(sigma_{i-1})).
    * ``"v"`` (both first kind, m >= 0):
      sum((-1)**(n-k) C(n,k) k**m s_k t_{n-k})
      = sum((-1)**k C(n,k) S_m(k) tau_{n-k}).
    """
    if variant not in EXTENSION_VARIANTS:
        raise ValueError(
            f"unknown extension variant {variant!r}; expected one of "
            f"{', '.join(EXTENSION_VARIANTS)}"
        )
    if n < 0:
        raise ValueError("check_extensions requires n >= 0")
    if q is None:
        q = p
    params = {"p": p.label, "variant": variant, "n": n}
    if q is not p:
        params["q"] = q.label

    if variant == "i":
        require_kind(p, Kind.FIRST)
        if not 0 <= j <= n:
            raise ValueError(f"variant 'i' requires 0 <= j <= n, got j={j}, n={n}")
        lhs = sum(
            (
                alt_sign(k) * binom_int(n - j, k) * _TWO ** (n - k) * p.left(k)
                for k in range(n + 1)
            ),
            ZERO,
        )
        rhs = _TWO**j * sum(
            (binom_int(n - j, k) * p.right(k) for k in range(n + 1)), ZERO
        )
        return SideReport(lhs, rhs, {**params, "j": j})

    if variant == "ii":
        require_kind(p, Kind.FIRST)
        if j < 0:
            raise ValueError(f"variant 'ii' requires j >= 0, got {j}")
        lhs = sum(
            (
                alt_sign(n - k)
                * binom_int(n, k)
                * binom_int(n - k, j)
                * _TWO**k
                * p.left(k)
                for k in range(n + 1)
            ),
            ZERO,
        )
        rhs = sum(
            (
                alt_sign(j - k)
                * binom_int(n, k)
                * binom_int(n - k, j)
                * _TWO**k
                * p.right(k)
                for k in range(n + 1)
            ),
            ZERO,
        )
        return SideReport(lhs, rhs, {**params, "j": j})

    if variant == "iii":
        require_kind(p, Kind.SECOND, "p")
        require_kind(q, Kind.SECOND, "q")
        lhs = sum(
            (
                binom_int(n, k) * _HALF**k * p.left(k) * q.right(n - k)
                for k in range(n + 1)
            ),
            ZERO,
        )
        rhs = sum(
            (
                binom_int(n, k)
                * _HALF**k
                * q.left(n - k)
                * sum((binom_int(k, i) * p.right(i) for i in range(k + 1)), ZERO)
                for k in range(n + 1)
            ),
            ZERO,
        )
        return SideReport(lhs, rhs, params)

    if variant == "iv":
        require_kind(p, Kind.FIRST, "p")
        require_kind(q, Kind.FIRST, "q")
        lhs = sum(
            (
                alt_sign(n - k - 1) * binom_int(n, k) * p.left(k - 1) * q.left(n - k)
                for k in range(1, n + 1)
            ),
            ZERO,
        )
        rhs = sum(
            (
                alt_sign(k)
                * binom_int(n, k)
                * q.right(n - k)
                * sum((p.right(i - 1) for i in range(1, k + 1)), ZERO)
                for k in range(1, n + 1)
            ),
            ZERO,
        )
        return SideReport(lhs, rhs, params)

    # variant "v"
    require_kind(p, Kind.FIRST, "p")
    require_kind(q, Kind.FIRST, "q")
    if m < 0:
        raise ValueError(f"variant 'v' requires m >= 0, got {m}")
    lhs = sum(
        (
            alt_sign(n - k) * binom_int(n, k) * Fraction(k) ** m * p.left(k) * q.left(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    rhs = sum(
        (
            alt_sign(k) * binom_int(n, k) * s_m_value(p, m, k) * q.right(n - k)
            for k in range(n + 1)
        ),
        ZERO,
    )
    return SideReport(lhs, rhs, {**params, "m": m})
