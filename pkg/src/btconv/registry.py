"""The identity registry: one entry per verified relation.

Each entry couples a stable id with a parameter domain and an evaluator
that computes both sides of the relation exactly (or runs a coefficientwise
polynomial check, reported as a boolean).  Domains apply the guards an
identity needs — excluded index values are skipped exactly the way the
closed forms' summation limits skip them, never silently emptying a domain.

Sweep conventions:

* ``n``-like indices run 0..nmax (1..nmax where the relation excludes 0);
* free rational parameters run over ``R_GRID`` minus per-entry exclusions;
* auxiliary shift/window indices run over small fixed ranges (documented
  per entry) so the full sweep stays desk-scale;
* relations quantified over "every transform pair" are swept over a fixed
  family of catalog pairs plus a seeded random pair.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Callable, Iterable, Mapping

from . import convolve as cv
from . import polyring as pr
from .exact import ONE, ZERO, Rat, alt_sign, binom_int, binom_rat, inv_binom
from .pairs import (
    Classification,
    Kind,
    Pair,
    catalog_pair,
    classify,
    fibonacci_pair,
    lucas_pair,
    random_pair,
    s_m_value,
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
from .verify import IdentityCheck

F = Fraction
_TWO = F(2)
_HALF = F(1, 2)

#: Grid for free rational parameters.
R_GRID = (F(-1), F(-5, 7), F(-1, 2), F(0), F(1, 2), F(1), F(3))
NZ_GRID = tuple(x for x in R_GRID if x != 0)

#: Length of the seeded random prefixes; covers every index any sweep needs.
RANDOM_LEN = 48

_B = bernoulli_number
_H = harmonic
_O = odd_harmonic
_C = binom_int
_Cr = binom_rat
_IC = inv_binom
_sgn = alt_sign


def _fsum(terms: Iterable[Rat]) -> Rat:
    return sum(terms, ZERO)


# ---------------------------------------------------------------------------
# Pair families for "holds for every transform pair" sweeps
# ---------------------------------------------------------------------------

FIRST_NAMES = ("fib", "harm2", "lucas", "power_half", "rnd1")
SECOND_NAMES = ("bern", "binx", "harmbin2", "pow2", "rnd2")

FIRST_DUOS = (("fib", "lucas"), ("power_half", "rnd1"), ("rnd1", "rnd1b"))
SECOND_DUOS = (("bern", "binx"), ("pow2", "rnd2"), ("rnd2", "rnd2b"))


@lru_cache(maxsize=None)
def _first(name: str, seed: int) -> Pair:
    if name == "fib":
        return fibonacci_pair()
    if name == "lucas":
        return lucas_pair()
    if name == "power_half":
        return catalog_pair("power", x=_HALF)
    if name == "harm2":
        return catalog_pair("harmonic_plus_m", m=2)
    if name in ("rnd1", "rnd1b"):
        return random_pair(Kind.FIRST, f"{seed}:{name}", RANDOM_LEN)
    raise ValueError(f"unknown first-kind family member {name!r}")


@lru_cache(maxsize=None)
def _second(name: str, seed: int) -> Pair:
    if name == "bern":
        return catalog_pair("bernoulli")
    if name == "binx":
        return catalog_pair("binom_x", x=F(-5, 7))
    if name == "harmbin2":
        return catalog_pair("harmonic_binom_m", m=2)
    if name == "pow2":
        return catalog_pair("power2", x=_HALF)
    if name in ("rnd2", "rnd2b"):
        return random_pair(Kind.SECOND, f"{seed}:{name}", RANDOM_LEN)
    raise ValueError(f"unknown second-kind family member {name!r}")


# Sequences with a known first-kind classification, used by the parity laws.
INVARIANT_SEQS = ("central", "kfib", "lucas")
INVERSE_INVARIANT_SEQS = ("fib", "harm_ratio")


def _classified_gen(name: str) -> Callable[[int], Rat]:
    if name == "lucas":
        return lambda k: lucas(k)
    if name == "kfib":
        return lambda k: k * fibonacci(k - 1) if k else ZERO
    if name == "central":
        return lambda k: _C(2 * k, k) * _HALF ** (2 * k)
    if name == "fib":
        return lambda k: fibonacci(k)
    if name == "harm_ratio":
        return lambda k: _H(k) / (k + 1)
    raise ValueError(f"unknown classified sequence {name!r}")


# ---------------------------------------------------------------------------
# Registry assembly
# ---------------------------------------------------------------------------

_ENTRIES: list[IdentityCheck] = []


def _register(identity_id: str, anchor: str, domain) -> Callable:
    def decorate(evaluator):
        _ENTRIES.append(
            IdentityCheck(
                id=identity_id, anchor=anchor, domain=domain, evaluator=evaluator
            )
        )
        return evaluator

    return decorate


def _dom(**axes):
    """Cartesian-product domain over fixed axes (ordered as given)."""
    names = list(axes)
    values = [list(v) for v in axes.values()]

    def build(nmax: int):
        del nmax
        return [dict(zip(names, combo)) for combo in _cartesian(*values)]

    return build


def _dom_n(n_lo: int = 0, **axes):
    """Domain sweeping n in n_lo..nmax crossed with fixed axes."""
    names = list(axes)
    values = [list(v) for v in axes.values()]

    def build(nmax: int):
        out = []
        for combo in _cartesian(*values):
            for n in range(n_lo, nmax + 1):
                out.append({**dict(zip(names, combo)), "n": n})
        return out

    return build


# -- core convolution theorems ----------------------------------------------


@_register(
    "main1_random",
    "alternating convolution of two first-kind pairs equals that of their transforms",
    _dom_n(),
)
def _eval_main1_random(params: Mapping, seed: int):
    rep = cv.check_main1(_first("rnd1", seed), _first("rnd1b", seed), params["n"])
    return rep.lhs, rep.rhs


@_register(
    "main1_catalog_harm_odd",
    "first-kind convolution of shifted-harmonic and odd-harmonic catalog pairs",
    _dom_n(m=range(4)),
)
def _eval_main1_harm_odd(params, seed):
    p = catalog_pair("harmonic_plus_m", m=params["m"])
    q = catalog_pair("odd_harmonic")
    rep = cv.check_main1(p, q, params["n"])
    return rep.lhs, rep.rhs


@_register(
    "main1_catalog_fib_lucas",
    "first-kind convolution of the Fibonacci and Lucas pairs",
    _dom_n(),
)
def _eval_main1_fib_lucas(params, seed):
    rep = cv.check_main1(fibonacci_pair(), lucas_pair(), params["n"])
    return rep.lhs, rep.rhs


@_register(
    "main1_catalog_power_central",
    "first-kind convolution of a geometric pair with the central-binomial pair",
    _dom_n(x=R_GRID),
)
def _eval_main1_power_central(params, seed):
    rep = cv.check_main1(
        catalog_pair("power", x=params["x"]), catalog_pair("central_floor"), params["n"]
    )
    return rep.lhs, rep.rhs


@_register(
    "main2_random",
    "alternating convolution of two second-kind pairs equals that of their transforms",
    _dom_n(),
)
def _eval_main2_random(params, seed):
    rep = cv.check_main2(_second("rnd2", seed), _second("rnd2b", seed), params["n"])
    return rep.lhs, rep.rhs


@_register(
    "main2_catalog_bernoulli_binom_x",
    "second-kind convolution of the Bernoulli pair with a binomial-column pair",
    _dom_n(x=R_GRID),
)
def _eval_main2_bern_binx(params, seed):
    rep = cv.check_main2(
        catalog_pair("bernoulli"), catalog_pair("binom_x", x=params["x"]), params["n"]
    )
    return rep.lhs, rep.rhs


@_register(
    "main2_catalog_poly_shift",
    "second-kind convolution of a Bernoulli-polynomial shift pair with the Bernoulli pair",
    _dom_n(x=R_GRID, y=NZ_GRID),
)
def _eval_main2_poly_shift(params, seed):
    rep = cv.check_main2(
        catalog_pair("bernoulli_poly_shift", x=params["x"], y=params["y"]),
        catalog_pair("bernoulli"),
        params["n"],
    )
    return rep.lhs, rep.rhs


@_register(
    "swap_second",
    "cross convolution of two second-kind pairs is symmetric under swapping the pairs",
    _dom_n(p=SECOND_NAMES, q=SECOND_NAMES),
)
def _eval_swap(params, seed):
    rep = cv.check_swap(
        _second(params["p"], seed), _second(params["q"], seed), params["n"]
    )
    return rep.lhs, rep.rhs


@_register(
    "mixed",
    "plain convolution of a first-kind pair with a second-kind pair equals the "
    "alternating convolution of their transforms",
    _dom_n(p=FIRST_NAMES, q=SECOND_NAMES),
)
def _eval_mixed(params, seed):
    rep = cv.check_mixed(
        _first(params["p"], seed), _second(params["q"], seed), params["n"]
    )
    return rep.lhs, rep.rhs


# -- symmetry and its generalizations ---------------------------------------


@_register(
    "symmetry_first",
    "shifted alternating sums over a first-kind pair agree when the shift and "
    "summation order are exchanged",
    _dom_n(pair=FIRST_NAMES, m=range(5)),
)
def _eval_symmetry_first(params, seed):
    rep = cv.check_symmetry_first(_first(params["pair"], seed), params["m"], params["n"])
    return rep.lhs, rep.rhs


@_register(
    "symmetry_second",
    "shifted plain sum over a second-kind pair equals the signed shifted sum "
    "over its transform",
    _dom_n(pair=SECOND_NAMES, m=range(5)),
)
def _eval_symmetry_second(params, seed):
    rep = cv.check_symmetry_second(_second(params["pair"], seed), params["m"], params["n"])
    return rep.lhs, rep.rhs


@_register(
    "gen1",
    "two-shift windowed generalization of the first-kind convolution relation",
    _dom_n(pq=FIRST_DUOS, m=range(4), r=range(4)),
)
def _eval_gen1(params, seed):
    p, q = (_first(name, seed) for name in params["pq"])
    rep = cv.check_gen1(p, q, params["m"], params["r"], params["n"])
    return rep.lhs, rep.rhs


@_register(
    "ofdjag5",
    "double-binomial window identity C(n,k)C(n-k+m,u)C(r,j-k) summed two ways",
    _dom_n(u=range(4), j=range(4), m=R_GRID, r=R_GRID),
)
def _eval_ofdjag5(params, seed):
    n, u, j, m, r = (params[k] for k in ("n", "u", "j", "m", "r"))
    lhs = _fsum(
        _C(n, k) * _Cr(n - k + m, u) * _Cr(r, j - k) for k in range(n + 1)
    )
    rhs = _fsum(
        _C(n, k) * _Cr(n - k + r, j) * _Cr(m, u - k) for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "gen2",
    "five-index double-window generalization of the first-kind convolution relation",
    _dom_n(pq=FIRST_DUOS, m=range(3), r=range(3), u=range(3), v=range(3)),
)
def _eval_gen2(params, seed):
    p, q = (_first(name, seed) for name in params["pq"])
    rep = cv.check_gen2(
        p, q, params["m"], params["n"], params["r"], params["u"], params["v"]
    )
    return rep.lhs, rep.rhs


@_register(
    "nested_shift",
    "doubly shifted alternating window reduces to a single shifted transform sum",
    _dom_n(pair=FIRST_NAMES, m=range(4), r=range(4)),
)
def _eval_nested_shift(params, seed):
    rep = cv.check_nested_shift(
        _first(params["pair"], seed), params["m"], params["r"], params["n"]
    )
    return rep.lhs, rep.rhs


# -- first-kind catalog consequences ----------------------------------------


def _binom_upper_conv_domain(nmax: int):
    # the upper-shifted binomial pair is only valid for indices <= y
    return [
        {"pair": pair, "x": x, "y_off": y_off, "n": n}
        for pair in FIRST_NAMES
        for x in range(4)
        for y_off in range(5)
        for n in range(min(nmax, x + y_off) + 1)
    ]


@_register(
    "binom_upper_conv",
    "convolution of the upper-shifted binomial pair with an arbitrary first-kind pair",
    _binom_upper_conv_domain,
)
def _eval_binom_upper_conv(params, seed):
    q = _first(params["pair"], seed)
    n, x = params["n"], params["x"]
    y = x + params["y_off"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * _Cr(y - k, x) * q.left(n - k) for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _C(n, k) * _Cr(y - k, y - x) * q.right(n - k) for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "harmonic_frac_conv",
    "convolution of the weighted shifted-harmonic pair with an arbitrary "
    "first-kind pair",
    _dom_n(pair=FIRST_NAMES, m=range(1, 4)),
)
def _eval_harmonic_frac_conv(params, seed):
    q = _first(params["pair"], seed)
    n, m = params["n"], params["m"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * (m * _H(k + m) / (k + m)) * q.left(n - k)
        for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _C(n, k) * _IC(k + m, m) * (_H(k + m) - _H(k)) * q.right(n - k)
        for k in range(n + 1)
    )
    return lhs, rhs


def _gibonacci_harmonic_domain(nmax: int):
    out = []
    for g0, g1 in ((F(0), F(1)), (F(2), F(1)), (F(1), F(3))):
        for t in (1, -1, 2):
            for r in range(3):
                for m in (1, 2):
                    for n in range(nmax + 1):
                        out.append(
                            {"display": "general", "g0": g0, "g1": g1, "t": t,
                             "r": r, "m": m, "n": n}
                        )
    for m in range(1, 4):
        for n in range(nmax + 1):
            out.append({"display": "fibonacci", "g0": F(0), "g1": F(1), "t": 1,
                        "r": 0, "m": m, "n": n})
    for n in range(nmax + 1):
        out.append({"display": "special", "g0": F(0), "g1": F(1), "t": 1,
                    "r": 0, "m": 1, "n": n})
    return out


@_register(
    "gibonacci_harmonic",
    "weighted harmonic convolution against a Lucas-power gibonacci ratio, with "
    "its Fibonacci and m=1 special cases",
    _gibonacci_harmonic_domain,
)
def _eval_gibonacci_harmonic(params, seed):
    display = params["display"]
    n, m = params["n"], params["m"]
    if display == "fibonacci":
        lhs = _fsum(
            _sgn(n - k) * _C(n, k) * F(m, 1) / (k + m) * _H(k + m) * fibonacci(n - k)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k - 1) * _C(n, k) * _IC(k + m, m) * (_H(k + m) - _H(k)) * fibonacci(n - k)
            for k in range(n + 1)
        )
        return lhs, rhs
    if display == "special":
        lhs = _fsum(
            _sgn(n - k) * _C(n, k) * _H(k + 1) * fibonacci(n - k) / (k + 1)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k - 1) * _C(n, k) * fibonacci(n - k) / (k + 1) ** 2
            for k in range(n + 1)
        )
        return lhs, rhs
    g0, g1, t, r = params["g0"], params["g1"], params["t"], params["r"]
    lt = lucas(t)
    lhs = _fsum(
        _sgn(n - k)
        * _C(n, k)
        * (m * _H(k + m) / (k + m))
        * lt**k
        * gibonacci(g0, g1, t * (n - k) + r)
        for k in range(n + 1)
    )
    rhs = _sgn(r) * _fsum(
        _sgn(k)
        * _C(n, k)
        * _IC(k + m, m)
        * (_H(k + m) - _H(k))
        * lt**k
        * (g0 * lucas(t * (n - k) - r) - gibonacci(g0, g1, t * (n - k) - r))
        for k in range(n + 1)
    )
    return lhs, rhs


def _binom_ratio_domain(nmax: int):
    # n <= x + y_off keeps the upper-shifted binomial data valid; integer v
    # below n would zero C(v, n-k) and is excluded as the closed form demands
    out = []
    for x in range(3):
        for y_off in range(4):
            n_cap = min(nmax, x + y_off)
            for u in R_GRID:
                for v in R_GRID:
                    for n in range(n_cap + 1):
                        if v.denominator == 1 and 0 <= v < n:
                            continue
                        out.append({"display": "full", "x": x, "y_off": y_off,
                                    "u": u, "v": v, "n": n})
    for x in range(3):
        for y_off in range(4):
            n_cap = min(nmax, x + y_off)
            for u in R_GRID:
                for n in range(n_cap + 1):
                    out.append({"display": "v_eq_n", "x": x, "y_off": y_off,
                                "u": u, "v": F(0), "n": n})
    for x in range(3):
        for y_off in range(4):
            n_cap = min(nmax, x + y_off)
            for n in range(n_cap + 1):
                out.append({"display": "transform", "x": x, "y_off": y_off,
                            "u": F(0), "v": F(0), "n": n})
    return out


@_register(
    "binom_ratio_conv",
    "convolution of the upper-shifted binomial pair with a binomial-ratio pair, "
    "its v=n reduction, and the bare transform evaluation",
    _binom_ratio_domain,
)
def _eval_binom_ratio_conv(params, seed):
    display = params["display"]
    n, x = params["n"], params["x"]
    y = x + params["y_off"]
    if display == "full":
        u, v = params["u"], params["v"]
        lhs = _fsum(
            _sgn(n - k) * _C(n, k) * _Cr(y - k, x) * _Cr(u, n - k) * _IC(v, n - k)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k) * _C(n, k) * _Cr(y - k, y - x) * _Cr(v - u, n - k) * _IC(v, n - k)
            for k in range(n + 1)
        )
        return lhs, rhs
    if display == "v_eq_n":
        u = params["u"]
        lhs = _fsum(
            _sgn(n - k) * _Cr(y - k, x) * _Cr(u, n - k) for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k) * _Cr(y - k, y - x) * _Cr(n - u, n - k) for k in range(n + 1)
        )
        return lhs, rhs
    lhs = _fsum(_sgn(k) * _C(n, k) * _Cr(y - k, y - x) for k in range(n + 1))
    rhs = _Cr(y - n, x)
    return lhs, rhs


def _harm_odd_rhs_tail(n: int, m: int) -> Rat:
    return _fsum(
        _sgn(k)
        * _C(n, k)
        * _TWO ** (2 * (n - k) - 1)
        / (k * (n - k))
        * _IC(k + m, m)
        * _IC(2 * (n - k), n - k)
        for k in range(1, n)
    )


@_register(
    "harm_odd_conv",
    "alternating convolution of shifted harmonic with odd harmonic numbers, "
    "closed through central-binomial reciprocals",
    lambda nmax: (
        [{"display": "with_m", "m": m, "n": n}
         for m in range(4) for n in range(1, nmax + 1)]
        + [{"display": "plain", "m": 0, "n": n} for n in range(1, nmax + 1)]
    ),
)
def _eval_harm_odd_conv(params, seed):
    n, m = params["n"], params["m"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * _H(k + m) * _O(n - k) for k in range(n + 1)
    )
    if params["display"] == "with_m":
        rhs = -_H(m) / n * _IC(2 * n, n) * _TWO ** (2 * n - 1) + _harm_odd_rhs_tail(n, m)
    else:
        rhs = _harm_odd_rhs_tail(n, 0)
    return lhs, rhs


def _self_conv_domain(nmax: int):
    out = []
    for pair in FIRST_NAMES:
        for n in range(nmax + 1):
            out.append({"pair": pair, "aspect": "transforms_agree", "n": n})
            if n % 2 == 1:
                out.append({"pair": pair, "aspect": "odd_zero", "n": n})
    return out


@_register(
    "self_conv_pt7l41w",
    "alternating self-convolution is preserved by the first-kind transform and "
    "vanishes at odd order",
    _self_conv_domain,
)
def _eval_self_conv(params, seed):
    p = _first(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * p.left(k) * p.left(n - k) for k in range(n + 1)
    )
    if params["aspect"] == "odd_zero":
        return lhs, ZERO
    rhs = _fsum(
        _sgn(k) * _C(n, k) * p.right(k) * p.right(n - k) for k in range(n + 1)
    )
    return lhs, rhs


def _even_cased_catalan(n: int) -> Rat:
    if n % 2:
        return ZERO
    return catalan(n // 2) * _C(n, n // 2)


@_register(
    "catalan_mikic",
    "alternating self-convolution of Catalan numbers: cased central-binomial value",
    _dom_n(),
)
def _eval_catalan_mikic(params, seed):
    n = params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * catalan(k) * catalan(n - k) for k in range(n + 1)
    )
    return lhs, _even_cased_catalan(n)


@_register(
    "catalan_floor",
    "alternating self-convolution of central floor binomials: cased Catalan value",
    _dom_n(),
)
def _eval_catalan_floor(params, seed):
    n = params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _C(k, k // 2) * _C(n - k, (n - k) // 2)
        for k in range(n + 1)
    )
    return lhs, _even_cased_catalan(n)


@_register(
    "harm_sq_conv",
    "alternating self-convolution of weighted shifted harmonics, and its m=1 case",
    lambda nmax: (
        [{"display": "with_m", "m": m, "n": n}
         for m in range(1, 4) for n in range(nmax + 1)]
        + [{"display": "particular", "m": 1, "n": n} for n in range(nmax + 1)]
    ),
)
def _eval_harm_sq_conv(params, seed):
    n, m = params["n"], params["m"]
    if params["display"] == "with_m":
        lhs = _fsum(
            _sgn(k)
            * _C(n, k)
            * (m * m * _H(k + m) * _H(n - k + m))
            / ((k + m) * (n - k + m))
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k)
            * _C(n, k)
            * _IC(k + m, k)
            * _IC(n - k + m, n - k)
            * (_H(k + m) - _H(k))
            * (_H(n - k + m) - _H(n - k))
            for k in range(n + 1)
        )
        return lhs, rhs
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _H(k + 1) * _H(n - k + 1) / ((k + 1) * (n - k + 1))
        for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _C(n, k) / ((k + 1) ** 2 * (n - k + 1) ** 2) for k in range(n + 1)
    )
    return lhs, rhs


def _y_grid_nonvanishing(nmax: int):
    out = []
    for y in R_GRID:
        for n in range(nmax + 1):
            if y.denominator == 1 and 0 <= y < n:
                continue
            out.append({"y": y, "n": n})
    return out


@_register(
    "hiez2vp",
    "cube of binomials over reciprocal binomials equals its shifted counterpart",
    _y_grid_nonvanishing,
)
def _eval_hiez2vp(params, seed):
    y, n = params["y"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) ** 3 * _IC(y, k) * _IC(y, n - k) for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k)
        * _C(n, k)
        * _Cr(y - n, k)
        * _Cr(y - n, n - k)
        * _IC(y, k)
        * _IC(y, n - k)
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "u00e6qz",
    "self-convolution over reciprocal row binomials is x to n-x symmetric",
    _dom_n(x=R_GRID),
)
def _eval_u00e6qz(params, seed):
    x, n = params["x"], params["n"]
    lhs = _fsum(
        _sgn(k) * _Cr(x, k) * _Cr(x, n - k) * _IC(n, k) for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _Cr(n - x, k) * _Cr(n - x, n - k) * _IC(n, k) for k in range(n + 1)
    )
    return lhs, rhs


def _cased_alternating_cube(n: int) -> Rat:
    if n % 2:
        return ZERO
    h = n // 2
    return _sgn(h) * _C(n, h) * _C(3 * h, n)


@_register(
    "dixon",
    "alternating sum of cubed binomials: cased closed form",
    _dom_n(),
)
def _eval_dixon(params, seed):
    n = params["n"]
    lhs = _fsum(_sgn(k) * _C(n, k) ** 3 for k in range(n + 1))
    return lhs, _cased_alternating_cube(n)


@_register(
    "dixon_dual",
    "alternating product of ascending and descending binomials: same cased value",
    _dom_n(),
)
def _eval_dixon_dual(params, seed):
    n = params["n"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * _C(n + k, k) * _C(2 * n - k, n - k)
        for k in range(n + 1)
    )
    return lhs, _cased_alternating_cube(n)


@_register(
    "sury_corollary",
    "alternating sums over reciprocal binomials with parity-cased closed forms",
    lambda nmax: [
        {"display": d, "n": n} for d in ("base", "derived") for n in range(nmax + 1)
    ],
)
def _eval_sury(params, seed):
    n = params["n"]
    if params["display"] == "base":
        lhs = _fsum(_sgn(k) * _IC(n, k) for k in range(n + 1))
        rhs = (1 + _sgn(n)) * F(n + 1, n + 2)
    else:
        lhs = _fsum(
            _sgn(k) * _C(n, k) / ((n - k + 1) * (k + 1)) for k in range(n + 1)
        )
        rhs = (1 + _sgn(n)) / F((n + 1) * (n + 2))
    return lhs, rhs


def _parity_domain(nmax: int):
    like = [(s, t) for s in INVARIANT_SEQS for t in INVARIANT_SEQS]
    like += [(s, t) for s in INVERSE_INVARIANT_SEQS for t in INVERSE_INVARIANT_SEQS]
    unlike = [(s, t) for s in INVARIANT_SEQS for t in INVERSE_INVARIANT_SEQS]
    out = []
    for s, t in like:
        out.extend({"s": s, "t": t, "n": n} for n in range(1, nmax + 1, 2))
    for s, t in unlike:
        out.extend({"s": s, "t": t, "n": n} for n in range(0, nmax + 1, 2))
    return out


@_register(
    "rgyk46r_parity",
    "alternating convolution of two transform-fixed sequences vanishes at odd "
    "order for like classifications and even order for unlike ones",
    _parity_domain,
)
def _eval_parity(params, seed):
    s = _classified_gen(params["s"])
    t = _classified_gen(params["t"])
    n = params["n"]
    lhs = _fsum(_sgn(k) * _C(n, k) * s(k) * t(n - k) for k in range(n + 1))
    return lhs, ZERO


def _lucas_x2_domain(nmax: int):
    out = []
    for x in R_GRID:
        if x == 0:
            continue
        for n in range(1, nmax + 1, 2):
            if x.denominator == 1 and 0 <= x < n:
                continue
            out.append({"x": x, "n": n})
    return out


@_register(
    "lucas_x2_odd",
    "halved-to-full binomial ratio convolved with Lucas numbers vanishes at odd order",
    _lucas_x2_domain,
)
def _eval_lucas_x2(params, seed):
    x, n = params["x"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _Cr(x / 2, k) * _IC(x, k) * lucas(n - k)
        for k in range(n + 1)
    )
    return lhs, ZERO


# -- Bernoulli consequences --------------------------------------------------


def _bps_domain(nmax: int):
    out = []
    for pair in SECOND_NAMES:
        for x in R_GRID:
            for y in NZ_GRID:
                out.extend(
                    {"display": "pair_form", "pair": pair, "x": x, "z": F(0),
                     "y": y, "w": F(1), "n": n}
                    for n in range(nmax + 1)
                )
    for x in R_GRID:
        for z in R_GRID:
            for y in NZ_GRID:
                for w in NZ_GRID:
                    out.extend(
                        {"display": "double", "pair": "", "x": x, "z": z,
                         "y": y, "w": w, "n": n}
                        for n in range(nmax + 1)
                    )
    for x in R_GRID:
        for z in R_GRID:
            for w in R_GRID:
                out.extend(
                    {"display": "same_shift", "pair": "", "x": x, "z": z,
                     "y": F(1), "w": w, "n": n}
                    for n in range(nmax + 1)
                )
    for y in NZ_GRID:
        for w in NZ_GRID:
            out.extend(
                {"display": "reduce_to_numbers", "pair": "", "x": F(0), "z": F(0),
                 "y": y, "w": w, "n": n}
                for n in range(nmax + 1)
            )
    return out


@_register(
    "bernoulli_poly_shift_conv",
    "Bernoulli-polynomial shift pair convolved with arbitrary second-kind pairs "
    "and with itself, including the reduction to Bernoulli numbers",
    _bps_domain,
)
def _eval_bps(params, seed):
    display = params["display"]
    n = params["n"]
    x, y = params["x"], params["y"]
    if display == "pair_form":
        q = _second(params["pair"], seed)
        lhs = _fsum(
            _sgn(k) * _C(n, k) * y**k * bernoulli_poly(n - k, x) * q.left(k)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k) * _C(n, k) * y**k * bernoulli_poly(n - k, x + y) * q.right(k)
            for k in range(n + 1)
        )
        return lhs, rhs
    if display == "double":
        z, w = params["z"], params["w"]
        ratio = y / w
        lhs = _fsum(
            _sgn(k) * _C(n, k) * ratio**k * bernoulli_poly(n - k, x)
            * bernoulli_poly(k, z)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k) * _C(n, k) * ratio**k * bernoulli_poly(n - k, x + y)
            * bernoulli_poly(k, z + w)
            for k in range(n + 1)
        )
        return lhs, rhs
    if display == "same_shift":
        z, w = params["z"], params["w"]
        lhs = _fsum(
            _sgn(k) * _C(n, k) * bernoulli_poly(n - k, x) * bernoulli_poly(k, z)
            for k in range(n + 1)
        )
        rhs = _fsum(
            _sgn(k) * _C(n, k) * bernoulli_poly(n - k, x + w)
            * bernoulli_poly(k, z + w)
            for k in range(n + 1)
        )
        return lhs, rhs
    w = params["w"]
    ratio = y / w
    lhs = _fsum(
        _sgn(k) * _C(n, k) * ratio**k * bernoulli_poly(n - k, y) * bernoulli_poly(k, w)
        for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _C(n, k) * ratio**k * _B(n - k) * _B(k) for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "zc4ufo6_prop",
    "odd-order weighted Bernoulli-polynomial self-convolution collapses to a "
    "single Bernoulli number",
    lambda nmax: [
        {"y": y, "w": w, "n": n}
        for y in NZ_GRID for w in NZ_GRID for n in range(1, nmax + 1, 2)
    ],
)
def _eval_zc4ufo6(params, seed):
    y, w, n = params["y"], params["w"], params["n"]
    ratio = y / w
    lhs = _fsum(
        _sgn(k) * _C(n, k) * ratio**k * bernoulli_poly(n - k, y) * bernoulli_poly(k, w)
        for k in range(n + 1)
    )
    rhs = n * y / (2 * w) * (1 - ratio ** (n - 2)) * _B(n - 1)
    return lhs, rhs


@_register(
    "zc3ejk3",
    "signed binomial-column Bernoulli convolution equals its ascending-column twin",
    _dom_n(x=R_GRID),
)
def _eval_zc3ejk3(params, seed):
    x, n = params["x"], params["n"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * _Cr(x, k) * _B(n - k) for k in range(n + 1)
    )
    rhs = _fsum(_C(n, k) * _Cr(x + k, k) * _B(n - k) for k in range(n + 1))
    return lhs, rhs


@_register(
    "numg9mq",
    "harmonic-difference weighted version of the binomial-column Bernoulli identity",
    lambda nmax: [
        {"x": x, "n": n}
        for n in range(nmax + 1) for x in range(n, nmax + 3)
    ],
)
def _eval_numg9mq(params, seed):
    x, n = params["x"], params["n"]
    lhs = _fsum(
        _sgn(n - k) * _C(n, k) * _Cr(x, k) * (_H(x) - _H(x - k)) * _B(n - k)
        for k in range(n + 1)
    )
    rhs = _fsum(
        _C(n, k) * _Cr(x + k, k) * (_H(x + k) - _H(x)) * _B(n - k)
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "s8xzyeq",
    "even-order central-binomial odd-harmonic Bernoulli convolution vanishes",
    lambda nmax: [{"n": n} for n in range(0, nmax + 1, 2)],
)
def _eval_s8xzyeq(params, seed):
    n = params["n"]
    lhs = _fsum(
        _C(n, k) * _C(2 * k, k) * _HALF ** (2 * k) * _O(k) * _B(n - k)
        for k in range(n + 1)
    )
    return lhs, ZERO


@_register(
    "binom_x_self",
    "alternating self-convolution of a binomial column equals its ascending twin",
    _dom_n(x=R_GRID),
)
def _eval_binom_x_self(params, seed):
    x, n = params["x"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _Cr(x, k) * _Cr(x, n - k) for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k) * _C(n, k) * _Cr(x + k, k) * _Cr(x + n - k, n - k)
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "harm_binom_self",
    "alternating self-convolution of the harmonic binomial-row pair",
    _dom_n(m=range(4)),
)
def _eval_harm_binom_self(params, seed):
    m, n = params["m"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _C(m, k) * _C(m, n - k) * _H(k) * _H(n - k)
        for k in range(n + 1)
    )
    rhs = _fsum(
        _sgn(k)
        * _C(n, k)
        * _Cr(k + m, m)
        * _Cr(n - k + m, m)
        * (_H(m) + _H(k) - _H(k + m))
        * (_H(m) + _H(n - k) - _H(n - k + m))
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "zrnqrxn",
    "harmonic binomial-row pair crossed with a binomial column through the swap relation",
    _dom_n(m=range(4), x=R_GRID),
)
def _eval_zrnqrxn(params, seed):
    m, x, n = params["m"], params["x"], params["n"]
    lhs = _fsum(
        _C(n, k) * _C(m, k) * _Cr(x + n - k, n - k) * _H(k) for k in range(n + 1)
    )
    rhs = _fsum(
        _C(n, k) * _Cr(x, n - k) * _Cr(k + m, m) * (_H(m) + _H(k) - _H(k + m))
        for k in range(n + 1)
    )
    return lhs, rhs


def _trif_domain(nmax: int):
    out = []
    for pair in SECOND_NAMES:
        for p in range(3):
            for n in range(nmax + 1):
                for m in range(n + p, nmax + 3):
                    out.append({"pair": pair, "p": p, "m": m, "n": n})
    return out


@_register(
    "trif_swap",
    "reciprocal-binomial pair crossed with an arbitrary second-kind pair",
    _trif_domain,
)
def _eval_trif_swap(params, seed):
    q = _second(params["pair"], seed)
    p, m, n = params["p"], params["m"], params["n"]
    lhs = _fsum(
        _C(n, k) * _IC(m, p + n - k) * q.right(k) for k in range(n + 1)
    )
    rhs = _fsum(
        _C(n, k) * F(m + 1, m - n + k + 1) * _IC(m - n + k, p) * q.left(k)
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "evuuti7",
    "harmonic-difference sum over reciprocal binomials: rational closed form",
    lambda nmax: [
        {"m": m, "n": n} for n in range(nmax + 1) for m in range(n, nmax + 3)
    ],
)
def _eval_evuuti7(params, seed):
    m, n = params["m"], params["n"]
    lhs = _fsum(
        _C(n, k) * _IC(m, k) * (_H(m - k) - _H(m)) for k in range(n + 1)
    )
    rhs = F(-n, (m - n + 1) ** 2)
    return lhs, rhs


@_register(
    "harm_partial_wellknown",
    "prefix sum of harmonic numbers: (n+1)H(n) - n",
    _dom_n(),
)
def _eval_harm_partial(params, seed):
    n = params["n"]
    lhs = _fsum(_H(k) for k in range(n + 1))
    rhs = (n + 1) * _H(n) - n
    return lhs, rhs


@_register(
    "okprop",
    "alternating odd-harmonic sum over reciprocal central binomials: rational "
    "closed form",
    _dom_n(),
)
def _eval_okprop(params, seed):
    n = params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _IC(2 * k, k) * _TWO ** (2 * k) * _O(k)
        for k in range(n + 1)
    )
    rhs = F(-2 * n, (2 * n - 1) ** 2)
    return lhs, rhs


@_register(
    "v4unj46",
    "harmonic-difference reciprocal-binomial relation on an arbitrary "
    "second-kind pair",
    _trif_domain,
)
def _eval_v4unj46(params, seed):
    q = _second(params["pair"], seed)
    p, m, n = params["p"], params["m"], params["n"]
    lhs = _fsum(
        _C(n, k)
        * _IC(m, p + n - k)
        * (_H(m - p - n + k) - _H(p + n - k))
        * q.right(k)
        for k in range(n + 1)
    )
    rhs = _fsum(
        _C(n, k)
        * _IC(m - n + k, p)
        * F(m + 1, m - n + k + 1)
        * (_H(m - p - n + k) - _H(p))
        * q.left(k)
        for k in range(n + 1)
    )
    return lhs, rhs


@_register(
    "h_partial_prop",
    "harmonic-weighted shifted-row sum over a second-kind pair, its Bernoulli "
    "instance, and the polynomial form",
    lambda nmax: (
        [{"display": "pair", "pair": pair, "n": n}
         for pair in SECOND_NAMES for n in range(nmax + 1)]
        + [{"display": "bernoulli", "pair": "", "n": n} for n in range(nmax + 1)]
        + [{"display": "poly", "pair": "", "n": n} for n in range(nmax + 1)]
    ),
)
def _eval_h_partial_prop(params, seed):
    n = params["n"]
    display = params["display"]
    if display == "poly":
        return pr.check_named_poly("partial_sum_poly", n=n)
    if display == "bernoulli":
        lhs = _fsum(_C(n + 1, k + 1) * _H(k) * _B(k) for k in range(n + 1))
        rhs = _fsum(_sgn(k) * (_H(k) - _H(n - k)) * _B(k) for k in range(n + 1))
        return lhs, rhs
    q = _second(params["pair"], seed)
    lhs = _fsum(_C(n + 1, k + 1) * _H(k) * q.left(k) for k in range(n + 1))
    rhs = _fsum((_H(k) - _H(n - k)) * q.right(k) for k in range(n + 1))
    return lhs, rhs


@_register(
    "fib_bernoulli_even",
    "Fibonacci-Bernoulli binomial convolution vanishes at even order",
    lambda nmax: [{"n": n} for n in range(0, nmax + 1, 2)],
)
def _eval_fib_bernoulli(params, seed):
    n = params["n"]
    lhs = _fsum(_C(n, k) * fibonacci(k) * _B(n - k) for k in range(n + 1))
    return lhs, ZERO


@_register(
    "lucas_bernoulli_odd",
    "Lucas-Bernoulli binomial convolution vanishes at odd order",
    lambda nmax: [{"n": n} for n in range(1, nmax + 1, 2)],
)
def _eval_lucas_bernoulli(params, seed):
    n = params["n"]
    lhs = _fsum(_C(n, k) * lucas(k) * _B(n - k) for k in range(n + 1))
    return lhs, ZERO


@_register(
    "jy2d3um",
    "shifted-harmonic sum against an arbitrary second-kind pair, with the "
    "reciprocal-binomial tail",
    _dom_n(pair=SECOND_NAMES, m=range(4)),
)
def _eval_jy2d3um(params, seed):
    q = _second(params["pair"], seed)
    m, n = params["m"], params["n"]
    lhs = _fsum(_C(n, k) * _H(k + m) * q.left(n - k) for k in range(n + 1))
    rhs = _H(m) * q.right(n) - _fsum(
        _sgn(k) * _C(n, k) * _IC(k + m, m) * q.right(n - k) / k
        for k in range(1, n + 1)
    )
    return lhs, rhs


@_register(
    "t7tu7xu_special",
    "harmonic and odd-harmonic row sums: polynomial forms and their t=1 values",
    lambda nmax: [
        {"display": d, "n": n}
        for d in ("h_poly", "h_value", "o_poly", "o_value")
        for n in range(nmax + 1)
    ],
)
def _eval_t7tu7xu(params, seed):
    n = params["n"]
    display = params["display"]
    if display == "h_poly":
        return pr.check_named_poly("harmonic_poly", m=0, n=n)
    if display == "o_poly":
        return pr.check_named_poly("odd_harmonic_poly", n=n)
    if display == "h_value":
        lhs = _fsum(_C(n, k) * _H(k) for k in range(n + 1))
        rhs = _fsum(
            _sgn(k - 1) * _TWO ** (n - k) * _C(n, k) / k for k in range(1, n + 1)
        )
        return lhs, rhs
    lhs = _fsum(_C(n, k) * _O(k) for k in range(n + 1))
    rhs = _fsum(
        _sgn(k - 1) * _TWO ** (n + k - 1) * _C(n, k) * _IC(2 * k, k) / k
        for k in range(1, n + 1)
    )
    return lhs, rhs


# -- prefix-sum relations -----------------------------------------------------


@_register(
    "ps67scn",
    "prefix sum of a second-kind transform equals the shifted-row weighted sum "
    "of the original, plus the polynomial form",
    lambda nmax: (
        [{"display": "pair", "pair": pair, "n": n}
         for pair in SECOND_NAMES for n in range(nmax + 1)]
        + [{"display": "poly", "pair": "", "n": n} for n in range(nmax + 1)]
    ),
)
def _eval_ps67scn(params, seed):
    n = params["n"]
    if params["display"] == "poly":
        return pr.check_named_poly("ps67scn_poly", n=n)
    q = _second(params["pair"], seed)
    lhs = _fsum(q.right(k) for k in range(n + 1))
    rhs = _fsum(_C(n + 1, k + 1) * q.left(k) for k in range(n + 1))
    return lhs, rhs


@_register(
    "oy8uhm0",
    "lagged prefix sum of a second-kind transform as a binomial sum of the original",
    _dom_n(1, pair=SECOND_NAMES),
)
def _eval_oy8uhm0(params, seed):
    q = _second(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(q.right(k - 1) for k in range(1, n + 1))
    rhs = _fsum(_C(n, k) * q.left(k - 1) for k in range(1, n + 1))
    return lhs, rhs


@_register(
    "xc556tq",
    "lagged prefix sum of a first-kind transform as a signed binomial sum of "
    "the original",
    _dom_n(1, pair=FIRST_NAMES),
)
def _eval_xc556tq(params, seed):
    p = _first(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(p.right(k - 1) for k in range(1, n + 1))
    rhs = _fsum(_sgn(k - 1) * _C(n, k) * p.left(k - 1) for k in range(1, n + 1))
    return lhs, rhs


@_register(
    "hq03eji_pairs",
    "prefix-sum first-kind pairs built on Lucas and Fibonacci, with their "
    "closed prefix sums",
    lambda nmax: [
        {"which": w, "aspect": a, "n": n}
        for w in ("fib", "lucas")
        for a in ("prefix_sum", "transform")
        for n in range(nmax + 1)
    ],
)
def _eval_hq03eji(params, seed):
    n = params["n"]
    which = params["which"]
    gen = fibonacci if which == "fib" else lucas
    if params["aspect"] == "prefix_sum":
        lhs = _fsum(gen(j - 1) for j in range(1, n + 1))
        rhs = gen(n + 1) - 1
        return lhs, rhs
    # transform of the negated prefix sum of the pair's transform side
    tau_sign = -1 if which == "fib" else 1
    left = lambda k: -tau_sign * (gen(k + 1) - 1)
    lhs = _fsum(_sgn(k) * _C(n, k) * left(k) for k in range(n + 1))
    rhs = ZERO if n == 0 else gen(n - 1)
    return lhs, rhs


@_register(
    "qpev64c",
    "alternating binomial sum of lagged prefix sums collapses to a shorter "
    "prefix sum of the transform",
    _dom_n(1, pair=FIRST_NAMES),
)
def _eval_qpev64c(params, seed):
    p = _first(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _fsum(p.left(j - 1) for j in range(1, k))
        for k in range(1, n + 1)
    )
    rhs = _fsum(p.right(k - 1) for k in range(1, n))
    return lhs, rhs


@_register(
    "abwtmhn_lucas",
    "weighted prefix sums of Lucas numbers form a transform-fixed sequence",
    _dom_n(1),
)
def _eval_abwtmhn(params, seed):
    n = params["n"]
    seq = Seq.from_func(
        lambda k: (lucas(k + 2) - 1) / F((k + 1) * (k + 2)), n, label="lucas-prefix"
    )
    return classify(seq) is Classification.INVARIANT


@_register(
    "pop9ybt",
    "binomial sum of a second-kind transform equals the 2-power weighted sum "
    "of the original",
    _dom_n(pair=SECOND_NAMES),
)
def _eval_pop9ybt(params, seed):
    q = _second(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(_C(n, k) * q.right(k) for k in range(n + 1))
    rhs = _fsum(_C(n, k) * _TWO ** (n - k) * q.left(k) for k in range(n + 1))
    return lhs, rhs


@_register(
    "binom_xz_2k",
    "offset binomial-column identity with 2-power weights",
    _dom_n(x=R_GRID, z=(-2, -1, 0, 1, 2, 3)),
)
def _eval_binom_xz_2k(params, seed):
    x, z, n = params["x"], params["z"], params["n"]
    lhs = _fsum(_C(n, k) * _Cr(x + k, k + z) for k in range(n + 1))
    rhs = _fsum(_C(n, k) * _Cr(x, k + z) * _TWO ** (n - k) for k in range(n + 1))
    return lhs, rhs


def _s4jiizc_domain(nmax: int):
    return [
        {"pair": pair, "j": j, "n": n}
        for pair in FIRST_NAMES
        for n in range(nmax + 1)
        for j in range(n + 1)
    ]


@_register(
    "s4jiizc",
    "truncated signed convolution of a first-kind pair recovers a single "
    "transform value",
    _s4jiizc_domain,
)
def _eval_s4jiizc(params, seed):
    p = _first(params["pair"], seed)
    j, n = params["j"], params["n"]
    lhs = _fsum(
        _sgn(n - k) * _C(n - j, k - j) * p.left(n - k) for k in range(n + 1)
    )
    rhs = p.right(n - j)
    return lhs, rhs


@_register(
    "k_bernoulli",
    "k-weighted Bernoulli row sum equals (-1)**n n (B(n) + B(n-1)); the "
    "parity cases follow wherever B(n-1) or B(n) vanishes",
    _dom_n(),
)
def _eval_k_bernoulli(params, seed):
    n = params["n"]
    lhs = _fsum(_C(n, k) * k * _B(k) for k in range(n + 1))
    rhs = ZERO if n == 0 else _sgn(n) * n * (_B(n) + _B(n - 1))
    return lhs, rhs


@_register(
    "l9mldgr_m2_m3",
    "square- and cube-weighted alternating sums via iterated transform differences",
    _dom_n(pair=FIRST_NAMES, m=(2, 3)),
)
def _eval_l9mldgr(params, seed):
    p = _first(params["pair"], seed)
    m, n = params["m"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * F(k) ** m * p.left(k) for k in range(n + 1)
    )
    # expanded difference forms; zero-coefficient terms are skipped so no
    # negative index is ever touched
    terms: list[tuple[int, int]] = []
    if m == 2:
        terms = [(n * n, 0), (-n * (n - 1), 1)]
    else:
        terms = [(n**3, 0), (-n * (n - 1) * (2 * n - 1), 1), (n * (n - 1) * (n - 2), 2)]
    rhs = ZERO
    for coeff, lag in terms:
        if coeff:
            rhs += coeff * (p.right(n - lag) - p.right(n - lag - 1))
    return lhs, rhs


# -- power-of-two extensions --------------------------------------------------


def _j_le_n_domain(nmax: int):
    return [
        {"pair": pair, "j": j, "n": n}
        for pair in FIRST_NAMES
        for n in range(nmax + 1)
        for j in range(n + 1)
    ]


@_register(
    "ext_b0c9iwa",
    "shortened-row 2-power convolution of a first-kind pair",
    _j_le_n_domain,
)
def _eval_ext_b0c9iwa(params, seed):
    rep = cv.check_extensions(
        _first(params["pair"], seed), "i", j=params["j"], n=params["n"]
    )
    return rep.lhs, rep.rhs


@_register(
    "ext_ajkcgco",
    "double-binomial 2-power relation between a first-kind pair and its transform",
    _j_le_n_domain,
)
def _eval_ext_ajkcgco(params, seed):
    rep = cv.check_extensions(
        _first(params["pair"], seed), "ii", j=params["j"], n=params["n"]
    )
    return rep.lhs, rep.rhs


def _parity_ext_domain(seqs: tuple[str, ...], same_parity: bool):
    def build(nmax: int):
        out = []
        for name in seqs:
            for n in range(nmax + 1):
                for j in range(n + 1):
                    if ((j - n) % 2 == 0) is same_parity:
                        out.append({"seq": name, "j": j, "n": n})
        return out

    return build


@_register(
    "ext_ajkcgco_parity_invariant",
    "the double-binomial 2-power sum vanishes for transform-fixed sequences "
    "when the two orders differ in parity",
    _parity_ext_domain(INVARIANT_SEQS, same_parity=False),
)
def _eval_ext_parity_inv(params, seed):
    s = _classified_gen(params["seq"])
    j, n = params["j"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _C(n - k, j) * _TWO**k * s(k) for k in range(n + 1)
    )
    return lhs, ZERO


@_register(
    "ext_ajkcgco_parity_inverse",
    "the double-binomial 2-power sum vanishes for transform-negated sequences "
    "when the two orders share parity",
    _parity_ext_domain(INVERSE_INVARIANT_SEQS, same_parity=True),
)
def _eval_ext_parity_inv_inv(params, seed):
    s = _classified_gen(params["seq"])
    j, n = params["j"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(n, k) * _C(n - k, j) * _TWO**k * s(k) for k in range(n + 1)
    )
    return lhs, ZERO


@_register(
    "ext_2negk",
    "half-power cross convolution of two second-kind pairs",
    _dom_n(pq=SECOND_DUOS),
)
def _eval_ext_2negk(params, seed):
    p, q = (_second(name, seed) for name in params["pq"])
    rep = cv.check_extensions(p, "iii", q=q, n=params["n"])
    return rep.lhs, rep.rhs


@_register(
    "ext_shifted",
    "lag-shifted convolution of two first-kind pairs against prefix sums",
    _dom_n(pq=FIRST_DUOS),
)
def _eval_ext_shifted(params, seed):
    p, q = (_first(name, seed) for name in params["pq"])
    rep = cv.check_extensions(p, "iv", q=q, n=params["n"])
    return rep.lhs, rep.rhs


@_register(
    "ext_km",
    "k**m-weighted convolution of two first-kind pairs via iterated differences",
    _dom_n(pq=FIRST_DUOS, m=range(4)),
)
def _eval_ext_km(params, seed):
    p, q = (_first(name, seed) for name in params["pq"])
    rep = cv.check_extensions(p, "v", q=q, m=params["m"], n=params["n"])
    return rep.lhs, rep.rhs


@_register(
    "ext_km_special",
    "tail convolution with unit weights from the reciprocal/harmonic pair",
    _dom_n(pair=FIRST_NAMES),
)
def _eval_ext_km_special(params, seed):
    q = _first(params["pair"], seed)
    n = params["n"]
    lhs = _fsum(
        _sgn(n - k - 1) * _C(n, k) * q.left(n - k) for k in range(1, n + 1)
    )
    rhs = _fsum(_sgn(k) * _C(n, k) * q.right(n - k) for k in range(1, n + 1))
    return lhs, rhs


# -- polynomial identities ----------------------------------------------------


@_register(
    "poly_first",
    "coefficientwise polynomial identity attached to every first-kind pair",
    _dom_n(pair=FIRST_NAMES),
)
def _eval_poly_first(params, seed):
    return pr.check_poly_first(_first(params["pair"], seed), params["n"])


@_register(
    "poly_second",
    "coefficientwise polynomial identity attached to every second-kind pair",
    _dom_n(pair=SECOND_NAMES),
)
def _eval_poly_second(params, seed):
    return pr.check_poly_second(_second(params["pair"], seed), params["n"])


@_register(
    "sun_lemma",
    "double-binomial polynomial identity in t and 1-t, checked coefficientwise",
    lambda nmax: [
        {"m": m, "n": n, "r": r}
        for m in range(6) for n in range(6) for r in range(min(m, n) + 1)
    ],
)
def _eval_sun_lemma(params, seed):
    return pr.check_sun_lemma(params["m"], params["n"], params["r"])


@_register(
    "chen_transfer",
    "the double-binomial polynomial identity transferred onto first-kind pairs",
    lambda nmax: [
        {"pair": pair, "m": m, "n": n, "r": r}
        for pair in FIRST_NAMES
        for m in range(5) for n in range(5) for r in range(min(m, n, 3) + 1)
    ],
)
def _eval_chen_transfer(params, seed):
    form = pr.sun_lemma_form(params["m"], params["n"], params["r"])
    rep = pr.transfer_identity(form, _first(params["pair"], seed))
    return rep.lhs, rep.rhs


@_register(
    "harmonic_poly",
    "shifted-harmonic row polynomial identity, coefficientwise",
    _dom_n(m=range(4)),
)
def _eval_harmonic_poly(params, seed):
    return pr.check_named_poly("harmonic_poly", m=params["m"], n=params["n"])


@_register(
    "odd_harmonic_poly",
    "odd-harmonic row polynomial identity, coefficientwise",
    _dom_n(),
)
def _eval_odd_harmonic_poly(params, seed):
    return pr.check_named_poly("odd_harmonic_poly", n=params["n"])


@_register(
    "bernoulli_poly_identity",
    "Bernoulli-polynomial shift identity in t, coefficientwise",
    _dom_n(x=R_GRID, y=R_GRID),
)
def _eval_bernoulli_poly_identity(params, seed):
    return pr.check_named_poly(
        "bernoulli_poly_identity", x=params["x"], y=params["y"], n=params["n"]
    )


@_register(
    "binom_poly",
    "upper-shifted binomial identity in t and 1-t, coefficientwise",
    lambda nmax: [
        {"x": x, "y_off": y_off, "n": n}
        for x in range(3)
        for y_off in range(4)
        for n in range(min(nmax, x + y_off) + 1)
    ],
)
def _eval_binom_poly(params, seed):
    x = params["x"]
    return pr.check_named_poly("binom_poly", x=x, y=x + params["y_off"], n=params["n"])


@_register(
    "jy2d3um_poly",
    "shifted-harmonic polynomial identity in descending powers, coefficientwise",
    _dom_n(m=range(4)),
)
def _eval_jy2d3um_poly(params, seed):
    return pr.check_named_poly("jy2d3um_poly", m=params["m"], n=params["n"])


# -- kind-conversion consequences --------------------------------------------


@_register(
    "chen_main_second",
    "triple-sum reciprocal-binomial relation for a second-kind pair, with "
    "boundary tail",
    _dom_n(pair=SECOND_NAMES, m=range(4), s=range(4)),
)
def _eval_chen_main_second(params, seed):
    q = _second(params["pair"], seed)
    m, s, n = params["m"], params["s"], params["n"]
    lhs = _fsum(
        _C(m, k) * _IC(n + k + s, s) * q.left(n + k + s) for k in range(m + 1)
    )
    rhs = _fsum(
        _sgn(n - k) * _C(n, k) * _IC(m + k + s, s) * q.right(m + k + s)
        for k in range(n + 1)
    )
    rhs += _fsum(
        _sgn(n + s - k)
        * F(s, m + n + s - k)
        * _C(s - 1, k)
        * _IC(m + n + s - k - 1, n)
        * q.right(k)
        for k in range(s)
    )
    return lhs, rhs


@_register(
    "chen_main_first",
    "triple-sum reciprocal-binomial relation converted to first-kind pairs",
    _dom_n(pair=FIRST_NAMES, m=range(4), s=range(4)),
)
def _eval_chen_main_first(params, seed):
    p = _first(params["pair"], seed)
    m, s, n = params["m"], params["s"], params["n"]
    lhs = _fsum(
        _sgn(k) * _C(m, k) * _IC(n + k + s, s) * p.left(n + k + s)
        for k in range(m + 1)
    )
    rhs = _sgn(s) * _fsum(
        _sgn(k) * _C(n, k) * _IC(m + k + s, s) * p.right(m + k + s)
        for k in range(n + 1)
    )
    rhs += _fsum(
        _sgn(k)
        * F(s, m + n + s - k)
        * _C(s - 1, k)
        * _IC(m + n + s - k - 1, n)
        * p.right(k)
        for k in range(s)
    )
    return lhs, rhs


@_register(
    "chen_thm32_both",
    "double-binomial lowered-index relation, in both transform kinds",
    _dom_n(kind=("first", "second"), pair_idx=range(len(SECOND_NAMES)), m=range(4),
           s=range(4)),
)
def _eval_chen_thm32(params, seed):
    m, s, n = params["m"], params["s"], params["n"]
    if params["kind"] == "second":
        q = _second(SECOND_NAMES[params["pair_idx"]], seed)
        lhs = ZERO
        for k in range(m + 1):
            coeff = _C(m, k) * _C(n + k, s)
            if coeff:
                lhs += coeff * q.left(n + k - s)
        rhs = ZERO
        for k in range(n + 1):
            coeff = _sgn(n - k) * _C(n, k) * _C(m + k, s)
            if coeff:
                rhs += coeff * q.right(m + k - s)
        return lhs, rhs
    p = _first(FIRST_NAMES[params["pair_idx"]], seed)
    lhs = ZERO
    for k in range(m + 1):
        coeff = _sgn(s - k) * _C(m, k) * _C(n + k, s)
        if coeff:
            lhs += coeff * p.left(n + k - s)
    rhs = ZERO
    for k in range(n + 1):
        coeff = _sgn(k) * _C(n, k) * _C(m + k, s)
        if coeff:
            rhs += coeff * p.right(m + k - s)
    return lhs, rhs


@_register(
    "gq_thm3_both",
    "weighted reciprocal-binomial sum symmetric in the two row lengths, in "
    "both transform kinds",
    _dom_n(kind=("first", "second"), pair_idx=range(len(SECOND_NAMES)), m=range(4),
           mm=range(4)),
)
def _eval_gq_thm3(params, seed):
    # here the swept "n" plays the role of the prefix length s
    s = params["n"]
    m, n2 = params["m"], params["mm"]
    if params["kind"] == "second":
        q = _second(SECOND_NAMES[params["pair_idx"]], seed)
        lhs = _fsum(
            _C(s, k) * _IC(m + n2 + s - k, m) * q.left(k) / (m + n2 + s + 1 - k)
            for k in range(s + 1)
        )
        rhs = _fsum(
            _C(s, k) * _IC(m + n2 + s - k, n2) * _sgn(s - k) * q.right(k)
            / (m + n2 + s + 1 - k)
            for k in range(s + 1)
        )
        return lhs, rhs
    p = _first(FIRST_NAMES[params["pair_idx"]], seed)
    lhs = _fsum(
        _sgn(k) * _C(s, k) * _IC(m + n2 + s - k, m) * p.left(k) / (m + n2 + s + 1 - k)
        for k in range(s + 1)
    )
    rhs = _fsum(
        _C(s, k) * _IC(m + n2 + s - k, n2) * _sgn(s - k) * p.right(k)
        / (m + n2 + s + 1 - k)
        for k in range(s + 1)
    )
    return lhs, rhs


def registry() -> list[IdentityCheck]:
    """All registered identities, sorted by id; duplicate ids are rejected."""
    seen: set[str] = set()
    for check in _ENTRIES:
        if check.id in seen:
            raise RuntimeError(f"duplicate identity id {check.id!r} in registry")
        seen.add(check.id)
    return sorted(_ENTRIES, key=lambda check: check.id)
