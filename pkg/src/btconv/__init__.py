"""Exact binomial-transform toolkit.

Transforms of both kinds over arbitrary-precision rationals, a catalog of
closed-form transform pairs, convolution and symmetry checkers, polynomial
identity verification over the rationals, and a registry-driven CLI that
sweeps every registered relation over desk-scale parameter grids.
"""

from .exact import Rat, ZeroBinomialError, binom_int, binom_rat, inv_binom, kron_delta
from .seqlib import Seq
from .pairs import (
    Classification,
    Kind,
    KindMismatchError,
    Pair,
    PairValidationError,
    bt_first,
    bt_second,
    bt_second_inverse,
    catalog_pair,
    classify,
    convert_kind,
    involution_check,
)
from .verify import IdentityCheck, Report, UnknownIdentityError, run

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "IdentityCheck",
    "Kind",
    "KindMismatchError",
    "Pair",
    "PairValidationError",
    "Rat",
    "Report",
    "Seq",
    "UnknownIdentityError",
    "ZeroBinomialError",
    "binom_int",
    "binom_rat",
    "bt_first",
    "bt_second",
    "bt_second_inverse",
    "catalog_pair",
    "classify",
    "convert_kind",
    "inv_binom",
    "involution_check",
    "kron_delta",
    "registry",
    "run",
    "__version__",
]


def registry():
    """All registered identity checks (imported lazily to keep startup light)."""
    from .registry import registry as _registry

    return _registry()
