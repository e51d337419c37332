"""Identity registry driver: deterministic sweeps and machine-readable reports.

Every registered identity declares a parameter domain (a function of the
sweep bound ``nmax``) and an evaluator returning either both exact sides of
a relation or a boolean verdict from a coefficientwise check.  ``run``
materializes the domain, evaluates every instance, and yields one
:class:`Report` per instance in a deterministic order: sorted by identity
id, then by parameter tuple.  Reports are bytewise reproducible for a fixed
(ids, nmax, seed) apart from the duration field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .exact import Rat

Verdict = Union[tuple[Rat, Rat], bool]
Evaluator = Callable[[Mapping, int], Verdict]
Domain = Callable[[int], Iterable[Mapping]]


class UnknownIdentityError(ValueError):
    """Requested identity id is not in the registry."""


@dataclass(frozen=True)
class IdentityCheck:
    """One registered identity.

    ``anchor`` is a short self-contained description of the relation being
    checked.  ``domain(nmax)`` yields parameter dicts; guards are applied
    inside the domain so that every yielded instance is evaluable.
    ``evaluator(params, seed)`` returns (lhs, rhs) or a boolean.
    """

    id: str
    anchor: str
    domain: Domain
    evaluator: Evaluator


@dataclass(frozen=True)
class Report:
    """Outcome of a single identity instance; pass means lhs == rhs exactly."""

    id: str
    params: Mapping
    lhs: str
    rhs: str
    passed: bool
    seed: int
    duration_ms: float

    def to_json(self) -> str:
        payload = {
            "id": self.id,
            "params": {k: _json_value(v) for k, v in self.params.items()},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "seed": self.seed,
            "duration_ms": round(self.duration_ms, 3),
        }
        return json.dumps(payload, separators=(", ", ": "))


def format_rat(value: Rat) -> str:
    """Canonical ``numerator/denominator`` form, denominator omitted when 1."""
    return str(Fraction(value))


def _json_value(value):
    if isinstance(value, Fraction):
        return format_rat(value)
    return value


def _param_sort_key(params: Mapping):
    key = []
    for name in sorted(params):
        value = params[name]
        if isinstance(value, bool):
            key.append((name, 0, int(value)))
        elif isinstance(value, (int, Fraction)):
            key.append((name, 0, Fraction(value)))
        else:
            key.append((name, 1, str(value)))
    return tuple(key)


def _as_report(identity_id: str, params: Mapping, verdict: Verdict, seed: int,
               duration_ms: float) -> Report:
    if isinstance(verdict, bool):
        lhs = "1" if verdict else "0"
        rhs = "1"
        passed = verdict
    else:
        lhs_val, rhs_val = verdict
        lhs = format_rat(lhs_val)
        rhs = format_rat(rhs_val)
        passed = lhs_val == rhs_val
    return Report(
        id=identity_id,
        params=dict(params),
        lhs=lhs,
        rhs=rhs,
        passed=passed,
        seed=seed,
        duration_ms=duration_ms,
    )


def resolve_ids(ids: Union[str, Sequence[str]]) -> list[IdentityCheck]:
    """Map ``"all"`` or an id list onto registry entries, preserving registry
    completeness checks; unknown ids raise :class:`UnknownIdentityError`."""
    from .registry import registry

    entries = {check.id: check for check in registry()}
    if ids == "all":
        wanted = sorted(entries)
    else:
        unknown = [i for i in ids if i not in entries]
        if unknown:
            raise UnknownIdentityError(
                f"unknown identity id(s): {', '.join(sorted(unknown))}"
            )
        wanted = sorted(set(ids))
    return [entries[i] for i in wanted]


def run(
    ids: Union[str, Sequence[str]] = "all",
    nmax: int = 10,
    seed: int = 0,
) -> Iterator[Report]:
    """Sweep the selected identities and yield one Report per domain point."""
    if nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {nmax}")
    for check in resolve_ids(ids):
        instances = sorted(check.domain(nmax), key=_param_sort_key)
        for params in instances:
            start = time.perf_counter()
            verdict = check.evaluator(params, seed)
            duration_ms = (time.perf_counter() - start) * 1000.0
            yield _as_report(check.id, params, verdict, seed, duration_ms)
