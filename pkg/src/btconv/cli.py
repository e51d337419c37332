"""Command-line driver: ``btconv verify`` and ``btconv list``.

Exit codes: 0 when every report passes, 1 when any instance fails, 2 on
configuration errors (unknown identity ids, bad config file, bad flags).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .registry import registry
from .verify import Report, UnknownIdentityError, run


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btconv",
        description="Exact verification sweeps over the registered "
        "binomial-transform identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify_p = sub.add_parser(
        "verify", help="sweep identities over their parameter grids"
    )
    verify_p.add_argument(
        "--identity",
        default=None,
        help="comma-separated identity ids, or 'all' (default)",
    )
    verify_p.add_argument(
        "--nmax", type=int, default=None, help="sweep bound for n-like indices"
    )
    verify_p.add_argument(
        "--seed", type=int, default=None, help="seed for randomized pairs"
    )
    verify_p.add_argument(
        "--out", default=None, help="write reports to this file instead of stdout"
    )
    verify_p.add_argument(
        "--format",
        choices=("jsonl", "summary"),
        default="summary",
        help="jsonl: one JSON object per instance; summary: one line per identity",
    )
    verify_p.add_argument(
        "--config",
        default=None,
        help="optional JSON config file with nmax/seed/identities; flags override",
    )

    sub.add_parser("list", help="print the registry with anchors")
    return parser


def _load_config(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read config file {path!r}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError(f"config file {path!r} must contain a JSON object")
    allowed = {"nmax", "seed", "identities"}
    unknown = set(raw) - allowed
    if unknown:
        raise ValueError(
            f"config file {path!r} has unknown keys: {', '.join(sorted(unknown))}"
        )
    if "nmax" in raw and not isinstance(raw["nmax"], int):
        raise ValueError("config 'nmax' must be an integer")
    if "seed" in raw and not isinstance(raw["seed"], int):
        raise ValueError("config 'seed' must be an integer")
    if "identities" in raw and (
        not isinstance(raw["identities"], list)
        or not all(isinstance(i, str) for i in raw["identities"])
    ):
        raise ValueError("config 'identities' must be a list of strings")
    return raw


def _cmd_list() -> int:
    for check in registry():
        print(f"{check.id:32s} {check.anchor}")
    return 0


def _summarize(reports: list[Report]) -> tuple[str, bool]:
    lines = []
    all_ok = True
    by_id: dict[str, list[Report]] = {}
    for report in reports:
        by_id.setdefault(report.id, []).append(report)
    for identity_id in sorted(by_id):
        group = by_id[identity_id]
        failures = [r for r in group if not r.passed]
        status = "PASS" if not failures else "FAIL"
        all_ok &= not failures
        line = f"{status} {identity_id:32s} {len(group) - len(failures)}/{len(group)} instances"
        if failures:
            worst = failures[0]
            line += f"  first failure at {dict(worst.params)}: {worst.lhs} != {worst.rhs}"
        lines.append(line)
    total = len(reports)
    failed = sum(not r.passed for r in reports)
    lines.append(
        f"{'PASS' if failed == 0 else 'FAIL'} total: {total - failed}/{total} instances"
    )
    return "\n".join(lines) + "\n", all_ok


def _cmd_verify(args: argparse.Namespace) -> int:
    nmax, seed, identities = 10, 0, "all"
    if args.config is not None:
        config = _load_config(args.config)
        nmax = config.get("nmax", nmax)
        seed = config.get("seed", seed)
        identities = config.get("identities", identities)
    if args.nmax is not None:
        nmax = args.nmax
    if args.seed is not None:
        seed = args.seed
    if args.identity is not None:
        identities = (
            "all"
            if args.identity == "all"
            else [i.strip() for i in args.identity.split(",") if i.strip()]
        )

    reports = list(run(identities, nmax=nmax, seed=seed))
    if args.format == "jsonl":
        text = "".join(report.to_json() + "\n" for report in reports)
        all_ok = all(report.passed for report in reports)
    else:
        text, all_ok = _summarize(reports)

    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all_ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list()
        return _cmd_verify(args)
    except (UnknownIdentityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # stdout consumer (e.g. head) went away; not an error
        return 0


if __name__ == "__main__":
    sys.exit(main())
