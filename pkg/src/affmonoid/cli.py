"""Command-line front end: ``affmonoid analyze|check|fuzz|corpus``.

Exit codes: 0 success / property holds, 1 property fails or a corpus
expectation is not met, 2 invalid input, 3 internal invariant violation (or
an S2 probe that stayed inconclusive), 4 fuzz discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .fuzz import RandomSpec, dump_reproducer, random_monoids, run_case
from .monoid import DescriptionError, load_description
from .normalization import is_normal
from .serre import InvariantViolation, analyze, check_r1, s2_probe

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INTERNAL, EXIT_DISCREPANCY = 0, 1, 2, 3, 4
EXIT_INCONCLUSIVE = 3


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def cmd_analyze(args) -> int:
    M = load_description(args.path)
    report = analyze(M, bound=args.bound)
    if args.format == "json":
        print(_dump(report.to_dict(include_timings=args.timings)))
    else:
        print(report.to_text())
        if args.timings:
            for label, seconds in report.timings.items():
                print(f"  {label}: {seconds:.4f}s")
    return EXIT_OK


def cmd_check(args) -> int:
    M = load_description(args.path)
    if args.property == "normal":
        verdict = is_normal(M)
        if verdict.normal:
            print("normal: holds")
            return EXIT_OK
        print(f"normal: fails, witness {list(verdict.witness)}")
        return EXIT_FAIL
    if args.property == "r1":
        verdict = check_r1(M)
        if verdict.value:
            print("r1: holds")
            return EXIT_OK
        bad = next(f for f in verdict.criterion_a if not f.holds)
        print(f"r1: fails at facet {bad.facet_id}, witness {list(bad.witness)}")
        return EXIT_FAIL
    verdict = s2_probe(M, args.bound)
    if verdict.refuted:
        print(f"s2: fails, witness {list(verdict.witness)}")
        return EXIT_FAIL
    print(f"s2: inconclusive, no refutation up to degree {verdict.bound}")
    return EXIT_INCONCLUSIVE


def cmd_fuzz(args) -> int:
    spec = RandomSpec(args.seed, args.max_rank, args.max_gens, args.max_coord, args.allow_units)
    passed = failed = 0
    for i, M in enumerate(random_monoids(spec, args.count)):
        outcome = run_case(M, i)
        if outcome.passed:
            passed += 1
            continue
        failed += 1
        path = dump_reproducer(outcome, args.reproducer_dir)
        print(f"case {i} {M.generators}: {'; '.join(outcome.problems)} (reproducer {path})")
    print(f"fuzz seed {spec.seed}: {passed} passed, {failed} failed")
    return EXIT_DISCREPANCY if failed else EXIT_OK


def _mismatches(expected: Any, actual: Any, where: str = "") -> list[str]:
    """Paths where the expected partial structure differs from the actual one."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{where or '<root>'}: expected an object"]
        out = []
        for key, value in expected.items():
            if key not in actual:
                out.append(f"{where}.{key}: missing")
            else:
                out += _mismatches(value, actual[key], f"{where}.{key}")
        return out
    return [] if expected == actual else [f"{where}: expected {expected!r}, got {actual!r}"]


def cmd_corpus(args) -> int:
    root = Path(args.directory)
    try:
        entries = json.loads((root / "expected.json").read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DescriptionError(f"cannot read corpus expectations: {exc}") from exc
    failures = 0
    for filename, entry in sorted(entries.items()):
        report = analyze(load_description(root / filename)).to_dict()
        problems = _mismatches(entry["expected"], report)
        status = "ok" if not problems else "MISMATCH " + "; ".join(problems)
        print(f"{filename} [{entry.get('provenance', '')}]: {status}")
        failures += bool(problems)
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affmonoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a monoid description file")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=_positive_int, default=None, help="degree bound for bounded searches")
    p.add_argument("--timings", action="store_true", help="include per-stage timings")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", help="decide one property; the exit code carries the answer")
    p.add_argument("path")
    p.add_argument("--property", choices=("r1", "normal", "s2"), required=True)
    p.add_argument("--bound", type=_positive_int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="differential run on seeded random monoids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_nonnegative_int, default=100)
    p.add_argument("--max-rank", type=_positive_int, default=3)
    p.add_argument("--max-gens", type=_positive_int, default=6)
    p.add_argument("--max-coord", type=_positive_int, default=6)
    p.add_argument("--allow-units", action="store_true")
    p.add_argument("--reproducer-dir", default="fuzz-failures")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("corpus", help="check every corpus file against expected.json")
    p.add_argument("directory", nargs="?", default="corpus")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
