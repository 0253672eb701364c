"""Command-line entry point.

Every command prints human-readable lines followed by one machine-readable
``RESULT key=value ...`` line (``extend`` without ``--out`` prints only the dump). Exit codes: 0 success/stable, 1 blocker found or
input error, 2 internal invariant violation (a theorem failed; triage it).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .extend import NOTIONS, extend
from .formats import emit_extended, emit_instance, parse_instance, parse_smti
from .generate import FAMILIES, RANDOM_FAMILIES, gen_random
from .matroid import InputError, InvariantViolation
from .smti import smti_to_instance
from .stability import (
    STABILITY_NOTIONS,
    approx_solve,
    brute_force_max_stable,
    find_delta_blocker,
    ratio_check,
)
from .suites import exhaustive_explicit_suite, random_exchange_suite

EXIT_OK, EXIT_BLOCKED, EXIT_INTERNAL = 0, 1, 2


def _fmt_set(s) -> str:
    return ",".join(map(str, sorted(s)))


def _result(stream, cmd: str, **fields) -> None:
    parts = [f"cmd={cmd}"] + [f"{k}={v}" for k, v in fields.items()]
    print("RESULT " + " ".join(parts), file=stream)


def _load(path: str):
    return parse_instance(Path(path).read_text())


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"--set expects comma-separated element ids, got {text!r}") from None


def cmd_solve(args, out) -> int:
    inst = _load(args.input)
    report = approx_solve(inst, args.notion)
    print(f"notion: {args.notion}", file=out)
    print(f"solution: {{{_fmt_set(report.solution)}}}", file=out)
    print(f"size: {report.size}", file=out)
    print(f"extended ground set: {report.extended_size} elements, "
          f"{report.iterations} Fleiner iterations, {report.oracle_calls} oracle calls", file=out)
    if args.emit_extended:
        print(emit_extended(extend(inst, args.notion)), file=out, end="")
    _result(out, "solve", notion=args.notion, status="stable", size=report.size,
            solution=_fmt_set(report.solution), oracle_calls=report.oracle_calls,
            extended_size=report.extended_size, iterations=report.iterations)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    inst = _load(args.input)
    x = _parse_set(args.set)
    cert = find_delta_blocker(inst, args.notion, x)
    if cert is None:
        print(f"{{{_fmt_set(x)}}} is {args.notion}-stable", file=out)
        _result(out, "verify", notion=args.notion, status="stable", set=_fmt_set(x))
        return EXIT_OK
    g1, g2 = cert.improvements
    print(f"{{{_fmt_set(x)}}} is blocked by element {cert.y}", file=out)
    print(f"  matroid 1: {'added freely' if cert.v1 is None else f'exchanged for {cert.v1}'}, improvement {g1}", file=out)
    print(f"  matroid 2: {'added freely' if cert.v2 is None else f'exchanged for {cert.v2}'}, improvement {g2}", file=out)
    _result(out, "verify", notion=args.notion, status="blocked", set=_fmt_set(x), y=cert.y,
            v1="none" if cert.v1 is None else cert.v1, v2="none" if cert.v2 is None else cert.v2,
            improvement1=g1, improvement2=g2)
    return EXIT_BLOCKED


def cmd_opt(args, out) -> int:
    inst = _load(args.input)
    best = brute_force_max_stable(inst, args.notion)
    print(f"maximum {args.notion}-stable set: {{{_fmt_set(best)}}} (size {len(best)})", file=out)
    _result(out, "opt", notion=args.notion, size=len(best), solution=_fmt_set(best))
    return EXIT_OK


def cmd_ratio(args, out) -> int:
    for idx, path in enumerate(args.input):
        ratio = ratio_check(_load(path), args.notion)
        print(f"{path}: optimum/approx = {ratio}", file=out)
        _result(out, "ratio", index=idx, input=path, notion=args.notion, ratio=ratio,
                within_bound=ratio <= Fraction(3, 2))
    return EXIT_OK


def cmd_extend(args, out) -> int:
    text = emit_extended(extend(_load(args.input), args.notion))
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}", file=out)
        _result(out, "extend", notion=args.notion, out=args.out)
    else:
        # stdout carries the dump itself, so no RESULT line that would break re-parsing
        print(text, file=out, end="")
    return EXIT_OK


def cmd_exchange_check(args, out) -> int:
    families = RANDOM_FAMILIES if args.family == "all" else (args.family,)
    stats = random_exchange_suite(args.seed, args.count, families)
    if args.exhaustive:
        stats.merge(exhaustive_explicit_suite())
    print(f"exchange matchings: {stats.exchange_checks - stats.exchange_failures}/{stats.exchange_checks} passed", file=out)
    print(f"Hall condition: {stats.hall_checks - stats.hall_failures}/{stats.hall_checks} passed", file=out)
    print(f"worst circuit element: {stats.lemma_checks - stats.lemma_failures}/{stats.lemma_checks} passed", file=out)
    for failure in stats.failures[:5]:
        print(f"  failure: {failure}", file=out)
    _result(out, "exchange-check", seed=args.seed, exchange_pass=stats.exchange_checks - stats.exchange_failures,
            exchange_fail=stats.exchange_failures, hall_fail=stats.hall_failures,
            lemma_pass=stats.lemma_checks - stats.lemma_failures, lemma_fail=stats.lemma_failures,
            skipped=stats.skipped)
    return EXIT_OK if stats.ok else EXIT_INTERNAL


def cmd_gen(args, out) -> int:
    levels = [Fraction(t) for t in args.levels.split(",")]
    inst = gen_random(args.seed, args.n, args.family1, args.family2, levels, Fraction(args.delta))
    Path(args.out).write_text(emit_instance(inst))
    print(f"wrote {args.out}", file=out)
    _result(out, "gen", seed=args.seed, n=args.n, out=args.out)
    return EXIT_OK


def cmd_convert_smti(args, out) -> int:
    smti, delta = parse_smti(Path(args.input).read_text())
    Path(args.out).write_text(emit_instance(smti_to_instance(smti, delta)))
    print(f"wrote {args.out} ({len(smti.edges)} elements)", file=out)
    _result(out, "convert-smti", elements=len(smti.edges), out=args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiekernel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="1.5-approximate maximum near-stable set")
    p.add_argument("--notion", choices=NOTIONS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--emit-extended", action="store_true", help="also print the extended instance")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a set for blocking elements")
    p.add_argument("--notion", choices=STABILITY_NOTIONS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--set", required=True, help='comma-separated element ids, e.g. "0,3,5"')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("opt", help="exact maximum stable set by brute force")
    p.add_argument("--notion", choices=STABILITY_NOTIONS, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("ratio", help="optimum / approximate size, checked against 3/2")
    p.add_argument("--notion", choices=NOTIONS, required=True)
    p.add_argument("--input", required=True, nargs="+")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("extend", help="dump the extended strictly ordered instance")
    p.add_argument("--notion", choices=NOTIONS, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("exchange-check", help="randomised exchange-matching and circuit checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--family", choices=RANDOM_FAMILIES + ("all",), default="all")
    p.add_argument("--exhaustive", action="store_true", help="add all matroids on <= 6 elements")
    p.set_defaults(func=cmd_exchange_check)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--family1", choices=FAMILIES, default="partition")
    p.add_argument("--family2", choices=FAMILIES, default="partition")
    p.add_argument("--levels", default="0,1,2,3,4", help="comma-separated preference values")
    p.add_argument("--delta", default="1")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert-smti", help="convert an SMTI graph to a partition-matroid instance")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_convert_smti)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        print(f"payload: {exc.payload!r}", file=sys.stderr)
        _result(out, args.command, status="internal-error")
        return EXIT_INTERNAL
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _result(out, args.command, status="input-error")
        return EXIT_BLOCKED


if __name__ == "__main__":
    sys.exit(main())
