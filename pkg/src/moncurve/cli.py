"""Command-line front end.

Exit codes: 0 success, 1 when ``scan``/``verify`` report findings or
failures, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from typing import Optional, Sequence

from . import report
from .bitpoly import format_runs, format_support, gaps, is_full
from .curve import CurveError, GeneratorSet, cohomology_dims, from_pairs, holes, invariants, power_support
from .properties import check_bounds, check_p1, check_p2, classify_families
from .search import MODES, ScanTooLarge, default_workers, scan, universe_size, verify_suite

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_set(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise UsageError(f"--set expects comma-separated naturals, got {text!r}") from None
    if len(set(values)) != len(values):
        raise UsageError("--set values must be distinct")
    if any(v < 0 for v in values):
        raise UsageError("--set values must be non-negative")
    return values


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(text)]
    if not pairs or _PAIR.sub("", text).strip(" ,") != "":
        raise UsageError(f"--pairs expects '(a,b),(c,d),...', got {text!r}")
    return pairs


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"alpha range must look like 'LO..HI' or 'N', got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    return lo, hi


def _generator_set(args) -> GeneratorSet:
    if args.pairs:
        if args.set:
            raise UsageError("give either --set or --pairs, not both")
        A = from_pairs(parse_pairs(args.pairs))
        if args.alpha is not None and int(args.alpha) != A.alpha:
            raise UsageError(f"--alpha {args.alpha} disagrees with pair sums {A.alpha}")
        return A
    if not args.set:
        raise UsageError("--set (or --pairs) is required")
    values = parse_set(args.set)
    alpha = int(args.alpha) if args.alpha is not None else max(values)
    return GeneratorSet(alpha, tuple(values))


def _alpha_range(args) -> tuple[int, int]:
    if args.alpha is not None:
        lo, hi = parse_range(args.alpha)
    elif args.alpha_lo is not None:
        lo = args.alpha_lo
        hi = args.alpha_hi if args.alpha_hi is not None else lo
    else:
        raise UsageError("--alpha LO..HI (or --alpha-lo/--alpha-hi) is required")
    if not 2 <= lo <= hi:
        raise UsageError(f"need 2 <= alpha_lo <= alpha_hi, got {lo}..{hi}")
    return lo, hi


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _no_csv(args) -> None:
    if args.format == "csv":
        raise UsageError(f"csv output is only available for scan and verify, not {args.command}")


def cmd_analyze(args) -> int:
    _no_csv(args)
    A = _generator_set(args)
    inv = invariants(A)
    fam = classify_families(A, inv.lambda_)
    bounds = check_bounds(A, inv, fam)
    p1, p2 = check_p1(A), check_p2(A)
    if args.format == "json":
        _emit(args, report.dumps(report.analyze_doc(A, inv, bounds, fam, p1, p2)))
        return EXIT_OK
    lines = [
        f"A = {A}  (alpha={A.alpha}, codim={A.codim})",
        f"r={inv.r} reg={inv.reg}  (Q) {'holds' if inv.r == inv.reg else 'FAILS'}",
        f"epsilon={inv.epsilon} lambda={inv.lambda_} glp_bound={inv.glp_bound} "
        f"improvement_bound={inv.improvement_bound}",
        f"P1: {'holds' if p1.holds else f'fails at m={p1.witness_m}'}",
        f"P2: {'holds' if p2.holds else f'fails at m={p2.witness_m}'}",
        "bounds:",
    ]
    for b in bounds.bounds:
        lines.append(f"  {b.name:28s} {b.lhs} <= {b.rhs}  {'ok' if b.satisfied else 'VIOLATED'}")
    k, c = fam.komb_ii, fam.compute_r
    lines.append("families:")
    lines.append(f"  komb_ii: {'no' if k is None else f'p={k.p} q={k.q} l={k.l} mirrored={k.mirrored}'}")
    lines.append(f"  partial: {'yes' if fam.partial else 'no'}")
    if c is None:
        lines.append("  computeR: no")
    else:
        extra = f" exact={c.exact_value}" if c.exact else ""
        lines.append(f"  computeR: epsilon={c.epsilon} p1={c.p1} delta={c.delta} "
                     f"gamma={c.gamma} lower={c.lower_bound}{extra}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sumset(args) -> int:
    _no_csv(args)
    A = _generator_set(args)
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    f = power_support(A, args.m)
    if args.format == "json":
        _emit(args, report.dumps(report.sumset_doc(A, args.m, f)))
        return EXIT_OK
    gl = gaps(f)
    lines = [
        f"{args.m}A = {format_support(f)}",
        f"gaps: {', '.join(f'{{{format_runs(range(g.lo, g.hi + 1))}}}' for g in gl) or 'none'}",
        f"full: {'yes' if is_full(f) else 'no'}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_holes(args) -> int:
    _no_csv(args)
    A = _generator_set(args)
    if args.h2_cutoff < 1:
        raise UsageError("--h2-cutoff must be >= 1")
    hs = holes(A)
    table = cohomology_dims(A, args.h2_cutoff)
    if args.format == "json":
        _emit(args, report.dumps(report.holes_doc(A, hs, table)))
        return EXIT_OK
    lines = [f"A = {A}  (alpha={A.alpha})", f"holes: {len(hs)}"]
    for m in sorted(table.h1):
        u1s = [x.u1 for x in hs if x.degree == m]
        lines.append(f"  degree {m}: u1 in {{{format_runs(u1s)}}}")
    lines.append("h1: " + (", ".join(f"[{m}]={d}" for m, d in table.h1.items()) or "0"))
    lines.append("h2: " + ", ".join(f"[{m}]={d}" for m, d in table.h2.items()))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cost_note(lo: int, hi: int) -> None:
    if hi > 28:
        total = sum(universe_size(a) for a in range(lo, hi + 1))
        print(f"note: {total} generator sets to enumerate", file=sys.stderr)


def cmd_scan(args) -> int:
    lo, hi = _alpha_range(args)
    _cost_note(lo, hi)
    if args.m is not None and args.mode != "p2-violation":
        raise UsageError("--m restricts only the p2-violation mode")
    rep = scan(lo, hi, args.mode, args.workers, only_m=args.m, allow_large=args.allow_large)
    if args.format == "json":
        _emit(args, report.dumps(report.scan_doc(rep)))
    elif args.format == "csv":
        _emit(args, report.scan_csv(rep))
    else:
        lines = [f"scan alpha={lo}..{hi} mode={rep.mode}: {rep.total_sets} sets, "
                 f"{len(rep.findings)} findings"]
        for f in rep.findings:
            wm = f" witness m={f.witness.m}" if f.witness else ""
            lines.append(f"  alpha={f.generator_set.alpha} A={f.generator_set} "
                         f"r={f.invariants.r} reg={f.invariants.reg}{wm}")
        _emit(args, "\n".join(lines) + "\n")
    print(f"elapsed {rep.elapsed:.2f}s", file=sys.stderr)
    return EXIT_FINDINGS if rep.findings else EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = _alpha_range(args)
    _cost_note(lo, hi)
    suites = tuple(args.suite) if args.suite else ("core", "families")
    rep = verify_suite(lo, hi, args.workers, suites, allow_large=args.allow_large)
    if args.format == "json":
        _emit(args, report.dumps(report.verify_doc(rep)))
    elif args.format == "csv":
        _emit(args, report.verify_csv(rep))
    else:
        lines = [f"verify alpha={lo}..{hi}: {rep.total_sets} sets, {len(rep.failures)} failures"]
        for name, (p, f) in sorted(rep.counters.items()):
            lines.append(f"  {name:36s} passed={p} failed={f}")
        for fail in rep.failures[:20]:
            lines.append(f"  FAIL {fail['invariant']} alpha={fail['alpha']} "
                         f"A={fail['elements']} {fail['detail']}")
        _emit(args, "\n".join(lines) + "\n")
    print(f"elapsed {rep.elapsed:.2f}s", file=sys.stderr)
    return EXIT_FINDINGS if rep.failures else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "csv"], default="human")
    common.add_argument("--out", help="write the report to this path instead of stdout")

    single = _Parser(add_help=False)
    single.add_argument("--set", help="first coordinates of the generators, e.g. 0,1,3,4")
    single.add_argument("--pairs", help="raw generators, e.g. '(4,0),(3,1),(1,3),(0,4)'")
    single.add_argument("--alpha", help="degree; defaults to max(set)")

    many = _Parser(add_help=False)
    many.add_argument("--alpha", help="range LO..HI or a single value")
    many.add_argument("--alpha-lo", type=int)
    many.add_argument("--alpha-hi", type=int)
    many.add_argument("--workers", type=int, default=default_workers())
    many.add_argument("--allow-large", action="store_true",
                      help="permit alpha above 28 (2^25+ sets)")

    parser = _Parser(prog="moncurve", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common, single], help="invariants, bounds, families")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("sumset", parents=[common, single], help="mA, its gaps and fullness")
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_sumset)
    p = sub.add_parser("holes", parents=[common, single], help="holes and cohomology dimensions")
    p.add_argument("--h2-cutoff", type=int, default=3)
    p.set_defaults(func=cmd_holes)
    p = sub.add_parser("scan", parents=[common, many], help="exhaustive search")
    p.add_argument("--mode", choices=MODES, default="q-counterexample")
    p.add_argument("--m", type=int, help="p2-violation mode: check only this m")
    p.set_defaults(func=cmd_scan)
    p = sub.add_parser("verify", parents=[common, many], help="invariant suite")
    p.add_argument("--suite", action="append", choices=["core", "families"])
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        return args.func(args)
    except (UsageError, CurveError, ScanTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
