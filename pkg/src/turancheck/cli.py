"""Command-line front end.

Verbs: ``gen`` (emit a sequence or coefficient array), ``check`` (run one
check over a sequence), ``scan`` (partition-function tables), and
``verify-paper`` (the full battery of tabulated partition-function range
verifications).  Reports go to stdout or ``--out``; exit status is 0 when
nothing failed, 1 when any record failed, 2 on usage or input errors.
NOT_APPLICABLE records never fail the exit status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import checks, partition, realroots, sequences
from .exact import DomainError, PreconditionError, format_rational, parse_rational
from .sequences import ParseError, PolynomialCoeffs, SequenceWindow

DEFAULT_MAX_N = 1000

_SEQUENCE_CHECKS = {
    "logconcave": lambda window, args, lo, hi: checks.is_log_concave(window, lo, hi),
    "klogconcave": lambda window, args, lo, hi: checks.is_k_log_concave(
        window, args.j, lo, hi
    ),
    "hot": lambda window, args, lo, hi: checks.higher_turan_report(window, lo, hi),
    "ineq1": lambda window, args, lo, hi: checks.surd_bounds_report(window, lo, hi),
    "ineq2": lambda window, args, lo, hi: checks.neighbor_bounds_report(window, lo, hi),
    "criterion": lambda window, args, lo, hi: checks.criterion_r_check(
        window, _require_r(args), lo, hi
    ),
    "convex": lambda window, args, lo, hi: checks.convexity_check(window, lo, hi),
    "ratio-up": lambda window, args, lo, hi: checks.ratio_up_convexity_check(
        window, lo, hi
    ),
    "ratio-down": lambda window, args, lo, hi: checks.ratio_down_convexity_check(
        window, lo, hi
    ),
    "l-increasing": lambda window, args, lo, hi: checks.l_increasing_check(
        window, lo, hi
    ),
    "sandwich": lambda window, args, lo, hi: checks.chain_bounds_report(window, lo, hi),
}

_POLY_CHECKS = ("marik", "branden")


class UsageError(Exception):
    pass


def _require_r(args) -> Fraction:
    if args.r is None:
        raise UsageError("this check needs --r")
    return args.r


def _scan_cap() -> int:
    raw = os.environ.get("TURAN_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError as exc:
        raise UsageError(f"TURAN_MAX_N must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise UsageError("TURAN_MAX_N must be positive")
    return cap


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"range must look like lo:hi, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(f"range must be integers, got {text!r}") from exc
    if lo > hi:
        raise UsageError(f"range must have lo <= hi, got {text!r}")
    return lo, hi


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turancheck",
        description="Exact-arithmetic log-concavity hierarchy checks and scans.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="emit a generated sequence or polynomial")
    gen.add_argument(
        "kind", choices=["partition", "binomial", "geometric", "hermite", "laguerre"]
    )
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--r", type=_rational, default=None)
    gen.add_argument("--len", dest="length", type=int, default=None)
    _output_options(gen)

    check = sub.add_parser("check", help="run one check over a sequence")
    check.add_argument(
        "name", choices=sorted(_SEQUENCE_CHECKS) + list(_POLY_CHECKS)
    )
    check.add_argument("--seq", required=True, help="partition|binomial|geometric|"
                       "hermite|laguerre|csv:PATH")
    check.add_argument("--range", dest="index_range", default=None, metavar="LO:HI")
    check.add_argument("--n", type=int, default=None)
    check.add_argument("--r", type=_rational, default=None)
    check.add_argument("--len", dest="length", type=int, default=None)
    check.add_argument("--j", type=int, default=2, help="levels for klogconcave")
    check.add_argument("--depth", type=int, default=1, help="levels for branden")
    _output_options(check)

    scan = sub.add_parser("scan", help="partition-function scans")
    scan.add_argument("kind", choices=["fk", "terminal-bounds", "delta"])
    scan.add_argument("--range", dest="index_range", required=True, metavar="LO:HI")
    scan.add_argument("--kmax", type=int, default=40)
    scan.add_argument("--kmin", type=int, default=3)
    scan.add_argument(
        "--literal-radicand",
        action="store_true",
        help="audit variant: flip the radicand sign of the upper surd bound",
    )
    _output_options(scan)

    verify = sub.add_parser(
        "verify-paper", help="run every tabulated partition-function verification"
    )
    verify.add_argument("--max-n", type=int, default=None)
    return parser


def _output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=["csv", "json"], default="csv")
    sub.add_argument("--out", default=None)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w") as handle:
            handle.write(text)


def _window_json(window: SequenceWindow) -> str:
    return json.dumps(
        {
            "name": window.name,
            "start_index": window.start_index,
            "terms": [format_rational(t) for t in window.terms],
        },
        indent=2,
    )


def _window_csv(window: SequenceWindow) -> str:
    lines = ["index,value"]
    for offset, term in enumerate(window.terms):
        lines.append(f"{window.start_index + offset},{format_rational(term)}")
    return "\n".join(lines) + "\n"


def _run_gen(args) -> int:
    kind = args.kind
    if kind == "partition":
        if args.n is None:
            raise UsageError("gen partition needs --n")
        window = sequences.gen_partition(args.n)
    elif kind == "binomial":
        if args.n is None:
            raise UsageError("gen binomial needs --n")
        window = sequences.gen_binomial_row(args.n)
    elif kind == "geometric":
        r = args.r if args.r is not None else Fraction(2)
        length = args.length if args.length is not None else 20
        window = sequences.gen_geometric_logconcave(r, length)
    else:
        if args.n is None:
            raise UsageError(f"gen {kind} needs --n")
        poly = sequences.gen_hermite(args.n) if kind == "hermite" else sequences.gen_laguerre(args.n)
        window = SequenceWindow(f"{kind}[{args.n}]", 0, poly.coeffs)
    text = _window_csv(window) if args.format == "csv" else _window_json(window)
    _emit(text, args.out)
    return 0


def _resolve_window(args, lo: int | None, hi: int | None) -> SequenceWindow:
    seq = args.seq
    if seq == "partition":
        cap = _scan_cap()
        top = min(hi if hi is not None else cap, cap)
        margin = max(4, args.j + 2 if args.name == "klogconcave" else 4)
        return sequences.gen_partition(top + margin)
    if seq == "binomial":
        if args.n is None:
            raise UsageError("--seq binomial needs --n")
        return sequences.gen_binomial_row(args.n)
    if seq == "geometric":
        r = args.r if args.r is not None else Fraction(2)
        length = args.length if args.length is not None else 20
        return sequences.gen_geometric_logconcave(r, length)
    if seq.startswith("csv:"):
        return sequences.load_csv(seq[4:])
    if seq in ("hermite", "laguerre"):
        raise UsageError(
            f"--seq {seq} is a polynomial source; use it with check marik/branden"
        )
    raise UsageError(f"unknown sequence {seq!r}")


def _resolve_poly(args) -> PolynomialCoeffs:
    seq = args.seq
    if seq in ("hermite", "laguerre"):
        if args.n is None:
            raise UsageError(f"--seq {seq} needs --n")
        return sequences.gen_hermite(args.n) if seq == "hermite" else sequences.gen_laguerre(args.n)
    if seq == "binomial":
        if args.n is None:
            raise UsageError("--seq binomial needs --n")
        return PolynomialCoeffs(sequences.gen_binomial_row(args.n).terms)
    if seq.startswith("csv:"):
        return PolynomialCoeffs(sequences.load_csv(seq[4:]).terms)
    raise UsageError(f"--seq {seq!r} is not a polynomial source")


def _run_check(args) -> int:
    lo, hi = (None, None)
    if args.index_range is not None:
        lo, hi = _parse_range(args.index_range)
    if args.name in _POLY_CHECKS:
        poly = _resolve_poly(args)
        if args.name == "marik":
            report = realroots.marik_check(poly)
        else:
            report = realroots.branden_check(poly, args.depth)
    else:
        if args.seq == "partition":
            cap = _scan_cap()
            hi = cap if hi is None else min(hi, cap)
        window = _resolve_window(args, lo, hi)
        report = _SEQUENCE_CHECKS[args.name](window, args, lo, hi)
    text = report.to_json() if args.format == "json" else report.to_csv()
    _emit(text, args.out)
    return 0 if report.ok else 1


def _run_scan(args) -> int:
    lo, hi = _parse_range(args.index_range)
    cap = _scan_cap()
    if hi > cap:
        print(f"note: scan ceiling clamped to TURAN_MAX_N={cap}", file=sys.stderr)
        hi = cap
    if lo > hi:
        raise UsageError("range is empty after clamping")
    if args.kind == "delta":
        report = partition.delta_increasing_scan(lo, hi)
        text = report.to_json() if args.format == "json" else report.to_csv()
        _emit(text, args.out)
        return 0 if report.ok else 1
    if args.kind == "fk":
        rows = partition.admissible_scan(lo, hi, args.kmax)
        surd_columns = False
    else:
        rows = partition.terminal_bounds_scan(
            lo, hi, args.kmin, args.kmax, literal_radicand=args.literal_radicand
        )
        surd_columns = True
    if args.format == "json":
        text = partition.scan_rows_to_json(rows)
    else:
        text = partition.scan_rows_to_csv(rows, surd_columns=surd_columns)
    _emit(text, args.out)
    return 0


def _run_verify(args) -> int:
    cap = _scan_cap()
    max_n = min(args.max_n, cap) if args.max_n is not None else cap
    if max_n < 430:
        raise UsageError("verify-paper needs --max-n of at least 430")
    lines: list[str] = []
    all_ok = True

    tables = partition.verify_tabulated_ranges()
    ok = tables.ok
    all_ok &= ok
    lines.append(_verdict_line("tabulated-ranges", ok,
                               f"{len(tables.records)} rows"))

    delta = partition.delta_increasing_scan(55, max_n)
    ok = delta.ok and all(r.status is checks.CheckStatus.HOLDS_STRICT
                          for r in delta.records)
    all_ok &= ok
    lines.append(_verdict_line("delta-increasing[55:%d]" % max_n, ok,
                               "strict throughout"))

    hierarchy = partition.hierarchy_scan(max_n)
    verdicts = partition.hierarchy_verdicts(hierarchy)
    for name in sorted(verdicts):
        ok = verdicts[name]
        all_ok &= ok
        threshold = partition.HIERARCHY_THRESHOLDS[name]
        start = checks.first_all_holds_start(hierarchy[name])
        lines.append(
            _verdict_line(
                f"{name}[{threshold}:{max_n}]",
                ok,
                f"first all-holds start {start}",
            )
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if all_ok else 1


def _verdict_line(label: str, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} {label} ({detail})"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.verb == "gen":
            return _run_gen(args)
        if args.verb == "check":
            return _run_check(args)
        if args.verb == "scan":
            return _run_scan(args)
        return _run_verify(args)
    except (UsageError, ParseError, PreconditionError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
