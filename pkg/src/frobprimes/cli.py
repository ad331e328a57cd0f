"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a check failed or a scan found a conjecture
violation, 2 usage or validation error, 3 sieve ceiling exceeded.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import contextmanager
from decimal import Decimal, InvalidOperation
from typing import Sequence

from . import primes as P
from .errors import LimitTooLarge, ValidationError
from .reporting import dumps, fmt_real
from .semigroup import make_pair

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_CLI_CEILING = 10**9
HARD_CEILING = 10**10


def natural(text: str) -> int:
    """Non-negative integer; also accepts 10_000 and 2e9."""
    try:
        d = Decimal(text.replace("_", ""))
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if d != d.to_integral_value() or d < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(d)


def integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def int_list(text: str) -> list[int]:
    return [natural(t) for t in text.split(",") if t.strip()]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--json", action="store_const", const="json", dest="format_flag",
                        help="shorthand for --format json")
    common.add_argument("--out", "-o", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--workers", type=natural, default=1, help="worker processes (0 = auto)")
    common.add_argument("--sieve-ceiling", type=natural, default=None,
                        help=f"largest sieve limit (default {DEFAULT_CLI_CEILING:.0e})")
    common.add_argument("--unsafe-ceiling", action="store_true", help=f"allow a ceiling above {HARD_CEILING:.0e}")
    common.add_argument("--cache", metavar="FILE", help="checkpoint cache (CSV x,pi) for long sieving runs")
    common.add_argument("--seed", type=natural, default=0)

    parser = _Parser(prog="frobprimes", description="Primes of the form ax + by below the Frobenius number.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frobenius", parents=[common], help="print S = ab - a - b")
    p.add_argument("a", type=natural)
    p.add_argument("b", type=natural)

    p = sub.add_parser("member", parents=[common], help="is n in T(a, b)?")
    p.add_argument("a", type=natural)
    p.add_argument("b", type=natural)
    p.add_argument("n", type=integer)

    p = sub.add_parser("count", parents=[common], help="pi(a, b), pi(S) and their ratio")
    p.add_argument("a", type=natural)
    p.add_argument("b", type=natural)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle and compare")

    p = sub.add_parser("ratio", parents=[common], help="pi(a, b) / pi(S)")
    p.add_argument("a", type=natural)
    p.add_argument("b", type=natural)

    v = sub.add_parser("verify", help="machine-check the explicit constants")
    vs = v.add_subparsers(dest="check", required=True, parser_class=_Parser)
    q = vs.add_parser("lemma3", parents=[common])
    q.add_argument("--u", type=int_list, default=[2, 3, 4], help="grid exponents, e.g. 2,3,4")
    for name, trials in (("lemma6", 10**4), ("lemma9", 200), ("brun-titchmarsh", 1000), ("mv-small", 500)):
        q = vs.add_parser(name, parents=[common])
        q.add_argument("--trials", type=natural, default=trials)
    q = vs.add_parser("lemma8", parents=[common])
    q.add_argument("--limit", type=natural, default=10**6)
    q = vs.add_parser("pi-li", parents=[common])
    q.add_argument("--points", type=int_list, default=[1474279333, 2 * 10**9])
    q = vs.add_parser("case", parents=[common])
    q.add_argument("n", type=int, choices=range(1, 7))
    vs.add_parser("cases", parents=[common])
    q = vs.add_parser("theorem2", parents=[common])
    q.add_argument("--sample", type=natural, default=500)
    q.add_argument("--s-max", type=natural, default=10**7)
    q.add_argument("--pairs", metavar="FILE", help="CSV of a,b pairs instead of sampling")
    q = vs.add_parser("all", parents=[common])
    q.add_argument("--long", action="store_true", help="add the grid to 10^10 and the pi-Li check")

    p = sub.add_parser("scan", parents=[common], help="sweep ratios over a rectangle of pairs")
    p.add_argument("--a-min", type=natural, required=True)
    p.add_argument("--a-max", type=natural, required=True)
    p.add_argument("--b-max", type=natural, required=True)

    p = sub.add_parser("trend", parents=[common], help="ratio against the large-b limit")
    p.add_argument("--a", type=natural, required=True)
    p.add_argument("--b-list", type=int_list, required=True)
    return parser


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def read_pairs(path: str):
    pairs = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip() or row[0].strip().startswith("#"):
                continue
            if row[0].strip() == "a":
                continue
            pairs.append(make_pair(int(row[0]), int(row[1])))
    return pairs


def _emit_reports(reports, fmt, out) -> int:
    from .verifier import CheckReport

    if fmt == "json":
        out.write("[" + ",".join(r.to_json() for r in reports) + "]\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CheckReport.FIELDS)
        for r in reports:
            w.writerow(r.csv_row())
    else:
        for r in reports:
            out.write(r.text_line() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _count(args, fmt, out) -> int:
    from .census import count_oracle, count_semigroup_primes

    pair = make_pair(args.a, args.b)
    s = pair.frobenius
    pi_ab = count_semigroup_primes(pair)
    pi_s = P.prime_count(s)
    rec = {"a": pair.a, "b": pair.b, "s": s, "pi_ab": pi_ab, "pi_s": pi_s,
           "ratio": pi_ab / pi_s if pi_s else None}
    code = EXIT_OK
    if args.oracle:
        rec["oracle"] = count_oracle(pair)
        code = EXIT_OK if rec["oracle"] == pi_ab else EXIT_FAIL
    if fmt == "json":
        out.write(dumps(rec) + "\n")
    elif fmt == "csv":
        out.write(",".join(rec) + "\n")
        out.write(",".join("" if v is None else (fmt_real(v) if isinstance(v, float) else str(v)) for v in rec.values()) + "\n")
    else:
        out.write(" ".join(f"{k}={'-' if v is None else (fmt_real(v) if isinstance(v, float) else v)}"
                           for k, v in rec.items()) + "\n")
    return code


def _verify(args, fmt, out) -> int:
    from . import verifier as V

    c = args.check
    if c == "lemma3":
        reports = [V.verify_lemma3_small(), V.verify_lemma3_grid(args.u, args.cache)]
    elif c == "lemma6":
        reports = [V.verify_lemma6(args.trials, args.seed)]
    elif c == "lemma8":
        reports = [V.verify_lemma8(args.limit)]
    elif c == "lemma9":
        reports = [V.verify_lemma9(V.sample_pairs(args.trials, args.seed, a_min=10))]
    elif c == "brun-titchmarsh":
        reports = [V.verify_brun_titchmarsh(args.trials, args.seed)]
    elif c == "mv-small":
        reports = [V.verify_mv_small_moduli(args.trials, args.seed)]
    elif c == "pi-li":
        reports = [V.verify_pi_li(args.points, args.cache)]
    elif c == "case":
        reports = [getattr(V, f"verify_case{args.n}")()]
    elif c == "cases":
        reports = V.verify_cases()
    elif c == "theorem2":
        pairs = read_pairs(args.pairs) if args.pairs else V.sample_pairs(args.sample, args.seed, s_max=args.s_max)
        reports = [V.verify_theorem2(pairs)]
    else:
        reports = V.verify_all(long=args.long, seed=args.seed, cache=args.cache)
    return _emit_reports(reports, fmt, out)


def _scan(args, fmt, out) -> int:
    from .scanner import CSV_HEADER, csv_line, json_row, scan

    if fmt == "csv":
        out.write(CSV_HEADER + "\n")
        sink = lambda row: out.write(csv_line(row) + "\n")
    elif fmt == "json":
        first = [True]
        out.write("[")

        def sink(row):
            out.write(("" if first[0] else ",") + json_row(row))
            first[0] = False
    else:
        sink = None
    summary = scan(args.a_min, args.a_max, args.b_max, sink, workers=args.workers)
    d = summary.as_dict()
    if fmt == "json":
        out.write(("" if summary.pairs_scanned == 0 else ",") + dumps(d) + "]\n")
    else:
        dest = sys.stderr if fmt == "csv" else out
        for k, v in d.items():
            if k != "summary":
                dest.write(f"{k:<16} {fmt_real(v) if isinstance(v, float) else v}\n")
    return EXIT_FAIL if summary.violations else EXIT_OK


def _trend(args, fmt, out) -> int:
    from .scanner import trend

    rows = trend(args.a, args.b_list)
    if fmt == "json":
        out.write(dumps([{"b": b, "ratio": r, "predicted": p} for b, r, p in rows]) + "\n")
    else:
        sep = "," if fmt == "csv" else " "
        out.write(sep.join(("b", "ratio", "predicted")) + "\n")
        for b, r, p in rows:
            out.write(sep.join((str(b), fmt_real(r), fmt_real(p))) + "\n")
    return EXIT_OK


def dispatch(args) -> int:
    fmt = args.format_flag or args.format or ("csv" if args.command == "scan" else "text")
    ceiling = args.sieve_ceiling
    if ceiling is None:
        ceiling = HARD_CEILING if getattr(args, "long", False) else DEFAULT_CLI_CEILING
    if ceiling > HARD_CEILING and not args.unsafe_ceiling:
        raise ValidationError(f"--sieve-ceiling above {HARD_CEILING} needs --unsafe-ceiling")
    with P.sieve_ceiling(ceiling), _output(args.out) as out:
        if args.command == "frobenius":
            s = make_pair(args.a, args.b).frobenius
            out.write((dumps({"a": args.a, "b": args.b, "s": s}) if fmt == "json" else str(s)) + "\n")
            return EXIT_OK
        if args.command == "member":
            from .semigroup import SemigroupView

            m = SemigroupView(make_pair(args.a, args.b)).contains(args.n)
            out.write((dumps({"a": args.a, "b": args.b, "n": args.n, "member": m}) if fmt == "json"
                       else ("true" if m else "false")) + "\n")
            return EXIT_OK
        if args.command == "count":
            return _count(args, fmt, out)
        if args.command == "ratio":
            from .census import ratio_result

            r = ratio_result(make_pair(args.a, args.b))
            out.write((dumps(r.as_dict()) if fmt == "json" else fmt_real(r.ratio)) + "\n")
            return EXIT_OK
        if args.command == "verify":
            return _verify(args, fmt, out)
        if args.command == "scan":
            return _scan(args, fmt, out)
        return _trend(args, fmt, out)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return dispatch(args)
    except LimitTooLarge as e:
        print(f"frobprimes: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError) as e:
        print(f"frobprimes: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
