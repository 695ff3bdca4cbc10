"""Command-line surface.

Exit codes: 0 success, 1 usage or budget errors, 2 a verification-style
subcommand computed fine but the checked claim failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import extremal, genfunc, spectrum, wilf
from .errors import BinseqError
from .words import count_occurrences, parse_word, run_decompose

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_FAILED = 2

DEFAULT_CLI_CAP = 22


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _emit_csv(rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _pattern(args):
    return parse_word(args.pattern)


def _cmd_count(args) -> int:
    value = count_occurrences(_pattern(args), parse_word(args.word))
    if args.format == "csv":
        _emit_csv([("count",), (str(value),)])
    else:
        _emit_json({"count": str(value)})
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    s = spectrum.brute_spectrum(_pattern(args), args.n, workers=args.workers, cap=args.max_n)
    if args.format == "csv":
        _emit_csv(s.to_csv_rows())
    else:
        _emit_json(s.to_json_dict())
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    value = spectrum.closed_form_B(_pattern(args), args.n, args.k)
    if args.format == "csv":
        _emit_csv([("B",), (str(value),)])
    else:
        _emit_json({"B": str(value)})
    return EXIT_OK


def _cmd_identities(args) -> int:
    s = spectrum.brute_spectrum(_pattern(args), args.n, workers=args.workers, cap=args.max_n)
    report = spectrum.verify_identities(s)
    if args.format == "csv":
        rows = [("identity", "holds", "lhs", "rhs")]
        rows += [(c.name, str(c.holds).lower(), str(c.lhs), str(c.rhs)) for c in report.checks]
        _emit_csv(rows)
    else:
        _emit_json(report.to_json_dict())
    return EXIT_OK if report.all_hold else EXIT_CLAIM_FAILED


def _cmd_max(args) -> int:
    m, argmax = extremal.max_three_run(args.i, args.j, args.k, args.n)
    out = {
        "M": str(m),
        "argmax": [{"a": a, "b": b, "c": c} for a, b, c in argmax],
    }
    status = EXIT_OK
    if args.oracle:
        from .words import BinaryWord

        p = BinaryWord.from_letters([1] * args.i + [0] * args.j + [1] * args.k)
        oracle = extremal.optimal_words(p, args.n, workers=args.workers, cap=args.max_n)
        out["oracle_M"] = str(oracle.M)
        out["match"] = oracle.M == m
        if not out["match"]:
            status = EXIT_CLAIM_FAILED
    if args.format == "csv":
        rows = [("a", "b", "c")] + [(str(a), str(b), str(c)) for a, b, c in argmax]
        _emit_csv([("M",), (str(m),)] + rows)
    else:
        _emit_json(out)
    return status


def _cmd_optimal(args) -> int:
    res = extremal.optimal_words(
        _pattern(args), args.n, workers=args.workers, cap=args.max_n, max_words=args.limit
    )
    if args.format == "csv":
        rows = [("word",)] + [(str(w),) for w in res.optimal_words]
        _emit_csv(rows)
    else:
        _emit_json(res.to_json_dict())
    return EXIT_OK


def _cmd_internal_zeros(args) -> int:
    p = _pattern(args)
    predict = not args.no_predict and run_decompose(p).r <= 3
    n_min = args.n_min if args.n_min is not None else p.length
    rows = extremal.classify_internal_zeros(
        p, range(n_min, args.n_max + 1), predict=predict,
        workers=args.workers, cap=args.max_n,
    )
    agreement = all(row.agrees for row in rows)
    if args.format == "csv":
        out = [("n", "internal_zero", "top_gap", "predicted_internal_zero",
                "predicted_top_gap", "agrees")]
        for row in rows:
            d = row.to_json_dict()
            out.append(tuple(str(d[c]).lower() for c in
                             ("n", "internal_zero", "top_gap",
                              "predicted_internal_zero", "predicted_top_gap", "agrees")))
        _emit_csv(out)
    else:
        _emit_json({
            "pattern": str(p),
            "predict": predict,
            "rows": [row.to_json_dict() for row in rows],
            "agreement": agreement,
        })
    return EXIT_OK if agreement else EXIT_CLAIM_FAILED


def _cmd_wilf_scan(args) -> int:
    result = wilf.strong_wilf_scan(
        args.l, args.n_max, workers=args.workers, cap=args.max_n,
        checkpoint_path=args.checkpoint,
    )
    if args.format == "csv":
        rows = [("members", "least_separating_n")]
        for c in result.classes:
            rows.append((" ".join(str(w) for w in c.members),
                         "" if c.least_separating_n is None else str(c.least_separating_n)))
        _emit_csv(rows)
    else:
        _emit_json(result.to_json_dict())
    return EXIT_OK if result.verdict else EXIT_CLAIM_FAILED


def _cmd_gf_check(args) -> int:
    from .words import BinaryWord

    series = genfunc.gf_coefficients(args.i, args.j, args.order)
    p = BinaryWord.from_letters([1] * args.i + [0] + [1] * args.j)
    mismatches = []
    for n in range(args.order + 1):
        counts = spectrum.brute_spectrum(p, n, workers=args.workers, cap=args.max_n).counts
        upper = max(len(counts), max(series.coeffs[n], default=-1) + 1)
        for k in range(upper):
            expected = counts[k] if k < len(counts) else 0
            got = series.coefficient(n, k)
            if got != expected:
                mismatches.append({"n": n, "k": k, "series": str(got), "spectrum": str(expected)})
    out = {"i": args.i, "j": args.j, "N": args.order,
           "match": not mismatches, "mismatches": mismatches}
    if args.format == "csv":
        rows = [("n", "k", "series", "spectrum")]
        rows += [(str(m["n"]), str(m["k"]), m["series"], m["spectrum"]) for m in mismatches]
        _emit_csv(rows)
    else:
        _emit_json(out)
    return EXIT_OK if not mismatches else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    default_workers = int(os.environ.get("BINSEQ_WORKERS", "1"))
    parser = argparse.ArgumentParser(
        prog="binseq",
        description="Subsequence frequency spectra of binary words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, workers=True):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--max-n", type=int, default=DEFAULT_CLI_CAP,
                        help="enumeration budget cap (default %(default)s)")
        if workers:
            sp.add_argument("--workers", type=int, default=default_workers)

    sp = sub.add_parser("count", help="occurrences of a pattern in a word")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("-w", "--word", required=True)
    common(sp, workers=False)
    sp.set_defaults(func=_cmd_count)

    sp = sub.add_parser("spectrum", help="exhaustive frequency spectrum")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("-n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_spectrum)

    sp = sub.add_parser("closed-form", help="closed-form B value for k <= 4")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    common(sp, workers=False)
    sp.set_defaults(func=_cmd_closed_form)

    sp = sub.add_parser("identities", help="check the two spectrum identities")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("-n", type=int, required=True)
    common(sp)
    sp.set_defaults(func=_cmd_identities)

    sp = sub.add_parser("max", help="maximum occurrences of 1^i 0^j 1^k")
    sp.add_argument("-i", type=int, required=True)
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--oracle", action="store_true",
                    help="also enumerate and compare (exit 2 on mismatch)")
    common(sp)
    sp.set_defaults(func=_cmd_max)

    sp = sub.add_parser("optimal", help="all words attaining the maximum")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--limit", type=int, default=None)
    common(sp)
    sp.set_defaults(func=_cmd_optimal)

    sp = sub.add_parser("internal-zeros", help="per-n classification vs predictions")
    sp.add_argument("-p", "--pattern", required=True)
    sp.add_argument("--n-min", type=int, default=None)
    sp.add_argument("--n-max", type=int, required=True, dest="n_max")
    sp.add_argument("--no-predict", action="store_true")
    common(sp)
    sp.set_defaults(func=_cmd_internal_zeros)

    sp = sub.add_parser("wilf-scan", help="strong-Wilf-equivalence scan")
    sp.add_argument("-l", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True, dest="n_max")
    sp.add_argument("--checkpoint", default=None,
                    help="JSONL spectra checkpoint; scans resume from it")
    common(sp)
    sp.set_defaults(func=_cmd_wilf_scan)

    sp = sub.add_parser("gf-check", help="series coefficients vs exhaustive spectra")
    sp.add_argument("-i", type=int, required=True)
    sp.add_argument("-j", type=int, required=True)
    sp.add_argument("-N", type=int, required=True, dest="order")
    common(sp)
    sp.set_defaults(func=_cmd_gf_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BinseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
