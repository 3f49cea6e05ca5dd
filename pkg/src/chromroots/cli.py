"""Command-line client for the experiment runners.

Thin by design: parse arguments, call the same experiment functions the
HTTP service wraps, serialise the report, and exit 0 when every check
passed, 1 when a violation was found, 2 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import experiments
from .version import VERSION

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # global flags are valid both before and after the subcommand; the
    # subparser copies use SUPPRESS so they only override when present
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--precision-bits", type=int, default=d(256), help="root-finder precision")
    parser.add_argument("--tol", type=float, default=d(1e-9), help="real-root classification tolerance")
    parser.add_argument("--threads", type=int, default=d(1), help="worker processes for parallel parts")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomised parts")
    parser.add_argument("--out", type=Path, default=d(None), help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("json", "csv"), default=d(None), help="report format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromroots",
        description="Exact chromatic polynomials and root real-part experiments",
    )
    parser.add_argument("--version", action="version", version=f"chromroots {VERSION}")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minq", help="smallest q where pi(K_{p,q}, x+p) loses quasi-stability")
    p.add_argument("-p", type=int, required=True, dest="p", help="fixed part size (2..6)")
    p.add_argument("--q-max", type=int, default=50)
    _global_options(p, suppress=True)

    p = sub.add_parser("rootcloud", help="roots of all chromatic polynomials of an order or file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--order", type=int, help="enumerate all labeled graphs of this order (<= 7)")
    src.add_argument("--file", type=Path, help="graph6 file, one graph per line")
    _global_options(p, suppress=True)

    p = sub.add_parser("verify-n3", help="real-part bound for chromatic number >= n-3")
    p.add_argument("-n", type=int, required=True, dest="n")
    _global_options(p, suppress=True)

    p = sub.add_parser("kn-minus-2k2", help="non-real roots of K_n minus two disjoint edges")
    p.add_argument("--n-from", type=int, default=4)
    p.add_argument("--n-to", type=int, default=10)
    _global_options(p, suppress=True)

    p = sub.add_parser("verify-coeffs", help="cross-check every coefficient route")
    p.add_argument("-n", type=int, required=True, dest="n")
    p.add_argument("--random-count", type=int, default=None)
    _global_options(p, suppress=True)

    p = sub.add_parser("identify-h", help="pin the order-5 correction pattern")
    p.add_argument("--corpus-size", type=int, default=500)
    _global_options(p, suppress=True)

    p = sub.add_parser("verify-quartic", help="dual-route instability indicator identity")
    p.add_argument("--p-max", type=int, default=6)
    p.add_argument("--q-max", type=int, default=50)
    _global_options(p, suppress=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    _global_options(p, suppress=True)

    return parser


def _run(args) -> experiments.ExperimentReport:
    if args.command == "minq":
        return experiments.run_minq(args.p, args.q_max, args.precision_bits, args.tol, args.seed)
    if args.command == "rootcloud":
        if args.order is not None:
            return experiments.run_rootcloud(
                order=args.order,
                precision_bits=args.precision_bits,
                tol=args.tol,
                seed=args.seed,
                threads=args.threads,
            )
        lines = args.file.read_text().splitlines()
        return experiments.run_rootcloud(
            graph6_lines=lines,
            precision_bits=args.precision_bits,
            tol=args.tol,
            seed=args.seed,
            threads=args.threads,
        )
    if args.command == "verify-n3":
        return experiments.run_verify_n3(args.n)
    if args.command == "kn-minus-2k2":
        return experiments.run_kn_minus_2k2(
            args.n_from, args.n_to, args.precision_bits, args.tol, args.seed
        )
    if args.command == "verify-coeffs":
        return experiments.run_verify_coeffs(args.n, args.random_count, args.seed)
    if args.command == "identify-h":
        return experiments.run_identify_h(args.corpus_size, args.seed)
    if args.command == "verify-quartic":
        return experiments.run_verify_quartic(args.p_max, args.q_max)
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK
    try:
        report = _run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001 - report and exit 2, per contract
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_ERROR
    fmt = args.format or ("csv" if args.command == "rootcloud" else "json")
    text = report.to_csv() if fmt == "csv" else report.to_json()
    if args.out is not None:
        args.out.write_text(text + ("\n" if not text.endswith("\n") else ""))
        print(f"wrote {args.out} ({report.experiment}, all_passed={report.all_passed})", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK if report.all_passed else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
