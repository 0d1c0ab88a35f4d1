"""Command line interface.

Subcommands: pb (poly-Bernoulli tables), lehmer (polynomial pairs),
eval (series engine), quad (quadrature engine), verify (identity suites).
Machine-readable output goes to stdout (CSV for pb, JSON elsewhere);
progress lines go to stderr. Exit codes: 0 success, 1 failed verification
or domain/budget error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace

from .errors import LogsineError
from .exact import rational_str
from .lehmer import lehmer_pair
from .polybernoulli import PolyBernoulliTable
from .quadrature import QuadConfig, ecb_integral, sls_integral, zcb_integral
from .series import SeriesConfig, eta_cb_series, sls_continued, zeta_cb_series
from .verification import run_full_suite


class _UsageError(Exception):
    """Bad flag combination; maps to the argparse exit code."""


def _print_json(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _series_config(args) -> SeriesConfig:
    config = SeriesConfig.default()
    if getattr(args, "max_terms", None) is not None:
        config = replace(config, max_terms=args.max_terms)
    if getattr(args, "tol", None) is not None:
        config = replace(config, tail_tolerance=args.tol)
    if getattr(args, "z_cap", None) is not None:
        config = replace(config, z_cap=args.z_cap)
    return config


def _quad_config(args) -> QuadConfig:
    config = QuadConfig()
    if getattr(args, "levels", None) is not None:
        config = replace(config, levels=args.levels)
    if getattr(args, "abs_tol", None) is not None:
        config = replace(config, abs_tol=args.abs_tol)
    return config


def cmd_pb(args) -> int:
    table = PolyBernoulliTable.build(args.n_max, args.k_min, args.k_max)
    records = [
        {"n": n, "k": k, "value": rational_str(table.value(n, k))}
        for n in range(args.n_max + 1)
        for k in range(args.k_min, args.k_max + 1)
    ]
    if args.format == "json":
        _print_json(records)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "k", "value"])
        for rec in records:
            writer.writerow([rec["n"], rec["k"], rec["value"]])
    return 0


def cmd_lehmer(args) -> int:
    pairs = [
        {
            "n": n,
            "p": list(lehmer_pair(n).p.coeffs),
            "q": list(lehmer_pair(n).q.coeffs),
        }
        for n in range(-1, args.n_max + 1)
    ]
    _print_json({"op": "lehmer", "input": {"n_max": args.n_max}, "pairs": pairs})
    return 0


def cmd_eval(args) -> int:
    config = _series_config(args)
    s = complex(args.s_re, args.s_im)
    if args.what == "sls":
        if args.sigma is None:
            raise _UsageError("eval --what sls requires --sigma")
        value = sls_continued(s, args.sigma, config)
        inputs = {"s_re": args.s_re, "s_im": args.s_im, "sigma": args.sigma}
    else:
        if args.z is None:
            raise _UsageError(f"eval --what {args.what} requires --z")
        op = zeta_cb_series if args.what == "zcb" else eta_cb_series
        value = op(s, args.z, config)
        inputs = {"s_re": args.s_re, "s_im": args.s_im, "z": args.z}
    inputs.update(
        {
            "max_terms": config.max_terms,
            "tol": config.tail_tolerance,
            "z_cap": config.z_cap,
        }
    )
    _print_json(
        {
            "op": "eval",
            "what": args.what,
            "input": inputs,
            "value_re": value.re,
            "value_im": value.im,
            "abs_err": value.abs_err,
            "terms_used": value.terms,
        }
    )
    return 0


def cmd_quad(args) -> int:
    config = _quad_config(args)
    ops = {"sls": sls_integral, "zcb": zcb_integral, "ecb": ecb_integral}
    result = ops[args.what](args.s, args.sigma, config)
    _print_json(
        {
            "op": "quad",
            "what": args.what,
            "input": {
                "s": args.s,
                "sigma": args.sigma,
                "levels": config.levels,
                "abs_tol": config.abs_tol,
            },
            "value": result.value,
            "est_err": result.est_err,
            "evaluations": result.evaluations,
        }
    )
    return 0


def cmd_verify(args) -> int:
    suites = ("exact", "series", "quad") if args.suite == "all" else (args.suite,)

    def progress(report):
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {report.identity_id} (diff={report.abs_diff:.3e}, "
            f"{report.runtime_ms} ms)",
            file=sys.stderr,
        )

    reports = run_full_suite(
        suites=suites,
        n_max_exact=args.n_max,
        n_max_general=args.general_n_max,
        series_config=_series_config(args),
        quad_config=_quad_config(args),
        progress=progress,
    )
    doc = [r.to_dict() for r in reports]
    _print_json(doc)
    if args.json is not None:
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    failed = sum(1 for r in reports if not r.passed)
    print(f"{len(reports) - failed}/{len(reports)} identities passed", file=sys.stderr)
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logsine",
        description="Poly-Bernoulli numbers, central binomial series, and "
        "shifted log-sine integrals, with identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pb", help="tabulate poly-Bernoulli numbers")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--k-max", type=int, default=0)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_pb)

    p = sub.add_parser("lehmer", help="print Lehmer polynomial pairs")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_lehmer)

    p = sub.add_parser("eval", help="evaluate via the series engine")
    p.add_argument("--what", choices=["zcb", "ecb", "sls"], required=True)
    p.add_argument("--s-re", type=float, required=True)
    p.add_argument("--s-im", type=float, default=0.0)
    p.add_argument("--z", type=float, help="argument for zcb/ecb")
    p.add_argument("--sigma", type=float, help="angle for sls, in (0, pi)")
    p.add_argument("--max-terms", type=int)
    p.add_argument("--tol", type=float, help="tail tolerance for stopping")
    p.add_argument("--z-cap", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("quad", help="evaluate via the quadrature engine")
    p.add_argument("--what", choices=["sls", "zcb", "ecb"], required=True)
    p.add_argument("--s", type=float, required=True, help="real s > 1")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--levels", type=int)
    p.add_argument("--abs-tol", type=float)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument(
        "--suite", choices=["exact", "series", "quad", "all"], default="all"
    )
    p.add_argument("--n-max", type=int, default=30, help="exact-suite depth")
    p.add_argument("--general-n-max", type=int, default=8)
    p.add_argument("--max-terms", type=int)
    p.add_argument("--tol", type=float, help="tail tolerance for stopping")
    p.add_argument("--z-cap", type=float)
    p.add_argument("--levels", type=int)
    p.add_argument("--abs-tol", type=float)
    p.add_argument("--json", metavar="PATH", help="also write the report array here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except LogsineError as exc:
        _print_json({"op": args.command, "error": str(exc)})
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
