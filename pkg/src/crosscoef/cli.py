"""Command-line front end: build, verify and export coefficient tables.

Exit status is 0 on success, 1 when a verification exceeds its tolerance,
and 2 for invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .cases import CASES, DEFAULT_TOL, build_case, build_gtable
from .families import CLOSED_TABLES
from .recurrence import FamilySpec

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


def _positive(kind):
    def parse(text):
        value = kind(text)
        if not value > 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value
    return parse


def _common(p: argparse.ArgumentParser, *, case: bool = True) -> None:
    if case:
        p.add_argument("--case", required=True, choices=CASES)
        p.add_argument("--alpha", type=float, default=1.0)
        p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--n", type=_positive(int), required=True, help="largest index N")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    p.add_argument("--header", action="store_true", help="CSV: prepend column indices")
    p.add_argument("--tol", type=_positive(float), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crosscoef", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fill", help="fill a table from its boundary row")
    _common(p)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("closed", help="evaluate a closed-form table")
    _common(p)

    p = sub.add_parser("verify", help="fill, closed form and oracle; report deviations")
    _common(p)

    p = sub.add_parser("gtable", help="associated Legendre product integrals")
    p.add_argument("--m", type=int, required=True, help="order m")
    _common(p, case=False)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("coeffs", help="recurrence coefficients of a family")
    p.add_argument("--family", required=True, choices=("legendre", "laguerre", "ultraspherical"))
    p.add_argument("--param", type=float, default=0.0)
    _common(p, case=False)
    return parser


def _check_params(args) -> None:
    case = args.case
    if case == "laguerre-connect" and not (args.alpha > -1 and args.beta > -1):
        raise ConfigError("laguerre-connect needs alpha, beta > -1")
    if case in ("laguerre-signed", "ultraspherical-F") and not args.alpha > 0:
        raise ConfigError(f"{case} needs alpha > 0")


def _render(entries, args, payload: dict) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    entries = np.asarray(entries)
    if args.header:
        writer.writerow([""] + [str(j) for j in range(entries.shape[1])])
    for i, row in enumerate(entries):
        cells = [f"{v:.17g}" for v in row]
        writer.writerow(([str(i)] if args.header else []) + cells)
    return buf.getvalue()


def _emit(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _payload(case, params, entries, report=None, **extra) -> dict:
    entries = np.asarray(entries)
    out = {
        "case": case,
        "params": params,
        "m_max": entries.shape[0] - 1,
        "n_max": entries.shape[1] - 1,
        "entries": entries.tolist(),
    }
    out.update(extra)
    if report is not None:
        out["report"] = report
    return out


def _report_text(report: dict, tol: float) -> str:
    lines = [f"{k}: {v:.3e}" for k, v in report.items()]
    ok = all(v <= tol for v in report.values())
    lines.append(f"{'PASS' if ok else 'FAIL'} (tol {tol:.1e})")
    return "\n".join(lines) + "\n"


def run(args) -> int:
    cmd = args.command
    if cmd == "coeffs":
        fam = FamilySpec(args.family, args.param)
        a, b = fam.coefficients().arrays(args.n + 1)
        entries = np.column_stack([np.arange(args.n + 1), a, b])
        payload = _payload(f"coeffs-{args.family}", {"param": args.param}, entries)
        _emit(_render(entries, args, payload), args.output)
        return EXIT_OK

    if cmd == "gtable":
        if not 0 <= args.m <= args.n:
            raise ConfigError("gtable needs 0 <= m <= n")
        g, report = build_gtable(args.m, args.n)
        tol = args.tol or DEFAULT_TOL["gtable"]
        payload = _payload("gtable", {"m": args.m, "first_degree": args.m}, g,
                           report if args.verify else None)
        payload["m_max"] = payload["n_max"] = args.n
        _emit(_render(g, args, payload), args.output)
        if args.verify:
            ok = all(v <= tol for v in report.values())
            if args.format == "csv" or args.output != "-":
                sys.stderr.write(_report_text(report, tol))
            return EXIT_OK if ok else EXIT_VERIFY
        return EXIT_OK

    _check_params(args)
    if cmd == "closed":
        size = args.n + 1
        if args.case == "identity":
            entries = np.eye(size)
        else:
            entries = CLOSED_TABLES[args.case].table(size, size, **_params(args))
        _emit(_render(entries, args, _payload(args.case, _params(args), entries)), args.output)
        return EXIT_OK

    result = build_case(args.case, args.n, alpha=args.alpha, beta=args.beta)
    tol = args.tol or DEFAULT_TOL[args.case]
    want_report = cmd == "verify" or args.verify
    report = result.report() if want_report else None
    payload = _payload(args.case, _params(args), result.filled, report)
    _emit(_render(result.filled, args, payload), args.output)
    if not want_report:
        return EXIT_OK
    if args.format == "csv" or args.output != "-":
        sys.stderr.write(_report_text(report, tol))
    return EXIT_OK if result.passed(tol) else EXIT_VERIFY


def _params(args) -> dict:
    if args.case == "laguerre-connect":
        return {"alpha": args.alpha, "beta": args.beta}
    if args.case in ("laguerre-signed", "ultraspherical-F"):
        return {"alpha": args.alpha}
    return {}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on malformed flags
    try:
        return run(args)
    except (ConfigError, ValueError) as exc:
        sys.stderr.write(f"crosscoef: error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
