"""Command line interface.

Subcommands: ``analyze`` (report for one system or a group), ``verify``
(closed forms vs the brute-force solver), ``ci`` (index table for a scale),
``aggregate`` (geometric-mean group merge plus analysis) and ``serve``
(HTTP service). Exit codes: 0 success, 2 invalid input, 3 verification
mismatch. Input errors are written as single-line JSON to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import verify_against_oracle
from .consistency import ci_table
from .errors import BwmError
from .oracle import random_pcs
from .pcs import from_csv
from .scales import get_scale
from .wire import analyze_payload, error_payload, pcs_from_payload, report_json


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_payload(path: str | None, as_csv: bool):
    text = _read_text(path)
    if as_csv or (path is not None and path.lower().endswith(".csv")):
        return from_csv(text).to_dict()
    return json.loads(text)


def _cmd_analyze(args) -> int:
    payload = _load_payload(args.file, args.csv)
    report, body = analyze_payload(payload, legacy=args.legacy, round_digits=args.round)
    sys.stdout.write(body + "\n")
    if args.verify:
        outcome = verify_against_oracle(report.pcs, eps_tol=args.tol)
        if not outcome["ok"]:
            sys.stderr.write(json.dumps(outcome) + "\n")
            return 3
    return 0


def _cmd_aggregate(args) -> int:
    systems = []
    for path in args.files:
        payload = _load_payload(path, args.csv)
        systems.extend(payload if isinstance(payload, list) else [payload])
    merged = pcs_from_payload(systems) if len(systems) > 1 else pcs_from_payload(systems[0])
    report, body = analyze_payload(merged.to_dict(), legacy=args.legacy, round_digits=args.round)
    envelope = {"pcs": merged.to_dict(), "report": json.loads(body)}
    sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    return 0


def _cmd_ci(args) -> int:
    rows = ci_table(get_scale(args.scale))
    if args.json:
        sys.stdout.write(json.dumps({"scale": args.scale, "rows": [list(r) for r in rows]}) + "\n")
    else:
        for abw, ci in rows:
            sys.stdout.write(f"{abw:g}\t{ci:.4f}\n")
    return 0


def _cmd_verify(args) -> int:
    results = []
    if args.random:
        scale = get_scale(args.scale)
        for i in range(args.random):
            n = 2 + (i % 6)
            multi = n >= 3 and i % 3 == 2
            pcs = random_pcs(scale, n, multi_roles=multi, seed=args.seed * 1_000_003 + i)
            outcome = verify_against_oracle(pcs, eps_tol=args.tol, check_weights=not args.eps_only)
            outcome["seedIndex"] = i
            results.append(outcome)
    else:
        if args.file is None:
            raise BwmError("verify needs a PCS file or --random N")
        pcs = pcs_from_payload(_load_payload(args.file, args.csv))
        results.append(verify_against_oracle(pcs, eps_tol=args.tol, check_weights=not args.eps_only))

    mismatches = [r for r in results if not r["ok"]]
    summary = {
        "checked": len(results),
        "mismatched": len(mismatches),
        "epsilonTolerance": args.tol,
        "mismatches": mismatches,
    }
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return 3 if mismatches else 0


def _cmd_serve(args) -> int:
    from .server import AUTO_UI, run_server

    run_server(host=args.host, port=args.port, ui_dir=args.ui_dir or AUTO_UI)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlbwm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a comparison system (JSON or CSV)")
    p.add_argument("file", nargs="?", help="input path, or - for stdin (default)")
    p.add_argument("--csv", action="store_true", help="force CSV parsing")
    p.add_argument("--round", type=int, default=None, help="round output to N decimals")
    p.add_argument("--legacy", action="store_true", help="attach historical formula results")
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force solver")
    p.add_argument("--tol", type=float, default=1e-6, help="verification tolerance")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("aggregate", help="merge group judgments (geometric mean), then analyze")
    p.add_argument("files", nargs="+", help="PCS JSON files (or one file with a JSON list)")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--round", type=int, default=None)
    p.add_argument("--legacy", action="store_true")
    p.set_defaults(func=_cmd_aggregate)

    p = sub.add_parser("ci", help="print the consistency index table for a scale")
    p.add_argument("--scale", required=True, help="saaty | salo | lootsma | ddm7")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ci)

    p = sub.add_parser("verify", help="compare closed forms against the brute-force solver")
    p.add_argument("file", nargs="?", help="PCS file to verify")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--random", type=int, default=0, metavar="N", help="verify N seeded random systems")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", default="saaty")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--eps-only", action="store_true", help="skip interval-weight comparison")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="start the HTTP service (and UI, when built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--ui-dir", default=None, help="directory with the built UI bundle")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BwmError as exc:
        sys.stderr.write(json.dumps(error_payload(exc)) + "\n")
        return 2
    except (json.JSONDecodeError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(json.dumps(error_payload(exc)) + "\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
