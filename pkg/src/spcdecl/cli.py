"""Command-line interface.

Exit codes: 0 success, 1 no usable result (e.g. every SPC case failed),
2 bad input or flags.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict
from typing import Optional, Sequence

from . import __version__
from .analysis import (
    Link,
    declination_sweep,
    fit_years,
    sensitivity_sweep,
    sweep_rows,
)
from .declination import UndefinedDeclination, declination_details, net_seats_by_year, round_half_away
from .ingest import load_coefficients, read_elections, report_json, rows_csv
from .model import ElectionError, seat_split
from .regress import SingleClass, DegenerateDesign
from .spc import Beneficiary, Method, SpcFailure, SpcRequest, Strategy, spc

PRESIDENTIAL_YEARS = frozenset(range(1972, 2100, 4))


class InputError(Exception):
    pass


def parse_years(text: Optional[str]) -> Optional[set[int]]:
    """'1972-2012' (even years), '2012,2014' or a mix of both."""
    if not text:
        return None
    years: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                lo, hi = (int(p) for p in part.split("-", 1))
                years.update(y for y in range(lo, hi + 1) if y % 2 == 0)
            else:
                years.add(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad year list {text!r}") from None
    return years


def _threshold(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 0.5:
        raise argparse.ArgumentTypeError("threshold must lie in (0, 0.5)")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="election CSV")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--years", type=parse_years, help="e.g. 1972-2012 or 2008,2012")
    common.add_argument("--presidential-years-only", action="store_true")
    common.add_argument("--contested-only", action="store_true",
                        help="drop imputed and uncontested districts")
    common.add_argument("--seed", type=int, default=0)

    spc_opts = argparse.ArgumentParser(add_help=False)
    spc_opts.add_argument("--threshold", type=_threshold, nargs="+", default=[0.45])
    spc_opts.add_argument("--strategy", choices=("even", "greedy"), nargs="+", default=["even"])
    spc_opts.add_argument("--variant", choices=("crack", "pack", "all"), default="all")
    spc_opts.add_argument("--beneficiary", choices=("rep", "dem", "all"), default="all")
    spc_opts.add_argument("--min-recipients", type=int, default=3)

    coef_opts = argparse.ArgumentParser(add_help=False)
    coef_opts.add_argument("--coefficients", help="coefficient CSV (default: bundled 1972-2012 coefficients)")

    parser = argparse.ArgumentParser(prog="spcdecl", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("declination", parents=[common], help="declination per state-year")
    sub.add_parser("net-seats", parents=[common], help="net seats per year")
    p = sub.add_parser("spc", parents=[common, spc_opts], help="one-shot SPC traces")
    p.add_argument("--state", help="restrict to one two-letter state code")
    p = sub.add_parser("sweep", parents=[common, spc_opts], help="S-declination change under SPC")
    p.add_argument("--metric", choices=("s-declination",), default="s-declination")
    p = sub.add_parser("sensitivity", parents=[common, spc_opts, coef_opts],
                       help="logistic-model seat change under SPC")
    p.add_argument("--link", choices=[l.value for l in Link], default="identity")
    sub.add_parser("fit", parents=[common, coef_opts], help="per-year link and logistic fits")
    return parser


def _config(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if isinstance(v, set):
            v = sorted(v)
        out[k] = v
    return out


def _load(args):
    try:
        records, manifest = read_elections(args.input, contested_only=args.contested_only)
    except FileNotFoundError:
        raise InputError(f"no such file: {args.input}") from None
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    except ElectionError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if args.years is not None:
        records = [r for r in records if r.year in args.years]
    if args.presidential_years_only:
        records = [r for r in records if r.year in PRESIDENTIAL_YEARS]
    if getattr(args, "state", None):
        records = [r for r in records if r.state == args.state.upper()]
    return records, manifest


def _coefficients(args):
    try:
        return load_coefficients(getattr(args, "coefficients", None))
    except FileNotFoundError:
        raise InputError(f"no such file: {args.coefficients}") from None
    except ElectionError as exc:
        raise InputError(str(exc)) from None


def _requests(args) -> list[SpcRequest]:
    bens = list(Beneficiary) if args.beneficiary == "all" else [Beneficiary(args.beneficiary)]
    methods = [Method.CRACK, Method.PACK] if args.variant == "all" else [Method(args.variant)]
    return [SpcRequest(b, m, t, Strategy(s), args.min_recipients)
            for t in args.threshold for s in args.strategy for b in bens for m in methods]


def cmd_declination(args):
    records, manifest = _load(args)
    rows, sweeps = [], 0
    for rec in records:
        d = rec.distribution()
        dem, rep = seat_split(d)
        row = {"state": rec.state, "year": rec.year, "n": rec.n, "dem_seats": dem,
               "rep_seats": rep, "delta": None, "s_declination": None, "seats": 0}
        try:
            res = declination_details(d)
        except UndefinedDeclination:
            sweeps += 1
        else:
            row.update(delta=res.delta, s_declination=res.s_declination,
                       seats=round_half_away(res.s_declination))
        rows.append(row)
    return rows, manifest, {"warnings": {"undefined_declination": sweeps}}, 0


def cmd_net_seats(args):
    records, manifest = _load(args)
    table = net_seats_by_year(records)
    rows = [{"year": y, "net_seats": v} for y, v in table.items()]
    return rows, manifest, {}, 0


def cmd_spc(args):
    records, manifest = _load(args)
    rows = []
    for rec in records:
        d = rec.distribution()
        for req in _requests(args):
            row = {"state": rec.state, "year": rec.year, "n": rec.n, "variant": req.variant,
                   "threshold": req.threshold, "strategy": req.strategy.value}
            try:
                out = spc(d, req)
            except SpcFailure as exc:
                row.update(status=exc.status, reason=str(exc))
            else:
                row.update(
                    status="OK", reason=None,
                    flipped_index=out.flipped_index, flipped_from=out.flipped_from,
                    regression_intercept=out.regression_line[0],
                    regression_slope=out.regression_line[1],
                    predicted=out.predicted, clamped=out.clamped, flipped_to=out.flipped_to,
                    displaced=out.displaced, iterations=out.iterations,
                    steps=[{"recipients": p, "amount": a, "clamped": c} for p, a, c in out.steps],
                    before=list(d.shares), after=list(out.unsorted),
                    after_sorted=list(out.result.shares),
                )
            rows.append(row)
    ok = any(r["status"] == "OK" for r in rows)
    return rows, manifest, {}, 0 if ok else 1


def _sweep_result(report, args, manifest):
    rows = sweep_rows(report, args.seed)
    code = 0 if report.count("OK") else 1
    return rows, manifest, {"summary": _json_summary(report)}, code


def _json_summary(report) -> dict:
    out = {}
    for direction, s in report.summary.items():
        out[direction] = {
            "count_ok": s.count_ok,
            "count_failed": s.count_failed,
            "mean": s.mean,
            "median": s.median,
            "central_95_range": list(s.central_95_range) if s.central_95_range else None,
            "ols_line": asdict(s.ols_line) if s.ols_line else None,
        }
    return out


def cmd_sweep(args):
    records, manifest = _load(args)
    report = declination_sweep(records, args.threshold, [Strategy(s) for s in args.strategy])
    return _sweep_result(report, args, manifest)


def cmd_sensitivity(args):
    records, manifest = _load(args)
    coeffs = _coefficients(args)
    report = sensitivity_sweep(records, coeffs, Link(args.link), args.threshold,
                               [Strategy(s) for s in args.strategy])
    return _sweep_result(report, args, manifest)


def cmd_fit(args):
    records, manifest = _load(args)
    reference = _coefficients(args)
    rows = []
    by_year = {}
    for rec in records:
        by_year.setdefault(rec.year, []).append(rec)
    for year in sorted(by_year):
        row = {"year": year}
        try:
            (link, logit), = fit_years(by_year[year]).values()
        except (SingleClass, DegenerateDesign) as exc:
            row.update(status=type(exc).__name__)
        else:
            row.update(status="OK", gamma0=link.intercept, gamma1=link.slope,
                       link_r_squared=link.r_squared, beta0=logit.beta0, beta1=logit.beta1,
                       converged=logit.converged, separable=logit.separable)
        ref = reference.get(year)
        row["reference"] = None if ref is None else {
            "gamma0": ref.gamma0, "gamma1": ref.gamma1, "beta0": ref.beta0, "beta1": ref.beta1}
        rows.append(row)
    ok = any(r["status"] == "OK" for r in rows)
    return rows, manifest, {}, 0 if ok else 1


COMMANDS = {
    "declination": cmd_declination,
    "net-seats": cmd_net_seats,
    "spc": cmd_spc,
    "sweep": cmd_sweep,
    "sensitivity": cmd_sensitivity,
    "fit": cmd_fit,
}


def _flatten(row: dict) -> dict:
    out = {}
    for k, v in row.items():
        if isinstance(v, dict):
            for k2, v2 in v.items():
                out[f"{k}_{k2}"] = v2
        elif isinstance(v, list):
            out[k] = " ".join(repr(x) if not isinstance(x, dict) else str(x) for x in v)
        else:
            out[k] = v
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows, manifest, extra, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"spcdecl: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = report_json(args.command, _config(args), manifest, rows, **extra)
    else:
        text = rows_csv([_flatten(r) for r in rows])
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fp:
                fp.write(text)
        except OSError as exc:
            print(f"spcdecl: error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
