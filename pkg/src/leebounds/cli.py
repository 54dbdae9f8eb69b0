"""Command-line front end: ``leebounds {analyze,bounds,table,density}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .bounds import TABLE_PARAMETERS, all_bounds, filtration_profile, table_block
from .code import DEFAULT_CAP, EnumerationCapError, LinearCode, load_code
from .density import (
    census_column_optimal,
    census_ell_zero,
    census_full_row,
    census_optimal_codes,
    monte_carlo_probability,
)
from .weights import (
    SearchBudgetExceeded,
    column_hierarchy,
    column_lee_weight_code,
    filtration_hierarchy,
    join_hierarchy,
    min_hamming_distance,
    min_lee_distance,
    wt_join,
    wt_meet,
)

PROG = "leebounds"
DEFAULT_BUDGET = 2 * 10**6


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _field(fn: Callable, *args, **kwargs):
    """Evaluate one report field, turning cap and budget overruns into an error entry."""
    try:
        value = fn(*args, **kwargs)
    except (EnumerationCapError, SearchBudgetExceeded) as exc:
        return {"error": str(exc)}
    return [int(v) for v in value] if isinstance(value, (list, tuple)) else int(value)


def analyze_report(code: LinearCode, *, cap: int = DEFAULT_CAP,
                   budget: int = DEFAULT_BUDGET) -> dict:
    """JSON-ready description of a code together with its weights and filtration profile."""
    profile = filtration_profile(code)
    return {
        "modulus": {"p": code.p, "s": code.s, "q": code.q},
        "n": code.n,
        "subtype": list(code.subtype),
        "K": code.K,
        "k": _frac(code.k),
        "size": code.size,
        "support_subtype": list(code.support_subtype),
        "tail_support_subtype": list(code.tail_support_subtype),
        "d_L": _field(min_lee_distance, code, cap),
        "d_H": _field(min_hamming_distance, code, cap),
        "wt_join": wt_join(code),
        "wt_meet": wt_meet(code),
        "wt_col": _field(column_lee_weight_code, code, budget=budget, cap=cap),
        "hierarchies": {
            "join": join_hierarchy(code),
            "column": _field(column_hierarchy, code, budget=budget, cap=cap),
            "filtration": _field(filtration_hierarchy, code, cap),
        },
        "filtration_profile": profile.as_dict(),
    }


def bounds_rows(code: LinearCode, *, cap: int = DEFAULT_CAP,
                budget: int = DEFAULT_BUDGET) -> list[dict]:
    reports = all_bounds(code, cap=cap, budget=budget)
    d = next((r.value for r in reports if r.name == "d_L" and r.applicable), None)
    d_h = next((r.value for r in reports if r.name == "d_H" and r.applicable), None)
    rows = []
    for r in reports:
        target = d if r.metric == "lee" else d_h
        attained = None
        if r.kind == "bound" and r.applicable and target is not None:
            attained = r.value == target
        rows.append({"name": r.name, "value": r.value, "applicable": r.applicable,
                     "attained": attained, "metric": r.metric, "kind": r.kind,
                     "reason": r.reason})
    return rows


def table_rows(params: Sequence[tuple[int, int, int, int]]) -> list[dict]:
    """Flatten the comparison table into one row per cell."""
    rows = []
    for n, K, q, sigma in params:
        block = table_block(n, K, q, sigma)
        key = {"n": n, "K": K, "q": q, "sigma": sigma}
        for t, v in block.alderson:
            rows.append({**key, "bound": "alderson", "cell": "".join(map(str, t)),
                         "value": "Not existing" if v is None else v})
        for t, v in block.shiromoto:
            rows.append({**key, "bound": "shiromoto", "cell": "".join(map(str, t)), "value": v})
        rows.append({**key, "bound": "shiromoto_min", "cell": "", "value": block.shiromoto_min})
        rows.append({**key, "bound": "join", "cell": "", "value": block.join})
        for ell, nprime, v in block.filtration:
            rows.append({**key, "bound": "filtration", "cell": f"({ell},{nprime})", "value": v})
    return rows


# rendering ------------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if not rows:
        return ""
    header = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row.get(h)) for h in header])
        return buf.getvalue().rstrip("\r\n")
    cells = [[_cell(row.get(h)) for h in header] for row in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _flatten(prefix: str, obj, out: list[tuple[str, object]]) -> None:
    if isinstance(obj, dict) and "error" not in obj:
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    else:
        out.append((prefix, obj))


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    pairs: list[tuple[str, object]] = []
    _flatten("", report, pairs)
    rows = [{"field": k, "value": _cell(v)} for k, v in pairs]
    return render_table(rows, fmt)


# commands -------------------------------------------------------------------


def _load(path: str) -> LinearCode:
    return load_code(path)


def cmd_analyze(args) -> str:
    code = _load(args.path)
    return render_report(analyze_report(code, cap=args.cap, budget=args.budget), args.format)


def cmd_bounds(args) -> str:
    code = _load(args.path)
    return render_table(bounds_rows(code, cap=args.cap, budget=args.budget), args.format)


def cmd_table(args) -> str:
    params = args.params or list(TABLE_PARAMETERS)
    return render_table(table_rows(params), args.format)


def cmd_density(args) -> str:
    exp = args.experiment
    if exp == "census":
        if args.bound is None or args.subtype is None:
            raise ValueError("census needs --bound and --subtype")
        res = census_optimal_codes(args.p, args.s, args.n, args.subtype, args.bound, cap=args.cap)
        row = res.as_dict()
        if args.format != "json":
            row.pop("class_representatives")
        return render_table([row], args.format)
    if exp == "attain" and (args.subtype is None or args.bound is None):
        raise ValueError("attain needs --bound and --subtype")
    K = args.K if args.K is not None else (sum(args.subtype) if args.subtype else None)
    if K is None:
        raise ValueError(f"{exp} needs --K")
    res = monte_carlo_probability(
        exp, p=args.p, s=args.s, K=K, n=args.n, trials=args.trials, seed=args.seed,
        ell_tilde=args.ell_tilde, mu=args.mu, subtype=args.subtype, bound_name=args.bound)
    row = res.as_dict()
    if args.census:
        census = {"ell-zero": lambda: census_ell_zero(args.p, args.s, K, args.n, cap=args.cap),
                  "full-row": lambda: census_full_row(args.p, args.s, K, args.n, args.ell_tilde,
                                                      cap=args.cap),
                  "column-optimal": lambda: census_column_optimal(args.p, args.s, K, args.n,
                                                                  args.mu)}
        if exp not in census:
            raise ValueError(f"no exhaustive census for {exp}")
        row["census"] = _frac(census[exp]())
    return render_table([row], args.format)


# argument parsing -----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _table_param(text: str) -> tuple[int, int, int, int]:
    vals = _int_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError(f"expected n,K,q,sigma, got {text!r}")
    return tuple(vals)  # type: ignore[return-value]


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _seed(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}")
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                        help="largest code size enumerated by the distance oracles")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--trials", type=_positive, default=10000)
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="node budget of the column-weight search")

    parser = argparse.ArgumentParser(
        prog=PROG, description="Upper bounds on the minimum Lee distance of codes over Z/p^sZ.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="code parameters with exact distances and hierarchies")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", parents=[common], help="every bound next to the exact d_L")
    p.add_argument("path")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", parents=[common], help="comparison table of parameter-level bounds")
    p.add_argument("--params", type=_table_param, nargs="+", metavar="n,K,q,sigma")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("density", parents=[common], help="Monte Carlo estimates and censuses")
    p.add_argument("experiment",
                   choices=("ell-zero", "full-row", "column-optimal", "free", "attain", "census"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=int)
    p.add_argument("--ell-tilde", type=int)
    p.add_argument("--mu", type=_int_list)
    p.add_argument("--subtype", type=_int_list)
    p.add_argument("--bound")
    p.add_argument("--census", action="store_true",
                   help="also report the exhaustive census fraction")
    p.set_defaults(func=cmd_density)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        print(f"{PROG}: error: {msg}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
