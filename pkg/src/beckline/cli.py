"""Command-line interface.

Subcommands: generate, analyze, st-check, search, suite.  Exit codes:
0 success, 2 invalid arguments or malformed/invalid input, 3 sampling
exhaustion, 4 unequal color counts where balance is required.  All
artifacts are byte-deterministic functions of the flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import DEFAULT_K1, DEFAULT_K2, beck_ratio, st_bound_ratio
from .engine import induced_lines, k_rich_count
from .errors import (
    BecklineError,
    SamplingExhaustedError,
    UnequalColorCountsError,
)
from .generators import (
    DEFAULT_COORD_BOUND,
    Family,
    GenSpec,
    enumerate_suite,
    generate,
)
from .pointfile import config_digest, parse_points, serialize_points
from .report import format_rational, render_json, report_doc
from .search import Move, SearchSpec, default_schedule, search

_FAMILY_CHOICES = [f.value for f in Family]
_MOVE_CHOICES = [m.value for m in Move]


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _int_list_arg(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _read_config(path: str):
    return parse_points(Path(path).read_text(encoding="utf-8"))


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _build_genspec(args, seed: int) -> GenSpec:
    params = {}
    if args.cross_count is not None:
        params["cross_count"] = args.cross_count
    return GenSpec(
        family=Family(args.family),
        n=args.n,
        seed=seed,
        coord_bound=args.coord_bound,
        family_params=params,
    )


def _cmd_generate(args) -> int:
    config = generate(_build_genspec(args, args.seed))
    _write_text(args.out, serialize_points(config))
    print(f"wrote {args.out}: {config.total} points")
    return 0


def _cmd_analyze(args) -> int:
    config = _read_config(args.infile)
    doc = report_doc(config, args.k1, args.k2)
    text = render_json(doc)
    if args.out:
        _write_text(args.out, text)
        print(f"wrote {args.out}: verdict {doc['verdict']['case']}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_st_check(args) -> int:
    config = _read_config(args.infile)
    induced_lines(config)  # surfaces too-few-points before any output
    big_n = config.total
    rows = []
    print(f"{'k':>6} {'count':>8} {'bound':>14} {'ratio':>12}")
    for k in args.k:
        if k < 2:
            raise BecklineError(f"k must be >= 2, got {k}")
        count = k_rich_count(config, k)
        bound = Fraction(big_n * big_n, k**3) + Fraction(big_n, k)
        ratio = st_bound_ratio(config, k)
        rows.append(
            {
                "k": k,
                "count": count,
                "bound": format_rational(bound),
                "ratio": format_rational(ratio),
            }
        )
        print(f"{k:>6} {count:>8} {format_rational(bound):>14} {format_rational(ratio):>12}")
    if args.out:
        doc = {"version": 1, "config_digest": config_digest(config), "rows": rows}
        _write_text(args.out, json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_search(args) -> int:
    if (args.infile is None) == (args.family is None):
        raise BecklineError("need exactly one of --in or --family")
    if args.infile is not None:
        base = _read_config(args.infile)
    else:
        base = generate(_build_genspec(args, args.config_seed))
    moves = frozenset(Move(m) for m in args.moves.split(","))
    schedule = ()
    if args.initial_temperature is not None:
        schedule = tuple(
            args.initial_temperature * Fraction(9, 10) ** i
            for i in range(min(args.iterations, 64))
        )
    spec = SearchSpec(
        base=base,
        moves=moves,
        iterations=args.iterations,
        restarts=args.restarts,
        seed=args.seed,
        temperature_schedule=schedule,
        nudge_radius=args.nudge_radius,
    )
    result = search(spec)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    best_text = serialize_points(result.best_config)
    (out_dir / "best.pts").write_text(best_text, encoding="utf-8")
    doc = {
        "version": 1,
        "config_digest": config_digest(result.best_config),
        "best_ratio": format_rational(result.best_ratio),
        "restart_index": result.restart_index,
        "iterations": args.iterations,
        "restarts": args.restarts,
        "seed": args.seed,
        "moves": sorted(m.value for m in moves),
        "trajectory": [
            [step, format_rational(ratio)] for step, ratio in result.trajectory
        ],
    }
    (out_dir / "search_report.json").write_text(
        json.dumps(doc, indent=2) + "\n", encoding="utf-8"
    )
    print(f"best ratio {doc['best_ratio']} (restart {result.restart_index})")
    return 0


def _cmd_suite(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = enumerate_suite(args.n_list, args.seeds, coord_bound=args.coord_bound)
    summary_rows = []
    family_min: dict[str, object] = {}
    for index, (spec, config) in enumerate(entries):
        stem = f"{spec.family.value}-n{spec.n}-s{index % args.seeds}"
        _write_text(str(out_dir / f"{stem}.pts"), serialize_points(config))
        doc = report_doc(config, args.k1, args.k2, seed=spec.seed)
        _write_text(str(out_dir / f"{stem}.json"), render_json(doc))
        ratio = beck_ratio(config)
        prev = family_min.get(spec.family.value)
        if prev is None or ratio < prev:
            family_min[spec.family.value] = ratio
        summary_rows.append((spec, doc, ratio))
    with (out_dir / "summary.csv").open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["family", "n", "seed", "r", "num_bichromatic", "beck_ratio", "family_min_beck_ratio"]
        )
        for spec, doc, ratio in summary_rows:
            writer.writerow(
                [
                    spec.family.value,
                    spec.n,
                    spec.seed,
                    doc["r"],
                    doc["num_bichromatic"],
                    format_rational(ratio),
                    format_rational(family_min[spec.family.value]),
                ]
            )
    print(f"wrote {len(entries)} reports and summary.csv to {out_dir}")
    return 0


def _add_generation_flags(sub, require_family: bool):
    sub.add_argument("--family", choices=_FAMILY_CHOICES, required=require_family)
    sub.add_argument("--n", type=int, required=require_family)
    sub.add_argument("--coord-bound", dest="coord_bound", type=int, default=DEFAULT_COORD_BOUND)
    sub.add_argument("--cross-count", dest="cross_count", type=_fraction_arg, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beckline",
        description="exact incidence analysis of red/blue point configurations",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("generate", help="write a seeded configuration to a point file")
    _add_generation_flags(gen, require_family=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_generate)

    ana = subs.add_parser("analyze", help="full report for a point file")
    ana.add_argument("--in", dest="infile", required=True)
    ana.add_argument("--k1", type=_fraction_arg, default=DEFAULT_K1)
    ana.add_argument("--k2", type=_fraction_arg, default=DEFAULT_K2)
    ana.add_argument("--out", default=None)
    ana.set_defaults(func=_cmd_analyze)

    st = subs.add_parser("st-check", help="k-rich line counts against the incidence bound")
    st.add_argument("--in", dest="infile", required=True)
    st.add_argument("--k", type=_int_list_arg, required=True, help="comma-separated k values")
    st.add_argument("--out", default=None, help="optional JSON output path")
    st.set_defaults(func=_cmd_st_check)

    sea = subs.add_parser("search", help="anneal toward a small bichromatic ratio")
    sea.add_argument("--in", dest="infile", default=None)
    _add_generation_flags(sea, require_family=False)
    sea.add_argument("--config-seed", dest="config_seed", type=int, default=0)
    sea.add_argument("--moves", default="color-swap", help="comma-separated: color-swap,point-nudge")
    sea.add_argument("--iterations", type=int, default=1000)
    sea.add_argument("--restarts", type=int, default=2)
    sea.add_argument("--seed", type=int, required=True)
    sea.add_argument("--nudge-radius", dest="nudge_radius", type=int, default=1)
    sea.add_argument(
        "--initial-temperature",
        dest="initial_temperature",
        type=_fraction_arg,
        default=None,
    )
    sea.add_argument("--out-dir", dest="out_dir", required=True)
    sea.set_defaults(func=_cmd_search)

    sui = subs.add_parser("suite", help="generate, analyze and summarize a family suite")
    sui.add_argument("--n-list", dest="n_list", type=_int_list_arg, required=True)
    sui.add_argument("--seeds", type=int, required=True)
    sui.add_argument("--k1", type=_fraction_arg, default=DEFAULT_K1)
    sui.add_argument("--k2", type=_fraction_arg, default=DEFAULT_K2)
    sui.add_argument("--coord-bound", dest="coord_bound", type=int, default=DEFAULT_COORD_BOUND)
    sui.add_argument("--out-dir", dest="out_dir", required=True)
    sui.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SamplingExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnequalColorCountsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (BecklineError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
