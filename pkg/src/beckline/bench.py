"""Benchmark the compiled pair-grouping kernel against the pure-Python twin.

Run as ``python -m beckline.bench [--sizes 64,128,256] [--repeats 3]``.
Both paths are executed on identical seeded integer configurations; the
outputs are compared for exact equality before any timing is reported,
so a speedup never comes at the cost of a wrong grouping.
"""

from __future__ import annotations

import argparse
import random
import time

from . import engine
from .engine import ColoredConfig, _group_lines_fast, _group_lines_python


def _random_config(total: int, seed: int) -> ColoredConfig:
    rng = random.Random(seed)
    seen = set()
    pts = []
    while len(pts) < total:
        cand = (rng.randint(0, 10**6), rng.randint(0, 10**6))
        if cand not in seen:
            seen.add(cand)
            pts.append(cand)
    half = total // 2
    return ColoredConfig.from_coords(pts[:half], pts[half:])


def _time(fn, points, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(points)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="beckline.bench")
    parser.add_argument("--sizes", default="64,128,256,512")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]

    if not engine.HAVE_FASTPATH:
        print("compiled kernel unavailable; timing the pure path only")
    print(f"{'N':>6} {'pure [ms]':>12} {'fast [ms]':>12} {'speedup':>9}")
    for total in sizes:
        config = _random_config(total, args.seed)
        points = config.points()
        pure_rows = _group_lines_python(points)
        t_pure = _time(_group_lines_python, points, args.repeats)
        if engine.HAVE_FASTPATH:
            fast_rows = _group_lines_fast(points)
            if fast_rows != pure_rows:
                print(f"N={total}: OUTPUT MISMATCH between kernels")
                return 1
            t_fast = _time(_group_lines_fast, points, args.repeats)
            print(
                f"{total:>6} {t_pure * 1e3:>12.2f} {t_fast * 1e3:>12.2f} "
                f"{t_pure / t_fast:>8.1f}x"
            )
        else:
            print(f"{total:>6} {t_pure * 1e3:>12.2f} {'-':>12} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
