"""Independent brute-force oracles used to derive and check expected values.

Everything here is deliberately naive: candidate lines are tested against
every point in O(N^3), colorings are enumerated exhaustively, and no code
is shared with the grouping pass under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import inf

from beckline.engine import ColoredConfig
from beckline.geometry import CanonicalLine, Color, ExactPoint, incident, line_through


def naive_line_records(config: ColoredConfig) -> list[tuple[int, int, int, int, int]]:
    """Each induced line as (a, b, c, red_count, blue_count), sorted.

    For every one of the C(N, 2) point pairs, build the candidate line and
    test all N points against it.
    """
    points = config.points()
    out = {}
    for p, q in combinations(points, 2):
        key = line_through(p, q)
        if key.as_tuple() in out:
            continue
        red = sum(1 for s in points if incident(key, s) and s.color is Color.RED)
        blue = sum(1 for s in points if incident(key, s) and s.color is Color.BLUE)
        out[key.as_tuple()] = (key.a, key.b, key.c, red, blue)
    return [out[k] for k in sorted(out)]


def naive_members(config: ColoredConfig) -> dict[tuple[int, int, int], list[int]]:
    """Line triple -> indices (into config.points()) of its member points."""
    points = config.points()
    members: dict[tuple[int, int, int], list[int]] = {}
    for i, j in combinations(range(len(points)), 2):
        key = line_through(points[i], points[j]).as_tuple()
        if key in members:
            continue
        line = CanonicalLine(*key)
        members[key] = [k for k, s in enumerate(points) if incident(line, s)]
    return members


def naive_max_richness(config: ColoredConfig) -> int:
    return max(red + blue for _, _, _, red, blue in naive_line_records(config))


def naive_cross_line_count(config: ColoredConfig, ell: CanonicalLine, x_size: int) -> int:
    """Distinct bichromatic lines meeting both X and ell, by full enumeration.

    X is the first x_size points not on ell, in canonical input order.
    """
    points = config.points()
    on_ell = {p for p in points if incident(ell, p)}
    x_set = set()
    for p in points:
        if p not in on_ell and len(x_set) < x_size:
            x_set.add(p)
    count = 0
    for key, idxs in naive_members(config).items():
        member_pts = [points[i] for i in idxs]
        reds = sum(1 for p in member_pts if p.color is Color.RED)
        blues = len(member_pts) - reds
        if reds == 0 or blues == 0:
            continue
        if any(p in x_set for p in member_pts) and any(p in on_ell for p in member_pts):
            count += 1
    return count


def exhaustive_color_minimum(points: list[ExactPoint]) -> tuple[Fraction | float, ColoredConfig]:
    """Minimum bichromatic ratio |B| / (n(2n-r)) over all balanced colorings.

    Enumerates every way to pick n of the 2n points as red.  The geometry
    (line member sets, max richness r) is computed once by brute force;
    per coloring only |B| changes.  Ties break toward the
    lexicographically first red index set.  The ratio is inf when r = 2n.
    """
    points = [
        p if isinstance(p, ExactPoint) else ExactPoint(p[0], p[1], Color.RED)
        for p in points
    ]
    total = len(points)
    if total % 2 != 0:
        raise ValueError("need an even number of points")
    n = total // 2
    member_masks = []
    bare = ColoredConfig(tuple(points[:1]), tuple(points[1:]))  # colors irrelevant
    for idxs in naive_members(bare).values():
        mask = 0
        for i in idxs:
            mask |= 1 << i
        member_masks.append(mask)
    r = max(mask.bit_count() for mask in member_masks)
    full = (1 << total) - 1
    if r == total:
        red_idx = tuple(range(n))
        cfg = ColoredConfig(
            tuple(points[i] for i in red_idx),
            tuple(points[i] for i in range(total) if i not in red_idx),
        )
        return inf, cfg

    best_ratio: Fraction | None = None
    best_red: tuple[int, ...] | None = None
    for red_idx in combinations(range(total), n):
        red_mask = 0
        for i in red_idx:
            red_mask |= 1 << i
        blue_mask = full ^ red_mask
        num_b = sum(1 for m in member_masks if (m & red_mask) and (m & blue_mask))
        ratio = Fraction(num_b, n * (2 * n - r))
        if best_ratio is None or ratio < best_ratio:
            best_ratio = ratio
            best_red = red_idx
    assert best_ratio is not None and best_red is not None
    red_set = set(best_red)
    cfg = ColoredConfig(
        tuple(points[i] for i in sorted(red_set)),
        tuple(points[i] for i in range(total) if i not in red_set),
    )
    return best_ratio, cfg
