"""Induced and bichromatic line sets, richness, and richness spectra.

The core pass enumerates all C(N, 2) point pairs and groups them by
canonical line, gathering the distinct member points of each line along
the way; per-line richness and per-color counts fall out of the same
pass.  This is the performance-critical path of the package.  Two
interchangeable implementations exist:

* a compiled kernel (``beckline._fastpath``, Cython) used whenever every
  coordinate is an integer with absolute value <= 10**9, and
* a pure-Python grouping over exact rationals that handles everything.

Both produce identical output; selection is automatic and can be
disabled by setting the environment variable ``BECKLINE_FASTPATH=0``
before import.  ``python -m beckline.bench`` compares the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .errors import DuplicatePointsError, TooFewPointsError
from .geometry import CanonicalLine, Color, ExactPoint, line_through

try:
    from . import _fastpath
except ImportError:  # pragma: no cover - extension not built
    _fastpath = None

HAVE_FASTPATH = _fastpath is not None
FASTPATH_COORD_LIMIT = 10**9

_FASTPATH_ENABLED = os.environ.get("BECKLINE_FASTPATH", "") != "0"


@dataclass(frozen=True)
class ColoredConfig:
    """Disjoint red and blue point lists with all points pairwise distinct.

    The engine accepts unequal color classes; only the analysis
    operations that need n points per color enforce |red| = |blue|.
    ``points()`` returns red points then blue points, each in input
    order; this is the canonical input order used wherever a
    deterministic point ordering is needed.
    """

    red: tuple[ExactPoint, ...]
    blue: tuple[ExactPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "red", tuple(p.with_color(Color.RED) for p in self.red)
        )
        object.__setattr__(
            self, "blue", tuple(p.with_color(Color.BLUE) for p in self.blue)
        )
        seen: set[ExactPoint] = set()
        for p in self.red + self.blue:
            if p in seen:
                raise DuplicatePointsError(f"duplicate point {p!r}")
            seen.add(p)

    @classmethod
    def from_coords(
        cls,
        red: Iterable[tuple[int, int] | tuple],
        blue: Iterable[tuple[int, int] | tuple],
    ) -> "ColoredConfig":
        return cls(
            tuple(ExactPoint(x, y) for x, y in red),
            tuple(ExactPoint(x, y) for x, y in blue),
        )

    def points(self) -> tuple[ExactPoint, ...]:
        return self.red + self.blue

    @property
    def n_red(self) -> int:
        return len(self.red)

    @property
    def n_blue(self) -> int:
        return len(self.blue)

    @property
    def total(self) -> int:
        return len(self.red) + len(self.blue)

    def swapped(self) -> "ColoredConfig":
        """The same point set with the two color classes exchanged."""
        return ColoredConfig(self.blue, self.red)


@dataclass(frozen=True, order=True)
class LineRecord:
    """One induced line with its exact richness and per-color counts."""

    line: CanonicalLine
    richness: int
    red_count: int
    blue_count: int

    @property
    def is_bichromatic(self) -> bool:
        return self.red_count >= 1 and self.blue_count >= 1


@dataclass(frozen=True)
class RichnessSpectrum:
    """Map from richness k to the number of lines with exactly that richness."""

    counts: dict[int, int] = field(default_factory=dict)

    def total_lines(self) -> int:
        return sum(self.counts.values())

    def pair_mass(self) -> int:
        """Sum of C(k, 2) over all lines; equals C(N, 2) for N input points."""
        return sum(n * comb(k, 2) for k, n in self.counts.items())


def _group_lines_python(points: Sequence[ExactPoint]) -> list[tuple[int, int, int, int, int]]:
    """Pure-Python twin of the compiled kernel: exact rationals, dict grouping."""
    members: dict[CanonicalLine, set[int]] = {}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            key = line_through(points[i], points[j])
            group = members.get(key)
            if group is None:
                members[key] = {i, j}
            else:
                group.add(i)
                group.add(j)
    out = []
    for key in sorted(members):
        red = sum(1 for i in members[key] if points[i].color is Color.RED)
        blue = len(members[key]) - red
        out.append((key.a, key.b, key.c, red, blue))
    return out


def _fastpath_eligible(points: Sequence[ExactPoint]) -> bool:
    if not (HAVE_FASTPATH and _FASTPATH_ENABLED):
        return False
    return all(
        p.is_integral()
        and abs(p.x.numerator) <= FASTPATH_COORD_LIMIT
        and abs(p.y.numerator) <= FASTPATH_COORD_LIMIT
        for p in points
    )

def _group_lines_fast(points: Sequence[ExactPoint]) -> list[tuple[int, int, int, int, int]]:
    xs = [int(p.x) for p in points]
    ys = [int(p.y) for p in points]
    colors = [0 if p.color is Color.RED else 1 for p in points]
    return _fastpath.group_lines(xs, ys, colors)


def _line_records(config: ColoredConfig) -> list[LineRecord]:
    points = config.points()
    if len(points) < 2:
        raise TooFewPointsError(f"need at least 2 points, got {len(points)}")
    if _fastpath_eligible(points):
        rows = _group_lines_fast(points)
    else:
        rows = _group_lines_python(points)
    return [
        LineRecord(CanonicalLine(a, b, c), red + blue, red, blue)
        for a, b, c, red, blue in rows
    ]


def induced_lines(config: ColoredConfig) -> list[LineRecord]:
    """All distinct lines through at least two input points, sorted by
    canonical triple, with exact richness and per-color counts."""
    return _line_records(config)


def bichromatic_lines(config: ColoredConfig) -> list[LineRecord]:
    """The induced lines incident on at least one point of each color."""
    return [rec for rec in _line_records(config) if rec.is_bichromatic]


def max_richness(config: ColoredConfig) -> int:
    """The maximum number of input points on any single induced line."""
    return max(rec.richness for rec in _line_records(config))


def k_rich_count(config: ColoredConfig, k: int) -> int:
    """How many induced lines are incident on at least k points."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return sum(1 for rec in _line_records(config) if rec.richness >= k)


def richness_spectrum(config: ColoredConfig) -> RichnessSpectrum:
    """Aggregate the induced lines into a richness -> line count table."""
    counts: dict[int, int] = {}
    for rec in _line_records(config):
        counts[rec.richness] = counts.get(rec.richness, 0) + 1
    return RichnessSpectrum(dict(sorted(counts.items())))


def points_on_line(config: ColoredConfig, line: CanonicalLine) -> list[ExactPoint]:
    """The input points incident on the given line, in canonical input order."""
    from .geometry import incident

    return [p for p in config.points() if incident(line, p)]
