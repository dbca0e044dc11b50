"""The on-disk point format and its content digest.

A point file is a header line ``beckline-points v1`` followed by one
point per line, ``x y color``, where each coordinate is an integer or an
``a/b`` rational with positive denominator and color is ``R`` or ``B``.
``#`` starts a comment (whole-line or trailing) and blank lines are
skipped.  Serialization writes red points first, then blue, each in
configuration order, so serialize-then-parse is the identity on configs.
"""

from __future__ import annotations

from fractions import Fraction
from hashlib import sha256

from .engine import ColoredConfig
from .errors import PointFileError
from .geometry import Color, ExactPoint

HEADER = "beckline-points v1"


def _format_coord(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_coord(token: str, where: str) -> Fraction:
    try:
        if "/" in token:
            num_s, den_s = token.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den <= 0:
                raise ValueError("denominator must be positive")
            return Fraction(num, den)
        return Fraction(int(token))
    except ValueError as exc:
        raise PointFileError(f"{where}: bad coordinate {token!r} ({exc})") from exc


def _point_line(p: ExactPoint) -> str:
    return f"{_format_coord(p.x)} {_format_coord(p.y)} {p.color.value}"


def parse_points(text: str) -> ColoredConfig:
    """Parse a point file; raises PointFileError on any syntax problem,
    a bad header, or duplicate points."""
    red: list[ExactPoint] = []
    blue: list[ExactPoint] = []
    seen: set[tuple[Fraction, Fraction]] = set()
    header_ok = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        if not header_ok:
            if line != HEADER:
                raise PointFileError(f"{where}: expected header {HEADER!r}, got {line!r}")
            header_ok = True
            continue
        parts = line.split()
        if len(parts) != 3:
            raise PointFileError(f"{where}: expected 'x y color', got {line!r}")
        x = _parse_coord(parts[0], where)
        y = _parse_coord(parts[1], where)
        if parts[2] not in ("R", "B"):
            raise PointFileError(f"{where}: color must be R or B, got {parts[2]!r}")
        if (x, y) in seen:
            raise PointFileError(f"{where}: duplicate point {parts[0]} {parts[1]}")
        seen.add((x, y))
        color = Color(parts[2])
        point = ExactPoint(x, y, color)
        (red if color is Color.RED else blue).append(point)
    if not header_ok:
        raise PointFileError(f"missing header {HEADER!r}")
    return ColoredConfig(tuple(red), tuple(blue))


def serialize_points(config: ColoredConfig) -> str:
    lines = [HEADER]
    lines.extend(_point_line(p) for p in config.points())
    return "\n".join(lines) + "\n"


def config_digest(config: ColoredConfig) -> str:
    """sha256 over the sorted point lines: depends on the point set and
    coloring only, not on input order."""
    lines = sorted(_point_line(p) for p in config.points())
    return sha256("\n".join(lines).encode()).hexdigest()
