"""Exact rational plane primitives.

Everything downstream (line counting, richness classes, ratio checks)
rests on the two predicates here being exact: points carry
arbitrary-precision rational coordinates and all comparisons are against
zero in rational arithmetic, so collinearity is decidable with no
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import IdenticalPointsError

Rational = Union[int, Fraction]


class Color(Enum):
    RED = "R"
    BLUE = "B"


def _as_fraction(value: Rational, what: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        # Floats are rejected on purpose: Fraction(0.1) would silently
        # import binary rounding error into the exact pipeline.
        raise TypeError(f"{what} must be an int or Fraction, got {type(value).__name__}")
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class ExactPoint:
    """A plane point with exact rational coordinates and an optional color.

    Equality and hashing use the coordinates only; the color is a label,
    not part of the geometric identity.
    """

    x: Fraction
    y: Fraction
    color: Color | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _as_fraction(self.x, "x"))
        object.__setattr__(self, "y", _as_fraction(self.y, "y"))
        if self.color is not None and not isinstance(self.color, Color):
            raise TypeError(f"color must be a Color or None, got {self.color!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactPoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def with_color(self, color: Color | None) -> "ExactPoint":
        return ExactPoint(self.x, self.y, color)

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        tag = f", {self.color.value}" if self.color else ""
        return f"ExactPoint({self.x}, {self.y}{tag})"


@dataclass(frozen=True, order=True)
class CanonicalLine:
    """The line a*x + b*y + c = 0 as a normalized integer triple.

    Invariants enforced at construction: (a, b) != (0, 0),
    gcd(|a|, |b|, |c|) = 1, and a > 0 or (a = 0 and b > 0).  Under these
    rules equal triples are equal lines, so the triple doubles as a
    hashable, totally ordered dictionary key.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for v in (self.a, self.b, self.c):
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"coefficients must be ints, got {v!r}")
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) must not be (0, 0)")
        if gcd(gcd(abs(self.a), abs(self.b)), abs(self.c)) != 1:
            raise ValueError(f"coefficients not coprime: {(self.a, self.b, self.c)}")
        if not (self.a > 0 or (self.a == 0 and self.b > 0)):
            raise ValueError(f"leading sign rule violated: {(self.a, self.b, self.c)}")

    @classmethod
    def from_coefficients(cls, a: Rational, b: Rational, c: Rational) -> "CanonicalLine":
        """Normalize arbitrary rational coefficients of a*x + b*y + c = 0.

        Clears denominators, divides out the gcd, and fixes the leading
        sign.  Scale-invariant: (t*a, t*b, t*c) maps to the same line for
        any nonzero rational t.
        """
        fa = _as_fraction(a, "a")
        fb = _as_fraction(b, "b")
        fc = _as_fraction(c, "c")
        if fa == 0 and fb == 0:
            raise ValueError("(a, b) must not be (0, 0)")
        scale = fa.denominator * fb.denominator * fc.denominator
        ia = int(fa * scale)
        ib = int(fb * scale)
        ic = int(fc * scale)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def line_through(p: ExactPoint, q: ExactPoint) -> CanonicalLine:
    """The unique canonical line through two distinct points.

    Symmetric in its arguments.  Raises IdenticalPointsError when p = q
    as geometric points (colors ignored).
    """
    if p == q:
        raise IdenticalPointsError(f"no unique line through coincident points {p!r}")
    a = q.y - p.y
    b = p.x - q.x
    c = q.x * p.y - p.x * q.y
    return CanonicalLine.from_coefficients(a, b, c)


def incident(line: CanonicalLine, p: ExactPoint) -> bool:
    """Exact incidence test: a*x + b*y + c = 0 in rational arithmetic."""
    return line.a * p.x + line.b * p.y + line.c == 0


def collinear(p: ExactPoint, q: ExactPoint, s: ExactPoint) -> bool:
    """Whether the 3x3 orientation determinant with rows (x, y, 1) vanishes.

    Total: duplicate arguments are trivially collinear.
    """
    return (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x) == 0
