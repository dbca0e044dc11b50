"""Stochastic search for configurations with a small bichromatic ratio.

Simulated annealing over colorings (ColorSwap) and small lattice moves
(PointNudge), minimizing the exact rational ratio |B| / (n(2n-r)).  The
only approximate step is the acceptance probability: a worsening move is
accepted when

    rng.random() < exp(-float(delta) / float(temperature))

with delta the exact ratio increase.  Degenerate configurations, where
all points are collinear and the ratio is infinite, are never accepted
from a finite state; from an infinite state any move is accepted, so the
chain can only leave the degenerate regime, not enter it.

Restarts run independent chains from the base configuration, each with a
seed derived by hashing (root seed, restart index); the reported best is
the minimum over restarts, ties going to the lower restart index.  The
result is therefore a pure function of the SearchSpec.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from hashlib import blake2b
from math import exp, inf

from .analysis import beck_ratio
from .engine import ColoredConfig
from .errors import InvalidSpecError, MoveInapplicableError
from .geometry import Color, ExactPoint

Ratio = "Fraction | float"  # exact rational, or inf for the degenerate case


class Move(Enum):
    COLOR_SWAP = "color-swap"
    POINT_NUDGE = "point-nudge"


def default_schedule(iterations: int) -> tuple[Fraction, ...]:
    """Geometric cooling from 1 by factor 9/10, held constant past step
    64 where the acceptance probability for any real worsening is already
    negligible."""
    steps = min(iterations, 64)
    return tuple(Fraction(9, 10) ** i for i in range(steps))


@dataclass(frozen=True)
class SearchSpec:
    base: ColoredConfig
    moves: frozenset
    iterations: int
    restarts: int
    seed: int
    temperature_schedule: tuple = ()
    nudge_radius: int = 1

    def __post_init__(self):
        moves = frozenset(self.moves)
        if not moves or any(not isinstance(m, Move) for m in moves):
            raise InvalidSpecError(f"moves must be a nonempty set of Move, got {self.moves!r}")
        object.__setattr__(self, "moves", moves)
        if self.iterations < 1:
            raise InvalidSpecError(f"iterations must be >= 1, got {self.iterations}")
        if self.restarts < 1:
            raise InvalidSpecError(f"restarts must be >= 1, got {self.restarts}")
        if self.base.n_red != self.base.n_blue or self.base.n_red < 1:
            raise InvalidSpecError("base configuration must have equal, positive color counts")
        if Move.POINT_NUDGE in moves and self.nudge_radius < 1:
            raise MoveInapplicableError(
                f"point-nudge needs nudge_radius >= 1, got {self.nudge_radius}"
            )
        schedule = tuple(Fraction(t) for t in self.temperature_schedule)
        if not schedule:
            schedule = default_schedule(self.iterations)
        if any(t <= 0 for t in schedule):
            raise InvalidSpecError("temperatures must be positive")
        if any(b > a for a, b in zip(schedule, schedule[1:])):
            raise InvalidSpecError("temperature schedule must be nonincreasing")
        object.__setattr__(self, "temperature_schedule", schedule)


@dataclass(frozen=True)
class SearchResult:
    best_config: ColoredConfig
    best_ratio: "Fraction | float"
    trajectory: tuple  # (global iteration, ratio) at each improvement
    restart_index: int


def _restart_seed(seed: int, index: int) -> int:
    digest = blake2b(f"restart:{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _propose(config: ColoredConfig, move: Move, rng: random.Random, radius: int):
    """One candidate neighbor, or None when the drawn move is a no-op or
    collides with an existing point."""
    if move is Move.COLOR_SWAP:
        i = rng.randrange(config.n_red)
        j = rng.randrange(config.n_blue)
        red = list(config.red)
        blue = list(config.blue)
        red[i], blue[j] = blue[j].with_color(Color.RED), red[i].with_color(Color.BLUE)
        return ColoredConfig(tuple(red), tuple(blue))
    points = config.points()
    t = rng.randrange(len(points))
    dx = rng.randint(-radius, radius)
    dy = rng.randint(-radius, radius)
    if dx == 0 and dy == 0:
        return None
    old = points[t]
    moved = ExactPoint(old.x + dx, old.y + dy, old.color)
    if any(p == moved for p in points):
        return None
    if t < config.n_red:
        red = list(config.red)
        red[t] = moved
        return ColoredConfig(tuple(red), config.blue)
    blue = list(config.blue)
    blue[t - config.n_red] = moved
    return ColoredConfig(config.red, tuple(blue))


def _accept(current, candidate, temperature: Fraction, rng: random.Random) -> bool:
    if candidate == inf:
        return current == inf  # lateral move inside the degenerate regime
    if current == inf:
        return True
    if candidate <= current:
        return True
    prob = exp(-float(candidate - current) / float(temperature))
    return rng.random() < prob


def search(spec: SearchSpec) -> SearchResult:
    """Anneal from the base configuration; see the module docstring for
    the acceptance rule and restart semantics."""
    moves = sorted(spec.moves, key=lambda m: m.value)
    schedule = spec.temperature_schedule
    best_config = None
    best_ratio = None
    best_restart = -1
    trajectory = []

    for restart in range(spec.restarts):
        rng = random.Random(_restart_seed(spec.seed, restart))
        current = spec.base
        current_ratio = beck_ratio(current)
        offset = restart * spec.iterations
        if best_ratio is None or current_ratio < best_ratio:
            best_config, best_ratio, best_restart = current, current_ratio, restart
            trajectory.append((offset, current_ratio))
        for step in range(1, spec.iterations + 1):
            move = moves[0] if len(moves) == 1 else rng.choice(moves)
            candidate = _propose(current, move, rng, spec.nudge_radius)
            if candidate is None:
                continue
            candidate_ratio = beck_ratio(candidate)
            temperature = schedule[min(step - 1, len(schedule) - 1)]
            if _accept(current_ratio, candidate_ratio, temperature, rng):
                current, current_ratio = candidate, candidate_ratio
                if current_ratio < best_ratio:
                    best_config, best_ratio, best_restart = current, current_ratio, restart
                    trajectory.append((offset + step, current_ratio))

    assert best_ratio == beck_ratio(best_config)
    return SearchResult(
        best_config=best_config,
        best_ratio=best_ratio,
        trajectory=tuple(trajectory),
        restart_index=best_restart,
    )
