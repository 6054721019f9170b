"""Seeded point-set generators for experiments and tests.

All generators are deterministic functions of their spec (kind, n, seed,
radius) and validate their output against the point-set invariants before
returning.  Rejection sampling retries until the requested structural
condition holds or the attempt budget runs out.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import GenerationExhaustedError, PreconditionError
from .geometry import Orientation, Point, PointSet, convex_hull, is_convex_position, orient

KIND_CONVEX = "convex"
KIND_RANDOM_DISK = "random_disk"
KIND_ONE_INTERIOR = "one_interior"
KIND_MANY_INTERIOR = "many_interior"
KIND_EXCEPTIONAL = "exceptional"

KINDS = (
    KIND_CONVEX,
    KIND_RANDOM_DISK,
    KIND_ONE_INTERIOR,
    KIND_MANY_INTERIOR,
    KIND_EXCEPTIONAL,
)

# Integer approximation of a regular pentagon plus its center.  The defining
# property (every line through the center and a vertex splits the rest 2-2)
# is exact for these coordinates and is asserted at generation time.
EXCEPTIONAL_COORDS = (
    (0, 0),
    (0, 100),
    (95, 31),
    (59, -81),
    (-59, -81),
    (-95, 31),
)

DEFAULT_RADIUS = 10**6


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int = 6
    seed: int = 0
    radius: int = DEFAULT_RADIUS

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown generator kind {self.kind!r}")
        if self.kind != KIND_EXCEPTIONAL:
            if self.n < 2 or self.n % 2 != 0:
                raise PreconditionError(f"n must be even and >= 2, got {self.n}")
            if self.radius < 10:
                raise PreconditionError("radius must be at least 10")


def _sample_disk_points(rng: random.Random, n: int, radius: int, budget: list[int]):
    """Integer points uniform in the disk, distinct, no collinear triple."""
    pts: list[Point] = []
    seen = set()
    while len(pts) < n:
        budget[0] -= 1
        if budget[0] <= 0:
            raise GenerationExhaustedError(
                f"rejection budget exhausted while sampling {n} disk points"
            )
        x = rng.randrange(-radius, radius + 1)
        y = rng.randrange(-radius, radius + 1)
        if x * x + y * y > radius * radius or (x, y) in seen:
            continue
        cand = Point(x, y)
        if any(
            orient(pts[i], pts[j], cand) == Orientation.COLLINEAR
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
        ):
            continue
        pts.append(cand)
        seen.add((x, y))
    return pts


def _disk_set(rng, n, radius, budget) -> PointSet:
    return PointSet(tuple(_sample_disk_points(rng, n, radius, budget)))


def _convex_set(rng, n, radius, budget) -> PointSet:
    while True:
        budget[0] -= 1
        if budget[0] <= 0:
            raise GenerationExhaustedError(
                f"rejection budget exhausted while sampling {n} convex points"
            )
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(n))
        coords = [
            (round(radius * math.cos(t)), round(radius * math.sin(t)))
            for t in angles
        ]
        if len(set(coords)) != n:
            continue
        try:
            ps = PointSet.of(coords)
        except Exception:
            continue
        if n == 2 or is_convex_position(ps):
            return ps


def generate(spec: GeneratorSpec, *, max_attempts: int = 200_000) -> PointSet:
    """Deterministic point set for the spec; see GeneratorSpec for kinds."""
    if spec.kind == KIND_EXCEPTIONAL:
        ps = PointSet.of(EXCEPTIONAL_COORDS)
        labeling = convex_hull(ps)
        assert len(labeling.interior) == 1  # fixed coordinates, checked in tests
        return ps

    rng = random.Random(spec.seed)
    budget = [max_attempts]
    if spec.kind == KIND_CONVEX:
        return _convex_set(rng, spec.n, spec.radius, budget)
    if spec.kind == KIND_RANDOM_DISK:
        return _disk_set(rng, spec.n, spec.radius, budget)

    want_one = spec.kind == KIND_ONE_INTERIOR
    while True:
        ps = _disk_set(rng, spec.n, spec.radius, budget)
        if spec.n < 4:
            raise GenerationExhaustedError(
                f"{spec.kind} needs n >= 4 (a 2-point set has no interior)"
            )
        interior = len(convex_hull(ps).interior)
        if want_one and interior == 1:
            return ps
        if not want_one and interior >= 2:
            return ps
        budget[0] -= 1
        if budget[0] <= 0:
            raise GenerationExhaustedError(
                f"rejection budget exhausted for kind={spec.kind}, n={spec.n}"
            )
