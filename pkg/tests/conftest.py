import math

import pytest

from planematch.generators import GeneratorSpec, generate
from planematch.geometry import PointSet

# Pentagon-like hull plus a point dead center: the unique non-convex
# six-point order type attaining the convex minimum of five matchings.
EXCEPTIONAL = ((0, 0), (0, 100), (95, 31), (59, -81), (-59, -81), (-95, 31))

# Square hull with two interior points; the standard many-interior fixture.
G1 = ((0, 0), (0, 10), (10, 10), (10, 0), (4, 5), (6, 5))

# Smallest one-interior set: a triangle with a point inside (k = 2).
TRIANGLE_PLUS_CENTER = ((0, 0), (12, 0), (3, 9), (5, 3))

SQUARE = ((0, 0), (0, 10), (10, 10), (10, 0))


@pytest.fixture
def exceptional_ps():
    return PointSet.of(EXCEPTIONAL)


@pytest.fixture
def g1_ps():
    return PointSet.of(G1)


@pytest.fixture
def square_ps():
    return PointSet.of(SQUARE)


def disk_set(n, seed, kind="random_disk", radius=1000):
    return generate(GeneratorSpec(kind=kind, n=n, seed=seed, radius=radius))


def circle_set(n, radius=10**6, rotation=0.37):
    """Points on a circle at equal angles; convex position after rounding."""
    coords = []
    for i in range(n):
        t = rotation + 2 * math.pi * i / n
        coords.append((round(radius * math.cos(t)), round(radius * math.sin(t))))
    return PointSet.of(coords)


def ninegon_plus_center(radius=1000):
    """Near-regular 9-gon plus its center: every vertex line halves."""
    coords = [(0, 0)]
    for i in range(9):
        t = 2 * math.pi * i / 9
        coords.append((round(radius * math.cos(t)), round(radius * math.sin(t))))
    return PointSet.of(coords)
