"""Exact planar geometry on integer coordinates.

Every predicate is a sign computation on Python integers, so there is no
epsilon anywhere in the package.  Coordinates are capped at |x|, |y| <= 2**30,
which keeps all determinants used here well inside 128 signed bits and makes
every query deterministic.

Conventions used throughout:

* ``orient(a, b, c)`` is the sign of the cross product (b-a) x (c-a); a
  positive determinant means a counterclockwise turn.
* Convex hulls are reported as a clockwise cycle starting at the
  lexicographically smallest point (min x, then min y).
* "Left" / "right" of a directed line p->q mean the counterclockwise and
  clockwise sides respectively.

Point sets are validated eagerly: pairwise distinct, coordinates in range,
and no three points collinear (general position).  Everything downstream
assumes general position and never handles collinear cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property, cmp_to_key

from .errors import (
    CoordinateRangeError,
    DegenerateInputError,
    DuplicatePointError,
    InternalInconsistencyError,
    NotGeneralPositionError,
    NotOnHullError,
)

COORD_BOUND = 2**30

# Full O(n^3) collinearity scan up to this size; above it construction falls
# back to a deterministic sample of triples unless a full scan is requested.
FULL_GP_SCAN_MAX = 64
_GP_SAMPLE_TRIPLES = 20000


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int


def _sign(v: int) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def cross(ax: int, ay: int, bx: int, by: int) -> int:
    """Exact 2D cross product a x b."""
    return ax * by - ay * bx


def orient(a: Point, b: Point, c: Point) -> Orientation:
    """Turn direction of the triple (a, b, c).

    Positive determinant of (b-a, c-a) is a counterclockwise turn.
    """
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return Orientation(_sign(det))


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the open segments p1p2 and q1q2 intersect.

    Assumes the four endpoints are pairwise distinct and in general
    position; behaviour for shared endpoints or collinear inputs is
    unspecified (callers never produce them).
    """
    return (
        orient(p1, p2, q1) != orient(p1, p2, q2)
        and orient(q1, q2, p1) != orient(q1, q2, p2)
    )


def pierces(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff segment ab pierces segment cd.

    Piercing: the segments do not cross, but the infinite line through a
    and b meets the open segment cd.  The relation is directional in the
    segments (ab vs cd), not in the endpoint order within a segment.
    """
    if segments_cross(a, b, c, d):
        return False
    return orient(a, b, c) != orient(a, b, d)


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Strict interior test; boundary points are outside."""
    o1 = orient(a, b, p)
    o2 = orient(b, c, p)
    o3 = orient(c, a, p)
    return o1 == o2 == o3 and o1 != Orientation.COLLINEAR


@dataclass(frozen=True)
class HullLabeling:
    """Hull cycle (clockwise, canonical start) plus interior indices."""

    hull: tuple[int, ...]
    interior: tuple[int, ...]


@dataclass(frozen=True)
class PointSet:
    """An immutable planar point set in general position.

    Construction validates the coordinate bound, pairwise distinctness and
    general position (no collinear triple).  For sets larger than
    ``FULL_GP_SCAN_MAX`` the collinearity check samples triples; call
    :meth:`check_general_position` for the full scan.
    """

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = self.points
        for p in pts:
            if abs(p.x) > COORD_BOUND or abs(p.y) > COORD_BOUND:
                raise CoordinateRangeError(
                    f"coordinate out of range at {p}: |x|,|y| must be <= 2**30"
                )
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DuplicatePointError(
                    f"points {seen[p]} and {i} coincide at ({p.x}, {p.y})"
                )
            seen[p] = i
        if len(pts) <= FULL_GP_SCAN_MAX:
            self.check_general_position()
        else:
            self._check_general_position_sampled()

    @classmethod
    def of(cls, coords) -> "PointSet":
        """Build from an iterable of (x, y) integer pairs."""
        return cls(tuple(Point(int(x), int(y)) for x, y in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def coords(self) -> tuple[tuple[int, int], ...]:
        return tuple((p.x, p.y) for p in self.points)

    def check_general_position(self) -> None:
        """Full O(n^3) scan; raises naming the first collinear triple."""
        pts = self.points
        n = len(pts)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if orient(pts[i], pts[j], pts[k]) == Orientation.COLLINEAR:
                        raise NotGeneralPositionError(
                            f"points {i}, {j}, {k} are collinear",
                            triple=(i, j, k),
                        )

    def _check_general_position_sampled(self) -> None:
        pts = self.points
        n = len(pts)
        rng = random.Random(0xC0FFEE)
        for _ in range(_GP_SAMPLE_TRIPLES):
            i, j, k = rng.sample(range(n), 3)
            if orient(pts[i], pts[j], pts[k]) == Orientation.COLLINEAR:
                i, j, k = sorted((i, j, k))
                raise NotGeneralPositionError(
                    f"points {i}, {j}, {k} are collinear", triple=(i, j, k)
                )

    @cached_property
    def _hull_labeling(self) -> HullLabeling:
        return _compute_hull(self)


def _compute_hull(ps: PointSet) -> HullLabeling:
    pts = ps.points
    n = len(pts)
    if n < 3:
        raise DegenerateInputError(f"convex hull needs n >= 3, got {n}")
    order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].y))

    def chain(indices):
        out = []
        for i in indices:
            while len(out) >= 2:
                a, b = pts[out[-2]], pts[out[-1]]
                if orient(a, b, pts[i]) != Orientation.COUNTERCLOCKWISE:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    ccw = lower[:-1] + upper[:-1]
    # Reverse the tail to get the clockwise cycle, still anchored at the
    # lexicographic minimum.
    hull = tuple([ccw[0]] + ccw[:0:-1])
    on_hull = set(hull)
    interior = tuple(i for i in range(n) if i not in on_hull)
    return HullLabeling(hull=hull, interior=interior)


def convex_hull(ps: PointSet) -> HullLabeling:
    """Clockwise hull cycle starting at the lexicographic minimum.

    Interior indices are reported in ascending order.  Under general
    position every hull vertex is extreme.
    """
    return ps._hull_labeling


def is_convex_position(ps: PointSet) -> bool:
    """True iff every point is a hull vertex (needs n >= 3)."""
    return not convex_hull(ps).interior


def clockwise_around(ps: PointSet, center: int, others) -> list[int]:
    """Sort ``others`` by clockwise angle around point ``center``.

    Only valid when all the other points fit in an angular wedge of less
    than a half turn around the center, which holds whenever the center is
    a hull vertex of the set containing them.
    """
    pts = ps.points
    cx, cy = pts[center].x, pts[center].y

    def cmp(i: int, j: int) -> int:
        s = cross(pts[i].x - cx, pts[i].y - cy, pts[j].x - cx, pts[j].y - cy)
        if s == 0:
            raise InternalInconsistencyError(
                f"angular tie around {center}: points {i} and {j} collinear with it"
            )
        return -1 if s < 0 else 1

    return sorted(others, key=cmp_to_key(cmp))


def polar_order(ps: PointSet, a1: int) -> list[int]:
    """All other indices in clockwise angular order around hull vertex a1.

    The first element is a1's immediate clockwise hull successor, the last
    its immediate predecessor.  Raises NotOnHullError if a1 is interior.
    """
    n = len(ps)
    if n <= 2:
        return [i for i in range(n) if i != a1]
    labeling = convex_hull(ps)
    if a1 not in labeling.hull:
        raise NotOnHullError(f"point {a1} is not a hull vertex")
    return clockwise_around(ps, a1, [i for i in range(n) if i != a1])


def side_counts(ps: PointSet, p: int, q: int) -> tuple[int, int]:
    """(left, right) counts of the other points against the line p->q.

    Left is the counterclockwise side of the directed line through points
    p and q.  Under general position no third point lies on the line, so
    left + right = n - 2.
    """
    pts = ps.points
    a, b = pts[p], pts[q]
    left = right = 0
    for i, c in enumerate(pts):
        if i == p or i == q:
            continue
        o = orient(a, b, c)
        if o == Orientation.COUNTERCLOCKWISE:
            left += 1
        elif o == Orientation.CLOCKWISE:
            right += 1
    return left, right


def halving_vertex(ps: PointSet, q: int) -> int:
    """First hull vertex (canonical hull order) whose line through q halves.

    For a set of n = 2k points with q its unique interior point, a halving
    vertex j leaves k-1 points strictly on each side of the line through q
    and j; a rotating sweep of directed lines through q guarantees one
    exists.  Not finding one therefore signals a violated precondition.
    """
    n = len(ps)
    half = (n - 2) // 2
    for j in convex_hull(ps).hull:
        if j == q:
            continue
        if side_counts(ps, q, j) == (half, half):
            return j
    raise InternalInconsistencyError(
        f"no halving vertex through point {q}; preconditions violated"
    )
