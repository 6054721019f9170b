"""Constructive search for matchings with the piercing property.

For a non-convex point set (other than the exceptional six-point order
type) a matching in which a hull-anchored segment pierces another segment
always exists.  The builders here construct one explicitly, by case
analysis on the number of interior points, and record the intermediate
objects of the construction in a trace.

Every constructed matching is re-validated (matching invariants plus the
piercing pair) before being returned; a validation failure is an
implementation bug, counted, logged, and patched over with the brute-force
oracle when the set is small enough.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import (
    InternalInconsistencyError,
    OddSizeError,
    PreconditionError,
)
from .geometry import (
    Orientation,
    Point,
    PointSet,
    convex_hull,
    cross,
    halving_vertex,
    orient,
    pierces,
    point_in_triangle,
    side_counts,
)
from .matchings import (
    DEFAULT_ENUM_CAP,
    Matching,
    exists_piercing_matching,
    first_plane_matching,
)

log = logging.getLogger(__name__)

CASE_EVEN_K = "even_k"
CASE_ODD_K_DELTA2 = "odd_k_delta2"
CASE_ODD_K_ALL_HALVING = "odd_k_all_halving"
CASE_K3_BRUTE_FORCE = "k3_brute_force"
CASE_MANY_INTERIOR = "many_interior"

REASON_CONVEX = "convex_position"
REASON_EXCEPTIONAL = "exceptional_six"

# Defensive fallback counters, reported by the acceptance suite.  Both stay
# at zero unless an assumption of the constructions fails at runtime.
_fallback_counts = {"validation": 0, "delta2_scan": 0}


def fallback_counts() -> dict[str, int]:
    return dict(_fallback_counts)


def reset_fallback_counts() -> None:
    for key in _fallback_counts:
        _fallback_counts[key] = 0


@dataclass(frozen=True)
class WitnessTrace:
    """Intermediate objects of a witness construction.

    ``piercing_pair`` holds ((a, b), (c, d)) where segment ab has a hull
    endpoint and pierces segment cd.  The other fields are populated only
    by the cases that use them: ``q`` the interior anchor point, ``j0`` and
    ``delta`` the chosen unbalanced hull vertex and its signed imbalance,
    ``r``/``r_prime`` the auxiliary interior points of the many-interior
    construction, and ``s1``/``s2`` the two sides of the splitting line.
    """

    case_tag: str
    piercing_pair: tuple[tuple[int, int], tuple[int, int]]
    q: int | None = None
    j0: int | None = None
    delta: int | None = None
    r: int | None = None
    r_prime: int | None = None
    s1: tuple[int, ...] | None = None
    s2: tuple[int, ...] | None = None


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of the witness search.

    Either ``matching``/``trace`` are set (a verified piercing matching) or
    ``reason`` explains why none exists ("convex_position" or
    "exceptional_six").
    """

    matching: Matching | None
    trace: WitnessTrace | None
    reason: str | None

    @property
    def found(self) -> bool:
        return self.matching is not None

    @classmethod
    def witness(cls, matching: Matching, trace: WitnessTrace) -> "WitnessResult":
        return cls(matching=matching, trace=trace, reason=None)

    @classmethod
    def not_exists(cls, reason: str) -> "WitnessResult":
        return cls(matching=None, trace=None, reason=reason)


def _validated_witness(ps: PointSet, pairs, trace: WitnessTrace) -> WitnessResult:
    matching = Matching.of(pairs)
    matching.validate(ps)
    (a, b), (c, d) = trace.piercing_pair
    seg1 = (min(a, b), max(a, b))
    seg2 = (min(c, d), max(c, d))
    if seg1 not in matching.pairs or seg2 not in matching.pairs:
        raise InternalInconsistencyError("piercing pair not part of the matching")
    hull_set = set(convex_hull(ps).hull)
    if a not in hull_set and b not in hull_set:
        raise InternalInconsistencyError("piercing segment has no hull endpoint")
    pts = ps.points
    if not pierces(pts[a], pts[b], pts[c], pts[d]):
        raise InternalInconsistencyError(
            f"constructed pair ({a},{b}) -> ({c},{d}) does not pierce"
        )
    return WitnessResult.witness(matching, trace)


def _oracle_witness(ps: PointSet, case_tag: str, q: int | None) -> WitnessResult:
    """Brute-force witness with the trace rebuilt from the found matching."""
    matching = exists_piercing_matching(ps)
    if matching is None:
        return WitnessResult.not_exists(REASON_EXCEPTIONAL)
    pair = _extract_piercing_pair(ps, matching)
    trace = WitnessTrace(case_tag=case_tag, piercing_pair=pair, q=q)
    return WitnessResult.witness(matching, trace)


def _extract_piercing_pair(ps: PointSet, matching: Matching):
    pts = ps.points
    hull_set = set(convex_hull(ps).hull)
    for a, b in matching.pairs:
        if a not in hull_set and b not in hull_set:
            continue
        for c, d in matching.pairs:
            if (c, d) == (a, b):
                continue
            if pierces(pts[a], pts[b], pts[c], pts[d]):
                return (a, b), (c, d)
    raise InternalInconsistencyError("oracle matching has no piercing pair")


def _with_validation_fallback(ps: PointSet, build, case_tag: str) -> WitnessResult:
    try:
        return build()
    except InternalInconsistencyError as exc:
        _fallback_counts["validation"] += 1
        log.warning("witness construction failed validation (%s); falling back", exc)
        if len(ps) > DEFAULT_ENUM_CAP:
            raise
        result = _oracle_witness(ps, case_tag, None)
        if not result.found:
            raise
        return result


def _rotated(hull: tuple[int, ...], pos: int) -> list[int]:
    return list(hull[pos:]) + list(hull[:pos])


def _consecutive_pairs(labels: list[int]) -> list[tuple[int, int]]:
    # (A2,A3), (A4,A5), ... over the label cycle minus the anchor A1.
    return [(labels[i], labels[i + 1]) for i in range(1, len(labels) - 1, 2)]


def build_witness_one_interior(ps: PointSet) -> WitnessResult:
    """Witness construction for exactly one interior point.

    With the hull labeled A1..A_{n-1} clockwise starting at a suitably
    chosen vertex and Q the interior point, the matching is always
    {A1 Q} plus hull-edge pairs, and the choice of the starting vertex
    decides which hull edge the line through A1 and Q pierces:

    * k even: start at any halving vertex; A1 Q pierces A_k A_{k+1}.
    * k odd with an unbalanced vertex (sides of sizes k-2 and k): start
      there; A1 Q pierces the edge where the line leaves the hull, which
      is a matched pair because the unbalanced chain has even length.
    * k odd >= 5 with every vertex halving: a fixed symmetric matching
      around the far side works from any start.
    * k == 3 with every vertex halving: exhaustive search; this is the
      only situation without a witness (beyond convex position), the
      exceptional six-point order type.
    """
    n = len(ps)
    k = n // 2
    labeling = convex_hull(ps)
    if n % 2 != 0 or n < 4:
        raise PreconditionError(f"need an even number of points >= 4, got {n}")
    if len(labeling.interior) != 1:
        raise PreconditionError(
            f"expected exactly one interior point, found {len(labeling.interior)}"
        )
    q = labeling.interior[0]
    hull = labeling.hull

    if k % 2 == 0:
        j = halving_vertex(ps, q)
        pos = hull.index(j)
        labels = _rotated(hull, pos)
        pairs = [(labels[0], q)] + _consecutive_pairs(labels)
        trace = WitnessTrace(
            case_tag=CASE_EVEN_K,
            q=q,
            piercing_pair=((labels[0], q), (labels[k - 1], labels[k])),
        )
        return _with_validation_fallback(
            ps, lambda: _validated_witness(ps, pairs, trace), CASE_EVEN_K
        )

    # k odd: look for a vertex whose line through q has sides of sizes
    # k-2 and k.  The chain that follows the clockwise successor A2 lies
    # on the left of the directed line A1 -> Q.
    chosen = None
    lefts = []
    for pos, v in enumerate(hull):
        left, _right = side_counts(ps, v, q)
        lefts.append(left)
        if chosen is None and left in (k - 2, k):
            chosen = (pos, left)
    if chosen is not None:
        pos, left = chosen
        labels = _rotated(hull, pos)
        pairs = [(labels[0], q)] + _consecutive_pairs(labels)
        if left == k - 2:
            pierced = (labels[k - 2], labels[k - 1])  # edge A_{k-1} A_k
            delta = 2
        else:
            pierced = (labels[k], labels[k + 1])  # edge A_{k+1} A_{k+2}
            delta = -2
        trace = WitnessTrace(
            case_tag=CASE_ODD_K_DELTA2,
            q=q,
            j0=labels[0],
            delta=delta,
            piercing_pair=((labels[0], q), pierced),
        )
        return _with_validation_fallback(
            ps, lambda: _validated_witness(ps, pairs, trace), CASE_ODD_K_DELTA2
        )

    all_halving = all(left == k - 1 for left in lefts)

    if all_halving and k >= 5:
        labels = _rotated(hull, 0)
        pairs = [
            (labels[0], q),
            (labels[k - 2], labels[k + 1]),  # A_{k-1} A_{k+2}
            (labels[k - 1], labels[k]),  # A_k A_{k+1}
        ]
        for i in list(range(2, k - 2, 2)) + list(range(k + 3, n - 1, 2)):
            pairs.append((labels[i - 1], labels[i]))
        trace = WitnessTrace(
            case_tag=CASE_ODD_K_ALL_HALVING,
            q=q,
            piercing_pair=((labels[0], q), (labels[k - 2], labels[k + 1])),
        )
        return _with_validation_fallback(
            ps, lambda: _validated_witness(ps, pairs, trace),
            CASE_ODD_K_ALL_HALVING,
        )

    if k == 3:
        # Only the all-halving order type can reach this point, and for it
        # the exhaustive check comes up empty; the branch still searches so
        # that the dichotomy rests on the oracle, not on the classifier.
        return _oracle_witness(ps, CASE_K3_BRUTE_FORCE, q)

    # k odd >= 5, not all halving, yet no vertex with sides k-2 / k.  A
    # discrete sweep argument says this cannot happen; guard anyway.
    _fallback_counts["delta2_scan"] += 1
    log.warning(
        "no unbalanced vertex found for k=%d despite non-halving vertices; "
        "falling back to exhaustive search",
        k,
    )
    if n > DEFAULT_ENUM_CAP:
        raise InternalInconsistencyError(
            f"unbalanced-vertex scan failed for n={n} beyond the search cap"
        )
    return _oracle_witness(ps, CASE_ODD_K_DELTA2, q)


def _ray_exit_edge(ps: PointSet, labels, origin: Point, through: Point) -> int:
    """Index m such that the ray origin->through leaves the hull through the
    open edge (labels[m], labels[m+1])."""
    pts = ps.points
    dx, dy = through.x - origin.x, through.y - origin.y
    for m in range(len(labels) - 1):
        u, v = pts[labels[m]], pts[labels[m + 1]]
        ou = orient(origin, through, u)
        ov = orient(origin, through, v)
        if ou == ov or Orientation.COLLINEAR in (ou, ov):
            continue
        ex, ey = v.x - u.x, v.y - u.y
        num = cross(u.x - origin.x, u.y - origin.y, ex, ey)
        den = cross(dx, dy, ex, ey)
        if num * den > 0:  # crossing lies ahead of the origin
            return m
    raise InternalInconsistencyError("ray does not leave the hull through an edge")


def _min_angle_in_triangle(ps: PointSet, a1: int, a2: int, q: int) -> int | None:
    """Point of S strictly inside triangle a1 a2 q minimizing the angle at
    a2 measured from the ray a2->a1, compared exactly."""
    pts = ps.points
    pa1, pa2, pq = pts[a1], pts[a2], pts[q]
    candidates = [
        i
        for i in range(len(ps))
        if i not in (a1, a2, q) and point_in_triangle(pts[i], pa1, pa2, pq)
    ]
    if not candidates:
        return None
    sweep = orient(pa2, pa1, pq)  # rotation sense from the a1-ray into the wedge

    def smaller(u: int, v: int) -> bool:
        s = orient(pa2, pts[u], pts[v])
        if s == Orientation.COLLINEAR:
            raise InternalInconsistencyError("angular tie inside triangle")
        return s == sweep

    best = candidates[0]
    for c in candidates[1:]:
        if smaller(c, best):
            best = c
    return best


def build_witness_many_interior(ps: PointSet) -> WitnessResult:
    """Witness construction for two or more interior points.

    Pick interior points Q and R, label the hull clockwise so that the ray
    from Q through R leaves the hull through the edge A1 A2, and split the
    remaining points by the line through A1 and Q into S1 (the side of A2)
    and S2.  If both sides are odd, the matching takes A1 Q plus the hull
    edge the splitting line leaves through, and A1 Q pierces that edge.
    If both are even, the matching takes A1 Q, any matching of S2, and a
    matching of S1 forced to contain the segment from A2 to the point R'
    of smallest angle inside triangle A1 A2 Q; then A2 R' pierces A1 Q.
    """
    n = len(ps)
    labeling = convex_hull(ps)
    if n % 2 != 0:
        raise PreconditionError(f"need an even number of points, got {n}")
    if len(labeling.interior) < 2:
        raise PreconditionError(
            f"expected at least two interior points, found {len(labeling.interior)}"
        )
    pts = ps.points
    q, r = labeling.interior[0], labeling.interior[1]

    def build() -> WitnessResult:
        edge = _ray_exit_edge(ps, list(labeling.hull) + [labeling.hull[0]],
                              pts[q], pts[r])
        labels = _rotated(labeling.hull, edge % len(labeling.hull))
        a1, a2 = labels[0], labels[1]

        side_a2 = orient(pts[a1], pts[q], pts[a2])
        s1 = []
        s2 = []
        for i in range(n):
            if i in (a1, q):
                continue
            if orient(pts[a1], pts[q], pts[i]) == side_a2:
                s1.append(i)
            else:
                s2.append(i)

        exit_m = _ray_exit_edge(ps, labels, pts[a1], pts[q])
        aj, aj1 = labels[exit_m], labels[exit_m + 1]
        if aj not in s1 or aj1 not in s2:
            raise InternalInconsistencyError("hull exit edge straddles the wrong way")

        trace_kwargs = dict(
            case_tag=CASE_MANY_INTERIOR,
            q=q,
            r=r,
            s1=tuple(s1),
            s2=tuple(s2),
        )
        if len(s1) % 2 == 1:
            sub1 = first_plane_matching(ps, [i for i in s1 if i != aj])
            sub2 = first_plane_matching(ps, [i for i in s2 if i != aj1])
            pairs = [(a1, q), (aj, aj1)] + sub1 + sub2
            trace = WitnessTrace(
                piercing_pair=((a1, q), (aj, aj1)), **trace_kwargs
            )
        else:
            r_prime = _min_angle_in_triangle(ps, a1, a2, q)
            if r_prime is None:
                raise InternalInconsistencyError(
                    "triangle A1 A2 Q contains no candidate for R'"
                )
            sub1 = first_plane_matching(ps, s1, forced_pair=(a2, r_prime))
            sub2 = first_plane_matching(ps, s2)
            pairs = [(a1, q)] + sub1 + sub2
            trace = WitnessTrace(
                piercing_pair=((a2, r_prime), (a1, q)),
                r_prime=r_prime,
                **trace_kwargs,
            )
        return _validated_witness(ps, pairs, trace)

    return _with_validation_fallback(ps, build, CASE_MANY_INTERIOR)


def build_witness(ps: PointSet) -> WitnessResult:
    """Dispatch on hull shape; NotExists for convex and exceptional sets."""
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    if n == 2:
        return WitnessResult.not_exists(REASON_CONVEX)
    interior = convex_hull(ps).interior
    if not interior:
        return WitnessResult.not_exists(REASON_CONVEX)
    if len(interior) == 1:
        return build_witness_one_interior(ps)
    return build_witness_many_interior(ps)
