"""Counting and enumeration of non-crossing perfect matchings.

A matching is a set of index pairs covering every point exactly once whose
segments are pairwise non-crossing.  The enumeration backtracks on the
smallest unmatched index, trying larger partners in ascending order, which
visits each matching exactly once and in lexicographic order.

Also here: the Catalan numbers (exact, arbitrary precision), the recursive
"separated matchings" lower bound, and the piercing-property test that
certifies a point set has strictly more matchings than the convex minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidMatchingError, OddSizeError, SizeLimitError
from .geometry import PointSet, convex_hull, is_convex_position, pierces, segments_cross, clockwise_around

DEFAULT_ENUM_CAP = 20
DEFAULT_COUNT_CAP = 24

_catalan_table: list[int] = [1]


def catalan(k: int) -> int:
    """k-th Catalan number via the convolution recursion, memoized."""
    if k < 0:
        raise ValueError("catalan is defined for k >= 0")
    while len(_catalan_table) <= k:
        m = len(_catalan_table)
        _catalan_table.append(
            sum(_catalan_table[i] * _catalan_table[m - 1 - i] for i in range(m))
        )
    return _catalan_table[k]


def catalan_table(k_max: int) -> list[int]:
    """Values C_0..C_k_max as a list."""
    catalan(k_max)
    return _catalan_table[: k_max + 1]


@dataclass(frozen=True)
class Matching:
    """A perfect non-crossing matching as sorted index pairs (i, j), i < j."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs) -> "Matching":
        norm = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))
        return cls(norm)

    def validate(self, ps: PointSet) -> None:
        """Check the matching invariants against ps; raise if violated."""
        n = len(ps)
        if n % 2 != 0:
            raise InvalidMatchingError(f"point set has odd size {n}")
        covered = [i for pair in self.pairs for i in pair]
        if sorted(covered) != list(range(n)):
            raise InvalidMatchingError("pairs do not cover each index exactly once")
        for i, j in self.pairs:
            if not i < j:
                raise InvalidMatchingError(f"pair ({i}, {j}) is not ordered")
        if list(self.pairs) != sorted(self.pairs):
            raise InvalidMatchingError("pairs are not in canonical order")
        pts = ps.points
        for (a, b), (c, d) in combinations(self.pairs, 2):
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                raise InvalidMatchingError(
                    f"segments ({a},{b}) and ({c},{d}) cross"
                )


def _crossing_map(pts, idxs):
    """seg -> set of segs it crosses, over all index pairs within idxs."""
    segs = [(a, b) for a, b in combinations(sorted(idxs), 2)]
    out = {s: set() for s in segs}
    for s1, s2 in combinations(segs, 2):
        a, b = s1
        c, d = s2
        if a == c or a == d or b == c or b == d:
            continue
        if segments_cross(pts[a], pts[b], pts[c], pts[d]):
            out[s1].add(s2)
            out[s2].add(s1)
    return out


def _iter_plane_matchings(pts, idxs, pre_pairs=()):
    """Yield all plane matchings of ``idxs`` (global indices) extending
    ``pre_pairs``, as sorted pair tuples, in lexicographic order."""
    idxs = sorted(idxs)
    if (len(idxs)) % 2 != 0:
        raise OddSizeError(f"cannot match {len(idxs)} points")
    crossing = _crossing_map(pts, idxs)
    used = {i: False for i in idxs}
    chosen = []
    for i, j in pre_pairs:
        seg = (min(i, j), max(i, j))
        used[seg[0]] = used[seg[1]] = True
        chosen.append(seg)

    def rec():
        lead = next((v for v in idxs if not used[v]), None)
        if lead is None:
            yield tuple(sorted(chosen))
            return
        used[lead] = True
        conflict_sets = [crossing[s] for s in chosen]
        for j in idxs:
            if used[j] or j < lead:
                continue
            seg = (lead, j)
            if any(seg in cs for cs in conflict_sets):
                continue
            used[j] = True
            chosen.append(seg)
            yield from rec()
            chosen.pop()
            used[j] = False
        used[lead] = False

    yield from rec()


def _count_plane_matchings(pts, idxs) -> int:
    idxs = sorted(idxs)
    crossing = _crossing_map(pts, idxs)
    used = {i: False for i in idxs}
    chosen = []

    def rec() -> int:
        lead = next((v for v in idxs if not used[v]), None)
        if lead is None:
            return 1
        used[lead] = True
        total = 0
        for j in idxs:
            if used[j] or j < lead:
                continue
            seg = (lead, j)
            if any(seg in crossing[s] for s in chosen):
                continue
            used[j] = True
            chosen.append(seg)
            total += rec()
            chosen.pop()
            used[j] = False
        used[lead] = False
        return total

    return rec()


def first_plane_matching(ps: PointSet, idxs, forced_pair=None) -> list[tuple[int, int]]:
    """First plane matching of a subset, optionally containing forced_pair.

    Used by the witness constructions, where existence is guaranteed; an
    empty subset yields an empty matching.
    """
    pre = (forced_pair,) if forced_pair is not None else ()
    gen = _iter_plane_matchings(ps.points, idxs, pre)
    return list(next(gen))


def enumerate_matchings(ps: PointSet, *, max_n: int = DEFAULT_ENUM_CAP) -> list[Matching]:
    """All non-crossing perfect matchings, lexicographically ordered."""
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds enumeration cap {max_n}")
    return [Matching(pairs) for pairs in _iter_plane_matchings(ps.points, range(n))]


def count_matchings(
    ps: PointSet, *, max_n: int = DEFAULT_COUNT_CAP, use_convex_fast_path: bool = True
) -> int:
    """Number of non-crossing perfect matchings of ps.

    Same backtracking as the enumeration, without materializing matchings.
    Convex-position inputs short-circuit to the Catalan number unless the
    fast path is disabled.
    """
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds counting cap {max_n}")
    if n == 2:
        return 1
    if use_convex_fast_path and is_convex_position(ps):
        return catalan(n // 2)
    return _count_plane_matchings(ps.points, range(n))


def gnt_lower_bound(ps: PointSet) -> int:
    """Recursive count of "separated" matchings; a lower bound for pm(S).

    Recursion: take the lexicographically smallest point of the subset
    (a hull vertex), order the rest clockwise around it, and sum over the
    even-position partners the product of the counts on the two sides of
    the connecting line.  Equals the Catalan number on convex sets and
    never exceeds the true matching count.
    """
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    pts = ps.points
    memo: dict[tuple[int, ...], int] = {}

    def g(subset: tuple[int, ...]) -> int:
        if not subset:
            return 1
        cached = memo.get(subset)
        if cached is not None:
            return cached
        a1 = min(subset, key=lambda i: (pts[i].x, pts[i].y))
        rest = clockwise_around(ps, a1, [i for i in subset if i != a1])
        total = 0
        for m in range(0, len(rest), 2):
            before = tuple(sorted(rest[:m]))
            after = tuple(sorted(rest[m + 1:]))
            total += g(before) * g(after)
        memo[subset] = total
        return total

    return g(tuple(range(n)))


def _find_piercing_pair(pairs, pts, hull_set):
    """First ordered pair of segments (AB, CD) with AB hull-anchored and
    piercing CD, or None."""
    for a, b in pairs:
        if a not in hull_set and b not in hull_set:
            continue
        for c, d in pairs:
            if (c, d) == (a, b):
                continue
            if pierces(pts[a], pts[b], pts[c], pts[d]):
                return (a, b), (c, d)
    return None


def find_piercing_pair(m: Matching, ps: PointSet):
    """First ordered segment pair ((a,b), (c,d)) of the matching where ab has
    a hull endpoint and pierces cd, or None."""
    m.validate(ps)
    if len(ps) < 4:
        return None
    hull_set = set(convex_hull(ps).hull)
    return _find_piercing_pair(m.pairs, ps.points, hull_set)


def has_piercing_property(m: Matching, ps: PointSet) -> bool:
    """True iff some segment with a hull endpoint pierces another segment."""
    return find_piercing_pair(m, ps) is not None


def exists_piercing_matching(
    ps: PointSet, *, max_n: int = DEFAULT_ENUM_CAP
) -> Matching | None:
    """Lexicographically first matching with the piercing property, if any."""
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    if n > max_n:
        raise SizeLimitError(f"n={n} exceeds enumeration cap {max_n}")
    if n < 4:
        return None
    hull_set = set(convex_hull(ps).hull)
    pts = ps.points
    for pairs in _iter_plane_matchings(pts, range(n)):
        if _find_piercing_pair(pairs, pts, hull_set) is not None:
            return Matching(pairs)
    return None
