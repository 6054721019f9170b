import pytest

from planematch.errors import OddSizeError, PreconditionError
from planematch.geometry import PointSet, convex_hull, orient, pierces, side_counts
from planematch.matchings import (
    catalan,
    count_matchings,
    exists_piercing_matching,
    has_piercing_property,
)
from planematch.witness import (
    CASE_EVEN_K,
    CASE_MANY_INTERIOR,
    CASE_ODD_K_ALL_HALVING,
    CASE_ODD_K_DELTA2,
    build_witness,
    build_witness_many_interior,
    build_witness_one_interior,
    fallback_counts,
    reset_fallback_counts,
)

from conftest import TRIANGLE_PLUS_CENTER, circle_set, disk_set, ninegon_plus_center


@pytest.fixture(autouse=True)
def clean_counters():
    reset_fallback_counts()
    yield
    # the constructions must never need their defensive fallbacks
    assert fallback_counts() == {"validation": 0, "delta2_scan": 0}


def assert_sound(ps, result):
    assert result.found
    result.matching.validate(ps)
    assert has_piercing_property(result.matching, ps)
    (a, b), (c, d) = result.trace.piercing_pair
    hull = set(convex_hull(ps).hull)
    assert a in hull or b in hull
    pts = ps.points
    assert pierces(pts[a], pts[b], pts[c], pts[d])
    pairs = set(result.matching.pairs)
    assert (min(a, b), max(a, b)) in pairs
    assert (min(c, d), max(c, d)) in pairs


class TestDispatch:
    def test_convex_circle(self):
        result = build_witness(circle_set(8))
        assert not result.found
        assert result.reason == "convex_position"

    def test_two_points(self):
        result = build_witness(PointSet.of([(0, 0), (1, 0)]))
        assert result.reason == "convex_position"

    def test_exceptional(self, exceptional_ps):
        result = build_witness(exceptional_ps)
        assert not result.found
        assert result.reason == "exceptional_six"

    def test_g1(self, g1_ps):
        result = build_witness(g1_ps)
        assert_sound(g1_ps, result)
        assert result.trace.case_tag == CASE_MANY_INTERIOR

    def test_odd_size(self):
        with pytest.raises(OddSizeError):
            build_witness(PointSet.of([(0, 0), (1, 0), (0, 1)]))


class TestOneInteriorEvenK:
    def test_triangle_plus_center(self):
        ps = PointSet.of(TRIANGLE_PLUS_CENTER)
        result = build_witness(ps)
        assert_sound(ps, result)
        assert result.trace.case_tag == CASE_EVEN_K
        assert count_matchings(ps) == 3 > catalan(2)

    def test_eight_points_pierces_middle_edge(self):
        checked = 0
        for seed in range(120):
            ps = disk_set(8, seed, kind="one_interior")
            result = build_witness(ps)
            assert_sound(ps, result)
            assert result.trace.case_tag == CASE_EVEN_K
            # the pierced edge sits at positions k-1, k of the rotated hull
            (a1, q), (c, d) = result.trace.piercing_pair
            hull = convex_hull(ps).hull
            pos = hull.index(a1)
            labels = hull[pos:] + hull[:pos]
            assert (c, d) == (labels[3], labels[4])
            assert q == convex_hull(ps).interior[0]
            checked += 1
            if checked >= 25:
                break
        assert checked >= 25

    def test_halving_anchor(self):
        for seed in range(10):
            ps = disk_set(8, seed, kind="one_interior")
            result = build_witness(ps)
            (a1, q), _ = result.trace.piercing_pair
            assert side_counts(ps, a1, q) == (3, 3)


class TestOneInteriorOddK:
    def test_six_point_delta2(self):
        hit = 0
        for seed in range(60):
            ps = disk_set(6, seed, kind="one_interior")
            result = build_witness(ps)
            if not result.found:
                assert result.reason == "exceptional_six"
                continue
            assert_sound(ps, result)
            assert result.trace.case_tag == CASE_ODD_K_DELTA2
            assert result.trace.delta in (2, -2)
            # the anchored vertex has sides of sizes k-2 and k
            left, right = side_counts(ps, result.trace.j0,
                                      convex_hull(ps).interior[0])
            assert {left, right} == {1, 3}
            assert right - left == result.trace.delta
            hit += 1
        assert hit >= 20

    def test_ten_point_delta2(self):
        hit = 0
        for seed in range(300):
            ps = disk_set(10, seed, kind="one_interior")
            result = build_witness(ps)
            assert_sound(ps, result)
            if result.trace.case_tag == CASE_ODD_K_DELTA2:
                assert result.trace.delta in (2, -2)
                hit += 1
            if hit >= 10:
                break
        assert hit >= 10

    def test_all_halving_ninegon(self):
        ps = ninegon_plus_center()
        labeling = convex_hull(ps)
        assert len(labeling.interior) == 1
        q = labeling.interior[0]
        assert all(side_counts(ps, q, v) == (4, 4) for v in labeling.hull)
        result = build_witness(ps)
        assert_sound(ps, result)
        assert result.trace.case_tag == CASE_ODD_K_ALL_HALVING
        # A1 Q pierces the chord two past the halfway edge
        (a1, _q), (c, d) = result.trace.piercing_pair
        labels = labeling.hull
        assert a1 == labels[0]
        assert (c, d) == (labels[3], labels[6])
        assert count_matchings(ps) > catalan(5)

    def test_exceptional_routes_to_brute_force(self, exceptional_ps):
        result = build_witness_one_interior(exceptional_ps)
        assert not result.found
        assert result.reason == "exceptional_six"


class TestManyInterior:
    def test_g1_trace_fields(self, g1_ps):
        result = build_witness_many_interior(g1_ps)
        assert_sound(g1_ps, result)
        t = result.trace
        assert t.q == 4 and t.r == 5
        assert t.s1 is not None and t.s2 is not None
        assert len(t.s1) + len(t.s2) == len(g1_ps) - 2
        assert len(t.s1) % 2 == len(t.s2) % 2

    def test_split_sides_are_consistent(self):
        for n, seed in ((6, 0), (8, 0), (10, 1), (8, 5)):
            ps = disk_set(n, seed, kind="many_interior")
            result = build_witness_many_interior(ps)
            assert_sound(ps, result)
            t = result.trace
            # find the anchor segment A1 Q in the matching
            a1 = next(
                seg for seg in result.matching.pairs if t.q in seg and seg != (t.q, t.q)
            )
            a1 = a1[0] if a1[1] == t.q else a1[1]
            pts = ps.points
            side1 = {orient(pts[a1], pts[t.q], pts[i]) for i in t.s1}
            side2 = {orient(pts[a1], pts[t.q], pts[i]) for i in t.s2}
            assert len(side1) == 1 and len(side2) == 1
            assert side1 != side2

    def test_both_parity_branches(self):
        # seeds found by search: (n, seed) pairs landing in each branch
        odd = [(8, 0), (6, 1), (8, 1)]
        even = [(6, 0), (10, 0), (10, 1)]
        for n, seed in odd:
            ps = disk_set(n, seed, kind="many_interior")
            result = build_witness_many_interior(ps)
            assert_sound(ps, result)
            assert result.trace.r_prime is None
            assert len(result.trace.s1) % 2 == 1
        for n, seed in even:
            ps = disk_set(n, seed, kind="many_interior")
            result = build_witness_many_interior(ps)
            assert_sound(ps, result)
            assert result.trace.r_prime is not None
            assert len(result.trace.s1) % 2 == 0

    def test_even_branch_forces_r_prime_segment(self):
        for n, seed in ((6, 0), (10, 0), (10, 1), (6, 2)):
            ps = disk_set(n, seed, kind="many_interior")
            result = build_witness_many_interior(ps)
            t = result.trace
            (a2, rp), (a1, q) = t.piercing_pair
            assert rp == t.r_prime
            assert (min(a2, rp), max(a2, rp)) in result.matching.pairs

    def test_triangle_in_triangle(self):
        ps = PointSet.of([(0, 0), (60, 0), (25, 50), (25, 12), (31, 19), (22, 21)])
        result = build_witness(ps)
        assert_sound(ps, result)
        assert count_matchings(ps) > catalan(3)


class TestPreconditions:
    def test_one_interior_wrong_count(self, g1_ps, exceptional_ps):
        with pytest.raises(PreconditionError):
            build_witness_one_interior(g1_ps)  # two interior points
        with pytest.raises(PreconditionError):
            build_witness_many_interior(exceptional_ps)  # one interior point

    def test_convex_rejected_by_both(self):
        ps = circle_set(8)
        with pytest.raises(PreconditionError):
            build_witness_one_interior(ps)
        with pytest.raises(PreconditionError):
            build_witness_many_interior(ps)


class TestOracleEquivalence:
    def test_matches_exhaustive_search(self):
        for seed in range(40):
            for n in (4, 6, 8, 10):
                ps = disk_set(n, seed)
                result = build_witness(ps)
                oracle = exists_piercing_matching(ps)
                assert result.found == (oracle is not None)
                if result.found:
                    assert_sound(ps, result)
                    assert count_matchings(ps) > catalan(n // 2)
