import pytest

from planematch.classify import classify
from planematch.errors import GenerationExhaustedError, PreconditionError
from planematch.generators import (
    EXCEPTIONAL_COORDS,
    GeneratorSpec,
    generate,
)
from planematch.geometry import convex_hull, is_convex_position
from planematch.classify import is_exceptional_six
from planematch.matchings import count_matchings
from planematch.witness import build_witness


class TestSpecValidation:
    def test_unknown_kind(self):
        with pytest.raises(PreconditionError):
            GeneratorSpec(kind="spiral")

    def test_odd_n(self):
        with pytest.raises(PreconditionError):
            GeneratorSpec(kind="random_disk", n=7)

    def test_exceptional_ignores_n(self):
        ps = generate(GeneratorSpec(kind="exceptional", n=6))
        assert ps.coords() == EXCEPTIONAL_COORDS


class TestDeterminism:
    @pytest.mark.parametrize("kind", ["convex", "random_disk", "one_interior",
                                      "many_interior"])
    def test_same_spec_same_points(self, kind):
        spec = GeneratorSpec(kind=kind, n=8, seed=42, radius=2000)
        assert generate(spec).coords() == generate(spec).coords()

    def test_different_seeds_differ(self):
        a = generate(GeneratorSpec(kind="random_disk", n=8, seed=1, radius=2000))
        b = generate(GeneratorSpec(kind="random_disk", n=8, seed=2, radius=2000))
        assert a.coords() != b.coords()


class TestKinds:
    def test_exceptional_properties(self):
        ps = generate(GeneratorSpec(kind="exceptional"))
        assert is_exceptional_six(ps)
        assert count_matchings(ps) == 5

    def test_convex(self):
        ps = generate(GeneratorSpec(kind="convex", n=8, seed=1))
        assert is_convex_position(ps)
        assert count_matchings(ps) == 14

    def test_one_interior(self):
        for seed in range(10):
            ps = generate(GeneratorSpec(kind="one_interior", n=6, seed=seed,
                                        radius=2000))
            assert len(convex_hull(ps).interior) == 1
            if classify(ps) == "generic":
                assert build_witness(ps).found

    def test_many_interior(self):
        for seed in range(5):
            ps = generate(GeneratorSpec(kind="many_interior", n=8, seed=seed,
                                        radius=2000))
            assert len(convex_hull(ps).interior) >= 2

    def test_random_disk_in_bounds(self):
        r = 500
        ps = generate(GeneratorSpec(kind="random_disk", n=10, seed=3, radius=r))
        assert all(x * x + y * y <= r * r for x, y in ps.coords())

    def test_exhaustion(self):
        # two interior points are impossible with four points
        with pytest.raises(GenerationExhaustedError):
            generate(GeneratorSpec(kind="many_interior", n=4, seed=0),
                     max_attempts=3000)
