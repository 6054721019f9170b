import xml.etree.ElementTree as ET

from planematch.matchings import enumerate_matchings
from planematch.svg import render_svg
from planematch.witness import build_witness

SVG_NS = "{http://www.w3.org/2000/svg}"


def parse(svg_text):
    return ET.fromstring(svg_text)


def count_tags(root, tag):
    return len(root.findall(f".//{SVG_NS}{tag}"))


class TestRenderSvg:
    def test_points_only(self, exceptional_ps):
        root = parse(render_svg(exceptional_ps))
        assert count_tags(root, "circle") == 6
        assert count_tags(root, "line") == 0

    def test_with_matching(self, exceptional_ps):
        m = enumerate_matchings(exceptional_ps)[0]
        root = parse(render_svg(exceptional_ps, m))
        assert count_tags(root, "circle") == 6
        assert count_tags(root, "line") == 3

    def test_highlight_adds_one_dashed_line(self, g1_ps):
        result = build_witness(g1_ps)
        svg = render_svg(g1_ps, result.matching, result.trace.piercing_pair)
        root = parse(svg)
        dashed = [
            el for el in root.findall(f".//{SVG_NS}line")
            if el.get("stroke-dasharray")
        ]
        assert len(dashed) == 1
        assert count_tags(root, "line") == len(g1_ps) // 2 + 1

    def test_deterministic(self, g1_ps):
        result = build_witness(g1_ps)
        a = render_svg(g1_ps, result.matching, result.trace.piercing_pair)
        b = render_svg(g1_ps, result.matching, result.trace.piercing_pair)
        assert a == b

    def test_well_formed_for_degenerate_extents(self):
        from planematch.geometry import PointSet

        ps = PointSet.of([(5, 0), (5, 7)])  # zero width
        root = parse(render_svg(ps))
        assert count_tags(root, "circle") == 2
