import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from fareysym.exact import FareyError
from fareysym.render import (RenderSpec, order2_center, order3_center,
                             render_chords, render_polygon)


def counts_in(svg):
    return (svg.count('class="chord"'), svg.count('class="dot3"'),
            svg.count('class="dot2"'))


class TestChords:
    @pytest.mark.parametrize("N,chords,dot3,dot2", [
        (15, 5, 0, 0),
        (13, 1, 2, 2),
        (1, 0, 1, 1),
    ])
    def test_fixture_counts(self, symbol_for, N, chords, dot3, dot2):
        svg = render_chords(symbol_for(N))
        assert counts_in(svg) == (chords, dot3, dot2)
        ET.fromstring(svg)

    def test_counts_match_classification(self, symbol_for):
        for N in range(1, 51):
            s = symbol_for(N)
            svg = render_chords(s)
            cc = s.class_counts()
            chords, dot3, dot2 = counts_in(svg)
            assert chords == cc["hyperbolic"] + cc["parabolic"], N
            assert dot3 == cc["elliptic3"] and dot2 == cc["elliptic2"], N

    def test_deterministic_bytes(self, symbol_for):
        a = render_chords(symbol_for(22))
        b = render_chords(symbol_for(22))
        assert a == b


class TestPolygon:
    def test_infinity_ray_is_vertical_line(self, symbol_for):
        svg = render_polygon(symbol_for(2), RenderSpec(style="halfplane"))
        # arc (infinity, 0): a straight segment at the x of 0
        assert '<line' in svg or ' L ' in svg
        ET.fromstring(svg)

    def test_semicircle_geometry(self, symbol_for):
        spec = RenderSpec(style="halfplane", width=600, height=400,
                          xmin=-0.25, xmax=1.25)
        svg = render_polygon(symbol_for(1), spec)
        # the full arcs are emitted as SVG A-paths with one radius
        assert ' A ' in svg
        ET.fromstring(svg)

    def test_order2_center_exact(self, symbol_for):
        s = symbol_for(2)
        i = next(i for i, mu in s.ell.items() if mu == 2)
        assert s.arc(i)[0].num == 0  # the elliptic arc (0, 1)
        assert order2_center(s, i) == (Fraction(1, 2), Fraction(1, 2))

    def test_order3_center_fixed_by_gluing(self, symbol_for):
        # the order-3 rotation must fix its interior point: check the exact
        # coordinates satisfy g(z) = z via the quadratic it solves
        s = symbol_for(13)
        i = next(i for i, mu in s.ell.items() if mu == 3)
        x, y = order3_center(s, i)  # the point is x + y*sqrt(3)*i
        g = s.gluing(i)
        # g fixes z iff c z^2 + (d - a) z - b = 0; plug in z = x + i y sqrt 3
        a, b, c, d = g.entries()
        re = c * (x * x - 3 * y * y) + (d - a) * x - b
        im = c * 2 * x * y + (d - a) * y
        assert re == 0 and im == 0

    def test_disk_style(self, symbol_for):
        svg = render_polygon(symbol_for(13), RenderSpec(style="disk"))
        assert "polyline" in svg
        ET.fromstring(svg)

    def test_deterministic(self, symbol_for):
        spec = RenderSpec(style="halfplane")
        assert render_polygon(symbol_for(37), spec) == \
            render_polygon(symbol_for(37), spec)


class TestSpec:
    def test_bad_dimensions(self):
        with pytest.raises(FareyError):
            RenderSpec(width=0)
        with pytest.raises(FareyError):
            RenderSpec(xmin=2.0, xmax=1.0)
