"""
Drawing symbols
===============

Two pictures are available: the chord diagram of the pairing involution
(arcs as dots on a circle, partners joined, elliptic arcs as filled or
hollow dots), and the fundamental polygon itself in the upper half-plane
or in the unit disk.  Elliptic arcs are split at their exact interior
fixed point.  All geometry stays exact until the coordinates are written.
"""

import pathlib

from fareysym import (RenderSpec, gamma0_symbol, normalize, render_chords,
                      render_polygon)

out = pathlib.Path("out_svg")
out.mkdir(exist_ok=True)

for N in (13, 15, 37):
    sym = gamma0_symbol(N)
    (out / ("chords_%d.svg" % N)).write_text(render_chords(sym))
    (out / ("halfplane_%d.svg" % N)).write_text(
        render_polygon(sym, RenderSpec(style="halfplane")))
    (out / ("disk_%d.svg" % N)).write_text(
        render_polygon(sym, RenderSpec(style="disk")))
    print("level %d: chords, half-plane and disk pictures written" % N)

# the normalized polygon of level 15 needs a wider x-range: its vertices
# crowd toward small rationals
norm = normalize(gamma0_symbol(15))
spec = RenderSpec(style="halfplane", xmin=-0.1, xmax=1.1)
(out / "halfplane_15_normalized.svg").write_text(render_polygon(norm, spec))
print("normalized level-15 polygon written")
print("files in", out.resolve())
