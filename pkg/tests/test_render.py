from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from svrkit.geometry import Coord, Drawing, Family, lshape, rect
from svrkit.paths import lsvr_paths
from svrkit.render import RenderConfig, materialize, render_svg

from test_visibility import drawings


def test_eps_bound_enforced():
    d = Drawing((rect(Coord(0), Coord(1, 2), 0, 1),), Family.RECT)
    assert RenderConfig().eps_for(d) == Fraction(1, 12)
    with pytest.raises(ValueError):
        RenderConfig(eps_substitute=Fraction(1, 6)).eps_for(d)
    with pytest.raises(ValueError):
        RenderConfig(eps_substitute=Fraction(0)).eps_for(d)


@given(drawings(), st.integers(1, 50))
def test_rendered_order_equals_exact_order(d, k):
    m = max(abs(c.eps) for s in d for c in (s.l, s.r, s.b, s.t))
    eps = Fraction(1, 2 * (m + 1)) * Fraction(k, 51)
    cs = [c for s in d for c in (s.l, s.r, s.b, s.t)]
    for a in cs:
        for b in cs:
            assert (a < b) == (materialize(a, eps) < materialize(b, eps))


def test_svg_structure():
    d = lsvr_paths((4, 3, 5, 2, 1))
    svg = render_svg(d, [(1, 2)], [(2, 3)])
    assert svg.count("<path") == 5 and svg.count("<line") == 2
    assert 'stroke="red"' in svg and 'stroke="blue"' in svg
    plain = render_svg(d, [(1, 2)], [(2, 3)], RenderConfig(sight_lines=False))
    assert "<line" not in plain
    assert render_svg(d) == render_svg(d)


def test_lshape_sight_line_starts_at_bar():
    # The upper L sits above the lower one's horizontal bar, away from its corner.
    d = Drawing((lshape(0, 0, Coord(4), Coord(4)), lshape(2, 1, Coord(1), Coord(1))), Family.LSHAPE)
    svg = render_svg(d, [(1, 2)], [], RenderConfig(scale=1, margin=0))
    assert '<line x1="2.000" y1="4.000" x2="2.000" y2="3.000"' in svg
