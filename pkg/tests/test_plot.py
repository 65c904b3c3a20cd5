"""Plot model enumeration and SVG rendering."""

from collections import Counter
from fractions import Fraction

import pytest

from floorcomm.classify import is_member
from floorcomm.floorfn import DilationPair
from floorcomm.plot import PlotSpec, SporadicPoint, build_plot_model, render_svg


def _spec(**overrides):
    base = dict(
        alpha_min=Fraction(-2),
        alpha_max=Fraction(2),
        beta_min=Fraction(-2),
        beta_max=Fraction(2),
    )
    base.update(overrides)
    return PlotSpec(**base)


def test_default_model_element_counts():
    model = build_plot_model(_spec())
    kinds = Counter(curve.kind for curve in model.curves)
    assert kinds == {
        "vertical": 2,
        "oblique": 2,
        "pos_hyperbola": 4,
        "neg_line": 2,
        "neg_hyperbola": 4,
    }
    assert [(seg.p, seg.q) for seg in model.segments] == [(1, 1), (1, 2), (2, 1), (2, 3)]
    assert model.sporadics == (
        SporadicPoint(1, 2, 0, 1, 2, Fraction(-2), Fraction(-4, 3)),
    )
    assert model.mixed_region == (Fraction(-2), Fraction(0), Fraction(0), Fraction(2))


def test_rendering_is_deterministic():
    spec = _spec()
    first = render_svg(build_plot_model(spec))
    second = render_svg(build_plot_model(spec))
    assert first == second


def test_no_curves_when_bound_is_zero():
    model = build_plot_model(_spec(curve_bound=0))
    assert model.curves == ()


def test_first_quadrant_viewbox_drops_negative_layers():
    model = build_plot_model(_spec(alpha_min=Fraction(0), beta_min=Fraction(0)))
    assert model.mixed_region is None
    assert model.segments == () and model.sporadics == ()
    assert all(curve.kind in ("vertical", "oblique", "pos_hyperbola") for curve in model.curves)


def test_curve_points_stay_inside_viewbox():
    spec = _spec(curve_bound=3, den_bound=3, sporadic_r_bound=3)
    model = build_plot_model(spec)
    for curve in model.curves:
        assert len(curve.points) >= 2
        for a, b in curve.points:
            assert spec.alpha_min <= a <= spec.alpha_max
            assert spec.beta_min <= b <= spec.beta_max


def test_plotted_families_reclassify_as_members():
    model = build_plot_model(_spec(curve_bound=3, den_bound=3, sporadic_r_bound=4))
    assert model.sporadics
    for point in model.sporadics:
        assert is_member(DilationPair(point.alpha, point.beta)), point
    for seg in model.segments:
        midpoint = (seg.beta_lo + seg.beta_hi) / 2
        assert is_member(DilationPair(seg.alpha, midpoint)), seg
        assert is_member(DilationPair(seg.alpha, Fraction(-1, seg.p)))


def test_hyperbola_samples_lie_on_their_curves():
    model = build_plot_model(_spec())
    for curve in model.curves:
        for a, b in curve.points:
            if curve.kind == "pos_hyperbola":
                assert curve.m * a * b + curve.n * a == b
            elif curve.kind in ("neg_hyperbola", "neg_line"):
                assert curve.m * a * b - curve.n * b == -a


def test_spec_validation():
    with pytest.raises(ValueError):
        _spec(alpha_min=Fraction(2))  # empty box
    with pytest.raises(ValueError):
        _spec(curve_bound=-1)
    with pytest.raises(ValueError):
        _spec(sporadic_r_bound=0)
    with pytest.raises(ValueError):
        _spec(samples=1)


def test_svg_structure():
    svg = render_svg(build_plot_model(_spec()))
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    for group in (
        "axes",
        "mixed-sign-region",
        "positive-lines",
        "positive-hyperbolas",
        "negative-curves",
        "vertical-segments",
        "sporadic-points",
    ):
        assert f'<g id="{group}">' in svg
    assert 'data-alpha="-2" data-beta="-4/3"' in svg
