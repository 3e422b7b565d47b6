import numpy as np
import pytest

from splinefit.errors import JunctionMismatchError, NumericFailure, ParameterRangeError
from splinefit.geometry import (
    BezierSegment,
    PiecewiseBezier,
    PointChain,
    bezier_derivative,
    bezier_second_derivative,
    cardinal_bezier_controls,
    cardinal_segments,
    cardinal_to_bezier,
    eval_bezier,
)

SEGMENT = BezierSegment([(0.0, 0.0), (1.0, 2.0), (3.0, 2.0), (4.0, 0.0)])


def test_endpoints_are_interpolated():
    np.testing.assert_allclose(eval_bezier(SEGMENT, 0.0), (0.0, 0.0))
    np.testing.assert_allclose(eval_bezier(SEGMENT, 1.0), (4.0, 0.0))


def test_end_tangents_are_three_times_the_legs():
    np.testing.assert_allclose(bezier_derivative(SEGMENT, 0.0), (3.0, 6.0))
    np.testing.assert_allclose(bezier_derivative(SEGMENT, 1.0), (3.0, -6.0))


@pytest.mark.parametrize("u", np.linspace(0.0, 1.0, 9))
def test_power_form_agrees_with_bernstein_sum(u):
    power = np.array([u**3, u**2, u, 1.0]) @ SEGMENT.coefficients
    np.testing.assert_allclose(power, eval_bezier(SEGMENT, u), atol=1e-12)


def test_derivative_matches_finite_difference():
    h = 1e-6
    numeric = (eval_bezier(SEGMENT, 0.3 + h) - eval_bezier(SEGMENT, 0.3 - h)) / (2.0 * h)
    np.testing.assert_allclose(bezier_derivative(SEGMENT, 0.3), numeric, atol=1e-6)


def test_overflowing_controls_are_a_numeric_failure():
    points = np.array([(0.0, 0.0), (1.7e308, 0.0), (-1.7e308, 1.0), (1.7e308, 2.0)])
    with pytest.raises(NumericFailure):
        cardinal_bezier_controls(points)


@pytest.mark.parametrize("u", [0.0, 0.25, 0.6, 1.0])
def test_second_derivative_of_power_form(u):
    a, b = SEGMENT.coefficients[:2]
    np.testing.assert_allclose(
        bezier_second_derivative(SEGMENT, u), 6.0 * a * u + 2.0 * b, atol=1e-12
    )


def test_parameter_outside_unit_interval():
    with pytest.raises(ParameterRangeError):
        eval_bezier(SEGMENT, 1.5)


def test_inner_controls_from_neighbour_differences():
    chain = PointChain([(0.0, 0.0), (1.0, 0.0), (2.0, 1.0), (3.0, 1.0)])
    tau = 0.5
    pw = cardinal_to_bezier(chain, tau)
    p = chain.points
    middle = pw[1].controls
    np.testing.assert_allclose(middle[1], p[1] + tau / 3.0 * (p[2] - p[0]))
    np.testing.assert_allclose(middle[2], p[2] - tau / 3.0 * (p[3] - p[1]))
    # the repeated first point shortens the first leg
    np.testing.assert_allclose(pw[0].controls[1], p[0] + tau / 3.0 * (p[1] - p[0]))


@pytest.mark.parametrize("tau", [0.0, 0.5, 1.3])
def test_bezier_pieces_reproduce_cardinal_spline(square_wave, tau):
    pw = cardinal_to_bezier(square_wave, tau)
    for piece, segment in zip(pw, cardinal_segments(square_wave, tau)):
        for u in np.linspace(0.0, 1.0, 11):
            np.testing.assert_allclose(
                piece.evaluate(u), segment.evaluate(u), atol=1e-12
            )


def test_piecewise_bezier_layout(zigzag):
    pw = cardinal_to_bezier(zigzag)
    assert len(pw) == len(zigzag) - 1
    controls = pw.control_points()
    assert controls.shape == (3 * len(pw) + 1, 2)
    np.testing.assert_array_equal(controls[::3], zigzag.points)
    np.testing.assert_array_equal(pw.knots(), zigzag.points)


def test_piecewise_bezier_is_c1(zigzag):
    pw = cardinal_to_bezier(zigzag, 0.8)
    np.testing.assert_allclose(pw.junction_tangent_gaps(), 0.0, atol=1e-12)


def test_global_parameter_hits_data_points(zigzag):
    pw = cardinal_to_bezier(zigzag)
    for index, point in enumerate(zigzag.points):
        np.testing.assert_allclose(pw.evaluate(float(index)), point, atol=1e-12)
    with pytest.raises(ParameterRangeError):
        pw.evaluate(len(pw) + 0.5)


def test_sample_lists_junctions_once(zigzag):
    pw = cardinal_to_bezier(zigzag)
    params, points = pw.sample(5)
    assert params.shape == (len(pw) * 4 + 1,)
    assert points.shape == (len(pw) * 4 + 1, 2)
    np.testing.assert_allclose(params[::4], np.arange(len(zigzag)))
    assert np.all(np.diff(params) > 0)


def test_broken_junction_is_rejected():
    a = BezierSegment([(0, 0), (1, 1), (2, 1), (3, 0)])
    b = BezierSegment([(3, 0.5), (4, 1), (5, 1), (6, 0)])
    with pytest.raises(JunctionMismatchError):
        PiecewiseBezier((a, b))
