import numpy as np
import pytest

from splinefit.errors import FitInputError, ParameterRangeError
from splinefit.geometry import (
    CUBIC_ORDER,
    BezierSegment,
    BSplineCurve,
    KnotVector,
    basis,
    bspline_from_bezier_controls,
    build_bezier_knot_vector,
    build_knot_vector,
    cardinal_to_bezier,
    eval_bezier,
    eval_bspline,
)


def test_knot_schedule_for_four_controls():
    assert build_knot_vector(4).tolist() == [0, 0, 0, 0, 1, 1, 1, 1]


def test_knot_schedule_for_seven_controls():
    assert build_knot_vector(7).tolist() == [0, 0, 0, 0, 1, 2, 3, 4, 4, 4, 4]


@pytest.mark.parametrize("count", range(4, 13))
def test_knot_schedule_shape(count):
    knots = build_knot_vector(count)
    assert len(knots) == count + CUBIC_ORDER
    assert knots[0] == 0
    assert knots[-1] == count - CUBIC_ORDER + 1
    assert np.all(np.diff(knots.values) >= 0)


def test_too_few_controls():
    with pytest.raises(FitInputError):
        build_knot_vector(3)


def test_knots_must_not_decrease():
    with pytest.raises(FitInputError):
        KnotVector([0, 1, 0.5])


def test_bezier_exact_knots_repeat_interior_values():
    assert build_bezier_knot_vector(2).tolist() == [0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2]


@pytest.mark.parametrize("count", [4, 6, 9])
@pytest.mark.parametrize("u", [0.0, 0.3, 1.0, 1.5, 2.999])
def test_basis_is_partition_of_unity(count, u):
    knots = build_knot_vector(count)
    u = min(u, knots[-1])
    total = sum(basis(i, CUBIC_ORDER, u, knots) for i in range(count))
    assert total == pytest.approx(1.0)


def test_basis_at_domain_end_picks_last_control():
    knots = build_knot_vector(6)
    end = knots[-1]
    assert basis(5, CUBIC_ORDER, end, knots) == pytest.approx(1.0)
    assert basis(0, CUBIC_ORDER, end, knots) == 0.0


def test_basis_outside_domain():
    with pytest.raises(ParameterRangeError):
        basis(0, CUBIC_ORDER, 5.0, build_knot_vector(6))


def _curve(count: int) -> BSplineCurve:
    rng = np.random.default_rng(count)
    controls = np.cumsum(rng.normal(size=(count, 2)), axis=0)
    return BSplineCurve(controls, build_knot_vector(count))


@pytest.mark.parametrize("count", range(4, 13))
def test_curve_ends_on_first_and_last_control(count):
    curve = _curve(count)
    low, high = curve.domain
    np.testing.assert_allclose(
        eval_bspline(curve, low), curve.controls[0], atol=1e-12
    )
    np.testing.assert_allclose(
        eval_bspline(curve, high), curve.controls[-1], atol=1e-12
    )


@pytest.mark.parametrize("count", range(5, 13))
def test_curve_is_c2_at_interior_knots(count):
    curve = _curve(count)
    for knot in curve.interior_knots():
        for derivative in (0, 1, 2):
            left = curve.evaluate(knot, derivative, side="left")
            right = curve.evaluate(knot, derivative, side="right")
            np.testing.assert_allclose(left, right, atol=1e-9)


@pytest.mark.parametrize("count", range(4, 13))
def test_curve_stays_in_control_bounding_box(count):
    curve = _curve(count)
    _, points = curve.sample(101)
    low = curve.controls.min(axis=0) - 1e-12
    high = curve.controls.max(axis=0) + 1e-12
    assert np.all(points >= low) and np.all(points <= high)


def test_derivative_curve_matches_difference_quotient():
    curve = _curve(8)
    h = 1e-6
    for u in (0.5, 1.7, 3.2):
        quotient = (curve.evaluate(u + h) - curve.evaluate(u - h)) / (2.0 * h)
        np.testing.assert_allclose(curve.evaluate(u, 1), quotient, atol=1e-5)


def test_knot_count_must_match_controls():
    with pytest.raises(FitInputError):
        BSplineCurve(np.zeros((5, 2)), build_knot_vector(4))


def test_curve_from_bezier_controls(zigzag):
    pw = cardinal_to_bezier(zigzag)
    curve = bspline_from_bezier_controls(pw)
    assert curve.controls.shape == (3 * len(pw) + 1, 2)
    np.testing.assert_array_equal(curve.controls, pw.control_points())
    assert curve.domain == (0.0, float(curve.controls.shape[0] - CUBIC_ORDER + 1))


def test_bezier_exact_curve_reproduces_pieces(square_wave):
    pw = cardinal_to_bezier(square_wave)
    curve = bspline_from_bezier_controls(pw, bezier_exact=True)
    assert curve.domain == (0.0, float(len(pw)))
    for s in np.linspace(0.0, len(pw), 37):
        np.testing.assert_allclose(curve.evaluate(s), pw.evaluate(s), atol=1e-12)


def test_accepts_a_plain_segment_list(zigzag):
    pw = cardinal_to_bezier(zigzag)
    curve = bspline_from_bezier_controls(list(pw))
    np.testing.assert_array_equal(curve.controls, pw.control_points())


@pytest.mark.parametrize("count", [4, 7, 12])
def test_basis_is_non_negative_with_local_support(count):
    knots = build_knot_vector(count)
    t = knots.values
    for u in np.linspace(0.0, t[-1], 23):
        for i in range(count):
            value = basis(i, CUBIC_ORDER, u, knots)
            assert value >= 0.0
            if not t[i] <= u <= t[i + CUBIC_ORDER]:
                assert value == 0.0


def test_single_segment_equals_bernstein_form():
    controls = np.array([(0.0, 0.0), (1.0, 3.0), (2.0, -1.0), (4.0, 0.5)])
    curve = BSplineCurve(controls, build_knot_vector(4))
    segment = BezierSegment(controls)
    for u in np.linspace(0.0, 1.0, 17):
        np.testing.assert_allclose(curve.evaluate(u), eval_bezier(segment, u), atol=1e-12)
