import numpy as np
import pytest

from splinefit.errors import NumericFailure, ParameterRangeError
from splinefit.geometry import (
    CardinalSegment,
    PointChain,
    cardinal_derivative,
    cardinal_matrix,
    cardinal_segments,
    eval_cardinal,
    extend_chain,
    sample_cardinal,
    segment_tangents,
)


def test_half_tension_is_catmull_rom():
    catmull_rom = 0.5 * np.array(
        [
            [-1.0, 3.0, -3.0, 1.0],
            [2.0, -5.0, 4.0, -1.0],
            [-1.0, 0.0, 1.0, 0.0],
            [0.0, 2.0, 0.0, 0.0],
        ]
    )
    np.testing.assert_allclose(cardinal_matrix(0.5), catmull_rom)


def test_extend_chain_repeats_ends(zigzag):
    extended = extend_chain(zigzag)
    assert len(extended) == len(zigzag) + 2
    np.testing.assert_array_equal(extended[0], zigzag[0])
    np.testing.assert_array_equal(extended[-1], zigzag[-1])


@pytest.mark.parametrize("tau", [0.0, 0.5, 1.0, 1.7])
def test_segments_interpolate_data(zigzag, tau):
    segments = cardinal_segments(zigzag, tau)
    assert len(segments) == len(zigzag) - 1
    for k, segment in enumerate(segments):
        np.testing.assert_allclose(
            eval_cardinal(segment, 0.0), zigzag[k], atol=1e-12
        )
        np.testing.assert_allclose(
            eval_cardinal(segment, 1.0), zigzag[k + 1], atol=1e-12
        )


@pytest.mark.parametrize("tau", [0.3, 0.5, 1.2])
def test_end_tangents_match_neighbour_differences(square_wave, tau):
    for segment in cardinal_segments(square_wave, tau):
        start, end = segment_tangents(segment)
        np.testing.assert_allclose(cardinal_derivative(segment, 0.0), start, atol=1e-12)
        np.testing.assert_allclose(cardinal_derivative(segment, 1.0), end, atol=1e-12)


def test_spline_is_c1_at_data_points(square_wave):
    segments = cardinal_segments(square_wave, 0.5)
    for left, right in zip(segments, segments[1:]):
        np.testing.assert_allclose(
            left.derivative(1.0), right.derivative(0.0), atol=1e-12
        )


def test_zero_tension_has_flat_tangents(zigzag):
    for segment in cardinal_segments(zigzag, 0.0):
        np.testing.assert_allclose(segment.derivative(0.0), 0.0, atol=1e-12)
        np.testing.assert_allclose(segment.derivative(1.0), 0.0, atol=1e-12)


def test_two_point_chain_is_a_straight_segment():
    chain = PointChain([(0.0, 0.0), (3.0, 6.0)])
    (segment,) = cardinal_segments(chain, 0.5)
    for u in np.linspace(0.0, 1.0, 7):
        point = segment.evaluate(u)
        assert point[1] == pytest.approx(2.0 * point[0])


def test_sample_shares_junction_samples(zigzag):
    samples = sample_cardinal(zigzag, 0.5, 8)
    assert samples.shape == ((len(zigzag) - 1) * 7 + 1, 2)
    np.testing.assert_allclose(samples[::7], zigzag.points, atol=1e-12)


def test_parameter_outside_unit_interval(zigzag):
    segment = cardinal_segments(zigzag)[0]
    with pytest.raises(ParameterRangeError):
        eval_cardinal(segment, 1.01)
    with pytest.raises(ParameterRangeError):
        cardinal_derivative(segment, -0.5)


@pytest.mark.parametrize("tau", [0.5, 1.3])
def test_derivative_matches_central_differences(square_wave, tau):
    h = 1e-6
    for segment in cardinal_segments(square_wave, tau):
        for u in np.linspace(0.05, 0.95, 10):
            forward = eval_cardinal(segment, u + h)
            backward = eval_cardinal(segment, u - h)
            numeric = (forward - backward) / (2.0 * h)
            np.testing.assert_allclose(cardinal_derivative(segment, u), numeric, atol=1e-6)


def test_coordinates_are_evaluated_independently(chain_4d):
    for segment in cardinal_segments(chain_4d, 0.7):
        for u in (0.0, 0.3, 0.8):
            joint = eval_cardinal(segment, u)
            for axis in range(chain_4d.dim):
                single = CardinalSegment(segment.controls[:, [axis]], segment.tau)
                assert eval_cardinal(single, u)[0] == pytest.approx(joint[axis])


def test_overflowing_coordinates_are_a_numeric_failure():
    chain = PointChain([(0.0, 0.0), (1.7e308, 0.0), (-1.7e308, 1.0), (1.7e308, 2.0)])
    with pytest.raises(NumericFailure):
        sample_cardinal(chain, 0.5, 8)
