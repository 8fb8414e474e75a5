import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multiell.errors import DegenerateEllipse, InvalidGeometry
from multiell.geometry import (DEGENERATE_DELAY_S, SPEED_OF_LIGHT_M_S, Ellipse,
                               aoa_from_aod, aod_from_aoa, arrival_bearing,
                               ellipse_from_delay, reflection_point, wrap_degrees)

ECC = st.floats(min_value=0.0, max_value=0.99, allow_nan=False)
ANGLE = st.floats(min_value=-179.9999, max_value=180.0, allow_nan=False)


def ellipse_with(e, a=200.0, index=1):
    return Ellipse(semi_major_m=a, focal_half_distance_m=a * e, eccentricity=e,
                   cluster_index=index)


def oracle_aoa(phi_t_deg, e, a=200.0):
    """Geometric arrival angle: cast the ray (re-referenced toward the
    receiver), intersect the ellipse, take the bearing at the Rx focus."""
    ell = ellipse_with(e, a)
    point = reflection_point(180.0 - phi_t_deg, ell)
    return arrival_bearing(point, ell)


class TestEllipseFromDelay:
    def test_total_path_twice_distance(self):
        # excess delay equal to the direct-path delay doubles the path length
        d = 200.0
        ell = ellipse_from_delay(d / SPEED_OF_LIGHT_M_S, d)
        assert ell.semi_major_m == pytest.approx(200.0, abs=1e-9)
        assert ell.eccentricity == pytest.approx(0.5, abs=1e-12)
        assert ell.focal_half_distance_m == 100.0

    def test_long_delay_low_eccentricity(self):
        ell = ellipse_from_delay(1.0, 200.0)  # one full second of excess delay
        assert ell.eccentricity < 1e-6

    def test_reference_values_363ns(self):
        # independent arithmetic: a = (200 + c * 363e-9) / 2
        ell = ellipse_from_delay(363e-9, 200.0)
        assert ell.semi_major_m == pytest.approx(154.412331127, abs=1e-6)
        assert ell.eccentricity == pytest.approx(0.647616672, abs=1e-6)

    def test_degenerate_delay_raises(self):
        with pytest.raises(DegenerateEllipse):
            ellipse_from_delay(DEGENERATE_DELAY_S, 200.0)
        with pytest.raises(DegenerateEllipse):
            ellipse_from_delay(0.0, 200.0)

    def test_bad_distance_raises(self):
        with pytest.raises(InvalidGeometry):
            ellipse_from_delay(1e-6, 0.0)
        with pytest.raises(InvalidGeometry):
            ellipse_from_delay(1e-6, -3.0)

    def test_invariants_random(self, rng):
        for _ in range(200):
            delay = 10 ** rng.uniform(-9.5, -5.0)
            d = 10 ** rng.uniform(0.5, 4.0)
            ell = ellipse_from_delay(delay, d)
            assert 0.0 < ell.eccentricity < 1.0
            assert ell.eccentricity == pytest.approx(
                ell.focal_half_distance_m / ell.semi_major_m, rel=1e-12)
            assert ell.semi_major_m > ell.focal_half_distance_m


class TestAoaFromAod:
    def test_boresight_fixed_point(self):
        assert aoa_from_aod(0.0, 0.5) == 0.0

    def test_back_direction_fixed_point(self):
        assert aoa_from_aod(180.0, 0.5) == 180.0

    def test_zero_eccentricity_identity(self):
        assert aoa_from_aod(90.0, 0.0) == pytest.approx(90.0, abs=1e-12)

    def test_reference_value(self):
        # arccos(0.8) in degrees
        assert aoa_from_aod(90.0, 0.5) == pytest.approx(36.86989764584401, abs=1e-10)

    def test_matches_arccos_closed_form(self, rng):
        # same map written as in the arccos form, evaluated independently
        for _ in range(500):
            e = rng.uniform(0.0, 0.985)
            phi = rng.uniform(-179.0, 179.0)
            c = math.cos(math.radians(phi))
            ratio = (2 * e + (1 + e * e) * c) / (1 + e * e + 2 * e * c)
            expected = math.copysign(math.degrees(math.acos(np.clip(ratio, -1, 1))), phi)
            if phi == 0.0:
                expected = abs(expected)
            assert aoa_from_aod(phi, e) == pytest.approx(expected, abs=1e-9)

    def test_vectorized(self):
        out = aoa_from_aod(np.array([0.0, 90.0, 180.0]), 0.5)
        assert out.shape == (3,)
        assert out[0] == 0.0 and out[2] == 180.0

    @given(phi=st.floats(min_value=-179.9999, max_value=179.9999), e=ECC)
    @settings(max_examples=200, deadline=None)
    def test_odd(self, phi, e):
        assert aoa_from_aod(-phi, e) == pytest.approx(-aoa_from_aod(phi, e), abs=1e-12)

    @given(lo=st.floats(min_value=0.0, max_value=180.0),
           hi=st.floats(min_value=0.0, max_value=180.0),
           e=st.floats(min_value=0.001, max_value=0.99))
    @settings(max_examples=200, deadline=None)
    def test_strictly_increasing(self, lo, hi, e):
        # strictness asserted down to a 1e-9 degree separation
        if abs(hi - lo) < 1e-9:
            return
        lo, hi = min(lo, hi), max(lo, hi)
        assert aoa_from_aod(lo, e) < aoa_from_aod(hi, e)

    @given(phi=st.floats(min_value=0.001, max_value=179.999),
           e=st.floats(min_value=0.001, max_value=0.99))
    @settings(max_examples=200, deadline=None)
    def test_compression(self, phi, e):
        out = aoa_from_aod(phi, e)
        assert 0.0 < out < phi


class TestAodFromAoa:
    def test_fixed_points(self):
        assert aod_from_aoa(0.0, 0.5) == 0.0
        assert aod_from_aoa(180.0, 0.5) == 180.0
        assert aod_from_aoa(180.0, 0.9) == 180.0

    def test_inverse_of_reference(self):
        assert aod_from_aoa(36.86989764584401, 0.5) == pytest.approx(90.0, abs=1e-9)

    @given(phi=ANGLE, e=ECC)
    @settings(max_examples=300, deadline=None)
    def test_round_trip(self, phi, e):
        assert aod_from_aoa(aoa_from_aod(phi, e), e) == pytest.approx(phi, abs=1e-9)

    def test_against_bisection_oracle(self, rng):
        # root-find the forward map rather than trusting the closed form
        for _ in range(50):
            e = rng.uniform(0.05, 0.95)
            target = rng.uniform(1.0, 179.0)
            lo, hi = 0.0, 180.0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if aoa_from_aod(mid, e) < target:
                    lo = mid
                else:
                    hi = mid
            assert aod_from_aoa(target, e) == pytest.approx(0.5 * (lo + hi), abs=1e-6)


class TestReflectionPoint:
    def test_vertex_on_major_axis(self):
        x, y = reflection_point(0.0, ellipse_with(0.5))
        assert (x, y) == pytest.approx((200.0, 0.0), abs=1e-9)

    def test_opposite_vertex(self):
        x, y = reflection_point(180.0, ellipse_with(0.5))
        assert (x, y) == pytest.approx((-200.0, 0.0), abs=1e-9)

    def test_semi_latus_rectum(self):
        # vertical ray from the Tx focus: x = -f, y = b^2 / a
        x, y = reflection_point(90.0, ellipse_with(0.5))
        assert x == pytest.approx(-100.0, abs=1e-9)
        assert y == pytest.approx((200.0**2 - 100.0**2) / 200.0, abs=1e-9)

    def test_point_on_ellipse(self, rng):
        for _ in range(300):
            e = rng.uniform(0.0, 0.99)
            a = rng.uniform(1.0, 1e4)
            ell = ellipse_with(e, a)
            x, y = reflection_point(rng.uniform(-180.0, 180.0), ell)
            b = ell.semi_minor_m
            residual = (x / a) ** 2 + (y / b) ** 2 - 1.0
            assert abs(residual) < 1e-9

    def test_path_length_invariant(self, rng):
        for _ in range(300):
            e = rng.uniform(0.0, 0.99)
            a = rng.uniform(1.0, 1e4)
            ell = ellipse_with(e, a)
            f = ell.focal_half_distance_m
            x, y = reflection_point(rng.uniform(-180.0, 180.0), ell)
            total = math.hypot(x + f, y) + math.hypot(x - f, y)
            assert total == pytest.approx(2.0 * a, rel=1e-9)


class TestOracleEquivalence:
    def test_angle_map_matches_geometry(self, rng):
        # the closed-form map must agree with the ray-intersection bearing
        worst = 0.0
        for _ in range(1000):
            e = rng.uniform(0.0, 0.99)
            phi = rng.uniform(-179.999, 180.0)
            err = abs(oracle_aoa(phi, e) - aoa_from_aod(phi, e))
            worst = max(worst, err)
        assert worst < 1e-9


class TestWrapDegrees:
    def test_interval_is_half_open(self):
        assert wrap_degrees(-180.0) == 180.0
        assert wrap_degrees(180.0) == 180.0
        assert wrap_degrees(540.0) == 180.0
        assert wrap_degrees(-190.0) == 170.0
        assert wrap_degrees(370.0) == 10.0

    def test_array(self):
        out = wrap_degrees(np.array([0.0, 359.0, -181.0]))
        assert out.tolist() == [0.0, -1.0, 179.0]
