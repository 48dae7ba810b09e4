"""Tests for the quadric model, affine chart, and causal classification."""

import numpy as np
import pytest
from scipy.optimize import brentq

from adscurv import ads3, hyp2
from adscurv.ads3 import (
    CausalType,
    ChartMiss,
    ChartPoint,
    CoincidentPoints,
    NotTangent,
    OutOfRange,
    ProjectivePoint4,
    affine_chart,
    bilinear_form,
    chart_to_height,
    classify_chart_line,
    classify_vector,
    cylinder_map,
    height_to_chart,
)


class TestBilinearForm:
    def test_basis_cases(self):
        e0 = np.array([1.0, 0, 0, 0])
        e2 = np.array([0.0, 0, 1, 0])
        assert bilinear_form(e0, e0) == -1.0
        assert bilinear_form(e2, e2) == 1.0

    def test_quadric_curve(self):
        s = np.linspace(-2, 2, 9)
        x = np.stack([np.cosh(s), np.zeros_like(s), np.sinh(s), np.zeros_like(s)], -1)
        assert np.allclose(bilinear_form(x, x), -1.0, atol=1e-12)

    def test_symmetry_bilinearity(self):
        rng = np.random.default_rng(2)
        x, y, z = rng.normal(size=(3, 4))
        assert bilinear_form(x, y) == pytest.approx(bilinear_form(y, x), abs=1e-14)
        assert bilinear_form(x, 2.5*y + z) == pytest.approx(
            2.5*bilinear_form(x, y) + bilinear_form(x, z), abs=1e-12)


class TestChart:
    def test_simple_projection(self):
        p = ProjectivePoint4([2.0, 1.0, 1.0, 0.0])
        c = affine_chart(p)
        assert (c.c1, c.c2, c.c3) == pytest.approx((0.5, 0.5, 0.0), abs=1e-14)

    def test_origin(self):
        c = affine_chart(ProjectivePoint4([1.0, 0, 0, 0]))
        assert c.on_disc
        assert (c.c1, c.c2, c.c3) == (0.0, 0.0, 0.0)

    def test_chart_miss(self):
        with pytest.raises(ChartMiss):
            affine_chart(ProjectivePoint4([0.0, 1.0, 0.0, 0.0]))

    def test_image_inside_hyperboloid(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            raw = rng.normal(size=4)
            if bilinear_form(raw, raw) >= -1e-3 or abs(raw[0]) < 1e-2:
                continue
            c = affine_chart(ProjectivePoint4(raw))
            assert ads3.chart_quadratic(c.as_array()) < 1.0


class TestClassifyVector:
    def test_trivial_cases(self):
        p = ProjectivePoint4([1.0, 0, 0, 0])
        assert classify_vector(p, [0, 0, 1, 0]) is CausalType.SPACE_LIKE
        assert classify_vector(p, [0, 1, 0, 0]) is CausalType.TIME_LIKE
        assert classify_vector(p, [0, 1, 1, 0]) is CausalType.LIGHT_LIKE

    def test_not_tangent(self):
        p = ProjectivePoint4([1.0, 0, 0, 0])
        with pytest.raises(NotTangent):
            classify_vector(p, [1.0, 0, 1, 0])


class TestClassifyChartLine:
    def test_disc_chords_are_spacelike(self):
        a = ChartPoint(0.0, 0.5, 0.0)
        b = ChartPoint(0.0, -0.5, 0.0)
        assert classify_chart_line(a, b) is CausalType.SPACE_LIKE

    def test_vertical_is_timelike(self):
        a = ChartPoint(0.0, 0.0, 0.0)
        b = ChartPoint(0.5, 0.0, 0.0)
        assert classify_chart_line(a, b) is CausalType.TIME_LIKE

    def test_coincident_raises(self):
        a = ChartPoint(0.1, 0.2, 0.3)
        with pytest.raises(CoincidentPoints):
            classify_chart_line(a, ChartPoint(0.1, 0.2, 0.3))

    def test_lightlike_from_discriminant_zero_solve(self):
        # near the boundary circle, tilt the circle-tangent direction out of
        # the disc plane until the boundary-intersection discriminant of the
        # line vanishes; the solve lands on the 45-degree lift, which is
        # tangent to the quadric at infinity
        a = np.array([0.0, 1.0 - 1e-9, 0.0])
        A = np.concatenate([[1.0], a])

        def disc_of_lift(psi):
            d = np.array([np.sin(psi), 0.0, np.cos(psi)])
            D = np.concatenate([[0.0], d])
            return float(bilinear_form(A, D)**2 - bilinear_form(A, A)*bilinear_form(D, D))

        psi = brentq(disc_of_lift, 0.1, np.pi/2 - 0.1, xtol=1e-15)
        assert psi == pytest.approx(np.pi/4, abs=1e-12)
        d = np.array([1.0, 0.0, 1.0])/np.sqrt(2.0)
        b = ChartPoint(*(a + 0.4*d))
        res = classify_chart_line(ChartPoint(*a), b)
        assert res is CausalType.LIGHT_LIKE

    def test_exact_tangent_construction_is_lightlike(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            eta = rng.uniform(-1.5, 1.5)
            T, d = ads3.tangent_line_through_boundary(eta, rng.uniform(0, 2*np.pi),
                                                      rng.uniform(-0.9, 0.9))
            s1, s2 = rng.uniform(0.1, 1.0), -rng.uniform(0.1, 1.0)
            a = ChartPoint(*(T + s1*d))
            b = ChartPoint(*(T + s2*d))
            assert classify_chart_line(a, b) is CausalType.LIGHT_LIKE

    def test_oracle_affine_root_count(self):
        # oracle: count real roots of the affine quadratic q(a + s d) = 1 via
        # numpy.roots, adding the point at infinity when the direction lies on
        # the boundary quadric; compare with the projective classification
        rng = np.random.default_rng(9)
        agree = 0
        for _ in range(2000):
            a = ads3.random_chart_point(rng)
            b = ads3.random_chart_point(rng)
            av, bv = a.as_array(), b.as_array()
            if np.abs(av - bv).max() < 1e-12:
                continue
            d = bv - av
            q3 = lambda v: -v[0]**2 + v[1]**2 + v[2]**2
            B3 = lambda u, v: -u[0]*v[0] + u[1]*v[1] + u[2]*v[2]
            coeffs = [q3(d), 2*B3(av, d), q3(av) - 1.0]
            roots = np.roots(coeffs) if abs(coeffs[0]) > 1e-14 else (
                np.array([-coeffs[2]/coeffs[1]]) if abs(coeffs[1]) > 1e-14 else np.array([]))
            nreal = int(np.sum(np.abs(np.imag(roots)) < 1e-10))
            if abs(q3(d)) <= 1e-14:
                nreal += 1          # intersection at infinity
            expected = {2: CausalType.SPACE_LIKE, 1: CausalType.LIGHT_LIKE,
                        0: CausalType.TIME_LIKE}[nreal]
            got = classify_chart_line(a, b)
            assert got is expected
            agree += 1
        assert agree > 1900


class TestDiscCrossing:
    def test_timelike_lines_cross_the_disc(self):
        rng = np.random.default_rng(10)
        count = 0
        while count < 300:
            a = ads3.random_chart_point(rng)
            b = ads3.random_chart_point(rng)
            if np.abs(a.as_array() - b.as_array()).max() < 1e-9:
                continue
            if classify_chart_line(a, b) is not CausalType.TIME_LIKE:
                continue
            crossing = ads3.chart_line_disc_crossing(a, b.as_array() - a.as_array())
            assert crossing is not None
            assert (crossing**2).sum() < 1.0
            count += 1

    def test_lightlike_lines_avoiding_boundary_circle_cross_the_disc(self):
        rng = np.random.default_rng(12)
        for _ in range(300):
            eta = rng.uniform(0.05, 1.5)*rng.choice([-1.0, 1.0])
            T, d = ads3.tangent_line_through_boundary(eta, rng.uniform(0, 2*np.pi),
                                                      rng.uniform(-0.9, 0.9))
            a = ChartPoint(*(T + 0.3*d))
            crossing = ads3.chart_line_disc_crossing(a, d)
            assert crossing is not None
            assert (crossing**2).sum() < 1.0


class TestCylinderMap:
    def test_zero_time_is_embedding(self):
        x = hyp2.H2Point(np.cosh(0.7), np.sinh(0.7), 0.0)
        p = cylinder_map(x, 0.0)
        assert np.allclose(p.vec, [np.cosh(0.7), 0.0, np.sinh(0.7), 0.0], atol=1e-14)

    def test_origin_at_quarter_turn(self):
        p = cylinder_map(hyp2.H2Point.origin(), np.pi/4)
        c = affine_chart(p)
        assert abs(c.c1) == pytest.approx(np.tan(np.pi/4), abs=1e-12)
        assert c.c1 == pytest.approx(-1.0, abs=1e-12)   # sign fixed by V = (0,-1,0,0)
        assert (c.c2, c.c3) == pytest.approx((0.0, 0.0), abs=1e-14)

    def test_quadric_preserved_random(self):
        rng = np.random.default_rng(14)
        x = hyp2.from_polar(rng.uniform(0, 2, 100), rng.uniform(0, 2*np.pi, 100))
        t = rng.uniform(0, np.pi/2 - 1e-6, 100)
        out = cylinder_map(x, t)
        assert np.abs(bilinear_form(out, out) + 1.0).max() < 1e-12

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            cylinder_map(hyp2.H2Point.origin(), np.pi/2)
        with pytest.raises(OutOfRange):
            cylinder_map(hyp2.H2Point.origin(), -0.1)

    def test_chart_image_is_vertical_line(self):
        x = hyp2.H2Point.from_klein(0.3, -0.2)
        for t in (0.0, 0.4, 1.2):
            c = affine_chart(cylinder_map(x, t))
            assert (c.c2, c.c3) == pytest.approx(tuple(x.klein), abs=1e-12)
            assert c.c1 == pytest.approx(
                float(height_to_chart(t, x.klein)), abs=1e-12)

    def test_metric_pullback_finite_differences(self):
        # pairing of coordinate tangents must match cos^2(t) g_H2 - dt^2
        rng = np.random.default_rng(15)
        h = 1e-4
        for _ in range(25):
            x = hyp2.from_polar(rng.uniform(0, 2), rng.uniform(0, 2*np.pi))
            t = rng.uniform(0.05, np.pi/2 - 0.2)
            phi = rng.uniform(0, 2*np.pi)
            v = hyp2.geodesic_direction(x, hyp2.from_polar(3.0, phi))
            d_s = (cylinder_map(hyp2.flow(x, v, h), t) - cylinder_map(hyp2.flow(x, v, -h), t))/(2*h)
            d_t = (cylinder_map(x, t + h) - cylinder_map(x, t - h))/(2*h)
            assert bilinear_form(d_s, d_s) == pytest.approx(np.cos(t)**2, abs=2e-6)
            assert bilinear_form(d_t, d_t) == pytest.approx(-1.0, abs=2e-6)
            assert bilinear_form(d_s, d_t) == pytest.approx(0.0, abs=2e-6)


class TestHeightChart:
    def test_zero_height(self):
        xb = np.array([[0.0, 0.0], [0.3, 0.4], [0.0, 0.9]])
        assert np.all(height_to_chart(0.0, xb) == 0.0)

    def test_quarter_turn_at_center(self):
        assert height_to_chart(np.pi/4, np.zeros(2)) == pytest.approx(-1.0, abs=1e-14)

    def test_constant_height_graph_is_half_ellipsoid(self):
        R = 0.6
        rng = np.random.default_rng(16)
        phi = rng.uniform(0, 2*np.pi, 200)
        r = np.sqrt(rng.uniform(0, 1, 200))*0.9999
        xb = np.stack([r*np.cos(phi), r*np.sin(phi)], -1)
        z = height_to_chart(R, xb)
        ellipsoid = z**2/np.tan(R)**2 + (xb**2).sum(-1)
        assert np.abs(ellipsoid - 1.0).max() < 1e-12
        assert np.all(z <= 0.0)

    def test_roundtrip(self):
        rng = np.random.default_rng(18)
        u = rng.uniform(0, np.pi/2 - 1e-6, 500)
        r = np.sqrt(rng.uniform(0, 1, 500))*0.999
        phi = rng.uniform(0, 2*np.pi, 500)
        xb = np.stack([r*np.cos(phi), r*np.sin(phi)], -1)
        back = chart_to_height(height_to_chart(u, xb), xb)
        assert np.abs(back - u).max() < 1e-12
