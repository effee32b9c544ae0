import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermite2d import integral_reps as ir
from hermite2d.errors import NotPD, NotSPD, QuadratureUnderResolved, ZeroParameter
from hermite2d.poly_core import h2d_direct, hermite, laguerre

GH1 = ir.QuadratureSpec("gauss_hermite_1d", 40)
GH2 = ir.QuadratureSpec("gauss_hermite_2d_tensor", 40)
small = st.integers(0, 6)
coord = st.floats(-1, 1)
cplx = st.builds(complex, coord, coord)


class TestQuadratureSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            ir.QuadratureSpec("simpson", 10)
        with pytest.raises(ValueError):
            ir.QuadratureSpec("periodic_trapezoid", 1)

    def test_refine_raises_when_not_settled(self):
        # value keeps moving with n, so doubling never agrees
        with pytest.raises(QuadratureUnderResolved) as exc:
            ir.refine(lambda n: (1.0 / n, 1.0), 8, 64)
        assert exc.value.fine is not None

    def test_trapezoid_exact_on_trig_polynomial(self):
        assert ir.trapezoid_mean(lambda p: np.cos(p) ** 2) == pytest.approx(0.5, abs=1e-15)


class TestMoments:
    def test_hermite_moment_examples(self):
        r = ir.check_hermite_moment(0, 0.0, GH1)
        assert r.lhs == 1 and abs(r.rhs - 1) < 1e-14
        assert abs(ir.check_hermite_moment(1, 0.0, GH1).rhs) < 1e-14
        r = ir.check_hermite_moment(4, 0.7, ir.QuadratureSpec("gauss_hermite_1d", 60))
        assert r.abs_err <= 1e-10

    @given(st.integers(0, 8), st.floats(-1.5, 1.5))
    def test_hermite_moment(self, n, x):
        assert ir.check_hermite_moment(n, x, GH1).abs_err <= 1e-8

    def test_h2d_moment_examples(self):
        r = ir.check_h2d_moment(0, 0, 0, 0, GH2)
        assert r.lhs == 1 and abs(r.rhs - 1) < 1e-14
        assert abs(ir.check_h2d_moment(1, 0, 0, 0, GH2).rhs) < 1e-14
        r = ir.check_h2d_moment(2, 1, 0.5 + 0.2j, 0.1 - 0.3j, ir.QuadratureSpec("gauss_hermite_2d_tensor", 50))
        assert r.abs_err <= 1e-9

    @given(small, small, cplx, cplx)
    def test_h2d_moment(self, m, n, z1, z2):
        assert ir.check_h2d_moment(m, n, z1, z2, GH2).abs_err <= 1e-8

    @given(small, small, cplx)
    def test_h2d_moment_conjugate(self, m, n, z):
        assert ir.check_h2d_moment_conjugate(m, n, z, GH2).abs_err <= 1e-8

    def test_wrong_spec_kind(self):
        with pytest.raises(ValueError):
            ir.check_hermite_moment(1, 0.0, GH2)


class TestCircle:
    def test_examples(self):
        r = ir.check_circle_rep(0, 0, 1.0, 0.0, 1.0, 0.0)
        assert r.lhs == pytest.approx(math.exp(-1)) and r.abs_err < 1e-14
        r = ir.check_circle_rep(1, 0, 0.0, 0.0, 0.0, 0.0)
        assert r.lhs == 0 and abs(r.rhs) < 1e-15
        expect = -(2**3) * 0.8 * math.exp(-0.64) * laguerre(1, 1, 0.64)
        assert ir.circle_laguerre_closed(2, 1, 0.8) == pytest.approx(expect, rel=1e-14)
        assert ir.check_circle_laguerre(2, 1, 0.8).abs_err <= 1e-8

    @given(small, small, st.floats(0, 1.5), st.floats(0, 6.3), st.floats(0, 1.5), st.floats(0, 6.3))
    def test_general(self, m, n, r1, t1, r2, t2):
        assert ir.check_circle_rep(m, n, r1, t1, r2, t2).abs_err <= 1e-8

    @given(small, small, st.floats(0, 1.5), st.floats(0, 6.3))
    def test_conjugate_reduces_from_general(self, m, n, r, t):
        a = ir.check_circle_rep(m, n, r, t, r, -t)
        b = ir.check_circle_conjugate(m, n, r, t)
        assert abs(a.rhs - b.rhs) <= 1e-10
        assert b.abs_err <= 1e-8

    @pytest.mark.parametrize("r", [0.3, 0.8, 1.5])
    def test_laguerre_restatement(self, r):
        for m in range(7):
            for n in range(7):
                assert ir.check_circle_laguerre(m, n, r).abs_err <= 1e-8

    @pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 1), (3, 3), (1, 4)])
    def test_half_angle_integral_vanishes(self, m, n):
        z1, z2 = cmath.rect(0.9, 0.4), cmath.rect(0.7, -1.1)
        # the odd-order integral is zero while H_{m,n} is not
        assert abs(ir.odd_order_circle_integral(m, n, z1, z2)) < 1e-12
        assert abs(cmath.exp(-z1 * z2) * h2d_direct(m, n, z1, z2)) > 1e-2


class TestNormalIntegrals:
    def test_real_examples(self):
        assert ir.check_normal_integral_real(np.eye(2), [0, 0]).lhs == pytest.approx(math.pi)
        assert ir.check_normal_integral_real(np.diag([1, 2.0]), [0, 0]).lhs == pytest.approx(math.pi / math.sqrt(2))
        r = ir.check_normal_integral_real([[2, 0.5], [0.5, 1]], [1, 0])
        assert r.abs_err <= 1e-9
        for rr in (ir.check_normal_integral_real(np.eye(2), [0, 0]),
                   ir.check_normal_integral_real(np.diag([1, 2.0]), [0, 0])):
            assert rr.abs_err <= 1e-12

    def test_real_not_spd(self):
        with pytest.raises(NotSPD):
            ir.check_normal_integral_real([[1, 2], [2, 1]], [0, 0])

    def test_complex_examples(self):
        r = ir.check_normal_integral_complex(np.zeros((1, 1)), [0])
        assert r.lhs == pytest.approx(math.pi) and r.abs_err < 1e-12
        w = 0.6 - 0.3j
        r = ir.check_normal_integral_complex(np.zeros((1, 1)), [w])
        assert r.lhs == pytest.approx(math.pi * math.exp(-abs(w) ** 2)) and r.abs_err < 1e-12
        assert ir.check_normal_integral_complex([[0.4]], [1.0]).abs_err <= 1e-8

    def test_complex_n2(self):
        H = np.array([[0.2, 0.1 - 0.2j], [0.1 + 0.2j, -0.3]])
        assert ir.check_normal_integral_complex(H, [0.5, -0.2j]).abs_err <= 1e-8

    def test_complex_not_pd(self):
        with pytest.raises(NotPD):
            ir.check_normal_integral_complex([[-1.5]], [0])
        with pytest.raises(NotPD):
            ir.check_normal_integral_complex([[0, 0.1], [0.2, 0]], [0, 0])


class TestMixedRelations:
    def test_examples(self):
        r = ir.check_mixed_relations("binomial_split", {"n": 0, "w1": 0.3, "w2": 0.1j, "z": 1.2})
        assert r.lhs == 1 and r.rhs == 1
        assert abs(ir.check_mixed_relations("fourier_coefficient", {"n": 1, "k": 0, "rho": 1.0}).lhs) < 1e-14
        r = ir.check_mixed_relations("fourier_coefficient", {"n": 2, "k": 0, "rho": 1.0})
        assert r.rhs == 0 and abs(r.lhs) < 1e-13
        r = ir.check_mixed_relations("squared_average", {"n": 1, "rho": 1.0})
        assert r.lhs == pytest.approx(2) and r.rhs == pytest.approx(2)
        z1, z2 = 0.4 - 0.2j, 0.3j
        r = ir.check_mixed_relations("shift", {"m": 3, "n": 2, "z1": z1, "z2": z2, "w1": 0, "w2": 0})
        assert r.lhs == pytest.approx(h2d_direct(3, 2, z1, z2)) and r.abs_err < 1e-13

    def test_zero_parameter(self):
        for case in ("binomial_split", "joukowski_laguerre"):
            with pytest.raises(ZeroParameter):
                ir.check_mixed_relations(case, {"n": 2, "w1": 0.1, "w2": 0.2, "rho": 1.0, "z": 0})

    @given(st.integers(0, 8), cplx, cplx, st.floats(0.5, 1.5), st.floats(0, 6.3))
    def test_binomial_split(self, n, w1, w2, r, t):
        assert ir.check_mixed_relations("binomial_split", {"n": n, "w1": w1, "w2": w2, "z": cmath.rect(r, t)}).rel_err <= 1e-8

    @given(st.integers(0, 8), st.floats(0.3, 1.5), st.floats(0.5, 1.5), st.floats(0, 6.3))
    def test_joukowski_laguerre_cosine_laguerre(self, n, rho, r, t):
        assert ir.check_mixed_relations("joukowski_laguerre", {"n": n, "rho": rho, "z": cmath.rect(r, t)}).rel_err <= 1e-8
        assert ir.check_mixed_relations("cosine_laguerre", {"n": n, "rho": rho, "theta": t}).rel_err <= 1e-8

    @pytest.mark.parametrize("rho", [0.5, 1.0, 1.5])
    def test_fourier_coefficient_all_harmonics(self, rho):
        for n in range(9):
            for k in range(-n - 2, n + 3):
                assert ir.check_mixed_relations("fourier_coefficient", {"n": n, "k": k, "rho": rho}).rel_err <= 1e-8

    @pytest.mark.parametrize("rho", [0.5, 1.5])
    def test_squared_average_power_resolution(self, rho):
        for n in range(1, 9):
            r = ir.check_mixed_relations("squared_average", {"n": n, "rho": rho})
            assert r.rel_err <= 1e-8
            assert abs(r.variant_rhs - r.lhs) > 1e-6 * (1 + abs(r.lhs))
        assert ir.squared_hermite_average(4, 1.0, "variant") == pytest.approx(
            ir.squared_hermite_average(4, 1.0), rel=1e-14)

    @given(st.integers(0, 8), st.integers(0, 8), cplx, cplx)
    def test_rotation(self, m, n, w1, w2):
        assert ir.check_mixed_relations("rotation", {"m": m, "n": n, "w1": w1, "w2": w2}).rel_err <= 1e-8

    def test_rotation_variant_fails_off_diagonal(self):
        w1, w2 = 0.7 + 0.2j, -0.4 + 0.5j
        lhs = h2d_direct(3, 1, w1 - 1j * w2, w1 + 1j * w2)
        assert abs(ir.rotated_expansion(3, 1, w1, w2, "variant") - lhs) > 1e-3
        assert abs(ir.rotated_expansion(3, 1, w1, w2) - lhs) < 1e-12

    @given(st.integers(0, 8), st.integers(0, 8), cplx, cplx,
           st.builds(complex, st.floats(-0.35, 0.35), st.floats(-0.35, 0.35)),
           st.builds(complex, st.floats(-0.35, 0.35), st.floats(-0.35, 0.35)))
    def test_shift(self, m, n, z1, z2, w1, w2):
        p = {"m": m, "n": n, "z1": z1, "z2": z2, "w1": w1, "w2": w2, "cap": 25}
        assert ir.check_mixed_relations("shift", p).rel_err <= 1e-8

    def test_origin(self):
        for m in range(9):
            for n in range(9):
                assert ir.check_mixed_relations("origin", {"m": m, "n": n}).abs_err == 0

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            ir.check_mixed_relations("no_such_case", {})


@given(st.integers(0, 10), st.integers(0, 10), st.floats(0, 2), st.floats(0, 6.3))
def test_growth_bound_bound(m, n, r, t):
    assert ir.growth_bound_holds(m, n, cmath.rect(r, t))
