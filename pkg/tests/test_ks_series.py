import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermite2d import ks_series as ks
from hermite2d.errors import (AsymmetryError, DomainViolation, IllConditioned,
                              TruncationNotConverged)
from hermite2d.poly_core import PolarPoint, bessel_i0, hermite

seeds = st.integers(0, 2**32 - 1)


def close(a, b, tol):
    return abs(a - b) <= tol * (1 + abs(a))


class TestNormsAndDomains:
    def test_norms(self):
        assert ks.frobenius_norm(np.eye(2)) == pytest.approx(math.sqrt(2))
        assert ks.frobenius_norm(np.zeros((3, 3))) == 0
        assert ks.frobenius_norm(np.array([[3j]])) == 3
        assert ks.max_norm(np.zeros((2, 2))) == 0
        assert ks.max_norm(np.eye(3)) == 1
        assert ks.max_norm(np.array([[0.2, -0.2], [-0.2, 0.2]])) == pytest.approx(0.2)

    def test_domains(self):
        assert ks.in_domain_real(np.zeros((2, 2)))
        assert ks.in_domain_complex(np.full((2, 2), 0.3))
        assert ks.in_domain_complex(np.full((2, 2), 0.4))
        assert not ks.in_domain_complex(np.full((2, 2), 0.5))
        assert not ks.in_domain_complex(np.full((2, 2), 0.6))

    def test_hermitian_domain_is_flagged(self):
        H = np.array([[0.5, 0.3j], [-0.3j, -0.4]])
        assert ks.max_norm(H) >= 0.5 and ks.complex_domain(H) == "hermitian"
        assert ks.complex_domain(np.full((2, 2), 0.3)) == "ball"
        assert ks.complex_domain(np.full((2, 2), 0.6j)) is None

    def test_box_domain(self):
        H0 = np.zeros((2, 2), dtype=complex)
        delta = np.full((2, 2), 0.1)
        assert ks.in_box_domain(np.full((2, 2), 0.05), H0, delta)
        assert not ks.in_box_domain(np.diag([0.2, 0.0]), H0, delta)


class TestLeftSides:
    def test_real_examples(self):
        X = np.array([0.3, -0.8])
        assert ks.lhs_real(np.zeros((2, 2)), X) == 1
        assert ks.lhs_real([[0.5]], [1.0]) == pytest.approx(1.5**-0.5 * math.exp(0.5 / 1.5))
        s, x, y = 0.4, 0.7, -0.2
        expect = (1 - s * s) ** -0.5 * math.exp((2 * s * x * y - s * s * (x * x + y * y)) / (1 - s * s))
        assert ks.lhs_real([[0, s], [s, 0]], [x, y]) == pytest.approx(expect, rel=1e-14)

    def test_real_errors(self):
        with pytest.raises(DomainViolation):
            ks.lhs_real([[1.0]], [0.0])
        with pytest.raises(AsymmetryError):
            ks.lhs_real([[0, 0.1], [0.2, 0]], [0.0, 0.0])

    def test_complex_examples(self):
        w = 1 + 1j
        assert ks.lhs_complex(np.zeros((1, 1)), [w]) == 1
        assert ks.lhs_complex([[0.3]], [w]) == pytest.approx(cmath.exp(abs(w) ** 2 * 0.3 / 1.3) / 1.3)
        a, b = 0.2 - 0.1j, 0.15j
        w1, w2 = 0.4 + 0.3j, -0.6 + 0.2j
        g = 1 - a * b
        expect = cmath.exp((a * w1.conjugate() * w2 + b * w2.conjugate() * w1
                            - a * b * (abs(w1) ** 2 + abs(w2) ** 2)) / g) / g
        assert ks.lhs_complex([[0, a], [b, 0]], [w1, w2]) == pytest.approx(expect, rel=1e-14)
        with pytest.raises(DomainViolation):
            ks.lhs_complex(np.full((2, 2), 0.6j), [0, 0])

    def test_ill_conditioned(self):
        # Hermitian with an eigenvalue within 1e-13 of -1
        H = np.diag([-1 + 1e-13, 0.0])
        with pytest.raises(IllConditioned):
            ks.lhs_complex(H, [0, 0])


class TestRealSeries:
    def test_zero_matrix(self):
        r = ks.rhs_real(np.zeros((2, 2)), [0.3, 0.4])
        assert r.value == 1 and r.degree_reached == 0

    def test_scalar(self):
        r = ks.rhs_real([[0.3]], [0.5])
        assert close(ks.lhs_real([[0.3]], [0.5]), r.value, 1e-8) and r.degree_reached <= 30
        assert isinstance(r.value, float)

    def test_degree_one_shell(self):
        S = np.array([[0.12, -0.07], [-0.07, 0.2]])
        x1, x2 = 0.3, -0.9
        r = ks.rhs_real(S, [x1, x2], ks.TruncationPolicy(max_degree=1, shell_tol=0.5, quiet_shells=1))
        expect = (S[0, 0] / 4 * hermite(2, x1) + S[0, 1] / 2 * hermite(1, x1) * hermite(1, x2)
                  + S[1, 1] / 4 * hermite(2, x2))
        assert r.shell_sums[1] == pytest.approx(expect, rel=1e-14)

    @given(seeds, st.integers(1, 3))
    def test_identity(self, seed, N):
        rng = np.random.default_rng(seed)
        S = ks.random_symmetric(rng, N, 0.3)
        X = ks.random_vector(rng, N, 1.0, complex_=False)
        assert close(ks.lhs_real(S, X), ks.rhs_real(S, X).value, 1e-7)

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_aggregate_matches_literal_enumeration(self, N):
        rng = np.random.default_rng(N)
        S = ks.random_symmetric(rng, N, 0.3)
        X = ks.random_vector(rng, N, 1.0, complex_=False)
        pol = ks.TruncationPolicy(max_degree=8, shell_tol=0.9, quiet_shells=1)
        a = ks.rhs_real(S, X, pol)
        b = ks.rhs_real(S, X, pol, method="enumerate")
        assert np.allclose(a.shell_sums[:5], b.shell_sums[:5], rtol=1e-12, atol=1e-15)
        assert a.term_count == b.term_count

    def test_not_converged_carries_partial(self):
        S = np.array([[0.9]])
        with pytest.raises(TruncationNotConverged) as exc:
            ks.rhs_real(S, [1.0], ks.TruncationPolicy(max_degree=3))
        assert exc.value.partial.degree_reached == 3


class TestComplexSeries:
    def test_zero_matrix(self):
        r = ks.rhs_complex(np.zeros((2, 2)), [0.3, 0.4j])
        assert r.value == 1 and r.degree_reached == 0

    def test_scalar_real_h(self):
        h, w = 0.35, 0.8 - 0.5j
        assert close(ks.lhs_complex([[h]], [w]), ks.rhs_complex([[h]], [w]).value, 1e-8)

    def test_poisson_kernel_case(self):
        t = 0.3
        H = np.array([[0, t], [t, 0]])
        W = np.array([0.7, -0.4])
        assert close(ks.lhs_complex(H, W), ks.rhs_complex(H, W).value, 1e-10)

    @given(seeds, st.integers(1, 3))
    def test_identity_general(self, seed, N):
        rng = np.random.default_rng(seed)
        H = ks.random_general(rng, N, 0.6 / N)
        W = ks.random_vector(rng, N, 1.5)
        r = ks.rhs_complex(H, W)
        assert r.domain == "ball"
        assert close(ks.lhs_complex(H, W), r.value, 1e-7)

    @given(seeds, st.integers(1, 2))
    def test_identity_hermitian(self, seed, N):
        rng = np.random.default_rng(seed)
        H = ks.random_hermitian(rng, N, 0.5)
        W = ks.random_vector(rng, N, 1.5)
        assert close(ks.lhs_complex(H, W), ks.rhs_complex(H, W).value, 1e-7)

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_aggregate_matches_literal_enumeration(self, N):
        rng = np.random.default_rng(10 + N)
        H = ks.random_general(rng, N, 0.5 / N)
        W = ks.random_vector(rng, N, 1.2)
        pol = ks.TruncationPolicy(max_degree=6 if N < 3 else 4, shell_tol=0.9, quiet_shells=1)
        a = ks.rhs_complex(H, W, pol)
        b = ks.rhs_complex(H, W, pol, method="enumerate")
        n = min(len(a.shell_sums), len(b.shell_sums))
        assert np.allclose(a.shell_sums[:n], b.shell_sums[:n], rtol=1e-11, atol=1e-14)

    @given(seeds, st.integers(1, 3))
    def test_shell_bound_and_geometric_envelope(self, seed, N):
        rng = np.random.default_rng(seed)
        H = ks.random_general(rng, N, 0.8 / N)
        W = ks.random_vector(rng, N, 1.5)
        s = np.abs(ks.rhs_complex(H, W).shell_sums)
        for d, v in enumerate(s):
            assert v <= ks.shell_bound(H, W, d) * (1 + 1e-12)
        rho = N * ks.max_norm(H) + 0.1
        C = max(s[d] / rho**d for d in range(min(6, len(s))))
        assert all(s[d] <= C * rho**d * (1 + 1e-9) for d in range(len(s)))

    def test_heavy_cancellation_terminates(self):
        H = -0.8 * np.ones((1, 1))
        r = ks.rhs_complex(H, [1.2])
        assert close(ks.lhs_complex(H, [1.2]), r.value, 1e-9)


class TestLaguerreForm:
    @staticmethod
    def polar(W):
        return [PolarPoint(abs(w), cmath.phase(w)) for w in W]

    def test_zero_matrix(self):
        assert ks.rhs_laguerre(np.zeros((1, 1)), [PolarPoint(0.5, 0.2)]).value == 1

    def test_first_shell_scalar(self):
        h, rho = 0.2 - 0.1j, 0.9
        r = ks.rhs_laguerre([[h]], [PolarPoint(rho, 0.7)],
                            ks.TruncationPolicy(max_degree=1, shell_tol=0.5, quiet_shells=1))
        assert r.shell_sums[1] == pytest.approx(-h * (1 - rho * rho), rel=1e-14)

    @given(seeds, st.integers(1, 3))
    def test_matches_hermite_form(self, seed, N):
        rng = np.random.default_rng(seed)
        H = ks.random_general(rng, N, 0.8 / N)
        W = ks.random_vector(rng, N, 1.5, min_radius=1e-3)
        a = ks.rhs_complex(H, W).value
        b = ks.rhs_laguerre(H, self.polar(W)).value
        assert close(a, b, 1e-10)

    @pytest.mark.parametrize("N", [1, 2])
    def test_enumeration_matches_aggregate(self, N):
        rng = np.random.default_rng(20 + N)
        H = ks.random_general(rng, N, 0.5 / N)
        P = self.polar(ks.random_vector(rng, N, 1.2, min_radius=0.1))
        pol = ks.TruncationPolicy(max_degree=6, shell_tol=0.9, quiet_shells=1)
        a = ks.rhs_laguerre(H, P, pol).shell_sums
        b = ks.rhs_laguerre(H, P, pol, method="enumerate").shell_sums
        n = min(len(a), len(b))
        assert np.allclose(a[:n], b[:n], rtol=1e-11, atol=1e-14)

    def test_direct_orientation_sums_transposed_matrix(self):
        rng = np.random.default_rng(7)
        H = ks.random_general(rng, 2, 0.35)
        W = ks.random_vector(rng, 2, 1.2, min_radius=0.2)
        direct = ks.rhs_laguerre(H, self.polar(W), orientation="direct").value
        assert close(ks.lhs_complex(H.T, W), direct, 1e-10)
        assert not close(ks.lhs_complex(H, W), direct, 1e-6)

    def test_zero_radius_rejected(self):
        with pytest.raises(DomainViolation):
            ks.rhs_laguerre([[0.1]], [PolarPoint(0.0, 0.0)])


class TestExpQuadraticSeries:
    @given(seeds, st.integers(1, 3))
    def test_real(self, seed, N):
        rng = np.random.default_rng(seed)
        S = ks.random_symmetric(rng, N, 0.5)
        Y = ks.random_vector(rng, N, 1.0)
        assert close(np.exp(-Y @ S @ Y), ks.exp_quadratic_series_real(S, Y).value, 1e-9)

    @given(seeds, st.integers(1, 3))
    def test_complex(self, seed, N):
        rng = np.random.default_rng(seed)
        H = ks.random_general(rng, N, 0.5 / N)
        Z = ks.random_vector(rng, N, 1.0)
        assert close(np.exp(-Z.conj() @ H @ Z), ks.exp_quadratic_series_complex(H, Z).value, 1e-9)


class TestCharlier:
    def test_origin(self):
        lhs, rhs = ks.charlier_bilinear_check(0.0, 0.0, 2, 3)
        assert lhs == pytest.approx(0, abs=1e-15) and rhs == 0

    @given(st.floats(-0.2, 0.2), st.floats(-0.2, 0.2), st.integers(1, 3), st.integers(1, 3))
    def test_symmetry_and_agreement(self, u, v, x, y):
        lhs, rhs = ks.charlier_bilinear_check(u, v, x, y)
        lhs2, rhs2 = ks.charlier_bilinear_check(v, u, x, y)
        assert lhs == pytest.approx(lhs2, rel=1e-12, abs=1e-15)
        assert rhs == pytest.approx(rhs2, rel=1e-12, abs=1e-15)
        assert abs(lhs - rhs) <= 1e-6 * (1 + abs(lhs))

    def test_resolved_closed_form(self):
        u, v, x, y = 0.05, 0.03, 2, 3
        p = x * y
        g = p - u * v
        expect = p / g * (math.exp(((u + v) * p - u * v * (x + y)) / g)
                          - math.exp(-u * v * (x + y) / g) * bessel_i0(2 * math.sqrt(u * v) * p / g))
        assert ks.charlier_bilinear_closed(u, v, x, y) == pytest.approx(expect, rel=1e-14)
        assert abs(ks.charlier_bilinear_sum(u, v, x, y, 40) - expect) <= 1e-12

    def test_variant_form_disagrees_with_brute_force(self):
        u, v, x, y = 0.05, 0.03, 2, 3
        lhs, rhs = ks.charlier_bilinear_check(u, v, x, y, form="variant")
        assert abs(lhs - rhs) > 1e-4

    def test_domain(self):
        with pytest.raises(DomainViolation):
            ks.charlier_bilinear_check(0.3, 0.0, 1, 1)


class TestPolicy:
    def test_validation(self):
        with pytest.raises(ValueError):
            ks.TruncationPolicy(shell_tol=0)
        with pytest.raises(ValueError):
            ks.TruncationPolicy(shell_tol=1)
        with pytest.raises(ValueError):
            ks.TruncationPolicy(quiet_shells=0)
        with pytest.raises(ValueError):
            ks.TruncationPolicy(max_degree=-1)


class TestSamplers:
    def test_norms_in_range(self, rng):
        for _ in range(20):
            assert 0.15 <= ks.frobenius_norm(ks.random_symmetric(rng, 3, 0.3)) <= 0.3 + 1e-15
            assert 0.2 <= ks.max_norm(ks.random_general(rng, 2, 0.4)) <= 0.4 + 1e-15
            H = ks.random_hermitian(rng, 3, 0.5)
            assert ks.is_hermitian(H) and ks.frobenius_norm(H) <= 0.5 + 1e-15
            assert np.all(np.abs(ks.random_vector(rng, 3, 1.5)) <= 1.5)
