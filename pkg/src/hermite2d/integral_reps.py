"""Quadrature checks of the integral representations and mixed relations.

Lines and planes use Gauss-Hermite rules (weight e^{-t^2} per axis), circles
use the uniform trapezoid rule, which converges geometrically for analytic
periodic integrands. Every quadrature is repeated with doubled points until
two successive values agree; otherwise QuadratureUnderResolved is raised.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import NotPD, NotSPD, QuadratureUnderResolved, ZeroParameter
from .poly_core import csum, h2d_direct, hermite, laguerre

SELF_TOL = 1e-11

KINDS = ("gauss_hermite_1d", "gauss_hermite_2d_tensor", "periodic_trapezoid")


@dataclass(frozen=True)
class QuadratureSpec:
    kind: str = "periodic_trapezoid"
    points: int = 256
    max_points: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.points < 2:
            raise ValueError("points must be >= 2")

    @property
    def cap(self) -> int:
        if self.max_points is not None:
            return self.max_points
        return {"gauss_hermite_1d": 640, "gauss_hermite_2d_tensor": 320,
                "periodic_trapezoid": 1 << 15}[self.kind]


class CheckResult(NamedTuple):
    lhs: complex
    rhs: complex
    abs_err: float


@lru_cache(maxsize=64)
def gh_rule(n: int):
    """Gauss-Hermite nodes and weights for weight e^{-t^2}."""
    x, w = np.polynomial.hermite.hermgauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def refine(rule: Callable[[int], tuple[complex, float]], points: int, cap: int,
           tol: float = SELF_TOL) -> complex:
    """Run ``rule(n)`` at n, 2n, 4n, ... until successive values agree.

    ``rule`` returns (value, scale); agreement means |fine - coarse| <= tol *
    max(|fine|, scale), where scale is the integral of |integrand| so that
    integrals which vanish exactly are judged against their size.
    """
    coarse, _ = rule(points)
    n = points
    while True:
        n *= 2
        fine, scale = rule(n)
        if abs(fine - coarse) <= tol * max(abs(fine), scale):
            return fine
        if n * 2 > cap:
            raise QuadratureUnderResolved(
                f"quadrature not self-consistent at {n} points",
                coarse=coarse, fine=fine)
        coarse = fine


def trapezoid_mean(f: Callable[[np.ndarray], np.ndarray], points: int = 256,
                   cap: int = 1 << 15) -> complex:
    """(1/2pi) * integral of f over one period, refined to self-consistency."""
    def rule(n):
        phi = 2 * np.pi * np.arange(n) / n
        vals = f(phi)
        return complex(np.mean(vals)), float(np.mean(np.abs(vals)))
    return refine(rule, points, cap)


def _result(lhs, rhs) -> CheckResult:
    return CheckResult(lhs, rhs, abs(lhs - rhs))


# -- lines and planes -------------------------------------------------------

def check_hermite_moment(n: int, x: float, spec: QuadratureSpec = QuadratureSpec("gauss_hermite_1d", 40)):
    """H_n(x) e^{-x^2} against (-2i)^n / sqrt(pi) * int t^n e^{-t^2 + 2ixt} dt."""
    if spec.kind != "gauss_hermite_1d":
        raise ValueError("needs a gauss_hermite_1d spec")
    points = max(spec.points, n // 2 + 10)

    def rule(p):
        t, w = gh_rule(p)
        vals = w * t**n * np.exp(2j * x * t)
        return complex(np.sum(vals)), float(np.sum(np.abs(vals)))

    integral = refine(rule, points, spec.cap)
    rhs = (-2j) ** n / math.sqrt(math.pi) * integral
    return _result(hermite(n, x) * math.exp(-x * x), rhs)


def _plane(integrand, points, cap):
    """(1/pi) * integral over R^2 of integrand(w) e^{-|w|^2}, w = r + is."""
    def rule(p):
        t, wt = gh_rule(p)
        r, s = np.meshgrid(t, t, indexing="ij")
        vals = np.outer(wt, wt) * integrand(r + 1j * s)
        return complex(np.sum(vals)) / math.pi, float(np.sum(np.abs(vals))) / math.pi
    return refine(rule, points, cap)


def check_h2d_moment(m: int, n: int, z1, z2,
                     spec: QuadratureSpec = QuadratureSpec("gauss_hermite_2d_tensor", 40)):
    """e^{-z1 z2} H_{m,n}(z1, z2) against the plane moment integral
    (1/(pi i^{m+n})) int conj(w)^m w^n exp(-|w|^2 + i z1 w + i z2 conj(w))."""
    if spec.kind != "gauss_hermite_2d_tensor":
        raise ValueError("needs a gauss_hermite_2d_tensor spec")
    points = max(spec.points, (m + n) // 2 + 10)
    integral = _plane(lambda w: w.conj() ** m * w**n * np.exp(1j * z1 * w + 1j * z2 * w.conj()),
                      points, spec.cap)
    lhs = cmath.exp(-z1 * z2) * h2d_direct(m, n, z1, z2)
    return _result(lhs, integral / 1j ** (m + n))


def check_h2d_moment_conjugate(m: int, n: int, z,
                               spec: QuadratureSpec = QuadratureSpec("gauss_hermite_2d_tensor", 40)):
    """e^{-|z|^2} H_{m,n}(z, conj z) against
    (i^{m+n}/pi) int w^m conj(w)^n exp(-|w|^2 - 2i Re(w conj z))."""
    if spec.kind != "gauss_hermite_2d_tensor":
        raise ValueError("needs a gauss_hermite_2d_tensor spec")
    z = complex(z)
    points = max(spec.points, (m + n) // 2 + 10)
    integral = _plane(lambda w: w**m * w.conj() ** n * np.exp(-2j * (w * z.conjugate()).real),
                      points, spec.cap)
    lhs = math.exp(-abs(z) ** 2) * h2d_direct(m, n, z, z.conjugate())
    return _result(lhs, 1j ** (m + n) * integral)


# -- circles ----------------------------------------------------------------

def circle_coefficient(m: int, n: int, z1, z2, points: int = 256) -> complex:
    """m! n! / (m+n)! * (1/2pi) int_0^{2pi} H_{m+n}((e^{i phi} z1 + e^{-i phi} z2)/2) e^{i(n-m) phi}."""
    N = m + n
    mean = trapezoid_mean(
        lambda p: hermite(N, (np.exp(1j * p) * z1 + np.exp(-1j * p) * z2) / 2)
        * np.exp(1j * (n - m) * p), points)
    return math.factorial(m) * math.factorial(n) / math.factorial(N) * mean


def odd_order_circle_integral(m: int, n: int, z1, z2, points: int = 256) -> complex:
    """The circle integral with H_{m+n+1} and the Gaussian factor.

    Its integrand changes sign under phi -> phi + pi, so it is identically
    zero; kept so the tests can show that.
    """
    N = m + n + 1

    def f(p):
        a = (np.exp(1j * p) * z1 + np.exp(-1j * p) * z2) / 2
        return hermite(N, a) * np.exp(-a * a + 1j * (n - m) * p)

    return 1j / (2 ** (N) * math.sqrt(math.pi)) * 2 * math.pi * trapezoid_mean(f, points)


def check_circle_rep(m: int, n: int, r1: float, theta1: float, r2: float, theta2: float,
                     points: int = 256) -> CheckResult:
    """e^{-z1 z2} H_{m,n}(z1, z2) against the circle average of H_{m+n},
    z1 = r1 e^{i theta1}, z2 = r2 e^{i theta2}."""
    z1 = cmath.rect(r1, theta1)
    z2 = cmath.rect(r2, theta2)
    g = cmath.exp(-z1 * z2)
    return _result(g * h2d_direct(m, n, z1, z2), g * circle_coefficient(m, n, z1, z2, points))


def check_circle_conjugate(m: int, n: int, r: float, theta: float, points: int = 256) -> CheckResult:
    """The r1 = r2, theta2 = -theta1 case written with a real argument:
    e^{i(m-n) theta} m!n!/(m+n)! (1/2pi) int H_{m+n}(r cos phi) e^{i(n-m) phi}."""
    N = m + n
    mean = trapezoid_mean(lambda p: hermite(N, r * np.cos(p)) * np.exp(1j * (n - m) * p), points)
    rhs = (cmath.exp(1j * (m - n) * theta) * math.exp(-r * r)
           * math.factorial(m) * math.factorial(n) / math.factorial(N) * mean)
    lhs = math.exp(-r * r) * h2d_direct(m, n, cmath.rect(r, theta), cmath.rect(r, -theta))
    return _result(lhs, rhs)


def circle_laguerre_closed(m: int, n: int, r: float) -> float:
    """(-1)^n 2^{m+n} n! r^{m-n} e^{-r^2} L_n^{(m-n)}(r^2)."""
    return ((-1) ** n * 2 ** (m + n) * math.factorial(n) * r ** (m - n)
            * math.exp(-r * r) * laguerre(n, m - n, r * r))


def check_circle_laguerre(m: int, n: int, r: float, points: int = 256) -> CheckResult:
    """Laguerre closed form against 2^{m+n} times the real-argument circle value."""
    if r <= 0:
        raise ValueError("r must be positive")
    circ = check_circle_conjugate(m, n, r, 0.0, points).rhs
    return _result(circle_laguerre_closed(m, n, r), 2 ** (m + n) * circ)


# -- Gaussian integrals -----------------------------------------------------

def _tensor_gh(p: int, dim: int):
    t, w = gh_rule(p)
    nodes = np.stack(np.meshgrid(*([t] * dim), indexing="ij"), axis=-1).reshape(-1, dim)
    weights = np.prod(np.stack(np.meshgrid(*([w] * dim), indexing="ij"), axis=-1).reshape(-1, dim), axis=1)
    return nodes, weights


def check_normal_integral_real(A, B, spec: QuadratureSpec = QuadratureSpec("gauss_hermite_2d_tensor", 20)):
    """int_{R^N} exp(-X^T A X + 2i B^T X) dX against sqrt(pi^N / det A) e^{-B^T A^{-1} B}.

    Quadrature after whitening X = L^{-T} Y with A = L L^T.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    N = len(B)
    if N > 3:
        raise ValueError("tensor quadrature limited to N <= 3")
    try:
        L = np.linalg.cholesky(A)
    except np.linalg.LinAlgError as exc:
        raise NotSPD("A must be symmetric positive definite") from exc
    if np.any(np.abs(A - A.T) > 1e-14):
        raise NotSPD("A must be symmetric")
    c = np.linalg.solve(L, B)  # B^T L^{-T} Y = c^T Y
    jac = 1 / np.prod(np.diag(L))

    def rule(p):
        y, w = _tensor_gh(p, N)
        vals = w * np.exp(2j * (y @ c))
        return complex(np.sum(vals)) * jac, float(np.sum(np.abs(vals))) * jac

    cap = {1: 640, 2: 320, 3: 80}[N]
    quad = refine(rule, spec.points, cap)
    closed = math.sqrt(math.pi**N / np.linalg.det(A)) * math.exp(-B @ np.linalg.solve(A, B))
    return _result(closed, quad)


def check_normal_integral_complex(H, W, spec: QuadratureSpec = QuadratureSpec("gauss_hermite_2d_tensor", 16)):
    """int_{R^{2N}} exp(-Z*(I+H)Z + 2i Re(W* Z)) against pi^N exp(-W*(I+H)^{-1}W) / det(I+H)."""
    H = np.asarray(H, dtype=complex)
    W = np.asarray(W, dtype=complex)
    N = len(W)
    if N > 2:
        raise ValueError("tensor quadrature limited to N <= 2")
    M = np.eye(N) + H
    if np.any(np.abs(M - M.conj().T) > 1e-12):
        raise NotPD("I + H must be Hermitian")
    try:
        L = np.linalg.cholesky(M)
    except np.linalg.LinAlgError as exc:
        raise NotPD("I + H must be positive definite") from exc
    v = np.linalg.solve(L, W)  # W* Z = W* L^{-*} Y = (L^{-1} W)* Y
    jac = 1 / float(np.prod(np.abs(np.diag(L)))) ** 2

    def rule(p):
        x, w = _tensor_gh(p, 2 * N)
        y = x[:, :N] + 1j * x[:, N:]
        vals = w * np.exp(2j * (y @ v.conj()).real)
        return complex(np.sum(vals)) * jac, float(np.sum(np.abs(vals))) * jac

    cap = {1: 320, 2: 64}[N]
    quad = refine(rule, spec.points, cap)
    closed = math.pi**N * cmath.exp(-W.conj() @ np.linalg.solve(M, W)) / np.linalg.det(M)
    return _result(complex(closed), quad)


# -- mixed relations --------------------------------------------------------

@dataclass(frozen=True)
class MixedReport:
    case: str
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    variant_rhs: Optional[complex] = None


def _report(case, lhs, rhs, variant=None) -> MixedReport:
    err = abs(lhs - rhs)
    return MixedReport(case, lhs, rhs, err, err / (1 + abs(lhs)), variant)


def _binomial_split(n, w1, w2, z):
    if z == 0:
        raise ZeroParameter("z must be nonzero")
    rhs = z**n * csum([math.comb(n, j) * h2d_direct(j, n - j, z * w1, w2 / z) * z ** (-2 * j)
                       for j in range(n + 1)])
    return _report("binomial_split", hermite(n, (w1 + w2) / 2), rhs)


def _laguerre_sum(n, rho, zeta):
    return (math.factorial(n) / (-rho * zeta) ** n
            * csum([(-rho * rho * zeta * zeta) ** j / math.factorial(j)
                    * laguerre(n - j, 2 * j - n, rho * rho) for j in range(n + 1)]))


def _joukowski_laguerre(n, rho, z):
    if z == 0:
        raise ZeroParameter("z must be nonzero")
    return _report("joukowski_laguerre", hermite(n, rho * (z + 1 / z) / 2), _laguerre_sum(n, rho, z))


def _cosine_laguerre(n, rho, theta):
    return _report("cosine_laguerre", hermite(n, rho * math.cos(theta)),
                   _laguerre_sum(n, rho, cmath.exp(1j * theta)))


def fourier_hermite_closed(n: int, k: int, rho: float) -> float:
    """int_0^{2pi} H_n(rho cos theta) e^{-ik theta} d theta in closed form."""
    if (n + k) % 2:
        return 0.0
    if abs(k) > n:
        # H_n(rho cos theta) has no harmonics beyond n
        return 0.0
    return (2 * math.pi * math.factorial(n) * (-1) ** ((n - k) // 2) * rho**k
            / math.factorial((n + k) // 2) * laguerre((n - k) // 2, k, rho * rho))


def _fourier_coefficient(n, k, rho, points):
    quad = 2 * math.pi * trapezoid_mean(
        lambda t: hermite(n, rho * np.cos(t)) * np.exp(-1j * k * t), points)
    return _report("fourier_coefficient", quad, fourier_hermite_closed(n, k, rho))


def squared_hermite_average(n: int, rho: float, form: str = "standard") -> float:
    """(n!)^2 / rho^{2n} sum_j rho^{4j} / (j!)^2 (L_{n-j}^{(2j-n)}(rho^2))^2.

    ``form="variant"`` uses rho^{2j}, which only agrees at rho = 1.
    """
    power = {"standard": 4, "variant": 2}[form]
    return (math.factorial(n) ** 2 / rho ** (2 * n)
            * csum([rho ** (power * j) / math.factorial(j) ** 2
                    * laguerre(n - j, 2 * j - n, rho * rho) ** 2 for j in range(n + 1)]))


def _squared_average(n, rho, points):
    quad = trapezoid_mean(lambda t: hermite(n, rho * np.cos(t)) ** 2, points)
    return _report("squared_average", quad.real, squared_hermite_average(n, rho),
                   variant=squared_hermite_average(n, rho, "variant"))


def rotated_expansion(m: int, n: int, w1, w2, form: str = "standard") -> complex:
    """H_{m,n}(w1 - i w2, w1 + i w2) as a double sum of products of Hermite polynomials.

    standard: i^{n-m} / 2^{m+n} sum_{j<=m, k<=n} C(m,j) C(n,k) i^{j-k} H_{j+k}(w1) H_{m+n-j-k}(w2)
    variant:  i^{m-n} / 2^{m+n} sum_{j,k<=min(m,n)} C(m,j) C(n,k) i^{k-j} H_{j+k}(w1) H_{m+n-j-k}(w2)
    """
    if form == "standard":
        phase, sign, jr, kr = 1j ** (n - m), 1, range(m + 1), range(n + 1)
    elif form == "variant":
        lo = min(m, n)
        phase, sign, jr, kr = 1j ** (m - n), -1, range(lo + 1), range(lo + 1)
    else:
        raise ValueError(f"unknown form {form!r}")
    terms = [math.comb(m, j) * math.comb(n, k) * 1j ** (sign * (j - k))
             * hermite(j + k, w1) * hermite(m + n - j - k, w2)
             for j in jr for k in kr]
    return phase / 2 ** (m + n) * csum(terms)


def _rotation(m, n, w1, w2):
    lhs = h2d_direct(m, n, w1 - 1j * w2, w1 + 1j * w2)
    return _report("rotation", lhs, rotated_expansion(m, n, w1, w2),
                   variant=rotated_expansion(m, n, w1, w2, "variant"))


def shifted_series(m: int, n: int, z1, z2, w1, w2, cap: int = 25) -> complex:
    """sum_{j+k<=cap} (-w1)^j (-w2)^k / (j! k!) H_{m+k, n+j}(z1, z2)."""
    return csum([(-w1) ** j * (-w2) ** k / (math.factorial(j) * math.factorial(k))
                 * h2d_direct(m + k, n + j, z1, z2)
                 for j in range(cap + 1) for k in range(cap + 1 - j)])


def _shift(m, n, z1, z2, w1, w2, cap):
    lhs = h2d_direct(m, n, z1 + w1, z2 + w2) / cmath.exp(w1 * w2 + z1 * w2 + z2 * w1)
    return _report("shift", lhs, shifted_series(m, n, z1, z2, w1, w2, cap))


def _origin(m, n):
    rhs = (-1) ** n * math.factorial(n) if m == n else 0
    return _report("origin", h2d_direct(m, n, 0, 0), rhs)


MIXED_CASES = ("binomial_split", "joukowski_laguerre", "cosine_laguerre", "fourier_coefficient", "squared_average", "rotation", "shift", "origin")


def check_mixed_relations(case: str, params: dict, points: int = 256) -> MixedReport:
    """Evaluate both sides of one mixed relation.

    params by case: binomial_split (n, w1, w2, z); joukowski_laguerre (n, rho, z); cosine_laguerre (n, rho, theta);
    fourier_coefficient (n, k, rho); squared_average (n, rho); rotation (m, n, w1, w2);
    shift (m, n, z1, z2, w1, w2, cap=25); origin (m, n).
    """
    p = dict(params)
    if case == "binomial_split":
        return _binomial_split(p["n"], p["w1"], p["w2"], p["z"])
    if case == "joukowski_laguerre":
        return _joukowski_laguerre(p["n"], p["rho"], p["z"])
    if case == "cosine_laguerre":
        return _cosine_laguerre(p["n"], p["rho"], p["theta"])
    if case == "fourier_coefficient":
        return _fourier_coefficient(p["n"], p["k"], p["rho"], points)
    if case == "squared_average":
        return _squared_average(p["n"], p["rho"], points)
    if case == "rotation":
        return _rotation(p["m"], p["n"], p["w1"], p["w2"])
    if case == "shift":
        return _shift(p["m"], p["n"], p["z1"], p["z2"], p["w1"], p["w2"], p.get("cap", 25))
    if case == "origin":
        return _origin(p["m"], p["n"])
    raise ValueError(f"unknown case {case!r}; expected one of {MIXED_CASES}")


def growth_bound_holds(m: int, n: int, z) -> bool:
    """|H_{m,n}(conj z, z)| <= e^{|z|^2} sqrt(m! n!)."""
    z = complex(z)
    val = abs(h2d_direct(m, n, z.conjugate(), z))
    return val <= math.exp(abs(z) ** 2) * math.sqrt(math.factorial(m) * math.factorial(n)) * (1 + 1e-12)
