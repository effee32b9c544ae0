"""q-shifted factorials, 2D q-Hermite polynomials and their integral identities.

Infinite products stop once |a| q^k drops below the product tolerance. The
Askey-Wilson weight and the paired denominators are evaluated in the real
form prod (1 - 2 t q^k cos(theta) + t^2 q^{2k}), which avoids cancellation
near theta = 0 and pi.

Sign and normalization conventions fixed by numerical checks are collected in
RESOLVED_CONVENTIONS and copied into harness reports.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DivergentProduct, DomainViolation
from .integral_reps import trapezoid_mean
from .poly_core import csum

RESOLVED_CONVENTIONS = {
    "h2d_q": "H_{m,n}(z1,z2|q)/((q;q)_m (q;q)_n) = sum_k (-1)^k q^{k(k-1)/2} "
             "z1^{m-k} z2^{n-k} / ((q;q)_{m-k} (q;q)_{n-k} (q;q)_k)",
    "moments": "(1/2pi) int_{-pi}^{pi} e^{2ij theta} w(theta) d theta = "
               "(-1)^j (q^{C(j,2)} + q^{C(-j,2)}) / (q;q)_inf; over [0, pi] with "
               "d theta/2pi the integral is half of this for every j",
    "bilinear": "(rs, rs; q)_inf / (z1 z2 r s; q)_inf = (1/2) sum T(m1,n1) T(m2,n2) "
           "r^{m1+m2} s^{n1+n2} (-1)^{E/2} (q^{C(E/2,2)} + q^{C(-E/2,2)}), "
           "E = m1 - n1 - m2 + n2 even",
    "four_product": "(r1s1, r1s1, r2s2, r2s2, r1s1r2s2z1z2z3z4; q)_inf / (r1s1z1z2, r1r2z1z3, "
           "r1s2z1z4, r2s1z2z3, s1s2z2z4, r2s2z3z4; q)_inf = (1/2) sum ... (-1)^M "
           "(q^{C(M,2)} + q^{C(-M,2)}), 2M = m1+n2+m3+n4-n1-m2-n3-m4",
}


@dataclass(frozen=True)
class QParameter:
    q: float
    product_tol: float = 1e-18

    def __post_init__(self):
        if not 0 < self.product_tol < 1:
            raise ValueError("product_tol must lie in (0, 1)")


def _qp(q) -> QParameter:
    return q if isinstance(q, QParameter) else QParameter(float(q))


def _factor_count(a_abs: float, q: QParameter) -> int:
    """Smallest K with |a| q^K below the product tolerance."""
    if a_abs < q.product_tol or q.q == 0:
        return 1
    return max(1, math.ceil(math.log(q.product_tol / a_abs) / math.log(q.q)))


def qpoch(a, q, n: Optional[int] = None):
    """(a; q)_n, or (a; q)_inf when n is None."""
    qp = _qp(q)
    if n is not None:
        if n < 0:
            raise ValueError("n must be nonnegative")
        p = 1
        for k in range(n):
            p *= 1 - a * qp.q**k
        return p
    if not abs(qp.q) < 1:
        raise DivergentProduct("infinite product needs |q| < 1")
    p = 1
    for k in range(_factor_count(abs(a), qp)):
        p *= 1 - a * qp.q**k
    return p


def qpoch_pair(t, theta, q) -> np.ndarray:
    """(t e^{i theta}, t e^{-i theta}; q)_inf on an array of angles."""
    qp = _qp(q)
    theta = np.asarray(theta, dtype=float)
    c = np.cos(theta)
    p = np.ones(theta.shape, dtype=complex if isinstance(t, complex) else float)
    for k in range(_factor_count(abs(t), qp)):
        tk = t * qp.q**k
        p = p * (1 - 2 * tk * c + tk * tk)
    return p


def qhermite_weight(theta, q) -> np.ndarray:
    """(e^{2i theta}, e^{-2i theta}; q)_inf = prod (1 - 2 q^k cos 2theta + q^{2k})."""
    qp = _qp(q)
    theta = np.asarray(theta, dtype=float)
    c = np.cos(2 * theta)
    p = np.ones(theta.shape)
    for k in range(_factor_count(1.0, qp)):
        p = p * (1 - 2 * qp.q**k * c + qp.q ** (2 * k))
    return p


def _poch_table(q: float, nmax: int) -> list[float]:
    out = [1.0]
    for k in range(1, nmax + 1):
        out.append(out[-1] * (1 - q**k))
    return out


def h2d_q_table(mmax: int, nmax: int, z1, z2, q) -> np.ndarray:
    """T[m, n] = H_{m,n}(z1, z2 | q) / ((q;q)_m (q;q)_n)."""
    qv = _qp(q).q
    if not 0 < qv < 1:
        raise DomainViolation("need 0 < q < 1")
    P = _poch_table(qv, max(mmax, nmax))
    T = np.zeros((mmax + 1, nmax + 1), dtype=complex)
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            T[m, n] = csum([
                (-1) ** k * qv ** (k * (k - 1) // 2) * z1 ** (m - k) * z2 ** (n - k)
                / (P[m - k] * P[n - k] * P[k])
                for k in range(min(m, n) + 1)
            ])
    return T


def h2d_q(m: int, n: int, z1, z2, q):
    """2D q-Hermite polynomial H_{m,n}(z1, z2 | q)."""
    qv = _qp(q).q
    return h2d_q_table(m, n, z1, z2, qv)[m, n] * qpoch(qv, qv, m) * qpoch(qv, qv, n)


class QCheck(NamedTuple):
    quadrature: complex
    closed_form: complex
    abs_err: float


class SeriesCheck(NamedTuple):
    lhs: complex
    rhs: complex
    abs_err: float
    quadrature: Optional[complex] = None


def gf_h2d_q_check(z1, z2, u, v, q, degree_cap: int = 40) -> SeriesCheck:
    """(uv; q)_inf / (u z1, v z2; q)_inf against the double sum over m + n <= cap."""
    if abs(u * z1) >= 1 or abs(v * z2) >= 1:
        raise DomainViolation("need |u z1| < 1 and |v z2| < 1")
    T = h2d_q_table(degree_cap, degree_cap, z1, z2, q)
    lhs = qpoch(u * v, q) / (qpoch(u * z1, q) * qpoch(v * z2, q))
    rhs = csum([T[m, n] * u**m * v**n
                for m in range(degree_cap + 1) for n in range(degree_cap + 1 - m)])
    return SeriesCheck(complex(lhs), complex(rhs), abs(lhs - rhs))


def askey_wilson_closed(t: Sequence, q) -> complex:
    t = list(t)
    pairs = 1
    for j in range(4):
        for k in range(j + 1, 4):
            pairs *= qpoch(t[j] * t[k], q)
    return 2 * math.pi * qpoch(t[0] * t[1] * t[2] * t[3], q) / (qpoch(_qp(q).q, q) * pairs)


def askey_wilson_integral(t: Sequence, q, points: int = 256) -> QCheck:
    """int_0^pi w(theta) / prod_j (t_j e^{i theta}, t_j e^{-i theta}; q)_inf d theta
    by the trapezoid rule against its closed form."""
    t = [complex(x) if np.iscomplexobj(x) else float(x) for x in t]
    if len(t) != 4:
        raise ValueError("need exactly four parameters")
    if max(abs(x) for x in t) >= 1:
        raise DomainViolation("need max |t_j| < 1")

    def f(theta):
        val = qhermite_weight(theta, q)
        for tj in t:
            val = val / qpoch_pair(tj, theta, q)
        return val

    # the integrand is even and 2pi-periodic: int_0^pi = pi * full-period mean
    quad = math.pi * trapezoid_mean(f, points)
    closed = complex(askey_wilson_closed(t, q))
    return QCheck(quad, closed, abs(quad - closed))


def _binom2(x: int) -> int:
    return x * (x - 1) // 2


def q_moment_closed(j: int, q) -> float:
    qv = _qp(q).q
    return (-1) ** j * (qv ** _binom2(j) + qv ** _binom2(-j)) / qpoch(qv, qv)


class MomentCheck(NamedTuple):
    quadrature: complex
    closed_form: float
    abs_err: float
    half_period: complex


def q_moments_check(j: int, q, points: int = 256) -> MomentCheck:
    """Full-period moment (1/2pi) int_{-pi}^{pi} e^{2ij theta} w(theta) against the
    closed form; ``half_period`` holds the [0, pi] integral with d theta/2pi,
    which comes out as exactly half."""
    full = trapezoid_mean(lambda th: np.exp(2j * j * th) * qhermite_weight(th, q), points)
    closed = q_moment_closed(j, q)
    return MomentCheck(full, closed, abs(full - closed), full / 2)


# -- multi-index enumeration ------------------------------------------------

def bounded_tuples(k: int, cap: int) -> np.ndarray:
    """All nonnegative integer k-tuples with sum <= cap, as a (count, k) array."""
    arr = np.arange(cap + 1, dtype=np.int64)[:, None]
    for _ in range(k - 1):
        room = cap - arr.sum(axis=1) + 1
        rows = np.repeat(arr, room, axis=0)
        starts = np.repeat(np.cumsum(room) - room, room)
        last = np.arange(len(rows)) - starts
        arr = np.column_stack([rows, last])
    return arr


def _moment_weight(E: np.ndarray, q: float) -> np.ndarray:
    """(-1)^{E/2} (q^{C(E/2,2)} + q^{C(-E/2,2)}) for even E."""
    j = E // 2
    sign = np.where(j % 2 == 0, 1.0, -1.0)
    return sign * (q ** (j * (j - 1) // 2).astype(float) + q ** (j * (j + 1) // 2).astype(float))


def bilinear_terms(z1, z2, r, s, q, degree_cap: int):
    """(indices, summands) of the four-fold sum; indices columns m1, n1, m2, n2."""
    qv = _qp(q).q
    idx = bounded_tuples(4, degree_cap)
    m1, n1, m2, n2 = idx.T
    E = m1 - n1 - m2 + n2
    keep = E % 2 == 0
    idx, m1, n1, m2, n2, E = idx[keep], m1[keep], n1[keep], m2[keep], n2[keep], E[keep]
    T = h2d_q_table(degree_cap, degree_cap, z1, z2, qv)
    vals = (T[m1, n1] * T[m2, n2] * r ** (m1 + m2).astype(float)
            * s ** (n1 + n2).astype(float) * _moment_weight(E, qv) / 2)
    return idx, vals


def _pairs_integral(params: Sequence, numerator, q, points: int) -> complex:
    """(q;q)_inf / 2 times the full-period average of w(theta) * numerator /
    prod (p e^{i theta}, p e^{-i theta}; q)_inf, the quadrature form of the
    products of generating functions."""
    qv = _qp(q).q

    def f(theta):
        val = qhermite_weight(theta, qv) * numerator
        for p in params:
            val = val / qpoch_pair(p, theta, qv)
        return val

    return trapezoid_mean(f, points) * qpoch(qv, qv) / 2


def q_bilinear_check(z1, z2, r, s, q, degree_cap: int = 24, points: int = 256) -> SeriesCheck:
    """(rs, rs; q)_inf / (z1 z2 r s; q)_inf against the truncated four-fold sum,
    with the generating-function quadrature as an independent third value."""
    if abs(r * z1) >= 1 or abs(s * z2) >= 1:
        raise DomainViolation("need |r z1| < 1 and |s z2| < 1")
    lhs = complex(qpoch(r * s, q) ** 2 / qpoch(z1 * z2 * r * s, q))
    _, vals = bilinear_terms(z1, z2, r, s, q, degree_cap)
    rhs = complex(csum(list(vals)))
    quad = _pairs_integral([r * z1, s * z2], qpoch(r * s, q) ** 2, q, points)
    return SeriesCheck(lhs, rhs, abs(lhs - rhs), quad)


def four_product_lhs(z: Sequence, r1, r2, s1, s2, q) -> complex:
    z1, z2, z3, z4 = z
    num = (qpoch(r1 * s1, q) ** 2 * qpoch(r2 * s2, q) ** 2
           * qpoch(r1 * s1 * r2 * s2 * z1 * z2 * z3 * z4, q))
    den = 1
    t = [r1 * z1, s1 * z2, r2 * z3, s2 * z4]
    for j in range(4):
        for k in range(j + 1, 4):
            den *= qpoch(t[j] * t[k], q)
    return complex(num / den)


def four_product_terms(z: Sequence, r1, r2, s1, s2, q, degree_cap: int):
    """(indices, summands) of the eight-fold sum; indices columns
    m1, n1, m2, n2, m3, n3, m4, n4."""
    qv = _qp(q).q
    z1, z2, z3, z4 = z
    idx = bounded_tuples(8, degree_cap)
    m1, n1, m2, n2, m3, n3, m4, n4 = idx.T
    E = m1 + n2 + m3 + n4 - n1 - m2 - n3 - m4
    keep = E % 2 == 0
    idx = idx[keep]
    m1, n1, m2, n2, m3, n3, m4, n4 = idx.T
    E = E[keep]
    A = h2d_q_table(degree_cap, degree_cap, z1, z2, qv)
    B = h2d_q_table(degree_cap, degree_cap, z3, z4, qv)
    f = lambda base, e: base ** e.astype(float)
    vals = (A[m1, n1] * A[m2, n2] * B[m3, n3] * B[m4, n4]
            * f(r1, m1 + m2) * f(s1, n1 + n2) * f(r2, m3 + m4) * f(s2, n3 + n4)
            * _moment_weight(E, qv) / 2)
    return idx, vals


def q_four_product_check(z: Sequence, r1, r2, s1, s2, q, degree_cap: int = 16, points: int = 256) -> SeriesCheck:
    """Four-generating-function identity: closed left side against the
    truncated eight-fold sum, plus the quadrature value."""
    z = list(z)
    if len(z) != 4:
        raise ValueError("need four z values")
    t = [r1 * z[0], s1 * z[1], r2 * z[2], s2 * z[3]]
    if max(abs(x) for x in t) >= 1:
        raise DomainViolation("need |r1 z1|, |s1 z2|, |r2 z3|, |s2 z4| < 1")
    lhs = four_product_lhs(z, r1, r2, s1, s2, q)
    _, vals = four_product_terms(z, r1, r2, s1, s2, q, degree_cap)
    rhs = complex(csum(list(vals)))
    num = qpoch(r1 * s1, q) ** 2 * qpoch(r2 * s2, q) ** 2
    quad = _pairs_integral(t, num, q, points)
    return SeriesCheck(lhs, rhs, abs(lhs - rhs), quad)
