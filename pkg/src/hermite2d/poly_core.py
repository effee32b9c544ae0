"""Scalar special functions: Hermite, Laguerre, Charlier, I_0 and the
2D complex Hermite polynomials H_{m,n}(z1, z2).

Everything here is a pure function. Scalar inputs may be real or complex;
``hermite`` and the table builders also broadcast over numpy arrays.
"""
from __future__ import annotations

import cmath
import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ZeroParameter

__all__ = [
    "PolarPoint",
    "csum",
    "factorial",
    "gbinom",
    "hermite",
    "hermite_all",
    "laguerre",
    "laguerre_table",
    "charlier",
    "bessel_i0",
    "h2d_direct",
    "h2d_laguerre",
    "h2d_table",
    "gf_h2d_partial",
]


class PolarPoint(NamedTuple):
    rho: float
    theta: float

    @property
    def value(self) -> complex:
        return cmath.rect(self.rho, self.theta)


def _finite(*zs):
    for z in zs:
        if isinstance(z, np.ndarray):
            if not np.all(np.isfinite(z)):
                raise ValueError("non-finite input")
        elif not cmath.isfinite(complex(z)):
            raise ValueError(f"non-finite input {z!r}")


def csum(values: Sequence) -> complex | float:
    """Correctly rounded sum of real or complex values (fsum per component)."""
    vals = list(values)
    if all(not isinstance(v, complex) for v in vals):
        return math.fsum(vals)
    re = math.fsum(complex(v).real for v in vals)
    im = math.fsum(complex(v).imag for v in vals)
    return complex(re, im)


def factorial(n: int) -> float:
    return float(math.factorial(n))


def gbinom(t: int, j: int) -> int:
    """binom(t, j) for any integer t (negative allowed) and j >= 0, as a product."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= t - i
    return num // math.factorial(j)


def hermite(n: int, x):
    """Physicists' Hermite polynomial by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _finite(x)
    if n == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, 2 * x
    for k in range(1, n):
        prev, cur = cur, 2 * x * cur - 2 * k * prev
    return cur


def hermite_all(nmax: int, x) -> np.ndarray:
    """H_0(x), ..., H_nmax(x) stacked along a new leading axis."""
    x = np.asarray(x)
    out = np.empty((nmax + 1,) + x.shape, dtype=np.result_type(x, float))
    out[0] = 1
    if nmax >= 1:
        out[1] = 2 * x
    for k in range(1, nmax):
        out[k + 1] = 2 * x * out[k] - 2 * k * out[k - 1]
    return out


def laguerre(n: int, alpha: int, x):
    """Generalized Laguerre L_n^{(alpha)}(x) from its finite series.

    The binomial binom(n+alpha, n-k) is formed as an exact integer product,
    so negative integer alpha is fine.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _finite(x)
    terms = [
        (-1) ** k * gbinom(n + alpha, n - k) / math.factorial(k) * x**k
        for k in range(n + 1)
    ]
    if isinstance(x, np.ndarray):
        return np.sum(np.stack(terms), axis=0)
    return csum(terms)


def laguerre_table(nmax: int, alphas, x) -> np.ndarray:
    """L_n^{(alpha)}(x) for n = 0..nmax and every alpha in ``alphas``.

    Uses the three-term recurrence in n, which is a polynomial identity and
    therefore valid for negative alpha as well. Shape (nmax+1, len(alphas)).
    """
    a = np.asarray(alphas, dtype=float)
    dtype = np.result_type(x, float)
    out = np.empty((nmax + 1, a.size), dtype=dtype)
    out[0] = 1
    if nmax >= 1:
        out[1] = 1 + a - x
    for k in range(1, nmax):
        out[k + 1] = ((2 * k + 1 + a - x) * out[k] - (k + a) * out[k - 1]) / (k + 1)
    return out


def charlier(n: int, x: int, a: float) -> float:
    """Charlier C_n(x; a) via L_n^{(x-n)}(a) = (-a)^n C_n(x; a) / n!."""
    if a == 0:
        raise ZeroParameter("Charlier parameter a must be nonzero")
    return math.factorial(n) * (-a) ** (-n) * laguerre(n, x - n, a)


def bessel_i0(x, tol: float = 1e-17):
    """Modified Bessel I_0 from its power series; x may be complex."""
    _finite(x)
    q = (x / 2) ** 2
    term = 1.0
    terms = [term]
    k = 0
    while True:
        k += 1
        term = term * q / (k * k)
        terms.append(term)
        if abs(term) < tol * abs(sum(terms)) or k > 500:
            break
    return csum(terms)


def h2d_direct(m: int, n: int, z1, z2):
    """H_{m,n}(z1, z2) from the defining finite sum."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    _finite(z1, z2)
    terms = [
        (-1) ** k * math.factorial(k) * math.comb(m, k) * math.comb(n, k)
        * z1 ** (m - k) * z2 ** (n - k)
        for k in range(min(m, n) + 1)
    ]
    return csum(terms)


def h2d_laguerre(m: int, n: int, w1, w2):
    """H_{m,n}(w1, w2) as a monomial times one Laguerre polynomial."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    _finite(w1, w2)
    if m >= n:
        return (-1) ** n * math.factorial(n) * w1 ** (m - n) * laguerre(n, m - n, w1 * w2)
    return (-1) ** m * math.factorial(m) * w2 ** (n - m) * laguerre(m, n - m, w1 * w2)


def h2d_table(mmax: int, nmax: int, z1, z2, scaled: bool = False) -> np.ndarray:
    """Table T[m, n] = H_{m,n}(z1, z2), built with
    H_{m,n+1} = z2 H_{m,n} - m H_{m-1,n}.

    With ``scaled=True`` returns H_{m,n} / sqrt(m! n!), which stays bounded by
    e^{|z|^2} on the conjugate line and never overflows.
    """
    t = np.zeros((mmax + 1, nmax + 1), dtype=complex)
    m = np.arange(mmax + 1)
    if scaled:
        t[0, 0] = 1
        for i in range(1, mmax + 1):
            t[i, 0] = t[i - 1, 0] * z1 / math.sqrt(i)
        sm = np.sqrt(m)
        for j in range(nmax):
            col = z2 * t[:, j]
            col[1:] -= sm[1:] * t[:-1, j]
            t[:, j + 1] = col / math.sqrt(j + 1)
    else:
        t[:, 0] = np.asarray(z1, dtype=complex) ** m
        for j in range(nmax):
            col = z2 * t[:, j]
            col[1:] -= m[1:] * t[:-1, j]
            t[:, j + 1] = col
    return t


def gf_h2d_partial(z1, z2, u, v, degree_cap: int):
    """Partial sum of the H_{m,n} generating function over m + n <= degree_cap."""
    if degree_cap < 0:
        raise ValueError("degree_cap must be nonnegative")
    terms = []
    for m in range(degree_cap + 1):
        for n in range(degree_cap - m + 1):
            terms.append(
                h2d_direct(m, n, z1, z2) * u**m * v**n
                / (math.factorial(m) * math.factorial(n))
            )
    return csum(terms)
