"""Both sides of the real and complex Kibble-Slepian expansions.

Left sides are closed forms evaluated with LU factorizations. Right sides
are summed shell by shell (all K with a fixed entry sum). Two evaluators
exist for every series:

``method="aggregate"``
    Groups a shell by its row/column-sum class. The weight of a class is a
    Taylor coefficient of exp(u^T H v) (complex case) or exp(y^T S y / 4)
    (real case); these are advanced one degree at a time, so a shell costs
    O(#classes) instead of O(#matrices). Coefficients are carried scaled by
    sqrt(r! c!) so nothing overflows at high degree.

``method="enumerate"``
    Sums the literal per-K terms one matrix at a time. Slow; used to
    cross-check the aggregate path at low degree.
"""
from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np
import scipy.linalg

from . import multi_index as mi
from .errors import (
    AsymmetryError,
    DomainViolation,
    IllConditioned,
    TruncationNotConverged,
)
from .poly_core import (
    PolarPoint,
    bessel_i0,
    charlier,
    csum,
    h2d_direct,
    h2d_table,
    hermite,
    laguerre,
    laguerre_table,
)

COND_LIMIT = 1e12
SYMMETRY_TOL = 1e-14
HERMITIAN_TOL = 1e-12
ROUNDING_FLOOR = 4 * np.finfo(float).eps
# largest (r, c) class table the aggregate path will allocate, in entries
MAX_CLASS_ENTRIES = 8_000_000


@dataclass(frozen=True)
class TruncationPolicy:
    max_degree: int = 30
    shell_tol: float = 1e-12
    quiet_shells: int = 3

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        if not 0 < self.shell_tol < 1:
            raise ValueError("shell_tol must lie in (0, 1)")
        if self.quiet_shells < 1:
            raise ValueError("quiet_shells must be >= 1")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    degree_reached: int
    last_shell_norm: float
    term_count: int
    shell_sums: tuple = field(default=(), repr=False)
    domain: Optional[str] = None
    converged: bool = True


# -- matrix helpers ---------------------------------------------------------

def frobenius_norm(M) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(M)) ** 2)))


def max_norm(M) -> float:
    M = np.asarray(M)
    return float(np.max(np.abs(M))) if M.size else 0.0


def is_hermitian(H, tol: float = HERMITIAN_TOL) -> bool:
    H = np.asarray(H)
    return bool(np.all(np.abs(H - H.conj().T) <= tol))


def in_domain_real(S) -> bool:
    return frobenius_norm(S) < 1


def in_domain_complex(H) -> bool:
    H = np.asarray(H)
    return max_norm(H) < 1 / H.shape[0]


def complex_domain(H) -> Optional[str]:
    """'ball' for the max-norm ball, 'hermitian' for a Hermitian H with
    Frobenius norm below one, None if neither applies."""
    if in_domain_complex(H):
        return "ball"
    if is_hermitian(H) and frobenius_norm(H) < 1:
        return "hermitian"
    return None


def symmetric_coordinates(H):
    """(diag, u, v) with u_{l,k} = (h_lk + h_kl)/2 and v_{l,k} = (h_lk - h_kl)/(2i), l < k."""
    H = np.asarray(H, dtype=complex)
    N = H.shape[0]
    iu = np.triu_indices(N, 1)
    u = (H[iu] + H.T[iu]) / 2
    v = (H[iu] - H.T[iu]) / 2j
    return np.diag(H).copy(), u, v


def in_box_domain(H, H0, delta) -> bool:
    """Membership in the box D(H0, delta) around a reference matrix H0."""
    delta = np.asarray(delta, dtype=float)
    d, u, v = symmetric_coordinates(H)
    d0, u0, v0 = symmetric_coordinates(H0)
    N = delta.shape[0]
    iu = np.triu_indices(N, 1)
    return bool(
        np.all(np.abs(d - d0) < np.diag(delta))
        and np.all(np.abs(u - u0) < delta[iu])
        and np.all(np.abs(v - v0) < delta[iu])
    )


def _lu(M):
    M = np.asarray(M)
    if np.linalg.cond(M) >= COND_LIMIT:
        raise IllConditioned("matrix condition number exceeds 1e12")
    lu, piv = scipy.linalg.lu_factor(M)
    swaps = int(np.sum(piv != np.arange(len(piv))))
    det = (-1) ** swaps * np.prod(np.diag(lu))
    return (lu, piv), det


def _check_symmetric(S):
    if np.any(np.abs(S - S.T) > SYMMETRY_TOL):
        raise AsymmetryError("S must be symmetric to 1e-14 entrywise")


def lhs_real(S, X) -> float:
    """det(I+S)^(-1/2) exp(X^T S (I+S)^{-1} X) for real symmetric S, ||S|| < 1."""
    S = np.asarray(S, dtype=float)
    X = np.asarray(X, dtype=float)
    if not in_domain_real(S):
        raise DomainViolation("need Frobenius norm ||S|| < 1")
    _check_symmetric(S)
    fac, det = _lu(np.eye(len(X)) + S)
    y = scipy.linalg.lu_solve(fac, X)
    return float(det ** -0.5 * math.exp(X @ S @ y))


def lhs_complex(H, W) -> complex:
    """det(I+H)^{-1} exp(W* H (I+H)^{-1} W)."""
    H = np.asarray(H, dtype=complex)
    W = np.asarray(W, dtype=complex)
    if complex_domain(H) is None:
        raise DomainViolation("need ||H||_inf < 1/N, or H Hermitian with ||H|| < 1")
    fac, det = _lu(np.eye(len(W)) + H)
    y = scipy.linalg.lu_solve(fac, W)
    return complex(cmath.exp(W.conj() @ H @ y) / det)


# -- shell driver -----------------------------------------------------------

def _drive(shells: Iterator[tuple[complex, int]], policy: TruncationPolicy,
           domain: Optional[str] = None, trivial: bool = False) -> SeriesResult:
    """Sum shells until ``quiet_shells`` consecutive shells are negligible.

    A shell is negligible when it is below ``shell_tol`` times the running
    sum, or below the rounding floor (a few ulps of the largest shell seen),
    which is what limits the sum when the shells cancel heavily.
    """
    sums: list[complex] = []
    count = 0
    quiet = 0
    partial = 0j
    biggest = 0.0
    for d, (s, n) in enumerate(shells):
        sums.append(complex(s))
        count += n
        partial = csum(sums)
        biggest = max(biggest, abs(s))
        if trivial:
            break
        floor = max(policy.shell_tol * abs(partial), ROUNDING_FLOOR * biggest)
        quiet = quiet + 1 if abs(s) <= floor else 0
        if quiet >= policy.quiet_shells or d >= policy.max_degree:
            break
    result = SeriesResult(
        value=complex(partial),
        degree_reached=len(sums) - 1,
        last_shell_norm=abs(sums[-1]),
        term_count=count,
        shell_sums=tuple(sums),
        domain=domain,
        converged=trivial or quiet >= 1,
    )
    if not result.converged:
        raise TruncationNotConverged(
            f"stopped at degree {result.degree_reached} (max_degree "
            f"{policy.max_degree}) with last shell {result.last_shell_norm:.3e} "
            "above tolerance", partial=result)
    return result


# -- composition index maps -------------------------------------------------

class _Simplex:
    """Compositions of each total into ``parts`` cells, with the maps that add
    a unit vector e_m (total -> total + 1)."""

    def __init__(self, parts: int):
        self.parts = parts
        self._lookup: dict[int, np.ndarray] = {}
        self._up: dict[tuple[int, int], np.ndarray] = {}

    def comps(self, total: int) -> np.ndarray:
        return mi.composition_table(total, self.parts)[0]

    def lookup(self, total: int) -> np.ndarray:
        if total not in self._lookup:
            arr = self.comps(total)
            tab = np.full((total + 1,) * (self.parts - 1), -1, dtype=np.int64)
            tab[tuple(arr[:, :-1].T)] = np.arange(len(arr))
            self._lookup[total] = tab
        return self._lookup[total]

    def up(self, total: int, m: int) -> np.ndarray:
        """Row index in comps(total+1) of every comps(total) row plus e_m."""
        key = (total, m)
        if key not in self._up:
            tgt = self.comps(total).copy()
            tgt[:, m] += 1
            if self.parts == 1:
                self._up[key] = np.zeros(len(tgt), dtype=np.int64)
            else:
                self._up[key] = self.lookup(total + 1)[tuple(tgt[:, :-1].T)]
        return self._up[key]


_SIMPLICES: dict[int, _Simplex] = {}


def _simplex(parts: int) -> _Simplex:
    if parts not in _SIMPLICES:
        _SIMPLICES[parts] = _Simplex(parts)
    return _SIMPLICES[parts]


# -- real series ------------------------------------------------------------

def _scaled_hermite_rows(nmax: int, X) -> np.ndarray:
    """h[l, k] = H_k(x_l) / sqrt(2^k k!) via its normalized recurrence."""
    X = np.asarray(X, dtype=float)
    h = np.zeros((len(X), nmax + 1))
    h[:, 0] = 1
    if nmax >= 1:
        h[:, 1] = math.sqrt(2) * X
    for k in range(1, nmax):
        h[:, k + 1] = X * math.sqrt(2 / (k + 1)) * h[:, k] - math.sqrt(k / (k + 1)) * h[:, k - 1]
    return h


def _real_shells_aggregate(S, X, max_degree):
    N = len(X)
    simplex = _simplex(N)
    hx = _scaled_hermite_rows(2 * max_degree + 2, X)
    pairs = [(m, n) for m in range(N) for n in range(m, N)]
    qcoef = {(m, n): S[m, n] / 4 if m == n else S[m, n] / 2 for m, n in pairs}
    # coefficients of exp(y^T S y / 4), degree 2d, scaled by sqrt(2^k k!) per variable
    P = np.ones(1)
    for d in range(max_degree + 1):
        if d > 0:
            src = simplex.comps(2 * d - 2)
            new = np.zeros(len(simplex.comps(2 * d)))
            for m, n in pairs:
                if qcoef[m, n] == 0:
                    continue
                mid = simplex.up(2 * d - 2, m)
                tgt = simplex.up(2 * d - 1, n)[mid]
                if m == n:
                    fac = np.sqrt((src[:, m] + 1) * (src[:, m] + 2)) * 2
                else:
                    fac = np.sqrt((src[:, m] + 1) * (src[:, n] + 1)) * 2
                new[tgt] += qcoef[m, n] * fac * P / d
            P = new
        comps = simplex.comps(2 * d)
        herm = np.prod(hx[np.arange(N), comps], axis=1)
        yield float(np.sum(P * herm)), mi.shell_size(N, d, True)


def _real_shells_enumerate(S, X, max_degree):
    N = len(X)
    cells = mi.free_cells(N, True)
    svals = np.array([S[m, n] for m, n in cells])
    H = [[hermite(k, float(x)) for k in range(2 * max_degree + 2)] for x in X]
    for d in range(max_degree + 1):
        terms = []
        for K in mi.enumerate_shell(N, d, True):
            ks = [K.entries[m][n] for m, n in cells]
            t = 1.0
            for s, k in zip(svals, ks):
                t *= s**k / (2**k * math.factorial(k))
            t *= 2.0 ** -K.trace
            for l, kl in enumerate(mi.derived_sums(K).k_ell):
                t *= H[l][kl]
            terms.append(t)
        yield csum(terms), len(terms)


def rhs_real(S, X, policy: TruncationPolicy = TruncationPolicy(),
             method: str = "aggregate") -> SeriesResult:
    """Shell-summed right side of the real Kibble-Slepian expansion."""
    S = np.asarray(S, dtype=float)
    X = np.asarray(X, dtype=float)
    if not in_domain_real(S):
        raise DomainViolation("need Frobenius norm ||S|| < 1")
    _check_symmetric(S)
    gen = {"aggregate": _real_shells_aggregate, "enumerate": _real_shells_enumerate}[method]
    res = _drive(gen(S, X, policy.max_degree), policy, domain="frobenius",
                 trivial=not np.any(S))
    return dataclasses.replace(res, value=res.value.real)


# -- complex series ---------------------------------------------------------

def _complex_shells_aggregate(H, tables, max_degree):
    """tables[j][r, c] holds the j-th site factor divided by sqrt(r! c!)."""
    N = H.shape[0]
    simplex = _simplex(N)
    A = np.ones((1, 1), dtype=complex)
    for d in range(max_degree + 1):
        if d > 0:
            src = simplex.comps(d - 1)
            cnt = len(simplex.comps(d))
            if cnt * cnt > MAX_CLASS_ENTRIES:
                return
            # column shifts by e_n, then mix with h_mn and shift rows by e_m
            Z = np.zeros((N, len(src), cnt), dtype=complex)
            for n in range(N):
                Z[n][:, simplex.up(d - 1, n)] = A * np.sqrt(src[:, n] + 1.0)[None, :]
            Y = np.tensordot(H / d, Z, axes=(1, 0))
            new = np.zeros((cnt, cnt), dtype=complex)
            for m in range(N):
                new[simplex.up(d - 1, m)] += np.sqrt(src[:, m] + 1.0)[:, None] * Y[m]
            A = new
        comps = simplex.comps(d)
        G = np.ones(A.shape, dtype=complex)
        for j in range(N):
            G *= tables[j][comps[:, j]][:, comps[:, j]]
        yield complex(np.sum(A * G)), mi.shell_size(N, d, False)


def _hermite_site_tables(W, max_degree):
    return [h2d_table(max_degree, max_degree, w.conjugate(), w, scaled=True) for w in W]


def _laguerre_site_tables(polar: Sequence[PolarPoint], max_degree, orientation="conjugate"):
    """(-1)^c c! wbar^{r-c} L_c^{(r-c)}(rho^2) / sqrt(r! c!) on an (r, c) grid.

    ``orientation="direct"`` uses (rho e^{+i theta})^{r-c} instead of wbar.
    Entries with r < c go through L_c^{(-k)}(x) = (-x)^k (c-k)!/c! L_{c-k}^{(k)}(x),
    which turns rho^{r-c} L_c^{(r-c)} (huge times tiny) into rho^{c-r} L_r^{(c-r)}.
    """
    D = max_degree
    r = np.arange(D + 1)[:, None]
    c = np.arange(D + 1)[None, :]
    lo, k = np.minimum(r, c), np.abs(r - c)
    sign = -1 if orientation == "conjugate" else 1
    out = []
    for p in polar:
        if p.rho <= 0:
            raise DomainViolation("Laguerre form needs rho > 0")
        L = laguerre_table(D, np.arange(D + 1), p.rho**2)  # L[n, alpha]
        lag = L[lo, k]
        logmag = 0.5 * (_lgam(lo) - _lgam(np.maximum(r, c))) + k * math.log(p.rho)
        phase = np.exp(sign * 1j * p.theta * (r - c))
        out.append(((-1.0) ** lo) * np.exp(logmag) * phase * lag)
    return out


def _lgam(k):
    return np.vectorize(math.lgamma)(np.asarray(k) + 1.0)


def _complex_shells_enumerate(H, W, max_degree, factor):
    """factor(j, r, c) gives the per-site term; generic so both the Hermite
    and Laguerre forms can be written out literally."""
    N = H.shape[0]
    hflat = H.reshape(-1)
    for d in range(max_degree + 1):
        terms = []
        for K in mi.enumerate_shell(N, d, False):
            ks = [k for row in K.entries for k in row]
            t = 1 + 0j
            for h, k in zip(hflat, ks):
                t *= h**k / math.factorial(k)
            ds = mi.derived_sums(K)
            for j in range(N):
                t *= factor(j, ds.row_sums[j], ds.col_sums[j], K)
            terms.append(t)
        yield csum(terms), len(terms)


def _check_complex(H, W):
    H = np.asarray(H, dtype=complex)
    W = np.asarray(W, dtype=complex)
    if H.shape != (len(W), len(W)):
        raise ValueError("H must be N x N with N = len(W)")
    dom = complex_domain(H)
    if dom is None:
        raise DomainViolation("need ||H||_inf < 1/N, or H Hermitian with ||H|| < 1")
    return H, W, dom


def rhs_complex(H, W, policy: TruncationPolicy = TruncationPolicy(max_degree=150, shell_tol=1e-12),
                method: str = "aggregate") -> SeriesResult:
    """Shell-summed sum_K prod h^k/k! prod_j H_{r_j,c_j}(conj(w_j), w_j)."""
    H, W, dom = _check_complex(H, W)
    D = policy.max_degree
    if method == "aggregate":
        gen = _complex_shells_aggregate(H, _hermite_site_tables(W, D), D)
    elif method == "enumerate":
        def factor(j, r, c, K):
            return h2d_direct(r, c, W[j].conjugate(), W[j])
        gen = _complex_shells_enumerate(H, W, D, factor)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _drive(gen, policy, domain=dom, trivial=not np.any(H))


def rhs_laguerre(H, W_polar: Sequence[PolarPoint],
                 policy: TruncationPolicy = TruncationPolicy(max_degree=150, shell_tol=1e-12),
                 method: str = "aggregate", orientation: str = "conjugate") -> SeriesResult:
    """The complex series with every site factor written through Laguerre
    polynomials. ``orientation="direct"`` uses the e^{+i theta} phase instead,
    which sums the series for H transposed."""
    if orientation not in ("conjugate", "direct"):
        raise ValueError(f"unknown orientation {orientation!r}")
    polar = [PolarPoint(float(p[0]), float(p[1])) for p in W_polar]
    W = np.array([p.value for p in polar])
    H, W, dom = _check_complex(H, W)
    if any(p.rho <= 0 for p in polar):
        raise DomainViolation("Laguerre form needs rho > 0")
    D = policy.max_degree
    if method == "aggregate":
        gen = _complex_shells_aggregate(H, _laguerre_site_tables(polar, D, orientation), D)
    elif method == "enumerate":
        sign = -1 if orientation == "conjugate" else 1

        def factor(j, r, c, K):
            p = polar[j]
            return ((-1) ** c * math.factorial(c) * cmath.rect(p.rho, sign * p.theta) ** (r - c)
                    * laguerre(c, r - c, p.rho**2))
        gen = _complex_shells_enumerate(H, W, D, factor)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _drive(gen, policy, domain=dom, trivial=not np.any(H))


def shell_bound(H, W, degree: int) -> float:
    """Cauchy-Schwarz bound on the absolute shell sum at ``degree``:
    e^{sum |w|^2} * binom(d+N-1, N-1) * (N ||H||_inf)^d."""
    H = np.asarray(H)
    N = H.shape[0]
    return (math.exp(float(np.sum(np.abs(W) ** 2)))
            * math.comb(degree + N - 1, N - 1) * (N * max_norm(H)) ** degree)


# -- exponential expansions (monomial analogues) ----------------------------

def exp_quadratic_series_real(S, Y, policy: TruncationPolicy = TruncationPolicy(max_degree=40)) -> SeriesResult:
    """Shell expansion of exp(-Y^T S Y):
    sum_K 2^{-tr K} prod_{m<=n} (-2 s_mn)^k / k! * prod_l y_l^{k_l}."""
    S = np.asarray(S, dtype=float)
    Y = np.asarray(Y, dtype=complex)
    N = len(Y)
    cells = mi.free_cells(N, True)
    coef = np.array([-2 * S[m, n] / (2 if m == n else 1) for m, n in cells], dtype=complex)
    powers = np.zeros((N, len(cells)), dtype=np.int64)
    for i, (m, n) in enumerate(cells):
        powers[m, i] += 1
        powers[n, i] += 1
    gen = _shells_from(coef, powers, Y, N, True, policy.max_degree)
    return _drive(gen, policy, trivial=not np.any(S))


def exp_quadratic_series_complex(H, Z, policy: TruncationPolicy = TruncationPolicy(max_degree=40)) -> SeriesResult:
    """Shell expansion of exp(-Z* H Z):
    sum_K prod_j conj(z_j)^{r_j} z_j^{c_j} prod (-h_mn)^k / k!."""
    H = np.asarray(H, dtype=complex)
    Z = np.asarray(Z, dtype=complex)
    N = len(Z)
    cells = mi.free_cells(N, False)
    coef = np.array([-H[m, n] for m, n in cells])
    # bases conj(z_1..z_N), z_1..z_N; exponents are row sums then column sums
    powers = np.zeros((2 * N, len(cells)), dtype=np.int64)
    for i, (m, n) in enumerate(cells):
        powers[m, i] += 1
        powers[N + n, i] += 1
    base = np.concatenate([Z.conj(), Z])
    gen = _shells_from(coef, powers, base, N, False, policy.max_degree)
    return _drive(gen, policy, trivial=not np.any(H))


def _shells_from(coef, powers, base, N, symmetric, max_degree):
    logfact = np.array([math.lgamma(k + 1) for k in range(max_degree + 1)])
    for d in range(max_degree + 1):
        K = mi.shell_array(N, d, symmetric)
        t = np.prod(coef[None, :] ** K, axis=1) * np.exp(-logfact[K].sum(axis=1))
        t = t * np.prod(base[None, :] ** (K @ powers.T), axis=1)
        yield complex(np.sum(t)), len(K)


# -- Charlier bilinear sum --------------------------------------------------

def charlier_bilinear_closed(u, v, x, y, form: str = "standard") -> float:
    """Closed form of the off-diagonal Charlier bilinear sum.

    ``form="standard"`` is the version confirmed against brute force;
    ``form="variant"`` is kept only to show it disagrees.
    """
    d = x * y - u * v
    if form == "standard":
        first = x * y / d * math.exp(((u + v) * x * y - u * v * (x + y)) / d)
        arg = 2 * cmath.sqrt(u * v) * x * y / d
        second = x * y / d * math.exp(-u * v * (x + y) / d) * complex(bessel_i0(arg)).real
    elif form == "variant":
        first = x * y / d * math.exp(-x * y * (x * u * v - x * y * (u + v) + y * u * v) / d)
        arg = 2 * cmath.sqrt(u * v * (x * y) ** 1.5) / d
        second = x * y / d * math.exp(-u * v * (x * x + y * y) / d) * complex(bessel_i0(arg)).real
    else:
        raise ValueError(f"unknown form {form!r}")
    return first - second


def charlier_bilinear_sum(u, v, x, y, degree_cap: int) -> float:
    terms = []
    for k in range(1, degree_cap + 1):
        for j in range(min(k, degree_cap - k + 1)):
            w = (u**j * v**k + u**k * v**j) / (math.factorial(j) * math.factorial(k))
            terms.append(w * charlier(j, k, x) * charlier(j, k, y))
    return csum(terms)


def charlier_bilinear_check(u, v, x, y, degree_cap: int = 40, form: str = "standard"):
    """(closed form, brute-force double sum over 0 <= j < k, j + k <= cap)."""
    if x <= 0 or y <= 0:
        raise DomainViolation("need x, y > 0")
    lim = min(x * y / 4, math.sqrt(x * y))
    if abs(u) >= lim or abs(v) >= lim:
        raise DomainViolation("need |u|, |v| < min(xy/4, sqrt(xy))")
    return charlier_bilinear_closed(u, v, x, y, form), charlier_bilinear_sum(u, v, x, y, degree_cap)


# -- seeded corpora ---------------------------------------------------------

def _disk(rng, shape):
    r = np.sqrt(rng.uniform(0, 1, shape))
    t = rng.uniform(0, 2 * np.pi, shape)
    return r * np.exp(1j * t)


def random_symmetric(rng, N: int, norm: float) -> np.ndarray:
    """Real symmetric S, entries uniform in [-1, 1], rescaled so that
    ||S|| is uniform in [norm/2, norm]."""
    A = rng.uniform(-1, 1, (N, N))
    S = np.triu(A) + np.triu(A, 1).T
    return S * rng.uniform(norm / 2, norm) / frobenius_norm(S)


def random_general(rng, N: int, max_entry: float) -> np.ndarray:
    """Complex H, entries uniform in the unit disk, rescaled so that
    ||H||_inf is uniform in [max_entry/2, max_entry]."""
    H = _disk(rng, (N, N))
    return H * rng.uniform(max_entry / 2, max_entry) / max_norm(H)


def random_hermitian(rng, N: int, norm: float) -> np.ndarray:
    A = _disk(rng, (N, N))
    H = (A + A.conj().T) / 2
    return H * rng.uniform(norm / 2, norm) / frobenius_norm(H)


def random_vector(rng, N: int, radius: float, complex_: bool = True, min_radius: float = 0.0):
    if not complex_:
        return rng.uniform(-radius, radius, N)
    r = np.sqrt(rng.uniform((min_radius / radius) ** 2, 1, N)) * radius
    return r * np.exp(1j * rng.uniform(0, 2 * np.pi, N))
