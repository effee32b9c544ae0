"""Catalog of verification suites.

Each suite turns its parameters and a seeded generator into a list of cases
(plain dicts), and evaluates one case into an Outcome. Cases are built in
the parent process so the corpus never depends on worker scheduling.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .. import integral_reps as ir
from .. import ks_series as ks
from .. import poly_core as pc
from .. import q_series as qs
from ..ks_series import TruncationPolicy


@dataclass(frozen=True)
class Outcome:
    lhs: complex
    rhs: complex
    effort: Optional[int] = None
    # further errors that must also stay within tolerance, keyed by name
    extra_errors: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Settings:
    params: dict
    truncation: Optional[TruncationPolicy]
    points: Optional[int]


@dataclass(frozen=True)
class SuiteSpec:
    id: str
    tag: str
    description: str
    defaults: dict
    tolerance: float
    metric: str
    cases: Callable[[dict, np.random.Generator], list]
    evaluate: Callable[[dict, Settings], Outcome]
    truncation: Optional[TruncationPolicy] = None
    points: Optional[int] = None
    corpus: Optional[str] = None


CATALOG: dict[str, SuiteSpec] = {}


def suite(id, tag, description, defaults, tolerance, metric="rel",
          truncation=None, points=None, corpus=None):
    def register(pair):
        cases, evaluate = pair
        if id in CATALOG:
            raise ValueError(f"duplicate suite id {id}")
        CATALOG[id] = SuiteSpec(id, tag, description, dict(defaults), tolerance, metric,
                                cases, evaluate, truncation, points, corpus)
        return pair
    return register


def _disk_point(rng, radius, min_radius=0.0) -> complex:
    return complex(ks.random_vector(rng, 1, radius, min_radius=min_radius)[0])


def _grid(mmax, nmax):
    return [(m, n) for m in range(mmax + 1) for n in range(nmax + 1)]


# -- Kibble-Slepian ---------------------------------------------------------

def _real_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            S = ks.random_symmetric(rng, N, p["norm"])
            X = ks.random_vector(rng, N, p["x_radius"], complex_=False)
            out.append({"N": N, "S": S, "X": X})
    return out


def _real_eval(c, st):
    res = ks.rhs_real(c["S"], c["X"], st.truncation)
    return Outcome(ks.lhs_real(c["S"], c["X"]), res.value, res.degree_reached)


suite("ks.real.identity",
      "det(I+S)^(-1/2) exp(X^T S (I+S)^-1 X) = sum_K prod_{m<=n} s^k/(2^k k!) 2^-tr(K) prod_l H_{k_l}(x_l)",
      "real Kibble-Slepian expansion, random symmetric S with ||S|| <= norm",
      {"dims": [1, 2, 3], "samples": 50, "norm": 0.3, "x_radius": 1.0}, 1e-7,
      truncation=TruncationPolicy(max_degree=30, shell_tol=1e-12, quiet_shells=3),
      )((_real_cases, _real_eval))

COMPLEX_POLICY = TruncationPolicy(max_degree=150, shell_tol=1e-12, quiet_shells=3)


def _complex_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            H = ks.random_general(rng, N, p["max_entry"] / N)
            W = ks.random_vector(rng, N, p["w_radius"])
            out.append({"N": N, "H": H, "W": W})
    return out


def _hermitian_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            H = ks.random_hermitian(rng, N, p["norm"])
            W = ks.random_vector(rng, N, p["w_radius"])
            out.append({"N": N, "H": H, "W": W})
    return out


def _complex_eval(c, st):
    res = ks.rhs_complex(c["H"], c["W"], st.truncation)
    return Outcome(ks.lhs_complex(c["H"], c["W"]), res.value, res.degree_reached,
                   extra={"domain": res.domain})


COMPLEX_TAG = "det(I+H)^-1 exp(W* H (I+H)^-1 W) = sum_K prod h^k/k! prod_j H_{r_j,c_j}(conj w_j, w_j)"

suite("ks.complex.identity", COMPLEX_TAG,
      "complex Kibble-Slepian expansion, general complex H with ||H||_inf <= max_entry/N",
      {"dims": [1, 2, 3], "samples": 50, "max_entry": 0.8, "w_radius": 1.5}, 1e-7,
      truncation=COMPLEX_POLICY)((_complex_cases, _complex_eval))

suite("ks.complex.hermitian", COMPLEX_TAG,
      "complex Kibble-Slepian expansion, Hermitian H with Frobenius norm <= norm",
      {"dims": [3], "samples": 20, "norm": 0.5, "w_radius": 1.5}, 1e-7,
      truncation=COMPLEX_POLICY)((_hermitian_cases, _complex_eval))


def _laguerre_cases(p, rng):
    # same draws as the two complex corpora: the runner hands this suite the
    # generators of both, keyed by their suite ids
    gens = rng
    a = _complex_cases({"dims": p["dims"], "samples": p["samples"], "max_entry": p["max_entry"],
                        "w_radius": p["w_radius"]}, gens["ks.complex.identity"])
    b = _hermitian_cases({"dims": p["hermitian_dims"], "samples": p["hermitian_samples"],
                          "norm": p["hermitian_norm"], "w_radius": p["w_radius"]},
                         gens["ks.complex.hermitian"])
    return [c for c in a + b if np.all(np.abs(c["W"]) > 0)]


def _laguerre_eval(c, st):
    polar = [pc.PolarPoint(abs(w), cmath.phase(w)) for w in c["W"]]
    base = ks.rhs_complex(c["H"], c["W"], st.truncation)
    lag = ks.rhs_laguerre(c["H"], polar, st.truncation)
    return Outcome(base.value, lag.value, lag.degree_reached)


suite("ks.laguerre",
      "sum_K prod (-h)^k prod_m multinom(c_m; k_.m) (rho_m e^{-i theta_m})^{r_m-c_m} L_{c_m}^{(r_m-c_m)}(rho_m^2)"
      " = sum_K prod h^k/k! prod_j H_{r_j,c_j}(conj w_j, w_j)",
      "Laguerre form of the complex series against the Hermite form, on both complex corpora",
      {"dims": [1, 2, 3], "samples": 50, "max_entry": 0.8, "w_radius": 1.5,
       "hermitian_dims": [3], "hermitian_samples": 20, "hermitian_norm": 0.5}, 1e-10,
      truncation=COMPLEX_POLICY,
      corpus=("ks.complex.identity", "ks.complex.hermitian"))((_laguerre_cases, _laguerre_eval))


def _tail_eval(c, st):
    res = ks.rhs_complex(c["H"], c["W"], st.truncation)
    ratio = max(abs(s) / ks.shell_bound(c["H"], c["W"], d) for d, s in enumerate(res.shell_sums))
    return Outcome(ratio, 1.0, res.degree_reached)


suite("ks.tail_bound",
      "|shell_d| <= e^{sum |w|^2} binom(d+N-1, N-1) (N ||H||_inf)^d",
      "every shell of the complex series stays under the Cauchy-Schwarz bound",
      {"dims": [1, 2, 3], "samples": 50, "max_entry": 0.8, "w_radius": 1.5}, 1.0,
      metric="bound", truncation=COMPLEX_POLICY,
      corpus="ks.complex.identity")((_complex_cases, _tail_eval))


def _charlier_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        x = int(rng.choice(p["xs"]))
        y = int(rng.choice(p["xs"]))
        lim = x * y * p["uv_scale"]
        u, v = rng.uniform(-lim, lim, 2)
        out.append({"u": float(u), "v": float(v), "x": x, "y": y})
    return out


def _charlier_eval(c, st):
    lhs, rhs = ks.charlier_bilinear_check(c["u"], c["v"], c["x"], c["y"], st.params["cap"])
    return Outcome(lhs, rhs, st.params["cap"])


suite("ks.charlier",
      "xy/(xy-uv) [exp(((u+v)xy-uv(x+y))/(xy-uv)) - exp(-uv(x+y)/(xy-uv)) I0(2 sqrt(uv) xy/(xy-uv))] "
      "= sum_{j<k} (u^j v^k + u^k v^j)/(j! k!) C_j(k;x) C_j(k;y)",
      "bilinear Charlier sum against its closed form",
      {"samples": 10, "xs": [1, 2, 3], "uv_scale": 0.125, "cap": 40}, 1e-6,
      )((_charlier_cases, _charlier_eval))


def _exp_quadratic_real_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            out.append({"N": N, "S": ks.random_symmetric(rng, N, p["norm"]),
                        "Y": ks.random_vector(rng, N, p["radius"])})
    return out


def _exp_quadratic_real_eval(c, st):
    res = ks.exp_quadratic_series_real(c["S"], c["Y"], st.truncation)
    Y = np.asarray(c["Y"])
    return Outcome(complex(np.exp(-Y @ c["S"] @ Y)), res.value, res.degree_reached)


suite("ks.exp_quadratic_real",
      "exp(-Y^T S Y) = sum_K prod_{m<=n} (-2 s)^k/k! 2^-tr(K) prod_l y_l^{k_l}",
      "shell expansion of a real quadratic-form exponential",
      {"dims": [1, 2, 3], "samples": 10, "norm": 0.5, "radius": 1.0}, 1e-9,
      truncation=TruncationPolicy(max_degree=40, shell_tol=1e-13))((_exp_quadratic_real_cases, _exp_quadratic_real_eval))


def _exp_quadratic_complex_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            out.append({"N": N, "H": ks.random_general(rng, N, p["max_entry"] / N),
                        "Z": ks.random_vector(rng, N, p["radius"])})
    return out


def _exp_quadratic_complex_eval(c, st):
    res = ks.exp_quadratic_series_complex(c["H"], c["Z"], st.truncation)
    Z = np.asarray(c["Z"])
    return Outcome(complex(np.exp(-Z.conj() @ c["H"] @ Z)), res.value, res.degree_reached)


suite("ks.exp_quadratic_complex",
      "exp(-Z* H Z) = sum_K prod_j conj(z_j)^{r_j} z_j^{c_j} prod (-h)^k/k!",
      "shell expansion of a Hermitian-form exponential, general complex H",
      {"dims": [1, 2, 3], "samples": 10, "max_entry": 0.5, "radius": 1.0}, 1e-9,
      truncation=TruncationPolicy(max_degree=40, shell_tol=1e-13))((_exp_quadratic_complex_cases, _exp_quadratic_complex_eval))


# -- 2D Hermite polynomials -------------------------------------------------

def _growth_bound_cases(p, rng):
    return [{"z": _disk_point(rng, p["radius"])} for _ in range(p["samples"])]


def _growth_bound_eval(c, st):
    z = c["z"]
    worst = 0.0
    T = pc.h2d_table(st.params["mmax"], st.params["nmax"], z.conjugate(), z)
    for m, n in _grid(st.params["mmax"], st.params["nmax"]):
        bound = math.exp(abs(z) ** 2) * math.sqrt(math.factorial(m) * math.factorial(n))
        worst = max(worst, abs(pc.h2d_direct(m, n, z.conjugate(), z)) / bound, abs(T[m, n]) / bound)
    return Outcome(worst, 1.0)


suite("poly.growth_bound", "|H_{m,n}(conj z, z)| <= e^{|z|^2} sqrt(m! n!)",
      "growth bound on the conjugate line; lhs is the worst ratio over the index grid",
      {"samples": 200, "radius": 2.0, "mmax": 10, "nmax": 10}, 1.0,
      metric="bound")((_growth_bound_cases, _growth_bound_eval))


def _laguerre_route_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        m, n = (int(v) for v in rng.integers(0, p["max_index"] + 1, 2))
        out.append({"m": m, "n": n, "w1": _disk_point(rng, p["radius"]),
                    "w2": _disk_point(rng, p["radius"])})
    return out


def _laguerre_route_eval(c, st):
    return Outcome(pc.h2d_direct(c["m"], c["n"], c["w1"], c["w2"]),
                   pc.h2d_laguerre(c["m"], c["n"], c["w1"], c["w2"]))


suite("poly.h2d.laguerre_route",
      "H_{m,n}(w1,w2) = (-1)^n n! w1^{m-n} L_n^{(m-n)}(w1 w2), m >= n",
      "defining sum against the single-Laguerre form",
      {"samples": 100, "max_index": 10, "radius": 1.5}, 1e-10)((_laguerre_route_cases, _laguerre_route_eval))


def _gf_cases(p, rng):
    return [{k: _disk_point(rng, p["z_radius"] if k.startswith("z") else p["uv_radius"])
             for k in ("z1", "z2", "u", "v")} for _ in range(p["samples"])]


def _gf_eval(c, st):
    lhs = cmath.exp(c["u"] * c["z1"] + c["v"] * c["z2"] - c["u"] * c["v"])
    return Outcome(lhs, pc.gf_h2d_partial(c["z1"], c["z2"], c["u"], c["v"], st.params["cap"]),
                   st.params["cap"])


suite("poly.gf", "sum_{m,n} H_{m,n}(z1,z2) u^m v^n/(m! n!) = exp(u z1 + v z2 - uv)",
      "generating function truncated at m + n <= cap",
      {"samples": 20, "z_radius": 1.0, "uv_radius": 0.8, "cap": 40}, 1e-10)((_gf_cases, _gf_eval))


# -- integral representations -----------------------------------------------

def _hm_cases(p, rng):
    return [{"n": n, "x": x} for n in range(p["nmax"] + 1) for x in p["xs"]]


def _hm_eval(c, st):
    r = ir.check_hermite_moment(c["n"], c["x"], ir.QuadratureSpec("gauss_hermite_1d", st.points))
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.hermite_moment", "H_n(x) e^{-x^2} = (-2i)^n/sqrt(pi) int t^n e^{-t^2+2ixt} dt",
      "Gauss-Hermite quadrature of the line moment",
      {"nmax": 6, "xs": [-1.0, 0.0, 0.7, 1.5]}, 1e-8, metric="abs",
      points=40)((_hm_cases, _hm_eval))


def _h2d_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        z1, z2 = _disk_point(rng, p["radius"]), _disk_point(rng, p["radius"])
        out += [{"m": m, "n": n, "z1": z1, "z2": z2} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _h2d_eval(c, st):
    r = ir.check_h2d_moment(c["m"], c["n"], c["z1"], c["z2"],
                            ir.QuadratureSpec("gauss_hermite_2d_tensor", st.points))
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.h2d_moment",
      "e^{-z1 z2} H_{m,n}(z1,z2) = 1/(pi i^{m+n}) int conj(w)^m w^n exp(-|w|^2 + i z1 w + i z2 conj(w))",
      "tensor Gauss-Hermite quadrature of the plane moment, independent z1, z2",
      {"samples": 2, "radius": 1.0, "mmax": 6, "nmax": 6}, 1e-8, metric="abs",
      points=40)((_h2d_cases, _h2d_eval))


def _h2d_conj_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        z = _disk_point(rng, p["radius"])
        out += [{"m": m, "n": n, "z": z} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _h2d_conj_eval(c, st):
    r = ir.check_h2d_moment_conjugate(c["m"], c["n"], c["z"],
                                      ir.QuadratureSpec("gauss_hermite_2d_tensor", st.points))
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.h2d_moment_conj",
      "e^{-|z|^2} H_{m,n}(z, conj z) = i^{m+n}/pi int w^m conj(w)^n exp(-|w|^2 - 2i Re(w conj z))",
      "tensor Gauss-Hermite quadrature of the plane moment on the conjugate line",
      {"samples": 2, "radius": 1.0, "mmax": 6, "nmax": 6}, 1e-8, metric="abs",
      points=40)((_h2d_conj_cases, _h2d_conj_eval))


def _circle_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        r1, r2 = rng.uniform(0, p["radius"], 2)
        t1, t2 = rng.uniform(0, 2 * np.pi, 2)
        out += [{"m": m, "n": n, "r1": float(r1), "theta1": float(t1), "r2": float(r2),
                 "theta2": float(t2)} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _circle_eval(c, st):
    r = ir.check_circle_rep(c["m"], c["n"], c["r1"], c["theta1"], c["r2"], c["theta2"], st.points)
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.circle",
      "e^{-z1 z2} H_{m,n}(z1,z2) = e^{-z1 z2} m!n!/(m+n)! (1/2pi) int H_{m+n}((e^{i phi} z1 + e^{-i phi} z2)/2) e^{i(n-m) phi} d phi",
      "circle representation through the generating function (trapezoid rule)",
      {"samples": 2, "radius": 1.5, "mmax": 6, "nmax": 6}, 1e-8, metric="abs",
      points=256)((_circle_cases, _circle_eval))


def _circle_conj_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        r = float(rng.uniform(0, p["radius"]))
        t = float(rng.uniform(0, 2 * np.pi))
        out += [{"m": m, "n": n, "r": r, "theta": t} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _circle_conj_eval(c, st):
    r = ir.check_circle_conjugate(c["m"], c["n"], c["r"], c["theta"], st.points)
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.circle_conj",
      "e^{-r^2} H_{m,n}(r e^{i theta}, r e^{-i theta}) = e^{i(m-n) theta} e^{-r^2} m!n!/(m+n)! (1/2pi) int H_{m+n}(r cos phi) e^{i(n-m) phi} d phi",
      "real-argument circle representation on the conjugate line",
      {"samples": 2, "radius": 1.5, "mmax": 6, "nmax": 6}, 1e-8, metric="abs",
      points=256)((_circle_conj_cases, _circle_conj_eval))


def _circle_lag_cases(p, rng):
    return [{"m": m, "n": n, "r": r} for r in p["rs"] for m, n in _grid(p["mmax"], p["nmax"])]


def _circle_lag_eval(c, st):
    r = ir.check_circle_laguerre(c["m"], c["n"], c["r"], st.points)
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.circle_laguerre",
      "(-1)^n 2^{m+n} n! r^{m-n} e^{-r^2} L_n^{(m-n)}(r^2) = 2^{m+n} e^{-r^2} m!n!/(m+n)! (1/2pi) int H_{m+n}(r cos phi) e^{i(n-m) phi} d phi",
      "Laguerre closed form of the real-argument circle integral",
      {"rs": [0.3, 0.8, 1.5], "mmax": 6, "nmax": 6}, 1e-8, metric="abs",
      points=256)((_circle_lag_cases, _circle_lag_eval))


def _normal_real_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            M = rng.uniform(-1, 1, (N, N))
            A = M @ M.T / N + p["shift"] * np.eye(N)
            out.append({"N": N, "A": A, "B": rng.uniform(-p["b_radius"], p["b_radius"], N)})
    return out


def _normal_real_eval(c, st):
    r = ir.check_normal_integral_real(c["A"], c["B"], ir.QuadratureSpec("gauss_hermite_2d_tensor", st.points))
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.normal_real",
      "int_{R^N} exp(-X^T A X + 2i B^T X) dX = sqrt(pi^N / det A) exp(-B^T A^-1 B)",
      "real Gaussian integral by whitened tensor quadrature",
      {"dims": [1, 2, 3], "samples": 5, "shift": 0.5, "b_radius": 1.0}, 1e-8, metric="abs",
      points=20)((_normal_real_cases, _normal_real_eval))


def _normal_complex_cases(p, rng):
    out = []
    for N in p["dims"]:
        for _ in range(p["samples"]):
            out.append({"N": N, "H": ks.random_hermitian(rng, N, p["norm"]),
                        "W": ks.random_vector(rng, N, p["w_radius"])})
    return out


def _normal_complex_eval(c, st):
    r = ir.check_normal_integral_complex(c["H"], c["W"], ir.QuadratureSpec("gauss_hermite_2d_tensor", st.points))
    return Outcome(r.lhs, r.rhs, st.points)


suite("int.normal_complex",
      "int_{R^2N} exp(-Z*(I+H)Z + 2i Re(W* Z)) = pi^N exp(-W*(I+H)^-1 W) / det(I+H)",
      "complex Gaussian integral by whitened tensor quadrature, Hermitian H",
      {"dims": [1, 2], "samples": 5, "norm": 0.5, "w_radius": 1.0}, 1e-8, metric="abs",
      points=16)((_normal_complex_cases, _normal_complex_eval))


# -- mixed relations --------------------------------------------------------

def _mixed(case, tag, description, defaults, make_cases):
    def evaluate(c, st):
        r = ir.check_mixed_relations(case, c, st.points or 256)
        extra = {} if r.variant_rhs is None else {"variant_rhs": r.variant_rhs}
        return Outcome(r.lhs, r.rhs, st.points, extra=extra)
    suite(f"mixed.{case}", tag, description, defaults, 1e-8,
          points=256 if case in ("fourier_coefficient", "squared_average") else None)((make_cases, evaluate))


def _binomial_split_cases(p, rng):
    return [{"n": n, "w1": _disk_point(rng, p["radius"]), "w2": _disk_point(rng, p["radius"]),
             "z": _disk_point(rng, p["z_max"], p["z_min"])}
            for n in range(p["nmax"] + 1) for _ in range(p["samples"])]


def _joukowski_laguerre_cases(p, rng):
    return [{"n": n, "rho": float(rng.uniform(*p["rho"])), "z": _disk_point(rng, p["z_max"], p["z_min"])}
            for n in range(p["nmax"] + 1) for _ in range(p["samples"])]


def _cosine_laguerre_cases(p, rng):
    return [{"n": n, "rho": float(rng.uniform(*p["rho"])), "theta": float(rng.uniform(0, 2 * np.pi))}
            for n in range(p["nmax"] + 1) for _ in range(p["samples"])]


def _fourier_coefficient_cases(p, rng):
    return [{"n": n, "k": k, "rho": rho} for rho in p["rhos"]
            for n in range(p["nmax"] + 1) for k in range(-n, n + 1)]


def _squared_average_cases(p, rng):
    return [{"n": n, "rho": rho} for rho in p["rhos"] for n in range(p["nmax"] + 1)]


def _rotation_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        w1, w2 = _disk_point(rng, p["radius"]), _disk_point(rng, p["radius"])
        out += [{"m": m, "n": n, "w1": w1, "w2": w2} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _shift_cases(p, rng):
    out = []
    for _ in range(p["samples"]):
        pts = {k: _disk_point(rng, p["z_radius"] if k.startswith("z") else p["w_radius"])
               for k in ("z1", "z2", "w1", "w2")}
        out += [{"m": m, "n": n, **pts, "cap": p["cap"]} for m, n in _grid(p["mmax"], p["nmax"])]
    return out


def _origin_cases(p, rng):
    return [{"m": m, "n": n} for m, n in _grid(p["mmax"], p["nmax"])]


_mixed("binomial_split", "H_n((w1+w2)/2) = z^n sum_j binom(n,j) H_{j,n-j}(z w1, w2/z) z^{-2j}",
       "Hermite polynomial as a binomial sum of 2D Hermite polynomials",
       {"nmax": 8, "samples": 3, "radius": 1.0, "z_min": 0.5, "z_max": 1.5}, _binomial_split_cases)
_mixed("joukowski_laguerre", "H_n(rho (z + 1/z)/2) = n!/(-rho z)^n sum_j (-rho^2 z^2)^j/j! L_{n-j}^{(2j-n)}(rho^2)",
       "Laguerre sum for a Joukowski argument",
       {"nmax": 8, "samples": 3, "rho": [0.3, 1.5], "z_min": 0.5, "z_max": 1.5}, _joukowski_laguerre_cases)
_mixed("cosine_laguerre", "H_n(rho cos theta) = n!/(-rho e^{i theta})^n sum_j (-rho^2 e^{2i theta})^j/j! L_{n-j}^{(2j-n)}(rho^2)",
       "Laguerre sum on the circle",
       {"nmax": 8, "samples": 3, "rho": [0.3, 1.5]}, _cosine_laguerre_cases)
_mixed("fourier_coefficient", "int_0^{2pi} H_n(rho cos theta) e^{-ik theta} = 2pi n! (-1)^{(n-k)/2} rho^k/((n+k)/2)! L_{(n-k)/2}^{(k)}(rho^2), n+k even",
       "Fourier coefficients of H_n(rho cos theta), all |k| <= n",
       {"nmax": 8, "rhos": [0.5, 1.0, 1.5]}, _fourier_coefficient_cases)
_mixed("squared_average", "(1/2pi) int H_n(rho cos theta)^2 = (n!)^2/rho^{2n} sum_j rho^{4j}/(j!)^2 (L_{n-j}^{(2j-n)}(rho^2))^2",
       "circle average of a squared Hermite polynomial",
       {"nmax": 8, "rhos": [0.5, 1.0, 1.5]}, _squared_average_cases)
_mixed("rotation", "H_{m,n}(w1 - i w2, w1 + i w2) = i^{n-m}/2^{m+n} sum_{j<=m,k<=n} binom(m,j) binom(n,k) i^{j-k} H_{j+k}(w1) H_{m+n-j-k}(w2)",
       "rotation of variables into a product of Hermite polynomials",
       {"mmax": 8, "nmax": 8, "samples": 1, "radius": 1.0}, _rotation_cases)
_mixed("shift", "H_{m,n}(z1+w1, z2+w2) e^{-(w1 w2 + z1 w2 + z2 w1)} = sum_{j,k} (-w1)^j (-w2)^k/(j! k!) H_{m+k,n+j}(z1,z2)",
       "shift formula, double series truncated at j + k <= cap",
       {"mmax": 8, "nmax": 8, "samples": 1, "z_radius": 1.0, "w_radius": 0.5, "cap": 25}, _shift_cases)
_mixed("origin", "H_{m,n}(0,0) = delta_{mn} (-1)^n n!",
       "values at the origin",
       {"mmax": 8, "nmax": 8}, _origin_cases)


# -- q-series ---------------------------------------------------------------

def _qgf_cases(p, rng):
    return [{"q": float(rng.choice(p["qs"])),
             **{k: _disk_point(rng, p["z_radius"] if k.startswith("z") else p["uv_radius"])
                for k in ("z1", "z2", "u", "v")}} for _ in range(p["samples"])]


def _qgf_eval(c, st):
    r = qs.gf_h2d_q_check(c["z1"], c["z2"], c["u"], c["v"], c["q"], st.params["cap"])
    return Outcome(r.lhs, r.rhs, st.params["cap"])


suite("q.gf", "sum_{m,n} H_{m,n}(z1,z2|q) u^m v^n/((q;q)_m (q;q)_n) = (uv;q)_inf/(u z1, v z2;q)_inf",
      "generating function of the 2D q-Hermite polynomials truncated at m + n <= cap",
      {"samples": 20, "qs": [0.3, 0.5, 0.7], "z_radius": 1.0, "uv_radius": 0.4, "cap": 40},
      1e-10)((_qgf_cases, _qgf_eval))


def _awi_cases(p, rng):
    return [{"q": float(rng.choice(p["qs"])),
             "t": [_disk_point(rng, p["t_radius"]) for _ in range(4)]} for _ in range(p["samples"])]


def _awi_eval(c, st):
    r = qs.askey_wilson_integral(c["t"], c["q"], st.points)
    return Outcome(r.closed_form, r.quadrature, st.points)


suite("q.awi",
      "int_0^pi (e^{2i th}, e^{-2i th};q)_inf / prod_j (t_j e^{i th}, t_j e^{-i th};q)_inf = 2pi (t1t2t3t4;q)_inf/((q;q)_inf prod_{j<k} (t_j t_k;q)_inf)",
      "Askey-Wilson integral by the trapezoid rule",
      {"samples": 20, "qs": [0.3, 0.5, 0.7], "t_radius": 0.6}, 1e-8,
      points=256)((_awi_cases, _awi_eval))


def _moment_cases(p, rng):
    return [{"j": j, "q": q} for q in p["qs"] for j in range(p["jmax"] + 1)]


def _moment_eval(c, st):
    r = qs.q_moments_check(c["j"], c["q"], st.points)
    return Outcome(r.closed_form, r.quadrature, st.points,
                   extra={"half_period": r.half_period})


suite("q.moments",
      "(1/2pi) int_{-pi}^{pi} e^{2ij th} (e^{2i th}, e^{-2i th};q)_inf = (-1)^j (q^{C(j,2)} + q^{C(-j,2)})/(q;q)_inf",
      "trigonometric moments of the q-Hermite weight over a full period",
      {"qs": [0.3, 0.5, 0.7], "jmax": 8}, 1e-10, points=256)((_moment_cases, _moment_eval))


def _bilinear_cases(p, rng):
    return [{"q": float(rng.choice(p["qs"])), "z1": _disk_point(rng, p["z_radius"]),
             "z2": _disk_point(rng, p["z_radius"]), "r": _disk_point(rng, p["rs_radius"]),
             "s": _disk_point(rng, p["rs_radius"])} for _ in range(p["samples"])]


def _bilinear_eval(c, st):
    r = qs.q_bilinear_check(c["z1"], c["z2"], c["r"], c["s"], c["q"], st.params["cap"], st.points)
    return Outcome(r.lhs, r.rhs, st.params["cap"],
                   extra_errors={"quadrature": abs(r.lhs - r.quadrature)},
                   extra={"quadrature": r.quadrature})


suite("q.bilinear",
      "(rs,rs;q)_inf/(z1 z2 rs;q)_inf = 1/2 sum T(m1,n1) T(m2,n2) r^{m1+m2} s^{n1+n2} (-1)^{E/2} (q^{C(E/2,2)} + q^{C(-E/2,2)}), E = m1-n1-m2+n2",
      "four-fold bilinear q-Hermite sum at total degree <= cap, with a quadrature cross-check",
      {"samples": 10, "qs": [0.3, 0.5, 0.7], "z_radius": 1.0, "rs_radius": 0.3, "cap": 24},
      1e-6, points=256)((_bilinear_cases, _bilinear_eval))


def _four_product_cases(p, rng):
    return [{"q": float(rng.choice(p["qs"])),
             "z": [_disk_point(rng, p["z_radius"]) for _ in range(4)],
             **{k: _disk_point(rng, p["rs_radius"]) for k in ("r1", "r2", "s1", "s2")}}
            for _ in range(p["samples"])]


def _four_product_eval(c, st):
    r = qs.q_four_product_check(c["z"], c["r1"], c["r2"], c["s1"], c["s2"], c["q"], st.params["cap"], st.points)
    return Outcome(r.lhs, r.rhs, st.params["cap"],
                   extra_errors={"quadrature": abs(r.lhs - r.quadrature)},
                   extra={"quadrature": r.quadrature})


suite("q.four_product",
      "(r1s1,r1s1,r2s2,r2s2,r1s1r2s2z1z2z3z4;q)_inf / prod_{j<k}(t_j t_k;q)_inf = 1/2 sum ... (-1)^M (q^{C(M,2)} + q^{C(-M,2)}), t = (r1z1, s1z2, r2z3, s2z4)",
      "eight-fold sum from four generating functions at total degree <= cap, with a quadrature cross-check",
      {"samples": 6, "qs": [0.3, 0.5, 0.7], "z_radius": 1.0, "rs_radius": 0.15, "cap": 16},
      1e-5, points=256)((_four_product_cases, _four_product_eval))


def list_suites() -> list[dict]:
    """Catalog entries sorted by id."""
    return [{"id": s.id, "tag": s.tag, "description": s.description,
             "tolerance": s.tolerance, "metric": s.metric}
            for s in sorted(CATALOG.values(), key=lambda s: s.id)]
