"""Compare, on one sample point each, the conventions the library uses with
nearby variants of the same formulas, against an independent oracle.
"""
import cmath

import numpy as np

from hermite2d import integral_reps as ir
from hermite2d import ks_series as ks
from hermite2d import q_series as qs
from hermite2d.poly_core import PolarPoint, h2d_direct


def row(name, oracle, used, variant):
    print(f"{name:<34} |used - oracle| = {abs(used - oracle):9.2e}   "
          f"|variant - oracle| = {abs(variant - oracle):9.2e}")


def main():
    u, v, x, y = 0.05, 0.03, 2, 3
    brute = ks.charlier_bilinear_sum(u, v, x, y, 40)
    row("Charlier bilinear closed form", brute, ks.charlier_bilinear_closed(u, v, x, y),
        ks.charlier_bilinear_closed(u, v, x, y, form="variant"))

    rng = np.random.default_rng(0)
    H = ks.random_general(rng, 2, 0.35)
    W = ks.random_vector(rng, 2, 1.2, min_radius=0.2)
    P = [PolarPoint(abs(w), cmath.phase(w)) for w in W]
    row("Laguerre form phase orientation", ks.lhs_complex(H, W), ks.rhs_laguerre(H, P).value,
        ks.rhs_laguerre(H, P, orientation="direct").value)

    n, rho = 5, 1.4
    quad = ir.check_mixed_relations("squared_average", {"n": n, "rho": rho}).lhs
    row("squared Hermite circle average", quad, ir.squared_hermite_average(n, rho),
        ir.squared_hermite_average(n, rho, "variant"))

    m, n, w1, w2 = 3, 1, 0.7 + 0.2j, -0.4 + 0.5j
    row("rotated product expansion", h2d_direct(m, n, w1 - 1j * w2, w1 + 1j * w2),
        ir.rotated_expansion(m, n, w1, w2), ir.rotated_expansion(m, n, w1, w2, "variant"))

    z1, z2 = cmath.rect(0.9, 0.4), cmath.rect(0.7, -1.1)
    target = cmath.exp(-z1 * z2) * h2d_direct(2, 1, z1, z2)
    row("circle representation", target, cmath.exp(-z1 * z2) * ir.circle_coefficient(2, 1, z1, z2),
        ir.odd_order_circle_integral(2, 1, z1, z2))

    q = 0.5
    mom = qs.q_moments_check(3, q)
    row("q-moment normalization (j=3)", mom.closed_form, mom.quadrature, mom.half_period)

    print()
    for key, text in qs.RESOLVED_CONVENTIONS.items():
        print(f"{key}: {text}")


if __name__ == "__main__":
    main()
