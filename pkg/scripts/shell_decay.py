"""Shell sums of the complex series against the shell-wise bound
e^{sum|w|^2} binom(d+N-1, N-1) (N ||H||_inf)^d, for a few random H.

    python scripts/shell_decay.py --N 2 --max-entry 0.8 --samples 3
"""
import argparse

import numpy as np

from hermite2d import ks_series as ks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--max-entry", type=float, default=0.8, help="||H||_inf <= max_entry / N")
    ap.add_argument("--samples", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    for s in range(args.samples):
        H = ks.random_general(rng, args.N, args.max_entry / args.N)
        W = ks.random_vector(rng, args.N, 1.5)
        res = ks.rhs_complex(H, W)
        err = abs(res.value - ks.lhs_complex(H, W)) / (1 + abs(res.value))
        print(f"sample {s}: N||H||_inf = {args.N * ks.max_norm(H):.3f}, degree {res.degree_reached}, "
              f"{res.term_count} terms, rel err {err:.1e}")
        for d, v in enumerate(res.shell_sums):
            if d % 5 == 0 or d == res.degree_reached:
                print(f"  d={d:3d}  |shell| {abs(v):10.3e}   bound {ks.shell_bound(H, W, d):10.3e}")


if __name__ == "__main__":
    main()
