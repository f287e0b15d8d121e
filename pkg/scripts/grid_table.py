"""Grid table: closed-form prediction, constructed witness size, and the exact
value where the search is cheap enough.

    python scripts/grid_table.py --exact-max-n 30
"""

import argparse
import time

from domforce import families as fam
from domforce.families import FamilySpec
from domforce.predictions import expected_witness_size, grid_case, grid_witness, predict, predict_gamma_c_grid
from domforce.solvers import InvariantKind, value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=8)
    ap.add_argument("--exact-max-n", type=int, default=30)
    args = ap.parse_args()

    print(f"{'p':>3} {'q':>3} {'case':>4} {'gamma_c':>7} {'F_cd pred':>10} {'witness':>7} {'exact':>6} {'secs':>6}")
    for p in range(4, args.max_p + 1):
        for q in range(p, args.max_p + 1):
            pred = predict(FamilySpec("grid", (p, q)))
            w = len(grid_witness(p, q))
            assert w == expected_witness_size(p, q)
            exact, secs = "-", ""
            if p * q <= args.exact_max_n:
                t0 = time.perf_counter()
                exact = value(fam.grid(p, q), InvariantKind.Fcd)
                secs = f"{time.perf_counter() - t0:.2f}"
            print(f"{p:>3} {q:>3} {grid_case(p, q):>4} {predict_gamma_c_grid(p, q):>7} "
                  f"{pred.describe():>10} {w:>7} {exact!s:>6} {secs:>6}")


if __name__ == "__main__":
    main()
