"""Exact gamma(Q_n) for small n, with node counts, symmetry on and off."""
import argparse
import time

from qndom.solver import SearchConfig, solve_min_dominating

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        for sym in (True, False):
            t0 = time.perf_counter()
            res = solve_min_dominating(n, SearchConfig(symmetry=sym, threads=args.threads))
            print(f"n={n} symmetry={'on ' if sym else 'off'} gamma={res.optimum:3d} "
                  f"proven={res.proven_optimal} nodes={res.nodes_explored:8d} "
                  f"{time.perf_counter() - t0:7.2f}s")
