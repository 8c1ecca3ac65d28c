"""Build the witness corpus (Hamming codes, greedy sets, solver optima, doubled
sets) and run every applicable check on each, one line per witness."""
import argparse
import time

from qndom.congruence import NotApplicableError, check_congruences
from qndom.constructions import double, greedy_dominating_set, hamming_perfect_code
from qndom.domination import excess_profile
from qndom.solver import solve_min_dominating
from qndom.surfeit import check_lemmas, surfeit_report


def corpus(max_greedy):
    for r in (2, 3, 4):
        yield f"hamming r={r}", hamming_perfect_code(r)
    for n in range(1, max_greedy + 1):
        yield "greedy", greedy_dominating_set(n)
    D = None
    for n in range(1, 7):
        D = solve_min_dominating(n).witness
        yield "solver", D
    for _ in range(6):
        D = double(D)
        yield "doubled", D


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-greedy", type=int, default=12)
    args = ap.parse_args()
    print(f"{'source':<12} {'n':>3} {'|D|':>6} {'delta':>7} {'zeta_m1':>8} {'zeta_m2':>8} "
          f"{'cong':>5} {'lemmas':>8} {'sec':>6}")
    for name, D in corpus(args.max_greedy):
        t0 = time.perf_counter()
        rep = surfeit_report(D, excess_profile(D))
        try:
            cong = "ok" if check_congruences(D).ok else "FAIL"
        except NotApplicableError:
            cong = "-"
        lem = "-"
        if D.n % 6 == 0:
            res = check_lemmas(D)
            ran = [r for r in res.values() if not isinstance(r, str)]
            lem = "ok" if all(r.ok for r in ran) else "FAIL"
            lem += f"({len(ran)})"
        dt = time.perf_counter() - t0
        print(f"{name:<12} {D.n:>3} {len(D):>6} {rep.delta_total:>7} {rep.zeta_m1:>8} "
              f"{rep.zeta_m2:>8} {cong:>5} {lem:>8} {dt:>6.2f}")


if __name__ == "__main__":
    main()
