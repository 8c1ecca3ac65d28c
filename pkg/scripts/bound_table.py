"""Print the formula-derivable lower bounds for a range of n, flagging where the
mod-6 bound beats van Wee's."""
import argparse

from qndom.bounds import bound_table, format_table

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--from", dest="lo", type=int, default=1)
    ap.add_argument("--to", dest="hi", type=int, default=30)
    args = ap.parse_args()
    rows = bound_table(args.lo, args.hi)
    print(format_table(rows))
    print()
    for r in rows:
        if r.theorem2 is not None:
            gain = r.theorem2.ceiling - r.vanwee.ceiling
            print(f"n={r.n:2d}: {r.vanwee.ceiling} -> {r.theorem2.ceiling} (+{gain})")
