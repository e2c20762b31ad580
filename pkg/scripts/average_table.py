"""Tabulate brute-force and operator averages of wt_P over all shapes up to a size.

    python scripts/average_table.py --weight "x^2" --max-size 3 --max-n 3
"""
import argparse
import time

from osctab.partitions import partitions_up_to
from osctab.polyring import parse_poly
from osctab.psi import average_weight_formula, q_polynomial
from osctab.tableaux import average_weight_bruteforce, count_oscillating


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--weight", default="x")
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()

    p = parse_poly(args.weight)
    print(f"P = {p}\nQ = {q_polynomial(p)}\n")
    print(f"{'shape':<14} {'n':>2} {'#OT':>10} {'brute':>16} {'formula':>16}  ok")
    mismatches = 0
    start = time.perf_counter()
    for lam in partitions_up_to(args.max_size):
        k = sum(lam)
        for n in range(args.max_n + 1):
            brute = average_weight_bruteforce(lam, k + 2 * n, p)
            formula = average_weight_formula(k, n, p)
            mismatches += brute != formula
            print(f"{str(list(lam)):<14} {n:>2} {count_oscillating(lam, k + 2 * n):>10} "
                  f"{str(brute):>16} {str(formula):>16}  {'yes' if brute == formula else 'NO'}")
    print(f"\n{mismatches} mismatches, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
