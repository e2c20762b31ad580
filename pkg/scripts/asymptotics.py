"""Print how the exact average of wt_{i,j} approaches its two asymptotes.

    python scripts/asymptotics.py --i 1 --j 1 --points 10 100 1000
"""
import argparse

from osctab.formulas import asymptotic_coefficient
from osctab.polyring import Poly
from osctab.psi import average_weight_formula


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--i", type=int, default=1)
    ap.add_argument("--j", type=int, default=0)
    ap.add_argument("--points", type=int, nargs="+", default=[10, 50, 100, 500, 1000, 10000])
    args = ap.parse_args()

    p = Poly.monomial(args.i, args.j)
    c_len, e = asymptotic_coefficient(args.i, args.j, "large_length")
    c_size, _ = asymptotic_coefficient(args.i, args.j, "large_size")
    print(f"wt_{{{args.i},{args.j}}}: large length ~ {c_len} (2n)^{e}, large size ~ {c_size} k^{e}")
    print(f"{'N':>8} {'ratio (k=0, n=N)':>18} {'ratio (k=N, n=0)':>18}")
    for big in args.points:
        by_len = average_weight_formula(0, big, p) / (c_len * (2 * big) ** e)
        by_size = average_weight_formula(big, 0, p) / (c_size * big**e)
        print(f"{big:>8} {float(by_len):>18.6f} {float(by_size):>18.6f}")


if __name__ == "__main__":
    main()
