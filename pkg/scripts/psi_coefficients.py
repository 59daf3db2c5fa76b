"""Dump the low-order coefficients of Psi(x) and Phi(x) with their p-adic valuations."""

import argparse

from hypercongr.exact import valuation_rational
from hypercongr.hyper import phi_series, psi_series


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("primes", nargs="*", type=int, default=[7, 11, 19, 23])
    ap.add_argument("--order", type=int, default=8)
    args = ap.parse_args()

    for p in args.primes:
        psi = psi_series(p, args.order)
        phi = phi_series(p, args.order)
        print(f"p = {p}   Phi identically zero through x^{args.order}: {phi.is_zero()}")
        for j, c in enumerate(psi.coefficients):
            if c.is_zero():
                continue
            assert c.is_real()
            print(f"  x^{j:<2d} v_p = {valuation_rational(c.re, p):3d}   {c.re}")


if __name__ == "__main__":
    main()
