"""Sweep every congruence suite over a prime range and print a per-suite summary.

    python3 scripts/sweep_congruences.py --hi 499 --jobs 4
"""

import argparse
import time

from hypercongr.verify import SuiteRequest, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=7)
    ap.add_argument("--hi", type=int, default=499)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--suites", default="vanhamme,liu4,theorem1")
    args = ap.parse_args()

    for suite in args.suites.split(","):
        t0 = time.perf_counter()
        reports = run_suite(SuiteRequest(suite, args.lo, args.hi, parallelism=args.jobs))
        secs = time.perf_counter() - t0
        failed = [r.prime for r in reports if not r.passed]
        # smallest margin tells how close we are to the required power
        margin = min((r.difference_valuation - r.required_power for r in reports), default=None)
        print(f"{suite:9s} primes={len(reports):3d} failed={failed or '-'} "
              f"min_margin={margin} time={secs:.2f}s")


if __name__ == "__main__":
    main()
