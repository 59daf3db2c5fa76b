"""Time the mod p^5 Swisher check prime by prime; the Gamma_p(1/4) product dominates."""

import time

from hypercongr.verify import SuiteRequest, admissible_primes, verify_swisher


def main(hi=113):
    primes, _ = admissible_primes(SuiteRequest("swisher", 5, hi))
    total = 0.0
    for p in primes:
        t0 = time.perf_counter()
        r = verify_swisher(p)
        dt = time.perf_counter() - t0
        total += dt
        print(f"p={p:4d}  p^4={p**4:>10d}  v={r.difference_valuation}  {dt * 1000:9.1f} ms")
    print(f"total {total:.1f} s")


if __name__ == "__main__":
    main()
