#!/usr/bin/env python3
"""Factorization shapes of a few integer polynomials mod p versus the cycle
types of their Galois groups.

    python scripts/chebotarev_demo.py --N 100000
"""

import argparse
import time

from frobstat.chebotarev import chebotarev_scan, close_group, parse_cycles

# name, ascending coefficients, generators (1-based cycle notation)
CASES = [
    ("x^2 + 1, C2", [1, 0, 1], ["(1 2)"]),
    ("x^3 - 2, S3", [-2, 0, 0, 1], ["(1 2)", "(1 2 3)"]),
    ("x^3 - x - 1, S3", [-1, -1, 0, 1], ["(1 2)", "(1 2 3)"]),
    ("x^3 - 3x - 1, C3", [-1, -3, 0, 1], ["(1 2 3)"]),
    ("x^4 + 1, V4", [1, 0, 0, 0, 1], ["(1 2)(3 4)", "(1 3)(2 4)"]),
    ("x^4 - 2, D4", [-2, 0, 0, 0, 1], ["(1 3)", "(1 2 3 4)"]),
    ("x^4 - x - 1, S4", [-1, -1, 0, 0, 1], ["(1 2)", "(1 2 3 4)"]),
]


def run_case(name, coeffs, gen_text, n):
    deg = len(coeffs) - 1
    gens = [parse_cycles(g, deg) for g in gen_text]
    order = len(close_group(gens))
    t0 = time.perf_counter()
    stats = chebotarev_scan(coeffs, gens, n)
    dt = time.perf_counter() - t0
    print(f"=== {name}  (|G| = {order}, {stats.primes_used} primes, "
          f"{stats.primes_skipped} skipped, {dt:.1f}s)")
    worst = 0.0
    for part in sorted(stats.predicted):
        pred = stats.predicted[part]
        obs = stats.frequency(part)
        err = abs(float(obs) - float(pred))
        worst = max(worst, err)
        shape = "+".join(map(str, part))
        print(f"  {shape:<10} predicted {str(pred):>6}"
              f"   observed {float(obs):.4f}   |err| = {err:.4f}")
    print(f"  worst deviation: {worst:.4f}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=100_000, help="prime bound")
    args = ap.parse_args()
    for name, coeffs, gens in CASES:
        run_case(name, coeffs, gens, args.N)


if __name__ == "__main__":
    main()
