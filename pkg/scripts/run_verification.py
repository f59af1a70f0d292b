#!/usr/bin/env python3
"""Run the whole bound-verification catalogue and print a summary table.

Equivalent to `nearindep verify --theorem all`, but with per-check wall
times and a human-readable layout instead of JSONL.

Usage: python scripts/run_verification.py [--n-max N] [--jobs K]
  Default n-max is 7; pushing to 8 adds the 12346-class scan on eight
  vertices (about a minute).
"""

import argparse
import sys
import time

from nearindep.verify import THEOREMS, run_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    print(f"{'check':<14} {'universe':<24} {'n':>3} {'classes':>8} "
          f"{'violations':>10} {'time':>7}")
    print("-" * 72)
    failures = 0
    t_all = time.perf_counter()
    for theorem in THEOREMS:
        t0 = time.perf_counter()
        reports = run_theorem(theorem, args.n_max, jobs=args.jobs)
        dt = time.perf_counter() - t0
        for r in reports:
            failures += not r.passed
            uni = r.spec.family if r.spec.delta is None else f"{r.spec.family}(d={r.spec.delta})"
            print(f"{r.theorem_id:<14} {uni:<24} {r.spec.n:>3} {r.checked:>8} "
                  f"{len(r.violations):>10}")
        print(f"{'':<14} {theorem + ' total':<24} {'':>3} {'':>8} {'':>10} {dt:>6.1f}s")
    print("-" * 72)
    status = "all checks passed" if failures == 0 else f"{failures} REPORTS WITH VIOLATIONS"
    print(f"{status} in {time.perf_counter() - t_all:.1f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
