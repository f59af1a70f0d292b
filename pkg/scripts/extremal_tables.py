#!/usr/bin/env python3
"""Print the extremal Q values and witnesses per class and order.

For each universe (trees, forests, connected graphs, all graphs) and
each order up to the caps, show the minimum and maximum of
Q = sigma1/sigma0 with the graph6 strings of the witnesses.  Handy for
eyeballing how the extremal graphs evolve with n.

Usage: python scripts/extremal_tables.py [--n-max N]
"""

import argparse
import sys

from nearindep.generate import ClassSpec
from nearindep.limits import effective_limits
from nearindep.verify import extremal_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    args = parser.parse_args()
    lim = effective_limits()
    caps = {
        "trees": min(args.n_max, 12),
        "forests": min(args.n_max, 10),
        "connected_graphs": min(args.n_max, lim.graphs_max_n),
        "all_graphs": min(args.n_max, lim.graphs_max_n),
    }
    for family, cap in caps.items():
        print(f"\n== {family} ==")
        print(f"{'n':>3} {'classes':>8} {'min Q':>10} {'witness':<14} {'max Q':>10} {'witness':<14}")
        for n in range(1, cap + 1):
            r = extremal_scan(ClassSpec(family, n))
            lo, hi = r.min_witness, r.max_witness
            print(f"{n:>3} {r.checked:>8} {str(lo[1]):>10} {lo[0]:<14} "
                  f"{str(hi[1]):>10} {hi[0]:<14}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
