#!/usr/bin/env python3
"""Sweep the window hypergraphs on Z_n and tabulate minimality vs gcd(k, n).

For even window width k and odd n > k, the hypergraph whose edges are the
n windows of k consecutive residues is minimal non-odd-bipartite exactly
when gcd(k, n) = 1, with incidence rank n - gcd(k, n).  This script prints
the table for k in {4, 6} up to a configurable n.

Usage: python scripts/dreg_gcd_sweep.py [n_max]
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oddtrans import cayley, classify


def main() -> None:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 21
    print(f"{'k':>3} {'n':>4} {'gcd':>4} {'minimal':>8} {'rank':>5} {'n-gcd':>6}")
    for k in (4, 6):
        for n in range(k + 1, n_max + 1):
            if n % 2 == 0:
                continue
            report = classify(cayley(n, k))
            g = math.gcd(k, n)
            flag = "yes" if report.is_minimal else "no"
            print(f"{k:>3} {n:>4} {g:>4} {flag:>8} {report.rank:>5} {n - g:>6}")


if __name__ == "__main__":
    main()
