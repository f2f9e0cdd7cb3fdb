#!/usr/bin/env python3
"""Track the non-odd-bipartiteness measures along growing odd cycle powers.

For the 4-uniform powers of odd cycles C_m the spectral radius stays at 2
while the least H-eigenvalue estimate drifts toward -2, so beta = -lam/rho
climbs toward 1: ever larger minimal non-odd-bipartite hypergraphs look
ever closer to odd-bipartite ones.

Usage: python scripts/beta_trend.py [m1,m2,...]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oddtrans import bound_report, cycle_graph, power


def main() -> None:
    m_list = (
        [int(tok) for tok in sys.argv[1].split(",")]
        if len(sys.argv) > 1
        else [3, 5, 7, 9, 11, 13]
    )
    print(f"{'m':>4} {'n':>4} {'rho':>10} {'lam_upper':>12} {'bound2':>10} {'alpha':>10} {'beta':>8}")
    for m in m_list:
        hg = power(cycle_graph(m), 4)
        rep = bound_report(hg, restarts=4)
        print(
            f"{m:>4} {hg.n:>4} {rep.rho:>10.6f} {rep.lambda_min_upper:>12.6f} "
            f"{rep.bound2:>10.6f} {rep.alpha:>10.6f} {rep.beta:>8.5f}"
        )


if __name__ == "__main__":
    main()
