#!/usr/bin/env python3
"""Classify the whole fixture catalogue and, where applicable, print the
spectral bound quantities for each minimal uniform member."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from oddtrans import bound_report, classify, fixtures


def main() -> None:
    print(f"{'name':<14} {'n':>3} {'m':>3} {'k':>4} {'d':>4} {'minimal':>8} {'rank':>5}")
    catalogue = fixtures()
    for name, hg in catalogue.items():
        rep = classify(hg)
        k = hg.is_uniform()
        d = hg.is_regular()
        print(
            f"{name:<14} {hg.n:>3} {hg.m:>3} {k if k else '-':>4} "
            f"{d if d else '-':>4} {'yes' if rep.is_minimal else 'no':>8} {rep.rank:>5}"
        )
    print()
    print(f"{'name':<14} {'rho':>8} {'lam_upper':>11} {'bound1':>9} {'bound2':>9} {'beta':>7}")
    for name, hg in catalogue.items():
        k = hg.is_uniform()
        if k is None or k % 2 or not classify(hg).is_minimal:
            continue
        rep = bound_report(hg, restarts=4)
        print(
            f"{name:<14} {rep.rho:>8.4f} {rep.lambda_min_upper:>11.6f} "
            f"{rep.bound1:>9.4f} {rep.bound2:>9.4f} {rep.beta:>7.4f}"
        )


if __name__ == "__main__":
    main()
