#!/usr/bin/env python3
"""Run the seeded random-series soundness sweeps and report margins.

Covers the local mean-square bound, the nonvanishing abscissas, and the
short-interval log / sup / L^p inequalities.

Usage:
    python scripts/run_soundness.py --n-series 50 --seed 42 --out-dir results/
"""

import argparse
import os
import sys

from hardyseries import harness as hn

SWEEPS = ("local_l2_sweep", "nonvanishing_sweep", "log_bound_sweep")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-series", type=int, default=50)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--deltas", type=float, nargs="+", default=[0.05, 0.2])
    ap.add_argument("--out-dir", default=".")
    args = ap.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    all_pass = True
    for name in SWEEPS:
        cfg = hn.ExperimentConfig(
            name,
            seed=args.seed,
            n_series=args.n_series,
            deltas=tuple(args.deltas),
            out=os.path.join(args.out_dir, f"{name}.csv"),
        )
        result = hn.dispatch(cfg)
        all_pass = all_pass and result.passed
        print(
            f"{name}: {'PASS' if result.passed else 'FAIL'} "
            f"({result.summary['n_rows']} rows, "
            f"min margin {result.summary['min_margin']:.4g}, "
            f"{result.summary['failures']} failures)"
        )
    return 0 if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
