#!/usr/bin/env python3
"""Time the Monte Carlo engine against the symmetrizer engine on the
diagonal d = n + 1, where both apply.

The n=4 symmetrizer run expands 42 symmetrizers of 460,800 terms each; pass
--allow-long to include it and expect a long wait.
"""

import argparse
import sys
import time

from trace_relations.montecarlo import SamplerConfig, find_relations, rank_of
from trace_relations.symmetrizer import symmetrizer_relation_space


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--allow-long", action="store_true")
    args = ap.parse_args()

    config = SamplerConfig(seed=args.seed)
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        mc = find_relations(n, n + 1, config)
        mc_time = time.perf_counter() - t0
        t0 = time.perf_counter()
        ys = symmetrizer_relation_space(n, config, allow_long=args.allow_long)
        ys_time = time.perf_counter() - t0
        stacked = rank_of([list(v) for v in mc.relations + ys.relations])
        agree = stacked == len(mc.relations) == len(ys.relations)
        print(f"n={n}: montecarlo {len(mc.relations)} rel in {mc_time:.3f}s | "
              f"symmetrizer {len(ys.relations)} rel in {ys_time:.3f}s | "
              f"spans {'agree' if agree else 'DISAGREE'}")
        if not agree:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
