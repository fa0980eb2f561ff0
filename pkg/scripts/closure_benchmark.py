"""Time the closure on random instances of growing size."""

from __future__ import annotations

import argparse
import time

from phylosandwich.experiments import random_instance
from phylosandwich.sandwich import closure


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 60, 80, 120])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--p-edge", type=float, default=0.08)
    ap.add_argument("--p-conflict", type=float, default=0.05)
    args = ap.parse_args()

    print(f"{'n':>5} {'feasible':>9} {'forced':>7} {'forbidden':>10} {'mean s':>8} {'max s':>8}")
    for n in args.sizes:
        times, feasible, forced, forbidden = [], 0, 0, 0
        for seed in range(args.seeds):
            inst = random_instance(seed, n, args.p_edge, args.p_conflict)
            start = time.perf_counter()
            out = closure(inst)
            times.append(time.perf_counter() - start)
            feasible += out.feasible
            forced += len(out.added_forced)
            forbidden += len(out.added_forbidden)
        print(f"{n:>5} {feasible:>9} {forced:>7} {forbidden:>10} {sum(times) / len(times):>8.3f} {max(times):>8.3f}")


if __name__ == "__main__":
    main()
