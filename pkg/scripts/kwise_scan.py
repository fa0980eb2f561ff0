"""Search random r-state character sets for k-wise-but-not-fully compatible ones.

With r=2, k=2 or r=3, k=3 no hit is expected; r=4, k=3 finds examples.
"""

from __future__ import annotations

import argparse
import random

from phylosandwich.experiments import k_wise_violation, random_characters


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--species", type=int, default=7, help="max species per set")
    ap.add_argument("--chars", type=int, default=5, help="max characters per set")
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hits = 0
    for t in range(args.trials):
        seed = rng.randrange(2**31)
        n_species = rng.randint(args.r + 1, max(args.r + 1, args.species))
        n_chars = rng.randint(args.k + 1, max(args.k + 1, args.chars))
        cs = random_characters(seed, n_species, n_chars, args.r)
        if k_wise_violation(cs, args.k):
            hits += 1
            print(f"seed {seed}: {n_species} species, {n_chars} characters")
    print(f"{hits}/{args.trials} sets are {args.k}-wise but not fully compatible (r={args.r})")


if __name__ == "__main__":
    main()
