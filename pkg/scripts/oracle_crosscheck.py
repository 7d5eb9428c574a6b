"""Compare the free-group action oracle with the Garside normal form on random pairs.

usage: python3 scripts/oracle_crosscheck.py [--pairs 2000] [--length 20] [--ranks 2,3,4,5,6]
"""

import argparse
import random
import time

from artinaut.braid import artin_action, garside_nf
from artinaut.presentations import A, insert_relators, presentation, random_word


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--length", type=int, default=20)
    ap.add_argument("--ranks", default="3,4,5,6")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    total_bad = 0
    for n in (int(x) for x in args.ranks.split(",")):
        pres = presentation(A(n))
        equal = bad = 0
        start = time.perf_counter()
        for _ in range(args.pairs):
            u = random_word(rng, n, args.length)
            v = insert_relators(rng, u, pres) if rng.random() < 0.5 else random_word(rng, n, args.length)
            a = artin_action(u, n) == artin_action(v, n)
            g = garside_nf(u, n) == garside_nf(v, n)
            equal += a
            bad += a != g
        total_bad += bad
        print(f"n={n}: {args.pairs} pairs, {equal} equal, {bad} disagreements "
              f"({time.perf_counter() - start:.2f}s)")
    return 1 if total_bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
