"""Compare the Hecke-trace and skein-tree HOMFLY-PT on random braids and report timings."""

from __future__ import annotations

import argparse
import random
import time

from braidforge.braid import BraidWord
from braidforge.config import Caps
from braidforge.hecke import homfly
from braidforge.skein import homfly_skein_oracle


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--max-strands", type=int, default=5)
    parser.add_argument("--max-length", type=int, default=14)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    caps = Caps(skein_crossings=args.max_length)
    t_hecke = t_skein = 0.0
    mismatches = 0
    for _ in range(args.samples):
        n = rng.randint(2, args.max_strands)
        w = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, args.max_length))))
        t0 = time.perf_counter()
        a = homfly(w, caps)
        t1 = time.perf_counter()
        b = homfly_skein_oracle(w, caps)
        t2 = time.perf_counter()
        t_hecke += t1 - t0
        t_skein += t2 - t1
        if a != b:
            mismatches += 1
            print(f"mismatch: {w}")
    print(f"{args.samples} braids, {mismatches} mismatches; hecke {t_hecke:.2f}s, skein {t_skein:.2f}s")


if __name__ == "__main__":
    main()
