"""Check the half-twist construction against torus braids for every window up to a strand bound."""

from __future__ import annotations

import argparse

from braidforge.braid import format_braid
from braidforge.families import HalfTwistSpec, half_twist_torus_construction, torus_braid
from braidforge.wordproblem import braid_equal


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-strands", type=int, default=8)
    parser.add_argument("--show-words", action="store_true")
    args = parser.parse_args()

    n = args.max_strands
    failures = 0
    print(f"{'i':>2} {'j':>2} {'t':>2}  equal  letters")
    for j in range(2, n + 1):
        for i in range(1, j):
            for t in range(1, j - i + 1):
                built = half_twist_torus_construction(HalfTwistSpec(i, j, t), n)
                ok = braid_equal(built, torus_braid(i, j, t, n))
                failures += not ok
                extra = f"  {format_braid(built)}" if args.show_words else ""
                print(f"{i:2d} {j:2d} {t:2d}  {'yes' if ok else 'NO ':5s}  {len(built):3d}{extra}")
    print(f"{failures} failure(s)")


if __name__ == "__main__":
    main()
