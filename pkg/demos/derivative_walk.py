"""Differentiability of the arithmetic volume along a direction.

Walking the slant divisor along a constant height shift crosses a wall:
the volume is 1 + 2r for r >= 0 but (1 + r)^2 for r < 0.  The function
is C^1 there (both one-sided derivatives equal 2) while the second
derivative jumps from 2 to 0, which is exactly what the report's
one-sided quadratic fits recover.  In general position no wall is
crossed and the certified central difference equals the exact
derivative 2 <positive part . direction> on the nose.

Run with:  python3 demos/derivative_walk.py
"""

from __future__ import annotations

import random
from fractions import Fraction

from adelic_volumes import (
    check_differentiability,
    height_shift,
    positive_intersection,
    slant_divisor,
)
from adelic_volumes.harness import sample_derivative_instance


def main() -> None:
    print("=== volume derivative along a height shift ===\n")

    pair = slant_divisor()
    direction = height_shift(1)
    rep = check_differentiability(pair, direction)

    print("finite differences of avol(slant + r * shift):")
    print(f"{'h':>8}  {'forward':>10}  {'backward':>10}  {'central':>10}")
    for row in rep.table:
        print(f"{str(row.h):>8}  {str(row.forward):>10}"
              f"  {str(row.backward):>10}  {str(row.central):>10}")
    print()
    print(f"exact right derivative : {rep.exact_right}"
          f"   (quadratic coefficient {rep.quad_right})")
    print(f"exact left derivative  : {rep.exact_left}"
          f"   (quadratic coefficient {rep.quad_left})")
    print(f"two-sided derivative   : {rep.analytic}")
    print(f"central-difference deviation at the reference step: "
          f"{rep.deviation}")
    print()
    print("the curvature jump (2 on the left, 0 on the right) is why the")
    print("central difference only agrees to O(h) at this special point.\n")

    print("=== general position: exact agreement ===\n")
    rng = random.Random(7)
    for k in range(3):
        sampled_pair, sampled_dir, central = sample_derivative_instance(rng)
        analytic = 2 * positive_intersection(sampled_pair, sampled_dir)
        dev = abs(central - analytic)
        print(f"sample {k}: certified central difference {central}")
        print(f"          2 <positive part . direction>  {analytic}")
        print(f"          deviation {dev}")
    print()
    print("the sampler certifies a single quadratic piece on [-h, h], so")
    print("the central difference is not merely close: it is exact.")


if __name__ == "__main__":
    main()
