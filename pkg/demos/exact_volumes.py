"""Tour of exact arithmetic volumes on the gallery divisors.

Every quantity printed here is computed in exact arithmetic: rational
numbers stay rational, and finite places contribute symbolic log p
factors that are carried through the whole computation.

Run with:  python3 demos/exact_volumes.py
"""

from __future__ import annotations

from fractions import Fraction

from adelic_volumes import (
    ARCH,
    ConvexPA,
    Pair,
    ToricAdelicDivisor,
    avol,
    half_zero_pair,
    p_slant_divisor,
    scalar_float,
    slant_divisor,
    tent_divisor,
    zariski_positive_part,
)


def show(label: str, pair) -> None:
    pair = pair if isinstance(pair, Pair) else Pair(pair)
    window = pair.shifted_polytope()
    roof = pair.global_roof()
    v = avol(pair)
    print(f"{label}")
    print(f"  shifted polytope : {window}")
    print(f"  global roof      : {roof}")
    print(f"  avol             : {v}  (~ {scalar_float(v):.6f})")
    print()


def main() -> None:
    print("=== exact arithmetic volumes ===\n")

    show("slant divisor (roof 1 - x on [0, 1])", slant_divisor())
    show("tent divisor (roof 1 - |x| on [-1, 1])", tent_divisor())
    show("slant shape at the place p = 2 (volume log 2)", p_slant_divisor(2))
    show("slant divisor with base condition ord >= 1/2 at Zero",
         half_zero_pair())

    # A divisor that fails to be nef: its roof dips below zero near the
    # right edge of the polytope.  The Zariski positive part trims the
    # polytope to where the roof is nonnegative and keeps the volume.
    pot = ConvexPA([(Fraction(1), Fraction(1, 2))], 0, 1)
    lowered = ToricAdelicDivisor(1, 0, {ARCH: pot})
    pair = Pair(lowered)
    zar = zariski_positive_part(pair)
    residual = lowered + zar.positive.scale(-1)
    print("lowered slant divisor (roof dips below zero; not nef)")
    print(f"  avol(original)      : {avol(pair)}")
    print(f"  positive region     : {zar.region}")
    print(f"  positive part       : {zar.positive!r}")
    print(f"  avol(positive part) : {avol(zar.positive)}")
    print(f"  residual is effective: {residual.is_effective}")


if __name__ == "__main__":
    main()
