"""Brute-force section-counting oracles for toric adelic pairs.

The analytic machinery elsewhere predicts volumes from the global roof; this
module counts actual small sections, so the two routes can be compared.  A
section of the m-th multiple is a Laurent monomial coefficient vector; for
invariant metrics the sup-norm unit ball is a product of coefficient boxes,
one per admissible exponent.  The box at exponent k collects the rationals
with denominator d_k = prod p^floor(m psi_p(k/m) / log p) and absolute value
at most exp(m psi_inf(k/m)).  Counting boxes instead of the true ball costs
at most a factor (m+1) per place, invisible in the m -> infinity limit.

All per-exponent counts are exact integers (floors of d * e^q are resolved by
interval arithmetic with precision widening; e^q is irrational for rational
q != 0, so the floor is well defined).  Only the final logarithm is taken in
floating point, at the configured working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import iv, mp

from .divisors import ARCH, Pair, as_pair
from .errors import EmptyPolytope, NotBig, PrecisionExhausted
from .exactnum import default_precision_bits, floor_fraction, scalar_fraction
from .pa import ConcavePA, Interval, convex_envelope, integrate_positive_part, legendre_roof

_MAX_FLOOR_BITS = 1 << 16


def _floor_scaled_exp(d: Fraction, q: Fraction) -> int:
    """floor(d * e^q) for positive rational d and rational q, exactly."""
    if q == 0:
        return floor_fraction(d)
    bits = default_precision_bits()
    while bits <= _MAX_FLOOR_BITS:
        with mp.workprec(bits):
            old = iv.prec
            iv.prec = bits
            try:
                val = (
                    iv.exp(iv.mpf(q.numerator) / q.denominator)
                    * d.numerator
                    / d.denominator
                )
                lo = int(mpmath.floor(val.a))
                hi = int(mpmath.floor(val.b))
            finally:
                iv.prec = old
        if lo == hi:
            return lo
        bits *= 2
    raise PrecisionExhausted(
        f"floor of {d} * exp({q}) undecided at {_MAX_FLOOR_BITS} bits"
    )


def place_roofs(pair) -> tuple:
    """The archimedean roof and the finite-place roofs (in log p units),
    each on the full polytope of the divisor."""
    pair = as_pair(pair)
    divisor = pair.divisor
    if divisor.polytope().is_empty:
        raise EmptyPolytope(f"{divisor!r} has negative degree; no sections")
    psi_inf = legendre_roof(convex_envelope(divisor.potential(ARCH)))
    finite = {}
    for place in divisor.places:
        if place == ARCH:
            continue
        finite[place] = legendre_roof(convex_envelope(divisor.potential(place)))
    return psi_inf, finite


@dataclass(frozen=True)
class BoxEntry:
    """One admissible exponent: its coefficient denominator, the log of the
    archimedean bound (exact rational), and the resulting box count."""

    k: int
    denominator: Fraction
    log_bound: Fraction
    count: int


@dataclass(frozen=True)
class SectionBox:
    m: int
    entries: tuple

    @property
    def count_product(self) -> int:
        out = 1
        for e in self.entries:
            out *= e.count
        return out

    def log_count(self):
        with mp.workprec(default_precision_bits() + 32):
            return mp.log(self.count_product)


def section_box(pair, m: int) -> SectionBox:
    """Enumerate the coefficient boxes of the m-th multiple of a pair."""
    pair = as_pair(pair)
    if m < 1 or m != int(m):
        raise ValueError(f"multiple m must be a positive integer, got {m!r}")
    m = int(m)
    window = pair.shifted_polytope()
    if window.is_empty:
        raise EmptyPolytope(f"{pair!r} has an empty shifted polytope")
    psi_inf, finite = place_roofs(pair)
    k_lo = -floor_fraction(scalar_fraction(-Fraction(m) * window.lo))
    k_hi = floor_fraction(scalar_fraction(Fraction(m) * window.hi))
    entries = []
    for k in range(k_lo, k_hi + 1):
        x = Fraction(k, m)
        d = Fraction(1)
        for p, roof in finite.items():
            f_p = floor_fraction(scalar_fraction(m * roof.eval(x)))
            d *= Fraction(p) ** f_p
        q = scalar_fraction(m * psi_inf.eval(x))
        n = 2 * _floor_scaled_exp(d, q) + 1
        entries.append(BoxEntry(k=k, denominator=d, log_bound=q, count=n))
    return SectionBox(m=m, entries=tuple(entries))


def box_log_count(pair, m: int):
    """log of the number of strictly small sections of the m-th multiple,
    in the coefficient-box model."""
    return section_box(pair, m).log_count()


def volume_estimate(pair, m: int):
    """Finite-level volume estimate 2 log #sections / m^2."""
    return 2 * box_log_count(pair, m) / mp.mpf(m * m)


def empirical_transform(pair, m: int, w):
    """Largest filtration parameter t at which the exponent identified with
    w still carries a nonzero admissible coefficient, or None when the
    exponent lies outside the shifted polytope (no sections at w at all).

    The filtration twists the divisor by -(0, 2t[infinity]); the potential
    dictionary turns that into psi_inf - t, and the box at exponent k goes
    empty as soon as t exceeds psi_inf(k/m) + log(d_k)/m.
    """
    pair = as_pair(pair)
    w = Fraction(w)
    x = -w
    window = pair.shifted_polytope()
    if window.is_empty:
        raise EmptyPolytope(f"{pair!r} has an empty shifted polytope")
    if not (window.lo <= x <= window.hi):
        return None
    if (w * m).denominator != 1:
        raise ValueError(f"w = {w} is not a multiple of 1/{m}")
    psi_inf, finite = place_roofs(pair)
    t = scalar_fraction(psi_inf.eval(x))
    with mp.workprec(default_precision_bits() + 32):
        out = mp.mpf(t.numerator) / t.denominator
        for p, roof in finite.items():
            f_p = floor_fraction(scalar_fraction(m * roof.eval(x)))
            out += mp.mpf(f_p) * mp.log(p) / m
        return +out


@dataclass(frozen=True)
class OkounkovSample:
    """Empirical concave-transform samples at level m: pairs (w, t_max)."""

    m: int
    entries: tuple


def okounkov_sample(pair, m: int) -> OkounkovSample:
    pair = as_pair(pair)
    window = pair.shifted_polytope()
    if window.is_empty:
        raise EmptyPolytope(f"{pair!r} has an empty shifted polytope")
    lo = -floor_fraction(scalar_fraction(Fraction(m) * window.hi))
    hi = floor_fraction(scalar_fraction(-Fraction(m) * window.lo))
    entries = []
    for j in range(lo, hi + 1):
        w = Fraction(j, m)
        entries.append((w, empirical_transform(pair, m, w)))
    return OkounkovSample(m=m, entries=tuple(entries))


@dataclass(frozen=True)
class OkounkovData:
    """The arithmetic Okounkov body data of a big pair: the projected
    interval, the concave transform on it, and the induced volumes."""

    domain: Interval
    transform: ConcavePA
    body_volume: object
    avol: object


def analytic_okounkov(pair) -> OkounkovData:
    """Okounkov body for the flag valuation 'order of vanishing at Zero'.

    The valuation of the section at x is w = -x, so the body's shadow is the
    reflected shifted polytope and the concave transform is the reflected
    roof; the volume above zero halves the arithmetic volume.
    """
    from .positivity import is_big

    pair = as_pair(pair)
    if not is_big(pair):
        raise NotBig(f"{pair!r} is not big; the Okounkov body is degenerate")
    roof = pair.global_roof()
    transform = roof.reflect()
    body_volume = integrate_positive_part(roof)
    return OkounkovData(
        domain=transform.domain,
        transform=transform,
        body_volume=body_volume,
        avol=2 * body_volume,
    )
