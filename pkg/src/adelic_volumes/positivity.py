"""Positivity theory for toric adelic divisors and pairs: nef and ample
cones, arithmetic volumes, Zariski positive parts, intersection numbers by
polarization, positive intersection numbers, and the pseudo-effective
thresholds behind the inradius/circumradius of a pair of pairs.

Everything here is exact.  Volumes and intersection numbers are rational, or
symbolic combinations of log p when finite places contribute; thresholds are
returned as brackets that collapse to a single rational when the search can
certify the threshold analytically (the certificate: at the true threshold
the roof maximum vanishes or the polytope degenerates to a point, and the
maximum is concave in the parameter, so such a point is the threshold).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .divisors import ARCH, Pair, ToricAdelicDivisor, as_pair
from .errors import NotBig, NotNef, NotRelativelyNef, PrecisionExhausted
from .exactnum import scalar_sign, simplest_between
from .pa import (
    ConvexPA,
    Interval,
    convex_envelope,
    integrate_positive_part,
    legendre_potential,
    legendre_roof,
)

DEFAULT_THRESHOLD_TOL = Fraction(1, 2**40)


def _as_divisor(obj) -> ToricAdelicDivisor:
    if isinstance(obj, ToricAdelicDivisor):
        return obj
    if isinstance(obj, Pair) and obj.base.is_zero:
        return obj.divisor
    raise TypeError(f"expected a divisor, got {type(obj).__name__}")


# -- nef and ample ---------------------------------------------------------


@dataclass(frozen=True)
class NefCertificate:
    """Witness of nefness: all potentials convex and the recorded minimum of
    the global roof over the polytope is nonnegative."""

    divisor: ToricAdelicDivisor
    min_roof_value: object


def is_relatively_nef(divisor) -> bool:
    divisor = _as_divisor(divisor)
    if scalar_sign(divisor.degree) < 0:
        return False
    return all(
        isinstance(divisor.potential(v), ConvexPA) for v in divisor.places
    )


def nef_certificate(divisor) -> NefCertificate:
    divisor = _as_divisor(divisor)
    if not is_relatively_nef(divisor):
        raise NotRelativelyNef(f"{divisor!r} has a non-convex potential")
    roof = Pair(divisor).global_roof()
    m = roof.min_over_domain()
    if scalar_sign(m) < 0:
        raise NotNef(f"{divisor!r} has roof minimum {m} < 0")
    return NefCertificate(divisor=divisor, min_roof_value=m)


def is_nef(divisor) -> bool:
    try:
        nef_certificate(divisor)
    except (NotRelativelyNef, NotNef):
        return False
    return True


def is_ample(divisor) -> bool:
    divisor = _as_divisor(divisor)
    if scalar_sign(divisor.degree) <= 0 or not is_relatively_nef(divisor):
        return False
    roof = Pair(divisor).global_roof()
    return scalar_sign(roof.min_over_domain()) > 0


def is_w_ample(divisor) -> bool:
    """Ampleness in the weak (height) sense.  For relatively nef data this
    coincides with ampleness on a curve; data that is not relatively nef is
    rejected outright rather than classified."""
    divisor = _as_divisor(divisor)
    if not is_relatively_nef(divisor):
        raise NotRelativelyNef(
            f"{divisor!r} is not relatively nef; refusing to classify"
        )
    return is_ample(divisor)


# -- volume and bigness ----------------------------------------------------


def avol(pair):
    """Arithmetic volume: twice the area between the global roof and zero.

    Exact: a Fraction for log-free data, a symbolic-log scalar otherwise.
    An empty or degenerate polytope gives volume zero.
    """
    pair = as_pair(pair)
    window = pair.shifted_polytope()
    if window.is_empty or window.is_point:
        return Fraction(0)
    return 2 * integrate_positive_part(pair.global_roof())


def is_big(pair) -> bool:
    return scalar_sign(avol(pair)) > 0


def is_pseff(pair) -> bool:
    pair = as_pair(pair)
    window = pair.shifted_polytope()
    if window.is_empty:
        return False
    return scalar_sign(pair.global_roof().max_over_domain()) >= 0


# -- Zariski positive part -------------------------------------------------


@dataclass(frozen=True)
class ZariskiPart:
    """The maximal nef divisor under a big pair.  Its polytope is the region
    where the roof is nonnegative and its potentials are the biconjugates of
    the roofs restricted there; the volume matches the pair's exactly."""

    pair: Pair
    positive: ToricAdelicDivisor
    region: Interval


def zariski_positive_part(pair) -> ZariskiPart:
    pair = as_pair(pair)
    if not is_big(pair):
        raise NotBig(f"{pair!r} has volume zero; no positive part")
    roof = pair.global_roof()
    region = roof.nonneg_region()
    divisor = pair.divisor
    pots = {ARCH: legendre_potential(
        legendre_roof(convex_envelope(divisor.potential(ARCH))).restrict(region)
    )}
    for place in divisor.places:
        if place == ARCH:
            continue
        psi = legendre_roof(convex_envelope(divisor.potential(place)))
        pots[place] = legendre_potential(psi.restrict(region))
    positive = ToricAdelicDivisor(region.hi, -region.lo, pots)
    return ZariskiPart(pair=pair, positive=positive, region=region)


# -- intersection numbers --------------------------------------------------


def ample_reference() -> ToricAdelicDivisor:
    """A fixed ample divisor: coefficients (1, 1), archimedean potential
    |u| + 1.  Its roof is constant 1 on [-1, 1], so its volume is 4."""
    return ToricAdelicDivisor(
        1, 1, {ARCH: ConvexPA([(Fraction(0), Fraction(1))], -1, 1)}
    )


def _kink_correction(pot):
    """Convex correction cancelling the downward kinks of a potential:
    sum of kappa_i * max(0, u - u_i) over the kinks, with kappa_i the slope
    drop.  Returns (correction PA, total slope) or None when already convex.
    """
    slopes = [pot.left_slope]
    for p, q in zip(pot.points, pot.points[1:]):
        slopes.append((q[1] - p[1]) / (q[0] - p[0]))
    slopes.append(pot.right_slope)
    kinks = []
    for i, (s_in, s_out) in enumerate(zip(slopes, slopes[1:])):
        drop = s_in - s_out
        if scalar_sign(drop) > 0:
            kinks.append((pot.points[i][0], drop))
    if not kinks:
        return None
    out = []
    y = Fraction(0)
    cum = Fraction(0)
    prev_u = None
    for u, drop in kinks:
        if prev_u is not None:
            y = y + cum * (u - prev_u)
        out.append((u, y))
        cum = cum + drop
        prev_u = u
    return ConvexPA(out, 0, cum), cum


def nef_decomposition(divisor) -> tuple:
    """Write the divisor as a difference of two nef divisors.

    Non-convex potentials are repaired by per-place kink corrections, and a
    growing multiple of the ample reference absorbs negative degree and
    negative roof minima on both sides.
    """
    divisor = _as_divisor(divisor)
    correction = ToricAdelicDivisor.zero()
    for place in divisor.places:
        fixed = _kink_correction(divisor.potential(place))
        if fixed is None:
            continue
        corr_pa, total = fixed
        correction = correction + ToricAdelicDivisor(total, 0, {place: corr_pa})
    h = ample_reference()
    lam = Fraction(0)
    while True:
        bump = h.scale(lam)
        plus = divisor + correction + bump
        minus = correction + bump
        if is_nef(plus) and is_nef(minus):
            return plus, minus
        lam = lam * 2 if lam else Fraction(1)
        if lam > 2**40:
            raise PrecisionExhausted(
                f"nef decomposition of {divisor!r} did not stabilize"
            )


def _polarize(a: ToricAdelicDivisor, b: ToricAdelicDivisor):
    return (avol(Pair(a + b)) - avol(Pair(a)) - avol(Pair(b))) / 2


def _nef_split(x: ToricAdelicDivisor, x_nef: bool) -> tuple:
    """(plus, minus) with x = plus - minus and both nef.  A nef input or one
    with nef negation gets a trivial split, skipping the ample-lift search."""
    zero = ToricAdelicDivisor.zero()
    if x_nef:
        return x, zero
    neg = x.scale(-1)
    if is_nef(neg):
        return zero, neg
    return nef_decomposition(x)


def adeg_product(a, b):
    """Arithmetic intersection number of two divisors, by polarization of
    the volume on the nef cone and bilinear extension elsewhere.

    Expanding the polarization over a = ap - am, b = bp - bm cancels every
    single-divisor volume, so only the four cross sums are evaluated; a nef
    input keeps its trivial decomposition (itself, zero)."""
    a = _as_divisor(a)
    b = _as_divisor(b)
    a_nef, b_nef = is_nef(a), is_nef(b)
    if a_nef and b_nef:
        return _polarize(a, b)
    ap, am = _nef_split(a, a_nef)
    bp, bm = _nef_split(b, b_nef)
    return (
        avol(Pair(ap + bp))
        - avol(Pair(ap + bm))
        - avol(Pair(am + bp))
        + avol(Pair(am + bm))
    ) / 2


def positive_intersection(pair, direction):
    """Positive intersection number of a big pair against a divisor: the
    intersection of the Zariski positive part with the direction."""
    zar = zariski_positive_part(as_pair(pair))
    return adeg_product(zar.positive, _as_divisor(direction))


def positive_intersection_lower(pair, direction, offsets=(
        Fraction(1, 4), Fraction(1, 16), Fraction(1, 64))):
    """Estimate the positive intersection from below by sampling nef
    minorants: positive parts of the pair pushed off the ample reference.
    For a nef direction the estimate increases toward the exact value as the
    offsets shrink; it never exceeds it."""
    pair = as_pair(pair)
    direction = _as_divisor(direction)
    h = ample_reference()
    best = None
    for eps in offsets:
        shrunk = Pair(pair.divisor + h.scale(-eps), pair.base)
        if not is_big(shrunk):
            continue
        q = zariski_positive_part(shrunk).positive
        val = adeg_product(q, direction)
        if best is None or val > best:
            best = val
    if best is None:
        raise NotBig(
            "no sampled minorant stayed big; the pair sits too close to the "
            "boundary for the coarsest offset"
        )
    return best


# -- thresholds, inradius, circumradius ------------------------------------


@dataclass(frozen=True)
class Bracket:
    """A rational enclosure [lo, hi] of a threshold; exact when lo == hi."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def value(self) -> Fraction:
        return self.lo if self.exact else (self.lo + self.hi) / 2

    def reciprocal(self) -> "Bracket":
        if self.lo <= 0:
            raise ValueError(f"reciprocal of {self} needs a positive lower end")
        return Bracket(1 / self.hi, 1 / self.lo)

    def __float__(self) -> float:
        return float(self.value)

    def __repr__(self):
        if self.exact:
            return f"Bracket({self.lo})"
        return f"Bracket({self.lo}, {self.hi})"


def pseff_threshold(pair, nef_divisor, tol: Fraction = DEFAULT_THRESHOLD_TOL,
                    max_probes: int = 512) -> Bracket:
    """sup of t with (pair - t * nef_divisor) pseudo-effective.

    Probes are rational; a probe is certified as the exact threshold when the
    twisted pair's roof maximum is exactly zero or its polytope is a single
    point (the maximum is concave in t and positive at t = 0, so it cannot
    plateau).  Rational thresholds are found exactly because the probe
    sequence prefers the simplest rational in the current bracket.
    """
    pair = as_pair(pair)
    n = _as_divisor(nef_divisor)
    if not is_big(pair):
        raise NotBig(f"{pair!r} is not big")
    if not is_nef(n):
        raise NotNef(f"{n!r} is not nef")
    if scalar_sign(avol(Pair(n))) <= 0:
        raise NotNef(f"{n!r} is nef but has volume zero")

    def twisted(t: Fraction) -> Pair:
        return Pair(pair.divisor + n.scale(-t), pair.base)

    def pseff(t: Fraction) -> bool:
        return is_pseff(twisted(t))

    def certified(t: Fraction) -> bool:
        p = twisted(t)
        window = p.shifted_polytope()
        if window.is_empty:
            return False
        top = p.global_roof().max_over_domain()
        if scalar_sign(top) < 0:
            return False
        return bool(window.is_point) or scalar_sign(top) == 0

    lo, hi = Fraction(0), Fraction(1)
    probes = 0
    while pseff(hi):
        lo, hi = hi, 2 * hi
        probes += 1
        if probes > 80:
            raise PrecisionExhausted("threshold did not bracket below 2^80")
    use_midpoint = False
    while True:
        if certified(lo):
            return Bracket(lo, lo)
        if hi - lo <= tol:
            return Bracket(lo, hi)
        q = lo + (hi - lo) / 2 if use_midpoint else simplest_between(lo, hi)
        use_midpoint = not use_midpoint
        if pseff(q):
            lo = q
        else:
            hi = q
        probes += 1
        if probes > max_probes:
            raise PrecisionExhausted(
                f"threshold search did not converge in {max_probes} probes"
            )


def inradius(pair1, pair2, tol: Fraction = DEFAULT_THRESHOLD_TOL) -> Bracket:
    """Largest t with (pair1 - t * positive part of pair2) pseudo-effective."""
    pos2 = zariski_positive_part(as_pair(pair2)).positive
    return pseff_threshold(as_pair(pair1), pos2, tol=tol)


def circumradius(pair1, pair2, tol: Fraction = DEFAULT_THRESHOLD_TOL) -> Bracket:
    """Reciprocal of the inradius with the roles swapped."""
    inner_tol = tol
    for _ in range(8):
        inner = inradius(pair2, pair1, tol=inner_tol)
        if inner.lo > 0:
            return inner.reciprocal()
        inner_tol = inner_tol * inner_tol
    raise PrecisionExhausted("swapped inradius is indistinguishable from zero")


@dataclass(frozen=True)
class DiskantReport:
    """The isoperimetric data of two big pairs: the mixed quantities
    s0, s1, s2, the inradius and circumradius brackets, and one named case
    per inequality with its slack."""

    s0: object
    s1: object
    s2: object
    r: Bracket
    R: Bracket
    cases: tuple

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cases)

    def case(self, name: str):
        for c in self.cases:
            if c.name == name:
                return c
        raise KeyError(name)
