"""Theorem-level verification: differentiability of the volume, the
Diskant/Bonnesen inequality chain with equality diagnostics, and the
randomized property suites.

The volume of a pair along a line of divisors is piecewise quadratic with
exact rational (or symbolic-log) values, so derivative checks can be exact:
one-sided derivatives are read off from stabilized quadratic fits, and in
general position the central difference at a fixed step equals the analytic
value on the nose.  Random samplers keep heights small (numerators and
denominators at most 16, at most two finite places) so exact arithmetic
stays fast while the piecewise structure is genuinely exercised.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .divisors import ARCH, Pair, ToricAdelicDivisor, as_pair, min_adelic
from .errors import NotBig, UnknownSuite
from .exactnum import default_precision_bits, log_unit, scalar_float, scalar_sign
from .gallery import half_zero_pair, height_shift, slant_divisor, tent_divisor
from .pa import ConvexPA, PAGeneral, abs_scalar, convex_envelope, legendre_potential, legendre_roof
from .points import BaseCondition
from .positivity import (
    DEFAULT_THRESHOLD_TOL,
    DiskantReport,
    _as_divisor,
    adeg_product,
    avol,
    circumradius,
    inradius,
    is_big,
    is_nef,
    positive_intersection,
    positive_intersection_lower,
    zariski_positive_part,
)
from .sections import okounkov_sample, volume_estimate

DEFAULT_HS = tuple(Fraction(1, 2**k) for k in range(4, 13))
REFERENCE_H = Fraction(1, 2**10)


# -- differentiability of the volume ---------------------------------------


@dataclass(frozen=True)
class FiniteDifferenceRow:
    h: Fraction
    forward: object
    backward: object
    central: object


@dataclass(frozen=True)
class DerivativeReport:
    """Finite-difference table for the volume along a direction, the exact
    one-sided derivatives when the quadratic fits stabilize, and the
    analytic value (twice the positive intersection against the direction).

    deviation is |central difference at the reference step - analytic|
    relative to 1 + |analytic|; curvature_jump records that the two one-sided
    quadratic coefficients differ (the volume is C^1 there but not C^2,
    which is allowed and reported)."""

    pair: Pair
    direction: ToricAdelicDivisor
    table: tuple
    analytic: object
    exact_right: object
    exact_left: object
    quad_right: object
    quad_left: object
    deviation: object

    @property
    def derivative(self):
        """The two-sided exact derivative, when both fits stabilized and
        agree (the differentiability claim)."""
        if self.exact_right is None or self.exact_left is None:
            return None
        if bool(self.exact_right == self.exact_left):
            return self.exact_right
        return None

    @property
    def curvature_jump(self) -> bool:
        if self.quad_right is None or self.quad_left is None:
            return False
        return not bool(self.quad_right == self.quad_left)


def _onesided_fit(vol_at, v0, sign: int):
    """Exact one-sided derivative and quadratic coefficient at 0, by
    quadratic interpolation on successively halved steps until two fits
    agree exactly; (None, None) if no stabilization within the budget."""
    h = Fraction(1, 64)
    prev = None
    for _ in range(40):
        y1 = vol_at(sign * h / 2)
        y2 = vol_at(sign * h)
        b = (4 * y1 - y2 - 3 * v0) / (sign * h)
        a = 2 * (y2 - 2 * y1 + v0) / (h * h)
        if prev is not None and bool(b == prev[0]) and bool(a == prev[1]):
            return b, a
        prev = (b, a)
        h = h / 2
    return None, None


def check_differentiability(pair, direction, hs=None) -> DerivativeReport:
    pair = as_pair(pair)
    direction = _as_divisor(direction)
    if not is_big(pair):
        raise NotBig(f"{pair!r} is not big")
    if hs is None:
        hs = DEFAULT_HS
    hs = [Fraction(h) for h in hs]
    if any(not h2 < h1 for h1, h2 in zip(hs, hs[1:])) or any(h <= 0 for h in hs):
        raise ValueError("step sizes must be positive and strictly decreasing")

    def vol_at(r):
        return avol(Pair(pair.divisor + direction.scale(r), pair.base))

    v0 = vol_at(Fraction(0))
    rows = []
    for h in hs:
        up, down = vol_at(h), vol_at(-h)
        rows.append(FiniteDifferenceRow(
            h=h,
            forward=(up - v0) / h,
            backward=(v0 - down) / h,
            central=(up - down) / (2 * h),
        ))
    analytic = 2 * positive_intersection(pair, direction)
    b_r, a_r = _onesided_fit(vol_at, v0, +1)
    b_l, a_l = _onesided_fit(vol_at, v0, -1)
    ref = REFERENCE_H if REFERENCE_H in hs else hs[-1]
    central_ref = (vol_at(ref) - vol_at(-ref)) / (2 * ref)
    deviation = abs_scalar(central_ref - analytic) / (1 + abs_scalar(analytic))
    return DerivativeReport(
        pair=pair,
        direction=direction,
        table=tuple(rows),
        analytic=analytic,
        exact_right=b_r,
        exact_left=b_l,
        quad_right=a_r,
        quad_left=a_l,
        deviation=deviation,
    )


# -- the isoperimetric chain: Diskant / Bonnesen ---------------------------


@dataclass(frozen=True)
class InequalityCase:
    """One named inequality lhs <= rhs with its slack = rhs - lhs.  Exact
    scalars when no square root is involved, floats otherwise."""

    name: str
    lhs: object
    rhs: object
    slack: object
    passed: bool


_SLACK_TOL = Fraction(1, 10**9)


def _exact_case(name, lhs, rhs, tol: Fraction = Fraction(0)) -> InequalityCase:
    slack = rhs - lhs
    return InequalityCase(
        name=name, lhs=lhs, rhs=rhs, slack=slack,
        passed=scalar_sign(slack + tol) >= 0,
    )


def _float_case(name, lhs: float, rhs: float, tol: float = 1e-9) -> InequalityCase:
    slack = rhs - lhs
    return InequalityCase(name=name, lhs=lhs, rhs=rhs, slack=slack,
                          passed=slack >= -tol)


def diskant_report(pair1, pair2, tol: Fraction = DEFAULT_THRESHOLD_TOL) -> DiskantReport:
    """Mixed quantities, inradius/circumradius, and every inequality of the
    isoperimetric chain for two big pairs."""
    p1, p2 = as_pair(pair1), as_pair(pair2)
    zar1 = zariski_positive_part(p1)
    zar2 = zariski_positive_part(p2)
    s0 = avol(p2)
    s2 = avol(p1)
    s1 = adeg_product(zar1.positive, zar2.positive)
    r = inradius(p1, p2, tol=tol)
    big_r = circumradius(p1, p2, tol=tol)
    rv, Rv = r.value, big_r.value
    disc = s1 * s1 - s0 * s2

    cases = [
        _exact_case("mixed_discriminant_nonneg", Fraction(0), disc),
        _exact_case("diskant", (s1 - rv * s0) * (s1 - rv * s0), disc,
                    tol=_SLACK_TOL),
    ]
    if scalar_sign(disc) == 0:
        cases += [
            _exact_case("chain_lower_vs_r", s1 / s0, rv, tol=_SLACK_TOL),
            _exact_case("chain_r_vs_ratio", rv, s2 / s1, tol=_SLACK_TOL),
            _exact_case("chain_ratio_mono", s2 / s1, s1 / s0),
            _exact_case("chain_ratio_vs_R", s1 / s0, Rv, tol=_SLACK_TOL),
            _exact_case("chain_R_vs_upper", Rv, s2 / s1, tol=_SLACK_TOL),
        ]
    else:
        f0, f1, f2 = scalar_float(s0), scalar_float(s1), scalar_float(s2)
        frv, fRv = float(rv), float(Rv)
        sq = math.sqrt(scalar_float(disc))
        cases += [
            _float_case("chain_lower_vs_r", (f1 - sq) / f0, frv),
            _float_case("chain_r_vs_ratio", frv, f2 / f1),
            _float_case("chain_ratio_mono", f2 / f1, f1 / f0),
            _float_case("chain_ratio_vs_R", f1 / f0, fRv),
            _float_case("chain_R_vs_upper", fRv, f2 / (f1 - sq)),
        ]
    bl = s0 * (Rv - rv) / 2
    cases.append(_exact_case("bonnesen", bl * bl, disc, tol=_SLACK_TOL))

    v12 = avol(p1 + p2)
    d = v12 - s2 - s0
    proportional = (
        scalar_sign(d) >= 0 and scalar_sign(d * d - 4 * s0 * s2) == 0
    )
    if not proportional:
        gap = abs(math.sqrt(scalar_float(v12)) - math.sqrt(scalar_float(s2))
                  - math.sqrt(scalar_float(s0)))
        proportional = gap <= 1e-9
    if proportional:
        if scalar_sign(disc) == 0:
            cases.append(_exact_case("equality_mixed_product", disc, Fraction(0)))
        else:
            cases.append(_float_case(
                "equality_mixed_product", abs(scalar_float(disc)), 0.0))
        cases.append(_float_case("equality_r_vs_R", abs(float(Rv - rv)),
                                 0.0, tol=1e-6))
    return DiskantReport(s0=s0, s1=s1, s2=s2, r=r, R=big_r, cases=tuple(cases))


# -- random samplers -------------------------------------------------------


def _frac(rng, num_lo: int, num_hi: int, max_den: int = 16) -> Fraction:
    return Fraction(rng.randint(num_lo, num_hi), rng.randint(1, max_den))


def sample_convex_potential(rng, c0: Fraction, cinf: Fraction) -> ConvexPA:
    """A random convex potential with the required asymptotic slopes
    (-cinf, c0); needs positive degree."""
    lo_s, hi_s = -cinf, c0
    cuts = sorted({Fraction(rng.randint(1, 31), 32)
                   for _ in range(rng.randint(0, 4))})
    slopes = [lo_s] + [lo_s + (hi_s - lo_s) * c for c in cuts] + [hi_s]
    us: set = set()
    while len(us) < len(slopes) - 1:
        us.add(_frac(rng, -8, 8, 4))
    us = sorted(us)
    y = _frac(rng, 0, 16, 8)
    pts = [(us[0], y)]
    for i in range(1, len(us)):
        y = y + slopes[i] * (us[i] - us[i - 1])
        pts.append((us[i], y))
    return ConvexPA(pts, lo_s, hi_s)


def _nonconvex_bump(rng) -> PAGeneral:
    a = _frac(rng, -6, 4, 4)
    w = Fraction(rng.randint(1, 8), 4)
    h = Fraction(rng.randint(1, 8), 8)
    return PAGeneral([(a, Fraction(0)), (a + w / 2, h), (a + w, Fraction(0))], 0, 0)


def sample_divisor(rng, allow_finite: bool = True,
                   convex: bool = True) -> ToricAdelicDivisor:
    """Positive-degree divisor with 0-4 kinks per potential and at most two
    finite places from {2, 3, 5}."""
    while True:
        c0 = _frac(rng, 0, 12, 8)
        cinf = _frac(rng, -4, 12, 8)
        if c0 + cinf > 0:
            break
    pots = {}
    if rng.random() < 0.85:
        pots[ARCH] = sample_convex_potential(rng, c0, cinf)
    if allow_finite and rng.random() < 0.35:
        for p in rng.sample([2, 3, 5], rng.randint(1, 2)):
            pots[p] = sample_convex_potential(rng, c0, cinf)
    divisor = ToricAdelicDivisor(c0, cinf, pots)
    if not convex:
        place = rng.choice(divisor.places) if divisor.places else ARCH
        bumped = divisor.potential(place) + _nonconvex_bump(rng).scale(-1)
        pots = {v: divisor.potential(v) for v in divisor.places}
        pots[place] = bumped
        divisor = ToricAdelicDivisor(c0, cinf, pots)
    return divisor


def sample_big_pair(rng, allow_finite: bool = True) -> Pair:
    for _ in range(256):
        divisor = sample_divisor(rng, allow_finite=allow_finite)
        base = BaseCondition()
        if rng.random() < 0.4:
            orders = {}
            if rng.random() < 0.8:
                orders["0"] = divisor.degree * Fraction(rng.randint(-2, 4), 8)
            if rng.random() < 0.4:
                orders["inf"] = divisor.degree * Fraction(rng.randint(-2, 3), 8)
            base = BaseCondition(orders)
        pair = Pair(divisor, base)
        if is_big(pair):
            return pair
    raise RuntimeError("big-pair sampler failed to produce a big pair")


def sample_nef_divisor(rng, allow_finite: bool = True) -> ToricAdelicDivisor:
    divisor = sample_divisor(rng, allow_finite=allow_finite)
    for _ in range(64):
        if is_nef(divisor):
            return divisor
        m = Pair(divisor).global_roof().min_over_domain()
        lift = Fraction(math.ceil((-scalar_float(m) + 1 / 64) * 64), 64)
        divisor = divisor + height_shift(lift)
    raise RuntimeError("nef sampler failed to lift the roof")


def sample_direction(rng, allow_finite: bool = True) -> ToricAdelicDivisor:
    roll = rng.random()
    if roll < 0.5:
        return height_shift(_frac(rng, -8, 8, 8))
    d = sample_divisor(rng, allow_finite=allow_finite, convex=roll < 0.85)
    return d.scale(Fraction(1, 4))


def sample_derivative_instance(rng, allow_finite: bool = True) -> tuple:
    """A big pair and direction in general position, plus the central
    difference of the volume at the reference step.

    General position means the volume along the direction is a single
    quadratic piece across [-h, h] at the reference step, certified by the
    three second differences on the grid {0, +-h/2, +-h} agreeing exactly;
    the central difference then equals the exact derivative at 0.  Kinked
    configurations are covered by fixed examples, not sampled."""
    h = REFERENCE_H
    for _ in range(64):
        pair = sample_big_pair(rng, allow_finite=allow_finite)
        direction = sample_direction(rng, allow_finite=allow_finite)

        def vol_at(t):
            return avol(Pair(pair.divisor + direction.scale(t), pair.base))

        y0 = vol_at(Fraction(0))
        ym1, yp1 = vol_at(-h / 2), vol_at(h / 2)
        ym2 = vol_at(-h)
        if not bool(y0 - 2 * ym1 + ym2 == yp1 - 2 * y0 + ym1):
            continue
        yp2 = vol_at(h)
        if not bool(yp2 - 2 * yp1 + y0 == yp1 - 2 * y0 + ym1):
            continue
        return pair, direction, (yp2 - ym2) / (2 * h)
    raise RuntimeError("no general-position derivative instance found")


# -- property suites -------------------------------------------------------


@dataclass(frozen=True)
class SuiteResult:
    name: str
    requested: int
    performed: int
    passes: int
    failures: int
    worst_slack: object
    failing: object

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.performed > 0

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "requested": self.requested,
            "performed": self.performed,
            "passes": self.passes,
            "failures": self.failures,
            "worst_slack": None if self.worst_slack is None else float(self.worst_slack),
            "ok": self.ok,
            "failing": self.failing,
        }


_SUITES = {}


def _suite(fn):
    _SUITES[fn.__name__[len("_suite_"):]] = fn
    return fn


def suite_names() -> tuple:
    return tuple(sorted(_SUITES))


def run_suite(name: str, count: int = 200, seed: int = 0) -> SuiteResult:
    """Evaluate one named property on `count` random instances (fixed-
    instance suites run their fixed checks once).  Deterministic in seed."""
    if name not in _SUITES:
        raise UnknownSuite(
            f"unknown suite {name!r}; choose from {', '.join(suite_names())}"
        )
    rng = random.Random(f"{name}:{seed}")
    passes = failures = performed = 0
    worst = None
    failing = None
    for ok, slack, payload in _SUITES[name](rng, count):
        performed += 1
        if ok:
            passes += 1
        else:
            failures += 1
            if failing is None:
                failing = payload
        if slack is not None:
            if worst is None or slack < worst:
                worst = slack
    return SuiteResult(name=name, requested=count, performed=performed,
                       passes=passes, failures=failures, worst_slack=worst,
                       failing=failing)


def _pair_payload(pair: Pair) -> dict:
    return pair.to_payload()


@_suite
def _suite_brunn_minkowski(rng, count):
    for _ in range(count):
        p1 = sample_big_pair(rng)
        p2 = sample_big_pair(rng)
        v1, v2, v12 = avol(p1), avol(p2), avol(p1 + p2)
        d = v12 - v1 - v2
        gap = d * d - 4 * v1 * v2
        ok = scalar_sign(d) >= 0 and scalar_sign(gap) >= 0
        yield ok, scalar_float(gap), None if ok else {
            "pair1": _pair_payload(p1), "pair2": _pair_payload(p2)}


@_suite
def _suite_homogeneity(rng, count):
    for _ in range(count):
        pair = sample_big_pair(rng)
        a = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        scaled = pair.scale(a)
        ok = bool(avol(scaled) == a * a * avol(pair))
        ok = ok and scaled.shifted_polytope() == pair.shifted_polytope().scale(a)
        yield ok, 0.0, None if ok else {"pair": _pair_payload(pair), "a": str(a)}


@_suite
def _suite_zariski(rng, count):
    for _ in range(count):
        pair = sample_big_pair(rng)
        zar = zariski_positive_part(pair)
        window = pair.shifted_polytope()
        diff = pair.divisor - zar.positive
        ok = is_nef(zar.positive)
        ok = ok and bool(avol(Pair(zar.positive)) == avol(pair))
        ok = ok and diff.is_effective
        ok = ok and bool(window.lo <= zar.region.lo) and bool(
            zar.region.hi <= window.hi)
        yield ok, 0.0, None if ok else {"pair": _pair_payload(pair)}


@_suite
def _suite_siu(rng, count):
    for _ in range(count):
        m = sample_nef_divisor(rng)
        n = sample_nef_divisor(rng)
        lhs = avol(Pair(m - n))
        rhs = adeg_product(m, m) - 2 * adeg_product(m, n)
        slack = lhs - rhs
        ok = scalar_sign(slack) >= 0
        yield ok, scalar_float(slack), None if ok else {
            "M": m.to_payload(), "N": n.to_payload()}


@_suite
def _suite_hodge(rng, count):
    for _ in range(count):
        d = sample_divisor(rng, convex=rng.random() < 0.7)
        d0 = d - ToricAdelicDivisor(d.degree, 0)
        x = adeg_product(d0, d0)
        ok = scalar_sign(x) <= 0
        yield ok, scalar_float(-x), None if ok else {"D": d0.to_payload()}


@_suite
def _suite_kt(rng, count):
    for _ in range(count):
        d = sample_nef_divisor(rng)
        e = sample_nef_divisor(rng)
        de = adeg_product(d, e)
        gap = de * de - adeg_product(d, d) * adeg_product(e, e)
        ok = scalar_sign(gap) >= 0
        yield ok, scalar_float(gap), None if ok else {
            "D": d.to_payload(), "E": e.to_payload()}


@_suite
def _suite_continuity(rng, count):
    for _ in range(count):
        pair = sample_big_pair(rng)
        places = list(pair.divisor.places) or [ARCH]
        place = rng.choice(places + [ARCH])
        phi = _nonconvex_bump(rng).scale(Fraction(rng.choice([-1, 1])))
        perturbed = pair.perturb(place, phi)
        delta = abs_scalar(avol(perturbed) - avol(pair))
        unit = Fraction(1) if place == ARCH else log_unit(place)
        window = pair.shifted_polytope()
        # The roof moves by at most sup|phi| / 2 (times log p at a finite
        # place), and the volume is twice an integral over the window.
        bound = (window.hi - window.lo) * unit * phi.sup_norm()
        slack = bound - delta
        ok = scalar_sign(slack) >= 0
        yield ok, scalar_float(slack), None if ok else {
            "pair": _pair_payload(pair), "place": str(place)}


@_suite
def _suite_min_valuation(rng, count):
    from .points import ClosedPoint

    zero, inf = ClosedPoint.zero(), ClosedPoint.infinity()
    for _ in range(count):
        ds = []
        for _ in range(rng.randint(2, 4)):
            d = sample_divisor(rng)
            if d.cinf < 0:
                d = d + ToricAdelicDivisor(0, -d.cinf)
            lifts = {}
            for v in d.places:
                low = d.potential(v).lower_bound()
                if low is not None and low < 0:
                    lifts[v] = d.potential(v) + ConvexPA.constant(-low)
                else:
                    lifts[v] = d.potential(v)
            d = ToricAdelicDivisor(d.c0, d.cinf, lifts)
            ds.append(d)
        m = min_adelic(ds)
        ok = bool(m.ord(zero) == min(x.ord(zero) for x in ds))
        ok = ok and bool(m.ord(inf) == min(x.ord(inf) for x in ds))
        ok = ok and m.is_effective
        places = {v for x in ds for v in x.places}
        for v in places:
            pots = [x.potential(v) for x in ds]
            grid = sorted({u for p in pots for u, _ in p.points} | {Fraction(-9), Fraction(9)})
            for u in grid:
                want = min((p.eval(u) for p in pots))
                ok = ok and bool(m.potential(v).eval(u) == want)
        ok = ok and min_adelic([ds[0], ds[0]]) == ds[0]
        yield ok, 0.0, None if ok else {"divisors": [x.to_payload() for x in ds]}


@_suite
def _suite_legendre_involution(rng, count):
    for _ in range(count):
        while True:
            c0 = _frac(rng, 0, 10, 8)
            cinf = _frac(rng, -3, 10, 8)
            if c0 + cinf > 0:
                break
        pot = sample_convex_potential(rng, c0, cinf)
        roof = legendre_roof(pot)
        ok = legendre_potential(roof) == pot
        ok = ok and legendre_roof(legendre_potential(roof)) == roof
        bumpy = pot + _nonconvex_bump(rng).scale(-1)
        env = convex_envelope(bumpy)
        grid = sorted({u for u, _ in bumpy.points})
        ok = ok and all(scalar_sign(bumpy.eval(u) - env.eval(u)) >= 0 for u in grid)
        ok = ok and legendre_roof(env) == legendre_roof(convex_envelope(bumpy))
        yield ok, 0.0, None if ok else {"potential": pot.to_payload()}


@_suite
def _suite_openness(rng, count):
    for _ in range(count):
        pair = sample_big_pair(rng)
        window = pair.shifted_polytope()
        margin_f = scalar_float(avol(pair)) / (
            8 * (scalar_float(window.hi - window.lo) + 1))
        delta = Fraction(margin_f).limit_denominator(1 << 20)
        if delta <= 0:
            delta = Fraction(1, 1 << 30)
        worst = pair.perturb(ARCH, PAGeneral.constant(-2 * delta))
        ok = delta > 0 and is_big(worst)
        yield ok, scalar_float(avol(worst)), None if ok else {
            "pair": _pair_payload(pair), "delta": str(delta)}


@_suite
def _suite_oracle_convergence(rng, count):
    del rng, count  # fixed-instance suite
    e1 = Pair(slant_divisor())
    with mpmath.mp.workprec(default_precision_bits() + 32):
        target1 = 2 * mpmath.mp.log(15)
        target2 = mpmath.mp.log(225) / 2
    tiny = mpmath.mpf(2) ** -40
    est1 = volume_estimate(e1, 1)
    yield abs(est1 - target1) < tiny, None, None
    est2 = volume_estimate(e1, 2)
    yield abs(est2 - target2) < tiny, None, None
    prev = None
    for m in (4, 16, 64, 256):
        est = volume_estimate(e1, m)
        err = abs(float(est) - 1)
        ok = err <= 4 / m
        if prev is not None:
            ok = ok and float(est) < prev
        prev = float(est)
        yield bool(ok), 4 / m - err, None if ok else {"m": m}


@_suite
def _suite_okounkov_match(rng, count):
    del rng, count  # fixed-instance suite
    from .sections import analytic_okounkov

    m = 64
    for pair in (Pair(slant_divisor()), Pair(tent_divisor()), half_zero_pair()):
        data = analytic_okounkov(pair)
        ok = bool(data.avol == avol(pair))
        sample = okounkov_sample(pair, m)
        worst = 0.0
        for w, t in sample.entries:
            if t is None:
                ok = False
                continue
            gap = abs(float(t) - scalar_float(data.transform.eval(w)))
            worst = max(worst, gap)
        ok = ok and worst <= 0.05
        yield ok, 0.05 - worst, None if ok else {"pair": _pair_payload(pair)}


@_suite
def _suite_diskant_random(rng, count):
    for _ in range(count):
        p1 = sample_big_pair(rng, allow_finite=False)
        p2 = sample_big_pair(rng, allow_finite=False)
        rep = diskant_report(p1, p2)
        ok = rep.all_pass
        slacks = [float(c.slack) for c in rep.cases]
        yield ok, min(slacks), None if ok else {
            "pair1": _pair_payload(p1), "pair2": _pair_payload(p2),
            "cases": [(c.name, float(c.slack)) for c in rep.cases]}


@_suite
def _suite_bonnesen_random(rng, count):
    for i in range(count):
        p1 = sample_big_pair(rng, allow_finite=False)
        if i % 2 == 0:
            a = Fraction(rng.randint(1, 6), rng.randint(1, 3))
            p2 = p1.scale(a)
        else:
            p2 = sample_big_pair(rng, allow_finite=False)
        rep = diskant_report(p1, p2)
        bon = rep.case("bonnesen")
        nonneg = rep.case("mixed_discriminant_nonneg")
        ok = bon.passed and nonneg.passed
        yield ok, float(bon.slack), None if ok else {
            "pair1": _pair_payload(p1), "pair2": _pair_payload(p2)}


@_suite
def _suite_superadditivity(rng, count):
    for i in range(count):
        p1 = sample_big_pair(rng)
        p2 = sample_big_pair(rng)
        n = sample_nef_divisor(rng)
        e12 = positive_intersection(p1 + p2, n)
        e1 = positive_intersection(p1, n)
        e2 = positive_intersection(p2, n)
        slack = e12 - e1 - e2
        ok = scalar_sign(slack) >= 0
        if i % 4 == 0:
            # the sampled-minorant estimator must stay below the exact value
            try:
                lower = positive_intersection_lower(p1, n)
                ok = ok and scalar_sign(e1 - lower) >= 0
            except NotBig:
                pass
        yield ok, scalar_float(slack), None if ok else {
            "pair1": _pair_payload(p1), "pair2": _pair_payload(p2),
            "N": n.to_payload()}
