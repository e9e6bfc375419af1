"""Toric adelic divisors on the projective line over Q, and pairs with a
base condition.

A divisor here is the data (c0, cInf) of coefficients at the two torus-fixed
points together with one invariant potential per place: a real function of
u = -log|t|_v recording half the Green function.  Only finitely many places
carry a non-canonical potential; the canonical potential of (c0, cInf) is
c0*u for u >= 0 and -cInf*u for u <= 0.  Finite-place potentials are stored
in log p units, so all stored data is rational; the symbolic log p factor is
attached only when the places are combined into the global roof.

The global roof of a pair is the place-by-place Legendre transform of the
(convexified) potentials, summed over places and restricted to the polytope
cut down by the base condition.  It is the integrand of every volume-type
quantity downstream.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

import sympy

from .errors import (
    EmptyPolytope,
    NonToricBaseCondition,
    NotEffectiveInput,
    UnboundedPerturbation,
)
from .exactnum import ExactNumber, log_unit, scalar_sign
from .pa import (
    ConcavePA,
    ConvexPA,
    Interval,
    PAGeneral,
    convex_envelope,
    legendre_roof,
    pa_from_payload,
    pointwise_min,
)
from .points import BaseCondition, ClosedPoint

ARCH = "inf"

Place = Union[str, int]


def as_place(v) -> Place:
    """Normalize a place description: 'inf' or a prime integer."""
    if v in (ARCH, "oo", "infinity", "archimedean"):
        return ARCH
    if isinstance(v, str) and v.isdigit():
        v = int(v)
    if isinstance(v, int) and sympy.isprime(v):
        return v
    raise ValueError(f"{v!r} is not a place of Q (expected 'inf' or a prime)")


def place_label(v: Place) -> str:
    return ARCH if v == ARCH else str(v)


def _place_sort_key(v: Place):
    return (0, 0) if v == ARCH else (1, v)


def _coeff(x):
    """Divisor coefficients are rationals, except that operations such as the
    Zariski positive part may cut the polytope at a symbolic-log point; exact
    scalars are passed through unchanged."""
    if isinstance(x, ExactNumber):
        return x.as_fraction() if x.is_rational else x
    return Fraction(x)


def canonical_potential(c0, cinf):
    """The invariant potential carried by every unlisted place."""
    pts = [(Fraction(0), Fraction(0))]
    if c0 + cinf >= 0:
        return ConvexPA(pts, -cinf, c0)
    return PAGeneral(pts, -cinf, c0)


def _coerce_potential(place, pot, c0: Fraction, cinf: Fraction):
    if isinstance(pot, Mapping):
        pot = pa_from_payload(pot)
    if not isinstance(pot, (ConvexPA, PAGeneral)):
        raise TypeError(
            f"potential at {place_label(place)} must be piecewise affine on R"
        )
    if not (pot.left_slope == -cinf and pot.right_slope == c0):
        raise ValueError(
            f"potential at {place_label(place)} has asymptotic slopes "
            f"({pot.left_slope}, {pot.right_slope}); the divisor requires "
            f"({-cinf}, {c0})"
        )
    if isinstance(pot, PAGeneral) and pot.is_convex():
        pot = pot.as_convex()
    return pot


class ToricAdelicDivisor:
    """A toric adelic R-divisor: coefficients plus one potential per place."""

    __slots__ = ("c0", "cinf", "_potentials")

    def __init__(self, c0, cinf, potentials: Mapping | None = None):
        self.c0 = _coeff(c0)
        self.cinf = _coeff(cinf)
        stored = {}
        canonical = canonical_potential(self.c0, self.cinf)
        for key, pot in (potentials or {}).items():
            place = as_place(key)
            pot = _coerce_potential(place, pot, self.c0, self.cinf)
            if pot == canonical:
                continue
            if place in stored:
                raise ValueError(f"duplicate potential for {place_label(place)}")
            stored[place] = pot
        self._potentials = stored

    @classmethod
    def zero(cls) -> "ToricAdelicDivisor":
        return cls(0, 0)

    @property
    def degree(self):
        return self.c0 + self.cinf

    @property
    def places(self) -> tuple:
        """Places carrying a non-canonical potential, archimedean first."""
        return tuple(sorted(self._potentials, key=_place_sort_key))

    def potential(self, place):
        place = as_place(place)
        got = self._potentials.get(place)
        if got is None:
            return canonical_potential(self.c0, self.cinf)
        return got

    def is_canonical_at(self, place) -> bool:
        return as_place(place) not in self._potentials

    def ord(self, point):
        if not isinstance(point, ClosedPoint):
            point = ClosedPoint.parse(point)
        if point.kind == "zero":
            return self.c0
        if point.kind == "infinity":
            return self.cinf
        return Fraction(0)

    def polytope(self) -> Interval:
        if -self.cinf > self.c0:
            return Interval.EMPTY
        return Interval(-self.cinf, self.c0)

    def add(self, other: "ToricAdelicDivisor") -> "ToricAdelicDivisor":
        c0 = self.c0 + other.c0
        cinf = self.cinf + other.cinf
        pots = {}
        for place in set(self._potentials) | set(other._potentials):
            pots[place] = self.potential(place) + other.potential(place)
        return ToricAdelicDivisor(c0, cinf, pots)

    __add__ = add

    def scale(self, a) -> "ToricAdelicDivisor":
        a = _coeff(a)
        if scalar_sign(a) == 0:
            return ToricAdelicDivisor.zero()
        pots = {place: pot.scale(a) for place, pot in self._potentials.items()}
        return ToricAdelicDivisor(a * self.c0, a * self.cinf, pots)

    def __sub__(self, other: "ToricAdelicDivisor") -> "ToricAdelicDivisor":
        return self.add(other.scale(-1))

    def __mul__(self, a) -> "ToricAdelicDivisor":
        return self.scale(a)

    __rmul__ = __mul__

    def __neg__(self) -> "ToricAdelicDivisor":
        return self.scale(-1)

    @property
    def is_effective(self) -> bool:
        if self.c0 < 0 or self.cinf < 0:
            return False
        for pot in self._potentials.values():
            bound = pot.lower_bound()
            if bound is None or bound < 0:
                return False
        return True

    @property
    def is_strictly_effective(self) -> bool:
        if not self.is_effective:
            return False
        arch = self.potential(ARCH)
        bound = arch.lower_bound()
        return bound is not None and bound > 0

    def to_payload(self) -> dict:
        return {
            "c0": str(self.c0),
            "cinf": str(self.cinf),
            "potentials": {
                place_label(v): self._potentials[v].to_payload()
                for v in self.places
            },
        }

    @classmethod
    def from_payload(cls, payload: Mapping) -> "ToricAdelicDivisor":
        return cls(
            Fraction(payload["c0"]),
            Fraction(payload.get("cinf", 0)),
            payload.get("potentials") or {},
        )

    def __eq__(self, other):
        if not isinstance(other, ToricAdelicDivisor):
            return NotImplemented
        return (
            self.c0 == other.c0
            and self.cinf == other.cinf
            and self._potentials == other._potentials
        )

    __hash__ = None

    def __repr__(self):
        extra = ", ".join(place_label(v) for v in self.places)
        tail = f"; potentials at {extra}" if extra else ""
        return f"ToricAdelicDivisor(c0={self.c0}, cinf={self.cinf}{tail})"


def min_adelic(divisors: Sequence[ToricAdelicDivisor]) -> ToricAdelicDivisor:
    """Componentwise minimum of finitely many effective adelic divisors:
    coefficients take the min, potentials take the pointwise min place by
    place.  Mirrors the valuation identity ord(min D_i, p) = min ord(D_i, p).
    """
    if not divisors:
        raise NotEffectiveInput("minimum of an empty family")
    for d in divisors:
        if not d.is_effective:
            raise NotEffectiveInput(f"{d!r} is not effective")
    c0 = min(d.c0 for d in divisors)
    cinf = min(d.cinf for d in divisors)
    places = set()
    for d in divisors:
        places.update(d._potentials)
    pots = {}
    for place in places:
        pots[place] = pointwise_min([d.potential(place) for d in divisors])
    return ToricAdelicDivisor(c0, cinf, pots)


class Pair:
    """An adelic divisor together with a base condition on sections."""

    __slots__ = ("divisor", "base")

    def __init__(self, divisor: ToricAdelicDivisor, base: BaseCondition | None = None):
        if not isinstance(divisor, ToricAdelicDivisor):
            raise TypeError("Pair needs a ToricAdelicDivisor")
        self.divisor = divisor
        self.base = base if base is not None else BaseCondition()

    def polytope(self) -> Interval:
        return self.divisor.polytope()

    def _toric_orders(self) -> tuple:
        bad = self.base.nontoric_positive_support()
        if bad:
            labels = ", ".join(p.label() for p in bad)
            raise NonToricBaseCondition(
                f"base condition has positive orders at non-toric points: {labels}"
            )
        v0 = max(self.base.order(ClosedPoint.zero()), Fraction(0))
        vinf = max(self.base.order(ClosedPoint.infinity()), Fraction(0))
        return v0, vinf

    def shifted_polytope(self) -> Interval:
        """The polytope cut down by the base condition.

        A section sitting at x in the polytope vanishes to order
        x + cInf at Zero and c0 - x at Infinity, so prescribing orders
        (v0, vInf) trims the interval to [-cInf + v0, c0 - vInf].
        Negative prescribed orders are vacuous for genuine sections and
        are clamped to zero here; effectivity comparisons elsewhere use
        the raw values.
        """
        v0, vinf = self._toric_orders()
        lo = -self.divisor.cinf + v0
        hi = self.divisor.c0 - vinf
        if lo > hi:
            return Interval.EMPTY
        return Interval(lo, hi)

    def global_roof(self) -> ConcavePA:
        """Sum over places of the Legendre roofs of the convexified
        potentials, restricted to the shifted polytope.  Finite places
        contribute with a symbolic log p factor, so values are exact."""
        window = self.shifted_polytope()
        if window.is_empty:
            raise EmptyPolytope(
                f"{self!r} has an empty shifted polytope; no sections to count"
            )
        # restrict before summing: all potentials share the divisor's tail
        # slopes, so every unit roof covers the window, and smaller operands
        # keep the exact arithmetic cheap
        roof = legendre_roof(convex_envelope(self.divisor.potential(ARCH)))
        roof = roof.restrict(window)
        for place in self.divisor.places:
            if place == ARCH:
                continue
            unit_roof = legendre_roof(convex_envelope(self.divisor.potential(place)))
            roof = roof + unit_roof.restrict(window).scale(log_unit(place))
        return roof

    def add(self, other: "Pair") -> "Pair":
        return Pair(self.divisor + other.divisor, self.base + other.base)

    __add__ = add

    def scale(self, a) -> "Pair":
        if self.base.is_zero:
            return Pair(self.divisor.scale(a))
        a = Fraction(a)
        return Pair(self.divisor.scale(a), self.base.scale(a))

    def __sub__(self, other: "Pair") -> "Pair":
        return self.add(other.scale(-1))

    def __mul__(self, a) -> "Pair":
        return self.scale(a)

    __rmul__ = __mul__

    @property
    def is_effective(self) -> bool:
        if not self.divisor.is_effective:
            return False
        return all(
            self.divisor.ord(p) >= v for p, v in self.base.entries.items()
        )

    @property
    def is_strictly_effective(self) -> bool:
        return self.is_effective and self.divisor.is_strictly_effective

    def is_nu_effective(self, point) -> bool:
        """Effective, with the divisor order matching the prescribed order
        exactly at the given point."""
        if not isinstance(point, ClosedPoint):
            point = ClosedPoint.parse(point)
        return self.is_effective and self.divisor.ord(point) == self.base.order(point)

    def perturb(self, place, phi) -> "Pair":
        """Add half of a bounded perturbation to the potential at one place.

        The factor one half is the Green-to-potential dictionary: perturbing
        the Green function by a constant 2r moves the roof by r.  At a finite
        place the perturbation is given in log p units, like the potential.
        """
        place = as_place(place)
        if isinstance(phi, ConvexPA):
            phi = phi.as_general()
        if not isinstance(phi, PAGeneral):
            raise TypeError("perturbation must be piecewise affine on R")
        if not phi.is_bounded():
            raise UnboundedPerturbation(
                f"perturbation has asymptotic slopes "
                f"({phi.left_slope}, {phi.right_slope}); they must vanish"
            )
        new_pot = self.divisor.potential(place) + phi.scale(Fraction(1, 2))
        pots = {v: self.divisor._potentials[v] for v in self.divisor.places}
        pots[place] = new_pot
        divisor = ToricAdelicDivisor(self.divisor.c0, self.divisor.cinf, pots)
        return Pair(divisor, self.base)

    def to_payload(self) -> dict:
        payload = self.divisor.to_payload()
        if not self.base.is_zero:
            payload["base"] = {
                p.label(): str(v) for p, v in sorted(
                    self.base.entries.items(), key=lambda kv: kv[0].label())
            }
        return payload

    @classmethod
    def from_payload(cls, payload: Mapping) -> "Pair":
        divisor = ToricAdelicDivisor.from_payload(payload)
        base = BaseCondition(
            {key: Fraction(val) for key, val in (payload.get("base") or {}).items()}
        )
        return cls(divisor, base)

    def __eq__(self, other):
        if not isinstance(other, Pair):
            return NotImplemented
        return self.divisor == other.divisor and self.base == other.base

    __hash__ = None

    def __repr__(self):
        if self.base.is_zero:
            return f"Pair({self.divisor!r})"
        return f"Pair({self.divisor!r}; {self.base!r})"


def as_pair(obj) -> Pair:
    if isinstance(obj, Pair):
        return obj
    if isinstance(obj, ToricAdelicDivisor):
        return Pair(obj)
    raise TypeError(f"cannot interpret {type(obj).__name__} as a pair")
