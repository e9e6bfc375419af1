"""Closed points of the rational projective line, divisors and base conditions.

A closed point is the zero of the coordinate, the point at infinity, or the
vanishing locus of a monic irreducible polynomial in the coordinate (validated
by exact factorization over Q, with a configurable degree cap).  Divisors and
base conditions are finitely supported maps from closed points to rationals;
they differ only in role: a divisor records coefficients, a base condition
records prescribed vanishing orders for sections.

Rational functions enter in factored form (a map from monic irreducible
factors, including the coordinate itself, to rational exponents), which makes
the principal-divisor map exact and keeps the weighted-degree-zero invariant
on the nose.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

import sympy

from .errors import InvalidPoint

_T = sympy.symbols("t")

MAX_POINT_DEGREE = 8


def _coeffs_from_spec(spec, max_degree: int) -> tuple:
    """Monic ascending coefficient tuple from a polynomial description."""
    if isinstance(spec, str):
        try:
            expr = sympy.sympify(spec.replace("^", "**"), locals={"t": _T})
        except (sympy.SympifyError, SyntaxError) as err:
            raise InvalidPoint(f"cannot parse polynomial {spec!r}") from err
    elif isinstance(spec, (list, tuple)):
        expr = sum(sympy.Rational(c) * _T**i for i, c in enumerate(spec))
    else:
        expr = spec
    try:
        poly = sympy.Poly(expr, _T, domain="QQ")
    except sympy.PolynomialError as err:
        raise InvalidPoint(f"not a polynomial in t: {spec!r}") from err
    if poly.degree() < 1:
        raise InvalidPoint(f"constant polynomial {spec!r} defines no closed point")
    if poly.degree() > max_degree:
        raise InvalidPoint(
            f"degree {poly.degree()} exceeds the configured cap {max_degree}"
        )
    coeffs = [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]
    if coeffs[-1] != 1:
        raise InvalidPoint(f"{spec!r} is not monic")
    if not poly.is_irreducible:
        raise InvalidPoint(f"{spec!r} is reducible over Q")
    return tuple(coeffs)


def _poly_label(coeffs: tuple) -> str:
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append((str(abs(c)), c < 0))
        else:
            tpow = "t" if power == 1 else f"t^{power}"
            mag = tpow if abs(c) == 1 else f"{abs(c)}*{tpow}"
            terms.append((mag, c < 0))
    out = ""
    for i, (mag, negative) in enumerate(terms):
        if i == 0:
            out = ("-" if negative else "") + mag
        else:
            out += ("-" if negative else "+") + mag
    return out


class ClosedPoint:
    """A closed point: Zero, Infinity, or the locus of a monic irreducible."""

    __slots__ = ("kind", "coeffs")

    _ZERO = None
    _INFINITY = None

    def __init__(self, kind: str, coeffs: tuple | None = None):
        if kind not in ("zero", "infinity", "finite"):
            raise InvalidPoint(f"unknown point kind {kind!r}")
        if kind == "finite" and not coeffs:
            raise InvalidPoint("finite points need polynomial coefficients")
        self.kind = kind
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "ClosedPoint":
        if cls._ZERO is None:
            cls._ZERO = cls("zero")
        return cls._ZERO

    @classmethod
    def infinity(cls) -> "ClosedPoint":
        if cls._INFINITY is None:
            cls._INFINITY = cls("infinity")
        return cls._INFINITY

    @classmethod
    def finite(cls, spec, max_degree: int | None = None) -> "ClosedPoint":
        coeffs = _coeffs_from_spec(spec, max_degree or MAX_POINT_DEGREE)
        if coeffs == (Fraction(0), Fraction(1)):
            raise InvalidPoint("the factor t is the point Zero; use ClosedPoint.zero()")
        return cls("finite", coeffs)

    @classmethod
    def parse(cls, label: str) -> "ClosedPoint":
        label = label.strip()
        if label == "0":
            return cls.zero()
        if label in ("inf", "infinity", "oo"):
            return cls.infinity()
        return cls.finite(label)

    @property
    def degree(self) -> int:
        """Residue degree over Q (1 for the two rational toric points)."""
        if self.kind == "finite":
            return len(self.coeffs) - 1
        return 1

    @property
    def is_toric(self) -> bool:
        return self.kind in ("zero", "infinity")

    def label(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "infinity":
            return "inf"
        return _poly_label(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ClosedPoint):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    def __repr__(self):
        return f"ClosedPoint({self.label()!r})"


def _point_of(key) -> ClosedPoint:
    if isinstance(key, ClosedPoint):
        return key
    if isinstance(key, str):
        return ClosedPoint.parse(key)
    raise InvalidPoint(f"cannot interpret {key!r} as a closed point")


def _normalize(entries: Mapping) -> dict:
    out: dict = {}
    for key, value in entries.items():
        point = _point_of(key)
        q = Fraction(value)
        if q:
            out[point] = out.get(point, Fraction(0)) + q
            if not out[point]:
                del out[point]
    return out


class _PointWeights:
    """Shared machinery for finitely supported point -> rational maps."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping | None = None):
        self.entries = _normalize(entries or {})

    def weight(self, point) -> Fraction:
        return self.entries.get(_point_of(point), Fraction(0))

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.entries, key=lambda p: p.label()))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def _combine(self, other, sign: int):
        out = dict(self.entries)
        for point, value in other.entries.items():
            c = out.get(point, Fraction(0)) + sign * value
            if c:
                out[point] = c
            else:
                out.pop(point, None)
        return type(self)(out)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._combine(other, -1)

    def scale(self, a) -> "_PointWeights":
        a = Fraction(a)
        return type(self)({p: a * v for p, v in self.entries.items()})

    def __neg__(self):
        return self.scale(-1)

    def positive_part(self):
        return type(self)({p: v for p, v in self.entries.items() if v > 0})

    def negative_part(self):
        """The (positive) entries of the negative part, so self = pos - neg."""
        return type(self)({p: -v for p, v in self.entries.items() if v < 0})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        if not self.entries:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{v}[{p.label()}]" for p, v in sorted(
            self.entries.items(), key=lambda kv: kv[0].label()))
        return f"{type(self).__name__}({body})"


class RDivisor(_PointWeights):
    """A finitely supported R-divisor on the projective line."""

    def ord(self, point) -> Fraction:
        return self.weight(point)

    @property
    def degree(self) -> Fraction:
        return sum((v * p.degree for p, v in self.entries.items()), Fraction(0))

    @property
    def is_effective(self) -> bool:
        return all(v > 0 for v in self.entries.values())


class BaseCondition(_PointWeights):
    """Prescribed vanishing orders for sections; may be ineffective."""

    def order(self, point) -> Fraction:
        return self.weight(point)

    @property
    def is_toric(self) -> bool:
        return all(p.is_toric for p in self.entries)

    def nontoric_positive_support(self) -> tuple:
        return tuple(
            p for p in self.support if not p.is_toric and self.entries[p] > 0
        )


class FactoredFunction:
    """A rational function presented by its monic irreducible factorization.

    Keys are closed points standing for their monic irreducible polynomials
    (Zero stands for the coordinate t itself); values are rational exponents.
    The point at infinity is not a factor.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Mapping):
        entries = _normalize(exponents)
        for point in entries:
            if point.kind == "infinity":
                raise InvalidPoint("1/t is not a monic polynomial factor; "
                                   "infinity cannot index a factor")
        self.exponents = entries

    def principal_divisor(self) -> RDivisor:
        """div(f) = sum of e_q [q]  minus  (sum of e_q deg q) [infinity]."""
        entries: dict = dict(self.exponents)
        weighted = sum(
            (e * p.degree for p, e in self.exponents.items()), Fraction(0)
        )
        if weighted:
            inf = ClosedPoint.infinity()
            entries[inf] = entries.get(inf, Fraction(0)) - weighted
        return RDivisor(entries)

    def __repr__(self):
        body = " * ".join(
            f"({p.label() if p.kind != 'zero' else 't'})^{e}"
            for p, e in sorted(self.exponents.items(), key=lambda kv: kv[0].label())
        )
        return f"FactoredFunction({body or '1'})"


def principal_divisor(f: Union[FactoredFunction, Mapping]) -> RDivisor:
    if not isinstance(f, FactoredFunction):
        f = FactoredFunction(f)
    return f.principal_divisor()
