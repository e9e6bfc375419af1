"""Exact scalars in the field Q(log 2, log 3, ...).

Quantities produced by toric arithmetic on the projective line are rational
linear combinations of 1 and logarithms of primes, together with the products
and quotients that convex geometry makes from them (cut points of roofs, areas
of clipped triangles).  All of it lives in the fraction field of the polynomial
ring Q[log 2, log 3, ...], which this module implements directly:

* a monomial is a sorted tuple of primes with multiplicity, ``()`` meaning 1;
* a polynomial is a dict monomial -> Fraction;
* a number is a quotient num/den of two polynomials, with the denominator
  folded into the numerator whenever it is purely rational.

Equality is decided exactly, by cross-multiplied coefficient comparison.  The
sign of a coefficient-wise nonzero value is decided by evaluating with mpmath
interval arithmetic and doubling the working precision until the enclosure
separates from zero.  A real zero invisible to the coefficients would be a
rational dependence between products of prime logarithms; the widening loop is
capped and raises :class:`~adelic_volumes.errors.PrecisionExhausted` rather
than loop forever on such a miracle.

Plain ``fractions.Fraction`` values interoperate transparently: arithmetic
promotes them, and the ``scalar_*`` helpers at the bottom give call sites one
vocabulary for "Fraction or ExactNumber".
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Union

from mpmath import iv

from .errors import PrecisionExhausted

Mono = tuple  # tuple[int, ...], sorted primes with multiplicity
Poly = dict  # dict[Mono, Fraction]

_ONE_POLY = {(): Fraction(1)}

_PRECISION_ENV = "ADELIC_PRECISION_BITS"
_PRECISION_FLOOR = 64
_PRECISION_CAP = 1 << 13


def default_precision_bits() -> int:
    """Working precision for interval evaluation, at least 64 bits.

    The ``ADELIC_PRECISION_BITS`` environment variable raises (never lowers)
    the starting precision.
    """
    raw = os.environ.get(_PRECISION_ENV, "")
    try:
        requested = int(raw)
    except ValueError:
        requested = 0
    return max(_PRECISION_FLOOR, requested)


@contextmanager
def _iv_precision(bits: int) -> Iterator[None]:
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


_LOG_CACHE: dict = {}  # (prime, bits) -> interval enclosure of log(prime)


def _log_interval(prime: int, bits: int):
    key = (prime, bits)
    if key not in _LOG_CACHE:
        with _iv_precision(bits):
            _LOG_CACHE[key] = iv.log(prime)
    return _LOG_CACHE[key]


def _fraction_interval(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


_LOG_BOUNDS: dict = {}  # prime -> (Fraction, Fraction) enclosure of log(prime)
_MONO_BOUNDS: dict = {(): (Fraction(1), Fraction(1))}


def _endpoint_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    q = Fraction(int(man)) * (Fraction(2) ** exp if exp >= 0 else Fraction(1, 2 ** -exp))
    return -q if sign else q


def _mono_bounds(mono: Mono) -> tuple:
    """A cached Fraction enclosure of the monomial's value.

    Comparisons between roof breakpoints land here constantly; rational
    bounds keep the common case inside Fraction arithmetic instead of
    round-tripping through mpmath intervals on every call."""
    b = _MONO_BOUNDS.get(mono)
    if b is None:
        lo = hi = Fraction(1)
        for p in mono:
            pb = _LOG_BOUNDS.get(p)
            if pb is None:
                box = _log_interval(p, 128)
                plo, phi = box._mpi_
                _LOG_BOUNDS[p] = pb = (
                    _endpoint_fraction(plo), _endpoint_fraction(phi))
            lo, hi = lo * pb[0], hi * pb[1]  # every log p is positive
        _MONO_BOUNDS[mono] = b = (lo, hi)
    return b


def _poly_interval(poly: Poly, bits: int):
    with _iv_precision(bits):
        acc = iv.mpf(0)
        for mono, coeff in poly.items():
            term = _fraction_interval(coeff)
            for p in mono:
                term = term * _log_interval(p, bits)
            acc = acc + term
        return acc


def _poly_sign(poly: Poly) -> int:
    if not poly:
        return 0
    if len(poly) == 1 and () in poly:
        c = poly[()]
        return (c > 0) - (c < 0)
    # every monomial is a product of log p > 0, so uniform coefficient signs
    # settle the sign without interval arithmetic
    have_pos = have_neg = False
    for c in poly.values():
        if c > 0:
            have_pos = True
        else:
            have_neg = True
        if have_pos and have_neg:
            break
    if not have_neg:
        return 1
    if not have_pos:
        return -1
    lo = hi = Fraction(0)
    for mono, c in poly.items():
        mlo, mhi = _mono_bounds(mono)
        if c > 0:
            lo += c * mlo
            hi += c * mhi
        else:
            lo += c * mhi
            hi += c * mlo
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    bits = default_precision_bits()
    while bits <= _PRECISION_CAP:
        box = _poly_interval(poly, bits)
        if box.a > 0:
            return 1
        if box.b < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted(
        f"could not separate sign of {_poly_str(poly)} below {_PRECISION_CAP} bits"
    )


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for mono, coeff in b.items():
        c = out.get(mono, 0) + coeff
        if c:
            out[mono] = c
        else:
            out.pop(mono, None)
    return out


def _pneg(a: Poly) -> Poly:
    return {mono: -coeff for mono, coeff in a.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(sorted(ma + mb))
            c = out.get(mono, 0) + ca * cb
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
    return out


def _pscale(a: Poly, q: Fraction) -> Poly:
    if not q:
        return {}
    return {mono: coeff * q for mono, coeff in a.items()}


def _pcontent(a: Poly) -> Fraction:
    """gcd of the coefficients, as a positive rational; 1 for the empty poly."""
    num = 0
    den = 1
    for coeff in a.values():
        num = gcd(num, abs(coeff.numerator))
        den = den * coeff.denominator // gcd(den, coeff.denominator)
    if num == 0:
        return Fraction(1)
    return Fraction(num, den)


def _strip_common_monomial(num: Poly, den: Poly) -> tuple:
    """Divide out the largest monomial dividing every term of both polys."""
    if () in num or () in den:
        return num, den  # a constant term blocks any common monomial
    common: dict = None
    for poly in (num, den):
        for mono in poly:
            counts: dict = {}
            for p in mono:
                counts[p] = counts.get(p, 0) + 1
            if common is None:
                common = counts
            else:
                common = {p: min(e, counts.get(p, 0))
                          for p, e in common.items() if p in counts}
            if not common:
                return num, den

    def strip(poly):
        out = {}
        for mono, c in poly.items():
            counts = dict()
            for p in mono:
                counts[p] = counts.get(p, 0) + 1
            for p, e in common.items():
                counts[p] -= e
            out[tuple(sorted(p for p, e in counts.items() for _ in range(e)))] = c
        return out

    return strip(num), strip(den)


_SYMPY_SYMBOLS: dict = {}


def _pdegree(a: Poly) -> int:
    return max((len(m) for m in a), default=0)


def _divide_by_affine(num: Poly, lin: Poly):
    """Quotient of num by an affine polynomial, or None when it does not
    divide exactly.  Affine polynomials are irreducible, so this settles
    their gcd questions without sympy."""
    pivot = None
    for mono in lin:
        if len(mono) == 1:
            pivot = mono[0]
            break
    if pivot is None:
        return None
    b = lin[(pivot,)]
    rest = {m: c for m, c in lin.items() if m != (pivot,)}
    # view num as a polynomial in the pivot with Poly coefficients
    layers: dict = {}
    for mono, c in num.items():
        k = sum(1 for p in mono if p == pivot)
        stripped = tuple(p for p in mono if p != pivot)
        layers.setdefault(k, {})[stripped] = c
    degree = max(layers, default=0)
    quotient: Poly = {}
    for k in range(degree, 0, -1):
        top = layers.get(k, {})
        if not top:
            continue
        q_layer = {m: c / b for m, c in top.items()}
        for m, c in q_layer.items():
            mono = tuple(sorted(m + (pivot,) * (k - 1)))
            quotient[mono] = quotient.get(mono, 0) + c
        layers[k] = {}
        carry = _pmul(q_layer, rest)
        low = layers.setdefault(k - 1, {})
        for m, c in carry.items():
            c2 = low.get(m, 0) - c
            if c2:
                low[m] = c2
            else:
                low.pop(m, None)
    if any(layer for layer in layers.values()):
        return None
    return quotient


def _cancel(num: Poly, den: Poly) -> tuple:
    """Remove the polynomial gcd of num and den, the log monomials acting as
    independent variables.  Without this, iterated arithmetic on quotients
    (cut points of roofs are ratios of log combinations) compounds the
    denominators and the term count explodes."""
    num, den = _strip_common_monomial(num, den)
    num_vars = {p for mono in num for p in mono}
    den_vars = {p for mono in den for p in mono}
    if not (num_vars & den_vars):
        return num, den
    if _pdegree(den) == 1:
        q = _divide_by_affine(num, den)
        if q is None:
            return num, den
        return q, _ONE_POLY
    if _pdegree(num) == 1:
        q = _divide_by_affine(den, num)
        if q is None:
            return num, den
        return _ONE_POLY, q
    primes = sorted(num_vars | den_vars)
    import sympy

    for p in primes:
        if p not in _SYMPY_SYMBOLS:
            _SYMPY_SYMBOLS[p] = sympy.Symbol(f"log{p}", positive=True)
    gens = [_SYMPY_SYMBOLS[p] for p in primes]

    def to_expr(poly):
        terms = []
        for mono, c in poly.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for p in mono:
                term = term * _SYMPY_SYMBOLS[p]
            terms.append(term)
        return sympy.Add(*terms)

    g = sympy.gcd(sympy.Poly(to_expr(num), *gens, domain="QQ"),
                  sympy.Poly(to_expr(den), *gens, domain="QQ"))
    if g.is_one:
        return num, den

    def to_poly(spoly):
        out: Poly = {}
        for exps, coeff in spoly.terms():
            mono = tuple(sorted(
                p for p, e in zip(primes, exps) for _ in range(e)))
            out[mono] = Fraction(int(coeff.numerator), int(coeff.denominator))
        return out

    qn = sympy.Poly(to_expr(num), *gens, domain="QQ").quo(g)
    qd = sympy.Poly(to_expr(den), *gens, domain="QQ").quo(g)
    return to_poly(qn), to_poly(qd)


def _mono_str(mono: Mono) -> str:
    parts = []
    seen: dict = {}
    for p in mono:
        seen[p] = seen.get(p, 0) + 1
    for p in sorted(seen):
        e = seen[p]
        parts.append(f"log({p})" if e == 1 else f"log({p})^{e}")
    return "*".join(parts)


def _poly_str(poly: Poly) -> str:
    if not poly:
        return "0"
    terms = []
    for mono in sorted(poly, key=lambda m: (len(m), m)):
        coeff = poly[mono]
        if mono == ():
            terms.append(str(coeff))
        elif coeff == 1:
            terms.append(_mono_str(mono))
        elif coeff == -1:
            terms.append(f"-{_mono_str(mono)}")
        else:
            terms.append(f"{coeff}*{_mono_str(mono)}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


ScalarLike = Union[int, Fraction, "ExactNumber"]


class ExactNumber:
    """An element of Q(log 2, log 3, ...), stored as a polynomial quotient."""

    __slots__ = ("_num", "_den")

    def __init__(self, value: ScalarLike = 0):
        if isinstance(value, ExactNumber):
            self._num = value._num
            self._den = value._den
        elif isinstance(value, (int, Fraction)):
            q = Fraction(value)
            self._num = {(): q} if q else {}
            self._den = _ONE_POLY
        else:
            raise TypeError(f"cannot build ExactNumber from {type(value).__name__}")

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "ExactNumber":
        num = {m: c for m, c in num.items() if c}
        den = {m: c for m, c in den.items() if c}
        if not den:
            raise ZeroDivisionError("ExactNumber with zero denominator")
        obj = object.__new__(cls)
        if not num:
            obj._num = {}
            obj._den = _ONE_POLY
            return obj
        if len(den) == 1 and () in den:
            q = den[()]
            obj._num = num if q == 1 else {m: c / q for m, c in num.items()}
            obj._den = _ONE_POLY
            return obj
        num, den = _cancel(num, den)
        if len(den) == 1 and () in den:
            q = den[()]
            obj._num = num if q == 1 else {m: c / q for m, c in num.items()}
            obj._den = _ONE_POLY
            return obj
        if _poly_sign(den) < 0:
            num, den = _pneg(num), _pneg(den)
        content = _pcontent(den)
        if content != 1:
            num = _pscale(num, 1 / content)
            den = _pscale(den, 1 / content)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def log_unit(cls, prime: int) -> "ExactNumber":
        """The symbolic value log(prime)."""
        if prime < 2 or any(prime % d == 0 for d in range(2, int(prime**0.5) + 1)):
            raise ValueError(f"{prime} is not prime")
        return cls._make({(prime,): Fraction(1)}, _ONE_POLY)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._den == _ONE_POLY and set(self._num) <= {()}

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self._num.get((), Fraction(0))

    def sign(self) -> int:
        return _poly_sign(self._num)  # denominator is normalized positive

    def interval(self, bits: int | None = None):
        """A rigorous mpmath interval enclosure at the given precision."""
        bits = bits or default_precision_bits()
        num = _poly_interval(self._num, bits)
        if self._den == _ONE_POLY:
            return num
        with _iv_precision(bits):
            return num / _poly_interval(self._den, bits)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "ExactNumber | None":
        if isinstance(other, ExactNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactNumber(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._den
        if d is o._den or d == o._den:
            if d is _ONE_POLY or d == _ONE_POLY:
                # polynomial + polynomial stays normalized: skip _make
                obj = object.__new__(ExactNumber)
                obj._num = _padd(self._num, o._num)
                obj._den = _ONE_POLY
                return obj
            return self._make(_padd(self._num, o._num), d)
        return self._make(
            _padd(_pmul(self._num, o._den), _pmul(o._num, self._den)),
            _pmul(self._den, o._den),
        )

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(ExactNumber)
        obj._num = _pneg(self._num)
        obj._den = self._den
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._den
        if d is o._den or d == o._den:
            if d is _ONE_POLY or d == _ONE_POLY:
                obj = object.__new__(ExactNumber)
                obj._num = _padd(self._num, _pneg(o._num))
                obj._den = _ONE_POLY
                return obj
            return self._make(_padd(self._num, _pneg(o._num)), d)
        return self._make(
            _padd(_pmul(self._num, o._den), _pneg(_pmul(o._num, self._den))),
            _pmul(self._den, o._den),
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational:
            q = o._num.get(())
            if q is None:
                return ExactNumber(0)
            # scaling by a nonzero rational preserves every normalization
            # invariant, so construct directly
            obj = object.__new__(ExactNumber)
            obj._num = _pscale(self._num, q)
            obj._den = self._den
            return obj
        if self.is_rational:
            q = self._num.get(())
            if q is None:
                return ExactNumber(0)
            obj = object.__new__(ExactNumber)
            obj._num = _pscale(o._num, q)
            obj._den = o._den
            return obj
        return self._make(_pmul(self._num, o._num), _pmul(self._den, o._den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational:
            q = o._num.get(())
            if q is None:
                raise ZeroDivisionError("ExactNumber division by zero")
            obj = object.__new__(ExactNumber)
            obj._num = _pscale(self._num, 1 / q)
            obj._den = self._den
            return obj
        return self._make(_pmul(self._num, o._den), _pmul(self._den, o._num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / (self ** (-exponent))
        out = ExactNumber(1)
        for _ in range(exponent):
            out = out * self
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            diff = _padd(self._num, _pneg(o._num))
        else:
            diff = _padd(_pmul(self._num, o._den), _pneg(_pmul(o._num, self._den)))
        if not diff:
            return True
        return _poly_sign(diff) == 0  # separates (False) or raises

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def _cmp_sign(self, other) -> int:
        # denominators are normalized positive, so the sign survives
        # cross-multiplication; this skips quotient normalization entirely
        if self._den == other._den:
            return _poly_sign(_padd(self._num, _pneg(other._num)))
        return _poly_sign(_padd(
            _pmul(self._num, other._den), _pneg(_pmul(other._num, self._den))
        ))

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._cmp_sign(o) < 0

    def __le__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._cmp_sign(o) <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._cmp_sign(o) > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self._cmp_sign(o) >= 0

    __hash__ = None  # mutable-free but deliberately unhashable

    def __bool__(self):
        return bool(self._num)

    def __float__(self):
        box = self.interval(max(default_precision_bits(), 128))
        return (float(box.a) + float(box.b)) / 2

    def __repr__(self):
        num = _poly_str(self._num)
        if self._den == _ONE_POLY:
            return num
        return f"({num})/({_poly_str(self._den)})"


# -- helpers over "Fraction or ExactNumber" -------------------------------

Scalar = Union[Fraction, ExactNumber]


def exact(value: ScalarLike) -> ExactNumber:
    return ExactNumber(value)


def log_unit(prime: int) -> ExactNumber:
    return ExactNumber.log_unit(prime)


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, ExactNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def scalar_float(x) -> float:
    return float(x)


def scalar_is_rational(x: Scalar) -> bool:
    return not isinstance(x, ExactNumber) or x.is_rational


def scalar_fraction(x: Scalar) -> Fraction:
    """The value as a Fraction; raises ValueError for genuinely irrational input."""
    if isinstance(x, ExactNumber):
        return x.as_fraction()
    return Fraction(x)


def floor_fraction(q: Fraction) -> int:
    return q.numerator // q.denominator


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The simplest rational strictly between lo and hi (smallest denominator,
    then smallest numerator in absolute value).

    Classic continued-fraction walk; used by the threshold searches so that a
    rational threshold is probed, and therefore detected, exactly.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    # now 0 <= lo < hi
    fl = floor_fraction(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        # (fl, hi) with hi <= fl + 1: take fl + 1/n with n minimal
        n = floor_fraction(1 / (hi - fl)) + 1
        return fl + Fraction(1, n)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))
