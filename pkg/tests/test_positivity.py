"""Positivity layer: nef/ample tests, exact volumes, Zariski positive parts,
intersection numbers, positive intersections, and threshold brackets.

Hand-checked fixtures: the slant divisor has roof 1 - x on [0, 1] (volume 1),
the tent divisor has roof 1 - |x| on [-1, 1] (volume 2), their sum has
volume 7, and the base-conditioned slant (order 1/2 at Zero) has volume 1/4.
"""

from fractions import Fraction

import pytest

from adelic_volumes.divisors import ARCH, Pair, ToricAdelicDivisor
from adelic_volumes.errors import NotBig, NotNef, NotRelativelyNef
from adelic_volumes.exactnum import log_unit
from adelic_volumes.gallery import (
    half_zero_pair,
    height_shift,
    p_slant_divisor,
    slant_divisor,
    tent_divisor,
)
from adelic_volumes.pa import ConvexPA, PAGeneral
from adelic_volumes.points import BaseCondition
from adelic_volumes.positivity import (
    Bracket,
    adeg_product,
    ample_reference,
    avol,
    circumradius,
    inradius,
    is_ample,
    is_big,
    is_nef,
    is_pseff,
    is_relatively_nef,
    is_w_ample,
    nef_certificate,
    nef_decomposition,
    positive_intersection,
    positive_intersection_lower,
    pseff_threshold,
    zariski_positive_part,
)

F = Fraction


def lowered_slant() -> ToricAdelicDivisor:
    """Slant coefficients with the potential plateau lowered to 1/2, so the
    roof 1/2 - x dips below zero on half the polytope."""
    return ToricAdelicDivisor(1, 0, {ARCH: ConvexPA([(F(1), F(1, 2))], 0, 1)})


def kinked_slant() -> ToricAdelicDivisor:
    """Slant coefficients with a non-convex (kinked) potential."""
    pot = PAGeneral([(F(0), F(0)), (F(1), F(-1))], 0, 1)
    return ToricAdelicDivisor(1, 0, {ARCH: pot})


class TestNefAmple:
    def test_gallery(self):
        assert is_nef(slant_divisor())
        assert is_nef(tent_divisor())
        assert is_nef(height_shift(1))
        assert not is_nef(height_shift(-1))
        assert is_nef(ToricAdelicDivisor(1, 0))  # canonical slant, roof 0

    def test_certificate_records_minimum(self):
        assert nef_certificate(slant_divisor()).min_roof_value == 0
        assert nef_certificate(ample_reference()).min_roof_value == 1

    def test_certificate_rejections(self):
        with pytest.raises(NotNef):
            nef_certificate(height_shift(-1))
        with pytest.raises(NotRelativelyNef):
            nef_certificate(kinked_slant())

    def test_relatively_nef(self):
        assert is_relatively_nef(slant_divisor())
        assert not is_relatively_nef(kinked_slant())
        assert not is_relatively_nef(ToricAdelicDivisor(-1, 0))

    def test_ample(self):
        assert is_ample(ample_reference())
        assert not is_ample(slant_divisor())  # roof touches zero
        assert not is_ample(height_shift(1))  # degree zero

    def test_w_ample(self):
        assert is_w_ample(ample_reference())
        assert not is_w_ample(slant_divisor())
        with pytest.raises(NotRelativelyNef):
            is_w_ample(kinked_slant())


class TestVolume:
    def test_exact_values(self):
        assert avol(slant_divisor()) == 1
        assert avol(tent_divisor()) == 2
        assert avol(slant_divisor() + tent_divisor()) == 7
        assert avol(half_zero_pair()) == F(1, 4)
        assert avol(ample_reference()) == 4

    def test_degenerate_window(self):
        assert avol(height_shift(1)) == 0
        assert avol(Pair(slant_divisor(), BaseCondition({"0": F(2)}))) == 0

    def test_symbolic_value(self):
        assert avol(p_slant_divisor(2)) == log_unit(2)
        assert avol(p_slant_divisor(3)) == log_unit(3)

    def test_big_and_pseff(self):
        assert is_big(slant_divisor())
        assert not is_big(height_shift(1))
        assert is_pseff(height_shift(1))  # flat roof at 1 over a point
        assert not is_pseff(height_shift(-1))
        assert is_pseff(lowered_slant())  # big, in fact
        assert is_big(lowered_slant())


class TestZariski:
    def test_nef_input_is_its_own_positive_part(self):
        z = zariski_positive_part(tent_divisor())
        assert z.positive == tent_divisor()
        assert (z.region.lo, z.region.hi) == (-1, 1)

    def test_base_condition_slant(self):
        z = zariski_positive_part(half_zero_pair())
        assert (z.region.lo, z.region.hi) == (F(1, 2), 1)
        assert z.positive == ToricAdelicDivisor(
            1, F(-1, 2), {ARCH: ConvexPA([(F(1), F(1))], F(1, 2), 1)}
        )
        assert avol(Pair(z.positive)) == F(1, 4) == avol(half_zero_pair())
        assert is_nef(z.positive)

    def test_lowered_slant(self):
        z = zariski_positive_part(lowered_slant())
        assert (z.region.lo, z.region.hi) == (0, F(1, 2))
        assert z.positive == ToricAdelicDivisor(
            F(1, 2), 0, {ARCH: ConvexPA([(F(1), F(1, 2))], 0, F(1, 2))}
        )
        assert avol(Pair(z.positive)) == avol(lowered_slant()) == F(1, 4)

    def test_difference_is_effective(self):
        for pair in (half_zero_pair(), Pair(lowered_slant())):
            z = zariski_positive_part(pair)
            assert (pair.divisor - z.positive).is_effective

    def test_requires_big(self):
        with pytest.raises(NotBig):
            zariski_positive_part(height_shift(1))


class TestIntersection:
    def test_frozen_products(self):
        E1, E2, O = slant_divisor(), tent_divisor(), height_shift(1)
        H = ample_reference()
        assert adeg_product(E1, O) == 1
        assert adeg_product(H, H) == 4
        assert adeg_product(E1, E1) == 1 == avol(E1)
        assert adeg_product(E1, E2) == 2
        assert adeg_product(E2, E2) == 2 == avol(E2)
        assert adeg_product(O, O) == 0

    def test_symmetry_and_bilinearity(self):
        E1, E2, O = slant_divisor(), tent_divisor(), height_shift(1)
        assert adeg_product(E1, E2) == adeg_product(E2, E1)
        assert adeg_product(E1 + E2, O) == adeg_product(E1, O) + adeg_product(E2, O)
        assert adeg_product(E1.scale(2), E2) == 2 * adeg_product(E1, E2)

    def test_non_nef_goes_through_decomposition(self):
        E1, O = slant_divisor(), height_shift(1)
        assert not is_nef(E1 - O)
        assert adeg_product(E1 - O, O) == 1  # = adeg(E1, O) - adeg(O, O)
        assert adeg_product(kinked_slant(), ample_reference()) == 1

    def test_nef_decomposition(self):
        for d in (slant_divisor() - height_shift(1), kinked_slant()):
            plus, minus = nef_decomposition(d)
            assert is_nef(plus) and is_nef(minus)
            assert plus == d + minus


class TestPositiveIntersection:
    def test_exact_values(self):
        O = height_shift(1)
        assert positive_intersection(slant_divisor(), O) == 1
        assert positive_intersection(half_zero_pair(), O) == F(1, 2)
        assert positive_intersection(Pair(lowered_slant()), O) == F(1, 2)

    def test_lower_estimate_sits_below(self):
        O = height_shift(1)
        low = positive_intersection_lower(half_zero_pair(), O)
        assert low <= F(1, 2)
        assert low >= F(1, 4)  # coarse but not vacuous

    def test_lower_estimate_requires_margin(self):
        # too small to survive even the finest ample offset
        tiny = slant_divisor().scale(F(1, 128))
        with pytest.raises(NotBig):
            positive_intersection_lower(Pair(tiny), height_shift(1))


class TestBracket:
    def test_exact(self):
        b = Bracket(F(1, 2), F(1, 2))
        assert b.exact and b.width == 0 and b.value == F(1, 2)
        assert float(b) == 0.5
        assert repr(b) == "Bracket(1/2)"

    def test_interval(self):
        b = Bracket(F(1, 4), F(1, 2))
        assert not b.exact
        assert b.width == F(1, 4)
        assert b.value == F(3, 8)
        assert "1/4" in repr(b) and "1/2" in repr(b)

    def test_reciprocal(self):
        b = Bracket(F(1, 4), F(1, 2))
        r = b.reciprocal()
        assert (r.lo, r.hi) == (2, 4)
        with pytest.raises(ValueError):
            Bracket(F(0), F(1)).reciprocal()


class TestThresholds:
    def test_inradius_circumradius_frozen(self):
        E1, E2 = Pair(slant_divisor()), Pair(tent_divisor())
        r = inradius(E1, E2)
        assert r.exact and r.value == F(1, 2)
        r = inradius(E2, E1)
        assert r.exact and r.value == 1
        R = circumradius(E1, E2)
        assert R.exact and R.value == 1

    def test_threshold_direct(self):
        t = pseff_threshold(Pair(slant_divisor()), tent_divisor())
        assert t.exact and t.value == F(1, 2)

    def test_proportional(self):
        E1 = Pair(slant_divisor())
        assert inradius(E1, E1.scale(2)).value == F(1, 2)
        assert circumradius(E1, E1.scale(2)).value == F(1, 2)

    def test_guards(self):
        E1 = Pair(slant_divisor())
        with pytest.raises(NotBig):
            pseff_threshold(Pair(height_shift(1)), tent_divisor())
        with pytest.raises(NotNef):
            pseff_threshold(E1, slant_divisor() - height_shift(1))
        with pytest.raises(NotNef):
            # nef but volume zero: scaling it changes nothing, so no finite sup
            pseff_threshold(E1, height_shift(1))
