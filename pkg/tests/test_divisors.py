"""Toric adelic divisors, pairs with base conditions, and their roofs.

Frozen values come from the slant / tent / p-slant gallery shapes, whose
roofs are computable by hand: slant has roof 1 - x on [0, 1], tent has
1 - |x| on [-1, 1], and the p-slant carries the slant shape in log p units.
"""

from fractions import Fraction

import pytest

from adelic_volumes.divisors import (
    ARCH,
    Pair,
    ToricAdelicDivisor,
    as_pair,
    as_place,
    canonical_potential,
    min_adelic,
)
from adelic_volumes.errors import (
    EmptyPolytope,
    NonToricBaseCondition,
    NotEffectiveInput,
    UnboundedPerturbation,
)
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

F = Fraction


class TestPlaces:
    def test_as_place(self):
        assert as_place("inf") == ARCH
        assert as_place("oo") == ARCH
        assert as_place("infinity") == ARCH
        assert as_place("2") == 2
        assert as_place(13) == 13

    def test_as_place_rejects(self):
        with pytest.raises(ValueError):
            as_place(4)
        with pytest.raises(ValueError):
            as_place("x")


class TestConstruction:
    def test_canonical_potential_shape(self):
        pot = canonical_potential(F(1), F(0))
        assert isinstance(pot, ConvexPA)
        assert pot.left_slope == 0 and pot.right_slope == 1

    def test_canonical_potential_negative_degree(self):
        # c0 + cinf < 0 means the slopes are out of convex order
        pot = canonical_potential(F(-1), F(0))
        assert isinstance(pot, PAGeneral)

    def test_slope_invariant_enforced(self):
        wrong = ConvexPA([(F(0), F(0))], 0, 2)  # right slope 2, divisor wants 1
        with pytest.raises(ValueError):
            ToricAdelicDivisor(1, 0, {ARCH: wrong})

    def test_explicit_canonical_potential_is_dropped(self):
        d = ToricAdelicDivisor(1, 0, {ARCH: canonical_potential(F(1), F(0))})
        assert d.places == ()
        assert d.is_canonical_at(ARCH)
        assert d == ToricAdelicDivisor(1, 0)

    def test_convex_general_upgraded(self):
        pot = PAGeneral([(F(1), F(1))], 0, 1)  # convex data in general clothes
        d = ToricAdelicDivisor(1, 0, {ARCH: pot})
        assert isinstance(d.potential(ARCH), ConvexPA)
        assert d == slant_divisor()

    def test_duplicate_place_rejected(self):
        pot = ConvexPA([(F(1), F(1))], 0, 1)
        with pytest.raises(ValueError):
            ToricAdelicDivisor(1, 0, {"2": pot, 2: pot})

    def test_degree_and_ord(self):
        d = tent_divisor()
        assert d.degree == 2
        assert d.ord("0") == 1
        assert d.ord("inf") == 1
        assert d.ord("t^2+1") == 0


class TestAlgebra:
    def test_add_degrees_and_polytope(self):
        s = slant_divisor() + tent_divisor()
        assert s.degree == 3
        assert (s.c0, s.cinf) == (2, 1)
        assert (s.polytope().lo, s.polytope().hi) == (-1, 2)

    def test_scale(self):
        d = slant_divisor().scale(F(3, 2))
        assert (d.c0, d.cinf) == (F(3, 2), 0)
        # the potential scales in value only: pot_a(u) = a * pot(u)
        assert d.potential(ARCH) == ConvexPA([(F(1), F(3, 2))], 0, F(3, 2))

    def test_scale_zero_is_zero_divisor(self):
        assert slant_divisor().scale(0) == ToricAdelicDivisor.zero()

    def test_mul_and_neg_sugar(self):
        d = slant_divisor()
        assert 2 * d == d.scale(2) == d * 2
        assert (-d).c0 == -1

    def test_difference_has_flat_potential(self):
        # D - D is numerically trivial; the leftover stored potential is the
        # constant zero function (its breakpoint abscissa is representation
        # detail, so equality with the canonical zero divisor is not asserted)
        d = slant_divisor() - slant_divisor()
        assert d.degree == 0
        assert d.potential(ARCH).sup_norm() == 0

    def test_polytope_empty_for_negative(self):
        assert ToricAdelicDivisor(-1, 0).polytope().is_empty


class TestEffectivity:
    def test_gallery_shapes(self):
        assert slant_divisor().is_effective
        assert slant_divisor().is_strictly_effective  # potential min is 1
        assert height_shift(1).is_strictly_effective
        assert not height_shift(-1).is_effective
        assert not ToricAdelicDivisor(-1, 2).is_effective

    def test_canonical_boundary_case(self):
        # canonical potential of (1, 0) touches zero, so effective but not
        # strictly so
        d = ToricAdelicDivisor(1, 0)
        assert d.is_effective
        assert not d.is_strictly_effective

    def test_pair_effectivity_uses_raw_orders(self):
        d = slant_divisor()
        assert Pair(d, BaseCondition({"0": F(1, 2)})).is_effective
        assert not Pair(d, BaseCondition({"0": F(2)})).is_effective
        # a negative prescribed order is a lower bound the divisor clears
        assert Pair(d, BaseCondition({"inf": F(-1)})).is_effective

    def test_nu_effective(self):
        p = Pair(slant_divisor(), BaseCondition({"0": F(1)}))
        assert p.is_nu_effective("0")
        assert not half_zero_pair().is_nu_effective("0")  # 1 > 1/2


class TestMinAdelic:
    def test_min_with_canonical(self):
        # min(max(1, u), max(0, u)) = max(0, u): the slant's potential
        # dominates the canonical one everywhere
        got = min_adelic([slant_divisor(), ToricAdelicDivisor(1, 0)])
        assert got == ToricAdelicDivisor(1, 0)

    def test_min_idempotent(self):
        d = slant_divisor()
        assert min_adelic([d, d]) == d

    def test_min_requires_effective(self):
        with pytest.raises(NotEffectiveInput):
            min_adelic([])
        with pytest.raises(NotEffectiveInput):
            min_adelic([slant_divisor(), -slant_divisor()])


class TestPairWindows:
    def test_shifted_polytope_plain(self):
        assert (Pair(tent_divisor()).shifted_polytope().lo,
                Pair(tent_divisor()).shifted_polytope().hi) == (-1, 1)

    def test_shifted_polytope_with_base(self):
        w = half_zero_pair().shifted_polytope()
        assert (w.lo, w.hi) == (F(1, 2), 1)

    def test_negative_orders_clamped_in_window(self):
        p = Pair(slant_divisor(), BaseCondition({"0": F(-3)}))
        assert (p.shifted_polytope().lo, p.shifted_polytope().hi) == (0, 1)

    def test_overconstrained_window_is_empty(self):
        p = Pair(slant_divisor(), BaseCondition({"0": F(2)}))
        assert p.shifted_polytope().is_empty
        with pytest.raises(EmptyPolytope):
            p.global_roof()

    def test_nontoric_base_rejected(self):
        p = Pair(slant_divisor(), BaseCondition({"t^2+1": F(1)}))
        with pytest.raises(NonToricBaseCondition):
            p.shifted_polytope()


class TestGlobalRoof:
    def test_slant_roof(self):
        r = Pair(slant_divisor()).global_roof()
        assert (r.domain.lo, r.domain.hi) == (0, 1)
        assert r.eval(0) == 1
        assert r.eval(F(1, 2)) == F(1, 2)
        assert r.eval(1) == 0

    def test_tent_roof(self):
        r = Pair(tent_divisor()).global_roof()
        assert (r.domain.lo, r.domain.hi) == (-1, 1)
        assert r.eval(-1) == 0 and r.eval(0) == 1 and r.eval(1) == 0

    def test_base_condition_restricts_roof(self):
        r = half_zero_pair().global_roof()
        assert (r.domain.lo, r.domain.hi) == (F(1, 2), 1)
        assert r.eval(F(1, 2)) == F(1, 2)

    def test_finite_place_carries_log_factor(self):
        r = Pair(p_slant_divisor(2)).global_roof()
        assert r.eval(0) == log_unit(2)
        assert r.eval(1) == 0
        assert r.eval(F(1, 2)) == log_unit(2) / 2

    def test_roofs_add_over_places(self):
        d = slant_divisor() + p_slant_divisor(3)
        r = Pair(d).global_roof()
        assert r.eval(0) == 1 + log_unit(3)


class TestPerturb:
    def test_constant_perturbation_halved(self):
        # Green-function shift 2r moves the potential (and roof) by r
        p = Pair(slant_divisor()).perturb(ARCH, PAGeneral.constant(2))
        assert p.divisor.potential(ARCH) == ConvexPA([(F(1), F(2))], 0, 1)

    def test_finite_place_perturbation(self):
        p = Pair(p_slant_divisor(2)).perturb(2, PAGeneral.constant(1))
        assert p.divisor.potential(2) == ConvexPA([(F(1), F(3, 2))], 0, 1)

    def test_unbounded_perturbation_rejected(self):
        with pytest.raises(UnboundedPerturbation):
            Pair(slant_divisor()).perturb(ARCH, PAGeneral([(F(0), F(0))], -1, 1))


class TestScaleAndBase:
    def test_pair_scale_scales_base(self):
        p = half_zero_pair().scale(2)
        assert p.divisor.c0 == 2
        assert p.base.order("0") == 1

    def test_pair_algebra(self):
        p = Pair(slant_divisor()) + half_zero_pair()
        assert p.divisor.c0 == 2
        assert p.base.order("0") == F(1, 2)
        q = p - half_zero_pair()
        assert q.base.order("0") == 0


class TestPayloads:
    @pytest.mark.parametrize("pair", [
        Pair(slant_divisor()),
        Pair(tent_divisor()),
        Pair(p_slant_divisor(2)),
        half_zero_pair(),
        Pair(slant_divisor() + p_slant_divisor(5),
             BaseCondition({"0": F(1, 4), "inf": F(1, 8)})),
    ])
    def test_round_trip(self, pair):
        assert Pair.from_payload(pair.to_payload()) == pair

    def test_payload_shape(self):
        payload = half_zero_pair().to_payload()
        assert payload["c0"] == "1"
        assert payload["base"] == {"0": "1/2"}

    def test_as_pair(self):
        d = slant_divisor()
        assert as_pair(d) == Pair(d)
        assert as_pair(Pair(d)) == Pair(d)
        with pytest.raises(TypeError):
            as_pair("slant")
