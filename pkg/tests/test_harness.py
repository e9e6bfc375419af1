"""Verification harness: finite-difference derivative reports, the Diskant
inequality chain, the random samplers, and the named property suites.

The central fixture is the volume of slant + r * shift, which equals
1 + 2r for r >= 0 and (1 + r)^2 for r < 0: differentiable at 0 with
derivative 2, but with a curvature jump.  The central difference at step h
is 2 - h/2, so the reported relative deviation at the reference step 2^-10
is exactly (2^-11) / 3 = 1/6144.
"""

import random
from fractions import Fraction

import pytest

from adelic_volumes.divisors import Pair
from adelic_volumes.errors import NotBig, UnknownSuite
from adelic_volumes.gallery import half_zero_pair, height_shift, slant_divisor, tent_divisor
from adelic_volumes.harness import (
    DEFAULT_HS,
    REFERENCE_H,
    check_differentiability,
    diskant_report,
    run_suite,
    sample_big_pair,
    sample_derivative_instance,
    sample_divisor,
    sample_nef_divisor,
    suite_names,
)
from adelic_volumes.positivity import avol, is_big, is_nef

F = Fraction


class TestDerivativeReport:
    def test_slant_along_shift(self):
        rep = check_differentiability(Pair(slant_divisor()), height_shift(1))
        assert rep.analytic == 2
        assert rep.exact_right == 2 and rep.exact_left == 2
        assert rep.derivative == 2
        assert rep.deviation == F(1, 6144)
        # 1 + 2r on the right, (1 + r)^2 on the left: C^1 but not C^2
        assert rep.curvature_jump
        assert rep.quad_right == 0 and rep.quad_left == 1

    def test_table_rows(self):
        rep = check_differentiability(Pair(slant_divisor()), height_shift(1))
        assert len(rep.table) == len(DEFAULT_HS)
        row = rep.table[0]
        assert row.h == F(1, 16)
        assert row.forward == 2
        assert row.backward == 2 - row.h
        assert row.central == 2 - row.h / 2

    def test_base_condition_fixture(self):
        rep = check_differentiability(half_zero_pair(), height_shift(1))
        assert rep.derivative == 1 and rep.analytic == 1
        assert rep.deviation == F(1, 4096)
        assert rep.curvature_jump

    def test_smooth_direction(self):
        # along the pair itself the volume is (1 + r)^2 * avol: analytic on
        # both sides, central differences exact
        rep = check_differentiability(Pair(slant_divisor()), slant_divisor())
        assert rep.derivative == 2 and rep.analytic == 2
        assert rep.deviation == 0
        assert not rep.curvature_jump
        assert rep.quad_right == 1 == rep.quad_left

    def test_reference_step_fallback(self):
        rep = check_differentiability(Pair(slant_divisor()), height_shift(1),
                                      hs=[F(1, 8)])
        assert rep.deviation == F(1, 48)  # (h/2) / 3 at h = 1/8

    def test_rejections(self):
        with pytest.raises(NotBig):
            check_differentiability(Pair(height_shift(1)), slant_divisor())
        with pytest.raises(ValueError):
            check_differentiability(Pair(slant_divisor()), height_shift(1),
                                    hs=[F(1, 8), F(1, 4)])
        with pytest.raises(ValueError):
            check_differentiability(Pair(slant_divisor()), height_shift(1),
                                    hs=[F(0)])


class TestDiskantReport:
    def test_slant_vs_tent(self):
        rep = diskant_report(Pair(slant_divisor()), Pair(tent_divisor()))
        assert (rep.s0, rep.s1, rep.s2) == (2, 2, 1)
        assert rep.r.exact and rep.r.value == F(1, 2)
        assert rep.R.exact and rep.R.value == 1
        assert rep.all_pass
        assert all(c.slack >= 0 or float(c.slack) >= -1e-9 for c in rep.cases)
        assert rep.case("bonnesen").slack == F(7, 4)
        # generic pair: no equality diagnostics
        names = [c.name for c in rep.cases]
        assert "equality_mixed_product" not in names
        with pytest.raises(KeyError):
            rep.case("nonesuch")

    def test_proportional_pair(self):
        E1 = Pair(slant_divisor())
        rep = diskant_report(E1, E1.scale(2))
        assert (rep.s0, rep.s1, rep.s2) == (4, 2, 1)
        assert rep.r.exact and rep.r.value == F(1, 2)
        assert rep.R.exact and rep.R.value == F(1, 2)
        assert rep.s1 / rep.s0 == rep.s2 / rep.s1 == F(1, 2)
        assert rep.s1 * rep.s1 == rep.s0 * rep.s2
        names = [c.name for c in rep.cases]
        assert "equality_mixed_product" in names and "equality_r_vs_R" in names
        assert rep.all_pass

    def test_identical_nef_pair(self):
        rep = diskant_report(Pair(tent_divisor()), Pair(tent_divisor()))
        assert (rep.s0, rep.s1, rep.s2) == (2, 2, 2)
        assert rep.r.value == 1 == rep.R.value
        assert rep.all_pass


class TestSamplers:
    def test_deterministic(self):
        a = sample_divisor(random.Random(7))
        b = sample_divisor(random.Random(7))
        assert a == b

    def test_big_pair_is_big(self):
        rng = random.Random(3)
        for _ in range(10):
            assert is_big(sample_big_pair(rng))

    def test_nef_sampler(self):
        rng = random.Random(5)
        for _ in range(10):
            assert is_nef(sample_nef_divisor(rng))

    def test_general_position_instance(self):
        pair, direction, central = sample_derivative_instance(random.Random(11))
        rep = check_differentiability(pair, direction)
        # general position means the volume is one quadratic piece across the
        # reference step, so the central difference hits the analytic value
        assert rep.deviation == 0
        assert rep.derivative is not None
        assert rep.derivative == rep.analytic
        assert central == rep.analytic


class TestSuites:
    def test_known_names(self):
        names = suite_names()
        for expected in (
            "brunn_minkowski", "homogeneity", "zariski", "siu", "hodge",
            "kt", "continuity", "min_valuation", "legendre_involution",
            "openness", "oracle_convergence", "okounkov_match",
            "diskant_random", "bonnesen_random", "superadditivity",
        ):
            assert expected in names
        assert len(names) == 15

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite("isoperimetric_disco")

    @pytest.mark.parametrize("name", sorted(
        n for n in (
            "brunn_minkowski", "homogeneity", "zariski", "siu", "hodge",
            "kt", "continuity", "min_valuation", "legendre_involution",
            "openness", "diskant_random", "bonnesen_random", "superadditivity",
        )
    ))
    def test_small_random_run(self, name):
        res = run_suite(name, count=4, seed=1)
        assert res.ok
        assert res.performed == 4
        assert res.passes == 4 and res.failures == 0

    @pytest.mark.parametrize("name", ["oracle_convergence", "okounkov_match"])
    def test_fixed_instance_suites(self, name):
        res = run_suite(name, count=1)
        assert res.ok and res.failures == 0

    def test_run_suite_deterministic(self):
        a = run_suite("brunn_minkowski", count=3, seed=9).to_payload()
        b = run_suite("brunn_minkowski", count=3, seed=9).to_payload()
        assert a == b

    def test_payload_shape(self):
        res = run_suite("homogeneity", count=2, seed=0)
        payload = res.to_payload()
        assert payload["name"] == "homogeneity"
        assert payload["ok"] is True
        assert payload["performed"] == 2
        assert set(payload) == {
            "name", "requested", "performed", "passes", "failures",
            "worst_slack", "ok", "failing",
        }
