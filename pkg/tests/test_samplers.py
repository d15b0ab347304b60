from collections import Counter

import numpy as np
import pytest
from scipy.stats import chi2

from permshape.perm import Permutation, cycle_stats, square
from permshape.samplers import (
    CycleType,
    RegimeSpec,
    derive_rng,
    sample_fpf_involution,
    sample_in_cycle_type,
    sample_regime,
    sample_uniform,
    sample_uniform_involution,
)


def assert_uniform_over_cells(counts, n_cells, total, alpha=1e-3):
    """Chi-square goodness of fit against the uniform law on n_cells cells."""
    assert len(counts) == n_cells
    expected = total / n_cells
    stat = sum((c - expected) ** 2 / expected for c in counts.values())
    assert stat <= chi2.ppf(1.0 - alpha, df=n_cells - 1), f"chi2={stat:.2f}"


class TestDeriveRng:
    def test_deterministic(self):
        a = derive_rng(42, 10, 3).integers(0, 1 << 30, size=5)
        b = derive_rng(42, 10, 3).integers(0, 1 << 30, size=5)
        assert np.array_equal(a, b)

    def test_streams_differ(self):
        a = derive_rng(42, 10, 3).integers(0, 1 << 30, size=5)
        b = derive_rng(42, 10, 4).integers(0, 1 << 30, size=5)
        c = derive_rng(43, 10, 3).integers(0, 1 << 30, size=5)
        assert not np.array_equal(a, b) and not np.array_equal(a, c)

    def test_rejects_negative_seed(self):
        with pytest.raises(ValueError):
            derive_rng(-1)


class TestSampleUniform:
    def test_n_one(self):
        rng = derive_rng(0)
        for _ in range(10):
            assert sample_uniform(1, rng) == Permutation([1])

    def test_uniform_over_s3(self):
        rng = derive_rng(1)
        total = 60_000
        counts = Counter(sample_uniform(3, rng).word.tobytes() for _ in range(total))
        assert_uniform_over_cells(counts, 6, total)

    def test_same_seed_same_output(self):
        xs = [sample_uniform(8, derive_rng(9, i)).to_text() for i in range(5)]
        ys = [sample_uniform(8, derive_rng(9, i)).to_text() for i in range(5)]
        assert xs == ys


class TestSampleInCycleType:
    def test_all_ones_is_identity(self):
        rng = derive_rng(2)
        t = CycleType((1, 1, 1, 1))
        for _ in range(5):
            assert sample_in_cycle_type(t, rng) == Permutation.identity(4)

    def test_three_cycles_balanced(self):
        rng = derive_rng(3)
        total = 40_000
        counts = Counter(
            sample_in_cycle_type(CycleType((3,)), rng).word.tobytes() for _ in range(total)
        )
        # the two 3-cycles, balanced
        assert_uniform_over_cells(counts, 2, total)

    def test_two_two_cycles_uniform_over_three_matchings(self):
        rng = derive_rng(4)
        total = 30_000
        counts = Counter(
            sample_in_cycle_type(CycleType((2, 2)), rng).word.tobytes() for _ in range(total)
        )
        assert_uniform_over_cells(counts, 3, total)

    def test_cycle_type_is_respected(self):
        rng = derive_rng(5)
        t = CycleType((4, 2, 1))
        for _ in range(20):
            cs = cycle_stats(sample_in_cycle_type(t, rng))
            assert cs.n == 7 and cs.num_cycles == 3
            assert cs.fixed_points == 1 and cs.two_cycles == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            CycleType((1, 2))
        with pytest.raises(ValueError):
            CycleType((0,))


class TestSampleUniformInvolution:
    def test_size_two_split(self):
        rng = derive_rng(6)
        total = 40_000
        counts = Counter(
            sample_uniform_involution(2, rng).word.tobytes() for _ in range(total)
        )
        assert_uniform_over_cells(counts, 2, total)

    def test_size_three_quarters(self):
        rng = derive_rng(7)
        total = 40_000
        counts = Counter(
            sample_uniform_involution(3, rng).word.tobytes() for _ in range(total)
        )
        assert_uniform_over_cells(counts, 4, total)

    def test_outputs_are_involutions(self):
        rng = derive_rng(8)
        for n in (0, 1, 5, 40, 201):
            p = sample_uniform_involution(n, rng)
            assert square(p) == Permutation.identity(n)


class TestSampleFpfInvolution:
    def test_n_two(self):
        rng = derive_rng(9)
        for _ in range(5):
            assert sample_fpf_involution(2, rng) == Permutation([2, 1])

    def test_n_four_three_matchings(self):
        rng = derive_rng(10)
        total = 30_000
        counts = Counter(sample_fpf_involution(4, rng).word.tobytes() for _ in range(total))
        assert_uniform_over_cells(counts, 3, total)

    def test_structure(self):
        rng = derive_rng(11)
        for n in (2, 10, 100):
            cs = cycle_stats(sample_fpf_involution(n, rng))
            assert cs.fixed_points == 0 and cs.two_cycles == n // 2

    def test_parity_error(self):
        with pytest.raises(ValueError, match="parity"):
            sample_fpf_involution(5, derive_rng(12))


class TestSampleRegime:
    def test_pure_n_cycle(self):
        spec = RegimeSpec(ensemble="n_cycle")
        cs = cycle_stats(sample_regime(spec, 50, derive_rng(13)))
        assert cs.num_cycles == 1 and cs.fixed_points == 0

    def test_composite_fpf_half(self):
        spec = RegimeSpec(ensemble="composite", core="fpf_involution", fix_rule="linear", p=0.5)
        rng = derive_rng(14)
        for n in (10, 11, 57, 100):
            p = sample_regime(spec, n, rng)
            cs = cycle_stats(p)
            m = spec.fix_count(n)
            assert abs(cs.fixed_points - m) <= 1
            assert cs.fixed_points_of_square == n  # involutions square to identity

    def test_theta_log_fix_count(self):
        # floor(1000 / ln 1000) = 144, and the core is one long cycle
        spec = RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="theta_log", theta=1.0)
        assert spec.fix_count(1000) == 144
        cs = cycle_stats(sample_regime(spec, 1000, derive_rng(15)))
        assert cs.fixed_points == 144
        assert cs.num_cycles - cs.fixed_points == 1

    def test_parity_repair_from_zero(self):
        # odd n with an fpf core and target m=0 must bump m up to 1
        spec = RegimeSpec(ensemble="composite", core="fpf_involution", fix_rule="constant", c=0)
        cs = cycle_stats(sample_regime(spec, 7, derive_rng(16)))
        assert cs.fixed_points == 1
        assert cs.fixed_points_of_square == 7

    def test_parity_repair_decrements(self):
        spec = RegimeSpec(ensemble="composite", core="fpf_involution", fix_rule="constant", c=4)
        cs = cycle_stats(sample_regime(spec, 9, derive_rng(17)))
        assert cs.fixed_points == 3  # 9 - 4 is odd, so m drops to 3

    def test_lone_element_core_repair(self):
        spec = RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="constant", c=4)
        cs = cycle_stats(sample_regime(spec, 5, derive_rng(18)))
        assert cs.fixed_points == 3  # core of size 1 would be a fixed point

    def test_derangement_core(self):
        spec = RegimeSpec(
            ensemble="composite", core="uniform_derangement", fix_rule="linear", p=0.4
        )
        rng = derive_rng(19)
        for n in (5, 20, 101):
            p = sample_regime(spec, n, rng)
            cs = cycle_stats(p)
            assert abs(cs.fixed_points - spec.fix_count(n)) <= 1

    def test_measured_fix_count_close_to_rule(self):
        rng = derive_rng(20)
        for core in ("n_cycle", "fpf_involution", "uniform_derangement"):
            spec = RegimeSpec(ensemble="composite", core=core, fix_rule="power", beta=0.6, c=1.5)
            for n in (3, 17, 64, 333):
                cs = cycle_stats(sample_regime(spec, n, rng))
                assert abs(cs.fixed_points - spec.fix_count(n)) <= 1

    def test_uniform_in_cycle_type_regime(self):
        spec = RegimeSpec(ensemble="uniform_in_cycle_type", cycle_type=(2, 2))
        cs = cycle_stats(sample_regime(spec, 4, derive_rng(21)))
        assert cs.two_cycles == 2
        with pytest.raises(ValueError):
            sample_regime(spec, 5, derive_rng(21))


class TestRegimeSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            RegimeSpec(ensemble="nope")
        with pytest.raises(ValueError):
            RegimeSpec(ensemble="composite")  # missing core/fix_rule
        with pytest.raises(ValueError):
            RegimeSpec(ensemble="uniform", p=1.5)
        with pytest.raises(ValueError):
            RegimeSpec(ensemble="uniform_in_cycle_type")

    def test_text_round_trip(self):
        spec = RegimeSpec(
            ensemble="composite", core="fpf_involution", fix_rule="theta_log", theta=2.5
        )
        again = RegimeSpec.from_text(spec.to_text())
        assert again == spec

    def test_fix_rules(self):
        assert RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="constant", c=7).fix_count(100) == 7
        assert RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="linear", p=0.25).fix_count(100) == 25
        assert RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="power", c=2, beta=0.5).fix_count(100) == 20
        # clamped to [0, n]
        assert RegimeSpec(ensemble="composite", core="n_cycle", fix_rule="constant", c=999).fix_count(10) == 10
