from collections import Counter
from fractions import Fraction

import pytest

from coinwalk.distributions import Distribution, even_distribution, odd_distribution
from coinwalk.errors import DomainError
from coinwalk.montecarlo import (
    SimConfig,
    arcsine_cdf,
    arcsine_sup_distance,
    simulate,
    splitmix64,
    tv_distance,
    walk_steps,
)
from coinwalk.oracle import PositivityRule, count_positive

F = Fraction
CF = PositivityRule.CHUNG_FELLER
NN = PositivityRule.NON_NEGATIVE


class TestGenerator:
    def test_known_first_output_for_seed_zero(self):
        assert splitmix64(0, 0) == 0xE220A8397B1DCDAF

    def test_frozen_vectors_seed_42(self):
        # regression pins for this exact generator definition
        assert [splitmix64(42, i) for i in range(3)] == [
            0xBDD732262FEB6E95,
            0x28EFE333B266F103,
            0x47526757130F9F52,
        ]

    def test_wraps_seed_to_64_bits(self):
        assert splitmix64((1 << 64) + 5, 3) == splitmix64(5, 3)


class TestDeterminism:
    def test_identical_config_identical_histogram(self):
        cfg = SimConfig(m=25, samples=2000, seed=123)
        assert simulate(cfg) == simulate(cfg)

    def test_block_layout_invisible(self):
        cfg = SimConfig(m=19, samples=501, seed=9)
        assert simulate(cfg, block=7) == simulate(cfg, block=64) == simulate(cfg, block=501)

    def test_oversized_block_is_clamped_not_trusted(self):
        cfg = SimConfig(m=19, samples=101, seed=9)
        assert simulate(cfg, block=1 << 30) == simulate(cfg, block=11)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SimConfig(m=-1, samples=10, seed=0)
        with pytest.raises(ValueError):
            SimConfig(m=4, samples=0, seed=0)


class TestSpotCheck:
    def test_thousand_paths_recounted_independently(self):
        # re-derive every walk in plain Python and count with the reference rule
        cfg = SimConfig(m=25, samples=1000, seed=7)
        hist = simulate(cfg)
        recount = Counter(count_positive(walk_steps(cfg, j), CF) for j in range(cfg.samples))
        assert tuple(recount.get(j, 0) for j in range(cfg.m + 1)) == hist

    def test_nonneg_rule_too(self):
        cfg = SimConfig(m=12, samples=400, seed=11, rule=NN)
        hist = simulate(cfg)
        recount = Counter(count_positive(walk_steps(cfg, j), NN) for j in range(cfg.samples))
        assert tuple(recount.get(j, 0) for j in range(cfg.m + 2)) == hist

    def test_walk_steps_domain(self):
        cfg = SimConfig(m=4, samples=10, seed=0)
        with pytest.raises(DomainError):
            walk_steps(cfg, 10)


class TestStatistics:
    def test_single_toss(self):
        cfg = SimConfig(m=1, samples=10000, seed=2024)
        hist = simulate(cfg)
        assert abs(hist[1] / 10000 - 0.5) < 0.02

    def test_four_tosses_close_to_law(self):
        cfg = SimConfig(m=4, samples=100000, seed=31337)
        assert tv_distance(simulate(cfg), even_distribution(2)) < 0.01

    def test_m25_against_odd_law(self):
        cfg = SimConfig(m=25, samples=100000, seed=5150)
        tv = tv_distance(simulate(cfg), odd_distribution(12))
        assert tv < 0.02
        # seed-fixed regression value recorded at first run: 0.0055739982986
        assert abs(tv - 0.0055739982986) < 1e-9

    def test_zero_length_walk(self):
        assert simulate(SimConfig(m=0, samples=50, seed=1)) == (50,)
        assert simulate(SimConfig(m=0, samples=50, seed=1, rule=NN)) == (0, 50)


class TestReporting:
    def test_tv_identical(self):
        d = even_distribution(2)
        hist = tuple(int(p * 80) for p in d.mass)
        assert tv_distance(hist, d) == 0

    def test_tv_disjoint(self):
        d = Distribution.from_mass([F(1), F(0)])
        assert tv_distance((0, 10), d) == 1

    def test_tv_support_mismatch(self):
        with pytest.raises(DomainError):
            tv_distance((1, 2, 3), even_distribution(2))

    def test_arcsine_cdf_endpoints(self):
        assert arcsine_cdf(0.0) == 0.0
        assert arcsine_cdf(1.0) == 1.0
        assert abs(arcsine_cdf(0.5) - 0.5) < 1e-12

    def test_sup_distance_detects_point_mass(self):
        # all mass at the middle is far from the U-shaped arcsine law
        hist = [0] * 11
        hist[5] = 1000
        assert arcsine_sup_distance(hist) > 0.3
