"""Numerology, subcarrier partition, sensing-comb RMS bandwidth, symbol counts."""

import math

import pytest

from jcaslink.errors import DomainError, PartitionOverflowError
from jcaslink.waveform import (
    TonePlacement,
    numerology,
    partition,
    rms_bandwidth,
    sensing_rms_bandwidth,
    symbols_in,
    tone_offsets,
)

REF_BANDWIDTH_HZ = 1e8
REF_N_SC = 1024
REF_N_CP = 72


@pytest.fixture
def ref_num():
    return numerology(REF_BANDWIDTH_HZ, REF_N_SC, REF_N_CP)


@pytest.fixture
def ref_plan():
    return partition(1024, 800, 224)


class TestNumerology:
    def test_reference_values_exact(self, ref_num):
        assert ref_num.subcarrier_spacing_hz == 97656.25
        assert ref_num.t_useful_s == 10.24e-6
        assert ref_num.t_cp_s == 0.72e-6
        assert ref_num.t_symbol_s == 10.96e-6
        assert ref_num.cp_overhead == pytest.approx(0.9343065693430657, rel=1e-12)

    def test_symbol_is_sum_of_parts(self, ref_num):
        assert ref_num.t_symbol_s == ref_num.t_useful_s + ref_num.t_cp_s

    def test_zero_cp(self):
        num = numerology(REF_BANDWIDTH_HZ, REF_N_SC, 0)
        assert num.t_symbol_s == num.t_useful_s == 10.24e-6
        assert num.cp_overhead == 1.0

    def test_bandwidth_scaling(self, ref_num):
        double = numerology(2e8, REF_N_SC, REF_N_CP)
        assert double.subcarrier_spacing_hz == 2.0 * ref_num.subcarrier_spacing_hz
        assert double.t_useful_s == pytest.approx(ref_num.t_useful_s / 2.0, rel=1e-12)

    def test_sample_count_identity_reference_exact(self, ref_num):
        assert ref_num.t_symbol_s * ref_num.bandwidth_hz == REF_N_SC + REF_N_CP

    @pytest.mark.parametrize("bw", [1e6, 2e7, 30.72e6, 1e8, 5e9])
    @pytest.mark.parametrize("n_sc,n_cp", [(64, 16), (256, 72), (600, 144), (2048, 0)])
    def test_sample_count_identity_general(self, bw, n_sc, n_cp):
        num = numerology(bw, n_sc, n_cp)
        assert num.t_symbol_s * bw == pytest.approx(n_sc + n_cp, rel=1e-12)

    @pytest.mark.parametrize("bw,n_sc,n_cp", [(0.0, 1024, 72), (-1e8, 1024, 72), (1e8, 0, 72), (1e8, 1024, -1)])
    def test_domain_errors(self, bw, n_sc, n_cp):
        with pytest.raises(DomainError):
            numerology(bw, n_sc, n_cp)


class TestPartition:
    def test_reference_split(self, ref_plan):
        assert ref_plan.n_unused == 0
        assert ref_plan.data_fraction == 0.78125
        assert ref_plan.sense_fraction == 0.21875

    def test_all_data(self):
        plan = partition(1024, 1024, 0)
        assert plan.n_sense == 0 and plan.n_unused == 0
        assert plan.data_fraction == 1.0

    def test_overflow(self):
        with pytest.raises(PartitionOverflowError):
            partition(1024, 800, 300)

    @pytest.mark.parametrize("n_total,n_data,n_sense", [(1024, 800, 224), (1024, 500, 100), (64, 0, 64), (100, 33, 33)])
    def test_fractions_sum_to_one(self, n_total, n_data, n_sense):
        plan = partition(n_total, n_data, n_sense)
        total = plan.data_fraction + plan.sense_fraction + plan.n_unused / plan.n_total
        assert total == pytest.approx(1.0, abs=1e-12)


class TestSensingRmsBandwidth:
    def test_uniform_comb_matches_brute_force(self, ref_plan, ref_num):
        # independent oracle: rebuild the edge-inclusive comb and sum squares
        n = ref_plan.n_sense
        step = REF_BANDWIDTH_HZ / (n - 1)
        offsets = [-REF_BANDWIDTH_HZ / 2.0 + i * step for i in range(n)]
        brute = math.sqrt(sum(f * f for f in offsets) / n)
        value = sensing_rms_bandwidth(ref_plan, ref_num)
        assert value == pytest.approx(brute, rel=1e-12)
        # dense comb sits within 0.5% of B/sqrt(12)
        assert value == pytest.approx(REF_BANDWIDTH_HZ / math.sqrt(12.0), rel=5e-3)

    def test_two_tones_at_band_edges(self, ref_num):
        plan = partition(1024, 800, 2)
        assert sensing_rms_bandwidth(plan, ref_num) == pytest.approx(5e7, rel=1e-12)

    def test_comb_density_insensitive(self, ref_num):
        rms_224 = sensing_rms_bandwidth(partition(1024, 800, 224), ref_num)
        rms_448 = sensing_rms_bandwidth(partition(1024, 500, 448), ref_num)
        assert abs(rms_448 - rms_224) / rms_224 < 0.01

    def test_invariant_under_reversal_and_sign_flip(self, ref_plan, ref_num):
        offsets = tone_offsets(ref_plan, ref_num)
        value = rms_bandwidth(offsets)
        assert rms_bandwidth(tuple(reversed(offsets))) == value
        assert rms_bandwidth(tuple(-f for f in offsets)) == value

    def test_block_edge_beats_uniform_comb(self, ref_plan, ref_num):
        comb = sensing_rms_bandwidth(ref_plan, ref_num, TonePlacement.COMB_UNIFORM)
        block = sensing_rms_bandwidth(ref_plan, ref_num, TonePlacement.BLOCK_EDGE)
        assert len(tone_offsets(ref_plan, ref_num, TonePlacement.BLOCK_EDGE)) == ref_plan.n_sense
        assert block > comb

    def test_too_few_tones(self, ref_num):
        with pytest.raises(DomainError):
            sensing_rms_bandwidth(partition(1024, 800, 1), ref_num)


class TestSymbolsIn:
    def test_reference_window(self, ref_num):
        assert symbols_in(0.3, ref_num) == 27372

    def test_zero_window(self, ref_num):
        assert symbols_in(0.0, ref_num) == 0

    def test_single_symbol_boundary(self, ref_num):
        assert symbols_in(ref_num.t_symbol_s, ref_num) == 1

    def test_monotone_nondecreasing(self, ref_num):
        windows = [i * 1e-4 for i in range(200)]
        counts = [symbols_in(t, ref_num) for t in windows]
        assert all(a <= b for a, b in zip(counts, counts[1:]))

    def test_negative_window_rejected(self, ref_num):
        with pytest.raises(DomainError):
            symbols_in(-1e-3, ref_num)
