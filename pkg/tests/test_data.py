"""Dataset generators, the portable PRNG, and CSV round trips."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quadneuron import (
    CloudSpec,
    Dataset,
    RingSpec,
    Sample,
    SplitMix64,
    concentric_rings,
    fuzzy_gate_cloud,
    gate_labels,
    gate_truth_table,
    load_csv,
    save_csv,
)


class TestSplitMix64:
    def test_reference_sequence_seed_zero(self):
        # Known-answer values of the reference implementation.
        rng = SplitMix64(0)
        assert [rng.next_uint64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_reference_sequence_seed_1234567(self):
        rng = SplitMix64(1234567)
        assert [rng.next_uint64() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_floats_live_in_unit_interval(self):
        rng = SplitMix64(99)
        values = [rng.next_float() for _ in range(10000)]
        assert all(0.0 <= v < 1.0 for v in values)

    def test_streams_are_reproducible(self):
        a = SplitMix64(7)
        b = SplitMix64(7)
        assert [a.next_uint64() for _ in range(50)] == [b.next_uint64() for _ in range(50)]

    def test_uniform_respects_bounds(self):
        rng = SplitMix64(3)
        values = [rng.uniform(-0.25, 0.25) for _ in range(1000)]
        assert all(-0.25 <= v < 0.25 for v in values)


class TestSampleAndDataset:
    def test_sample_validation(self):
        with pytest.raises(ValueError, match=r"\[0, 1\]"):
            Sample(x=[1.0], y=1.5)
        with pytest.raises(ValueError, match="finite"):
            Sample(x=[np.nan], y=0.5)

    def test_dataset_validation(self):
        with pytest.raises(ValueError, match="at least one"):
            Dataset(X=np.zeros((0, 2)), y=np.zeros(0))
        with pytest.raises(ValueError, match=r"\[0, 1\]"):
            Dataset(X=[[0.0, 0.0]], y=[2.0])
        with pytest.raises(ValueError, match="shape"):
            Dataset(X=[[0.0, 0.0]], y=[0.0, 1.0])

    def test_iteration_and_from_samples(self):
        ds = gate_truth_table("XOR")
        rebuilt = Dataset.from_samples(list(ds))
        assert rebuilt == ds
        assert len(ds) == 4 and ds.n == 2


class TestGateTables:
    def test_xor_labels(self):
        ds = gate_truth_table("XOR")
        np.testing.assert_array_equal(ds.y, [0, 1, 1, 0])
        np.testing.assert_array_equal(ds.X, [[0, 0], [0, 1], [1, 0], [1, 1]])

    @pytest.mark.parametrize(
        "gate,labels",
        [
            ("NAND", (1, 1, 1, 0)),
            ("NOR", (1, 0, 0, 0)),
            ("OR", (0, 1, 1, 1)),
            ("AND", (0, 0, 0, 1)),
        ],
    )
    def test_boolean_definitions(self, gate, labels):
        np.testing.assert_array_equal(gate_truth_table(gate).y, labels)
        assert gate_labels(gate.lower()) == labels

    def test_unknown_gate(self):
        with pytest.raises(ValueError, match="unknown gate"):
            gate_truth_table("XNOR")


class TestFuzzyGateCloud:
    def test_zero_jitter_repeats_the_truth_table(self):
        ds = fuzzy_gate_cloud(CloudSpec(gate="XOR", points_per_corner=3, jitter=0.0, seed=5))
        assert len(ds) == 12
        table = gate_truth_table("XOR")
        for corner in range(4):
            block = slice(3 * corner, 3 * corner + 3)
            np.testing.assert_array_equal(ds.X[block], np.tile(table.X[corner], (3, 1)))
            np.testing.assert_array_equal(ds.y[block], np.repeat(table.y[corner], 3))

    def test_deterministic_for_fixed_seed(self):
        spec = CloudSpec(gate="XOR", points_per_corner=25, jitter=0.2, seed=1)
        assert fuzzy_gate_cloud(spec) == fuzzy_gate_cloud(spec)

    def test_seed_changes_the_points(self):
        a = fuzzy_gate_cloud(CloudSpec(seed=1))
        b = fuzzy_gate_cloud(CloudSpec(seed=2))
        assert not np.array_equal(a.X, b.X)

    def test_count_and_label_balance(self):
        ds = fuzzy_gate_cloud(CloudSpec(gate="NAND", points_per_corner=10, jitter=0.3, seed=2))
        assert len(ds) == 40
        assert int(ds.y.sum()) == 30  # NAND has three true corners

    @pytest.mark.parametrize("seed", [1, 2, 77])
    def test_exact_separator_classifies_every_point(self, seed):
        """Labels agree with the sign of (x1 - 0.5)(x2 - 0.5): jitter < 0.5
        keeps every cloud on its corner's side of both midlines."""
        ds = fuzzy_gate_cloud(CloudSpec(gate="XOR", points_per_corner=25, jitter=0.2, seed=seed))
        product = (ds.X[:, 0] - 0.5) * (ds.X[:, 1] - 0.5)
        np.testing.assert_array_equal(product < 0, ds.y == 1.0)

    def test_jitter_bound_enforced(self):
        with pytest.raises(ValueError, match="jitter"):
            CloudSpec(jitter=0.5)
        with pytest.raises(ValueError, match="jitter"):
            CloudSpec(jitter=-0.1)
        with pytest.raises(ValueError, match="positive"):
            CloudSpec(points_per_corner=0)


class TestConcentricRings:
    def test_counts_and_label_assignment(self):
        ds = concentric_rings(RingSpec(n_inner=30, n_outer=50, seed=3))
        assert len(ds) == 80
        np.testing.assert_array_equal(ds.y[:30], np.ones(30))
        np.testing.assert_array_equal(ds.y[30:], np.zeros(50))

    def test_zero_noise_pins_the_radius(self):
        ds = concentric_rings(RingSpec(n_inner=4, n_outer=4, radial_noise=0.0, seed=9))
        radii = np.hypot(ds.X[:, 0], ds.X[:, 1])
        np.testing.assert_allclose(radii[:4], 0.5, rtol=1e-12)
        np.testing.assert_allclose(radii[4:], 1.0, rtol=1e-12)

    def test_rings_stay_disjoint(self):
        spec = RingSpec(n_inner=200, n_outer=200, radial_noise=0.05, seed=13)
        ds = concentric_rings(spec)
        radii = np.hypot(ds.X[:, 0], ds.X[:, 1])
        assert radii[:200].max() < radii[200:].min()

    def test_midway_circle_separates_classes(self):
        spec = RingSpec(n_inner=100, n_outer=100, r_inner=0.5, r_outer=1.0,
                        radial_noise=0.05, seed=7)
        ds = concentric_rings(spec)
        threshold = ((spec.r_inner + spec.r_outer) / 2.0) ** 2
        inside = ds.X[:, 0] ** 2 + ds.X[:, 1] ** 2 < threshold
        np.testing.assert_array_equal(inside, ds.y == 1.0)

    def test_deterministic_for_fixed_seed(self):
        assert concentric_rings(RingSpec(seed=7)) == concentric_rings(RingSpec(seed=7))

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            RingSpec(r_inner=0.9, r_outer=1.0, radial_noise=0.1)
        with pytest.raises(ValueError, match="r_inner"):
            RingSpec(r_inner=1.5, r_outer=1.0)


class TestCsvRoundTrip:
    def test_truth_table_round_trip(self, tmp_path):
        ds = gate_truth_table("XOR")
        path = tmp_path / "xor.csv"
        save_csv(ds, path)
        assert load_csv(path) == ds

    def test_written_format(self, tmp_path):
        path = tmp_path / "t.csv"
        save_csv(Dataset(X=[[0.0, 1.0]], y=[1.0]), path)
        assert path.read_text() == "0,1,1\n"

    def test_row_parsing(self, tmp_path):
        path = tmp_path / "row.csv"
        path.write_text("0,1,1\n")
        ds = load_csv(path)
        np.testing.assert_array_equal(ds.X, [[0.0, 1.0]])
        np.testing.assert_array_equal(ds.y, [1.0])

    def test_arity_error_reports_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0,1,1\n0,1\n")
        with pytest.raises(ValueError, match="line 2"):
            load_csv(path)

    def test_non_numeric_error_reports_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0,1,1\n0,x,1\n")
        with pytest.raises(ValueError, match="line 2"):
            load_csv(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ValueError, match="empty"):
            load_csv(path)

    def test_random_values_round_trip_exactly(self, tmp_path):
        rng = np.random.default_rng(19)
        X = rng.uniform(-1e6, 1e6, (50, 3)) * 10.0 ** rng.integers(-12, 12, (50, 3))
        y = rng.uniform(0, 1, 50)
        ds = Dataset(X=X, y=y)
        path = tmp_path / "r.csv"
        save_csv(ds, path)
        loaded = load_csv(path)
        np.testing.assert_array_equal(loaded.X, ds.X)
        np.testing.assert_array_equal(loaded.y, ds.y)

    @given(st.floats(allow_nan=False, allow_infinity=False, width=64))
    def test_seventeen_digits_is_lossless(self, value):
        assert float(f"{value:.17g}") == value


class TestGeneratorFiniteness:
    @pytest.mark.parametrize("seed", [0, 1, 2**63, 2**64 - 1])
    def test_everything_finite_and_binary(self, seed):
        cloud = fuzzy_gate_cloud(CloudSpec(seed=seed))
        rings = concentric_rings(RingSpec(seed=seed))
        for ds in (cloud, rings):
            assert np.all(np.isfinite(ds.X))
            assert set(np.unique(ds.y)) <= {0.0, 1.0}
