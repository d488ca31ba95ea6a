"""Datasets, CSV interchange, splitting & the synthetic benchmark."""

import pytest

from numpy                  import arange, array, histogram, intersect1d, ones, union1d, zeros
from numpy.testing          import assert_array_equal
from scipy.stats            import binom

from gradatim.configuration import InvalidConfigValueError
from gradatim.datasets      import Dataset, DatasetParseError, DuplicateSampleIdError, InvalidSampleError, \
                                   Sample, SyntheticSpec, feature_map, generate_synthetic, load_csv, save_csv, \
                                   split_train_test


class TestDataset:

    def test_duplicate_ids(self):
        with pytest.raises(DuplicateSampleIdError):
            Dataset(ids = [0, 1, 1], x = zeros((3, 2)), y = zeros(3))

    def test_non_finite_targets(self):
        with pytest.raises(InvalidSampleError):
            Dataset(ids = [0, 1], x = zeros((2, 2)), y = [0.0, float("inf")])

    def test_samples_round_trip(self):
        dataset =   Dataset.from_samples([Sample(4, array([1.0, 2.0]), 3.0), Sample(9, array([0.5, 0.0]), -1.0)])

        assert dataset.ids.tolist() == [4, 9]
        assert dataset[1].y == -1.0
        assert dataset[0].origin_id is None
        assert dataset.next_id == 10

    def test_duplicates_keep_provenance(self):
        dataset =   Dataset(ids = arange(3), x = zeros((3, 1)), y = [1.0, 2.0, 3.0])
        once =      dataset.append_duplicates([2])
        twice =     once.append_duplicates([once.num_samples - 1])

        assert twice.origin_ids.tolist() == [-1, -1, -1, 2, 2]
        assert twice[4].is_duplicate

    def test_position_of(self):
        dataset =   Dataset(ids = [10, 20, 30], x = zeros((3, 1)), y = zeros(3))

        assert_array_equal(dataset.position_of([30, 10]), [2, 0])


class TestCSV:

    def test_round_trip(self, make_dataset, tmp_path):
        dataset =   make_dataset(n = 12, input_dim = 3)

        assert load_csv(save_csv(dataset, tmp_path / "data" / "train.csv")) == dataset

    def test_header(self, tmp_path):
        path =  tmp_path / "bad.csv"
        path.write_text("id,target,x0\n0,1.0,2.0\n")

        with pytest.raises(DatasetParseError, match = r"^line 1:"):
            load_csv(path)

    def test_ragged_row(self, tmp_path):
        path =  tmp_path / "bad.csv"
        path.write_text("id,y,x0,x1\n0,1.0,2.0,3.0\n1,1.0,2.0\n")

        with pytest.raises(DatasetParseError, match = r"^line 3:") as error:
            load_csv(path)

        assert error.value.line == 3

    @pytest.mark.parametrize("cell", ["abc", "nan", "inf", ""])
    def test_bad_cell(self, cell, tmp_path):
        path =  tmp_path / "bad.csv"
        path.write_text(f"id,y,x0\n0,1.0,2.0\n1,1.0,2.0\n2,{cell},2.0\n")

        with pytest.raises(DatasetParseError, match = r"^line 4:"):
            load_csv(path)

    def test_non_integer_id(self, tmp_path):
        path =  tmp_path / "bad.csv"
        path.write_text("id,y,x0\n0.5,1.0,2.0\n")

        with pytest.raises(DatasetParseError, match = r"^line 2:"):
            load_csv(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_csv(tmp_path / "absent.csv")


class TestSplit:

    def test_partition(self, make_dataset):
        dataset =       make_dataset(n = 50)
        train, test =   split_train_test(dataset, 0.8, seed = 3)

        assert train.num_samples == 40 and test.num_samples == 10
        assert intersect1d(train.ids, test.ids).size == 0
        assert_array_equal(union1d(train.ids, test.ids), dataset.ids)
        assert (train.ids[1:] > train.ids[:-1]).all()

    def test_seeded(self, make_dataset):
        dataset =   make_dataset(n = 30)

        assert split_train_test(dataset, 0.5, 1)[0] == split_train_test(dataset, 0.5, 1)[0]
        assert not split_train_test(dataset, 0.5, 1)[0] == split_train_test(dataset, 0.5, 2)[0]

    def test_fraction_range(self, make_dataset):
        with pytest.raises(InvalidConfigValueError):
            split_train_test(make_dataset(n = 10), 1.0, 0)


class TestSynthetic:

    def test_shape_and_ids(self):
        dataset =   generate_synthetic(SyntheticSpec(n = 300, feature_dim = 5))

        assert dataset.x.shape == (300, 5)
        assert_array_equal(dataset.ids, arange(300))

    def test_targets_in_range(self):
        dataset =   generate_synthetic(SyntheticSpec(n = 2000))
        low, high = binom.interval(0.999, 2000, 0.05)

        assert dataset.y.min() >= 0.0 and dataset.y.max() <= 80.0
        assert low <= (dataset.y >= 60.0).sum() <= high

    @pytest.mark.parametrize("seed", range(5))
    def test_histogram_is_imbalanced(self, seed):
        dataset =   generate_synthetic(SyntheticSpec(n = 2000, rare_mass = 0.05, seed = seed))
        counts, _ = histogram(dataset.y, bins = arange(0.0, 85.0, 5.0))

        assert counts.max() >= 5 * counts[12:].mean()

    def test_seeded(self):
        assert generate_synthetic(SyntheticSpec(n = 50, seed = 4)) == generate_synthetic(SyntheticSpec(n = 50, seed = 4))
        assert not generate_synthetic(SyntheticSpec(n = 50, seed = 4)) == generate_synthetic(SyntheticSpec(n = 50, seed = 5))

    def test_noise_free_features(self):
        dataset =   generate_synthetic(SyntheticSpec(n = 20, feature_dim = 3, noise_sd = 0.0))

        assert_array_equal(dataset.x, feature_map(dataset.y, 3))

    def test_validation(self):
        with pytest.raises(InvalidConfigValueError):
            SyntheticSpec(rare_mass = 0.6)

    def test_feature_map_is_periodic(self):
        y =     array([10.0, 90.0])

        assert abs(feature_map(y, 2)[0] - feature_map(y, 2)[1]).max() < 1e-12

    def test_feature_map_bounded(self):
        assert abs(feature_map(ones(5) * 17.3, 4)).max() <= 1.0
