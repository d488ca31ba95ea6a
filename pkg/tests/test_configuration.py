"""JSON run configuration parsing & validation."""

import pytest

from gradatim.configuration             import InvalidConfigValueError, MalformedConfigError, \
                                               UnknownConfigKeyError
from gradatim.configuration.run_config  import DatasetSource, RunConfig, build_section, load_run_config, \
                                               parse_run_config
from gradatim.datasets                  import SyntheticSpec, save_csv
from gradatim.selection                 import PaceConfig


class TestParse:

    def test_empty_document_is_all_defaults(self):
        assert parse_run_config({}) == RunConfig()

    def test_nested_values(self):
        config =    parse_run_config({
                        "trainer":  {
                                        "mode":     "SP-DRF",
                                        "backbone": {"hidden_widths": [16, 8], "feature_dim": 12},
                                        "pace":     {"pace_count": 4, "curriculum_threshold": None},
                                        "optimizer": {"learning_rate": 1}
                                    },
                        "dataset":  {"synthetic": {"n": 100, "seed": 3}},
                        "ablation_seeds": [0, 1]
                    })

        assert config.trainer.mode == "SP-DRF"
        assert config.trainer.backbone.hidden_widths == [16, 8]
        assert config.trainer.pace == PaceConfig(pace_count = 4)
        assert config.trainer.optimizer.learning_rate == 1.0
        assert config.dataset.synthetic == SyntheticSpec(n = 100, seed = 3)
        assert config.ablation_seeds == [0, 1]

    def test_unknown_key_is_dotted(self):
        with pytest.raises(UnknownConfigKeyError, match = "trainer.pace.pace_cont") as error:
            parse_run_config({"trainer": {"pace": {"pace_cont": 3}}})

        assert error.value.key == "trainer.pace.pace_cont"

    def test_unknown_top_level_key(self):
        with pytest.raises(UnknownConfigKeyError):
            parse_run_config({"epochs": 3})

    def test_wrong_type_is_dotted(self):
        with pytest.raises(InvalidConfigValueError) as error:
            parse_run_config({"trainer": {"pace": {"soft_fraction": "ten percent"}}})

        assert error.value.key == "trainer.pace.soft_fraction"

    def test_range_violation_is_dotted(self):
        with pytest.raises(InvalidConfigValueError) as error:
            parse_run_config({"trainer": {"pace": {"soft_fraction": 1.5}}})

        assert error.value.key == "trainer.pace.soft_fraction"

    def test_booleans_are_not_integers(self):
        with pytest.raises(InvalidConfigValueError):
            parse_run_config({"trainer": {"seed": True}})

    def test_floats_are_not_integers(self):
        with pytest.raises(InvalidConfigValueError):
            parse_run_config({"trainer": {"warmup_steps": 10.5}})

    def test_literal_choices(self):
        with pytest.raises(InvalidConfigValueError) as error:
            parse_run_config({"trainer": {"leaves": {"coupling": "both"}}})

        assert error.value.key == "trainer.leaves.coupling"

    def test_list_items_are_checked(self):
        with pytest.raises(InvalidConfigValueError) as error:
            parse_run_config({"trainer": {"backbone": {"hidden_widths": [8, "wide"]}}})

        assert error.value.key == "trainer.backbone.hidden_widths[1]"

    def test_section_must_be_an_object(self):
        with pytest.raises(InvalidConfigValueError):
            build_section(RunConfig, {"trainer": [1, 2]})

    def test_effective_config_applies_mode(self):
        data =  parse_run_config({"trainer": {"mode": "DRF"}}).to_dict()

        assert data["trainer"]["pace"]["pace_count"] == 1
        assert data["trainer"]["pace"]["weighting"] == "hard"


class TestDatasetSource:

    def test_sources_are_exclusive(self):
        with pytest.raises(InvalidConfigValueError):
            DatasetSource(synthetic = SyntheticSpec(), csv = "data.csv")

    def test_pre_split_files_come_in_pairs(self):
        with pytest.raises(InvalidConfigValueError):
            DatasetSource(train_csv = "train.csv")

    def test_default_is_the_synthetic_benchmark(self):
        train, test =   DatasetSource(synthetic = SyntheticSpec(n = 40)).load()

        assert train.num_samples == 32 and test.num_samples == 8

    def test_split_seed_override(self):
        source =    DatasetSource(synthetic = SyntheticSpec(n = 40))

        assert source.load(split_seed = 0)[0] == source.load()[0]
        assert not source.load(split_seed = 9)[0] == source.load()[0]

    def test_pre_split_files(self, make_dataset, tmp_path):
        save_csv(make_dataset(n = 10), tmp_path / "train.csv")
        save_csv(make_dataset(n = 4, seed = 1), tmp_path / "test.csv")

        train, test =   DatasetSource(train_csv = str(tmp_path / "train.csv"), test_csv = str(tmp_path / "test.csv")).load()

        assert (train.num_samples, test.num_samples) == (10, 4)
        assert test.name == "test"


class TestRunConfig:

    def test_seeds_must_be_distinct(self):
        with pytest.raises(InvalidConfigValueError):
            RunConfig(ablation_seeds = [1, 1])

    def test_bin_width(self):
        with pytest.raises(InvalidConfigValueError):
            RunConfig(bin_width = 0.0)


class TestLoad:

    def test_no_file(self):
        assert load_run_config(None) == RunConfig()

    def test_file(self, tmp_path):
        path =  tmp_path / "run.json"
        path.write_text('{"cs_level": 2.5, "trainer": {"seed": 4}}')

        config =    load_run_config(path)

        assert config.cs_level == 2.5 and config.trainer.seed == 4

    def test_malformed_json(self, tmp_path):
        path =  tmp_path / "run.json"
        path.write_text('{"cs_level": }')

        with pytest.raises(MalformedConfigError, match = "line 1"):
            load_run_config(path)

    def test_not_an_object(self, tmp_path):
        path =  tmp_path / "run.json"
        path.write_text("[1, 2]")

        with pytest.raises(MalformedConfigError):
            load_run_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_run_config(tmp_path / "absent.json")
