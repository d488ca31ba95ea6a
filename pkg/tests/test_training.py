"""Weighted objective gradients, the training loop & mode normalization."""

import pytest

from numpy                      import ones, zeros
from numpy.linalg               import norm
from numpy.random               import default_rng
from numpy.testing              import assert_allclose, assert_array_equal

import gradatim.training.trainer as trainer_module

from gradatim.backbone          import SGDOptimizer
from gradatim.configuration     import InvalidConfigValueError
from gradatim.exceptions        import UsageError
from gradatim.forest            import NoEffectiveSamplesError
from gradatim.selection         import PaceConfig
from gradatim.training          import DivergenceError, GradientResult, OptimizerConfig, Trainer, TrainConfig, \
                                       evaluate, objective_and_gradient, train, weighted_gradient_epoch


def _objective(model, x, y, v, gamma = 0.0):
    result =    model.log_likelihood(x, y)
    value =     float(v @ result.values)

    return value + gamma * float(v @ model.entropy(x)) if gamma else value


def _numeric_gradient(model, x, y, v, gamma = 0.0, h = 1e-6):
    theta =     model.backbone.flatten()
    grad =      zeros(len(theta))

    for j in range(len(theta)):
        shifted =       theta.copy()
        shifted[j] +=   h
        model.backbone.load_flat(shifted)
        up =            _objective(model, x, y, v, gamma)

        shifted[j] -=   2 * h
        model.backbone.load_flat(shifted)
        down =          _objective(model, x, y, v, gamma)

        grad[j] =       (up - down) / (2 * h)

    model.backbone.load_flat(theta)

    return grad


class TestObjectiveGradient:

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_matches_finite_differences(self, seed, make_model):
        rng =       default_rng(seed)
        y =         rng.normal(size = 12)
        model =     make_model(targets = y, seed = seed)
        x =         rng.normal(size = (12, 4))
        v =         rng.uniform(0.0, 1.0, 12)

        analytic =  objective_and_gradient(model, x, y, v).gradients.flatten()
        numeric =   _numeric_gradient(model, x, y, v)

        assert norm(analytic - numeric) / norm(numeric) <= 1e-4

    def test_entropy_term_matches_finite_differences(self, make_model):
        rng =       default_rng(7)
        y =         rng.normal(size = 10)
        model =     make_model(targets = y, seed = 7)
        x =         rng.normal(size = (10, 4))
        v =         rng.uniform(0.0, 1.0, 10)

        result =    objective_and_gradient(model, x, y, v, gamma = 2.0, entropy_gradient = True)
        numeric =   _numeric_gradient(model, x, y, v, gamma = 2.0)

        assert result.objective == pytest.approx(_objective(model, x, y, v, gamma = 2.0), rel = 1e-12)
        assert norm(result.gradients.flatten() - numeric) / norm(numeric) <= 1e-4

    def test_linear_in_weights(self, make_model, make_dataset):
        data =      make_dataset(n = 16)
        model =     make_model(targets = data.y)
        v =         default_rng(0).uniform(0.0, 1.0, 16)

        single =    objective_and_gradient(model, data.x, data.y, v).gradients.flatten()
        double =    objective_and_gradient(model, data.x, data.y, 2 * v).gradients.flatten()

        assert_allclose(double, 2 * single, rtol = 1e-12)

    def test_unit_weight_isolates_a_sample(self, make_model, make_dataset):
        data =      make_dataset(n = 8)
        model =     make_model(targets = data.y)
        v =         zeros(8)
        v[3] =      1.0

        masked =    objective_and_gradient(model, data.x, data.y, v).gradients.flatten()
        alone =     objective_and_gradient(model, data.x[3:4], data.y[3:4], ones(1)).gradients.flatten()

        assert_allclose(masked, alone, rtol = 1e-10, atol = 1e-14)

    def test_negative_weights(self, make_model, make_dataset):
        data =      make_dataset(n = 4)

        with pytest.raises(UsageError):
            objective_and_gradient(make_model(targets = data.y), data.x, data.y, -ones(4))


class TestGradientEpoch:

    def test_small_steps_ascend_the_objective(self, make_model, make_dataset):
        monotone =  0

        for trial in range(20):
            data =      make_dataset(n = 48, seed = trial)
            model =     make_model(targets = data.y, seed = trial)
            v =         default_rng(trial).uniform(0.2, 1.0, 48)
            optimizer = SGDOptimizer(learning_rate = 1e-3)
            rng =       default_rng(trial)
            values =    [_objective(model, data.x, data.y, v)]

            for _ in range(10):
                weighted_gradient_epoch(model, data.x, data.y, v, optimizer, steps = 1, rng = rng, batch_size = 48)
                values.append(_objective(model, data.x, data.y, v))

            monotone += all(b >= a - 1e-12 * abs(a) for a, b in zip(values, values[1:]))

        assert monotone >= 19

    def test_zero_weights_are_never_drawn(self, make_model, make_dataset, monkeypatch):
        data =      make_dataset(n = 20)
        model =     make_model(targets = data.y)
        v =         zeros(20)
        v[[2, 5, 11]] = 1.0
        seen =      []
        original =  trainer_module.objective_and_gradient

        def spy(model, x, y, weights, **kwargs):
            seen.extend(y.tolist())
            return original(model, x, y, weights, **kwargs)

        monkeypatch.setattr(trainer_module, "objective_and_gradient", spy)

        weighted_gradient_epoch(model, data.x, data.y, v, SGDOptimizer(0.01), steps = 7, rng = default_rng(0), batch_size = 2)

        assert set(seen) <= set(data.y[[2, 5, 11]].tolist())
        # Batches of two over three samples alternate with the remainder of one.
        assert len(seen) == 11

    def test_no_effective_samples(self, make_model, make_dataset):
        data =      make_dataset(n = 6)

        with pytest.raises(NoEffectiveSamplesError):
            weighted_gradient_epoch(
                make_model(targets = data.y), data.x, data.y, zeros(6), SGDOptimizer(0.1), steps = 1, rng = default_rng(0)
            )

    def test_divergence(self, make_model, make_dataset, monkeypatch):
        data =      make_dataset(n = 8)
        model =     make_model(targets = data.y)
        real =      objective_and_gradient(model, data.x, data.y, ones(8))

        monkeypatch.setattr(
            trainer_module, "objective_and_gradient",
            lambda *args, **kwargs: GradientResult(float("nan"), real.gradients, real.likelihood)
        )

        with pytest.raises(DivergenceError) as error:
            weighted_gradient_epoch(
                model, data.x, data.y, ones(8), SGDOptimizer(0.1), steps = 3, rng = default_rng(0), pace = 4, first_step = 10
            )

        assert error.value.pace == 4
        assert error.value.step == 10

    def test_non_finite_gradient_skips_the_step(self, make_model, make_dataset, monkeypatch):
        data =      make_dataset(n = 8)
        model =     make_model(targets = data.y)
        real =      objective_and_gradient(model, data.x, data.y, ones(8))
        broken =    real.gradients.scaled(float("nan"))
        before =    model.backbone.flatten()
        optimizer = SGDOptimizer(0.1)

        monkeypatch.setattr(
            trainer_module, "objective_and_gradient",
            lambda *args, **kwargs: GradientResult(real.objective, broken, real.likelihood)
        )

        weighted_gradient_epoch(model, data.x, data.y, ones(8), optimizer, steps = 2, rng = default_rng(0))

        assert_array_equal(model.backbone.flatten(), before)
        assert optimizer.steps == 0


class TestModes:

    def test_drf_is_a_single_unweighted_pace(self, tiny_config):
        resolved =  tiny_config(mode = "DRF").resolved()

        assert resolved.pace.pace_count == 1
        assert resolved.pace.initial_fraction == 1.0
        assert resolved.pace.gamma_initial == 0.0
        assert resolved.pace.weighting == "hard"
        assert resolved.pace.curriculum_count == 0

    def test_sp_drf_drops_entropy_and_curriculum(self, tiny_config):
        resolved =  tiny_config(mode = "SP-DRF").resolved()

        assert resolved.pace.gamma_initial == 0.0
        assert resolved.pace.curriculum_count == 0
        assert resolved.pace.curriculum_threshold is None
        assert resolved.pace.pace_count == 3

    def test_spudrf_is_unchanged(self, tiny_config):
        config =    tiny_config()

        assert config.resolved() == config

    def test_spudrf_keeps_hard_weighting_with_a_warning(self, tiny_config, caplog):
        config =    tiny_config(pace = PaceConfig(pace_count = 3, weighting = "hard"))

        with caplog.at_level("WARNING", logger = "gradatim"):
            trainer =   Trainer(config, progress = False)

        assert trainer.config.pace.weighting == "hard"
        assert "experimental" in caplog.text

    def test_mixture_weighting_is_quiet(self, tiny_config, caplog):
        with caplog.at_level("WARNING", logger = "gradatim"):
            Trainer(tiny_config(), progress = False)

        assert "experimental" not in caplog.text

    def test_unknown_mode(self):
        with pytest.raises(InvalidConfigValueError):
            TrainConfig(mode = "GBDT")


class TestTrainer:

    def test_drf_run(self, tiny_config, make_dataset):
        data =          make_dataset(n = 60)
        model, report = train(tiny_config(mode = "DRF"), data)

        assert len(report.paces) == 1
        assert report.final.n_selected == 60
        assert report.final.n_zero == 0
        assert report.final.n_soft == 0
        assert report.final.gamma == 0.0
        assert report.final.n_duplicates == 0
        assert report.final.test is None

    def test_spudrf_schedule(self, tiny_config, make_dataset):
        data =          make_dataset(n = 60)
        test =          make_dataset(n = 20, seed = 1, name = "test")
        model, report = train(tiny_config(), data, test)

        assert [p.pace for p in report.paces] == [1, 2, 3]
        assert [p.gamma for p in report.paces] == [15.0, 7.5, 0.0]
        assert [p.n_samples for p in report.paces] == [60, 64, 68]
        assert all(p.n_duplicates == 4 for p in report.paces)
        assert report.paces[-1].n_selected == 68
        assert report.warmup["steps"] == 20
        assert report.final.test.n_samples == 20

    def test_runs_are_reproducible(self, tiny_config, make_dataset):
        data =          make_dataset(n = 50)
        test =          make_dataset(n = 15, seed = 2, name = "test")

        first_model, first =    train(tiny_config(seed = 3), data, test)
        second_model, second =  train(tiny_config(seed = 3), data, test)

        assert first.trace() == second.trace()
        assert first_model.to_dict() == second_model.to_dict()

    def test_seeds_matter(self, tiny_config, make_dataset):
        data =          make_dataset(n = 50)

        first, _ =      train(tiny_config(seed = 1), data)
        second, _ =     train(tiny_config(seed = 2), data)

        assert first.to_dict() != second.to_dict()

    def test_spudrf_without_entropy_or_curriculum_is_sp_drf(self, tiny_config, make_dataset):
        data =          make_dataset(n = 50)
        test =          make_dataset(n = 10, seed = 5, name = "test")
        pace =          PaceConfig(pace_count = 3, gamma_initial = 0.0, curriculum_count = 0)

        spudrf, spudrf_report = train(tiny_config(pace = pace), data, test)
        sp_drf, sp_drf_report = train(tiny_config(mode = "SP-DRF", pace = pace), data, test)

        assert spudrf_report.trace() == sp_drf_report.trace()
        assert spudrf.to_dict() == sp_drf.to_dict()

    def test_paces_start_from_previous_parameters(self, tiny_config, make_dataset, monkeypatch):
        data =          make_dataset(n = 40)
        calls =         []
        original =      trainer_module.weighted_gradient_epoch

        def spy(model, **kwargs):
            before =    model.backbone.flatten()
            original(model = model, **kwargs)
            calls.append((kwargs["pace"], before, model.backbone.flatten()))

        monkeypatch.setattr(trainer_module, "weighted_gradient_epoch", spy)

        config =        tiny_config(optimizer = OptimizerConfig(
                            learning_rate = 0.05, steps_per_pace = 10, batch_size = 8, leaf_update_interval = 4
                        ))
        train(config, data)

        # Every phase runs in chunks of at most four steps.
        assert [pace for pace, _, _ in calls] == [0] * 5 + [1] * 3 + [2] * 3 + [3] * 3

        for (_, _, after), (_, before, _) in zip(calls, calls[1:]):
            assert_array_equal(before, after)

    def test_zero_step_paces_only_update_leaves(self, tiny_config, make_dataset):
        data =          make_dataset(n = 40)
        config =        tiny_config(warmup_steps = 0, optimizer = OptimizerConfig(steps_per_pace = 0))
        trainer =       Trainer(config, progress = False)

        model, report = trainer.train(data)

        assert len(report.paces) == 3
        assert all(p.batch_seed >= 0 for p in report.paces)

    def test_curriculum_beyond_training_set(self, tiny_config, make_dataset):
        config =    tiny_config(pace = PaceConfig(pace_count = 2, curriculum_count = 30))

        with pytest.raises(InvalidConfigValueError):
            train(config, make_dataset(n = 20))

    def test_empty_training_set(self, tiny_config, make_dataset):
        empty =     make_dataset(n = 10).subset([])

        with pytest.raises(UsageError):
            train(tiny_config(), empty)

    def test_trainer_reports_effective_config(self, tiny_config):
        trainer =   Trainer(tiny_config(mode = "DRF"))

        assert trainer.config.pace.pace_count == 1
        assert "DRF" in repr(trainer)


class TestEvaluate:

    def test_metrics(self, make_model, make_dataset):
        data =      make_dataset(n = 25)
        model =     make_model(targets = data.y)
        result =    evaluate(model, data, cs_level = 1e9)

        assert result.cs == 100.0
        assert result.n_samples == 25
        assert result.mae >= 0.0

    def test_empty(self, make_model, make_dataset):
        data =      make_dataset(n = 5)

        with pytest.raises(UsageError):
            evaluate(make_model(targets = data.y), data.subset([]))
