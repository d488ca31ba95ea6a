"""Leaf parameter updates with the backbone & sample weights held fixed."""

import pytest

from numpy                  import array, concatenate, exp, full, log, maximum, ones, pi, zeros
from numpy.random           import default_rng
from numpy.testing          import assert_allclose, assert_array_equal
from scipy.special          import logsumexp

from gradatim.backbone      import BackboneParams, Layer
from gradatim.exceptions    import UsageError
from gradatim.forest        import ForestModel, LeafParams, LeafUpdateConfig, NoEffectiveSamplesError, \
                                   RegressionTree, TreeTopology, leaf_posteriors, update_leaves


def _half_split_model(mean, variance, trees = 1):
    """Depth-2 trees over a zero backbone, so every sample is routed 0.5 / 0.5."""
    backbone =  BackboneParams(layers = [Layer(zeros((2, 1)), zeros(2))])

    return  ForestModel(
                backbone =  backbone,
                trees =     [
                                RegressionTree(TreeTopology(depth = 2, phi = [0]), LeafParams(mean, variance))
                                for _ in range(trees)
                            ]
            )


def _two_cluster_data(seed):
    rng =   default_rng(seed)
    y =     concatenate((rng.normal(12.0, 2.0, 50), rng.normal(28.0, 3.0, 50)))
    v =     rng.uniform(0.0, 1.0, 100)
    v[::7] = 0.0

    return zeros((100, 1)), y, v


def _weighted_ll(model, x, y, v):
    return float(v @ model.log_likelihood(x, y).values)


class TestPosteriors:

    def test_rows_sum_to_one(self):
        zeta =  leaf_posteriors(array([0.0, 5.0]), array([[0.5, 0.5], [0.2, 0.8]]), LeafParams([0.0, 4.0], [1.0, 1.0]))

        assert_allclose(zeta.sum(axis = 1), 1.0, rtol = 1e-14)

    def test_underflow_falls_back_to_reachable_leaves(self):
        zeta =  leaf_posteriors(1e200, array([0.0, 0.5, 0.5]), LeafParams([0.0, 1.0, 2.0], [1e-4] * 3))

        assert_allclose(zeta, [0.0, 0.5, 0.5])


class TestUpdate:

    def test_matches_fixed_weight_mixture_em(self):
        x, y, v =   _two_cluster_data(seed = 0)
        model =     _half_split_model([10.0, 30.0], [25.0, 25.0])
        config =    LeafUpdateConfig(iterations = 30)

        model.assign_leaves(update_leaves(model, x, y, v, config))

        # Independent two-component EM with fixed mixing weights.
        mu, var =   array([10.0, 30.0]), array([25.0, 25.0])

        for _ in range(30):
            terms =     log(0.5) - 0.5 * log(2 * pi * var) - (y[:, None] - mu) ** 2 / (2 * var)
            q =         v[:, None] * exp(terms - logsumexp(terms, axis = 1, keepdims = True))
            mu =        (q.T @ y) / q.sum(axis = 0)
            var =       maximum((q * (y[:, None] - mu) ** 2).sum(axis = 0) / q.sum(axis = 0), 1e-4)

        oracle =    logsumexp(log(0.5) - 0.5 * log(2 * pi * var) - (y[:, None] - mu) ** 2 / (2 * var), axis = 1)

        assert abs(_weighted_ll(model, x, y, v) - float(v @ oracle)) < 1e-6
        assert_allclose(model.leaves[0].mean, mu, rtol = 1e-8)
        assert_allclose(model.leaves[0].variance, var, rtol = 1e-8)

    @pytest.mark.parametrize("seed", range(20))
    def test_weighted_likelihood_never_decreases(self, seed, make_model, make_dataset):
        data =      make_dataset(n = 64, seed = seed)
        model =     make_model(targets = data.y, seed = seed)
        v =         default_rng(100 + seed).uniform(0.0, 1.0, 64)
        v[:8] =     0.0
        config =    LeafUpdateConfig(iterations = 1)

        previous =  _weighted_ll(model, data.x, data.y, v)

        for _ in range(20):
            model.assign_leaves(update_leaves(model, data.x, data.y, v, config))
            current =   _weighted_ll(model, data.x, data.y, v)

            assert current >= previous - 1e-9 * max(1.0, abs(previous))

            previous =  current

    def test_zero_weight_samples_are_inert(self, make_model, make_dataset):
        data =      make_dataset(n = 60, seed = 4)
        model =     make_model(targets = data.y, seed = 4)
        v =         default_rng(4).uniform(0.0, 1.0, 60)
        v[::5] =    0.0
        keep =      v > 0

        full_set =  update_leaves(model, data.x, data.y, v, LeafUpdateConfig())
        trimmed =   update_leaves(model, data.x[keep], data.y[keep], v[keep], LeafUpdateConfig())

        for left, right in zip(full_set, trimmed):
            assert_array_equal(left.mean, right.mean)
            assert_array_equal(left.variance, right.variance)

    def test_weighted_maximum_is_a_fixed_point(self, make_model, make_dataset):
        data =      make_dataset(n = 40, seed = 3)
        v =         default_rng(3).uniform(0.1, 1.0, 40)
        mean =      float(v @ data.y / v.sum())
        variance =  float(v @ (data.y - mean) ** 2 / v.sum())

        model =     make_model(targets = data.y, depth = 1, trees = 3)
        model.assign_leaves([LeafParams([mean], [variance]) for _ in range(3)])

        updated =   update_leaves(model, data.x, data.y, v, LeafUpdateConfig(iterations = 1))

        for params in updated:
            assert abs(params.mean[0] - mean) < 1e-8
            assert abs(params.variance[0] - variance) < 1e-8

    def test_tree_coupling_updates_trees_independently(self):
        x, y, v =   _two_cluster_data(seed = 1)
        config =    LeafUpdateConfig(iterations = 5, coupling = "tree")

        single =    update_leaves(_half_split_model([10.0, 30.0], [9.0, 9.0]), x, y, v, config)
        paired =    update_leaves(_half_split_model([10.0, 30.0], [9.0, 9.0], trees = 2), x, y, v, config)

        for params in paired:
            assert_allclose(params.mean, single[0].mean, rtol = 1e-12)
            assert_allclose(params.variance, single[0].variance, rtol = 1e-12)

    def test_variance_floor(self):
        model =     _half_split_model([5.0, 5.0], [1.0, 1.0])
        updated =   update_leaves(model, zeros((10, 1)), full(10, 5.0), ones(10), LeafUpdateConfig(variance_floor = 1e-3))

        assert_array_equal(updated[0].variance, [1e-3, 1e-3])

    def test_model_is_not_modified(self, make_model, make_dataset):
        data =      make_dataset(n = 30)
        model =     make_model(targets = data.y)
        before =    model.leaf_snapshot()

        update_leaves(model, data.x, data.y, ones(30), LeafUpdateConfig())

        assert model.leaf_snapshot() == before

    def test_mini_batch_mode(self, make_model, make_dataset):
        data =      make_dataset(n = 50)
        model =     make_model(targets = data.y)
        config =    LeafUpdateConfig(batch_mode = "mini", batch_count = 4)

        first =     update_leaves(model, data.x, data.y, ones(50), config, rng = default_rng(9), batch_size = 8)
        second =    update_leaves(model, data.x, data.y, ones(50), config, rng = default_rng(9), batch_size = 8)

        assert [p.to_list() for p in first] == [p.to_list() for p in second]


class TestErrors:

    def test_all_zero_weights(self, make_model, make_dataset):
        data =  make_dataset(n = 10)

        with pytest.raises(NoEffectiveSamplesError):
            update_leaves(make_model(targets = data.y), data.x, data.y, zeros(10), LeafUpdateConfig())

    def test_weights_outside_unit_interval(self, make_model, make_dataset):
        data =  make_dataset(n = 10)

        with pytest.raises(UsageError):
            update_leaves(make_model(targets = data.y), data.x, data.y, full(10, 1.5), LeafUpdateConfig())

    def test_mini_batches_need_a_generator(self, make_model, make_dataset):
        data =  make_dataset(n = 10)

        with pytest.raises(UsageError):
            update_leaves(
                make_model(targets = data.y), data.x, data.y, ones(10), LeafUpdateConfig(batch_mode = "mini")
            )
