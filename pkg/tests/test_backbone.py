"""Backbone forward/backward passes & the SGD optimizer."""

import pytest

from numpy                  import array, ones, zeros
from numpy.random           import default_rng
from numpy.testing          import assert_allclose, assert_array_equal

from gradatim.backbone      import BackboneGradients, BackboneParams, Layer, NonFiniteGradientError, \
                                   NonFiniteInputError, NonFiniteParameterError, SGDOptimizer, ShapeMismatchError, \
                                   StaleCacheError, backward, forward, initialize_backbone, sgd_step
from gradatim.exceptions    import UsageError


@pytest.fixture
def params() -> BackboneParams:
    return initialize_backbone(input_dim = 3, hidden_widths = [5, 4], feature_dim = 6, rng = default_rng(7))


class TestForward:

    def test_shapes(self, params):
        features, _ =   forward(default_rng(0).normal(size = (10, 3)), params)
        single, _ =     forward(default_rng(0).normal(size = 3), params)

        assert features.shape == (10, 6)
        assert single.shape == (6,)

    def test_single_sample_matches_batch_row(self, params):
        x =             default_rng(1).normal(size = (4, 3))
        batch, _ =      forward(x, params)
        row, _ =        forward(x[2], params)

        assert_allclose(row, batch[2], rtol = 0, atol = 1e-15)

    def test_wrong_width(self, params):
        with pytest.raises(ShapeMismatchError):
            forward(ones((2, 4)), params)

    def test_non_finite_input(self, params):
        x =         ones((2, 3))
        x[1, 0] =   float("nan")

        with pytest.raises(NonFiniteInputError):
            forward(x, params)

    def test_last_layer_is_affine(self, params):
        assert params.layers[-1].activation == "identity"
        assert all(layer.activation == "tanh" for layer in params.layers[:-1])


class TestBackward:

    def test_matches_finite_differences(self, params):
        rng =           default_rng(3)
        x =             rng.normal(size = (5, 3))
        direction =     rng.normal(size = (5, 6))

        features, cache =   forward(x, params)
        analytic =          backward(direction, cache, params).flatten()

        theta =         params.flatten()
        numeric =       zeros(len(theta))
        h =             1e-6

        for j in range(len(theta)):
            shifted =       theta.copy()
            shifted[j] +=   h
            params.load_flat(shifted)
            up =            (forward(x, params)[0] * direction).sum()

            shifted[j] -=   2 * h
            params.load_flat(shifted)
            down =          (forward(x, params)[0] * direction).sum()

            numeric[j] =    (up - down) / (2 * h)

        params.load_flat(theta)

        assert_allclose(analytic, numeric, rtol = 1e-5, atol = 1e-7)

    def test_stale_cache(self, params):
        _, cache =  forward(ones((2, 3)), params)
        params.load_flat(params.flatten())

        with pytest.raises(StaleCacheError):
            backward(ones((2, 6)), cache, params)

    def test_gradient_shape_mismatch(self, params):
        _, cache =  forward(ones((2, 3)), params)

        with pytest.raises(ShapeMismatchError):
            backward(ones((3, 6)), cache, params)


class TestSGD:

    def test_step_moves_against_gradient(self, params):
        before =    params.flatten()
        grads =     BackboneGradients(
                        weights =   [ones(l.weight.shape) for l in params.layers],
                        biases =    [ones(l.bias.shape) for l in params.layers]
                    )

        sgd_step(params, grads, learning_rate = 0.1)

        assert_allclose(params.flatten(), before - 0.1)

    def test_non_finite_gradient_leaves_params_untouched(self, params):
        before =            params.flatten()
        weights =           [zeros(l.weight.shape) for l in params.layers]
        weights[-1][0, 0] = float("inf")

        with pytest.raises(NonFiniteGradientError):
            sgd_step(params, BackboneGradients(weights, [zeros(l.bias.shape) for l in params.layers]), 0.1)

        assert_array_equal(params.flatten(), before)

    def test_optimizer_ascends_and_decays(self):
        params =    BackboneParams(layers = [Layer(array([[0.0]]), array([0.0]))])
        optimizer = SGDOptimizer(learning_rate = 1.0, decay_factor = 0.5, decay_every = 2)
        grads =     BackboneGradients(weights = [array([[1.0]])], biases = [array([0.0])])

        for _ in range(3): optimizer.ascend(params, grads)

        # Two steps at 1.0, one at 0.5.
        assert params.layers[0].weight[0, 0] == pytest.approx(2.5)
        assert optimizer.steps == 3
        assert optimizer.learning_rate == pytest.approx(0.5)

    def test_skipped_step_does_not_count(self):
        params =    BackboneParams(layers = [Layer(array([[0.0]]), array([0.0]))])
        optimizer = SGDOptimizer(learning_rate = 1.0)

        with pytest.raises(NonFiniteGradientError):
            optimizer.ascend(params, BackboneGradients([array([[float("nan")]])], [array([0.0])]))

        assert optimizer.steps == 0


class TestSerialization:

    def test_dict_round_trip(self, params):
        restored =  BackboneParams.from_dict(params.to_dict())

        assert_array_equal(restored.flatten(), params.flatten())
        assert [l.activation for l in restored.layers] == [l.activation for l in params.layers]

    @pytest.mark.parametrize("key", ["w", "b"])
    def test_non_finite_entries_are_rejected(self, params, key):
        data =                      params.to_dict()
        data["layers"][1][key] =    (array(data["layers"][1][key]) * float("nan")).tolist()

        with pytest.raises(NonFiniteParameterError, match = "layer 1") as error:
            BackboneParams.from_dict(data)

        assert isinstance(error.value, UsageError)
