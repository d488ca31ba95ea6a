"""# gradatim.backbone.network

Analytic forward & backward passes and the SGD update for the fully-connected feature extractor.

Every function accepts either a single input vector [D_x] or a mini-batch [B × D_x]; outputs keep 
the rank of the input. Batch reductions go through NumPy matrix products, which are deterministic 
for a fixed array layout.
"""

__all__ =   [
                "ForwardCache",
                "backward",
                "forward",
                "sgd_step",
            ]

from dataclasses                    import dataclass
from typing                         import List, Tuple

from numpy                          import asarray, atleast_2d, float64, isfinite, ndarray, tanh
from scipy.special                  import expit

from gradatim.backbone.exceptions   import NonFiniteGradientError, NonFiniteInputError, \
                                           ShapeMismatchError, StaleCacheError
from gradatim.backbone.params       import Activation, BackboneGradients, BackboneParams, Layer
from gradatim.exceptions            import UsageError


@dataclass
class ForwardCache:
    """# Forward Pass Cache.

    ## Attributes:
        * activations   (List[ndarray]):    Layer inputs/outputs a_0 (the batch) ... a_L.
        * version       (int):              Parameter version the pass was computed with.
        * batched       (bool):             Whether the caller passed a batch.
    """
    activations:    List[ndarray]
    version:        int
    batched:        bool


def _activate_(
    z:          ndarray,
    activation: Activation
) -> ndarray:
    """# Apply Activation."""
    if activation == "tanh":    return tanh(z)
    if activation == "sigmoid": return expit(z)
    return z


def _derivative_(
    a:          ndarray,
    activation: Activation
) -> ndarray:
    """# Activation Derivative, Expressed through the Activation Output."""
    if activation == "tanh":    return 1.0 - a * a
    if activation == "sigmoid": return a * (1.0 - a)
    return None


def forward(
    x:      ndarray,
    params: BackboneParams
) -> Tuple[ndarray, ForwardCache]:
    """# Compute Features f(x; Θ).

    ## Args:
        * x         (ndarray):          Input vector [D_x] or batch [B × D_x].
        * params    (BackboneParams):   Backbone parameters.

    ## Raises:
        * ShapeMismatchError:   If the input width differs from the first layer's.
        * NonFiniteInputError:  If the input contains NaN or infinite entries.

    ## Returns:
        * ndarray:      Features [feature_dim] or [B × feature_dim].
        * ForwardCache: Intermediate activations for the backward pass.
    """
    inputs: ndarray =   asarray(x, dtype = float64)
    batch:  ndarray =   atleast_2d(inputs)

    # Validate input.
    if batch.shape[1] != params.input_dim:
        raise ShapeMismatchError("backbone input", (params.input_dim,), batch.shape[1:])

    if not isfinite(batch).all(): raise NonFiniteInputError(count = int((~isfinite(batch)).sum()))

    activations:    List[ndarray] = [batch]

    for layer in params.layers:
        activations.append(_activate_(
            activations[-1] @ layer.weight.T + layer.bias,
            layer.activation
        ))

    batched:    bool =  inputs.ndim == 2
    features:   ndarray = activations[-1] if batched else activations[-1][0]

    return features, ForwardCache(activations, params.version, batched)


def backward(
    grad_f: ndarray,
    cache:  ForwardCache,
    params: BackboneParams
) -> BackboneGradients:
    """# Back-Propagate a Feature Gradient to All Parameters.

    For a batch, per-sample parameter gradients are summed.

    ## Args:
        * grad_f    (ndarray):          ∂loss/∂f, shaped like the forward output.
        * cache     (ForwardCache):     Cache from the matching forward call.
        * params    (BackboneParams):   Parameters the forward call used.

    ## Raises:
        * StaleCacheError:      If parameters changed after the forward call.
        * ShapeMismatchError:   If the upstream gradient does not match the features.

    ## Returns:
        * BackboneGradients:    Gradients for every weight & bias.
    """
    if cache.version != params.version:
        raise StaleCacheError(cache_version = cache.version, params_version = params.version)

    delta:  ndarray =   atleast_2d(grad_f).astype(float64, copy = False)

    if delta.shape != cache.activations[-1].shape:
        raise ShapeMismatchError("feature gradient", cache.activations[-1].shape, delta.shape)

    weights:    List[ndarray] = [None] * len(params.layers)
    biases:     List[ndarray] = [None] * len(params.layers)

    for l in reversed(range(len(params.layers))):
        layer:      Layer =     params.layers[l]
        derivative: ndarray =   _derivative_(cache.activations[l + 1], layer.activation)

        # Through the nonlinearity.
        if derivative is not None: delta = delta * derivative

        weights[l] =    delta.T @ cache.activations[l]
        biases[l] =     delta.sum(axis = 0)

        # Into the previous layer's output.
        delta =         delta @ layer.weight

    return BackboneGradients(weights = weights, biases = biases)


def sgd_step(
    params:         BackboneParams,
    grads:          BackboneGradients,
    learning_rate:  float
) -> BackboneParams:
    """# Apply One SGD Update in Place.

    params ← params − learning_rate × grads. Ascent on an objective is realized by passing the 
    gradient of its negative.

    ## Args:
        * params        (BackboneParams):       Parameters to update.
        * grads         (BackboneGradients):    Gradients with matching shapes.
        * learning_rate (float):                Step size (>= 0).

    ## Raises:
        * NonFiniteGradientError:   If any gradient entry is NaN or infinite; nothing is updated.
        * ShapeMismatchError:       If gradient shapes differ from parameter shapes.

    ## Returns:
        * BackboneParams:   The updated parameters (same object).
    """
    if learning_rate < 0: raise UsageError(f"Learning rate must be >= 0, got {learning_rate}")

    # Validate everything before writing anything.
    for l, (layer, dw, db) in enumerate(zip(params.layers, grads.weights, grads.biases)):

        if dw.shape != layer.weight.shape:
            raise ShapeMismatchError(f"layer {l} weight gradient", layer.weight.shape, dw.shape)

        if db.shape != layer.bias.shape:
            raise ShapeMismatchError(f"layer {l} bias gradient", layer.bias.shape, db.shape)

        if not (isfinite(dw).all() and isfinite(db).all()): raise NonFiniteGradientError(layer = l)

    for layer, dw, db in zip(params.layers, grads.weights, grads.biases):
        layer.weight -= learning_rate * dw
        layer.bias -=   learning_rate * db

    # Invalidate outstanding caches.
    params.version += 1

    return params
