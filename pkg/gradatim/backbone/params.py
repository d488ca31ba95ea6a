"""# gradatim.backbone.params

Backbone parameter containers, initialization & serialization.
"""

__all__ =   [
                "BackboneGradients",
                "BackboneParams",
                "Layer",
                "initialize_backbone",
            ]

from dataclasses                    import dataclass, field
from typing                         import Any, Dict, List, Literal, Sequence

from numpy                          import asarray, concatenate, float64, isfinite, ndarray, sqrt, zeros
from numpy.random                   import Generator

from gradatim.backbone.exceptions   import NonFiniteParameterError, ShapeMismatchError

# Hidden layers use a smooth nonlinearity; the output layer is affine.
Activation = Literal["tanh", "sigmoid", "identity"]


@dataclass
class Layer:
    """# Affine Layer with Activation.

    ## Attributes:
        * weight        (ndarray):  Weight matrix [out × in].
        * bias          (ndarray):  Bias vector [out].
        * activation    (str):      Activation tag.
    """
    weight:     ndarray
    bias:       ndarray
    activation: Activation =    "identity"

    @property
    def fan_in(self) -> int:
        """# Layer Input Width"""
        return self.weight.shape[1]

    @property
    def fan_out(self) -> int:
        """# Layer Output Width"""
        return self.weight.shape[0]


@dataclass
class BackboneGradients:
    """# Gradients w.r.t. Backbone Parameters.

    Shapes mirror the layers of the parameters they were computed for.
    """
    weights:    List[ndarray]
    biases:     List[ndarray]

    def scaled(self,
        factor: float
    ) -> "BackboneGradients":
        """# Scale Gradients.

        ## Args:
            * factor    (float):    Multiplicative factor.

        ## Returns:
            * BackboneGradients:    New, scaled gradients.
        """
        return  BackboneGradients(
                    weights =   [w * factor for w in self.weights],
                    biases =    [b * factor for b in self.biases]
                )

    def flatten(self) -> ndarray:
        """# Flatten to a Single Vector (weights then bias, layer by layer)."""
        return concatenate([p.ravel() for pair in zip(self.weights, self.biases) for p in pair])


@dataclass
class BackboneParams:
    """# Feature Backbone Parameters (Θ).

    `version` increases with every in-place update so that forward caches can detect staleness.
    """
    layers:     List[Layer]
    version:    int =           field(default = 0, compare = False)

    def __post_init__(self) -> None:
        """# Validate Layer Composition & Finiteness."""
        if len(self.layers) == 0: raise ShapeMismatchError("backbone", ">= 1 layer", 0)

        for l, layer in enumerate(self.layers):

            # Bias must match the output width.
            if layer.bias.shape != (layer.fan_out,):
                raise ShapeMismatchError(f"layer {l} bias", (layer.fan_out,), layer.bias.shape)

            for name, values in (("weight", layer.weight), ("bias", layer.bias)):
                if not isfinite(values).all():
                    raise NonFiniteParameterError(f"layer {l} {name}", int((~isfinite(values)).sum()))

            # Consecutive layers must compose.
            if l > 0 and layer.fan_in != self.layers[l - 1].fan_out:
                raise ShapeMismatchError(
                    f"layer {l} weight", (layer.fan_out, self.layers[l - 1].fan_out),
                    layer.weight.shape
                )

    # PROPERTIES ===================================================================================

    @property
    def feature_dim(self) -> int:
        """# Output Width"""
        return self.layers[-1].fan_out

    @property
    def input_dim(self) -> int:
        """# Input Width"""
        return self.layers[0].fan_in

    @property
    def is_finite(self) -> bool:
        """# All Parameter Entries Finite?"""
        return all(isfinite(l.weight).all() and isfinite(l.bias).all() for l in self.layers)

    # METHODS ======================================================================================

    def copy(self) -> "BackboneParams":
        """# Deep Copy of Parameters."""
        return  BackboneParams(
                    layers =    [
                                    Layer(l.weight.copy(), l.bias.copy(), l.activation)
                                    for l in self.layers
                                ],
                    version =   self.version
                )

    def flatten(self) -> ndarray:
        """# Flatten to a Single Vector (weights then bias, layer by layer)."""
        return concatenate([p.ravel() for l in self.layers for p in (l.weight, l.bias)])

    def load_flat(self,
        vector: ndarray
    ) -> None:
        """# Overwrite Parameters from a Flat Vector.

        ## Args:
            * vector    (ndarray):  Flat vector in `flatten()` order.
        """
        offset: int =   0

        for layer in self.layers:
            for p in (layer.weight, layer.bias):
                p[...] = vector[offset:offset + p.size].reshape(p.shape); offset += p.size

        if offset != len(vector): raise ShapeMismatchError("flat parameters", offset, len(vector))

        # Invalidate caches.
        self.version += 1

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a JSON-Ready Mapping."""
        return  {
                    "layers":       [
                                        {
                                            "w":            l.weight.tolist(),
                                            "b":            l.bias.tolist(),
                                            "activation":   l.activation
                                        }
                                        for l in self.layers
                                    ],
                    "feature_dim":  self.feature_dim
                }

    @classmethod
    def from_dict(cls,
        data:   Dict[str, Any]
    ) -> "BackboneParams":
        """# Deserialize from Mapping.

        ## Args:
            * data  (Dict[str, Any]):   Mapping produced by `to_dict`.

        ## Returns:
            * BackboneParams:   Restored parameters.
        """
        layers: List[Layer] =   []

        for l, entry in enumerate(data["layers"]):
            layers.append(Layer(
                weight =        asarray(entry["w"], dtype = float64),
                bias =          asarray(entry["b"], dtype = float64),
                activation =    entry.get(
                                    "activation",
                                    "identity" if l == len(data["layers"]) - 1 else "tanh"
                                )
            ))

        params: BackboneParams =    cls(layers = layers)

        # Declared width must agree with the last layer.
        if params.feature_dim != int(data["feature_dim"]):
            raise ShapeMismatchError("feature_dim", data["feature_dim"], params.feature_dim)

        return params


def initialize_backbone(
    input_dim:      int,
    hidden_widths:  Sequence[int],
    feature_dim:    int,
    rng:            Generator,
    activation:     Activation =    "tanh"
) -> BackboneParams:
    """# Initialize Backbone Parameters.

    Weights are drawn uniformly in [-s, s] with s = sqrt(6 / (fan_in + fan_out)); biases are zero.

    ## Args:
        * input_dim     (int):              Width of the raw input.
        * hidden_widths (Sequence[int]):    Hidden layer widths.
        * feature_dim   (int):              Output width.
        * rng           (Generator):        Seeded generator.
        * activation    (str):              Hidden-layer nonlinearity. Defaults to "tanh".

    ## Returns:
        * BackboneParams:   Freshly initialized parameters.
    """
    widths: List[int] =     [input_dim, *hidden_widths, feature_dim]
    layers: List[Layer] =   []

    for l, (fan_in, fan_out) in enumerate(zip(widths[:-1], widths[1:])):

        # Symmetric uniform bound.
        bound:  float = float(sqrt(6.0 / (fan_in + fan_out)))

        layers.append(Layer(
            weight =        rng.uniform(-bound, bound, size = (fan_out, fan_in)),
            bias =          zeros(fan_out),
            activation =    activation if l < len(widths) - 2 else "identity"
        ))

    return BackboneParams(layers = layers)
