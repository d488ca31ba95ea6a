"""# gradatim.backbone.config

Feature backbone configuration.
"""

__all__ = ["BackboneConfig"]

from dataclasses                        import dataclass, field
from typing                             import List, Literal

from gradatim.configuration.exceptions  import InvalidConfigValueError

@dataclass
class BackboneConfig:
    """# Feature Backbone Configuration.

    ## Attributes:
        * hidden_widths (List[int]):    Widths of the hidden layers. Defaults to [64, 64].
        * feature_dim   (int):          Output width, i.e. number of features available to split 
                                        nodes. Defaults to 128.
        * activation    (str):          Hidden-layer nonlinearity. Defaults to "tanh".
    """
    hidden_widths:  List[int] =                     field(default_factory = lambda: [64, 64])
    feature_dim:    int =                           128
    activation:     Literal["tanh", "sigmoid"] =    "tanh"

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if any(w < 1 for w in self.hidden_widths):
            raise InvalidConfigValueError("hidden_widths", self.hidden_widths, "widths must be >= 1")

        if self.feature_dim < 1:
            raise InvalidConfigValueError("feature_dim", self.feature_dim, "must be >= 1")

        if self.activation not in ("tanh", "sigmoid"):
            raise InvalidConfigValueError("activation", self.activation, "expected tanh or sigmoid")
