"""# gradatim.backbone

Fully-connected feature extractor whose outputs drive the split nodes.
"""

__all__ =   [
                # Configuration
                "BackboneConfig",

                # Parameters
                "BackboneGradients",
                "BackboneParams",
                "Layer",
                "initialize_backbone",

                # Network
                "ForwardCache",
                "backward",
                "forward",
                "sgd_step",

                # Optimizer
                "SGDOptimizer",

                # Exceptions
                "BackboneError",
                "NonFiniteGradientError",
                "NonFiniteInputError",
                "NonFiniteParameterError",
                "ShapeMismatchError",
                "StaleCacheError",
            ]

from gradatim.backbone.config       import BackboneConfig
from gradatim.backbone.exceptions   import *
from gradatim.backbone.network      import *
from gradatim.backbone.optimizer    import SGDOptimizer
from gradatim.backbone.params       import *
