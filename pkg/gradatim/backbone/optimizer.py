"""# gradatim.backbone.optimizer

Stochastic gradient descent with step-wise learning-rate halving.
"""

__all__ = ["SGDOptimizer"]

from logging                        import Logger

from gradatim.backbone.network      import sgd_step
from gradatim.backbone.params       import BackboneGradients, BackboneParams
from gradatim.utilities             import get_logger

class SGDOptimizer:
    """# SGD Optimizer State"""

    def __init__(self,
        learning_rate:  float,
        decay_factor:   float = 0.5,
        decay_every:    int =   1000
    ):
        """# Instantiate SGD Optimizer.

        ## Args:
            * learning_rate (float):    Initial step size.
            * decay_factor  (float):    Multiplier applied every `decay_every` steps. Defaults to 
                                        0.5.
            * decay_every   (int):      Number of optimizer steps between decays. Defaults to 1000.
        """
        # Initialize logger.
        self.__logger__:        Logger =    get_logger("sgd-optimizer")

        # Define properties.
        self._learning_rate_:   float =     learning_rate
        self._decay_factor_:    float =     decay_factor
        self._decay_every_:     int =       decay_every
        self._steps_:           int =       0

    # PROPERTIES ===================================================================================

    @property
    def learning_rate(self) -> float:
        """# Current Learning Rate"""
        return self._learning_rate_ * self._decay_factor_ ** (self._steps_ // self._decay_every_)

    @property
    def steps(self) -> int:
        """# Number of Applied Steps"""
        return self._steps_

    # METHODS ======================================================================================

    def ascend(self,
        params: BackboneParams,
        grads:  BackboneGradients
    ) -> BackboneParams:
        """# Take One Ascent Step on an Objective.

        ## Args:
            * params    (BackboneParams):       Parameters to update in place.
            * grads     (BackboneGradients):    Gradient of the objective being maximized.

        ## Raises:
            * NonFiniteGradientError:   If the gradient is not finite; the step counter is not 
                                        advanced.

        ## Returns:
            * BackboneParams:   The updated parameters.
        """
        sgd_step(params = params, grads = grads.scaled(-1.0), learning_rate = self.learning_rate)

        self._steps_ += 1

        # Debug schedule boundaries.
        if self._steps_ % self._decay_every_ == 0:
            self.__logger__.debug(f"Step {self._steps_}: learning rate -> {self.learning_rate}")

        return params

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Optimizer Object Representation"""
        return f"""<SGDOptimizer(learning_rate = {self.learning_rate}, steps = {self._steps_})>"""
