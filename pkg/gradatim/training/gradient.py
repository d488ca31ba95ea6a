"""# gradatim.training.gradient

Weighted forest objective and its gradient with respect to the backbone parameters.

For a batch, the objective is Σ_i v_i log p_F(y_i | x_i), optionally plus γ Σ_i v_i H_i. The 
gradient reaches each split activation f_φ(n) through the routing probabilities: the likelihood 
term weights each leaf by v_i r_ik ζ_kℓ(i) (tree share times leaf posterior), the entropy term by 
γ v_i ω_kℓ h_kℓ / K. Split gradients are scattered onto the features and back-propagated.
"""

__all__ =   [
                "GradientResult",
                "objective_and_gradient",
            ]

from dataclasses                    import dataclass

from numpy                          import add, asarray, atleast_1d, exp, float64, ndarray, zeros_like
from scipy.special                  import logsumexp

from gradatim.backbone              import BackboneGradients, backward
from gradatim.forest                import ForestModel, LikelihoodResult, leaf_entropy_terms, \
                                           posteriors_from_log_terms, split_gradient
from gradatim.exceptions            import UsageError

@dataclass
class GradientResult:
    """# Objective & Gradient of a Batch.

    ## Attributes:
        * objective     (float):                Weighted objective value.
        * gradients     (BackboneGradients):    Gradient of the objective (summed over the batch).
        * likelihood    (LikelihoodResult):     Forest log-likelihoods the objective used.
    """
    objective:  float
    gradients:  BackboneGradients
    likelihood: LikelihoodResult


def objective_and_gradient(
    model:              ForestModel,
    x:                  ndarray,
    y:                  ndarray,
    weights:            ndarray,
    gamma:              float =         0.0,
    entropy_gradient:   bool =          False
) -> GradientResult:
    """# Weighted Objective & Backbone Gradient.

    Samples whose forest density sits at the floor contribute to the objective but not to the 
    gradient; so does any tree whose own density is floored.

    ## Args:
        * model             (ForestModel):  Forest being trained.
        * x                 (ndarray):      Inputs [B × D_x].
        * y                 (ndarray):      Targets [B].
        * weights           (ndarray):      Non-negative sample weights v [B].
        * gamma             (float):        Entropy coefficient. Defaults to 0.
        * entropy_gradient  (bool):         Include γ Σ v H in the objective. Defaults to False.

    ## Returns:
        * GradientResult:   Objective value, backbone gradient & likelihoods.
    """
    v:          ndarray =           atleast_1d(asarray(weights, dtype = float64))

    if (v < 0).any(): raise UsageError("Sample weights must be non-negative")

    result:     LikelihoodResult =  model.log_likelihood(x, y)
    routing =                       result.routing

    # Tree shares r_ik; floored trees & samples carry no gradient.
    shares:     ndarray =           exp(
                                        result.tree_values - logsumexp(result.tree_values, axis = 1, keepdims = True)
                                    )
    shares =                        shares * ~result.tree_floored * ~result.floored[:, None]

    objective:  float =             float(v @ result.values)
    grad_f:     ndarray =           zeros_like(routing.features)

    if entropy_gradient and gamma:
        entropies:  ndarray =       model.entropy(x, routing = routing)
        objective +=                gamma * float(v @ entropies)

    for k, tree in enumerate(model.trees):

        leaf_weights:   ndarray =   (v * shares[:, k])[:, None] \
                                    * posteriors_from_log_terms(result.log_terms[k], routing.omega[k])

        if entropy_gradient and gamma:
            leaf_weights =          leaf_weights + (gamma * v / model.tree_count)[:, None] \
                                    * routing.omega[k] * leaf_entropy_terms(tree.leaves)

        # Split activations index features through φ; repeated indices accumulate.
        add.at(
            grad_f.T,
            tree.topology.phi,
            split_gradient(leaf_weights, routing.split_probs[k], tree.topology).T
        )

    return  GradientResult(
                objective =     objective,
                gradients =     backward(grad_f, routing.cache, model.backbone),
                likelihood =    result
            )
