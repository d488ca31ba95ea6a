"""# gradatim.forest.entropy

Closed-form lower bound on the entropy of a tree's predictive mixture, the forest average used for 
selection, and a Monte Carlo estimate of the exact mixture entropy for verification.
"""

__all__ =   [
                "forest_entropy",
                "leaf_entropy_terms",
                "mc_entropy_oracle",
                "tree_entropy",
            ]

from typing                         import Tuple, TYPE_CHECKING, Union

from numpy                          import asarray, atleast_1d, atleast_2d, float64, log, ndarray, \
                                           pi, sqrt
from scipy.special                  import logsumexp

from gradatim.exceptions            import UsageError
from gradatim.forest.density        import check_routing, log_gaussian
from gradatim.forest.tree           import LeafParams
from gradatim.utilities.system      import make_generator

# Defer until runtime.
if TYPE_CHECKING:
    from gradatim.forest.model      import ForestModel

# Smallest sample count accepted by the Monte Carlo estimate.
MIN_ORACLE_SAMPLES: int = 1000


def leaf_entropy_terms(
    leaves: LeafParams
) -> ndarray:
    """# Per-Leaf Gaussian Entropies ½ [ln(2π σ²_ℓ) + 1]."""
    return 0.5 * (log(2.0 * pi * leaves.variance) + 1.0)


def tree_entropy(
    omega:  ndarray,
    leaves: LeafParams
) -> Union[float, ndarray]:
    """# Mixture Entropy Lower Bound H_T = ½ Σ_ℓ ω_ℓ [ln(2π σ²_ℓ) + 1].

    ## Args:
        * omega     (ndarray):      Routing probabilities [L] or [B × L].
        * leaves    (LeafParams):   Leaf parameters.

    ## Raises:
        * InvalidRoutingError:  If a routing vector is not a probability vector.

    ## Returns:
        * float | ndarray:  Entropy bound per sample.
    """
    omega2: ndarray =   atleast_2d(asarray(omega, dtype = float64))

    check_routing(omega2)

    values: ndarray =   omega2 @ leaf_entropy_terms(leaves)

    return values if asarray(omega).ndim == 2 else float(values[0])


def forest_entropy(
    x:      ndarray,
    model:  "ForestModel"
) -> Union[float, ndarray]:
    """# Forest Predictive Uncertainty H_i, the Average of Tree Entropy Bounds.

    ## Args:
        * x     (ndarray):      Input vector [D_x] or batch [B × D_x].
        * model (ForestModel):  Forest being evaluated.

    ## Returns:
        * float | ndarray:  Entropy per sample.
    """
    values: ndarray =   model.entropy(atleast_2d(x))

    return values if asarray(x).ndim == 2 else float(values[0])


def mc_entropy_oracle(
    omega:      ndarray,
    leaves:     LeafParams,
    n_samples:  int =           100_000,
    seed:       int =           0
) -> Tuple[float, float]:
    """# Monte Carlo Estimate of the Exact Mixture Entropy.

    Draws y from Σ_ℓ ω_ℓ N(μ_ℓ, σ²_ℓ) and averages −log density.

    ## Args:
        * omega     (ndarray):      Routing probabilities [L].
        * leaves    (LeafParams):   Leaf parameters.
        * n_samples (int):          Number of draws (>= 1000). Defaults to 100 000.
        * seed      (int):          Generator seed. Defaults to 0.

    ## Returns:
        * float:    Entropy estimate.
        * float:    Standard error of the estimate.
    """
    if n_samples < MIN_ORACLE_SAMPLES:
        raise UsageError(f"Monte Carlo entropy needs >= {MIN_ORACLE_SAMPLES} samples, got {n_samples}")

    weights:    ndarray =   atleast_1d(asarray(omega, dtype = float64))

    check_routing(weights)

    rng =                   make_generator(seed)

    # Component assignment, then the draw from that component.
    components: ndarray =   rng.choice(len(weights), size = n_samples, p = weights / weights.sum())
    y:          ndarray =   rng.normal(leaves.mean[components], sqrt(leaves.variance[components]))

    # Mixture log-density at every draw.
    with_omega: ndarray =   log_gaussian(y[:, None], leaves.mean, leaves.variance)
    log_p:      ndarray =   logsumexp(with_omega, axis = 1, b = weights)

    return float(-log_p.mean()), float(log_p.std(ddof = 1) / sqrt(n_samples))
