"""# gradatim.forest.density

Soft routing, per-tree & forest predictive densities, point prediction, and the routing gradient.

Routing and density functions accept a single sample (feature vector [F], routing vector [L], 
scalar target) or a batch (matrices [B × F], [B × L], targets [B]); results keep the batch rank.
"""

__all__ =   [
                "check_routing",
                "component_log_terms",
                "forest_log_likelihood",
                "leaf_reach_probabilities",
                "log_gaussian",
                "predict",
                "route",
                "split_gradient",
                "split_probabilities",
                "split_probability",
                "tree_log_density",
            ]

from typing                         import TYPE_CHECKING, Union

from numpy                          import abs as np_abs, asarray, atleast_1d, atleast_2d, \
                                           errstate, float64, inf, isfinite, log, maximum, \
                                           ndarray, ones, pi, stack, where
from scipy.special                  import expit, logsumexp

from gradatim.forest.exceptions     import InvalidRoutingError, NodeOutOfRangeError
from gradatim.forest.topology       import TreeTopology
from gradatim.forest.tree           import LeafParams

# Defer until runtime.
if TYPE_CHECKING:
    from gradatim.forest.model      import ForestModel

# Default floor for log-densities (natural log units).
LOG_DENSITY_FLOOR:  float = -700.0

# Tolerance when validating caller-supplied routing vectors.
ROUTING_TOLERANCE:  float = 1e-6


# ROUTING ==========================================================================================

def split_probability(
    f:          ndarray,
    tree:       TreeTopology,
    node_id:    int
) -> Union[float, ndarray]:
    """# Split Probability s_n = σ(f_φ(n)).

    ## Args:
        * f         (ndarray):      Feature vector [F] or batch [B × F].
        * tree      (TreeTopology): Tree whose node is queried.
        * node_id   (int):          Split node identifier.

    ## Raises:
        * NodeOutOfRangeError:  If the node does not exist.

    ## Returns:
        * float | ndarray:  Probability of routing left, per sample.
    """
    if not 0 <= node_id < tree.split_count:
        raise NodeOutOfRangeError(node_id = node_id, split_count = tree.split_count)

    return expit(asarray(f, dtype = float64)[..., tree.phi[node_id]])


def split_probabilities(
    f:      ndarray,
    tree:   TreeTopology
) -> ndarray:
    """# All Split Probabilities of a Tree, in Breadth-First Order.

    ## Args:
        * f     (ndarray):      Feature vector [F] or batch [B × F].
        * tree  (TreeTopology): Tree being routed.

    ## Returns:
        * ndarray:  Split probabilities [S] or [B × S].
    """
    return expit(asarray(f, dtype = float64)[..., tree.phi])


def route(
    split_probs:    ndarray,
    tree:           TreeTopology
) -> ndarray:
    """# Leaf-Reach Probabilities from Split Probabilities.

    ω_ℓ is the product, over the ancestors of ℓ, of s_n when ℓ lies in the left subtree and 
    1 − s_n when it lies in the right subtree.

    ## Args:
        * split_probs   (ndarray):      Split probabilities [S] or [B × S].
        * tree          (TreeTopology): Tree being routed.

    ## Returns:
        * ndarray:  Routing probabilities [L] or [B × L].
    """
    s:      ndarray =   atleast_2d(asarray(split_probs, dtype = float64))
    mass:   ndarray =   ones((s.shape[0], 1))

    for level in range(tree.depth - 1):

        # Nodes of this level, in breadth-first order.
        level_s:    ndarray =   s[:, 2 ** level - 1:2 ** (level + 1) - 1]

        # Children interleave: left then right under each parent.
        mass =                  stack((mass * level_s, mass * (1.0 - level_s)), axis = 2)
        mass =                  mass.reshape(s.shape[0], -1)

    return mass if asarray(split_probs).ndim == 2 else mass[0]


def leaf_reach_probabilities(
    f:      ndarray,
    tree:   TreeTopology
) -> ndarray:
    """# Leaf-Reach Probabilities ω(x) from Features.

    ## Args:
        * f     (ndarray):      Feature vector [F] or batch [B × F].
        * tree  (TreeTopology): Tree being routed.

    ## Returns:
        * ndarray:  Routing probabilities [L] or [B × L], each row summing to one.
    """
    return route(split_probabilities(f, tree), tree)


def split_gradient(
    leaf_weights:   ndarray,
    split_probs:    ndarray,
    tree:           TreeTopology
) -> ndarray:
    """# Gradient of Σ_ℓ w_ℓ log ω_ℓ w.r.t. Split Activations f_φ(n).

    Since ∂ log ω_ℓ / ∂f_φ(n) is 1 − s_n for leaves under the left child, −s_n under the right 
    child, and zero otherwise, the result is (1 − s_n) Σ_{ℓ∈L_l} w_ℓ − s_n Σ_{ℓ∈L_r} w_ℓ. Using 
    posterior responsibilities as w gives the gradient of a mixture log-density; using ω_ℓ c_ℓ 
    gives the gradient of Σ_ℓ ω_ℓ c_ℓ.

    ## Args:
        * leaf_weights  (ndarray):      Per-leaf weights [B × L].
        * split_probs   (ndarray):      Split probabilities [B × S].
        * tree          (TreeTopology): Tree being differentiated.

    ## Returns:
        * ndarray:  Gradient per split node [B × S].
    """
    return  (1.0 - split_probs) * (leaf_weights @ tree.left_mask.T) \
            - split_probs * (leaf_weights @ tree.right_mask.T)


# DENSITIES ========================================================================================

def log_gaussian(
    y:          ndarray,
    mean:       ndarray,
    variance:   ndarray
) -> ndarray:
    """# Log-Density of N(y; μ, σ²), Broadcasting."""
    return -0.5 * log(2.0 * pi * variance) - (y - mean) ** 2 / (2.0 * variance)


def component_log_terms(
    y:      ndarray,
    omega:  ndarray,
    leaves: LeafParams
) -> ndarray:
    """# Per-Leaf Log Terms log ω_ℓ + log N(y; μ_ℓ, σ²_ℓ).

    Leaves with ω_ℓ = 0 contribute −∞ and drop out of any log-sum-exp.

    ## Args:
        * y         (ndarray):      Targets [B].
        * omega     (ndarray):      Routing probabilities [B × L].
        * leaves    (LeafParams):   Leaf parameters.

    ## Returns:
        * ndarray:  Log terms [B × L].
    """
    with errstate(divide = "ignore"):
        log_omega:  ndarray =   where(omega > 0, log(where(omega > 0, omega, 1.0)), -inf)

    return log_omega + log_gaussian(asarray(y)[:, None], leaves.mean, leaves.variance)


def check_routing(
    omega:  ndarray
) -> None:
    """# Validate Routing Vectors.

    ## Raises:
        * InvalidRoutingError:  If any vector has a negative entry or does not sum to one.
    """
    deviation:  float = float(np_abs(omega.sum(axis = -1) - 1.0).max()) if omega.size else 0.0

    if (omega < 0).any() or deviation > ROUTING_TOLERANCE:
        raise InvalidRoutingError(deviation = deviation)


def tree_log_density(
    y:      Union[float, ndarray],
    omega:  ndarray,
    leaves: LeafParams,
    floor:  float =                 LOG_DENSITY_FLOOR
) -> Union[float, ndarray]:
    """# Tree Log-Density log Σ_ℓ ω_ℓ N(y; μ_ℓ, σ²_ℓ).

    Computed in log space; results below `floor` (including total underflow) are replaced by 
    `floor`.

    ## Args:
        * y         (float | ndarray):  Target or targets [B].
        * omega     (ndarray):          Routing probabilities [L] or [B × L].
        * leaves    (LeafParams):       Leaf parameters.
        * floor     (float):            Log-density floor. Defaults to -700.

    ## Raises:
        * InvalidRoutingError:  If a routing vector is not a probability vector.

    ## Returns:
        * float | ndarray:  Log-density per sample.
    """
    omega2: ndarray =   atleast_2d(asarray(omega, dtype = float64))

    check_routing(omega2)

    values: ndarray =   _floored_(
                            logsumexp(component_log_terms(atleast_1d(y), omega2, leaves), axis = 1),
                            floor
                        )

    return values if asarray(omega).ndim == 2 else float(values[0])


def _floored_(
    values: ndarray,
    floor:  float
) -> ndarray:
    """# Apply the Log-Density Floor, Mapping NaN and −∞ to the Floor."""
    return where(isfinite(values), maximum(values, floor), floor)


def forest_log_likelihood(
    x:      ndarray,
    y:      Union[float, ndarray],
    model:  "ForestModel"
) -> Union[float, ndarray]:
    """# Forest Log-Likelihood log p_F(y | x).

    log p_F = logsumexp_k(log p_Tk) − log K, floored like the tree densities.

    ## Args:
        * x     (ndarray):          Input vector [D_x] or batch [B × D_x].
        * y     (float | ndarray):  Target or targets [B].
        * model (ForestModel):      Forest being evaluated.

    ## Returns:
        * float | ndarray:  Log-likelihood per sample.
    """
    values: ndarray =   model.log_likelihood(atleast_2d(x), atleast_1d(y)).values

    return values if asarray(x).ndim == 2 else float(values[0])


def predict(
    x:      ndarray,
    model:  "ForestModel"
) -> Union[float, ndarray]:
    """# Point Prediction ŷ = (1/K) Σ_k Σ_ℓ ω_kℓ(x) μ_kℓ (Forest Mixture Mean).

    ## Args:
        * x     (ndarray):      Input vector [D_x] or batch [B × D_x].
        * model (ForestModel):  Forest being evaluated.

    ## Returns:
        * float | ndarray:  Prediction per sample.
    """
    values: ndarray =   model.predict(atleast_2d(x))

    return values if asarray(x).ndim == 2 else float(values[0])
