"""# gradatim.forest.leaves

Leaf parameter updates under a fixed backbone and fixed sample weights.

Each round runs EM-style fixed-point iterations on the weighted likelihood. Routing ω(x) is held 
fixed for the whole round since it depends only on the backbone. With forest coupling, the 
responsibility of leaf (k, ℓ) for sample i is r_ik ζ_kℓ(i), where r_ik is tree k's share of the 
forest density; this bounds the forest mixture, so Σ_i v_i log p_F(y_i | x_i) never decreases. 
With tree coupling every tree is fitted to its own mixture, which is the same update when K = 1.
"""

__all__ =   [
                "leaf_posteriors",
                "posteriors_from_log_terms",
                "update_leaves",
            ]

from logging                        import Logger
from typing                         import List, Tuple, Union

from numpy                          import asarray, atleast_1d, atleast_2d, concatenate, errstate, \
                                           exp, flatnonzero, float64, isfinite, maximum, ndarray, \
                                           ones, stack, where
from numpy.random                   import Generator
from scipy.special                  import logsumexp

from gradatim.exceptions            import UsageError
from gradatim.forest.config         import LeafUpdateConfig
from gradatim.forest.density        import check_routing, component_log_terms
from gradatim.forest.exceptions     import NoEffectiveSamplesError
from gradatim.forest.model          import ForestModel
from gradatim.forest.tree           import LeafParams
from gradatim.utilities             import get_logger

# Initialize logger.
LOGGER:         Logger =    get_logger("leaf-optimizer")

# Leaves whose effective weight falls below this keep their parameters.
MIN_LEAF_MASS:  float =     1e-12


def leaf_posteriors(
    y:      Union[float, ndarray],
    omega:  ndarray,
    leaves: LeafParams
) -> ndarray:
    """# Leaf Posteriors ζ_ℓ ∝ ω_ℓ N(y; μ_ℓ, σ²_ℓ).

    When every term underflows, ζ is uniform over the leaves with ω_ℓ > 0.

    ## Args:
        * y         (float | ndarray):  Target or targets [B].
        * omega     (ndarray):          Routing probabilities [L] or [B × L].
        * leaves    (LeafParams):       Leaf parameters.

    ## Raises:
        * InvalidRoutingError:  If a routing vector is not a probability vector.

    ## Returns:
        * ndarray:  Posteriors [L] or [B × L], each row summing to one.
    """
    omega2: ndarray =   atleast_2d(asarray(omega, dtype = float64))

    check_routing(omega2)

    zeta:   ndarray =   posteriors_from_log_terms(component_log_terms(atleast_1d(y), omega2, leaves), omega2)

    return zeta if asarray(omega).ndim == 2 else zeta[0]


def posteriors_from_log_terms(
    log_terms:  ndarray,
    omega:      ndarray
) -> ndarray:
    """# Normalize Log Terms into Posteriors, Falling Back to Uniform on Reachable Leaves."""
    total:      ndarray =   logsumexp(log_terms, axis = 1, keepdims = True)

    with errstate(invalid = "ignore"):
        zeta:   ndarray =   exp(log_terms - total)

    underflow:  ndarray =   ~isfinite(total[:, 0])

    if underflow.any():
        reachable:  ndarray =   (omega[underflow] > 0).astype(float64)
        zeta[underflow] =       reachable / reachable.sum(axis = 1, keepdims = True)

    return zeta


def update_leaves(
    model:      ForestModel,
    x:          ndarray,
    y:          ndarray,
    weights:    ndarray,
    config:     LeafUpdateConfig,
    rng:        Generator =         None,
    batch_size: int =               32
) -> List[LeafParams]:
    """# Update Leaf Parameters Π with Θ & v Fixed.

    Per iteration and leaf: μ_ℓ ← Σ_i q_iℓ y_i / Σ_i q_iℓ and σ²_ℓ ← max(floor, Σ_i q_iℓ 
    (y_i − μ_ℓ)² / Σ_i q_iℓ) with the fresh μ_ℓ, where q_iℓ is v_i times the sample's 
    responsibility for the leaf. Samples with v_i = 0 are dropped before anything is computed.

    ## Args:
        * model         (ForestModel):      Forest whose leaves are updated (not modified).
        * x             (ndarray):          Inputs [N × D_x].
        * y             (ndarray):          Targets [N].
        * weights       (ndarray):          Sample weights v in [0, 1] [N].
        * config        (LeafUpdateConfig): Update configuration.
        * rng           (Generator):        Batch sampler, required in "mini" mode.
        * batch_size    (int):              Samples per mini-batch in "mini" mode. Defaults to 32.

    ## Raises:
        * NoEffectiveSamplesError:  If every weight is zero.
        * UsageError:               If shapes or weights are invalid.

    ## Returns:
        * List[LeafParams]: Updated leaf parameters, one entry per tree.
    """
    inputs:     ndarray =   atleast_2d(asarray(x, dtype = float64))
    targets:    ndarray =   atleast_1d(asarray(y, dtype = float64))
    v:          ndarray =   atleast_1d(asarray(weights, dtype = float64))

    # Validate inputs.
    if not len(inputs) == len(targets) == len(v):
        raise UsageError(f"Leaf update needs matching lengths, got {len(inputs)}, {len(targets)}, {len(v)}")

    if ((v < 0) | (v > 1)).any() or not isfinite(v).all():
        raise UsageError("Sample weights must lie in [0, 1]")

    active:     ndarray =   flatnonzero(v > 0)

    if active.size == 0: raise NoEffectiveSamplesError(sample_count = len(v))

    if config.batch_mode == "mini":

        if rng is None: raise UsageError("Mini-batch leaf updates need a generator")

        # Pool the statistics of every mini-batch.
        active =    concatenate([
                        rng.choice(active, size = min(batch_size, active.size), replace = False)
                        for _ in range(config.batch_count)
                    ])

    routing =               model.route(inputs[active])
    leaves:     List =      [params.copy() for params in model.leaves]

    for _ in range(config.iterations):
        leaves, kept =      _iterate_(
                                omega =     routing.omega,
                                y =         targets[active],
                                v =         v[active],
                                leaves =    leaves,
                                config =    config,
                                floor =     model.log_density_floor
                            )

    if kept: LOGGER.warning(f"{kept} leaves had no effective weight and kept their parameters")

    LOGGER.debug(f"Updated leaves of {len(leaves)} trees on {active.size} samples")

    return leaves


def _iterate_(
    omega:  List[ndarray],
    y:      ndarray,
    v:      ndarray,
    leaves: List[LeafParams],
    config: LeafUpdateConfig,
    floor:  float
) -> Tuple[List[LeafParams], int]:
    """# One Fixed-Point Iteration over Every Tree.

    ## Returns:
        * List[LeafParams]: Updated leaves.
        * int:              Number of leaves that kept their parameters.
    """
    log_terms:  List[ndarray] = [component_log_terms(y, o, params) for o, params in zip(omega, leaves)]

    # Tree shares r_ik of the forest density.
    if config.coupling == "forest":
        tree_ll:    ndarray =   stack([logsumexp(terms, axis = 1) for terms in log_terms], axis = 1)
        tree_ll =               where(isfinite(tree_ll), maximum(tree_ll, floor), floor)
        shares:     ndarray =   exp(tree_ll - logsumexp(tree_ll, axis = 1, keepdims = True))

    else:
        shares:     ndarray =   ones((len(y), len(leaves)))

    updated:    List[LeafParams] =  []
    kept:       int =               0

    for k, params in enumerate(leaves):

        resp:   ndarray =   (v * shares[:, k])[:, None] * posteriors_from_log_terms(log_terms[k], omega[k])
        mass:   ndarray =   resp.sum(axis = 0)
        live:   ndarray =   mass >= MIN_LEAF_MASS
        safe:   ndarray =   where(live, mass, 1.0)

        mean:   ndarray =   (resp.T @ y) / safe
        spread: ndarray =   (resp * (y[:, None] - mean) ** 2).sum(axis = 0) / safe

        updated.append(LeafParams(
            mean =      where(live, mean, params.mean),
            variance =  where(live, maximum(spread, config.variance_floor), params.variance)
        ))

        kept += int((~live).sum())

    return updated, kept
