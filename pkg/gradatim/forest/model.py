"""# gradatim.forest.model

Deep regression forest: a feature backbone shared by K soft-routed regression trees.
"""

__all__ =   [
                "ForestModel",
                "LikelihoodResult",
                "Routing",
            ]

from dataclasses                    import dataclass
from json                           import JSONDecodeError, dump, load as read_json
from logging                        import Logger
from pathlib                        import Path
from typing                         import Any, Dict, List, Sequence, Union

from numpy                          import asarray, atleast_1d, float64, isfinite, log, \
                                           ndarray, quantile, stack, var, where
from numpy.random                   import Generator
from scipy.special                  import logsumexp

from gradatim.backbone              import BackboneConfig, BackboneParams, ForwardCache, forward, \
                                           initialize_backbone
from gradatim.forest.config         import ForestConfig
from gradatim.forest.density        import component_log_terms, route, split_probabilities
from gradatim.forest.entropy        import leaf_entropy_terms
from gradatim.forest.exceptions     import InvalidTopologyError
from gradatim.forest.topology       import TreeTopology
from gradatim.forest.tree           import LeafParams, RegressionTree
from gradatim.utilities             import get_logger

@dataclass
class Routing:
    """# Routing of a Batch Through Every Tree.

    ## Attributes:
        * features      (ndarray):          Backbone output [B × F].
        * cache         (ForwardCache):     Backbone cache for back-propagation.
        * split_probs   (List[ndarray]):    Per-tree split probabilities [B × S].
        * omega         (List[ndarray]):    Per-tree leaf-reach probabilities [B × L].
    """
    features:       ndarray
    cache:          ForwardCache
    split_probs:    List[ndarray]
    omega:          List[ndarray]


@dataclass
class LikelihoodResult:
    """# Forest Log-Likelihood of a Batch.

    ## Attributes:
        * values        (ndarray):          log p_F per sample [B], floored.
        * tree_values   (ndarray):          log p_Tk per sample & tree [B × K], floored.
        * tree_floored  (ndarray):          Whether each tree density hit the floor [B × K].
        * floored       (ndarray):          Whether the forest density hit the floor [B].
        * log_terms     (List[ndarray]):    Per-tree log ω_ℓ + log N(y; μ_ℓ, σ²_ℓ) [B × L].
        * routing       (Routing):          Routing the values were computed from.
    """
    values:         ndarray
    tree_values:    ndarray
    tree_floored:   ndarray
    floored:        ndarray
    log_terms:      List[ndarray]
    routing:        Routing


class ForestModel:
    """# Deep Regression Forest."""

    def __init__(self,
        backbone:           BackboneParams,
        trees:              Sequence[RegressionTree],
        log_density_floor:  float =                     -700.0
    ):
        """# Instantiate Forest Model.

        ## Args:
            * backbone          (BackboneParams):           Feature extractor parameters Θ.
            * trees             (Sequence[RegressionTree]): Trees with their leaf parameters Π.
            * log_density_floor (float):                    Floor for log-densities. Defaults to 
                                                            -700.

        ## Raises:
            * InvalidTopologyError: If there are no trees or an index map exceeds the feature width.
        """
        # Initialize logger.
        self.__logger__:            Logger =                get_logger("forest-model")

        if len(trees) < 1: raise InvalidTopologyError("a forest needs at least one tree")

        for tree in trees: tree.topology.check_features(backbone.feature_dim)

        # Define properties.
        self._backbone_:            BackboneParams =        backbone
        self._trees_:               List[RegressionTree] =  list(trees)
        self._log_density_floor_:   float =                 log_density_floor

    # PROPERTIES ===================================================================================

    @property
    def backbone(self) -> BackboneParams:
        """# Feature Extractor Parameters"""
        return self._backbone_

    @property
    def trees(self) -> List[RegressionTree]:
        """# Regression Trees"""
        return self._trees_

    @property
    def tree_count(self) -> int:
        """# Number of Trees K"""
        return len(self._trees_)

    @property
    def leaves(self) -> List[LeafParams]:
        """# Leaf Parameters of Every Tree"""
        return [tree.leaves for tree in self._trees_]

    @property
    def log_density_floor(self) -> float:
        """# Log-Density Floor"""
        return self._log_density_floor_

    # METHODS ======================================================================================

    @classmethod
    def initialize(cls,
        input_dim:          int,
        targets:            ndarray,
        backbone_config:    BackboneConfig,
        forest_config:      ForestConfig,
        generators:         Sequence[Generator]
    ) -> "ForestModel":
        """# Initialize a Forest.

        The backbone draws from the first generator and tree k's index map from generator k + 1. 
        Leaf means start at evenly spaced target quantiles and leaf variances at the target 
        variance.

        ## Args:
            * input_dim         (int):                  Input width D_x.
            * targets           (ndarray):              Training targets used for leaf initialization.
            * backbone_config   (BackboneConfig):       Backbone configuration.
            * forest_config     (ForestConfig):         Forest configuration.
            * generators        (Sequence[Generator]):  At least K + 1 independent generators.

        ## Returns:
            * ForestModel:  New model.
        """
        backbone:   BackboneParams =    initialize_backbone(
                                            input_dim =     input_dim,
                                            hidden_widths = backbone_config.hidden_widths,
                                            feature_dim =   backbone_config.feature_dim,
                                            rng =           generators[0],
                                            activation =    backbone_config.activation
                                        )

        y:          ndarray =           atleast_1d(asarray(targets, dtype = float64))
        leaf_count: int =               2 ** (forest_config.depth - 1)
        levels:     ndarray =           (asarray(range(leaf_count)) + 0.5) / leaf_count
        variance:   float =             max(float(var(y)) if y.size else 1.0, forest_config.variance_floor)

        trees:      List =              []

        for k in range(forest_config.tree_count):
            trees.append(RegressionTree(
                topology =  TreeTopology.sample(
                                depth =         forest_config.depth,
                                feature_dim =   backbone_config.feature_dim,
                                rng =           generators[k + 1]
                            ),
                leaves =    LeafParams(
                                mean =      quantile(y, levels) if y.size else levels * 0.0,
                                variance =  [variance] * leaf_count
                            )
            ))

        return cls(backbone = backbone, trees = trees, log_density_floor = forest_config.log_density_floor)

    def route(self,
        x:  ndarray
    ) -> Routing:
        """# Route a Batch Through the Backbone & Every Tree.

        ## Args:
            * x (ndarray):  Inputs [B × D_x].

        ## Returns:
            * Routing:  Features, backbone cache & per-tree routing.
        """
        features, cache =   forward(asarray(x, dtype = float64), self._backbone_)
        split_probs:    List[ndarray] = [split_probabilities(features, t.topology) for t in self._trees_]

        return  Routing(
                    features =      features,
                    cache =         cache,
                    split_probs =   split_probs,
                    omega =         [route(s, t.topology) for s, t in zip(split_probs, self._trees_)]
                )

    def log_likelihood(self,
        x:          ndarray,
        y:          ndarray,
        routing:    Routing =   None
    ) -> LikelihoodResult:
        """# Forest Log-Likelihood log p_F(y | x) of a Batch.

        log p_F = logsumexp_k(log p_Tk) − log K, each tree density floored first.

        ## Args:
            * x         (ndarray):  Inputs [B × D_x].
            * y         (ndarray):  Targets [B].
            * routing   (Routing):  Precomputed routing of `x`, if available.

        ## Returns:
            * LikelihoodResult: Forest & tree log-densities with floor flags.
        """
        routing:    Routing =       routing or self.route(x)
        targets:    ndarray =       atleast_1d(asarray(y, dtype = float64))

        log_terms:  List[ndarray] = [
                                        component_log_terms(targets, omega, tree.leaves)
                                        for omega, tree in zip(routing.omega, self._trees_)
                                    ]

        raw:            ndarray =   stack([logsumexp(terms, axis = 1) for terms in log_terms], axis = 1)
        tree_floor:     ndarray =   ~(isfinite(raw) & (raw >= self._log_density_floor_))
        tree_values:    ndarray =   where(tree_floor, self._log_density_floor_, raw)

        # Forest density, floored again after averaging.
        forest:         ndarray =   logsumexp(tree_values, axis = 1) - log(self.tree_count)
        floored:        ndarray =   ~(forest >= self._log_density_floor_)

        if floored.any(): self.__logger__.debug(f"{int(floored.sum())} samples at the log-density floor")

        return  LikelihoodResult(
                    values =        where(floored, self._log_density_floor_, forest),
                    tree_values =   tree_values,
                    tree_floored =  tree_floor,
                    floored =       floored,
                    log_terms =     log_terms,
                    routing =       routing
                )

    def predict(self,
        x:          ndarray,
        routing:    Routing =   None
    ) -> ndarray:
        """# Mixture-Mean Predictions (1/K) Σ_k Σ_ℓ ω_kℓ(x) μ_kℓ for a Batch [B × D_x]."""
        routing:    Routing =   routing or self.route(x)

        return sum(omega @ tree.leaves.mean for omega, tree in zip(routing.omega, self._trees_)) \
               / self.tree_count

    def entropy(self,
        x:          ndarray,
        routing:    Routing =   None
    ) -> ndarray:
        """# Forest Entropy Bounds H_i for a Batch [B × D_x]."""
        routing:    Routing =   routing or self.route(x)

        return sum(
                   omega @ leaf_entropy_terms(tree.leaves)
                   for omega, tree in zip(routing.omega, self._trees_)
               ) / self.tree_count

    def assign_leaves(self,
        leaves: Sequence[LeafParams]
    ) -> None:
        """# Replace the Leaf Parameters of Every Tree.

        ## Args:
            * leaves    (Sequence[LeafParams]): New leaf parameters, one entry per tree.
        """
        if len(leaves) != self.tree_count:
            raise InvalidTopologyError(
                f"expected leaf parameters for {self.tree_count} trees, got {len(leaves)}"
            )

        self._trees_ = [RegressionTree(tree.topology, params) for tree, params in zip(self._trees_, leaves)]

    def leaf_snapshot(self) -> List[List[Dict[str, float]]]:
        """# Leaf Parameters as [[{"mu", "var"}, ...] per tree]."""
        return [tree.leaves.to_list() for tree in self._trees_]

    def copy(self) -> "ForestModel":
        """# Deep Copy of the Model."""
        return  ForestModel(
                    backbone =          self._backbone_.copy(),
                    trees =             [
                                            RegressionTree(tree.topology, tree.leaves.copy())
                                            for tree in self._trees_
                                        ],
                    log_density_floor = self._log_density_floor_
                )

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a JSON-Ready Mapping."""
        return  {
                    "backbone":             self._backbone_.to_dict(),
                    "trees":                [tree.to_dict() for tree in self._trees_],
                    "log_density_floor":    self._log_density_floor_
                }

    def save(self,
        path:   Union[str, Path]
    ) -> Path:
        """# Write the Model as JSON.

        ## Args:
            * path  (str | Path):   Destination file; its directory is created if needed.

        ## Returns:
            * Path: Written file.
        """
        path:   Path =  Path(path)
        path.parent.mkdir(parents = True, exist_ok = True)

        with open(path, "w", encoding = "utf-8") as f:

            dump(obj = self.to_dict(), fp = f, indent = 2, ensure_ascii = False)

        self.__logger__.info(f"Saved model to {path}")

        return path

    @classmethod
    def load(cls,
        path:   Union[str, Path]
    ) -> "ForestModel":
        """# Read a Model Written by `save`.

        ## Raises:
            * InvalidTopologyError: If the file is not a valid model document.
        """
        with open(path, "r", encoding = "utf-8") as f:

            try:                        data:   Any =   read_json(fp = f)
            except JSONDecodeError as e: raise InvalidTopologyError(f"{path} is not valid JSON ({e.msg})") from e

        if not isinstance(data, dict): raise InvalidTopologyError(f"{path} does not hold a model object")

        return cls.from_dict(data)

    @classmethod
    def from_dict(cls,
        data:   Dict[str, Any]
    ) -> "ForestModel":
        """# Deserialize from Mapping.

        ## Raises:
            * InvalidTopologyError: If required fields are missing or inconsistent.
        """
        try:
            return  cls(
                        backbone =          BackboneParams.from_dict(data["backbone"]),
                        trees =             [RegressionTree.from_dict(tree) for tree in data["trees"]],
                        log_density_floor = float(data.get("log_density_floor", -700.0))
                    )

        except (KeyError, TypeError) as e: raise InvalidTopologyError(f"malformed model data ({e!r})") from e

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Forest Model Object Representation"""
        return  f"""<ForestModel(trees = {self.tree_count}, depth = {self._trees_[0].topology.depth}, """ \
                f"""feature_dim = {self._backbone_.feature_dim})>"""
