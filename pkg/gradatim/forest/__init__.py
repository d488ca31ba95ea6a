"""# gradatim.forest

Soft-routed regression trees with Gaussian leaves, their forest, entropy bounds & leaf updates.
"""

__all__ =   [
                # Configuration
                "ForestConfig",
                "LeafUpdateConfig",

                # Structure
                "ForestModel",
                "LeafParams",
                "LikelihoodResult",
                "RegressionTree",
                "Routing",
                "TreeTopology",

                # Densities
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

                # Entropy
                "forest_entropy",
                "leaf_entropy_terms",
                "mc_entropy_oracle",
                "tree_entropy",

                # Leaf updates
                "leaf_posteriors",
                "posteriors_from_log_terms",
                "update_leaves",

                # Exceptions
                "ForestError",
                "InvalidRoutingError",
                "InvalidTopologyError",
                "NodeOutOfRangeError",
                "NoEffectiveSamplesError",
            ]

from gradatim.forest.config         import *
from gradatim.forest.density        import *
from gradatim.forest.entropy        import *
from gradatim.forest.exceptions     import *
from gradatim.forest.leaves         import *
from gradatim.forest.model          import *
from gradatim.forest.topology       import *
from gradatim.forest.tree           import *
