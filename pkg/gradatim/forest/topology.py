"""# gradatim.forest.topology

Complete binary tree structure & feature index map φ.

Split nodes are numbered breadth-first (children of node n are 2n + 1 on the left and 2n + 2 on 
the right); leaves are numbered left to right.
"""

__all__ = ["TreeTopology"]

from dataclasses                    import dataclass, field
from functools                      import cached_property
from typing                         import List

from numpy                          import asarray, concatenate, int64, ndarray, zeros
from numpy.random                   import Generator

from gradatim.forest.exceptions     import InvalidTopologyError

@dataclass(frozen = True)
class TreeTopology:
    """# Regression Tree Topology.

    ## Attributes:
        * depth (int):      Tree depth, root at depth 1.
        * phi   (ndarray):  Feature index for each split node [split_count].
    """
    depth:  int
    phi:    ndarray =   field(compare = False)

    def __post_init__(self) -> None:
        """# Validate Topology."""
        if self.depth < 1: raise InvalidTopologyError(f"depth must be >= 1, got {self.depth}")

        # Freeze a private integer copy of the index map.
        phi:    ndarray =   asarray(self.phi, dtype = int64).copy()
        phi.setflags(write = False)
        object.__setattr__(self, "phi", phi)

        if phi.shape != (self.split_count,):
            raise InvalidTopologyError(f"index map needs {self.split_count} entries, got {phi.shape}")

        if phi.size and phi.min() < 0: raise InvalidTopologyError("negative feature index")

    # PROPERTIES ===================================================================================

    @property
    def leaf_count(self) -> int:
        """# Number of Leaves"""
        return 2 ** (self.depth - 1)

    @property
    def split_count(self) -> int:
        """# Number of Split Nodes"""
        return 2 ** (self.depth - 1) - 1

    @cached_property
    def left_mask(self) -> ndarray:
        """# Membership of Leaves in Left Subtrees [split_count × leaf_count]"""
        return self._subtree_masks_[0]

    @cached_property
    def right_mask(self) -> ndarray:
        """# Membership of Leaves in Right Subtrees [split_count × leaf_count]"""
        return self._subtree_masks_[1]

    @cached_property
    def _subtree_masks_(self) -> List[ndarray]:
        """# Indicator Matrices [ℓ ∈ L_{n_l}] and [ℓ ∈ L_{n_r}]."""
        left:   ndarray =   zeros((self.split_count, self.leaf_count))
        right:  ndarray =   zeros((self.split_count, self.leaf_count))

        for leaf in range(self.leaf_count):

            node:   int =   0

            # Walk the root-to-leaf path; leaf bits read most significant first.
            for level in range(self.depth - 1):
                if (leaf >> (self.depth - 2 - level)) & 1:
                    right[node, leaf] = 1.0; node = 2 * node + 2
                else:
                    left[node, leaf] =  1.0; node = 2 * node + 1

        return [left, right]

    # METHODS ======================================================================================

    def check_features(self,
        feature_dim:    int
    ) -> None:
        """# Validate Index Map Against Feature Width.

        ## Args:
            * feature_dim   (int):  Backbone output width.

        ## Raises:
            * InvalidTopologyError: If any split node indexes past the feature vector.
        """
        if self.phi.size and self.phi.max() >= feature_dim:
            raise InvalidTopologyError(
                f"feature index {int(self.phi.max())} out of range for feature_dim {feature_dim}"
            )

    @classmethod
    def sample(cls,
        depth:          int,
        feature_dim:    int,
        rng:            Generator
    ) -> "TreeTopology":
        """# Sample a Topology with a Random Index Map.

        Feature indices are drawn without replacement; when the tree has more split nodes than 
        features, successive independent permutations are concatenated.

        ## Args:
            * depth         (int):          Tree depth.
            * feature_dim   (int):          Backbone output width.
            * rng           (Generator):    Seeded generator, one per tree.

        ## Returns:
            * TreeTopology: New topology.
        """
        needed: int =   2 ** (depth - 1) - 1
        blocks: List =  [rng.permutation(feature_dim) for _ in range(-(-needed // feature_dim))]

        return cls(depth = depth, phi = concatenate(blocks or [zeros(0, dtype = int64)])[:needed])

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Topology Object Representation"""
        return f"""<TreeTopology(depth = {self.depth}, leaves = {self.leaf_count})>"""
