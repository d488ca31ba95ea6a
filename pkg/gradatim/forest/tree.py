"""# gradatim.forest.tree

Leaf parameters π_k & the regression tree pairing them with a topology.
"""

__all__ =   [
                "LeafParams",
                "RegressionTree",
            ]

from dataclasses                    import dataclass
from typing                         import Any, Dict, List

from numpy                          import asarray, float64, isfinite, ndarray

from gradatim.forest.exceptions     import InvalidTopologyError
from gradatim.forest.topology       import TreeTopology

@dataclass
class LeafParams:
    """# Gaussian Leaf Parameters of One Tree.

    ## Attributes:
        * mean      (ndarray):  Leaf means μ_ℓ [leaf_count].
        * variance  (ndarray):  Leaf variances σ²_ℓ [leaf_count], strictly positive.
    """
    mean:       ndarray
    variance:   ndarray

    def __post_init__(self) -> None:
        """# Validate Leaf Parameters."""
        self.mean =     asarray(self.mean, dtype = float64)
        self.variance = asarray(self.variance, dtype = float64)

        if self.mean.shape != self.variance.shape or self.mean.ndim != 1:
            raise InvalidTopologyError(
                f"leaf means {self.mean.shape} and variances {self.variance.shape} must be "
                f"equal-length vectors"
            )

        if not (isfinite(self.mean).all() and isfinite(self.variance).all()):
            raise InvalidTopologyError("leaf parameters must be finite")

        if (self.variance <= 0).any(): raise InvalidTopologyError("leaf variances must be > 0")

    def __len__(self) -> int:
        """# Number of Leaves"""
        return len(self.mean)

    def copy(self) -> "LeafParams":
        """# Deep Copy of Leaf Parameters."""
        return LeafParams(mean = self.mean.copy(), variance = self.variance.copy())

    def to_list(self) -> List[Dict[str, float]]:
        """# Serialize as [{"mu": m, "var": v}, ...]."""
        return [{"mu": float(m), "var": float(v)} for m, v in zip(self.mean, self.variance)]

    @classmethod
    def from_list(cls,
        leaves: List[Dict[str, float]]
    ) -> "LeafParams":
        """# Deserialize from [{"mu": m, "var": v}, ...]."""
        return  cls(
                    mean =      [leaf["mu"] for leaf in leaves],
                    variance =  [leaf["var"] for leaf in leaves]
                )


@dataclass
class RegressionTree:
    """# Soft-Routed Regression Tree.

    ## Attributes:
        * topology  (TreeTopology): Structure & feature index map.
        * leaves    (LeafParams):   Gaussian leaf parameters.
    """
    topology:   TreeTopology
    leaves:     LeafParams

    def __post_init__(self) -> None:
        """# Validate Leaf Count."""
        if len(self.leaves) != self.topology.leaf_count:
            raise InvalidTopologyError(
                f"depth {self.topology.depth} needs {self.topology.leaf_count} leaves, got "
                f"{len(self.leaves)}"
            )

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a JSON-Ready Mapping."""
        return  {
                    "depth":    self.topology.depth,
                    "phi":      self.topology.phi.tolist(),
                    "leaves":   self.leaves.to_list()
                }

    @classmethod
    def from_dict(cls,
        data:   Dict[str, Any]
    ) -> "RegressionTree":
        """# Deserialize from Mapping."""
        leaves: LeafParams =    LeafParams.from_list(data["leaves"])

        # Depth is implied by the leaf count when absent.
        depth:  int =           int(data.get("depth", len(leaves).bit_length()))

        return cls(topology = TreeTopology(depth = depth, phi = data["phi"]), leaves = leaves)
