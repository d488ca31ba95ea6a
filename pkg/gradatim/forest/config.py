"""# gradatim.forest.config

Forest & leaf-update configuration.
"""

__all__ =   [
                "ForestConfig",
                "LeafUpdateConfig",
            ]

from dataclasses                        import dataclass
from typing                             import Literal

from gradatim.configuration.exceptions  import InvalidConfigValueError

@dataclass
class ForestConfig:
    """# Forest Configuration.

    ## Attributes:
        * tree_count        (int):      Number of trees K. Defaults to 5.
        * depth             (int):      Tree depth, root at depth 1. Defaults to 6 (32 leaves).
        * variance_floor    (float):    Lower bound on leaf variances. Defaults to 1e-4.
        * log_density_floor (float):    Floor for log-densities (natural log). Defaults to -700.
    """
    tree_count:         int =   5
    depth:              int =   6
    variance_floor:     float = 1e-4
    log_density_floor:  float = -700.0

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.tree_count < 1:
            raise InvalidConfigValueError("tree_count", self.tree_count, "must be >= 1")

        if self.depth < 1:
            raise InvalidConfigValueError("depth", self.depth, "must be >= 1")

        if not self.variance_floor > 0:
            raise InvalidConfigValueError("variance_floor", self.variance_floor, "must be > 0")

        if not self.log_density_floor < 0:
            raise InvalidConfigValueError("log_density_floor", self.log_density_floor, "must be < 0")


@dataclass
class LeafUpdateConfig:
    """# Leaf Update Configuration.

    ## Attributes:
        * iterations        (int):      Fixed-point iterations per update round. Defaults to 20.
        * batch_mode        (str):      "full" uses every weighted sample; "mini" pools 
                                        `batch_count` seeded mini-batches. Defaults to "full".
        * batch_count       (int):      Mini-batches pooled in "mini" mode. Defaults to 50.
        * variance_floor    (float):    Lower bound on updated variances. Defaults to 1e-4.
        * coupling          (str):      "forest" bounds the whole forest mixture; "tree" updates 
                                        every tree on its own mixture. Defaults to "forest".
    """
    iterations:     int =                       20
    batch_mode:     Literal["full", "mini"] =   "full"
    batch_count:    int =                       50
    variance_floor: float =                     1e-4
    coupling:       Literal["forest", "tree"] = "forest"

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.iterations < 1:
            raise InvalidConfigValueError("iterations", self.iterations, "must be >= 1")

        if self.batch_mode not in ("full", "mini"):
            raise InvalidConfigValueError("batch_mode", self.batch_mode, "expected full or mini")

        if self.batch_count < 1:
            raise InvalidConfigValueError("batch_count", self.batch_count, "must be >= 1")

        if not self.variance_floor > 0:
            raise InvalidConfigValueError("variance_floor", self.variance_floor, "must be > 0")

        if self.coupling not in ("forest", "tree"):
            raise InvalidConfigValueError("coupling", self.coupling, "expected forest or tree")
