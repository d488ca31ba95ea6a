"""# gradatim.forest.exceptions

Defines various exceptions pertaining to forest operations.
"""

__all__ =   [
                # Protocol
                "ForestError",

                # Concrete
                "InvalidRoutingError",
                "InvalidTopologyError",
                "NodeOutOfRangeError",
                "NoEffectiveSamplesError",
            ]

from gradatim.exceptions    import SchedulingError, UsageError

# PROTOCOL =========================================================================================

class ForestError(UsageError):
    """# Generic Forest Error.

    Base exception class for all forest-related errors.
    """
    pass

# CONCRETE =========================================================================================

class InvalidRoutingError(ForestError):
    """# Invalid Routing Error.

    Raised when leaf-reach probabilities are negative or do not sum to one.
    """

    def __init__(self,
        deviation:  float
    ):
        """# Raise Invalid Routing Error.

        ## Args:
            * deviation (float):    Largest absolute deviation of a routing vector's sum from 1.
        """
        super(InvalidRoutingError, self).__init__(
            f"""Routing probabilities must be non-negative and sum to 1 (deviation {deviation:.3e})"""
        )


class InvalidTopologyError(ForestError):
    """# Invalid Topology Error.

    Raised when a tree's depth or feature index map is inconsistent.
    """

    def __init__(self,
        reason: str
    ):
        """# Raise Invalid Topology Error.

        ## Args:
            * reason    (str):  Description of the inconsistency.
        """
        super(InvalidTopologyError, self).__init__(f"""Invalid tree topology: {reason}""")


class NodeOutOfRangeError(ForestError):
    """# Node Out of Range Error.

    Raised when a split node identifier does not exist in the tree.
    """

    def __init__(self,
        node_id:        int,
        split_count:    int
    ):
        """# Raise Node Out of Range Error.

        ## Args:
            * node_id       (int):  Requested split node.
            * split_count   (int):  Number of split nodes in the tree.
        """
        super(NodeOutOfRangeError, self).__init__(
            f"""Split node {node_id} out of range [0, {split_count})"""
        )


class NoEffectiveSamplesError(SchedulingError):
    """# No Effective Samples Error.

    Raised when a leaf update receives no sample with positive weight.
    """

    def __init__(self,
        sample_count:   int
    ):
        """# Raise No Effective Samples Error.

        ## Args:
            * sample_count  (int):  Number of samples offered to the update.
        """
        super(NoEffectiveSamplesError, self).__init__(
            f"""Leaf update needs at least one sample with positive weight (all {sample_count} are zero)"""
        )
