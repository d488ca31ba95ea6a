"""# gradatim.datasets.sample

Single input-output pair.
"""

__all__ = ["Sample"]

from dataclasses    import dataclass, field
from typing         import Optional

from numpy          import ndarray

@dataclass(frozen = True)
class Sample:
    """# Dataset Sample.

    ## Attributes:
        * id        (int):              Identifier, unique within its dataset.
        * x         (ndarray):          Features [D_x].
        * y         (float):            Target.
        * origin_id (int | None):       Identifier of the original sample when this one is a 
                                        curriculum duplicate.
    """
    id:         int
    x:          ndarray =       field(compare = False)
    y:          float
    origin_id:  Optional[int] = None

    @property
    def is_duplicate(self) -> bool:
        """# Whether the Sample was Created by Curriculum Reconstruction"""
        return self.origin_id is not None
