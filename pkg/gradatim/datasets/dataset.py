"""# gradatim.datasets.dataset

In-memory regression dataset.
"""

__all__ = ["Dataset"]

from logging                            import Logger
from typing                             import Iterator, Optional, Sequence

from numpy                              import array_equal, asarray, concatenate, \
                                           float64, full, int64, isfinite, ndarray, unique, where

from gradatim.datasets.exceptions       import DuplicateSampleIdError, InvalidSampleError
from gradatim.datasets.sample           import Sample
from gradatim.utilities                 import get_logger

# Marker for samples without provenance.
NO_ORIGIN:  int =   -1

class Dataset:
    """# Regression Dataset.

    Samples are stored column-wise: identifiers [N], features [N × D_x], targets [N] and origin 
    identifiers [N] (-1 for original samples).
    """

    def __init__(self,
        ids:        Sequence[int],
        x:          ndarray,
        y:          Sequence[float],
        origin_ids: Optional[Sequence[int]] =   None,
        name:       str =                       "dataset"
    ):
        """# Instantiate Dataset.

        ## Args:
            * ids           (Sequence[int]):    Unique sample identifiers.
            * x             (ndarray):          Features [N × D_x].
            * y             (Sequence[float]):  Targets [N].
            * origin_ids    (Sequence[int]):    Provenance of duplicates (-1 when none). Defaults to 
                                                none for every sample.
            * name          (str):              Label used in logs. Defaults to "dataset".

        ## Raises:
            * InvalidSampleError:       If shapes disagree or values are non-finite.
            * DuplicateSampleIdError:   If an identifier repeats.
        """
        # Initialize logger.
        self.__logger__:    Logger =    get_logger(f"{name}-dataset")

        # Define properties.
        self._name_:        str =       name
        self._ids_:         ndarray =   asarray(ids, dtype = int64).reshape(-1)
        self._y_:           ndarray =   asarray(y, dtype = float64).reshape(-1)
        self._x_:           ndarray =   asarray(x, dtype = float64)
        self._origin_ids_:  ndarray =   full(len(self._ids_), NO_ORIGIN, dtype = int64) \
                                        if origin_ids is None else asarray(origin_ids, dtype = int64).reshape(-1)

        # Rows of a flat feature vector are recovered from the identifier count.
        if self._x_.ndim != 2:
            self._x_ = self._x_.reshape(len(self._ids_), -1) if len(self._ids_) else self._x_.reshape(0, 0)

        self._validate_()

    # PROPERTIES ===================================================================================

    @property
    def feature_dim(self) -> int:
        """# Feature Width D_x"""
        return self._x_.shape[1]

    @property
    def ids(self) -> ndarray:
        """# Sample Identifiers [N]"""
        return self._ids_

    @property
    def name(self) -> str:
        """# Dataset Label"""
        return self._name_

    @property
    def next_id(self) -> int:
        """# Smallest Identifier Greater than Every Existing One"""
        return int(self._ids_.max()) + 1 if len(self._ids_) else 0

    @property
    def num_samples(self) -> int:
        """# Number of Samples"""
        return len(self._ids_)

    @property
    def origin_ids(self) -> ndarray:
        """# Provenance Identifiers [N], -1 for Original Samples"""
        return self._origin_ids_

    @property
    def originals(self) -> ndarray:
        """# Mask of Samples that are not Curriculum Duplicates [N]"""
        return self._origin_ids_ == NO_ORIGIN

    @property
    def x(self) -> ndarray:
        """# Features [N × D_x]"""
        return self._x_

    @property
    def y(self) -> ndarray:
        """# Targets [N]"""
        return self._y_

    # METHODS ======================================================================================

    @classmethod
    def from_samples(cls,
        samples:    Sequence[Sample],
        name:       str =               "dataset"
    ) -> "Dataset":
        """# Build a Dataset from Samples.

        ## Args:
            * samples   (Sequence[Sample]): Samples, in order.
            * name      (str):              Label used in logs. Defaults to "dataset".

        ## Returns:
            * Dataset:  New dataset.
        """
        return  cls(
                    ids =           [s.id for s in samples],
                    x =             [asarray(s.x, dtype = float64) for s in samples],
                    y =             [s.y for s in samples],
                    origin_ids =    [NO_ORIGIN if s.origin_id is None else s.origin_id for s in samples],
                    name =          name
                )

    def subset(self,
        indices:    Sequence[int],
        name:       Optional[str] = None
    ) -> "Dataset":
        """# Select Samples by Position.

        ## Args:
            * indices   (Sequence[int]):    Row positions, in the desired order.
            * name      (str):              Label of the new dataset. Defaults to this one's.

        ## Returns:
            * Dataset:  New dataset holding copies of the selected rows.
        """
        rows:   ndarray =   asarray(indices, dtype = int64)

        return  Dataset(
                    ids =           self._ids_[rows],
                    x =             self._x_[rows],
                    y =             self._y_[rows],
                    origin_ids =    self._origin_ids_[rows],
                    name =          name or self._name_
                )

    def append_duplicates(self,
        indices:    Sequence[int]
    ) -> "Dataset":
        """# Append Copies of Samples with Fresh Identifiers & Provenance Links.

        ## Args:
            * indices   (Sequence[int]):    Row positions of the samples to copy, in order.

        ## Returns:
            * Dataset:  New dataset, original order preserved, copies appended.
        """
        rows:   ndarray =   asarray(indices, dtype = int64)

        if not len(rows): return self.subset(range(self.num_samples))

        # Copies of copies still point at the original sample.
        origin: ndarray =   where(
                                self._origin_ids_[rows] == NO_ORIGIN,
                                self._ids_[rows],
                                self._origin_ids_[rows]
                            )

        return  Dataset(
                    ids =           concatenate((self._ids_, self.next_id + asarray(range(len(rows))))),
                    x =             concatenate((self._x_, self._x_[rows])),
                    y =             concatenate((self._y_, self._y_[rows])),
                    origin_ids =    concatenate((self._origin_ids_, origin)),
                    name =          self._name_
                )

    def position_of(self,
        sample_ids: Sequence[int]
    ) -> ndarray:
        """# Row Positions of Sample Identifiers."""
        lookup: dict =  {int(i): p for p, i in enumerate(self._ids_)}

        return asarray([lookup[int(i)] for i in sample_ids], dtype = int64)

    # HELPERS ======================================================================================

    def _validate_(self) -> None:
        """# Validate Column Shapes, Finiteness & Identifier Uniqueness."""
        n:  int =   len(self._ids_)

        if not (len(self._y_) == len(self._x_) == len(self._origin_ids_) == n):
            raise InvalidSampleError(
                f"column lengths differ (ids {n}, x {len(self._x_)}, y {len(self._y_)}, "
                f"origins {len(self._origin_ids_)})"
            )

        if not (isfinite(self._x_).all() and isfinite(self._y_).all()):
            raise InvalidSampleError("features and targets must be finite")

        values, counts =    unique(self._ids_, return_counts = True)

        if (counts > 1).any(): raise DuplicateSampleIdError(sample_id = int(values[counts > 1][0]))

    # DUNDERS ======================================================================================

    def __eq__(self,
        other:  object
    ) -> bool:
        """# Column-Wise Equality."""
        if not isinstance(other, Dataset): return NotImplemented

        return  all(
                    a.shape == b.shape and array_equal(a, b)
                    for a, b in zip(
                        (self._ids_, self._x_, self._y_, self._origin_ids_),
                        (other._ids_, other._x_, other._y_, other._origin_ids_)
                    )
                )

    def __getitem__(self,
        key:    int
    ) -> Sample:
        """# Access Sample by Position."""
        return  Sample(
                    id =        int(self._ids_[key]),
                    x =         self._x_[key],
                    y =         float(self._y_[key]),
                    origin_id = None if self._origin_ids_[key] == NO_ORIGIN else int(self._origin_ids_[key])
                )

    def __iter__(self) -> Iterator[Sample]:
        """# Iterate Over Samples."""
        return iter(self[i] for i in range(self.num_samples))

    def __len__(self) -> int:
        """# Number of Samples"""
        return self.num_samples

    def __repr__(self) -> str:
        """# Dataset Object Representation"""
        return f"""<Dataset(name = {self._name_}, n = {self.num_samples}, d = {self.feature_dim})>"""
