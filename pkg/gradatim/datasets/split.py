"""# gradatim.datasets.split

Seeded train/test partition.
"""

__all__ = ["split_train_test"]

from math                               import floor
from typing                             import Tuple

from numpy                              import ndarray, sort

from gradatim.configuration.exceptions  import InvalidConfigValueError
from gradatim.datasets.dataset          import Dataset
from gradatim.utilities                 import make_generator

def split_train_test(
    dataset:        Dataset,
    train_fraction: float,
    seed:           int
) -> Tuple[Dataset, Dataset]:
    """# Split a Dataset by a Seeded Permutation.

    The first floor(train_fraction · N) permuted positions form the training set; both parts keep 
    the source order.

    ## Args:
        * dataset           (Dataset):  Samples to split.
        * train_fraction    (float):    Share of samples used for training, in (0, 1).
        * seed              (int):      Permutation seed.

    ## Returns:
        * Dataset:  Training samples.
        * Dataset:  Test samples.
    """
    if not 0 < train_fraction < 1:
        raise InvalidConfigValueError("train_fraction", train_fraction, "must lie in (0, 1)")

    order:      ndarray =   make_generator(seed).permutation(dataset.num_samples)
    n_train:    int =       floor(round(train_fraction * dataset.num_samples, 9))

    return  (
                dataset.subset(sort(order[:n_train]), name = "train"),
                dataset.subset(sort(order[n_train:]), name = "test")
            )
