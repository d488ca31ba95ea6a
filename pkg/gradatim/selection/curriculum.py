"""# gradatim.selection.curriculum

Curriculum reconstruction: duplicating high-uncertainty samples into the training set.
"""

__all__ =   [
                "curriculum_candidates",
                "curriculum_reconstruction",
            ]

from logging                            import Logger

from numpy                              import asarray, flatnonzero, float64, lexsort, ndarray, tile

from gradatim.configuration.exceptions  import InvalidConfigValueError
from gradatim.datasets                  import Dataset
from gradatim.selection.config          import PaceConfig
from gradatim.selection.exceptions      import LengthMismatchError
from gradatim.utilities                 import get_logger

# Initialize logger.
LOGGER: Logger =    get_logger("curriculum")


def curriculum_candidates(
    dataset:    Dataset,
    entropies:  ndarray,
    config:     PaceConfig
) -> ndarray:
    """# Positions of the Samples to Duplicate.

    Only original samples are candidates. In count mode the `curriculum_count` highest entropies 
    win, ties going to the lower identifier; in threshold mode every entropy above 
    `curriculum_threshold` qualifies.

    ## Returns:
        * ndarray:  Row positions, highest entropy first.
    """
    h:          ndarray =   asarray(entropies, dtype = float64).reshape(-1)

    if len(h) != dataset.num_samples: raise LengthMismatchError(first = dataset.num_samples, second = len(h))

    originals:  ndarray =   flatnonzero(dataset.originals)
    ranked:     ndarray =   originals[lexsort((dataset.ids[originals], -h[originals]))]

    if config.curriculum_threshold is not None: return ranked[h[ranked] > config.curriculum_threshold]

    if config.curriculum_count > len(originals):
        raise InvalidConfigValueError(
            "curriculum_count", config.curriculum_count, f"exceeds the {len(originals)} original samples"
        )

    return ranked[:config.curriculum_count]


def curriculum_reconstruction(
    dataset:    Dataset,
    entropies:  ndarray,
    config:     PaceConfig
) -> Dataset:
    """# Append Copies of the Highest-Entropy Samples.

    Each chosen sample is copied `curriculum_copies` times; copies get fresh identifiers and keep 
    a link to their original. Existing samples keep their order.

    ## Args:
        * dataset   (Dataset):      Current training set.
        * entropies (ndarray):      Forest entropy bounds per sample [N].
        * config    (PaceConfig):   Curriculum settings.

    ## Returns:
        * Dataset:  Augmented dataset.
    """
    chosen:     ndarray =   curriculum_candidates(dataset, entropies, config)

    if len(chosen) == 0: return dataset

    augmented:  Dataset =   dataset.append_duplicates(tile(chosen, config.curriculum_copies))

    LOGGER.debug(
        f"Duplicated {len(chosen)} samples x{config.curriculum_copies}; "
        f"{dataset.num_samples} -> {augmented.num_samples}"
    )

    return augmented
