"""# gradatim.metrics.entropy_bins

Predictive uncertainty against target density: mean forest entropy per target bin.
"""

__all__ =   [
                "EntropyBin",
                "entropy_by_target_bin",
                "entropy_count_correlation",
            ]

from dataclasses                    import dataclass
from math                           import nan
from typing                         import List, Sequence

from numpy                          import bincount, floor, int64, ndarray, unique
from scipy.stats                    import spearmanr

from gradatim.datasets              import Dataset
from gradatim.exceptions            import UsageError
from gradatim.forest                import ForestModel

@dataclass(frozen = True)
class EntropyBin:
    """# Target Bin Summary.

    ## Attributes:
        * center        (float):    Bin center in target units.
        * count         (int):      Number of samples in the bin.
        * mean_entropy  (float):    Mean forest entropy of those samples.
    """
    center:         float
    count:          int
    mean_entropy:   float


def entropy_by_target_bin(
    model:      ForestModel,
    dataset:    Dataset,
    bin_width:  float =         5.0
) -> List[EntropyBin]:
    """# Mean Forest Entropy per Target Bin.

    Bin b covers [b·w, (b + 1)·w); empty bins are omitted.

    ## Args:
        * model     (ForestModel):  Forest providing entropies.
        * dataset   (Dataset):      Samples to bin by target.
        * bin_width (float):        Bin width w (> 0). Defaults to 5.

    ## Returns:
        * List[EntropyBin]: Non-empty bins in ascending target order.
    """
    if not bin_width > 0: raise UsageError(f"Bin width must be > 0, got {bin_width}")

    if dataset.num_samples == 0: return []

    entropies:  ndarray =   model.entropy(dataset.x)
    index:      ndarray =   floor(dataset.y / bin_width).astype(int64)
    bins, slot =            unique(index, return_inverse = True)

    counts:     ndarray =   bincount(slot.reshape(-1))
    totals:     ndarray =   bincount(slot.reshape(-1), weights = entropies)

    return  [
                EntropyBin(
                    center =        float((b + 0.5) * bin_width),
                    count =         int(c),
                    mean_entropy =  float(t / c)
                )
                for b, c, t in zip(bins, counts, totals)
            ]


def entropy_count_correlation(
    bins:   Sequence[EntropyBin]
) -> float:
    """# Spearman Correlation between Bin Count & Mean Entropy (NaN below three bins)."""
    if len(bins) < 3: return nan

    return float(spearmanr([b.count for b in bins], [b.mean_entropy for b in bins])[0])
