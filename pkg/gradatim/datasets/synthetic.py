"""# gradatim.datasets.synthetic

Synthetic imbalanced regression benchmark.

Targets come from a dominant truncated Gaussian plus a small uniform tail; features are a fixed 
sinusoidal embedding of the target with additive Gaussian noise, so samples differ between seeds 
only through the draws.
"""

__all__ =   [
                "SyntheticSpec",
                "feature_map",
                "generate_synthetic",
            ]

from dataclasses                        import dataclass
from logging                            import Logger

from numpy                              import arange, asarray, concatenate, float64, ndarray, pi, \
                                           sin, where
from numpy.random                       import Generator

from gradatim.configuration.exceptions  import InvalidConfigValueError
from gradatim.datasets.dataset          import Dataset
from gradatim.utilities                 import get_logger, make_generator

# Initialize logger.
LOGGER: Logger =    get_logger("synthetic-dataset")

@dataclass
class SyntheticSpec:
    """# Synthetic Benchmark Specification.

    ## Attributes:
        * n                 (int):      Number of samples (>= 10). Defaults to 2000.
        * feature_dim       (int):      Feature width D_x. Defaults to 8.
        * majority_mean     (float):    Mean of the majority component. Defaults to 30.
        * majority_sd       (float):    Standard deviation of the majority component. Defaults to 8.
        * target_low        (float):    Lower truncation bound of the majority. Defaults to 0.
        * target_high       (float):    Upper truncation bound of the majority. Defaults to 80.
        * rare_low          (float):    Lower bound of the rare uniform component. Defaults to 60.
        * rare_high         (float):    Upper bound of the rare uniform component. Defaults to 80.
        * rare_mass         (float):    Probability of the rare component, in (0, 0.5). Defaults to 
                                        0.05.
        * noise_sd          (float):    Feature noise standard deviation. Defaults to 0.05.
        * period            (float):    Target span of the base frequency. Defaults to 80.
        * seed              (int):      Generator seed. Defaults to 0.
    """
    n:              int =   2000
    feature_dim:    int =   8
    majority_mean:  float = 30.0
    majority_sd:    float = 8.0
    target_low:     float = 0.0
    target_high:    float = 80.0
    rare_low:       float = 60.0
    rare_high:      float = 80.0
    rare_mass:      float = 0.05
    noise_sd:       float = 0.05
    period:         float = 80.0
    seed:           int =   0

    def __post_init__(self) -> None:
        """# Validate Specification."""
        if self.n < 10:
            raise InvalidConfigValueError("n", self.n, "must be >= 10")

        if self.feature_dim < 1:
            raise InvalidConfigValueError("feature_dim", self.feature_dim, "must be >= 1")

        if not 0 < self.rare_mass < 0.5:
            raise InvalidConfigValueError("rare_mass", self.rare_mass, "must lie in (0, 0.5)")

        if self.noise_sd < 0:
            raise InvalidConfigValueError("noise_sd", self.noise_sd, "must be >= 0")

        if not self.majority_sd > 0:
            raise InvalidConfigValueError("majority_sd", self.majority_sd, "must be > 0")

        if not self.period > 0:
            raise InvalidConfigValueError("period", self.period, "must be > 0")

        if not self.target_low < self.target_high:
            raise InvalidConfigValueError("target_high", self.target_high, "must exceed target_low")

        if not self.rare_low < self.rare_high:
            raise InvalidConfigValueError("rare_high", self.rare_high, "must exceed rare_low")


def feature_map(
    y:              ndarray,
    feature_dim:    int,
    period:         float = 80.0
) -> ndarray:
    """# Noise-Free Features x_j = sin(2π (j + 1) y / period + (j + 1) π / 4).

    ## Args:
        * y             (ndarray):  Targets [N].
        * feature_dim   (int):      Feature width D_x.
        * period        (float):    Target span of the base frequency. Defaults to 80.

    ## Returns:
        * ndarray:  Features [N × D_x].
    """
    harmonic:   ndarray =   arange(1, feature_dim + 1, dtype = float64)

    return sin(2.0 * pi * harmonic * asarray(y, dtype = float64)[:, None] / period + harmonic * pi / 4.0)


def _truncated_normal_(
    rng:    Generator,
    count:  int,
    spec:   SyntheticSpec
) -> ndarray:
    """# Rejection-Sample the Majority Component."""
    accepted:   ndarray =   asarray([], dtype = float64)

    while len(accepted) < count:
        draws:      ndarray =   rng.normal(spec.majority_mean, spec.majority_sd, size = count)
        accepted =              concatenate((
                                    accepted,
                                    draws[(draws >= spec.target_low) & (draws <= spec.target_high)]
                                ))

    return accepted[:count]


def generate_synthetic(
    spec:   SyntheticSpec
) -> Dataset:
    """# Generate the Imbalanced Benchmark.

    ## Args:
        * spec  (SyntheticSpec):    Generation parameters.

    ## Returns:
        * Dataset:  Samples with identifiers 0 ... n − 1.
    """
    rng:        Generator = make_generator(spec.seed)

    # Component membership first, then each component's draws, then feature noise.
    rare:       ndarray =   rng.random(spec.n) < spec.rare_mass
    majority:   ndarray =   _truncated_normal_(rng, spec.n, spec)
    uniform:    ndarray =   rng.uniform(spec.rare_low, spec.rare_high, size = spec.n)
    y:          ndarray =   where(rare, uniform, majority)
    noise:      ndarray =   rng.normal(0.0, spec.noise_sd, size = (spec.n, spec.feature_dim))

    LOGGER.debug(f"Generated {spec.n} samples ({int(rare.sum())} rare) with seed {spec.seed}")

    return  Dataset(
                ids =   arange(spec.n),
                x =     feature_map(y, spec.feature_dim, spec.period) + noise,
                y =     y,
                name =  "synthetic"
            )
