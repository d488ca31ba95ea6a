"""# gradatim.selection.weights

Hard (binary) and mixture (soft) sample weights.
"""

__all__ =   [
                "hard_weights",
                "soft_weights",
            ]

from numpy                          import asarray, clip, errstate, float64, ndarray, where

from gradatim.exceptions            import UsageError


def hard_weights(
    scores: ndarray,
    lam:    float
) -> ndarray:
    """# Binary Weights v_i = [score_i > −λ].

    ## Args:
        * scores    (ndarray):  Scores [N].
        * lam       (float):    Threshold λ > 0.

    ## Returns:
        * ndarray:  Weights in {0, 1} [N].
    """
    if not lam > 0: raise UsageError(f"lambda must be > 0, got {lam}")

    return (asarray(scores, dtype = float64) > -lam).astype(float64)


def soft_weights(
    scores:     ndarray,
    lam:        float,
    lam_prime:  float
) -> ndarray:
    """# Mixture Weights.

    v = 1 for score >= −λ′, v = 0 for score <= −λ, and v = −ζ/score − ζ/λ in between, with 
    ζ = (1/λ′ − 1/λ)⁻¹. The middle branch is evaluated as ζ (score + λ) / (−score λ), which keeps 
    it positive for every score above −λ.

    ## Args:
        * scores    (ndarray):  Scores [N].
        * lam       (float):    Outer threshold λ.
        * lam_prime (float):    Inner threshold λ′, with λ > λ′ > 0.

    ## Returns:
        * ndarray:  Weights in [0, 1] [N].
    """
    if not lam > lam_prime > 0:
        raise UsageError(f"Thresholds must satisfy lambda > lambda_prime > 0, got {lam}, {lam_prime}")

    s:      ndarray =   asarray(scores, dtype = float64)
    zeta:   float =     1.0 / (1.0 / lam_prime - 1.0 / lam)

    # Branches outside the band may divide by zero; they are masked out.
    with errstate(divide = "ignore", invalid = "ignore"):
        band:   ndarray =   clip(zeta * (s + lam) / (-s * lam), 0.0, 1.0)

    return where(s >= -lam_prime, 1.0, where(s <= -lam, 0.0, band))
