"""# gradatim.metrics.trace

Per-pace trace records & report emission (CSV tables and the JSON summary).
"""

__all__ =   [
                "TRACE_HEADER",
                "TraceRecord",
                "emit_entropy_bins",
                "emit_summary",
                "emit_table",
                "emit_trace",
                "read_trace",
            ]

from dataclasses                    import astuple, dataclass
from json                           import dump
from logging                        import Logger
from math                           import isfinite
from pathlib                        import Path
from typing                         import Any, Dict, List, Sequence, Union

from numpy                          import generic
from pandas                         import DataFrame, read_csv

from gradatim.metrics.entropy_bins  import EntropyBin
from gradatim.utilities             import get_logger

# Initialize logger.
LOGGER:         Logger =    get_logger("trace")

# Fixed trace columns, in order.
TRACE_HEADER:   List[str] = [
                                "pace",
                                "lambda",
                                "lambda_prime",
                                "gamma",
                                "n_selected",
                                "n_soft",
                                "n_zero",
                                "train_mae",
                                "test_mae",
                                "test_cs",
                                "mean_entropy",
                                "score_shift",
                            ]

@dataclass(frozen = True)
class TraceRecord:
    """# One Trace Row.

    ## Attributes:
        * pace          (int):      Pace number, starting at 1.
        * lam           (float):    Outer threshold λ (column "lambda").
        * lam_prime     (float):    Inner threshold λ′ (column "lambda_prime").
        * gamma         (float):    Entropy coefficient.
        * n_selected    (int):      Samples with positive weight.
        * n_soft        (int):      Samples with fractional weight.
        * n_zero        (int):      Samples with zero weight.
        * train_mae     (float):    Training-set MAE after the pace.
        * test_mae      (float):    Test-set MAE after the pace.
        * test_cs       (float):    Test-set cumulative score after the pace, in [0, 100].
        * mean_entropy  (float):    Mean forest entropy over the training set.
        * score_shift   (float):    Constant subtracted from scores before thresholding.
    """
    pace:           int
    lam:            float
    lam_prime:      float
    gamma:          float
    n_selected:     int
    n_soft:         int
    n_zero:         int
    train_mae:      float
    test_mae:       float
    test_cs:        float
    mean_entropy:   float
    score_shift:    float


def _json_ready_(
    value:  Any
) -> Any:
    """# Replace Non-Finite Floats with None, Recursively; NumPy Scalars Become Python Values."""
    if isinstance(value, dict):             return {key: _json_ready_(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):    return [_json_ready_(item) for item in value]
    if isinstance(value, generic):          value = value.item()
    if isinstance(value, float):            return value if isfinite(value) else None

    return value


def _prepare_(
    path:   Union[str, Path]
) -> Path:
    """# Resolve a Destination & Create its Directory."""
    path:   Path =  Path(path)
    path.parent.mkdir(parents = True, exist_ok = True)

    return path


def emit_table(
    rows:       Sequence[Sequence[Any]],
    columns:    Sequence[str],
    path:       Union[str, Path]
) -> Path:
    """# Write Rows as CSV with a Fixed Header.

    ## Args:
        * rows      (Sequence[Sequence[Any]]):  Row values, in column order.
        * columns   (Sequence[str]):            Header.
        * path      (str | Path):               Destination file.

    ## Returns:
        * Path: Written file.
    """
    path:   Path =  _prepare_(path)

    DataFrame([list(row) for row in rows], columns = list(columns)).to_csv(
        path,
        index =             False,
        lineterminator =    "\n"
    )

    LOGGER.info(f"Wrote {len(rows)} rows to {path}")

    return path


def emit_trace(
    records:    Sequence[TraceRecord],
    path:       Union[str, Path]
) -> Path:
    """# Write the Per-Pace Trace CSV (Header-Only when there are no Records)."""
    return emit_table([astuple(record) for record in records], TRACE_HEADER, path)


def read_trace(
    path:   Union[str, Path]
) -> List[TraceRecord]:
    """# Parse a Trace CSV Written by `emit_trace`.

    ## Args:
        * path  (str | Path):   Trace file.

    ## Returns:
        * List[TraceRecord]:    Records in file order.
    """
    frame:  DataFrame = read_csv(path, float_precision = "round_trip")

    return  [
                TraceRecord(
                    pace =          int(row["pace"]),
                    lam =           float(row["lambda"]),
                    lam_prime =     float(row["lambda_prime"]),
                    gamma =         float(row["gamma"]),
                    n_selected =    int(row["n_selected"]),
                    n_soft =        int(row["n_soft"]),
                    n_zero =        int(row["n_zero"]),
                    train_mae =     float(row["train_mae"]),
                    test_mae =      float(row["test_mae"]),
                    test_cs =       float(row["test_cs"]),
                    mean_entropy =  float(row["mean_entropy"]),
                    score_shift =   float(row["score_shift"])
                )
                for row in frame.to_dict(orient = "records")
            ]


def emit_entropy_bins(
    bins:   Sequence[EntropyBin],
    path:   Union[str, Path]
) -> Path:
    """# Write Entropy Bins as CSV (center, count, mean_entropy)."""
    return emit_table([astuple(b) for b in bins], ["center", "count", "mean_entropy"], path)


def emit_summary(
    summary:    Dict[str, Any],
    path:       Union[str, Path]
) -> Path:
    """# Write a JSON Summary.

    ## Args:
        * summary   (Dict[str, Any]):   Mapping of JSON types and NumPy scalars; NaN & infinities
                                        are written as null.
        * path      (str | Path):       Destination file.

    ## Returns:
        * Path: Written file.
    """
    path:   Path =  _prepare_(path)

    with open(path, "w", encoding = "utf-8") as f:

        dump(
            obj =           _json_ready_(summary),
            fp =            f,
            indent =        2,
            ensure_ascii =  False,
            allow_nan =     False
        )

    LOGGER.info(f"Wrote summary to {path}")

    return path
