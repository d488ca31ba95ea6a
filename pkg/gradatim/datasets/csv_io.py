"""# gradatim.datasets.csv_io

CSV interchange: header `id,y,x0,...,x{D-1}`, one sample per row, 17 significant digits.

Writing goes through pandas. Reading is strict and row by row so that ragged rows, non-numeric 
cells and non-finite values are reported with their line number.
"""

__all__ =   [
                "load_csv",
                "save_csv",
            ]

from csv                            import reader
from logging                        import Logger
from math                           import isfinite
from pathlib                        import Path
from typing                         import List, Union

from numpy                          import asarray, float64
from pandas                         import DataFrame

from gradatim.datasets.dataset      import Dataset
from gradatim.datasets.exceptions   import DatasetParseError
from gradatim.utilities             import get_logger

# Initialize logger.
LOGGER: Logger =    get_logger("dataset-csv")


def _header_(
    feature_dim:    int
) -> List[str]:
    """# Column Names for a Feature Width."""
    return ["id", "y", *[f"x{j}" for j in range(feature_dim)]]


def save_csv(
    dataset:    Dataset,
    path:       Union[str, Path]
) -> Path:
    """# Write a Dataset as CSV.

    ## Args:
        * dataset   (Dataset):      Samples to write.
        * path      (str | Path):   Destination file; its parent directory is created.

    ## Returns:
        * Path: Written file.
    """
    path:   Path =      Path(path)
    path.parent.mkdir(parents = True, exist_ok = True)

    frame:  DataFrame = DataFrame(dataset.x, columns = _header_(dataset.feature_dim)[2:])
    frame.insert(0, "y", dataset.y)
    frame.insert(0, "id", dataset.ids)

    frame.to_csv(path, index = False, float_format = "%.17g", lineterminator = "\n")

    LOGGER.info(f"Wrote {dataset.num_samples} samples to {path}")

    return path


def load_csv(
    path:   Union[str, Path],
    name:   str =               "dataset"
) -> Dataset:
    """# Read a Dataset from CSV.

    ## Args:
        * path  (str | Path):   Source file.
        * name  (str):          Label of the loaded dataset. Defaults to "dataset".

    ## Raises:
        * DatasetParseError:    On a malformed header, a ragged row, or a non-numeric or 
                                non-finite cell; the message starts with "line N:".
        * OSError:              If the file cannot be read.

    ## Returns:
        * Dataset:  Loaded samples, in file order.
    """
    ids:    List[int] =         []
    ys:     List[float] =       []
    xs:     List[List[float]] = []

    with open(path, newline = "", encoding = "utf-8") as file:

        # Stdlib csv rather than pandas, so parse errors carry line numbers.
        rows =              reader(file)
        header: List[str] = next(rows, None)

        # The header fixes the arity of every row.
        if header is None or len(header) < 3 or header != _header_(len(header) - 2):
            raise DatasetParseError(line = 1, reason = "malformed header, expected id,y,x0,...,x{D-1}")

        for row in rows:

            if len(row) != len(header):
                raise DatasetParseError(
                    line =      rows.line_num,
                    reason =    f"expected {len(header)} fields, found {len(row)}"
                )

            values: List[float] =   [
                                        _parse_cell_(cell, column, rows.line_num)
                                        for cell, column in zip(row[1:], header[1:])
                                    ]

            ids.append(_parse_id_(row[0], rows.line_num))
            ys.append(values[0])
            xs.append(values[1:])

    LOGGER.debug(f"Read {len(ids)} samples from {path}")

    return  Dataset(
                ids =   ids,
                x =     asarray(xs, dtype = float64).reshape(len(ids), len(header) - 2),
                y =     ys,
                name =  name
            )


def _parse_id_(
    cell:   str,
    line:   int
) -> int:
    """# Parse an Integer Identifier Cell."""
    try:                return int(cell)
    except ValueError:  raise DatasetParseError(line = line, reason = f"non-integer id {cell!r}") from None


def _parse_cell_(
    cell:   str,
    column: str,
    line:   int
) -> float:
    """# Parse a Finite Numeric Cell."""
    try:
        value:  float = float(cell)

    except ValueError:
        raise DatasetParseError(
            line =      line,
            reason =    f"non-numeric value {cell!r} in column {column}"
        ) from None

    if not isfinite(value):
        raise DatasetParseError(line = line, reason = f"non-finite value {cell!r} in column {column}")

    return value
