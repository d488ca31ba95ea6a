"""# gradatim.datasets

Regression samples, the synthetic imbalanced benchmark, CSV interchange & train/test splitting.
"""

__all__ =   [
                # Core
                "Dataset",
                "Sample",

                # Synthetic benchmark
                "SyntheticSpec",
                "feature_map",
                "generate_synthetic",

                # Interchange
                "load_csv",
                "save_csv",

                # Splitting
                "split_train_test",

                # Exceptions
                "DatasetError",
                "DatasetParseError",
                "DuplicateSampleIdError",
                "InvalidSampleError",
            ]

from gradatim.datasets.csv_io       import *
from gradatim.datasets.dataset      import Dataset
from gradatim.datasets.exceptions   import *
from gradatim.datasets.sample       import Sample
from gradatim.datasets.split        import split_train_test
from gradatim.datasets.synthetic    import *
