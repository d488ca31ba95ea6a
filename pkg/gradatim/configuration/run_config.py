"""# gradatim.configuration.run_config

JSON run configuration: the training configuration, its dataset source & report options.

Every field is optional. Unknown keys and ill-typed values are rejected with the dotted key that
caused them (e.g. `trainer.pace.soft_fraction`).
"""

__all__ =   [
                "DatasetSource",
                "RunConfig",
                "build_section",
                "load_run_config",
                "parse_run_config",
            ]

from dataclasses                        import asdict, dataclass, field, fields, is_dataclass, replace
from json                               import JSONDecodeError, load
from pathlib                            import Path
from types                              import NoneType, UnionType
from typing                             import Any, Dict, List, Literal, Optional, Tuple, Type, \
                                               TypeVar, Union, get_args, get_origin, get_type_hints

from gradatim.configuration.exceptions  import InvalidConfigValueError, MalformedConfigError, \
                                               UnknownConfigKeyError
from gradatim.datasets                  import Dataset, SyntheticSpec, generate_synthetic, load_csv, \
                                               split_train_test
from gradatim.training.config           import TrainConfig

# Configuration section type.
Section =   TypeVar("Section")

@dataclass
class DatasetSource:
    """# Dataset Source.

    At most one of `synthetic`, `csv` or the `train_csv`/`test_csv` pair is given; with none, the
    default synthetic benchmark is used.

    ## Attributes:
        * synthetic         (SyntheticSpec):    Synthetic benchmark specification.
        * csv               (str):              Single CSV file, split by `train_fraction`.
        * train_csv         (str):              Pre-split training CSV.
        * test_csv          (str):              Pre-split test CSV.
        * train_fraction    (float):            Training share when splitting. Defaults to 0.8.
        * split_seed        (int):              Split permutation seed. Defaults to 0.
    """
    synthetic:      Optional[SyntheticSpec] =   None
    csv:            Optional[str] =             None
    train_csv:      Optional[str] =             None
    test_csv:       Optional[str] =             None
    train_fraction: float =                     0.8
    split_seed:     int =                       0

    def __post_init__(self) -> None:
        """# Validate Source."""
        if (self.train_csv is None) != (self.test_csv is None):
            raise InvalidConfigValueError(
                "train_csv" if self.train_csv is None else "test_csv",
                None,
                "train_csv and test_csv must be given together"
            )

        given:  int =   sum((
                            self.synthetic is not None,
                            self.csv is not None,
                            self.train_csv is not None
                        ))

        if given > 1:
            raise InvalidConfigValueError(
                "csv" if self.csv is not None else "train_csv",
                self.csv or self.train_csv,
                "exactly one dataset source may be given"
            )

        if not 0 < self.train_fraction < 1:
            raise InvalidConfigValueError("train_fraction", self.train_fraction, "must lie in (0, 1)")

    # METHODS ======================================================================================

    def load(self,
        split_seed: Optional[int] = None
    ) -> Tuple[Dataset, Dataset]:
        """# Load Training & Test Sets.

        ## Args:
            * split_seed    (int):  Overrides the configured split seed.

        ## Returns:
            * Dataset:  Training set.
            * Dataset:  Test set.
        """
        seed:   int =   self.split_seed if split_seed is None else split_seed

        if self.train_csv is not None:
            return load_csv(self.train_csv, name = "train"), load_csv(self.test_csv, name = "test")

        source: Dataset =   load_csv(self.csv) if self.csv is not None \
                            else generate_synthetic(self.synthetic or SyntheticSpec())

        return split_train_test(source, self.train_fraction, seed)


@dataclass
class RunConfig:
    """# Run Configuration.

    ## Attributes:
        * trainer           (TrainConfig):      Training configuration.
        * dataset           (DatasetSource):    Where samples come from.
        * cs_level          (float):            Error level of the cumulative score. Defaults to 5.
        * bin_width         (float):            Target bin width of the entropy analysis. Defaults
                                                to 5.
        * rare_threshold    (float):            Targets at or above this value form the rare
                                                region of the ablation table. Defaults to 60.
        * ablation_seeds    (List[int]):        Seeds of repeated ablation runs; empty runs once
                                                with the configured seeds.
    """
    trainer:        TrainConfig =   field(default_factory = TrainConfig)
    dataset:        DatasetSource = field(default_factory = DatasetSource)
    cs_level:       float =         5.0
    bin_width:      float =         5.0
    rare_threshold: float =         60.0
    ablation_seeds: List[int] =     field(default_factory = list)

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if not self.cs_level >= 0:
            raise InvalidConfigValueError("cs_level", self.cs_level, "must be >= 0")

        if not self.bin_width > 0:
            raise InvalidConfigValueError("bin_width", self.bin_width, "must be > 0")

        if len(set(self.ablation_seeds)) != len(self.ablation_seeds):
            raise InvalidConfigValueError("ablation_seeds", self.ablation_seeds, "seeds must be distinct")

    # METHODS ======================================================================================

    def to_dict(self) -> Dict[str, Any]:
        """# Effective Configuration, with Mode Normalization Applied."""
        return asdict(replace(self, trainer = self.trainer.resolved()))


def build_section(
    cls:    Type[Section],
    data:   Any,
    prefix: str =           ""
) -> Section:
    """# Build a Configuration Dataclass from a JSON Object.

    ## Args:
        * cls       (Type):         Dataclass to build.
        * data      (Any):          Decoded JSON value.
        * prefix    (str):          Dotted key of the section.

    ## Raises:
        * UnknownConfigKeyError:    If a key matches no field.
        * InvalidConfigValueError:  If a value has the wrong type or fails validation.

    ## Returns:
        * Section:  Constructed configuration.
    """
    if not isinstance(data, dict):
        raise InvalidConfigValueError(prefix or "<root>", data, "expected an object")

    hints:  Dict[str, Any] =    get_type_hints(cls)
    names:  set =               {f.name for f in fields(cls)}
    values: Dict[str, Any] =    {}

    for key, value in data.items():

        dotted: str =   f"{prefix}.{key}" if prefix else key

        if key not in names: raise UnknownConfigKeyError(dotted)

        values[key] =   _coerce_(hints[key], value, dotted)

    try:
        return cls(**values)

    except InvalidConfigValueError as e:
        raise e.under(prefix) if prefix else e


def parse_run_config(
    data:   Any
) -> RunConfig:
    """# Build a Run Configuration from a Decoded JSON Document."""
    return build_section(RunConfig, data)


def load_run_config(
    path:   Optional[Union[str, Path]] =    None
) -> RunConfig:
    """# Load a Run Configuration File.

    ## Args:
        * path  (str | Path):   JSON document; None yields every default.

    ## Raises:
        * MalformedConfigError: If the file is not valid JSON.

    ## Returns:
        * RunConfig:    Parsed configuration.
    """
    if path is None: return RunConfig()

    with open(path, "r", encoding = "utf-8") as f:

        try:
            data:   Any =   load(fp = f)

        except JSONDecodeError as e:
            raise MalformedConfigError(str(path), f"line {e.lineno}: {e.msg}") from e

    if not isinstance(data, dict): raise MalformedConfigError(str(path), "expected a JSON object")

    return parse_run_config(data)

# HELPERS ==========================================================================================

def _coerce_(
    hint:   Any,
    value:  Any,
    key:    str
) -> Any:
    """# Check a Decoded Value against a Field Annotation."""
    if is_dataclass(hint): return build_section(hint, value, key)

    origin: Any =   get_origin(hint)
    args:   tuple = get_args(hint)

    if origin in (Union, UnionType):

        if value is None and NoneType in args: return None

        return _coerce_(next(arg for arg in args if arg is not NoneType), value, key)

    if origin is Literal:

        if value not in args: raise InvalidConfigValueError(key, value, f"expected one of {list(args)}")

        return value

    if origin in (list, List):

        if not isinstance(value, list): raise InvalidConfigValueError(key, value, "expected a list")

        return [_coerce_(args[0], item, f"{key}[{i}]") for i, item in enumerate(value)]

    if hint is bool:

        if not isinstance(value, bool): raise InvalidConfigValueError(key, value, "expected a boolean")

        return value

    if hint is int:

        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidConfigValueError(key, value, "expected an integer")

        return value

    if hint is float:

        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidConfigValueError(key, value, "expected a number")

        return float(value)

    if hint is str:

        if not isinstance(value, str): raise InvalidConfigValueError(key, value, "expected a string")

        return value

    return value
