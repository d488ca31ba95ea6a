"""# gradatim.commands.generate.main

Main process entry point for generate command.
"""

__all__ = ["generate_entry_point"]

from typing                                 import Optional

from gradatim.commands.generate.__args__    import GenerateConfig
from gradatim.registration                  import register_command

@register_command(
    id =        "generate",
    config =    GenerateConfig
)
def generate_entry_point(
    out:    str,
    spec:   Optional[str] = None,
    **kwargs
) -> int:
    """# Generate the Synthetic Benchmark.

    ## Args:
        * out   (str):  Destination CSV.
        * spec  (str):  JSON specification file; None uses the default benchmark.

    ## Returns:
        * int:  Exit code.
    """
    from json                               import JSONDecodeError, load

    from gradatim.configuration             import MalformedConfigError
    from gradatim.configuration.run_config  import build_section
    from gradatim.datasets                  import SyntheticSpec, generate_synthetic, save_csv

    synthetic:  SyntheticSpec = SyntheticSpec()

    if spec is not None:

        with open(spec, "r", encoding = "utf-8") as f:

            try:                            synthetic = build_section(SyntheticSpec, load(fp = f))
            except JSONDecodeError as e:    raise MalformedConfigError(spec, f"line {e.lineno}: {e.msg}") from e

    save_csv(generate_synthetic(synthetic), out)

    return 0
