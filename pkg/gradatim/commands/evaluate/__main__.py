"""# gradatim.commands.evaluate.main

Main process entry point for evaluate command.
"""

__all__ = ["evaluate_entry_point"]

from gradatim.commands.evaluate.__args__    import EvaluateConfig
from gradatim.registration                  import register_command

@register_command(
    id =        "evaluate",
    config =    EvaluateConfig
)
def evaluate_entry_point(
    model:      str,
    data:       str,
    cs_level:   float = 5.0,
    **kwargs
) -> int:
    """# Print MAE & Cumulative Score of a Saved Model as JSON.

    ## Args:
        * model     (str):      Model file.
        * data      (str):      CSV dataset.
        * cs_level  (float):    Error level of the cumulative score. Defaults to 5.

    ## Returns:
        * int:  Exit code.
    """
    from json                   import dumps

    from gradatim.datasets      import load_csv
    from gradatim.forest        import ForestModel
    from gradatim.training      import EvaluationResult, evaluate

    result: EvaluationResult =  evaluate(ForestModel.load(model), load_csv(data), cs_level)

    print(dumps({"mae": result.mae, "cs": result.cs}))

    return 0
