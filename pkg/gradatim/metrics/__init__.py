"""# gradatim.metrics

Evaluation metrics, entropy-by-target analysis & report emission.
"""

__all__ =   [
                # Scores
                "cumulative_score",
                "mae",

                # Entropy analysis
                "EntropyBin",
                "entropy_by_target_bin",
                "entropy_count_correlation",

                # Reports
                "TRACE_HEADER",
                "TraceRecord",
                "emit_entropy_bins",
                "emit_summary",
                "emit_table",
                "emit_trace",
                "read_trace",

                # Exceptions
                "EmptyInputError",
                "MetricError",
                "MetricLengthMismatchError",
            ]

from gradatim.metrics.entropy_bins  import *
from gradatim.metrics.exceptions    import *
from gradatim.metrics.scores        import *
from gradatim.metrics.trace         import *
