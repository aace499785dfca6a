"""Report records and their table / JSON / CSV renderings."""

from .formatters import CSV_COLUMNS, ReportFormat, SweepReport, render_lemma_lines, value_fields
from .records import SweepRecord, attach_duality, lemma_pair, parameter_pairs, solve_pair

__all__ = [
    "CSV_COLUMNS",
    "ReportFormat",
    "SweepRecord",
    "SweepReport",
    "attach_duality",
    "lemma_pair",
    "parameter_pairs",
    "render_lemma_lines",
    "solve_pair",
    "value_fields",
]
