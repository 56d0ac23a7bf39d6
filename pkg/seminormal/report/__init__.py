from seminormal.report.core import (
    COMMANDS,
    SCHEMA_VERSION,
    STATUSES,
    VERIFY_KINDS,
    RelationResult,
    Report,
    Status,
    all_pass,
    demote_failures,
    summarize,
)
from seminormal.report.validate import (
    RELATION_SCHEMA,
    REPORT_SCHEMA,
    get_schemas,
    validate_report,
    validate_schema,
)
from seminormal.report.renderers import (
    JSONRenderer,
    LaTeXRenderer,
    ReportRenderer,
    TextRenderer,
    latex_entry,
    quantum_factorization,
)

__all__ = [
    "COMMANDS",
    "SCHEMA_VERSION",
    "STATUSES",
    "VERIFY_KINDS",
    "RelationResult",
    "Report",
    "Status",
    "all_pass",
    "demote_failures",
    "summarize",
    "RELATION_SCHEMA",
    "REPORT_SCHEMA",
    "get_schemas",
    "validate_report",
    "validate_schema",
    "JSONRenderer",
    "LaTeXRenderer",
    "ReportRenderer",
    "TextRenderer",
    "latex_entry",
    "quantum_factorization",
]
