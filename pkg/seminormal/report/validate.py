"""
Report schema and validation.

The schemas are plain dictionaries in a JSON-Schema-like dialect so that
they can be published alongside the reports (see docs/report_schema.md).
"""

import re
from typing import Any, Dict, List

from seminormal.report.core import COMMANDS, SCHEMA_VERSION, STATUSES

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "command", "kind", "results"],
    "properties": {
        "schema_version": {"type": "string", "pattern": r"^\d+\.\d+\.\d+$"},
        "command": {"type": "string", "enum": COMMANDS},
        "kind": {"type": ["string", "null"]},
        "ok": {"type": "boolean"},
        "metadata": {"type": "object"},
        "results": {"type": "object"},
    },
}

RELATION_SCHEMA = {
    "type": "object",
    "required": ["relation", "instance", "status"],
    "properties": {
        "relation": {"type": "string"},
        "instance": {"type": "string"},
        "status": {"type": "string", "enum": STATUSES},
        "detail": {"type": ["object", "null"]},
    },
}

_TYPES = {
    "string": str,
    "object": dict,
    "array": list,
    "boolean": bool,
    "null": type(None),
}


def _type_ok(value: Any, expected) -> bool:
    names = expected if isinstance(expected, list) else [expected]
    return any(isinstance(value, _TYPES[name]) for name in names)


def validate_schema(data: Dict[str, Any], schema: Dict[str, Any], where: str = "") -> List[str]:
    """
    Validate one object against a schema dictionary.

    Args:
        data: Object to validate
        schema: Schema with ``required`` and ``properties``
        where: Path prefix used in the messages

    Returns:
        List of validation error messages (empty if valid)
    """
    prefix = f"{where}: " if where else ""
    if not isinstance(data, dict):
        return [f"{prefix}expected an object, got {type(data).__name__}"]
    errors = []

    for name in schema.get("required", []):
        if name not in data:
            errors.append(f"{prefix}Required field '{name}' is missing")

    for name, field_schema in schema.get("properties", {}).items():
        if name not in data:
            continue
        value = data[name]
        expected = field_schema.get("type")
        if expected and not _type_ok(value, expected):
            errors.append(f"{prefix}Field '{name}' must be of type {expected}")
            continue
        if "enum" in field_schema and value not in field_schema["enum"]:
            errors.append(f"{prefix}Field '{name}' must be one of {field_schema['enum']}")
        if "pattern" in field_schema and not re.match(field_schema["pattern"], value):
            errors.append(f"{prefix}Field '{name}' does not match {field_schema['pattern']}")
    return errors


def _relation_errors(data: Any, path: str) -> List[str]:
    if isinstance(data, dict):
        errors = []
        if "relation" in data:
            errors.extend(validate_schema(data, RELATION_SCHEMA, path))
        for key, value in data.items():
            errors.extend(_relation_errors(value, f"{path}.{key}"))
        return errors
    if isinstance(data, list):
        return [e for k, value in enumerate(data) for e in _relation_errors(value, f"{path}[{k}]")]
    return []


def validate_report(data: Dict[str, Any]) -> None:
    """
    Validate a report dictionary.

    Checks the top-level fields, the schema version and every relation
    entry found anywhere under ``results``.

    Raises:
        ValueError: Listing every violation

    Example:
        >>> validate_report({"schema_version": "1.0.0", "command": "verify",
        ...                  "kind": "csp", "results": {}})
    """
    errors = validate_schema(data, REPORT_SCHEMA)
    if not errors and data["schema_version"].split(".")[0] != SCHEMA_VERSION.split(".")[0]:
        errors.append(
            f"Unsupported schema_version {data['schema_version']} (expected {SCHEMA_VERSION})"
        )
    if isinstance(data, dict) and isinstance(data.get("results"), dict):
        errors.extend(_relation_errors(data["results"], "results"))
    if errors:
        raise ValueError(
            "Report validation failed:\n" + "\n".join(f"  - {error}" for error in errors)
        )


def get_schemas() -> Dict[str, Any]:
    return {"report": REPORT_SCHEMA, "relation": RELATION_SCHEMA}
