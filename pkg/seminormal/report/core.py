"""
Report containers shared by the verification suites and the CLI.

Every finding is a ``RelationResult`` with a status from ``STATUSES``;
suites return lists of them and the CLI assembles a ``Report`` keyed by
shape. Reports serialize to plain JSON-ready dictionaries.
"""

import json
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

SCHEMA_VERSION = "1.0.0"

STATUSES = ["pass", "fail", "informational"]

COMMANDS = ["paper-example", "verify", "emit"]

VERIFY_KINDS = ["hecke", "cactus", "interp", "csp", "all"]


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INFORMATIONAL = "informational"


class RelationResult:
    """
    One checked relation instance.

    Args:
        relation: Family name, e.g. ``"nesting"`` or ``"hecke_quadratic"``
        instance: Human-readable instance description
        status: Outcome
        detail: Optional extra data (JSON-serializable)
    """

    __slots__ = ("relation", "instance", "status", "detail")

    def __init__(
        self,
        relation: str,
        instance: str,
        status: Status,
        detail: Optional[Dict[str, Any]] = None,
    ):
        self.relation = relation
        self.instance = instance
        self.status = Status(status)
        self.detail = detail

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "relation": self.relation,
            "instance": self.instance,
            "status": self.status.value,
        }
        if self.detail is not None:
            data["detail"] = self.detail
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RelationResult":
        return cls(data["relation"], data["instance"], Status(data["status"]), data.get("detail"))

    def __repr__(self) -> str:
        return f"RelationResult({self.relation!r}, {self.instance!r}, {self.status.value})"


def all_pass(results: Iterable[RelationResult]) -> bool:
    return not any(result.failed for result in results)


def demote_failures(results: Iterable[RelationResult]) -> List[RelationResult]:
    """Turn failures into informational entries (claims that do not apply)."""
    return [
        RelationResult(r.relation, r.instance, Status.INFORMATIONAL, r.detail)
        if r.failed
        else r
        for r in results
    ]


def summarize(results: Iterable[RelationResult]) -> Dict[str, int]:
    counts = {status: 0 for status in STATUSES}
    for result in results:
        counts[result.status.value] += 1
    return counts


class Report:
    """
    Top-level report produced by a CLI command.

    Args:
        command: One of ``COMMANDS``
        kind: Suite or object name (``"all"``, ``"phat"``, ...)
        results: Mapping from section key (usually a shape string) to
            JSON-ready section data
        metadata: Extra top-level fields
    """

    def __init__(
        self,
        command: str,
        kind: Optional[str] = None,
        results: Optional[Dict[str, Any]] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        if command not in COMMANDS:
            raise ValueError(f"Unknown command: {command}")
        self.command = command
        self.kind = kind
        self.results = results or {}
        self.metadata = metadata or {}
        self.failures = 0

    def add_section(self, key: str, section: Dict[str, Any]) -> None:
        self.results[key] = section
        self.failures += _count_failures(section)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "kind": self.kind,
            "ok": self.ok,
            "metadata": self.metadata,
            "results": self.results,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        report = cls(data["command"], data.get("kind"), metadata=data.get("metadata"))
        for key, section in data.get("results", {}).items():
            report.add_section(key, section)
        return report


def _count_failures(data: Any) -> int:
    """Count entries with status "fail" anywhere inside a section."""
    if isinstance(data, dict):
        own = 1 if data.get("status") == Status.FAIL.value and "relation" in data else 0
        return own + sum(_count_failures(v) for v in data.values())
    if isinstance(data, list):
        return sum(_count_failures(v) for v in data)
    return 0
