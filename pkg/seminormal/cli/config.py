"""Validated command-line configuration."""

from enum import Enum
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from seminormal.combinat.csp import CspPolynomial
from seminormal.combinat.tableau import Shape, iter_shapes
from seminormal.report.core import VERIFY_KINDS
from seminormal.rep.hecke import SignConvention
from seminormal.rep.interp import Normalization

EMIT_OBJECTS = ["u", "sigma", "t", "that", "phat", "d", "polynomial", "orbits"]

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class OutputFormat(str, Enum):
    JSON = "json"
    LATEX = "latex"
    TEXT = "text"


class RunConfig(BaseModel):
    """
    One CLI invocation.

    ``verify`` needs exactly one of ``shape`` and ``max_size``; ``emit``
    needs a shape; ``paper-example`` takes neither.
    """

    command: Literal["paper-example", "verify", "emit"]
    kind: Optional[str] = None
    polynomial: CspPolynomial = CspPolynomial.Q_HOOK
    shape: Optional[str] = None
    max_size: Optional[int] = Field(default=None, ge=2)
    output: OutputFormat = OutputFormat.JSON
    out_path: Optional[Path] = None
    fixtures: Optional[Path] = None
    convention: SignConvention = SignConvention.AUTO
    normalization: Normalization = Normalization.INVERSION
    parallel: bool = False
    log_level: str = "WARNING"

    @field_validator("shape")
    @classmethod
    def _valid_shape(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            Shape.parse(value)
        return value

    @field_validator("log_level")
    @classmethod
    def _valid_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {LOG_LEVELS}")
        return value

    @model_validator(mode="after")
    def _scope(self) -> "RunConfig":
        if self.command == "verify":
            if self.kind not in VERIFY_KINDS:
                raise ValueError(f"verify kind must be one of {VERIFY_KINDS}")
            if (self.shape is None) == (self.max_size is None):
                raise ValueError("verify needs exactly one of --shape and --max-size")
        elif self.command == "emit":
            if self.kind not in EMIT_OBJECTS:
                raise ValueError(f"emit object must be one of {EMIT_OBJECTS}")
            if self.shape is None or self.max_size is not None:
                raise ValueError("emit needs --shape and no --max-size")
        elif self.shape is not None or self.max_size is not None:
            raise ValueError("paper-example takes no --shape or --max-size")
        return self

    def shapes(self) -> List[Shape]:
        """The shapes in scope, ordered by parts."""
        if self.shape is not None:
            return [Shape.parse(self.shape)]
        if self.max_size is None:
            return []
        return sorted(iter_shapes(self.max_size, min_size=2), key=lambda s: s.parts)
