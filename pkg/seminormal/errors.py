"""
Exception types shared across the package.

Every exception derives from a builtin so callers can keep catching
``ValueError`` or ``ArithmeticError`` without importing this module.
"""

from typing import Any, Dict, List, Optional, Tuple


class PoleError(ValueError):
    """
    A rational function was evaluated where it has a pole.

    Attributes:
        valuation: Order of the function at the evaluation point (negative)
        point: The evaluation point
        entry: (row, col) of the offending matrix entry, 0-based, if any
    """

    def __init__(
        self,
        valuation: int,
        point: Any = None,
        entry: Optional[Tuple[int, int]] = None,
    ):
        self.valuation = valuation
        self.point = point
        self.entry = entry
        where = f" at entry {entry}" if entry is not None else ""
        super().__init__(
            f"pole of order {-valuation} at q = {point}{where}"
        )

    def at_entry(self, row: int, col: int) -> "PoleError":
        return PoleError(self.valuation, self.point, (row, col))


class SingularMatrixError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    pass


class FixtureMismatchError(ValueError):
    """
    Raised when packaged fixture matrices cannot be reproduced.

    Attributes:
        diff: Entry-level differences of the closest candidate, each a dict
            with ``matrix``, ``row``, ``col``, ``expected`` and ``actual``
        closest: Description of the closest candidate that was tried
    """

    def __init__(
        self,
        message: str,
        diff: Optional[List[Dict[str, Any]]] = None,
        closest: Optional[Dict[str, Any]] = None,
    ):
        self.diff = diff or []
        self.closest = closest or {}
        super().__init__(message)
