"""
Dense matrices over Q(q) and helpers for the rational matrices obtained by
evaluating them.

``MatrixQq`` is immutable and row-major. Entries are canonical
``RationalFunction`` values, so ``==`` is an exact matrix identity test.
Evaluations produce ``numpy`` object arrays of ``fractions.Fraction``.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from seminormal.errors import DimensionMismatchError, PoleError, SingularMatrixError
from seminormal.exact.rational import (
    ONE,
    ZERO,
    RationalFunction,
    Scalar,
    _coerce,
    fraction_text,
)

Entry = Union[RationalFunction, Scalar]


def _entry(value: Entry) -> RationalFunction:
    entry = _coerce(value)
    if entry is None:
        raise TypeError(f"Cannot use {type(value).__name__} as a matrix entry")
    return entry


class MatrixQq:
    """
    Dense matrix with entries in Q(q).

    Args:
        rows: Number of rows
        cols: Number of columns
        entries: ``rows * cols`` entries in row-major order

    Raises:
        DimensionMismatchError: If the entry count does not match the shape

    Example:
        >>> m = MatrixQq.identity(2)
        >>> (m @ m) == m
        True
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Entry]):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {rows}x{cols}")
        values = tuple(_entry(e) for e in entries)
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}"
            )
        self.rows = rows
        self.cols = cols
        self._entries = values

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "MatrixQq":
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("rows have different lengths")
        return cls(len(rows), width, [x for row in rows for x in row])

    @classmethod
    def identity(cls, n: int) -> "MatrixQq":
        return cls.diagonal([ONE] * n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQq":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Entry]) -> "MatrixQq":
        n = len(values)
        entries = [ZERO] * (n * n)
        for i, value in enumerate(values):
            entries[i * n + i] = _entry(value)
        return cls(n, n, entries)

    @classmethod
    def from_columns(
        cls, size: int, columns: Sequence[Dict[int, RationalFunction]]
    ) -> "MatrixQq":
        """Build a square matrix from sparse columns ``{row: value}``."""
        entries = [ZERO] * (size * size)
        for col, column in enumerate(columns):
            for row, value in column.items():
                entries[row * size + col] = _entry(value)
        return cls(size, size, entries)

    @classmethod
    def constant(cls, array: Union[np.ndarray, Sequence[Sequence[Scalar]]]) -> "MatrixQq":
        """Lift a rational matrix to a constant matrix over Q(q)."""
        return cls.from_rows([[Fraction(x) for x in row] for row in np.asarray(array, dtype=object)])

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> RationalFunction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry {index} outside {self.rows}x{self.cols} matrix")
        return self._entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[RationalFunction, ...]:
        return self._entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[RationalFunction, ...]:
        return self._entries[j :: self.cols]

    def to_rows(self) -> List[List[RationalFunction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self == MatrixQq.identity(self.rows) if self.is_square() else False

    def is_diagonal(self) -> bool:
        return all(
            self._entries[i * self.cols + j].is_zero()
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def support(self) -> np.ndarray:
        """Boolean array marking the nonzero entries."""
        return np.array(
            [[not x.is_zero() for x in self.row(i)] for i in range(self.rows)], dtype=bool
        )

    # -- algebra -----------------------------------------------------------

    def _same_shape(self, other: "MatrixQq") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "MatrixQq") -> "MatrixQq":
        self._same_shape(other)
        return MatrixQq(
            self.rows, self.cols, [a + b for a, b in zip(self._entries, other._entries)]
        )

    def __sub__(self, other: "MatrixQq") -> "MatrixQq":
        self._same_shape(other)
        return MatrixQq(
            self.rows, self.cols, [a - b for a, b in zip(self._entries, other._entries)]
        )

    def __neg__(self) -> "MatrixQq":
        return MatrixQq(self.rows, self.cols, [-a for a in self._entries])

    def scale(self, factor: Entry) -> "MatrixQq":
        factor = _entry(factor)
        return MatrixQq(self.rows, self.cols, [factor * a for a in self._entries])

    def __matmul__(self, other: "MatrixQq") -> "MatrixQq":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        sparse_rows = [
            [(j, b) for j, b in enumerate(other.row(k)) if not b.is_zero()]
            for k in range(other.rows)
        ]
        entries: List[RationalFunction] = []
        for i in range(self.rows):
            acc = [ZERO] * other.cols
            for k, a in enumerate(self.row(i)):
                if a.is_zero():
                    continue
                for j, b in sparse_rows[k]:
                    acc[j] = acc[j] + a * b
            entries.extend(acc)
        return MatrixQq(self.rows, other.cols, entries)

    __mul__ = __matmul__

    def transpose(self) -> "MatrixQq":
        return MatrixQq(
            self.cols, self.rows, [x for j in range(self.cols) for x in self.column(j)]
        )

    def inverse(self) -> "MatrixQq":
        """
        Exact inverse by Gauss-Jordan elimination over Q(q).

        The pivot in each column is the candidate whose row has the fewest
        nonzero entries still to be eliminated, then the smallest entry
        degree, then the lowest index.

        Raises:
            DimensionMismatchError: If the matrix is not square
            SingularMatrixError: If some column has no pivot
        """
        if not self.is_square():
            raise DimensionMismatchError(f"cannot invert a {self.rows}x{self.cols} matrix")
        n = self.rows
        work = [
            list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            candidates = [r for r in range(col, n) if not work[r][col].is_zero()]
            if not candidates:
                raise SingularMatrixError(f"matrix is singular: no pivot in column {col}")
            pivot = min(
                candidates,
                key=lambda r: (
                    sum(1 for x in work[r][col:] if not x.is_zero()),
                    work[r][col].size,
                    r,
                ),
            )
            work[col], work[pivot] = work[pivot], work[col]
            scale = work[col][col].inverse()
            work[col] = [x if x.is_zero() else x * scale for x in work[col]]
            for r in range(n):
                factor = work[r][col]
                if r == col or factor.is_zero():
                    continue
                work[r] = [
                    x if y.is_zero() else x - factor * y
                    for x, y in zip(work[r], work[col])
                ]
        return MatrixQq(n, n, [x for row in work for x in row[n:]])

    def power(self, m: int) -> "MatrixQq":
        """m-th power by repeated squaring; negative m uses the inverse."""
        if not self.is_square():
            raise DimensionMismatchError("only square matrices have powers")
        if m < 0:
            return self.inverse().power(-m)
        result = MatrixQq.identity(self.rows)
        base = self
        while m:
            if m & 1:
                result = result @ base
            m >>= 1
            if m:
                base = base @ base
        return result

    def conjugate_by_diagonal(self, d: "MatrixQq") -> "MatrixQq":
        """
        Return ``D A D^{-1}`` for a diagonal ``D``.

        Raises:
            DimensionMismatchError: If the sizes differ
            ValueError: If D is not diagonal or has a zero diagonal entry
        """
        if not (self.is_square() and d.is_square() and d.rows == self.rows):
            raise DimensionMismatchError("conjugation needs square matrices of equal size")
        if not d.is_diagonal():
            raise ValueError("conjugating matrix is not diagonal")
        diag = [d[i, i] for i in range(d.rows)]
        if any(x.is_zero() for x in diag):
            raise ValueError("conjugating matrix has a zero diagonal entry")
        inverses = [x.inverse() for x in diag]
        n = self.rows
        return MatrixQq(
            n,
            n,
            [
                a if a.is_zero() else diag[k // n] * a * inverses[k % n]
                for k, a in enumerate(self._entries)
            ],
        )

    def reindexed(self, order: Sequence[int]) -> "MatrixQq":
        """Matrix expressed in the basis order ``order``: entry (i, j) is self[order[i], order[j]]."""
        if sorted(order) != list(range(self.rows)) or not self.is_square():
            raise ValueError(f"{list(order)} is not a permutation of the basis")
        return MatrixQq.from_rows([[self[a, b] for b in order] for a in order])

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Scalar) -> np.ndarray:
        """
        Entrywise exact evaluation.

        Raises:
            PoleError: With the coordinates of the first entry that is not
                regular at ``point``
        """
        values = np.empty((self.rows, self.cols), dtype=object)
        for k, x in enumerate(self._entries):
            i, j = divmod(k, self.cols)
            try:
                values[i, j] = x.evaluate(point)
            except PoleError as exc:
                raise exc.at_entry(i, j) from None
        return values

    def poles_at_zero(self) -> List[Tuple[int, int, int]]:
        """All ``(row, col, valuation)`` with negative valuation at q = 0."""
        return [
            (k // self.cols, k % self.cols, x.valuation)
            for k, x in enumerate(self._entries)
            if not x.is_zero() and x.valuation < 0
        ]

    def order_scan(self) -> int:
        """Minimum entrywise valuation at q = 0."""
        valuations = [x.valuation for x in self._entries if not x.is_zero()]
        if not valuations:
            raise ValueError("the zero matrix has no finite valuation")
        return min(valuations)

    # -- comparison and serialization --------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixQq):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return f"MatrixQq({self.rows}x{self.cols})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in self.row(i)] for i in range(self.rows)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MatrixQq":
        return cls.from_rows(
            [[RationalFunction.parse(x) for x in row] for row in data["entries"]]
        )

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))

    @classmethod
    def parse_text(cls, text: str) -> "MatrixQq":
        """
        Parse whitespace-separated rows of canonical entries.

        Blank lines and lines starting with ``#`` are ignored.
        """
        rows = [
            [RationalFunction.parse(token) for token in line.split()]
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        return cls.from_rows(rows)


# -- rational matrices -------------------------------------------------------


def rational_identity(n: int) -> np.ndarray:
    values = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        values[i, i] = Fraction(1)
    return values


def rational_power(array: np.ndarray, m: int) -> np.ndarray:
    result = rational_identity(array.shape[0])
    for _ in range(m):
        result = result @ array
    return result


def rational_order(array: np.ndarray, limit: int) -> Optional[int]:
    """Least m in 1..limit with array^m = I, or None."""
    identity = rational_identity(array.shape[0])
    current = array
    for m in range(1, limit + 1):
        if np.array_equal(current, identity):
            return m
        current = current @ array
    return None


def rational_charpoly(array: np.ndarray) -> List[Fraction]:
    """Characteristic polynomial coefficients, highest degree first."""
    matrix = sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in array]
    )
    lam = sympy.Symbol("lambda")
    return [Fraction(int(c.p), int(c.q)) for c in matrix.charpoly(lam).all_coeffs()]


def rational_text(array: np.ndarray) -> List[List[str]]:
    return [[fraction_text(x) for x in row] for row in array]


def permutation_matrix(images: Sequence[int]) -> np.ndarray:
    """0/1 matrix with a one at (images[x], x) for every column x."""
    n = len(images)
    values = np.zeros((n, n), dtype=int)
    for x, y in enumerate(images):
        values[y, x] = 1
    return values


class MatrixOp(str, Enum):
    MUL = "mul"
    ADD = "add"
    INVERSE = "inverse"
    POWER = "power"
    CONJUGATE_BY_DIAGONAL = "conjugate_by_diagonal"
    POINTWISE_EVAL = "pointwise_eval"
    ORDER_SCAN = "order_scan"


def matrix_algebra(
    a: MatrixQq,
    b: Optional[MatrixQq] = None,
    op: Union[MatrixOp, str] = MatrixOp.MUL,
    *,
    m: Optional[int] = None,
    point: Optional[Scalar] = None,
) -> Union[MatrixQq, np.ndarray, int]:
    """
    Single entry point for the matrix operations.

    Args:
        a: Left operand
        b: Right operand for ``mul`` and ``add``; the diagonal matrix for
            ``conjugate_by_diagonal``
        op: Operation name
        m: Exponent for ``power``
        point: Evaluation point for ``pointwise_eval``

    Example:
        >>> matrix_algebra(MatrixQq.identity(3), op="order_scan")
        0
    """
    op = MatrixOp(op)
    if op is MatrixOp.MUL:
        return a @ b
    if op is MatrixOp.ADD:
        return a + b
    if op is MatrixOp.INVERSE:
        return a.inverse()
    if op is MatrixOp.POWER:
        return a.power(m)
    if op is MatrixOp.CONJUGATE_BY_DIAGONAL:
        return a.conjugate_by_diagonal(b)
    if op is MatrixOp.POINTWISE_EVAL:
        return a.evaluate(point)
    return a.order_scan()
