"""
Partitions and standard Young tableaux.

Conventions: English orientation, rows and columns numbered from 1, content
of cell (i, j) is j - i. The basis order used by every matrix module is the
order returned by ``enumerate_syt``: content vectors in decreasing
lexicographic order, which is the same as row reading words in increasing
lexicographic order.
"""

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial, prod
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

ContentVector = Tuple[int, ...]


@dataclass(frozen=True)
class Shape:
    """
    A partition, given by weakly decreasing positive parts.

    Example:
        >>> Shape.parse("3,3").size
        6
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("shape must have at least one part")
        if any(p <= 0 for p in parts):
            raise ValueError(f"shape parts must be positive: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"shape parts must be weakly decreasing: {list(parts)}")

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse comma-separated parts such as ``"3,3"``."""
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError(f"invalid shape string: {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def is_rectangular(self) -> bool:
        return len(set(self.parts)) == 1

    def conjugate(self) -> "Shape":
        return Shape(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def cells(self) -> List[Tuple[int, int]]:
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def to_list(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class StandardTableau:
    """
    A standard Young tableau.

    Raises:
        ValueError: If the rows do not fill the shape with 1..r increasing
            along rows and down columns
    """

    shape: Shape
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(row) for row in rows) != self.shape.parts:
            raise ValueError(f"rows {rows} do not have shape {self.shape}")
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, self.shape.size + 1)):
            raise ValueError(f"entries of {rows} are not 1..{self.shape.size}")
        if not _is_standard(rows):
            raise ValueError(f"{rows} is not standard")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "StandardTableau":
        return cls(Shape(tuple(len(row) for row in rows)), tuple(map(tuple, rows)))

    @property
    def size(self) -> int:
        return self.shape.size

    @cached_property
    def _positions(self) -> Dict[int, Tuple[int, int]]:
        return {
            x: (i + 1, j + 1) for i, row in enumerate(self.rows) for j, x in enumerate(row)
        }

    def position(self, k: int) -> Tuple[int, int]:
        """(row, column) of entry k, 1-based."""
        return self._positions[k]

    def content_vector(self) -> ContentVector:
        return tuple(j - i for i, j in (self._positions[k] for k in range(1, self.size + 1)))

    def swapped(self, i: int) -> Optional["StandardTableau"]:
        """s_i T if it is standard, else None."""
        swap = {i: i + 1, i + 1: i}
        rows = tuple(tuple(swap.get(x, x) for x in row) for row in self.rows)
        if not _is_standard(rows):
            return None
        return StandardTableau(self.shape, rows)

    def reading_word(self) -> Tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return json.dumps([list(row) for row in self.rows], separators=(",", ":"))

    def to_dict(self) -> Dict[str, Any]:
        return {"shape": self.shape.to_list(), "rows": [list(row) for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StandardTableau":
        return cls(Shape(tuple(data["shape"])), tuple(map(tuple, data["rows"])))


def _is_standard(rows: Sequence[Sequence[int]]) -> bool:
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


@dataclass(frozen=True)
class TableauStatistics:
    inv: int
    maj: int
    descents: FrozenSet[int] = field(default_factory=frozenset)

    def to_dict(self) -> Dict[str, Any]:
        return {"inv": self.inv, "maj": self.maj, "descents": sorted(self.descents)}


def partitions(n: int) -> List[Shape]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 1:
        raise ValueError(f"partitions need a positive size, got {n}")
    shapes = [
        tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))
        for p in _sympy_partitions(n)
    ]
    return [Shape(parts) for parts in sorted(shapes, reverse=True)]


def enumerate_syt(shape: Shape) -> List[StandardTableau]:
    """
    All standard tableaux of ``shape`` in basis order.

    Entries are placed from r downwards into outer corners of the shape
    still to be filled.

    Example:
        >>> [str(t) for t in enumerate_syt(Shape((2, 2)))]
        ['[[1,2],[3,4]]', '[[1,3],[2,4]]']
    """
    found: List[StandardTableau] = []
    remaining = list(shape.parts)
    grid: Dict[Tuple[int, int], int] = {}

    def fill(k: int) -> None:
        if k == 0:
            rows = tuple(
                tuple(grid[(i, j)] for j in range(p)) for i, p in enumerate(shape.parts)
            )
            found.append(StandardTableau(shape, rows))
            return
        for i, length in enumerate(remaining):
            below = remaining[i + 1] if i + 1 < len(remaining) else 0
            if length > below:
                cell = (i, length - 1)
                grid[cell] = k
                remaining[i] -= 1
                fill(k - 1)
                remaining[i] += 1
                del grid[cell]

    fill(shape.size)
    return sorted(found, key=lambda t: t.content_vector(), reverse=True)


def content_vector(T: StandardTableau) -> ContentVector:
    return T.content_vector()


def _check_index(T: StandardTableau, i: int) -> None:
    if not 1 <= i < T.size:
        raise ValueError(f"index {i} outside 1..{T.size - 1}")


def axial_distance(T: StandardTableau, i: int) -> int:
    """
    ct(i+1) - ct(i); +1 for i, i+1 in the same row, -1 in the same column.

    Raises:
        ValueError: Unless 1 <= i < r
    """
    _check_index(T, i)
    ct = T.content_vector()
    return ct[i] - ct[i - 1]


def bender_knuth(T: StandardTableau, i: int) -> StandardTableau:
    """Swap i and i+1 when the result is standard, else return T."""
    _check_index(T, i)
    swapped = T.swapped(i)
    return T if swapped is None else swapped


def jdt_promotion(T: StandardTableau) -> StandardTableau:
    """
    Jeu-de-taquin promotion by direct sliding.

    Entry 1 is removed, the hole slides to an outer corner by repeatedly
    taking the smaller of its right and lower neighbours, every entry is
    decreased by one and r fills the vacated corner.
    """
    grid = [list(row) for row in T.rows]
    i, j = 0, 0
    while True:
        right = grid[i][j + 1] if j + 1 < len(grid[i]) else None
        below = grid[i + 1][j] if i + 1 < len(grid) and j < len(grid[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = below
            i += 1
    grid[i][j] = T.size + 1
    return StandardTableau(T.shape, tuple(tuple(x - 1 for x in row) for row in grid))


def reverse_complement(T: StandardTableau) -> StandardTableau:
    """
    Half-turn rotation with entries e -> r + 1 - e.

    Raises:
        ValueError: For a non-rectangular shape
    """
    if not T.shape.is_rectangular:
        raise ValueError(f"reverse_complement needs a rectangle, got {T.shape}")
    r = T.size
    return StandardTableau(
        T.shape, tuple(tuple(r + 1 - x for x in reversed(row)) for row in reversed(T.rows))
    )


def statistics(T: StandardTableau) -> TableauStatistics:
    """
    inv, descents and maj.

    inv counts pairs k < l with ct(l) < ct(k); i is a descent when i + 1
    lies in a strictly lower row than i.
    """
    ct = T.content_vector()
    r = T.size
    inv = sum(1 for k in range(r) for l in range(k + 1, r) if ct[l] < ct[k])
    descents = frozenset(
        i for i in range(1, r) if T.position(i + 1)[0] > T.position(i)[0]
    )
    return TableauStatistics(inv=inv, maj=sum(descents), descents=descents)


def hook_lengths(shape: Shape) -> List[int]:
    """Hook length of every cell, in row-major order."""
    columns = shape.conjugate().parts
    return [
        (length - j - 1) + (columns[j] - i - 1) + 1
        for i, length in enumerate(shape.parts)
        for j in range(length)
    ]


def hook_length_count(shape: Shape) -> int:
    """Number of standard tableaux by the hook-length formula."""
    return factorial(shape.size) // prod(hook_lengths(shape))


def iter_shapes(max_size: int, min_size: int = 1) -> Iterator[Shape]:
    for n in range(min_size, max_size + 1):
        yield from partitions(n)
