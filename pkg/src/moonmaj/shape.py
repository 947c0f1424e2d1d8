"""Moon polyominoes stored as row intervals.

Coordinates are 1-based: row 1 is the top row, column 1 the leftmost column.
A shape is a tuple of ``(left, right)`` intervals listed top to bottom.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

RECTANGLE = "rectangle"
FERRERS = "ferrers"
LEFT_STACK = "left_stack"
TOP_STACK = "top_stack"
GENERAL = "general"


class ShapeError(ValueError):
    """Raised when row intervals do not describe a moon polyomino."""


class EmptyRow(ShapeError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} is empty (left > right)")


class NotComparable(ShapeError):
    def __init__(self, row_a: int, row_b: int):
        self.rows = (row_a, row_b)
        super().__init__(f"rows {row_a} and {row_b} are not comparable by inclusion")


class NotConvex(ShapeError):
    def __init__(self, column: int):
        self.column = column
        super().__init__(f"column {column} is not a contiguous run of rows")


class WrongShapeClass(ValueError):
    """Raised when an operation needs a particular kind of moon polyomino."""


@dataclass(frozen=True)
class Rect:
    top: int
    bottom: int
    left: int
    right: int

    @property
    def height(self) -> int:
        return self.bottom - self.top + 1

    @property
    def width(self) -> int:
        return self.right - self.left + 1

    def contains(self, row: int, col: int) -> bool:
        return self.top <= row <= self.bottom and self.left <= col <= self.right

    def __and__(self, other: Rect) -> Rect | None:
        top, bottom = max(self.top, other.top), min(self.bottom, other.bottom)
        left, right = max(self.left, other.left), min(self.right, other.right)
        if top > bottom or left > right:
            return None
        return Rect(top, bottom, left, right)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(self.top, self.bottom + 1):
            for j in range(self.left, self.right + 1):
                yield i, j

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.top, self.bottom, self.left, self.right)


@dataclass(frozen=True)
class ColumnOrder:
    """The total order on columns: shorter first, then Left before Right,
    Left columns left to right, Right columns right to left."""

    order: tuple[int, ...]
    right: frozenset[int]
    k: int

    def is_left(self, j: int) -> bool:
        return j not in self.right

    @property
    def left(self) -> frozenset[int]:
        return frozenset(range(1, self.k))

    def position(self, j: int) -> int:
        return self.order.index(j)


@dataclass(frozen=True)
class MoonPolyomino:
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(a), int(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        _check(rows)

    @classmethod
    def from_row_lengths(cls, lengths: Iterable[int]) -> MoonPolyomino:
        """Left-aligned shape with the given row lengths (top to bottom)."""
        return cls(tuple((1, int(w)) for w in lengths))

    @classmethod
    def rectangle(cls, height: int, width: int) -> MoonPolyomino:
        return cls(((1, width),) * height)

    @classmethod
    def staircase(cls, n: int) -> MoonPolyomino:
        """Ferrers staircase with rows of lengths n-1, ..., 1."""
        return cls.from_row_lengths(range(n - 1, 0, -1))

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def m(self) -> int:
        return max(b for _, b in self.rows)

    @cached_property
    def size(self) -> int:
        return sum(b - a + 1 for a, b in self.rows)

    def row(self, i: int) -> tuple[int, int]:
        return self.rows[i - 1]

    def row_length(self, i: int) -> int:
        a, b = self.rows[i - 1]
        return b - a + 1

    def contains(self, i: int, j: int) -> bool:
        if not 1 <= i <= self.n:
            return False
        a, b = self.rows[i - 1]
        return a <= j <= b

    def contains_rect(self, rect: Rect) -> bool:
        if rect.top < 1 or rect.bottom > self.n:
            return False
        return all(a <= rect.left and rect.right <= b
                   for a, b in self.rows[rect.top - 1:rect.bottom])

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, (a, b) in enumerate(self.rows, start=1):
            for j in range(a, b + 1):
                yield i, j

    @cached_property
    def column_spans(self) -> tuple[tuple[int, int], ...]:
        """``(top, bottom)`` row range of each column, index ``j-1``."""
        spans = []
        for j in range(1, self.m + 1):
            inside = [i for i, (a, b) in enumerate(self.rows, start=1) if a <= j <= b]
            spans.append((inside[0], inside[-1]))
        return tuple(spans)

    @cached_property
    def column_lengths(self) -> tuple[int, ...]:
        return tuple(b - t + 1 for t, b in self.column_spans)

    @cached_property
    def kind(self) -> str:
        left_aligned = all(a == 1 for a, _ in self.rows)
        top_aligned = all(t == 1 for t, _ in self.column_spans)
        if len(set(self.rows)) == 1:
            return RECTANGLE
        if left_aligned and top_aligned:
            return FERRERS
        if left_aligned:
            return LEFT_STACK
        if top_aligned:
            return TOP_STACK
        return GENERAL

    @property
    def is_left_aligned(self) -> bool:
        return self.kind in (RECTANGLE, FERRERS, LEFT_STACK)

    @property
    def is_top_aligned(self) -> bool:
        return self.kind in (RECTANGLE, FERRERS, TOP_STACK)

    @cached_property
    def lo(self) -> np.ndarray:
        return np.array([a for a, _ in self.rows], dtype=np.int64)

    @cached_property
    def hi(self) -> np.ndarray:
        return np.array([b for _, b in self.rows], dtype=np.int64)

    def to_json(self) -> dict:
        return {"rows": [{"left": a, "right": b} for a, b in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> MoonPolyomino:
        try:
            raw = [(r["left"], r["right"]) for r in data["rows"]]
        except (KeyError, TypeError) as exc:
            raise ShapeError(f"malformed shape JSON: {exc}") from None
        return validate(raw)

    def __str__(self):
        return "\n".join(" " * (a - 1) + "#" * (b - a + 1) for a, b in self.rows)


def _check(rows: Sequence[tuple[int, int]]) -> None:
    if not rows:
        raise ShapeError("a shape needs at least one row")
    for i, (a, b) in enumerate(rows, start=1):
        if a < 1:
            raise ShapeError(f"row {i} starts at column {a} < 1")
        if a > b:
            raise EmptyRow(i)
    for i in range(len(rows)):
        a, b = rows[i]
        for k in range(i + 1, len(rows)):
            c, d = rows[k]
            if not ((a <= c and d <= b) or (c <= a and b <= d)):
                raise NotComparable(i + 1, k + 1)
    m = max(b for _, b in rows)
    if min(a for a, _ in rows) != 1:
        raise ShapeError("column 1 is unused; shift the rows so the leftmost column is 1")
    for j in range(1, m + 1):
        inside = [i for i, (a, b) in enumerate(rows) if a <= j <= b]
        if inside[-1] - inside[0] + 1 != len(inside):
            raise NotConvex(j)


def validate(rows: Iterable[Sequence[int]]) -> MoonPolyomino:
    """Build a moon polyomino from raw ``(left, right)`` pairs, or raise ShapeError.

    >>> validate([(1, 2), (1, 2)]).kind
    'rectangle'
    """
    try:
        pairs = tuple((int(a), int(b)) for a, b in rows)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"rows must be (left, right) integer pairs: {exc}") from None
    return MoonPolyomino(pairs)


def column_length(shape: MoonPolyomino, j: int) -> int:
    if not 1 <= j <= shape.m:
        raise IndexError(f"column {j} out of range 1..{shape.m}")
    return shape.column_lengths[j - 1]


def column_order(shape: MoonPolyomino) -> ColumnOrder:
    lengths = shape.column_lengths
    top = max(lengths)
    k = lengths.index(top) + 1
    right = frozenset(range(k, shape.m + 1))

    def key(j: int):
        if j in right:
            return (lengths[j - 1], 1, -j)
        return (lengths[j - 1], 0, j)

    return ColumnOrder(tuple(sorted(range(1, shape.m + 1), key=key)), right, k)


def maximal_rectangles(shape: MoonPolyomino) -> list[Rect]:
    """Inclusion-maximal rectangles, increasing in height.

    Each one is a distinct row interval times the rows containing it.
    """
    out = []
    for a, b in sorted(set(shape.rows), key=lambda r: r[0] - r[1]):
        inside = [i for i, (c, d) in enumerate(shape.rows, start=1) if c <= a and b <= d]
        out.append(Rect(inside[0], inside[-1], a, b))
    return out


def column_rectangle(shape: MoonPolyomino, order: ColumnOrder, j: int) -> Rect:
    top, bottom = shape.column_spans[j - 1]
    spans = shape.column_spans

    def holds(c: int) -> bool:
        t, b = spans[c - 1]
        return t <= top and bottom <= b

    left = right = j
    if order.is_left(j):
        while right < shape.m and holds(right + 1):
            right += 1
    else:
        length = shape.column_lengths[j - 1]
        while left > 1 and holds(left - 1) and not (
                order.is_left(left - 1) and shape.column_lengths[left - 2] == length):
            left -= 1
    return Rect(top, bottom, left, right)


def column_rectangles(shape: MoonPolyomino, order: ColumnOrder | None = None) -> list[Rect]:
    """``M(c)`` for every column, listed in the column order."""
    order = order or column_order(shape)
    return [column_rectangle(shape, order, j) for j in order.order]


def maximal_ferrers_prefix(shape: MoonPolyomino) -> MoonPolyomino:
    """Largest Ferrers subdiagram containing the whole top row (prefix minima of row lengths)."""
    if not shape.is_left_aligned:
        raise WrongShapeClass(f"needs a left-aligned stack polyomino, got {shape.kind}")
    widths = []
    w = shape.row_length(1)
    for i in range(1, shape.n + 1):
        w = min(w, shape.row_length(i))
        widths.append(w)
    return MoonPolyomino.from_row_lengths(widths)


def left_stack_of(shape: MoonPolyomino) -> MoonPolyomino:
    """The left-aligned stack polyomino with the same row lengths."""
    return MoonPolyomino.from_row_lengths(shape.row_length(i) for i in range(1, shape.n + 1))


def from_columns(spans: Sequence[tuple[int, int]]) -> MoonPolyomino:
    """Shape whose column ``j`` covers rows ``spans[j-1]``; raises ShapeError if not moon."""
    n = max(b for _, b in spans)
    rows = []
    for i in range(1, n + 1):
        cols = [j for j, (t, b) in enumerate(spans, start=1) if t <= i <= b]
        if not cols:
            raise ShapeError(f"row {i} is empty")
        if cols[-1] - cols[0] + 1 != len(cols):
            raise ShapeError(f"row {i} is not convex")
        rows.append((cols[0], cols[-1]))
    if min(t for t, _ in spans) != 1:
        raise ShapeError("row 1 is unused")
    return MoonPolyomino(tuple(rows))
