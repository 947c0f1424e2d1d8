"""01-fillings with at most one 1 per row, and the statistics ne, des and maj.

A filling stores one entry per row: the column of that row's 1, or 0 for an
empty row.  Kernels work on the same encoding as int64 arrays.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._jit import njit
from .shape import (MoonPolyomino, Rect, WrongShapeClass, column_order, column_rectangles,
                    maximal_rectangles)


class FillingError(ValueError):
    pass


@dataclass(frozen=True)
class Filling:
    shape: MoonPolyomino
    cells: tuple[int, ...]

    def __post_init__(self):
        cells = tuple(0 if c is None else int(c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) != self.shape.n:
            raise FillingError(f"expected {self.shape.n} rows, got {len(cells)}")
        for i, c in enumerate(cells, start=1):
            if c and not self.shape.contains(i, c):
                raise FillingError(f"row {i}: column {c} is outside the row")

    @classmethod
    def from_array(cls, shape: MoonPolyomino, arr) -> Filling:
        return cls(shape, tuple(int(x) for x in arr))

    @classmethod
    def from_ones(cls, shape: MoonPolyomino, ones: Iterable[tuple[int, int]]) -> Filling:
        cells = [0] * shape.n
        for i, j in ones:
            if cells[i - 1]:
                raise FillingError(f"row {i} has two 1s")
            cells[i - 1] = j
        return cls(shape, tuple(cells))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.cells, dtype=np.int64)

    def ones(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.cells, start=1) if c]

    def column_sums(self) -> tuple[int, ...]:
        s = [0] * self.shape.m
        for c in self.cells:
            if c:
                s[c - 1] += 1
        return tuple(s)

    def empty_rows(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.cells, start=1) if not c)

    def class_spec(self) -> FillingClassSpec:
        return FillingClassSpec(self.shape, self.column_sums(), self.empty_rows())

    def restrict(self, rect: Rect) -> list[tuple[int, int]]:
        """1-cells inside ``rect``, top to bottom, with global row indices."""
        return [(i, c) for i, c in self.ones() if rect.contains(i, c)]

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "cells": [c or None for c in self.cells]}

    @classmethod
    def from_json(cls, data: dict) -> Filling:
        try:
            shape = MoonPolyomino.from_json(data["shape"])
            cells = data["cells"]
        except (KeyError, TypeError) as exc:
            raise FillingError(f"malformed filling JSON: {exc}") from None
        return cls(shape, tuple(cells))

    def __str__(self):
        lines = []
        for (a, b), c in zip(self.shape.rows, self.cells):
            lines.append(" " * (a - 1) + "".join("1" if j == c else "." for j in range(a, b + 1)))
        return "\n".join(lines)


@dataclass(frozen=True)
class FillingClassSpec:
    """The class F(M, s; A): column sums ``s`` and empty rows exactly ``A``."""

    shape: MoonPolyomino
    s: tuple[int, ...]
    A: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(x) for x in self.s))
        object.__setattr__(self, "A", frozenset(int(a) for a in self.A))
        shape = self.shape
        if len(self.s) != shape.m:
            raise FillingError(f"s has {len(self.s)} entries, shape has {shape.m} columns")
        if any(x < 0 for x in self.s):
            raise FillingError("column sums must be nonnegative")
        if not all(1 <= a <= shape.n for a in self.A):
            raise FillingError("A must list row indices of the shape")
        if sum(self.s) != shape.n - len(self.A):
            raise FillingError("sum(s) must equal the number of nonempty rows")
        for j, (x, length) in enumerate(zip(self.s, shape.column_lengths), start=1):
            if x > length:
                raise FillingError(f"s_{j} = {x} exceeds the column length {length}")


# kernels ---------------------------------------------------------------

@njit
def ne_kernel(lo, hi, cells):
    n = cells.shape[0]
    total = 0
    for i1 in range(n):
        j1 = cells[i1]
        if j1 == 0:
            continue
        for i2 in range(i1 + 1, n):
            j2 = cells[i2]
            # in a moon polyomino the two free corners decide containment
            if j2 != 0 and j2 < j1 and hi[i2] >= j1 and lo[i1] <= j2:
                total += 1
    return total


@njit
def maj_rect_kernel(cells, top, bottom, left, right):
    """maj of the filling restricted to rows top..bottom (0-based) and columns left..right."""
    n_nonempty = 0
    for i in range(top, bottom + 1):
        c = cells[i]
        if left <= c <= right:
            n_nonempty += 1
    total = 0
    d = 0
    prev = 0
    for i in range(top, bottom + 1):
        c = cells[i]
        if left <= c <= right:
            if d > 0 and prev > c:
                total += n_nonempty - d
            d += 1
            prev = c
    return total


@njit
def des_rect_kernel(cells, top, bottom, left, right):
    total = 0
    prev = 0
    for i in range(top, bottom + 1):
        c = cells[i]
        if left <= c <= right:
            if prev > c:
                total += 1
            prev = c
    return total


@njit
def signed_maj_kernel(cells, rects, signs):
    total = 0
    for r in range(rects.shape[0]):
        total += signs[r] * maj_rect_kernel(cells, rects[r, 0], rects[r, 1],
                                            rects[r, 2], rects[r, 3])
    return total


@njit
def top_stack_maj_kernel(lo, hi, cells):
    n = cells.shape[0]
    total = 0
    for r in range(n):
        if cells[r] == 0:
            continue
        top = r
        while top > 0 and lo[top - 1] <= lo[r] and hi[top - 1] >= hi[r]:
            top -= 1
        total += des_rect_kernel(cells, top, r, lo[r], hi[r])
    return total


# rectangle tables ------------------------------------------------------

def _signed_table(rects: Sequence[Rect | None]) -> tuple[np.ndarray, np.ndarray]:
    """Inclusion-exclusion terms: +rects, -consecutive intersections (0-based rows)."""
    rows, signs = [], []
    for r in rects:
        rows.append((r.top - 1, r.bottom - 1, r.left, r.right))
        signs.append(1)
    for a, b in zip(rects, rects[1:]):
        cap = a & b
        if cap is not None:
            rows.append((cap.top - 1, cap.bottom - 1, cap.left, cap.right))
            signs.append(-1)
    return np.array(rows, dtype=np.int64).reshape(-1, 4), np.array(signs, dtype=np.int64)


_MAXRECT_CACHE: dict = {}
_COLRECT_CACHE: dict = {}


def maxrect_table(shape: MoonPolyomino):
    t = _MAXRECT_CACHE.get(shape.rows)
    if t is None:
        t = _MAXRECT_CACHE[shape.rows] = _signed_table(maximal_rectangles(shape))
    return t


def colrect_table(shape: MoonPolyomino):
    t = _COLRECT_CACHE.get(shape.rows)
    if t is None:
        t = _COLRECT_CACHE[shape.rows] = _signed_table(column_rectangles(shape, column_order(shape)))
    return t


# statistics ------------------------------------------------------------

def ne_count(F: Filling) -> int:
    """Number of NE chains."""
    return int(ne_kernel(F.shape.lo, F.shape.hi, F.array))


def des_rect(F: Filling, rect: Rect) -> int:
    return int(des_rect_kernel(F.array, rect.top - 1, rect.bottom - 1, rect.left, rect.right))


def maj_rect(F: Filling, rect: Rect) -> int:
    return int(maj_rect_kernel(F.array, rect.top - 1, rect.bottom - 1, rect.left, rect.right))


def maj_maxrect(F: Filling) -> int:
    """maj by inclusion-exclusion over the maximal rectangles."""
    rects, signs = maxrect_table(F.shape)
    return int(signed_maj_kernel(F.array, rects, signs))


maj = maj_maxrect


def maj_columns(F: Filling) -> int:
    """maj by inclusion-exclusion over the column rectangles in column order."""
    rects, signs = colrect_table(F.shape)
    return int(signed_maj_kernel(F.array, rects, signs))


def des_filling(F: Filling) -> int:
    """Consecutive nonempty rows whose two 1s form an NE chain (des for a rectangle)."""
    ones = F.ones()
    return sum(1 for (i1, j1), (i2, j2) in zip(ones, ones[1:])
               if j1 > j2 and F.shape.contains(i1, j2) and F.shape.contains(i2, j1))


def maj_top_stack(F: Filling) -> int:
    """maj as a sum of des over the widest rectangles ending at each nonempty row."""
    if not F.shape.is_top_aligned:
        raise WrongShapeClass(f"needs a top-aligned stack polyomino, got {F.shape.kind}")
    return int(top_stack_maj_kernel(F.shape.lo, F.shape.hi, F.array))


# classes ---------------------------------------------------------------

def h_vector(spec: FillingClassSpec) -> tuple[int, ...]:
    """Available cells per column when columns are filled in column order; index ``j-1``."""
    shape = spec.shape
    order = column_order(shape)
    spans = shape.column_spans
    h = [0] * shape.m
    used = 0
    for j in order.order:
        t, b = spans[j - 1]
        a = sum(1 for r in spec.A if t <= r <= b)
        h[j - 1] = shape.column_lengths[j - 1] - a - used
        used += spec.s[j - 1]
    return tuple(h)


def enumerate_fillings(spec: FillingClassSpec) -> Iterator[Filling]:
    """All fillings of the class, lexicographic in the row-by-row column choice."""
    shape = spec.shape
    n, m = shape.n, shape.m
    need = list(spec.s)
    # open_rows[i][j]: non-A rows at index >= i that contain column j+1
    open_rows = [[0] * m for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        open_rows[i] = list(open_rows[i + 1])
        if i + 1 not in spec.A:
            a, b = shape.rows[i]
            for j in range(a - 1, b):
                open_rows[i][j] += 1
    cells = [0] * n

    def rec(i):
        if i == n:
            yield Filling(shape, tuple(cells))
            return
        if any(need[j] > open_rows[i][j] for j in range(m)):
            return
        if i + 1 in spec.A:
            cells[i] = 0
            yield from rec(i + 1)
            return
        a, b = shape.rows[i]
        for c in range(a, b + 1):
            if need[c - 1]:
                need[c - 1] -= 1
                cells[i] = c
                yield from rec(i + 1)
                need[c - 1] += 1
        cells[i] = 0

    yield from rec(0)


def all_fillings(shape: MoonPolyomino) -> Iterator[Filling]:
    """Every filling of the shape (all column sums, all empty-row sets)."""
    choices = [[0] + list(range(a, b + 1)) for a, b in shape.rows]
    for cells in itertools.product(*choices):
        yield Filling(shape, cells)
