"""Exhaustive and seeded-random moon polyominoes.

A moon polyomino is a chain of nested row intervals ``J_1 > J_2 > ... > J_t``
(widest first).  The widest rows sit together in the middle; every narrower
interval has some copies above and some below, placed so that row intervals
grow down to the middle and shrink after it.  That description is unique, so
enumerating it lists every shape once.
"""
from __future__ import annotations

import random
from typing import Iterator

from .shape import MoonPolyomino


def _assemble(top: list, mid: tuple, count: int, bottom: list) -> MoonPolyomino:
    return MoonPolyomino(tuple(reversed(top)) + (mid,) * count + tuple(bottom))


def moon_shapes(max_cells: int, *, max_columns: int | None = None,
                min_cells: int = 1) -> Iterator[MoonPolyomino]:
    """Every moon polyomino with ``min_cells <= size <= max_cells``."""
    widest = max_cells if max_columns is None else min(max_cells, max_columns)

    def grow(top, bottom, last, cells, mid, count):
        if cells >= min_cells:
            yield _assemble(top, mid, count, bottom)
        lo, hi = last
        for a in range(lo, hi + 1):
            for b in range(a, hi + 1):
                if (a, b) == last:
                    continue
                w = b - a + 1
                room = (max_cells - cells) // w
                for up in range(room + 1):
                    for dn in range(room + 1 - up):
                        if up + dn:
                            yield from grow(top + [(a, b)] * up, bottom + [(a, b)] * dn,
                                            (a, b), cells + w * (up + dn), mid, count)

    for m in range(1, widest + 1):
        for count in range(1, max_cells // m + 1):
            yield from grow([], [], (1, m), m * count, (1, m), count)


def left_stack_shapes(max_cells: int, *, min_cells: int = 1) -> Iterator[MoonPolyomino]:
    """Left-aligned stack polyominoes: unimodal sequences of row lengths."""
    def rec(prefix, cells, peaked):
        if prefix and cells >= min_cells:
            yield MoonPolyomino.from_row_lengths(prefix)
        last = prefix[-1] if prefix else 0
        for w in range(1, max_cells - cells + 1):
            now_peaked = peaked or w < last
            if peaked and w > last:
                break
            yield from rec(prefix + [w], cells + w, now_peaked)

    yield from rec([], 0, False)


def ferrers_shapes(max_cells: int, *, min_cells: int = 1) -> Iterator[MoonPolyomino]:
    """Ferrers diagrams (integer partitions, largest row on top)."""
    def rec(prefix, cells, cap):
        if prefix and cells >= min_cells:
            yield MoonPolyomino.from_row_lengths(prefix)
        for w in range(1, min(cap, max_cells - cells) + 1):
            yield from rec(prefix + [w], cells + w, w)

    yield from rec([], 0, max_cells)


def random_moon_shape(rng: random.Random, max_cells: int, max_columns: int) -> MoonPolyomino:
    """A random moon polyomino with at most ``max_cells`` cells and ``max_columns`` columns."""
    m = rng.randint(1, min(max_columns, max_cells))
    count = rng.randint(1, max(1, max_cells // m))
    cells = m * count
    top: list = []
    bottom: list = []
    last = (1, m)
    while rng.random() < 0.8:
        lo, hi = last
        if lo == hi:
            break
        a = rng.randint(lo, hi)
        b = rng.randint(a, hi)
        if (a, b) == last:
            continue
        w = b - a + 1
        room = (max_cells - cells) // w
        if room == 0:
            break
        total = rng.randint(1, room)
        up = rng.randint(0, total)
        top += [(a, b)] * up
        bottom = bottom + [(a, b)] * (total - up)
        cells += w * total
        last = (a, b)
    return _assemble(top, (1, m), count, bottom)
