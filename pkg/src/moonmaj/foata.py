"""Foata-type bijection ``phi`` on fillings of left-aligned stack polyominoes.

``phi`` is built one row at a time from the bottom: the step ``gamma_r`` acts
on the Ferrers region under the top row, steered by the pivot column ``j*`` of
the top row's 1.  ``delta_r`` undoes ``gamma_r``.

Kernel conventions: rows are 0-based array positions, columns are 1-based, a
cell value of 0 is an empty row, and ``width[i]`` is the length of row ``i``
inside the Ferrers region (0 for rows outside it).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import njit
from .filling import Filling, FillingError
from .shape import MoonPolyomino, WrongShapeClass

OUTSIDE, ABOVE, R1, R2 = 0, 1, 2, 3


@njit
def _column_lengths(width):
    top = 0
    for i in range(width.shape[0]):
        top = max(top, width[i])
    collen = np.zeros(top + 2, dtype=np.int64)
    for i in range(width.shape[0]):
        for j in range(1, width[i] + 1):
            collen[j] += 1
    return collen


@njit
def _in_r(width, cells, jstar, i):
    return width[i] >= jstar and cells[i] >= 1 and cells[i] <= width[i]


@njit
def region_kernel(width, cells, jstar, kinds):
    """Classify the rows of R; returns (clc_row, crc_row), -1 when absent."""
    n = cells.shape[0]
    clc = -1
    for i in range(n):
        kinds[i] = OUTSIDE
        if _in_r(width, cells, jstar, i):
            kinds[i] = ABOVE
            if clc < 0 and cells[i] < jstar:
                clc = i
    if clc < 0:
        return -1, -1
    crc = -1
    for i in range(clc):
        if kinds[i] != OUTSIDE and cells[i] >= jstar:
            # leftmost; ties go to the lowest
            if crc < 0 or cells[i] <= cells[crc]:
                crc = i
    if crc < 0:
        for i in range(clc, n):
            if kinds[i] != OUTSIDE:
                kinds[i] = R2
        return clc, -1
    jc = cells[crc]
    for i in range(n):
        if kinds[i] == OUTSIDE:
            continue
        if width[i] < jc:
            kinds[i] = R2
        elif i >= crc:
            kinds[i] = R1
    return clc, crc


@njit
def _lowest_left_above(width, cells, jstar, row):
    for i in range(row - 1, -1, -1):
        if _in_r(width, cells, jstar, i) and cells[i] < jstar:
            return i
    return -1


@njit
def gamma_kernel(width, cells, jstar):
    """Apply gamma_r in place; returns (#left 1-cells in R1, #right 1-cells in R2) of the input."""
    n = cells.shape[0]
    kinds = np.zeros(n, dtype=np.int64)
    clc, crc = region_kernel(width, cells, jstar, kinds)
    if clc < 0:
        return 0, 0
    collen = _column_lengths(width)
    rows1 = np.empty(n, dtype=np.int64)
    rows2 = np.empty(n, dtype=np.int64)
    k1 = 0
    k2 = 0
    n_left1 = 0
    n_right2 = 0
    for i in range(n):
        if kinds[i] == R1:
            rows1[k1] = i
            k1 += 1
            if cells[i] < jstar:
                n_left1 += 1
        elif kinds[i] == R2:
            rows2[k2] = i
            k2 += 1
            if cells[i] >= jstar:
                n_right2 += 1

    # gamma^1 on R1
    if k1 > 0:
        crc_len = collen[cells[crc]]
        p1 = 0
        for p2 in range(1, k1):
            i1 = rows1[p1]
            i2 = rows1[p2]
            c1 = cells[i1]
            c2 = cells[i2]
            assert c1 >= jstar, "ptr1 must sit on a right cell"
            assert collen[c1] == crc_len, "ptr1 column length drifted from CRC"
            for i in range(i1 + 1, i2):
                assert not (cells[i] >= 1 and cells[i] <= width[i] and cells[i] <= c1), \
                    "a 1 weakly left of C1 between the pointers"
            if c2 < jstar:
                cells[i1] = c2
                cells[i2] = c1
                p1 = p2
            else:
                l1 = collen[c1]
                l2 = collen[c2]
                if l1 == l2:
                    p1 = p2
                elif c1 < c2 and l1 > l2:
                    pass
                elif c1 > c2 and l1 < l2:
                    iL = _lowest_left_above(width, cells, jstar, i1)
                    assert iL >= 0, "no left cell above C1 for the rotation"
                    jL = cells[iL]
                    assert c2 <= width[iL], "rotation target outside the diagram"
                    cells[iL] = c2
                    cells[i1] = jL
                    cells[i2] = c1
                    p1 = p2
                else:
                    assert False, "unreachable case in gamma^1"
        assert p1 == k1 - 1, "gamma^1 stopped before the last row of R1"

    # gamma^2 on R2
    if k2 > 0:
        i1 = rows2[0]
        if cells[i1] >= jstar:
            iL = _lowest_left_above(width, cells, jstar, i1)
            assert iL >= 0, "borrowing found no left cell"
            assert cells[i1] <= width[iL], "borrowing target outside the diagram"
            c = cells[i1]
            cells[i1] = cells[iL]
            cells[iL] = c
        for p2 in range(1, k2):
            i1 = rows2[p2 - 1]
            i2 = rows2[p2]
            if cells[i2] >= jstar:
                c = cells[i1]
                cells[i1] = cells[i2]
                cells[i2] = c
    return n_left1, n_right2


@njit
def delta_kernel(width, cells, jstar):
    """Inverse of gamma_kernel, in place."""
    n = cells.shape[0]
    inr = np.zeros(n, dtype=np.bool_)
    has_left = False
    for i in range(n):
        if _in_r(width, cells, jstar, i):
            inr[i] = True
            if cells[i] < jstar:
                has_left = True
    if not has_left:
        return
    collen = _column_lengths(width)

    # C*: lowest right cell with no NE chain below it
    cstar = -1
    for i in range(n - 1, -1, -1):
        if not inr[i] or cells[i] < jstar:
            continue
        c = cells[i]
        chained = False
        for k in range(i + 1, n):
            if inr[k] and cells[k] < c and width[k] >= c:
                chained = True
                break
        if not chained:
            cstar = i
            break

    rows2 = np.empty(n, dtype=np.int64)
    rows1 = np.empty(n, dtype=np.int64)
    k1 = 0
    k2 = 0
    for i in range(n):
        if inr[i]:
            if i > cstar:
                rows2[k2] = i
                k2 += 1
            else:
                rows1[k1] = i
                k1 += 1

    # delta^2 on R2, bottom to top
    if k2 > 0:
        for p2 in range(k2 - 2, -1, -1):
            i1 = rows2[p2 + 1]
            i2 = rows2[p2]
            if cells[i2] >= jstar:
                c = cells[i1]
                cells[i1] = cells[i2]
                cells[i2] = c
        # inverse borrowing
        i1 = rows2[0]
        c1 = cells[i1]
        i2 = -1
        for i in range(i1 - 1, -1, -1):
            if inr[i] and cells[i] >= jstar and cells[i] > c1 and width[i1] >= cells[i]:
                i2 = i
                break
        if i2 >= 0:
            blocked = False
            for i in range(i2 + 1, i1):
                if inr[i] and cells[i] < jstar:
                    blocked = True
                    break
            if not blocked:
                c = cells[i1]
                cells[i1] = cells[i2]
                cells[i2] = c

    # delta^1 on R minus R2, bottom to top
    if k1 > 1:
        p1 = k1 - 1
        for p2 in range(k1 - 2, -1, -1):
            i1 = rows1[p1]
            i2 = rows1[p2]
            c1 = cells[i1]
            c2 = cells[i2]
            if c2 < jstar:
                i3 = -1
                for i in range(i2 - 1, -1, -1):
                    if not inr[i]:
                        continue
                    if cells[i] < jstar:
                        break
                    if collen[cells[i]] > collen[c1]:
                        i3 = i
                        break
                if i3 >= 0:
                    c3 = cells[i3]
                    cells[i1] = c3
                    cells[i2] = c1
                    cells[i3] = c2
                else:
                    cells[i1] = c2
                    cells[i2] = c1
                p1 = p2
            elif collen[c1] == collen[c2]:
                p1 = p2


@njit
def gamma_stripped_kernel(width, cells, jstar, inverse):
    """gamma (or delta) after deleting empty rows; returns the new cells and the
    (#left in R1, #right in R2) counts of the forward step."""
    n = cells.shape[0]
    k = 0
    for i in range(n):
        if cells[i] != 0:
            k += 1
    idx = np.empty(k, dtype=np.int64)
    k = 0
    for i in range(n):
        if cells[i] != 0:
            idx[k] = i
            k += 1
    sub = cells[idx].copy()
    w = width[idx].copy()
    n_left1 = 0
    n_right2 = 0
    if inverse:
        delta_kernel(w, sub, jstar)
    else:
        n_left1, n_right2 = gamma_kernel(w, sub, jstar)
    out = cells.copy()
    for t in range(k):
        out[idx[t]] = sub[t]
    return out, n_left1, n_right2


@njit
def _pivot_widths(lens, t, width):
    n = lens.shape[0]
    w = lens[t]
    for i in range(n):
        width[i] = 0
    for i in range(t + 1, n):
        w = min(w, lens[i])
        width[i] = w


@njit
def phi_kernel(lens, cells):
    """phi in place on a left-aligned stack with row lengths ``lens`` and no empty rows."""
    n = lens.shape[0]
    width = np.zeros(n, dtype=np.int64)
    for t in range(n - 2, -1, -1):
        _pivot_widths(lens, t, width)
        gamma_kernel(width, cells, cells[t])


@njit
def phi_inverse_kernel(lens, cells):
    n = lens.shape[0]
    width = np.zeros(n, dtype=np.int64)
    for t in range(n - 1):
        _pivot_widths(lens, t, width)
        delta_kernel(width, cells, cells[t])


@njit
def _compress(hi, cells):
    n = cells.shape[0]
    k = 0
    for i in range(n):
        if cells[i] != 0:
            k += 1
    idx = np.empty(k, dtype=np.int64)
    k = 0
    for i in range(n):
        if cells[i] != 0:
            idx[k] = i
            k += 1
    return idx, hi[idx].copy(), cells[idx].copy()


@njit
def phi_stack_kernel(hi, cells, inverse):
    """phi (or its inverse) on a left-aligned stack filling that may have empty rows."""
    idx, lens, sub = _compress(hi, cells)
    if inverse:
        phi_inverse_kernel(lens, sub)
    else:
        phi_kernel(lens, sub)
    out = cells.copy()
    for k in range(idx.shape[0]):
        out[idx[k]] = sub[k]
    return out


# public API ------------------------------------------------------------

@dataclass(frozen=True)
class RegionContext:
    """Rows steering one ``gamma_r`` step (1-based rows).

    ``rows`` is R, ordered top to bottom; ``clc``/``crc`` are (row, column)
    or None.
    """

    pivot: int
    rows: tuple[int, ...]
    left_cells: tuple[tuple[int, int], ...]
    right_cells: tuple[tuple[int, int], ...]
    clc: tuple[int, int] | None
    crc: tuple[int, int] | None
    r1: tuple[int, ...]
    r2: tuple[int, ...]


def _ferrers_widths(F: Filling) -> np.ndarray:
    if F.shape.kind not in ("ferrers", "rectangle") or F.shape.lo.max() != 1:
        raise WrongShapeClass(f"needs a Ferrers diagram, got {F.shape.kind}")
    return F.shape.hi.copy()


def swap_cells(F: Filling, c1: tuple[int, int], c2: tuple[int, int]) -> Filling:
    """Move the 1s at (i1, j1), (i2, j2) to (i1, j2), (i2, j1)."""
    (i1, j1), (i2, j2) = c1, c2
    if F.cells[i1 - 1] != j1 or F.cells[i2 - 1] != j2:
        raise FillingError("swap_cells needs two 1-cells")
    if i1 == i2 or j1 == j2:
        raise FillingError("swap_cells needs cells in distinct rows and columns")
    if not (F.shape.contains(i1, j2) and F.shape.contains(i2, j1)):
        raise FillingError("swap target lies outside the shape")
    cells = list(F.cells)
    cells[i1 - 1], cells[i2 - 1] = j2, j1
    return Filling(F.shape, tuple(cells))


def compute_regions(G: Filling, pivot: int) -> RegionContext:
    """Regions steering ``gamma_r``; empty rows of ``G`` never belong to R."""
    width = _ferrers_widths(G)
    keep = [i for i in range(G.shape.n) if G.cells[i]]
    sub = G.array[keep].copy()
    kinds_sub = np.zeros(len(keep), dtype=np.int64)
    clc, crc = region_kernel(width[keep].copy(), sub, pivot, kinds_sub)
    kinds = [OUTSIDE] * G.shape.n
    for t, i in enumerate(keep):
        kinds[i] = int(kinds_sub[t])
    rows = tuple(i + 1 for i in range(G.shape.n) if kinds[i] != OUTSIDE)
    left = tuple((i, G.cells[i - 1]) for i in rows if G.cells[i - 1] < pivot)
    right = tuple((i, G.cells[i - 1]) for i in rows if G.cells[i - 1] >= pivot)
    return RegionContext(
        pivot=pivot,
        rows=rows,
        left_cells=left,
        right_cells=right,
        clc=None if clc < 0 else (keep[clc] + 1, int(sub[clc])),
        crc=None if crc < 0 else (keep[crc] + 1, int(sub[crc])),
        r1=tuple(i + 1 for i in range(G.shape.n) if kinds[i] == R1),
        r2=tuple(i + 1 for i in range(G.shape.n) if kinds[i] == R2),
    )


def gamma_r(G: Filling, pivot: int) -> Filling:
    """One gamma_r step on a Ferrers filling with pivot column ``pivot``.

    Empty rows are set aside first and put back afterwards.
    """
    out, _, _ = gamma_stripped_kernel(_ferrers_widths(G), G.array, pivot, False)
    return Filling.from_array(G.shape, out)


def gamma_r_counts(G: Filling, pivot: int) -> tuple[Filling, int, int]:
    """``gamma_r`` plus the number of left 1-cells in R1 and right 1-cells in R2."""
    out, n_left1, n_right2 = gamma_stripped_kernel(_ferrers_widths(G), G.array, pivot, False)
    return Filling.from_array(G.shape, out), int(n_left1), int(n_right2)


def delta_r(G: Filling, pivot: int) -> Filling:
    """Inverse of :func:`gamma_r`."""
    out, _, _ = gamma_stripped_kernel(_ferrers_widths(G), G.array, pivot, True)
    return Filling.from_array(G.shape, out)


def _require_left_stack(F: Filling) -> None:
    if not F.shape.is_left_aligned:
        raise WrongShapeClass(f"phi needs a left-aligned stack polyomino, got {F.shape.kind}")


def phi(F: Filling) -> Filling:
    """The bijection sending maj to ne on a left-aligned stack polyomino."""
    _require_left_stack(F)
    return Filling.from_array(F.shape, phi_stack_kernel(F.shape.hi, F.array, False))


def phi_inverse(F: Filling) -> Filling:
    _require_left_stack(F)
    return Filling.from_array(F.shape, phi_stack_kernel(F.shape.hi, F.array, True))


def maximal_cells(F: Filling) -> dict[int, int | None]:
    """Maximal 1-cells of a left-stack filling, as ``{column: t}``.

    A 1-cell is maximal when no 1 lies strictly above and weakly left of it;
    ``t`` is the leftmost column to its right holding a 1 that forms an NE chain
    with it, or None when there is none.
    """
    _require_left_stack(F)
    ones = F.ones()
    out: dict[int, int | None] = {}
    for i, j in ones:
        if any(k < i and c <= j for k, c in ones):
            continue
        t = None
        for k, c in ones:
            if k < i and c > j and F.shape.contains(i, c):
                t = c if t is None else min(t, c)
        out[j] = t
    return out
