"""Column rearrangement of a moon polyomino into a left-aligned stack, and the
maps ``f`` (keeps maj), ``g`` (keeps ne) and ``psi = g^-1 . phi . f``.

``alpha`` repeatedly takes the rectangle ``rows(c1) x columns 1..d`` (``d``
maximal) and moves its first column to its right end.  A move is stored as
``(top, bottom, d)`` with 1-based rows; the rectangle always starts at column 1
of the current shape.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import njit
from .filling import Filling, FillingError
from .foata import phi_stack_kernel
from .shape import MoonPolyomino, Rect, left_stack_of


@dataclass(frozen=True)
class Move:
    """One step of ``alpha``: ``rect`` in the current shape, and the original
    label of the column moved from its left end to its right end."""

    rect: Rect
    moved_column: int


@dataclass(frozen=True)
class AlphaResult:
    source: MoonPolyomino
    shape: MoonPolyomino
    moves: tuple[Move, ...]
    labels: tuple[int, ...]
    """``labels[j-1]`` is the original column now at position ``j``."""

    @property
    def move_array(self) -> np.ndarray:
        rows = [(m.rect.top - 1, m.rect.bottom - 1, m.rect.right) for m in self.moves]
        return np.array(rows, dtype=np.int64).reshape(-1, 3)

    def permute(self, s) -> tuple[int, ...]:
        """Column data of the source listed in the order of the result's columns."""
        return tuple(s[j - 1] for j in self.labels)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "moves": [{"rect": list(m.rect.as_tuple()), "moved_column": m.moved_column}
                      for m in self.moves],
            "labels": list(self.labels),
        }


_ALPHA_CACHE: dict = {}


def alpha(M: MoonPolyomino) -> AlphaResult:
    """Rearrange the columns of ``M`` into the left-aligned stack with the same row lengths.

    >>> r = alpha(MoonPolyomino(((2, 2), (1, 2))))
    >>> r.shape.rows, len(r.moves)
    (((1, 1), (1, 2)), 1)
    """
    hit = _ALPHA_CACHE.get(M.rows)
    if hit is not None:
        return hit
    rows = [list(r) for r in M.rows]
    labels = list(range(1, M.m + 1))
    moves = []
    while True:
        col1 = [i for i, (a, _) in enumerate(rows) if a == 1]
        if len(col1) == len(rows):
            break
        top, bottom = col1[0], col1[-1]
        d = min(rows[i][1] for i in col1)
        rect = Rect(top + 1, bottom + 1, 1, d)
        moves.append(Move(rect, labels[0]))
        labels = labels[1:d] + [labels[0]] + labels[d:]
        for i, (a, b) in enumerate(rows):
            if top <= i <= bottom:
                continue
            if b <= d:
                rows[i] = [a - 1, b - 1]
    N = MoonPolyomino(tuple(tuple(r) for r in rows))
    assert N == left_stack_of(M)
    out = AlphaResult(M, N, tuple(moves), tuple(labels))
    _ALPHA_CACHE[M.rows] = out
    return out


# kernels ---------------------------------------------------------------

@njit
def tau_kernel(vals, d):
    """tau in place on one rectangle; ``vals[i]`` in 0..d (0 = empty row)."""
    h = vals.shape[0]
    last = d + 1
    for r in range(h - 1, -1, -1):
        if vals[r] != 1:
            continue
        a = r - 1
        while a >= 0 and vals[a] == 0:
            a -= 1
        b = r + 1
        while b < h and vals[b] == 0:
            b += 1
        has_a = a >= 0
        has_b = b < h
        a_is_prev = has_a and vals[a] == 1
        if (not has_a or a_is_prev) and not has_b:
            vals[r] = last
        elif ((not has_a or a_is_prev) and has_b) or (has_a and has_b and vals[a] > vals[b]):
            # maximal downward chain of ascents
            cur = r
            nxt = b
            while True:
                vals[cur] = vals[nxt]
                cur = nxt
                nxt = cur + 1
                while nxt < h and vals[nxt] == 0:
                    nxt += 1
                if nxt >= h or vals[cur] > vals[nxt]:
                    break
            # vals[cur] was overwritten by the chain shift only if cur != r
            vals[cur] = last
        else:
            # maximal upward chain of descents
            cur = r
            nxt = a
            prev = vals[r]
            while True:
                nv = vals[nxt]
                vals[cur] = nv
                cur = nxt
                if nv <= prev:
                    break
                prev = nv
                nxt = cur - 1
                while nxt >= 0 and vals[nxt] == 0:
                    nxt -= 1
                if nxt < 0 or vals[nxt] <= prev:
                    break
            vals[cur] = last
    for i in range(h):
        if vals[i] != 0:
            vals[i] -= 1


@njit
def _rotate(vals, d):
    h = vals.shape[0]
    out = np.zeros(h, dtype=np.int64)
    for i in range(h):
        if vals[i] != 0:
            out[h - 1 - i] = d + 1 - vals[i]
    return out


@njit
def tau_inverse_kernel(vals, d):
    rot = _rotate(vals, d)
    tau_kernel(rot, d)
    back = _rotate(rot, d)
    for i in range(vals.shape[0]):
        vals[i] = back[i]


@njit
def _rect_vals(cells, top, bottom, d):
    vals = np.zeros(bottom - top + 1, dtype=np.int64)
    for i in range(top, bottom + 1):
        c = cells[i]
        if 1 <= c <= d:
            vals[i - top] = c
    return vals


@njit
def _write_rect(cells, vals, top, bottom):
    for i in range(top, bottom + 1):
        if vals[i - top] != 0:
            cells[i] = vals[i - top]


@njit
def _shift_outside(cells, top, bottom, d, forward):
    for i in range(cells.shape[0]):
        if top <= i <= bottom:
            continue
        c = cells[i]
        if forward:
            if 2 <= c <= d:
                cells[i] = c - 1
        elif 1 <= c <= d - 1:
            cells[i] = c + 1


@njit
def f_kernel(cells, moves):
    for t in range(moves.shape[0]):
        top, bottom, d = moves[t, 0], moves[t, 1], moves[t, 2]
        vals = _rect_vals(cells, top, bottom, d)
        tau_kernel(vals, d)
        _write_rect(cells, vals, top, bottom)
        _shift_outside(cells, top, bottom, d, True)


@njit
def f_inverse_kernel(cells, moves):
    for t in range(moves.shape[0] - 1, -1, -1):
        top, bottom, d = moves[t, 0], moves[t, 1], moves[t, 2]
        _shift_outside(cells, top, bottom, d, False)
        vals = _rect_vals(cells, top, bottom, d)
        tau_inverse_kernel(vals, d)
        _write_rect(cells, vals, top, bottom)


@njit
def g_step_kernel(vals, d):
    """One shading step on a rectangle: column 1 moves to column d."""
    h = vals.shape[0]
    ne_rows = np.empty(h, dtype=np.int64)
    n_ne = 0
    for i in range(h):
        if vals[i] != 0:
            ne_rows[n_ne] = i
            n_ne += 1
    ls = np.empty(h, dtype=np.int64)
    rest = np.empty(h, dtype=np.int64)
    k = 0
    w = 0
    for t in range(n_ne):
        c = vals[ne_rows[t]]
        if c == 1:
            ls[k] = w
            k += 1
        else:
            rest[w] = c
            w += 1
    taken = np.zeros(n_ne, dtype=np.bool_)
    for i in range(k):
        # i-th one from the bottom; index counted from the bottom of ne_rows
        idx = ls[i] + i
        taken[n_ne - 1 - idx] = True
    w = 0
    for t in range(n_ne):
        if taken[t]:
            vals[ne_rows[t]] = d
        else:
            vals[ne_rows[t]] = rest[w] - 1
            w += 1


@njit
def g_inverse_step_kernel(vals, d):
    h = vals.shape[0]
    ne_rows = np.empty(h, dtype=np.int64)
    n_ne = 0
    for i in range(h):
        if vals[i] != 0:
            ne_rows[n_ne] = i
            n_ne += 1
    ls = np.empty(h, dtype=np.int64)
    rest = np.empty(h, dtype=np.int64)
    k = 0
    w = 0
    for t in range(n_ne - 1, -1, -1):
        if vals[ne_rows[t]] == d:
            ls[k] = (n_ne - 1 - t) - k
            k += 1
    for t in range(n_ne):
        c = vals[ne_rows[t]]
        if c != d:
            rest[w] = c
            w += 1
    taken = np.zeros(n_ne, dtype=np.bool_)
    for i in range(k):
        taken[ls[i] + i] = True
    w = 0
    for t in range(n_ne):
        if taken[t]:
            vals[ne_rows[t]] = 1
        else:
            vals[ne_rows[t]] = rest[w] + 1
            w += 1


@njit
def g_kernel(cells, moves):
    for t in range(moves.shape[0]):
        top, bottom, d = moves[t, 0], moves[t, 1], moves[t, 2]
        vals = _rect_vals(cells, top, bottom, d)
        g_step_kernel(vals, d)
        _write_rect(cells, vals, top, bottom)
        _shift_outside(cells, top, bottom, d, True)


@njit
def g_inverse_kernel(cells, moves):
    for t in range(moves.shape[0] - 1, -1, -1):
        top, bottom, d = moves[t, 0], moves[t, 1], moves[t, 2]
        _shift_outside(cells, top, bottom, d, False)
        vals = _rect_vals(cells, top, bottom, d)
        g_inverse_step_kernel(vals, d)
        _write_rect(cells, vals, top, bottom)


@njit
def psi_kernel(cells, moves, stack_hi, inverse):
    out = cells.copy()
    if inverse:
        g_kernel(out, moves)
        out = phi_stack_kernel(stack_hi, out, True)
        f_inverse_kernel(out, moves)
    else:
        f_kernel(out, moves)
        out = phi_stack_kernel(stack_hi, out, False)
        g_inverse_kernel(out, moves)
    return out


# public API ------------------------------------------------------------

def _rect_filling_vals(R: Filling) -> np.ndarray:
    if R.shape.kind != "rectangle":
        raise FillingError(f"tau needs a rectangular filling, got {R.shape.kind}")
    return R.array.copy()


def tau(R: Filling) -> Filling:
    """Column sums rotate left by one; descent positions are kept.

    >>> sq = MoonPolyomino.rectangle(2, 2)
    >>> tau(Filling(sq, (1, 2))).cells
    (1, 2)
    """
    vals = _rect_filling_vals(R)
    tau_kernel(vals, R.shape.m)
    return Filling.from_array(R.shape, vals)


def tau_inverse(R: Filling) -> Filling:
    vals = _rect_filling_vals(R)
    tau_inverse_kernel(vals, R.shape.m)
    return Filling.from_array(R.shape, vals)


def _apply(F: Filling, kernel, target: MoonPolyomino, moves: np.ndarray) -> Filling:
    cells = F.array.copy()
    kernel(cells, moves)
    return Filling.from_array(target, cells)


def f(F: Filling) -> Filling:
    """maj-preserving map onto the rearranged left-aligned stack."""
    a = alpha(F.shape)
    return _apply(F, f_kernel, a.shape, a.move_array)


def f_inverse(F: Filling, M: MoonPolyomino) -> Filling:
    """Undo :func:`f`; ``M`` is the original shape."""
    a = alpha(M)
    _check_target(F, a)
    return _apply(F, f_inverse_kernel, M, a.move_array)


def g(F: Filling) -> Filling:
    """ne-preserving map onto the rearranged left-aligned stack."""
    a = alpha(F.shape)
    return _apply(F, g_kernel, a.shape, a.move_array)


def g_inverse(F: Filling, M: MoonPolyomino) -> Filling:
    """Undo :func:`g`; ``M`` is the original shape."""
    a = alpha(M)
    _check_target(F, a)
    return _apply(F, g_inverse_kernel, M, a.move_array)


def _check_target(F: Filling, a: AlphaResult) -> None:
    if F.shape != a.shape:
        raise FillingError("filling is not on the rearranged shape of M")


def psi(F: Filling) -> Filling:
    """Bijection of F(M, s; A) onto itself with maj(F) = ne(psi(F))."""
    a = alpha(F.shape)
    return Filling.from_array(F.shape, psi_kernel(F.array, a.move_array, a.shape.hi, False))


def psi_inverse(F: Filling) -> Filling:
    a = alpha(F.shape)
    return Filling.from_array(F.shape, psi_kernel(F.array, a.move_array, a.shape.hi, True))
