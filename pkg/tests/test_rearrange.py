from __future__ import annotations

import itertools

import numpy as np
import pytest

from moonmaj.filling import Filling, FillingError, all_fillings, enumerate_fillings, maj, \
    ne_count
from moonmaj.generators import left_stack_shapes, moon_shapes
from moonmaj.rearrange import (alpha, f, f_inverse, g, g_inverse, g_inverse_step_kernel,
                               g_step_kernel, psi, psi_inverse, tau, tau_inverse)
from moonmaj.shape import MoonPolyomino, left_stack_of
import oracles
from data import WORKED_ROWS


def _replay_backward(result):
    rows = [list(r) for r in result.shape.rows]
    for move in reversed(result.moves):
        top, bottom, d = move.rect.top, move.rect.bottom, move.rect.right
        for i, (a, b) in enumerate(rows, start=1):
            if not top <= i <= bottom and b <= d - 1:
                rows[i - 1] = [a + 1, b + 1]
    return tuple(tuple(r) for r in rows)


def test_alpha_on_left_stack_is_trivial():
    for S in left_stack_shapes(7):
        a = alpha(S)
        assert a.moves == ()
        assert a.shape == S
        assert a.labels == tuple(range(1, S.m + 1))


def test_alpha_example():
    M = MoonPolyomino(WORKED_ROWS)
    a = alpha(M)
    assert [b - x + 1 for x, b in a.shape.rows] == [2, 3, 5, 5, 4, 2]
    assert a.shape.is_left_aligned
    assert a.permute(M.column_lengths) == a.shape.column_lengths
    assert _replay_backward(a) == M.rows
    data = a.to_json()
    assert data["labels"] == list(a.labels)
    assert len(data["moves"]) == len(a.moves)


@pytest.mark.parametrize("size", range(1, 10))
def test_alpha_properties(size):
    for M in moon_shapes(size, min_cells=size):
        a = alpha(M)
        assert a.shape == left_stack_of(M)
        assert sorted(a.shape.column_lengths) == sorted(M.column_lengths)
        lengths = a.shape.column_lengths
        assert all(x >= y for x, y in zip(lengths, lengths[1:]))
        assert a.permute(M.column_lengths) == lengths
        assert sorted(a.labels) == list(range(1, M.m + 1))
        assert _replay_backward(a) == M.rows
        assert a.move_array.shape == (len(a.moves), 3)


def _descent_positions(F: Filling) -> list[int]:
    vals = [c for c in F.cells if c]
    return [k for k in range(1, len(vals)) if vals[k - 1] > vals[k]]


def test_tau_exhaustive():
    for h in range(1, 6):
        for d in range(1, 5):
            S = MoonPolyomino.rectangle(h, d)
            for F in all_fillings(S):
                T = tau(F)
                assert tau_inverse(T) == F
                assert tau(tau_inverse(F)) == F
                assert T.empty_rows() == F.empty_rows()
                assert _descent_positions(T) == _descent_positions(F)
                s = F.column_sums()
                assert T.column_sums() == s[1:] + s[:1]
                assert maj(T) == maj(F)


def test_tau_edges():
    S = MoonPolyomino.rectangle(3, 3)
    empty = Filling(S, (0, 0, 0))
    assert tau(empty) == empty == tau_inverse(empty)
    F = Filling(S, (2, 3, 0))
    assert tau(F).cells == (1, 2, 0)
    with pytest.raises(FillingError):
        tau(Filling(MoonPolyomino.from_row_lengths((2, 1)), (1, 1)))


def test_g_step_on_rectangles():
    for h in range(1, 6):
        for d in range(1, 5):
            S = MoonPolyomino.rectangle(h, d)
            for cells in itertools.product(range(d + 1), repeat=h):
                vals = np.array(cells, dtype=np.int64)
                g_step_kernel(vals, d)
                out = tuple(int(x) for x in vals)
                assert ne_count(Filling(S, out)) == ne_count(Filling(S, cells))
                assert sum(1 for c in out if c == d) == sum(1 for c in cells if c == 1)
                assert [i for i, c in enumerate(out) if c] == [i for i, c in enumerate(cells) if c]
                g_inverse_step_kernel(vals, d)
                assert tuple(int(x) for x in vals) == cells


def _l_values(cells):
    """For each 1 in column 1 (bottom to top): 0-cells of column 1 above it in nonempty rows."""
    out = []
    for i, c in enumerate(cells):
        if c == 1:
            out.append(sum(1 for k in range(i) if cells[k] not in (0, 1)))
    return out[::-1]


def test_l_values_count_ne_chains():
    for h in range(1, 6):
        for d in range(2, 5):
            for cells in itertools.product(range(d + 1), repeat=h):
                rows = ((1, d),) * h
                chains = oracles.ne_chains(rows, cells)
                others = tuple(0 if c == 1 else c for c in cells)
                assert chains - oracles.ne_chains(rows, others) == sum(_l_values(cells))


def test_f_g_identity_on_left_stacks():
    S = MoonPolyomino.from_row_lengths((2, 3, 1))
    for F in all_fillings(S):
        assert f(F) == F == g(F)


@pytest.mark.parametrize("size", range(1, 9))
def test_maps_exhaustive(size):
    for M in moon_shapes(size, min_cells=size):
        a = alpha(M)
        for F in all_fillings(M):
            expected = oracles.maj(M.rows, F.cells)
            fF, gF, pF = f(F), g(F), psi(F)
            assert fF.shape == a.shape == gF.shape
            assert maj(fF) == expected
            assert ne_count(gF) == ne_count(F)
            assert fF.column_sums() == a.permute(F.column_sums()) == gF.column_sums()
            assert fF.empty_rows() == F.empty_rows() == gF.empty_rows()
            assert f_inverse(fF, M) == F
            assert g_inverse(gF, M) == F
            assert ne_count(pF) == expected
            assert pF.class_spec() == F.class_spec()
            assert psi_inverse(pF) == F


def test_psi_is_a_class_bijection():
    M = MoonPolyomino(WORKED_ROWS)
    F = Filling(M, (3, 3, 1, 5, 0, 4))
    fills = set(enumerate_fillings(F.class_spec()))
    images = {psi(G) for G in fills}
    assert images == fills
    assert sorted(maj(G) for G in fills) == sorted(ne_count(psi(G)) for G in fills)


def test_inverse_needs_the_rearranged_shape():
    M = MoonPolyomino(WORKED_ROWS)
    F = Filling(M, (3, 3, 1, 5, 0, 4))
    with pytest.raises(FillingError):
        f_inverse(F, M)
    with pytest.raises(FillingError):
        g_inverse(F, M)
