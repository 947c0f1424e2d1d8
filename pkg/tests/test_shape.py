from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from moonmaj.generators import ferrers_shapes, left_stack_shapes, moon_shapes, random_moon_shape
from moonmaj.shape import (FERRERS, GENERAL, LEFT_STACK, RECTANGLE, TOP_STACK, EmptyRow,
                           MoonPolyomino, NotComparable, NotConvex, Rect, ShapeError,
                           WrongShapeClass, column_length, column_order, column_rectangle,
                           column_rectangles, from_columns, left_stack_of,
                           maximal_ferrers_prefix, maximal_rectangles, validate)
import oracles
from data import WORKED_ROWS


@pytest.fixture
def worked():
    return MoonPolyomino(WORKED_ROWS)


def test_validate_errors():
    with pytest.raises(EmptyRow) as e:
        validate([(1, 2), (3, 2)])
    assert e.value.row == 2
    with pytest.raises(NotComparable):
        validate([(1, 2), (2, 3)])
    with pytest.raises(NotConvex) as e:
        validate([(1, 3), (2, 2), (1, 3)])
    assert e.value.column == 1
    with pytest.raises(ShapeError):
        validate([(2, 3)])
    with pytest.raises(ShapeError):
        validate([])
    with pytest.raises(ShapeError):
        validate([("a", 1)])


def test_kinds():
    assert MoonPolyomino.rectangle(2, 3).kind == RECTANGLE
    assert MoonPolyomino.from_row_lengths([3, 2, 2]).kind == FERRERS
    assert MoonPolyomino.from_row_lengths([2, 3, 1]).kind == LEFT_STACK
    assert MoonPolyomino(((1, 3), (1, 3), (2, 3))).kind == TOP_STACK
    assert MoonPolyomino(WORKED_ROWS).kind == GENERAL
    assert MoonPolyomino.staircase(4).rows == ((1, 3), (1, 2), (1, 1))


def test_example_columns(worked):
    assert worked.column_lengths == (2, 4, 6, 6, 3)
    assert column_length(worked, 3) == 6
    with pytest.raises(IndexError):
        column_length(worked, 6)
    order = column_order(worked)
    assert order.order == (1, 5, 2, 4, 3)
    assert order.k == 3
    assert order.right == frozenset({3, 4, 5})
    assert order.left == frozenset({1, 2})


def test_example_maximal_rectangles(worked):
    got = [r.as_tuple() for r in maximal_rectangles(worked)]
    assert got == [(3, 4, 1, 5), (3, 5, 2, 5), (2, 5, 2, 4), (1, 6, 3, 4)]
    assert got == oracles.maximal_rectangles(WORKED_ROWS)


def test_example_column_rectangles(worked):
    order = column_order(worked)
    assert column_rectangle(worked, order, 1) == Rect(3, 4, 1, 5)
    assert column_rectangle(worked, order, 5) == Rect(3, 5, 2, 5)
    assert column_rectangle(worked, order, 4) == Rect(1, 6, 3, 4)


def test_rect_helpers():
    r = Rect(1, 2, 2, 4)
    assert (r.height, r.width) == (2, 3)
    assert r.contains(2, 4) and not r.contains(3, 4)
    assert r & Rect(2, 5, 4, 6) == Rect(2, 2, 4, 4)
    assert r & Rect(3, 5, 1, 6) is None
    assert len(list(r.cells())) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_moon_shapes_match_polyomino_oracle(n):
    expected = {p for p in oracles.fixed_polyominoes(n)[n - 1] if oracles.is_moon(set(p))}
    got = [frozenset(S.cells()) for S in moon_shapes(n, min_cells=n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_moon_shape_counts_frozen():
    counts = [0] * 10
    for S in moon_shapes(10):
        counts[S.size - 1] += 1
    assert counts == [1, 2, 6, 15, 35, 76, 156, 310, 590, 1098]


def test_stack_generators_agree_with_classification():
    shapes = list(moon_shapes(9))
    left = {S.rows for S in shapes if S.is_left_aligned}
    ferrers = {S.rows for S in shapes if S.kind in (FERRERS, RECTANGLE) and S.is_left_aligned}
    assert {S.rows for S in left_stack_shapes(9)} == left
    assert {S.rows for S in ferrers_shapes(9)} == ferrers


def test_max_columns_filter():
    assert all(S.m <= 3 for S in moon_shapes(8, max_columns=3))


@pytest.mark.parametrize("n", range(1, 8))
def test_maximal_rectangles_match_brute_force(n):
    for S in moon_shapes(n, min_cells=n):
        got = [r.as_tuple() for r in maximal_rectangles(S)]
        assert got == oracles.maximal_rectangles(S.rows)


@pytest.mark.parametrize("n", range(1, 8))
def test_column_order_and_rectangles_match_brute_force(n):
    for S in moon_shapes(n, min_cells=n):
        order, left = oracles.column_order(S.rows)
        co = column_order(S)
        assert list(co.order) == order
        assert co.left == frozenset(left)
        got = [r.as_tuple() for r in column_rectangles(S, co)]
        assert got == [oracles.column_rect(S.rows, j) for j in order]


def test_json_round_trip(worked):
    assert MoonPolyomino.from_json(worked.to_json()) == worked
    with pytest.raises(ShapeError):
        MoonPolyomino.from_json({"rows": [{"left": 1}]})
    with pytest.raises(ShapeError):
        MoonPolyomino.from_json({"rows": [{"left": 2, "right": 1}]})


def test_from_columns(worked):
    assert from_columns(worked.column_spans) == worked
    with pytest.raises(ShapeError):
        from_columns([(1, 1), (3, 3)])


def test_ferrers_prefix_and_left_stack(worked):
    S = MoonPolyomino.from_row_lengths([2, 4, 3, 1])
    assert maximal_ferrers_prefix(S).rows == ((1, 2), (1, 2), (1, 2), (1, 1))
    with pytest.raises(WrongShapeClass):
        maximal_ferrers_prefix(worked)
    assert left_stack_of(worked).rows == ((1, 2), (1, 3), (1, 5), (1, 5), (1, 4), (1, 2))


def test_contains_rect_and_str():
    S = MoonPolyomino(((2, 2), (1, 3)))
    assert S.contains_rect(Rect(1, 2, 2, 2))
    assert not S.contains_rect(Rect(1, 2, 1, 2))
    assert str(S) == " #\n###"


@given(st.integers(0, 10 ** 6), st.integers(1, 20), st.integers(1, 8))
def test_random_shapes_are_valid_and_bounded(seed, cells, cols):
    S = random_moon_shape(random.Random(seed), cells, cols)
    assert S.size <= cells and S.m <= cols
    assert oracles.is_moon(set(S.cells()))
