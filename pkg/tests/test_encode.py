from __future__ import annotations

import itertools
from collections import defaultdict

import pytest
from hypothesis import given, strategies as st

from moonmaj.encode import (ArcDiagram, EncodingError, crossings, des_word, filling_to_partition,
                            filling_to_word, foata_word, inv_word, maj_word, matchings,
                            multiset_words, nestings, partition_to_filling,
                            perfect_matchings, pmaj, set_partitions, word_to_filling)
from moonmaj.filling import Filling, FillingError, des_filling, maj, ne_count
from moonmaj.shape import MoonPolyomino
import oracles

words = st.lists(st.integers(1, 4), min_size=1, max_size=7)


def test_word_statistics_example():
    w = (2, 1, 3, 1)
    assert (maj_word(w), inv_word(w), des_word(w)) == (4, 3, 2)
    assert maj_word((1, 1, 2, 3)) == inv_word((1, 1, 2, 3)) == des_word((1, 1, 2, 3)) == 0


def test_word_encoding_example():
    F = word_to_filling((2, 1, 3, 1), 3)
    assert F.shape == MoonPolyomino.rectangle(4, 3)
    assert F.cells == (3, 1, 3, 2)
    assert maj(F) == 4 and ne_count(F) == 3 and des_filling(F) == 2
    assert word_to_filling((1,), 1).cells == (1,)


def test_word_encoding_errors():
    with pytest.raises(EncodingError):
        word_to_filling((), 2)
    with pytest.raises(EncodingError):
        word_to_filling((3,), 2)
    with pytest.raises(EncodingError):
        word_to_filling((0, 1), 2)
    with pytest.raises(EncodingError):
        filling_to_word(Filling(MoonPolyomino.rectangle(2, 2), (1, 0)))
    with pytest.raises(EncodingError):
        filling_to_word(Filling(MoonPolyomino.from_row_lengths((2, 1)), (1, 1)))


@given(words)
def test_word_round_trip_and_statistics(w):
    w = tuple(w)
    m = max(w)
    F = word_to_filling(w, m)
    assert filling_to_word(F) == w
    assert word_to_filling(filling_to_word(F), m) == F
    assert maj(F) == maj_word(w) == oracles.word_maj(w)
    assert ne_count(F) == inv_word(w) == oracles.word_inv(w)
    assert des_filling(F) == des_word(w)


def test_multiset_words():
    got = list(multiset_words((2, 1, 1)))
    assert got == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(list(multiset_words((1, 1, 2, 3)))) == 12


def test_macmahon_on_example_multiset():
    ws = list(multiset_words((1, 1, 2, 3)))
    assert oracles.poly(maj_word(w) for w in ws) == oracles.poly(inv_word(w) for w in ws)


def test_foata_examples():
    assert foata_word((3,)) == (3,)
    assert foata_word((2, 1, 3, 1)) == (2, 3, 1, 1)


@given(words)
def test_foata_properties(w):
    v = foata_word(w)
    assert inv_word(v) == maj_word(w)
    assert sorted(v) == sorted(w)
    assert v[-1] == w[-1]


def test_foata_is_a_bijection_on_each_multiset():
    for letters in [(1, 1, 2, 3), (1, 2, 2, 3, 3), (1, 2, 3, 4, 1)]:
        ws = list(multiset_words(letters))
        assert sorted(foata_word(w) for w in ws) == ws


def test_arc_diagram_validation():
    d = ArcDiagram.parse("1-3, 2-4", 4)
    assert d.arcs == {(1, 3), (2, 4)}
    assert d.left_endpoints == (1, 2) and d.right_endpoints == (3, 4)
    assert d.is_matching() and d.is_set_partition()
    assert d.to_json() == {"n": 4, "arcs": [[1, 3], [2, 4]]}
    assert ArcDiagram.parse("", 3).arcs == frozenset()
    with pytest.raises(EncodingError):
        ArcDiagram.parse("1-5", 4)
    with pytest.raises(EncodingError):
        ArcDiagram.parse("3-1", 4)
    with pytest.raises(EncodingError):
        ArcDiagram.parse("1-3,2-3", 4)
    with pytest.raises(EncodingError):
        ArcDiagram.parse("1:3", 4)
    linked = ArcDiagram.parse("1-2,1-3", 3)
    assert not linked.is_matching() and not linked.is_set_partition()


def test_crossing_and_nesting_examples():
    cross = ArcDiagram.parse("1-3,2-4", 4)
    nest = ArcDiagram.parse("1-4,2-3", 4)
    assert (crossings(cross), nestings(cross)) == (1, 0)
    assert (crossings(nest), nestings(nest)) == (0, 1)
    assert ne_count(partition_to_filling(cross)) == 1
    assert ne_count(partition_to_filling(nest)) == 0
    assert partition_to_filling(ArcDiagram(4, frozenset())).cells == (0, 0, 0)


def test_staircase_encoding():
    d = ArcDiagram.parse("1-3,3-4", 4)
    F = partition_to_filling(d)
    assert F.shape == MoonPolyomino.staircase(4)
    assert F.cells == (3, 1, 0)
    assert filling_to_partition(F) == d
    with pytest.raises(EncodingError):
        partition_to_filling(ArcDiagram(1, frozenset()))
    with pytest.raises(FillingError):
        filling_to_partition(Filling(MoonPolyomino.rectangle(2, 2), (1, 1)))


def test_generator_counts():
    assert [sum(1 for _ in matchings(n)) for n in range(1, 9)] == [1, 2, 4, 10, 26, 76, 232, 764]
    assert [sum(1 for _ in set_partitions(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]
    assert [sum(1 for _ in perfect_matchings(k)) for k in range(1, 6)] == [1, 3, 15, 105, 945]
    ms = list(matchings(6))
    assert len(set(ms)) == len(ms)


@pytest.mark.parametrize("n", range(2, 9))
def test_encoding_on_all_matchings(n):
    for d in matchings(n):
        F = partition_to_filling(d)
        assert ne_count(F) == crossings(d)
        assert filling_to_partition(F) == d
        assert F.empty_rows() == {n + 1 - v for v in range(2, n + 1) if v not in d.right_endpoints}


@pytest.mark.parametrize("n", range(2, 8))
def test_encoding_on_set_partitions(n):
    for d in set_partitions(n):
        F = partition_to_filling(d)
        assert ne_count(F) == crossings(d)
        assert pmaj(d) == maj(F)


def test_pmaj_examples():
    assert pmaj(ArcDiagram.parse("1-2", 2)) == 0
    assert pmaj(ArcDiagram.parse("1-3,2-4", 4)) == 1
    assert pmaj(ArcDiagram.parse("1-4,2-3", 4)) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_pmaj_is_staircase_maj(n):
    for d in matchings(n):
        assert pmaj(d) == maj(partition_to_filling(d))


def _grouped_equidistribution(diagrams) -> bool:
    groups = defaultdict(lambda: ([], []))
    for d in diagrams:
        a, b = groups[(d.left_endpoints, d.right_endpoints)]
        a.append(pmaj(d))
        b.append(crossings(d))
    return all(sorted(a) == sorted(b) for a, b in groups.values())


@pytest.mark.parametrize("k", range(1, 6))
def test_pmaj_equidistributed_with_crossings(k):
    assert _grouped_equidistribution(perfect_matchings(k))


def test_pmaj_equidistributed_on_partitions():
    assert _grouped_equidistribution(itertools.chain.from_iterable(
        set_partitions(n) for n in range(1, 8)))
