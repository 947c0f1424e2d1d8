"""Words, matchings and set partitions as fillings, with their classical statistics.

A word ``w_1 ... w_n`` on ``1..m`` becomes an ``n x m`` rectangle filling with
the 1 for ``w_i`` in row ``n - i + 1`` and column ``m - w_i + 1``.  Under this
encoding maj goes to maj and inversions become NE chains.

An arc diagram on ``n`` vertices becomes a filling of the staircase with rows
of lengths ``n-1, ..., 1``: row ``r`` stands for vertex ``n + 1 - r`` and arc
``(i, j)`` sits in row ``n + 1 - j``, column ``i``.  Crossings become NE chains.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .filling import Filling, FillingError
from .shape import MoonPolyomino

Word = tuple[int, ...]


class EncodingError(ValueError):
    pass


# words -----------------------------------------------------------------

def _word(w: Iterable[int]) -> Word:
    w = tuple(int(x) for x in w)
    if not w:
        raise EncodingError("empty word")
    if min(w) < 1:
        raise EncodingError("letters must be positive integers")
    return w


def des_word(w: Sequence[int]) -> int:
    """Number of descents ``w_i > w_{i+1}``.

    >>> des_word((2, 1, 3, 1))
    2
    """
    return sum(1 for x, y in zip(w, w[1:]) if x > y)


def maj_word(w: Sequence[int]) -> int:
    """Sum of descent positions (1-based).

    >>> maj_word((2, 1, 3, 1))
    4
    """
    return sum(i for i, (x, y) in enumerate(zip(w, w[1:]), start=1) if x > y)


def inv_word(w: Sequence[int]) -> int:
    """Pairs ``i < j`` with ``w_i > w_j``.

    >>> inv_word((2, 1, 3, 1))
    3
    """
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def word_to_filling(w: Sequence[int], m: int) -> Filling:
    w = _word(w)
    if max(w) > m:
        raise EncodingError(f"letter {max(w)} exceeds alphabet size {m}")
    n = len(w)
    cells = [0] * n
    for i, x in enumerate(w, start=1):
        cells[n - i] = m - x + 1
    return Filling(MoonPolyomino.rectangle(n, m), tuple(cells))


def filling_to_word(F: Filling) -> Word:
    if F.shape.kind != "rectangle" or F.shape.rows[0][0] != 1:
        raise EncodingError("words come from rectangle fillings")
    if 0 in F.cells:
        raise EncodingError("every row needs a 1")
    m = F.shape.m
    return tuple(m - c + 1 for c in reversed(F.cells))


def _gamma_word(v: Word, a: int) -> Word:
    """Cut ``v`` after every letter on the same side of ``a`` as its last letter,
    then move each block's last letter to its front."""
    small = v[-1] <= a
    out: list[int] = []
    block: list[int] = []
    for x in v:
        block.append(x)
        if (x <= a) == small:
            out.append(block[-1])
            out.extend(block[:-1])
            block = []
    return tuple(out)


def foata_word(w: Sequence[int]) -> Word:
    """Foata's second fundamental transformation; maj(w) = inv(foata_word(w)).

    >>> foata_word((2, 1, 3, 1))
    (2, 3, 1, 1)
    """
    w = _word(w)
    out: Word = w[:1]
    for a in w[1:]:
        out = _gamma_word(out, a) + (a,)
    return out


def multiset_words(letters: Iterable[int]) -> Iterator[Word]:
    """Distinct rearrangements of a multiset, in lexicographic order."""
    counts = Counter(letters)
    keys = sorted(counts)
    n = sum(counts.values())
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                word.append(k)
                yield from rec()
                word.pop()
                counts[k] += 1

    yield from rec()


# arc diagrams ----------------------------------------------------------

@dataclass(frozen=True)
class ArcDiagram:
    """Arcs ``(i, j)``, ``i < j``, on vertices ``1..n``; each vertex ends at most one arc."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise EncodingError(f"arc ({i}, {j}) is not an arc on 1..{self.n}")
        rights = Counter(j for _, j in arcs)
        if any(c > 1 for c in rights.values()):
            raise EncodingError("a vertex is the right endpoint of two arcs")

    @classmethod
    def parse(cls, text: str, n: int) -> ArcDiagram:
        """Parse ``"1-3,2-4"``."""
        arcs = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            try:
                i, j = part.split("-")
                arcs.append((int(i), int(j)))
            except ValueError:
                raise EncodingError(f"bad arc {part!r}; expected i-j") from None
        return cls(n, frozenset(arcs))

    @property
    def left_endpoints(self) -> tuple[int, ...]:
        return tuple(sorted(i for i, _ in self.arcs))

    @property
    def right_endpoints(self) -> tuple[int, ...]:
        return tuple(sorted(j for _, j in self.arcs))

    def is_matching(self) -> bool:
        ends = [v for arc in self.arcs for v in arc]
        return len(ends) == len(set(ends))

    def is_set_partition(self) -> bool:
        return len(set(self.left_endpoints)) == len(self.arcs)

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": sorted(list(a) for a in self.arcs)}


def crossings(d: ArcDiagram) -> int:
    arcs = sorted(d.arcs)
    return sum(1 for (i1, j1), (i2, j2) in itertools.combinations(arcs, 2)
               if i1 < i2 < j1 < j2)


def nestings(d: ArcDiagram) -> int:
    arcs = sorted(d.arcs)
    return sum(1 for (i1, j1), (i2, j2) in itertools.combinations(arcs, 2)
               if i1 < i2 < j2 < j1)


def partition_to_filling(d: ArcDiagram) -> Filling:
    """Filling of the order-``n`` staircase; needs ``n >= 2``."""
    if d.n < 2:
        raise EncodingError("the staircase needs at least two vertices")
    shape = MoonPolyomino.staircase(d.n)
    cells = [0] * (d.n - 1)
    for i, j in d.arcs:
        cells[d.n - j] = i
    return Filling(shape, tuple(cells))


def filling_to_partition(F: Filling) -> ArcDiagram:
    n = F.shape.n + 1
    if F.shape != MoonPolyomino.staircase(n):
        raise FillingError("expected a staircase filling")
    return ArcDiagram(n, frozenset((c, n + 1 - r) for r, c in enumerate(F.cells, start=1) if c))


def pmaj(d: ArcDiagram) -> int:
    """Major index of a matching or set partition via the backward word recursion.

    Arcs get labels ``N..1`` by left endpoint, left to right.  Right endpoints are
    read right to left; before prepending the label of the next arc, labels of
    arcs starting in ``[r_{i+1}, r_i)`` are deleted.  A vertex that ends one arc
    and starts another counts as its right copy followed by its left copy.

    >>> pmaj(ArcDiagram(4, frozenset({(1, 3), (2, 4)})))
    1
    >>> pmaj(ArcDiagram(4, frozenset({(1, 4), (2, 3)})))
    0
    """
    arcs = sorted(d.arcs)
    label = {arc: len(arcs) - k for k, arc in enumerate(arcs)}
    by_right = sorted(arcs, key=lambda a: -a[1])
    total = 0
    word: list[int] = []
    prev_r = None
    for arc in by_right:
        r = arc[1]
        if prev_r is not None:
            gone = {label[a] for a in arcs if r <= a[0] < prev_r}
            word = [x for x in word if x not in gone]
        word.insert(0, label[arc])
        total += des_word(word)
        prev_r = r
    return total


def matchings(n: int) -> Iterator[ArcDiagram]:
    """All partial matchings on ``1..n`` (each vertex in at most one arc)."""
    def rec(v, free, arcs):
        if v > n:
            if not free:
                yield ArcDiagram(n, frozenset(arcs))
            return
        # v is isolated, opens an arc, or closes an open one
        yield from rec(v + 1, free, arcs)
        yield from rec(v + 1, free + [v], arcs)
        for k, i in enumerate(free):
            yield from rec(v + 1, free[:k] + free[k + 1:], arcs + [(i, v)])

    yield from rec(1, [], [])


def perfect_matchings(n_arcs: int) -> Iterator[ArcDiagram]:
    n = 2 * n_arcs

    def rec(rest, arcs):
        if not rest:
            yield ArcDiagram(n, frozenset(arcs))
            return
        a = rest[0]
        for k in range(1, len(rest)):
            yield from rec(rest[1:k] + rest[k + 1:], arcs + [(a, rest[k])])

    yield from rec(list(range(1, n + 1)), [])


def set_partitions(n: int) -> Iterator[ArcDiagram]:
    """Set partitions of ``1..n`` as arcs between consecutive block elements."""
    def rec(v, blocks):
        if v > n:
            arcs = [(b[k], b[k + 1]) for b in blocks for k in range(len(b) - 1)]
            yield ArcDiagram(n, frozenset(arcs))
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from rec(v + 1, blocks)
        blocks.pop()

    yield from rec(1, [])
