"""Distributions of maj and ne over a filling class, and the closed product form."""
from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement

from .encode import maj_word
from .filling import (FillingClassSpec, FillingError, enumerate_fillings, h_vector, maj,
                      ne_count)
from .qpoly import ONE, ZERO, QPoly, qbinomial
from .shape import MoonPolyomino

DEFAULT_MAX_COUNT = 10 ** 7


class TooManyFillings(RuntimeError):
    pass


def _distribution(spec: FillingClassSpec, stat, max_count: int) -> QPoly:
    bound = product_formula(spec)(1)
    if bound > max_count:
        raise TooManyFillings(f"class has {bound} fillings, above the limit {max_count}")
    return QPoly.from_exponents(stat(F) for F in enumerate_fillings(spec))


def maj_distribution(spec: FillingClassSpec, *, max_count: int = DEFAULT_MAX_COUNT) -> QPoly:
    """Sum of ``q**maj`` over the class, by enumeration."""
    return _distribution(spec, maj, max_count)


def ne_distribution(spec: FillingClassSpec, *, max_count: int = DEFAULT_MAX_COUNT) -> QPoly:
    """Sum of ``q**ne`` over the class, by enumeration."""
    return _distribution(spec, ne_count, max_count)


def product_formula(spec: FillingClassSpec) -> QPoly:
    """Product of ``[h_i choose s_i]_q`` over the columns."""
    out = ONE
    for h, s in zip(h_vector(spec), spec.s):
        out = out * qbinomial(h, s)
        if out == ZERO:
            break
    return out


def distribution_json(p: QPoly) -> dict:
    return {"coeffs": p.to_json(), "count": p(1)}


def insertion_multiset(w, letter: int, m: int) -> Counter:
    """``maj(w') - maj(w)`` over all ways to insert ``m`` copies of ``letter`` into ``w``.

    ``letter`` must be larger than every letter of ``w`` or smaller than every one.

    >>> sorted(insertion_multiset((2, 1), 3, 1).elements())
    [0, 1, 2]
    """
    w = tuple(w)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if w and min(w) <= letter <= max(w):
        raise ValueError("letter must lie outside the range of the word's letters")
    base = maj_word(w)
    k = len(w)
    out: Counter = Counter()
    # a multiset of gap positions 0..k (gap g sits before w[g]) fixes w'
    for gaps in combinations_with_replacement(range(k + 1), m):
        new: list[int] = []
        g = 0
        for pos in range(k + 1):
            while g < m and gaps[g] == pos:
                new.append(letter)
                g += 1
            if pos < k:
                new.append(w[pos])
        out[maj_word(new) - base] += 1
    return out


def partial_sum_multiset(k: int, m: int) -> Counter:
    """``{i_1 + ... + i_m : 0 <= i_1 <= ... <= i_m <= k}``."""
    return Counter(sum(c) for c in combinations_with_replacement(range(k + 1), m))


def permuted_spec(spec: FillingClassSpec, shape: MoonPolyomino,
                  perm: tuple[int, ...]) -> FillingClassSpec:
    """Spec on ``shape`` whose column ``j`` carries ``spec.s[perm[j-1]-1]``."""
    return FillingClassSpec(shape, tuple(spec.s[p - 1] for p in perm), spec.A)


def check_column_permutation_invariance(spec_a: FillingClassSpec, spec_b: FillingClassSpec,
                                        *, max_count: int = DEFAULT_MAX_COUNT) -> bool:
    """Whether both classes have the same maj distribution.

    The two shapes must have the same row lengths and the same multiset of
    (column span length, column sum) pairs, with the same empty rows.
    """
    a, b = spec_a.shape, spec_b.shape
    if [b_ - a_ for a_, b_ in a.rows] != [b_ - a_ for a_, b_ in b.rows]:
        raise FillingError("shapes do not have the same row lengths")
    cols_a = sorted(zip(a.column_spans, spec_a.s))
    cols_b = sorted(zip(b.column_spans, spec_b.s))
    if cols_a != cols_b:
        raise FillingError("column multisets (with their sums) differ")
    if spec_a.A != spec_b.A:
        raise FillingError("empty-row sets differ")
    return (maj_distribution(spec_a, max_count=max_count)
            == maj_distribution(spec_b, max_count=max_count))
