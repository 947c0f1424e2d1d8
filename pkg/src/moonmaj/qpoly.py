"""Exact polynomials in one variable ``q`` and Gaussian binomial coefficients."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class QPoly:
    """Immutable dense polynomial; ``coeffs[k]`` is the coefficient of ``q**k``.

    The coefficient tuple never ends in a zero, so the zero polynomial is ``()``.

    >>> QPoly([1, 1]) * QPoly([1, 1, 1])
    QPoly([1, 2, 2, 1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> QPoly:
        return cls([0] * k + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Generating function ``sum(q**e)`` of a multiset of exponents."""
        out: list[int] = []
        for e in exponents:
            if e < 0:
                raise ValueError("negative exponent")
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] += 1
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _coerce(x) -> QPoly | None:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    return None


ZERO = QPoly()
ONE = QPoly([1])


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qbinomial(h: int, s: int) -> QPoly:
    """Gaussian binomial ``[h choose s]_q``; zero when ``s`` is out of ``0..h``.

    >>> qbinomial(4, 2)
    QPoly([1, 1, 2, 1, 1])
    """
    if s < 0 or h < 0 or s > h:
        return ZERO
    return QPoly(_qbinomial_coeffs(h, min(s, h - s)))


@lru_cache(maxsize=4096)
def _qbinomial_coeffs(h: int, s: int) -> tuple[int, ...]:
    # Pascal rule: [h, s] = [h-1, s-1] + q^s [h-1, s]
    row: list[list[int]] = [[1]] + [[] for _ in range(s)]
    for hh in range(1, h + 1):
        for ss in range(min(hh, s), 0, -1):
            left = row[ss - 1]
            right = row[ss]
            size = max(len(left), len(right) + ss)
            new = [0] * size
            for i, c in enumerate(left):
                new[i] += c
            for i, c in enumerate(right):
                new[i + ss] += c
            row[ss] = new
    return tuple(row[s])


def qmultinomial(parts: Sequence[int]) -> QPoly:
    """``[n; parts]_q`` with ``n = sum(parts)``, as a product of Gaussian binomials."""
    if any(p < 0 for p in parts):
        return ZERO
    out = ONE
    total = 0
    for p in parts:
        total += p
        out = out * qbinomial(total, p)
    return out
