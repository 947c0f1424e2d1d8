"""Exhaustive and randomized checks of the maj/ne identities.

Every filling of a shape is indexed by a mixed-radix code: row ``i`` is a digit
in ``0..len_i`` (0 = empty row, otherwise ``column - left + 1``).  The
exhaustive kernels walk all codes of one shape and count failures.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from ._jit import njit
from .encode import crossings, maj_word, perfect_matchings, pmaj
from .filling import (Filling, FillingClassSpec, colrect_table, maj, maxrect_table, ne_count,
                      ne_kernel, signed_maj_kernel, top_stack_maj_kernel)
from .foata import gamma_stripped_kernel, phi, phi_inverse, phi_stack_kernel
from .generators import random_moon_shape
from .genfun import (insertion_multiset, maj_distribution, ne_distribution,
                     partial_sum_multiset, product_formula)
from .qpoly import QPoly, qbinomial
from .rearrange import (alpha, f_inverse_kernel, f_kernel, g_inverse_kernel, g_kernel,
                        psi_kernel)
from .shape import MoonPolyomino, ShapeError, from_columns

# kernels ---------------------------------------------------------------


@njit
def n_codes(lo, hi):
    total = 1
    for i in range(lo.shape[0]):
        total *= hi[i] - lo[i] + 2
    return total


@njit
def decode(code, lo, hi, cells):
    for i in range(lo.shape[0] - 1, -1, -1):
        base = hi[i] - lo[i] + 2
        digit = code % base
        code //= base
        cells[i] = 0 if digit == 0 else lo[i] + digit - 1


@njit
def encode(cells, lo, hi):
    code = 0
    for i in range(lo.shape[0]):
        base = hi[i] - lo[i] + 2
        digit = 0 if cells[i] == 0 else cells[i] - lo[i] + 1
        code = code * base + digit
    return code


@njit
def _same_class(a, b, m):
    sa = np.zeros(m + 2, dtype=np.int64)
    for i in range(a.shape[0]):
        if (a[i] == 0) != (b[i] == 0):
            return False
        sa[a[i]] += 1
        sa[b[i]] -= 1
    for j in range(m + 2):
        if sa[j] != 0:
            return False
    return True


@njit
def maj_forms_kernel(lo, hi, max_rects, max_signs, col_rects, col_signs, top_stack):
    """Failures of maj_maxrect == maj_columns (and == top-stack maj when asked)."""
    n = lo.shape[0]
    cells = np.zeros(n, dtype=np.int64)
    bad_col = 0
    bad_top = 0
    first = -1
    for code in range(n_codes(lo, hi)):
        decode(code, lo, hi, cells)
        a = signed_maj_kernel(cells, max_rects, max_signs)
        if a != signed_maj_kernel(cells, col_rects, col_signs):
            bad_col += 1
            if first < 0:
                first = code
        if top_stack and a != top_stack_maj_kernel(lo, hi, cells):
            bad_top += 1
            if first < 0:
                first = code
    return bad_col, bad_top, first


@njit
def phi_kernel_check(lo, hi, max_rects, max_signs):
    """Failures of: maj = ne(phi), class kept, injective, phi_inverse round trip."""
    n = lo.shape[0]
    m = 0
    for i in range(n):
        m = max(m, hi[i])
    total = n_codes(lo, hi)
    seen = np.zeros(total, dtype=np.bool_)
    cells = np.zeros(n, dtype=np.int64)
    bad = np.zeros(4, dtype=np.int64)
    first = -1
    for code in range(total):
        decode(code, lo, hi, cells)
        out = phi_stack_kernel(hi, cells, False)
        ok = True
        if signed_maj_kernel(cells, max_rects, max_signs) != ne_kernel(lo, hi, out):
            bad[0] += 1
            ok = False
        if not _same_class(cells, out, m):
            bad[1] += 1
            ok = False
        img = encode(out, lo, hi)
        if seen[img]:
            bad[2] += 1
            ok = False
        seen[img] = True
        back = phi_stack_kernel(hi, out, True)
        for i in range(n):
            if back[i] != cells[i]:
                bad[3] += 1
                ok = False
                break
        if not ok and first < 0:
            first = code
    return bad, first


@njit
def gamma_kernel_check(width):
    """On every filling of a Ferrers shape and every pivot column: delta undoes
    gamma, column sums and empty rows are kept, and the ne change law holds."""
    n = width.shape[0]
    m = width[0]
    lo = np.ones(n, dtype=np.int64)
    cells = np.zeros(n, dtype=np.int64)
    bad = np.zeros(3, dtype=np.int64)
    first_code = -1
    first_pivot = -1
    for code in range(n_codes(lo, width)):
        decode(code, lo, width, cells)
        before = ne_kernel(lo, width, cells)
        for pivot in range(1, m + 1):
            out, n_left1, n_right2 = gamma_stripped_kernel(width, cells, pivot, False)
            ok = True
            if ne_kernel(lo, width, out) - before != n_right2 - n_left1:
                bad[0] += 1
                ok = False
            if not _same_class(cells, out, m):
                bad[1] += 1
                ok = False
            out, _, _ = gamma_stripped_kernel(width, out, pivot, True)
            for i in range(n):
                if out[i] != cells[i]:
                    bad[2] += 1
                    ok = False
                    break
            if not ok and first_code < 0:
                first_code = code
                first_pivot = pivot
    return bad, first_code, first_pivot


@njit
def psi_kernel_check(lo, hi, moves, stack_hi, max_rects, max_signs,
                     n_max_rects, n_max_signs):
    """Failures of the f / g / psi properties over every filling of one shape.

    Slots: f keeps maj, f injective, f round trip, g keeps ne, g injective,
    g round trip, maj = ne(psi), psi keeps the class, psi injective,
    psi_inverse round trip.
    """
    n = lo.shape[0]
    m = 0
    for i in range(n):
        m = max(m, hi[i])
    total = n_codes(lo, hi)
    nlo = np.ones(n, dtype=np.int64)
    seen_f = np.zeros(total, dtype=np.bool_)
    seen_g = np.zeros(total, dtype=np.bool_)
    seen_p = np.zeros(total, dtype=np.bool_)
    cells = np.zeros(n, dtype=np.int64)
    bad = np.zeros(10, dtype=np.int64)
    first = -1
    for code in range(total):
        decode(code, lo, hi, cells)
        ok = True
        majv = signed_maj_kernel(cells, max_rects, max_signs)

        fc = cells.copy()
        f_kernel(fc, moves)
        if signed_maj_kernel(fc, n_max_rects, n_max_signs) != majv:
            bad[0] += 1
            ok = False
        img = encode(fc, nlo, stack_hi)
        if seen_f[img]:
            bad[1] += 1
            ok = False
        seen_f[img] = True
        f_inverse_kernel(fc, moves)
        for i in range(n):
            if fc[i] != cells[i]:
                bad[2] += 1
                ok = False
                break

        gc = cells.copy()
        g_kernel(gc, moves)
        if ne_kernel(nlo, stack_hi, gc) != ne_kernel(lo, hi, cells):
            bad[3] += 1
            ok = False
        img = encode(gc, nlo, stack_hi)
        if seen_g[img]:
            bad[4] += 1
            ok = False
        seen_g[img] = True
        g_inverse_kernel(gc, moves)
        for i in range(n):
            if gc[i] != cells[i]:
                bad[5] += 1
                ok = False
                break

        pc = psi_kernel(cells, moves, stack_hi, False)
        if ne_kernel(lo, hi, pc) != majv:
            bad[6] += 1
            ok = False
        if not _same_class(cells, pc, m):
            bad[7] += 1
            ok = False
        img = encode(pc, lo, hi)
        if seen_p[img]:
            bad[8] += 1
            ok = False
        seen_p[img] = True
        back = psi_kernel(pc, moves, stack_hi, True)
        for i in range(n):
            if back[i] != cells[i]:
                bad[9] += 1
                ok = False
                break
        if not ok and first < 0:
            first = code
    return bad, first


# drivers ---------------------------------------------------------------

PSI_CHECKS = ("f_maj", "f_injective", "f_round_trip", "g_ne", "g_injective", "g_round_trip",
              "psi_maj_ne", "psi_class", "psi_injective", "psi_round_trip")
PHI_CHECKS = ("maj_ne", "class", "injective", "round_trip")
GAMMA_CHECKS = ("ne_change", "class", "round_trip")


@dataclass
class ExhaustiveReport:
    checks: tuple[str, ...]
    shapes: int = 0
    fillings: int = 0
    failures: dict = field(default_factory=dict)
    first_counterexample: dict | None = None

    def __post_init__(self):
        self.failures = {c: 0 for c in self.checks}

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def add(self, bad, shape: MoonPolyomino, code: int, extra: dict | None = None):
        self.shapes += 1
        self.fillings += int(n_codes(shape.lo, shape.hi))
        for name, b in zip(self.checks, bad):
            self.failures[name] += int(b)
        if code >= 0 and self.first_counterexample is None:
            cells = np.zeros(shape.n, dtype=np.int64)
            decode(code, shape.lo, shape.hi, cells)
            self.first_counterexample = {"filling": Filling.from_array(shape, cells).to_json(),
                                         **(extra or {})}


def check_maj_forms(shapes) -> ExhaustiveReport:
    rep = ExhaustiveReport(("columns", "top_stack"))
    for S in shapes:
        mr, ms = maxrect_table(S)
        cr, cs = colrect_table(S)
        bc, bt, first = maj_forms_kernel(S.lo, S.hi, mr, ms, cr, cs, S.is_top_aligned)
        rep.add((bc, bt), S, first)
    return rep


def check_phi(shapes) -> ExhaustiveReport:
    rep = ExhaustiveReport(PHI_CHECKS)
    for S in shapes:
        mr, ms = maxrect_table(S)
        bad, first = phi_kernel_check(S.lo, S.hi, mr, ms)
        rep.add(bad, S, first)
    return rep


def check_gamma(shapes) -> ExhaustiveReport:
    rep = ExhaustiveReport(GAMMA_CHECKS)
    for S in shapes:
        bad, first, pivot = gamma_kernel_check(S.hi)
        rep.add(bad, S, first, {"pivot": int(pivot)})
    return rep


def check_psi(shapes) -> ExhaustiveReport:
    rep = ExhaustiveReport(PSI_CHECKS)
    for S in shapes:
        a = alpha(S)
        mr, ms = maxrect_table(S)
        nr, ns = maxrect_table(a.shape)
        bad, first = psi_kernel_check(S.lo, S.hi, a.move_array, a.shape.hi, mr, ms, nr, ns)
        rep.add(bad, S, first)
    return rep


# randomized theorem checks ----------------------------------------------

def random_filling(rng: random.Random, shape: MoonPolyomino, p_empty: float = 0.2) -> Filling:
    cells = [0 if rng.random() < p_empty else rng.randint(a, b) for a, b in shape.rows]
    return Filling(shape, tuple(cells))


def random_spec(rng: random.Random, shape: MoonPolyomino) -> FillingClassSpec:
    """A feasible class, taken from a random filling."""
    return random_filling(rng, shape).class_spec()


def random_column_permutation(rng: random.Random, shape: MoonPolyomino,
                              tries: int = 50) -> tuple[MoonPolyomino, tuple[int, ...]]:
    """Another moon polyomino with the same columns; falls back to the left stack."""
    spans = shape.column_spans
    for _ in range(tries):
        perm = list(range(1, shape.m + 1))
        rng.shuffle(perm)
        try:
            return from_columns([spans[p - 1] for p in perm]), tuple(perm)
        except ShapeError:
            continue
    a = alpha(shape)
    return a.shape, a.labels


@dataclass
class VerifyResult:
    theorem: str
    trials: int
    status: str
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "trials": self.trials, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _shape(rng, max_cells):
    return random_moon_shape(rng, max_cells, max_columns=min(7, max_cells))


def _trial_dist(rng, max_cells, stat):
    spec = random_spec(rng, _shape(rng, max_cells))
    expected = product_formula(spec)
    got = stat(spec)
    if got != expected:
        return {"spec": _spec_json(spec), "expected": expected.to_json(), "got": got.to_json()}
    return None


def _spec_json(spec: FillingClassSpec) -> dict:
    return {"shape": spec.shape.to_json(), "s": list(spec.s), "A": sorted(spec.A)}


def _trial_41(rng, max_cells):
    return _trial_dist(rng, max_cells, maj_distribution)


def _trial_44(rng, max_cells):
    return _trial_dist(rng, max_cells, ne_distribution)


def _trial_45(rng, max_cells):
    spec = random_spec(rng, _shape(rng, max_cells))
    a, b = maj_distribution(spec), ne_distribution(spec)
    if a != b:
        return {"spec": _spec_json(spec), "maj": a.to_json(), "ne": b.to_json()}
    return None


def _trial_43(rng, max_cells):
    shape = _shape(rng, max_cells)
    spec = random_spec(rng, shape)
    other, perm = random_column_permutation(rng, shape)
    spec_b = FillingClassSpec(other, tuple(spec.s[p - 1] for p in perm), spec.A)
    a, b = maj_distribution(spec), maj_distribution(spec_b)
    if a != b:
        return {"spec": _spec_json(spec), "permuted": _spec_json(spec_b),
                "maj": a.to_json(), "maj_permuted": b.to_json()}
    return None


def _trial_57(rng, max_cells):
    lengths = []
    left = max_cells
    while left > 0 and (not lengths or rng.random() < 0.75):
        lengths.append(rng.randint(1, min(left, 6)))
        left -= lengths[-1]
    # unimodal: sort around a random peak
    k = rng.randint(0, len(lengths))
    lengths = sorted(lengths[:k]) + sorted(lengths[k:], reverse=True)
    F = random_filling(rng, MoonPolyomino.from_row_lengths(lengths))
    G = phi(F)
    if maj(F) != ne_count(G) or G.class_spec() != F.class_spec() or phi_inverse(G) != F:
        return {"filling": F.to_json(), "image": G.to_json()}
    return None


def _trial_511(rng, max_cells):
    from .rearrange import psi, psi_inverse
    F = random_filling(rng, _shape(rng, max_cells))
    G = psi(F)
    if maj(F) != ne_count(G) or G.class_spec() != F.class_spec() or psi_inverse(G) != F:
        return {"filling": F.to_json(), "image": G.to_json()}
    return None


def _trial_46(rng, max_cells):
    k = rng.randint(0, min(5, max_cells))
    n = rng.randint(2, 5)
    m = rng.randint(0, 3)
    if rng.random() < 0.5:
        w, letter = tuple(rng.randint(1, n - 1) for _ in range(k)), n
    else:
        w, letter = tuple(rng.randint(2, n) for _ in range(k)), 1
    got = insertion_multiset(w, letter, m)
    gf = QPoly.from_exponents(got.elements()) * QPoly.monomial(maj_word(w))
    if got != partial_sum_multiset(k, m) or gf != QPoly.monomial(maj_word(w)) * qbinomial(k + m, m):
        return {"word": list(w), "letter": letter, "m": m}
    return None


def _trial_pmaj(rng, max_cells):
    k = rng.randint(1, min(5, max(1, max_cells // 2)))
    groups: dict = {}
    for d in perfect_matchings(k):
        key = (d.left_endpoints, d.right_endpoints)
        a, b = groups.setdefault(key, ([], []))
        a.append(pmaj(d))
        b.append(crossings(d))
    keys = sorted(groups)
    key = keys[rng.randrange(len(keys))]
    a, b = groups[key]
    if sorted(a) != sorted(b):
        return {"left": list(key[0]), "right": list(key[1])}
    return None


THEOREMS = {
    "4.1": _trial_41,
    "4.3": _trial_43,
    "4.4": _trial_44,
    "4.5": _trial_45,
    "5.7": _trial_57,
    "5.11": _trial_511,
    "lemma4.6": _trial_46,
    "pmaj": _trial_pmaj,
}


def verify(theorem: str, seed: int, trials: int, max_cells: int) -> VerifyResult:
    """Run seeded random trials; stops at the first counterexample."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    if max_cells < 1 or trials < 0:
        raise ValueError("max-cells must be positive and trials nonnegative")
    rng = random.Random(seed)
    trial = THEOREMS[theorem]
    for t in range(trials):
        bad = trial(rng, max_cells)
        if bad is not None:
            return VerifyResult(theorem, t + 1, "counterexample", bad)
    return VerifyResult(theorem, trials, "verified")
