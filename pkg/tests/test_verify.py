from __future__ import annotations

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from moonmaj.filling import Filling
from moonmaj.generators import (ferrers_shapes, left_stack_shapes, moon_shapes,
                                random_moon_shape)
from moonmaj.shape import MoonPolyomino
from moonmaj.verify import (GAMMA_CHECKS, PHI_CHECKS, PSI_CHECKS, THEOREMS, ExhaustiveReport,
                            check_gamma, check_maj_forms, check_phi, check_psi, decode, encode,
                            n_codes, random_column_permutation, random_filling, random_spec,
                            verify)
import oracles


def test_mixed_radix_codes():
    S = MoonPolyomino(((2, 3), (1, 3), (2, 2)))
    total = int(n_codes(S.lo, S.hi))
    assert total == 3 * 4 * 2
    seen = set()
    cells = np.zeros(S.n, dtype=np.int64)
    for code in range(total):
        decode(code, S.lo, S.hi, cells)
        Filling(S, tuple(int(c) for c in cells))
        assert encode(cells, S.lo, S.hi) == code
        seen.add(tuple(cells))
    assert len(seen) == total


def test_exhaustive_drivers_small():
    rep = check_maj_forms(moon_shapes(8))
    assert rep.ok and rep.shapes == sum(1 for _ in moon_shapes(8))
    assert rep.fillings == sum(len(list(oracles.fillings(S.rows))) for S in moon_shapes(8))
    for report, checks in ((check_phi(left_stack_shapes(8)), PHI_CHECKS),
                           (check_gamma(ferrers_shapes(8)), GAMMA_CHECKS),
                           (check_psi(moon_shapes(8)), PSI_CHECKS)):
        assert report.ok
        assert set(report.failures) == set(checks)
        assert report.first_counterexample is None


def test_report_records_first_counterexample():
    S = MoonPolyomino.rectangle(2, 2)
    rep = ExhaustiveReport(("a", "b"))
    rep.add((0, 2), S, 5, {"pivot": 1})
    rep.add((1, 0), S, 0)
    assert not rep.ok
    assert rep.failures == {"a": 1, "b": 2}
    assert rep.first_counterexample["pivot"] == 1
    assert rep.first_counterexample["filling"]["cells"] == [1, 2]


def test_random_helpers_are_seeded():
    a = random.Random(11)
    b = random.Random(11)
    S = random_moon_shape(a, 12, 5)
    assert S == random_moon_shape(b, 12, 5)
    assert S.size <= 12 and S.m <= 5
    assert random_filling(a, S) == random_filling(b, S)
    spec = random_spec(a, S)
    assert spec == random_spec(b, S)


def test_random_column_permutation():
    rng = random.Random(2)
    for _ in range(50):
        S = random_moon_shape(rng, 12, 6)
        other, perm = random_column_permutation(rng, S)
        assert sorted(perm) == list(range(1, S.m + 1))
        assert [S.column_spans[p - 1][1] - S.column_spans[p - 1][0]
                for p in perm] == [b - a for a, b in other.column_spans]


@pytest.mark.parametrize("theorem", sorted(THEOREMS))
def test_every_theorem_verifies(theorem):
    result = verify(theorem, seed=1, trials=30, max_cells=10)
    assert result.status == "verified", result.to_json()
    assert result.to_json() == {"theorem": theorem, "trials": 30, "status": "verified"}


def test_verify_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify("9.9", 0, 1, 5)
    with pytest.raises(ValueError):
        verify("4.1", 0, 1, 0)


def test_verify_stops_at_counterexample(monkeypatch):
    calls = []

    def trial(rng, max_cells):
        calls.append(1)
        return {"bad": True} if len(calls) == 3 else None

    monkeypatch.setitem(THEOREMS, "4.1", trial)
    result = verify("4.1", 0, 10, 5)
    assert result.status == "counterexample"
    assert result.trials == 3
    assert result.to_json()["counterexample"] == {"bad": True}


def test_pure_python_fallback():
    env = dict(os.environ, MOONMAJ_NO_JIT="1")
    code = ("from moonmaj.verify import check_psi\n"
            "from moonmaj.generators import moon_shapes\n"
            "print(check_psi(moon_shapes(5)).ok)\n")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                          check=False)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "True"
