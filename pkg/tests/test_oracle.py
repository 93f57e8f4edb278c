import random

import pytest

from helpers import P
from richardson.oracle import (
    Fp,
    bruhat_cell_of,
    count_by_gauss_stratum,
    count_by_stratum,
    count_points,
    matmul,
    permutation_matrix,
    random_upper,
    stratum_count,
)
from richardson.perm import symmetric_group
from richardson.shapes import Shape, comparable_pairs
from richardson.strata import gauss_strata


def test_fp_field():
    a = Fp(5, 3)
    assert (a * a.inverse()).value == 1
    assert (a + 4).value == 2 and (a - 4).value == 4 and (a / 3).value == 1
    with pytest.raises(ZeroDivisionError):
        Fp(5, 0).inverse()
    with pytest.raises(ValueError):
        Fp(4, 1)


def test_count_examples():
    assert count_points(Shape(4, (1, 2), (3, 4)), 2) == 6
    assert count_points(Shape(3, (1, 2), (2, 3)), 3) == 6
    assert count_points(Shape(5, (2, 4), (2, 4)), 5) == 1
    assert count_points(Shape(4, (1, 4), (2, 3)), 3) == 0


def test_count_by_stratum_examples():
    assert count_by_stratum(Shape(4, (1, 2), (3, 4)), 2) == {P(1, 2): 2, P(2, 1): 4}
    assert count_by_stratum(Shape(3, (1, 2), (2, 3)), 5) == {P(2, 1): 20}
    assert count_by_stratum(Shape(5, (2, 4), (2, 4)), 3) == {P(1, 2): 1}


def test_bruhat_cell_examples():
    assert bruhat_cell_of([[1, 0], [0, 1]], 3) == P(1, 2)
    assert bruhat_cell_of([[0, 1], [1, 0]], 3) == P(2, 1)
    with pytest.raises(ValueError):
        bruhat_cell_of([[1, 1], [1, 1]], 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_bruhat_cell_roundtrip(d, p):
    rng = random.Random(d * 10 + p)
    group = list(symmetric_group(d))
    for _ in range(1000):
        w = rng.choice(group)
        A = matmul(matmul(random_upper(d, p, rng), permutation_matrix(w), p), random_upper(d, p, rng), p)
        assert bruhat_cell_of(A, p) == w


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (4, 3)])
def test_n_stability(n, d):
    for sh in comparable_pairs(n, d):
        bigger = Shape(n + 1, sh.I, sh.J)
        for p in (2, 3):
            assert count_points(sh, p, clamp=False) == count_points(bigger, p, clamp=False)
            assert count_points(sh, p) == count_points(bigger, p, clamp=False)


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2)])
def test_gauss_cells(n, d):
    for sh in comparable_pairs(n, d):
        for p in (2, 3):
            counts = count_by_gauss_stratum(sh, p)
            expected = {s.w: stratum_count(s.alpha, s.beta, p) for s in gauss_strata(sh)}
            assert counts == {w: c for w, c in expected.items() if c}


def test_search_guard():
    with pytest.raises(ValueError, match="too large"):
        count_points(Shape(14, (1, 2), (13, 14)), 2)
