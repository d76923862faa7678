import random

from hypothesis import given, settings
from hypothesis import strategies as st

from logskel.lattice import (
    det,
    int_kernel_basis,
    is_unimodular,
    lattice_saturation_is_trivial,
    mat_mult,
    snf_diagonal,
    snf_with_transforms,
    SparseIntMatrix,
)
from logskel.complexes import snf_self_check


def random_matrix(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_snf_small_examples():
    u, d, v = snf_with_transforms([[2, 4], [6, 8]])
    assert is_unimodular(u) and is_unimodular(v)
    assert mat_mult(mat_mult(u, [[2, 4], [6, 8]]), v) == d
    diag = [d[0][0], d[1][1]]
    assert diag == [2, 4]  # det 8, gcd 2


def test_snf_self_check_seeded_sweep():
    rng = random.Random(11)
    for _ in range(250):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert snf_self_check(m)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3),
                min_size=2, max_size=4))
def test_snf_self_check_hypothesis(mat):
    assert snf_self_check(mat)


def test_snf_diagonal_matches_transform_version():
    rng = random.Random(5)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), 6)
        _, d, _ = snf_with_transforms(m)
        expect = [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i] != 0]
        assert snf_diagonal(m) == expect


def test_sparse_snf_matches_dense():
    rng = random.Random(17)
    for _ in range(60):
        rows, cols = rng.randint(2, 7), rng.randint(2, 7)
        m = random_matrix(rng, rows, cols, 4)
        columns = [[(i, m[i][j]) for i in range(rows) if m[i][j]] for j in range(cols)]
        got = SparseIntMatrix(columns, rows).diagonal_snf()
        assert sorted(got) == sorted(snf_diagonal(m))


def test_kernel_is_saturated():
    a = [[2, 0, -2], [0, 3, -3]]
    ker = int_kernel_basis(a)
    assert len(ker) == 1
    assert all(sum(row[i] * ker[0][i] for i in range(3)) == 0 for row in a)
    assert lattice_saturation_is_trivial(ker, 3)


def test_det_bareiss():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 1], [1, 1]]) == 0
