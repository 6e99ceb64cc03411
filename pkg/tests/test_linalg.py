import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pretzelkit.linalg import SymIntMatrix, determinant, inertia, matrix_signature


@pytest.mark.parametrize("rows, sig", [
    ([[1, 0], [0, 1]], 2),
    ([[1, 0], [0, -1]], 0),
    ([[2, -1], [-1, 2]], 2),
    ([[0, 3], [3, 0]], 0),
    ([[0, 1, 0], [1, 0, 0], [0, 0, -5]], -1),
    ([[0, 0], [0, 0]], 0),
    ([[-1]], -1),
    ([], 0),
])
def test_signature_examples(rows, sig):
    assert matrix_signature(rows) == sig


def test_zero_diagonal_block_counts_rank():
    assert inertia([[0, 2, 1], [2, 0, 1], [1, 1, 0]]) == (1, 2, 0)


def test_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymIntMatrix.from_rows([[1, 2], [3, 4]])


@st.composite
def sym_matrices(draw, max_n=6, lo=-5, hi=5):
    n = draw(st.integers(1, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(lo, hi))
    # sparse zero diagonals exercise the hyperbolic pivot
    if draw(st.booleans()):
        for i in range(n):
            m[i][i] = 0
    return m


def _eig_signature(m):
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    tol = 1e-8 * max(1.0, np.abs(ev).max())
    return int((ev > tol).sum() - (ev < -tol).sum())


@given(sym_matrices())
def test_signature_matches_eigenvalues(m):
    assert matrix_signature(m) == _eig_signature(m)


@given(sym_matrices())
def test_signature_of_negation(m):
    assert matrix_signature(-SymIntMatrix.from_rows(m)) == -matrix_signature(m)


@st.composite
def unimodular(draw, n):
    a = np.eye(n, dtype=object)
    for _ in range(draw(st.integers(0, 3 * n))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            a[:, i] *= -1
            continue
        k = draw(st.integers(-2, 2))
        a[:, i] = a[:, i] + k * a[:, j]
    return a


@settings(max_examples=150)
@given(st.data())
def test_congruence_invariance(data):
    m = data.draw(sym_matrices())
    n = len(m)
    a = data.draw(unimodular(n))
    mm = np.array(m, dtype=object)
    congruent = (a.T @ mm @ a).tolist()
    assert matrix_signature(congruent) == matrix_signature(m)
    assert determinant(congruent) == determinant(m)


@given(sym_matrices(max_n=5))
def test_determinant_matches_float(m):
    assert determinant(m) == round(np.linalg.det(np.array(m, dtype=float)))
