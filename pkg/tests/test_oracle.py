import numpy as np
from hypothesis import given

from treeswitch.diagonalize import Inertia
from treeswitch.oracle import adjacency_matrix, eigenvalues, oracle_inertia, sturm_count, tridiagonalize
from treeswitch.tree import path, sun

from conftest import trees


@given(trees())
def test_eigenvalues_match_numpy(t):
    a = adjacency_matrix(t)
    assert np.allclose(eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)


@given(trees(min_n=2))
def test_tridiagonal_similarity_keeps_spectrum(t):
    a = adjacency_matrix(t)
    d, e = tridiagonalize(a)
    tri = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    assert np.allclose(np.linalg.eigvalsh(tri), np.linalg.eigvalsh(a), atol=1e-10)


def test_path_eigenvalues_closed_form():
    n = 7
    want = sorted(2 * np.cos(np.pi * k / (n + 1)) for k in range(1, n + 1))
    assert np.allclose(eigenvalues(adjacency_matrix(path(n))), want, atol=1e-12)


def test_sturm_count_vectorized():
    d, e = tridiagonalize(adjacency_matrix(path(3)))
    assert list(sturm_count(d, e, [-2.0, -1.0, 0.5, 2.0])) == [0, 1, 2, 3]


def test_oracle_inertia_at_eigenvalue():
    assert oracle_inertia(sun(3), 2.0) == Inertia(0, 1, 6)
