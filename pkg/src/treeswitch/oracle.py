"""Dense eigenvalue oracle, independent of the tree diagonalization.

Route: Householder reduction of the adjacency matrix to a symmetric
tridiagonal matrix (an orthogonal similarity), then Sturm-sequence counts on
the tridiagonal.  Eigenvalues come from bisection on those counts, vectorized
over all eigenvalue indices at once.  Nothing here touches the postorder
procedure in :mod:`treeswitch.diagonalize`.
"""

from __future__ import annotations

import numpy as np

from .diagonalize import Inertia
from .tree import Tree


def adjacency_matrix(t: Tree) -> np.ndarray:
    a = np.zeros((t.n, t.n))
    for u, v in t.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of a tridiagonal matrix similar to symmetric ``a``."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x
        v[0] -= alpha
        vn = np.linalg.norm(v)
        if vn == 0.0:
            continue
        v /= vn
        # a <- H a H with H = I - 2 v v^T acting on rows/cols k+1..
        sub = a[k + 1 :, :]
        sub -= 2.0 * np.outer(v, v @ sub)
        sub = a[:, k + 1 :]
        sub -= 2.0 * np.outer(sub @ v, v)
    return np.diag(a).copy(), np.diag(a, 1).copy()


def sturm_count(diag: np.ndarray, off: np.ndarray, x) -> np.ndarray:
    """Number of eigenvalues strictly below each entry of ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    tiny = 1e-300
    q = diag[0] - x
    q = np.where(q == 0.0, -tiny, q)
    count = (q < 0).astype(int)
    for i in range(1, len(diag)):
        q = diag[i] - x - off[i - 1] ** 2 / q
        q = np.where(q == 0.0, -tiny, q)
        count += q < 0
    return count


def eigenvalues(a: np.ndarray, iters: int = 80) -> np.ndarray:
    """All eigenvalues of symmetric ``a`` in ascending order."""
    diag, off = tridiagonalize(a)
    n = len(diag)
    if n == 1:
        return diag.copy()
    pad = np.concatenate([[0.0], np.abs(off), [0.0]])
    radius = np.abs(off).max() if len(off) else 0.0
    lo = np.full(n, (diag - pad[:-1] - pad[1:]).min() - 1.0 - radius)
    hi = np.full(n, (diag + pad[:-1] + pad[1:]).max() + 1.0 + radius)
    k = np.arange(n)
    for _ in range(iters):
        mid = (lo + hi) / 2
        below = sturm_count(diag, off, mid)
        # eigenvalue k (0-based) lies below mid iff more than k eigenvalues do
        go_left = below > k
        hi = np.where(go_left, mid, hi)
        lo = np.where(go_left, lo, mid)
    return (lo + hi) / 2


def oracle_inertia(t: Tree, x: float, delta: float = 1e-9) -> Inertia:
    """Eigenvalue counts of ``A(t)`` around ``x``; ``equal`` means within ``delta``."""
    diag, off = tridiagonalize(adjacency_matrix(t))
    below, below_hi = sturm_count(diag, off, [x - delta, x + delta])
    return Inertia(t.n - int(below_hi), int(below_hi - below), int(below))
