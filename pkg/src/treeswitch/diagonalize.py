"""Congruence diagonalization of ``A(T) + alpha*I`` for trees, and what it buys.

:func:`diagonalize` is the classical tree diagonalization: one postorder sweep that
produces a diagonal matrix congruent to ``A(T) + alpha*I``.  By Sylvester's law
of inertia the signs of the diagonal count the eigenvalues of ``A(T)`` above,
at and below ``-alpha``.  Everything else here (inertia queries, bisection for
the spectral radius, index comparison between two trees) is built on those
sign counts alone, never on computed eigenvalues.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .tree import Tree, rooted

MAX_BISECTIONS = 128


@dataclass(frozen=True)
class DiagResult:
    values: tuple
    removed_edges: tuple
    counts: tuple[int, int, int]  # (positive, negative, zero)
    root: int
    root_value: object

    def to_json(self) -> str:
        def enc(x):
            return str(x) if isinstance(x, Fraction) else float(x)

        return json.dumps(
            {
                "values": [enc(x) for x in self.values],
                "removed_edges": [list(e) for e in self.removed_edges],
                "counts": list(self.counts),
                "root": self.root,
                "root_value": enc(self.root_value),
            }
        )


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue counts of ``A(T)`` relative to a query point."""

    greater: int
    equal: int
    less: int


class Comparison(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    INCONCLUSIVE = "Inconclusive"


def _scalar(x, exact: bool):
    if not exact:
        return float(x)
    if isinstance(x, (Rational, float, str)):
        return Fraction(x)
    raise TypeError(f"exact mode needs a rational parameter, got {type(x).__name__}")


def diagonalize(t: Tree, root: int, alpha, exact: bool = False) -> DiagResult:
    """Run Diagonalize(T, alpha) with ``root`` as the traversal root.

    Zero tests are exact equality in both modes; in float mode zeros arise
    only when the arithmetic hits them exactly (e.g. ``alpha = 0`` at a leaf).
    """
    order, parent = rooted(t, root)
    a = _scalar(alpha, exact)
    zero = Fraction(0) if exact else 0.0
    half = Fraction(-1, 2) if exact else -0.5
    two = Fraction(2) if exact else 2.0
    d = [a] * t.n
    severed = [False] * t.n  # severed[v]: edge v--parent[v] was removed
    removed = []
    for v in order:
        kids = [w for w in t.neighbors(v) if w != parent[v] and not severed[w]]
        zero_kid = next((w for w in kids if d[w] == zero), None)
        if zero_kid is not None:
            d[v] = half
            d[zero_kid] = two
            if parent[v] >= 0:
                severed[v] = True
                removed.append((parent[v], v))
        else:
            acc = d[v]
            for w in kids:
                acc -= 1 / d[w]
            d[v] = acc
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return DiagResult(tuple(d), tuple(removed), (pos, neg, t.n - pos - neg), root, d[root])


def inertia(t: Tree, x, exact: bool = False, root: int = 0) -> Inertia:
    """Counts of eigenvalues of ``A(t)`` greater than, equal to and less than ``x``."""
    res = diagonalize(t, root, -_scalar(x, exact), exact)
    pos, neg, zer = res.counts
    return Inertia(pos, zer, neg)


def _greater(t: Tree, x, exact: bool) -> int:
    return inertia(t, x, exact).greater


def spectral_radius(t: Tree, tol: float = 1e-12, exact: bool = False) -> tuple:
    """Bracket ``(lo, hi]`` around the largest adjacency eigenvalue with ``hi - lo <= tol``.

    Invariant kept at every step: at least one eigenvalue above ``lo`` and none
    above ``hi``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if t.n == 1:
        z = Fraction(0) if exact else 0.0
        return (z, z)
    lo = _scalar(0, exact)
    hi = _scalar(t.max_degree + 1, exact)
    g_lo, g_hi = _greater(t, lo, exact), _greater(t, hi, exact)
    assert g_lo >= 1 and g_hi == 0
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if mid == lo or mid == hi:
            break
        g = _greater(t, mid, exact)
        assert g_hi <= g <= g_lo, "eigenvalue count is not monotone"
        if g >= 1:
            lo, g_lo = mid, g
        else:
            hi, g_hi = mid, g
    if hi - lo > tol:
        raise ArithmeticError(f"bracket width {hi - lo} did not reach tol={tol}")
    return (lo, hi)


def compare_index(t1: Tree, t2: Tree, tol: float = 1e-12, exact: bool = False) -> Comparison:
    """Decide the sign of ``rho(t1) - rho(t2)`` from inertia counts.

    A bracket around ``rho(t1)`` is computed, then ``t2`` is queried at the two
    endpoints.  ``GREATER`` means ``rho(t1) > rho(t2)``.
    """
    lo, hi = spectral_radius(t1, tol, exact)
    if t1.n == 1:
        return Comparison.LESS if _greater(t2, 0, exact) >= 1 else Comparison.INCONCLUSIVE
    if _greater(t2, hi, exact) >= 1:
        return Comparison.LESS
    if _greater(t2, lo, exact) == 0:
        return Comparison.GREATER
    return Comparison.INCONCLUSIVE
