from __future__ import annotations

from fractions import Fraction

import numpy as np

from HigherPowerSums.utils.errors import SingularSystem, InconsistentSystem


def _matrix(rows: list) -> np.ndarray:
    return np.array([[Fraction(v) for v in row] for row in rows], dtype=object)


def solve_linear_system(rows: list, rhs: list) -> list[Fraction]:
    """
    Exact Gauss-Jordan elimination on an object array of Fractions.

    :param rows: square matrix as a list of rows
    :param rhs: right-hand side
    :return: the unique solution
    :raises SingularSystem: if no nonzero pivot exists in some column
    """
    n = len(rows)
    if len(rhs) != n or any(len(row) != n for row in rows):
        raise ValueError('square system expected')
    if n == 0:
        return []
    a = np.array([[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)], dtype=object)

    for i in range(n):
        candidates = [j for j in range(i, n) if a[j, i] != 0]
        if not candidates:
            raise SingularSystem()
        pivot = max(candidates, key=lambda j: abs(a[j, i]))
        if pivot != i:
            a[[i, pivot]] = a[[pivot, i]]
        a[i, :] = a[i, :] / a[i, i]
        for j in range(n):
            if j != i and a[j, i] != 0:
                a[j, :] = a[j, :] - a[j, i] * a[i, :]

    return [Fraction(a[i, n]) for i in range(n)]


def solve_overdetermined(rows: list, rhs: list) -> list[Fraction]:
    """
    Exact solution of a consistent system with at least as many equations as unknowns.
    The normal equations give the candidate, every original equation is then checked.

    :raises SingularSystem: if the columns are linearly dependent
    :raises InconsistentSystem: if the candidate misses any equation
    """
    if not rows:
        raise SingularSystem()
    a = _matrix(rows)
    b = np.array([Fraction(v) for v in rhs], dtype=object)
    if a.shape[0] < a.shape[1]:
        raise SingularSystem('underdetermined system')
    gram = a.T.dot(a)
    moment = a.T.dot(b)
    x = solve_linear_system(gram.tolist(), moment.tolist())
    residual = a.dot(np.array(x, dtype=object)) - b
    if any(r != 0 for r in residual):
        raise InconsistentSystem()
    return x
