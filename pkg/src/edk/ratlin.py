"""Exact rational linear algebra for small dense systems, plus a simplex
solver with a lexicographic objective.

Everything works over :class:`fractions.Fraction`; systems stay tiny (a
handful of variables), so plain Gaussian elimination and a dense tableau are
the right tools.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def solve_linear(matrix, rhs):
    """Solve A x = b exactly; return None when A is singular.

    ``matrix`` is a list of rows.  Inputs are not modified.
    """
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        for r in range(n):
            if r == col or a[r][col] == 0:
                continue
            factor = a[r][col] / inv
            for c in range(col, n + 1):
                a[r][c] -= factor * a[col][c]
    return [a[r][n] / a[r][r] for r in range(n)]


def _tadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _tscale(s, u):
    return tuple(s * a for a in u)


def simplex_max_lex(rows, rhs, objectives):
    """Maximize a lexicographic objective over {x >= 0 : rows . x <= rhs}.

    ``objectives[j]`` is the objective tuple attached to variable j; the
    program maximizes sum_j x_j * objectives[j] under tuple comparison.  All
    rhs entries must be nonnegative so the slack basis is feasible.  Returns
    (x, objective value).  Bland's rule guarantees termination.
    """
    m = len(rows)
    n = len(objectives)
    depth = len(objectives[0]) if objectives else 1
    zero_t = (ZERO,) * depth
    for b in rhs:
        if b < 0:
            raise ValueError("simplex start needs nonnegative rhs")

    # tableau over structural + slack variables
    tab = []
    for i, row in enumerate(rows):
        line = [Fraction(v) for v in row] + [ZERO] * m + [Fraction(rhs[i])]
        line[n + i] = ONE
        tab.append(line)
    cost = [tuple(Fraction(v) for v in obj) for obj in objectives] + [zero_t] * m
    basis = list(range(n, n + m))

    while True:
        # reduced costs via the basic cost combination
        entering = -1
        for j in range(n + m):
            if j in basis:
                continue
            red = cost[j]
            for i in range(m):
                cb = cost[basis[i]]
                if cb != zero_t and tab[i][j] != 0:
                    red = _tadd(red, _tscale(-tab[i][j], cb))
            if red > zero_t:
                entering = j
                break  # Bland: first improving index
        if entering < 0:
            break
        ratio = None
        leaving = -1
        for i in range(m):
            coef = tab[i][entering]
            if coef > 0:
                r = tab[i][-1] / coef
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leaving]):
                    ratio = r
                    leaving = i
        if leaving < 0:
            raise ValueError("objective unbounded")
        piv = tab[leaving][entering]
        tab[leaving] = [v / piv for v in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leaving])]
        basis[leaving] = entering

    x = [ZERO] * n
    value = zero_t
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
            value = _tadd(value, _tscale(x[b], cost[b]))
    return x, value
