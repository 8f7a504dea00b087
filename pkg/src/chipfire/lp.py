"""Exact rational linear programming (two-phase simplex, Bland's rule).

Internal service used for certified bounds on search polytopes, cone
membership tests, and extreme-ray detection.  Everything is computed over
exact rationals; no floating point.  Uses gmpy2.mpq when available, which
is substantially faster than fractions.Fraction, with identical semantics
at this scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnboundedSearchError

try:  # optional speedup; Fraction fallback keeps the package dependency-free
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QQ

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    value: object | None  # rational, when optimal
    x: list | None  # primal solution over the structural variables


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    prow = tableau[row]
    for r, trow in enumerate(tableau):
        if r != row and trow[col]:
            f = trow[col]
            tableau[r] = [a - f * b for a, b in zip(trow, prow)]
    basis[row] = col


def _run_simplex(tableau, basis, cost, ncols):
    """Minimize ``cost`` over the current dictionary.  Bland's rule.

    ``tableau`` rows are [a_0 .. a_{ncols-1} | rhs]; returns status.
    """
    m = len(tableau)
    while True:
        # reduced costs: c_j - c_B . B^{-1} A_j
        reduced = list(cost)
        rhs_cost = QQ(0)
        for r in range(m):
            cb = cost[basis[r]]
            if cb:
                row = tableau[r]
                for j in range(ncols):
                    if row[j]:
                        reduced[j] -= cb * row[j]
                rhs_cost += cb * row[ncols]
        entering = -1
        for j in range(ncols):
            if reduced[j] < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL, rhs_cost
        leaving, best = -1, None
        for r in range(m):
            a = tableau[r][entering]
            if a > 0:
                ratio = tableau[r][ncols] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leaving]
                ):
                    best, leaving = ratio, r
        if leaving < 0:
            return UNBOUNDED, None
        _pivot(tableau, basis, leaving, entering)


def solve_lp(A, b, c, *, maximize=False):
    """Exact simplex for: optimize c.x subject to A x = b, x >= 0.

    A is a list of rows of ints/rationals.  Returns an LPResult; ``x`` is
    indexed like ``c``.
    """
    m = len(A)
    n = len(c)
    rows = [[QQ(v) for v in row] + [QQ(bi)] for row, bi in zip(A, b)]
    for row in rows:
        if row[n] < 0:
            for j in range(n + 1):
                row[j] = -row[j]

    # initial basis: reuse unit columns where present, artificials elsewhere
    basis = [-1] * m
    used = set()
    for j in range(n):
        nz = [r for r in range(m) if rows[r][j]]
        if len(nz) == 1 and rows[nz[0]][j] == 1 and basis[nz[0]] < 0 and j not in used:
            basis[nz[0]] = j
            used.add(j)
    n_art = sum(1 for r in range(m) if basis[r] < 0)
    ncols = n + n_art
    tableau = []
    art_col = n
    for r in range(m):
        row = rows[r][:n] + [QQ(0)] * n_art + [rows[r][n]]
        if basis[r] < 0:
            row[art_col] = QQ(1)
            basis[r] = art_col
            art_col += 1
        tableau.append(row)

    if n_art:
        phase1 = [QQ(0)] * n + [QQ(1)] * n_art
        status, val = _run_simplex(tableau, basis, phase1, ncols)
        if status != OPTIMAL or val != 0:
            return LPResult(INFEASIBLE, None, None)
        # drive remaining artificials out of the basis
        for r in range(m):
            if basis[r] >= n:
                piv = next((j for j in range(n) if tableau[r][j]), None)
                if piv is not None:
                    _pivot(tableau, basis, r, piv)
        keep = [r for r in range(m) if basis[r] < n]
        tableau = [tableau[r] for r in keep]
        basis = [basis[r] for r in keep]
        # trim artificial columns
        tableau = [row[:n] + [row[ncols]] for row in tableau]
        ncols = n

    sign = -1 if maximize else 1
    cost = [sign * QQ(v) for v in c] + [QQ(0)] * (ncols - n)
    status, val = _run_simplex(tableau, basis, cost, ncols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    x = [QQ(0)] * n
    for r, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = tableau[r][ncols]
    return LPResult(OPTIMAL, -val if maximize else val, x)


def feasible(A, b):
    """Is {x >= 0 : A x = b} nonempty?"""
    res = solve_lp(A, b, [0] * (len(A[0]) if A else 0))
    return res.status == OPTIMAL


def _orthant_lp(p, B, col, *, maximize):
    """Optimize z_col over {z free : p + B z >= 0} via z = u - w, slacks s."""
    n, k = len(p), len(B[0])
    A = []
    for r in range(n):
        row = [QQ(0)] * (2 * k + n)
        for j in range(k):
            row[j] = QQ(B[r][j])
            row[k + j] = QQ(-B[r][j])
        row[2 * k + r] = QQ(-1)
        A.append(row)
    b = [-p[r] for r in range(n)]
    c = [QQ(0)] * (2 * k + n)
    c[col] = QQ(1)
    c[k + col] = QQ(-1)
    return solve_lp(A, b, c, maximize=maximize)


def polytope_bounds(p, B):
    """Certified per-coordinate bounds of the polytope {z : p + B z >= 0}.

    Returns a list of (lo, hi) rationals, or None when the polytope is
    empty.  Raises UnboundedSearchError if any coordinate is unbounded:
    callers rely on pointedness arguments for boundedness, and a violation
    means a bug, not a big answer.
    """
    k = len(B[0]) if B else 0
    out = []
    for j in range(k):
        lo = _orthant_lp(p, B, j, maximize=False)
        if lo.status == INFEASIBLE:
            return None
        hi = _orthant_lp(p, B, j, maximize=True)
        if lo.status == UNBOUNDED or hi.status == UNBOUNDED:
            raise UnboundedSearchError(
                f"coordinate {j} of the search polytope is unbounded"
            )
        out.append((lo.value, hi.value))
    return out


def in_rational_cone(generators, target):
    """Is ``target`` a nonnegative rational combination of ``generators``?

    Both are vectors of equal length; generators is a list of vectors.
    """
    if not generators:
        return all(v == 0 for v in target)
    n = len(target)
    A = [[QQ(g[r]) for g in generators] for r in range(n)]
    return feasible(A, list(target))


def min_dot_over_cone(rows_eq, sigma):
    """min sigma.x over {x >= 0 : rows_eq x = 0, sum(x) = 1}.

    Used to decide whether a chain has componentwise-nonnegative degree
    without materializing the Hilbert basis.  Returns (feasible, value).
    """
    n = len(sigma)
    A = [list(r) for r in rows_eq] + [[1] * n]
    b = [0] * len(rows_eq) + [1]
    res = solve_lp(A, b, list(sigma))
    if res.status != OPTIMAL:
        return False, None
    return True, res.value
