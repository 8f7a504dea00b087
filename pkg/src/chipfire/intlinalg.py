"""Exact integer linear algebra: normal forms, Diophantine systems,
lattice quotients, and integer-point searches in polytopes.

All matrices are dense lists/tuples of Python ints; intermediate values in
normal-form computations can be much larger than the inputs, which is why
nothing here ever touches floating point.  Pivoting rules are fixed so
that results are bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from . import lp
from .errors import PreconditionError, UnboundedSearchError

Matrix = list  # list of list of int; tuples accepted everywhere


def shape(A):
    return len(A), (len(A[0]) if len(A) else 0)


def copy_matrix(A) -> list:
    return [list(row) for row in A]


def freeze(A) -> tuple:
    return tuple(tuple(row) for row in A)


def identity(n) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n) -> list:
    return [[0] * n for _ in range(m)]


def transpose(A) -> list:
    m, n = shape(A)
    return [[A[i][j] for i in range(m)] for j in range(n)]


def mat_mul(A, B) -> list:
    m, k = shape(A)
    k2, n = shape(B)
    if k != k2:
        raise PreconditionError("matrix dimensions do not match")
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def is_zero_matrix(A) -> bool:
    return all(all(v == 0 for v in row) for row in A)


def determinant(A) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, n2 = shape(A)
    if n != n2:
        raise PreconditionError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = copy_matrix(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(A) -> int:
    """Rank over Q, by fraction-free elimination with column skipping."""
    a = copy_matrix(A)
    m, n = shape(a)
    r, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithDecomposition:
    """U . A . V = D with U, V unimodular and D diagonal.

    ``diagonal`` lists the nonzero invariant factors d_1 | d_2 | ...;
    ``rank`` is their count.  ``u_inv`` and ``v_inv`` carry the exact
    inverses (tracked during elimination, not recomputed).
    """

    U: tuple
    D: tuple
    V: tuple
    u_inv: tuple
    v_inv: tuple
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


class _Transforms:
    """Row/column operation recorder keeping U, U^-1, V, V^-1 in sync."""

    def __init__(self, m, n):
        self.U = identity(m)
        self.Uinv = identity(m)
        self.V = identity(n)
        self.Vinv = identity(n)

    def swap_rows(self, a, r, s):
        a[r], a[s] = a[s], a[r]
        self.U[r], self.U[s] = self.U[s], self.U[r]
        for row in self.Uinv:
            row[r], row[s] = row[s], row[r]

    def swap_cols(self, a, c, d):
        for row in a:
            row[c], row[d] = row[d], row[c]
        for row in self.V:
            row[c], row[d] = row[d], row[c]
        self.Vinv[c], self.Vinv[d] = self.Vinv[d], self.Vinv[c]

    def negate_row(self, a, r):
        a[r] = [-v for v in a[r]]
        self.U[r] = [-v for v in self.U[r]]
        for row in self.Uinv:
            row[r] = -row[r]

    def add_row(self, a, r, s, q):
        """row_r += q * row_s"""
        a[r] = [x + q * y for x, y in zip(a[r], a[s])]
        self.U[r] = [x + q * y for x, y in zip(self.U[r], self.U[s])]
        for row in self.Uinv:
            row[s] -= q * row[r]

    def add_col(self, a, c, d, q):
        """col_c += q * col_d"""
        for row in a:
            row[c] += q * row[d]
        for row in self.V:
            row[c] += q * row[d]
        self.Vinv[d] = [x - q * y for x, y in zip(self.Vinv[d], self.Vinv[c])]


def _min_pivot(a, t, m, n):
    """Smallest-magnitude nonzero entry of the trailing submatrix; ties by
    lowest (row, col).  Deterministic by construction."""
    best = None
    for r in range(t, m):
        row = a[r]
        for c in range(t, n):
            v = row[c]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), r, c)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with full transforms.

    Deterministic pivoting: smallest-magnitude nonzero entry, ties broken
    by lowest (row, col).  Arbitrary-precision throughout.
    """
    a = copy_matrix(A)
    m, n = shape(a)
    t = _Transforms(m, n)
    k = 0
    while True:
        piv = _min_pivot(a, k, m, n)
        if piv is None:
            break
        _, r, c = piv
        if r != k:
            t.swap_rows(a, k, r)
        if c != k:
            t.swap_cols(a, k, c)
        if a[k][k] < 0:
            t.negate_row(a, k)
        # clear row and column k; pivot magnitude strictly decreases on
        # every imperfect division, so this terminates
        while True:
            dirty = False
            for r in range(k + 1, m):
                if a[r][k]:
                    q = a[r][k] // a[k][k]
                    if q:
                        t.add_row(a, r, k, -q)
                    if a[r][k]:
                        t.swap_rows(a, k, r)
                        if a[k][k] < 0:
                            t.negate_row(a, k)
                        dirty = True
            for c in range(k + 1, n):
                if a[k][c]:
                    q = a[k][c] // a[k][k]
                    if q:
                        t.add_col(a, c, k, -q)
                    if a[k][c]:
                        t.swap_cols(a, k, c)
                        dirty = True
            if not dirty:
                break
        # divisibility fix: pivot must divide the whole trailing block
        offender = None
        for r in range(k + 1, m):
            for c in range(k + 1, n):
                if a[r][c] % a[k][k]:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            t.add_row(a, k, offender, 1)
            continue
        k += 1
        if k == m or k == n:
            break
    diagonal = tuple(a[j][j] for j in range(min(m, n)) if a[j][j])
    return SmithDecomposition(
        freeze(t.U), freeze(a), freeze(t.V), freeze(t.Uinv), freeze(t.Vinv), diagonal
    )


# ---------------------------------------------------------------------------
# Hermite normal form (row style; column style derived by transposition)

def row_hermite(A):
    """Row Hermite normal form.

    Returns (H, U, rank) with H = U A, U unimodular, pivots positive,
    entries above each pivot reduced into [0, pivot).
    """
    a = copy_matrix(A)
    m, n = shape(a)
    U = identity(m)
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if a[i][c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: (abs(a[i][c]), i))
            i0, i1 = nz[0], nz[1]
            q = a[i1][c] // a[i0][c]
            a[i1] = [x - q * y for x, y in zip(a[i1], a[i0])]
            U[i1] = [x - q * y for x, y in zip(U[i1], U[i0])]
        nz = [i for i in range(r, m) if a[i][c]]
        if not nz:
            continue
        i0 = nz[0]
        if i0 != r:
            a[r], a[i0] = a[i0], a[r]
            U[r], U[i0] = U[i0], U[r]
        if a[r][c] < 0:
            a[r] = [-v for v in a[r]]
            U[r] = [-v for v in U[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return a, U, r


def column_lattice_basis(A):
    """A canonical basis of the lattice generated by the columns of A.

    Returns (B, W) where B is n x r of full column rank with the same
    column span over Z as A, and W maps coordinates back: B = A . W with
    W of size cols(A) x r.
    """
    H, U, r = row_hermite(transpose(A))
    B = transpose(H[:r])
    W = [[U[j][i] for j in range(r)] for i in range(len(U))]
    return B, W, r


def kernel_basis(A) -> list:
    """A basis of the integer kernel lattice {x : A x = 0} (saturated)."""
    snf = smith_normal_form(A)
    _, n = shape(A)
    r = snf.rank
    return [[snf.V[i][j] for i in range(n)] for j in range(r, n)]


def in_lattice(basis, v) -> bool:
    """Is v an integer combination of the given basis vectors?"""
    if not basis:
        return all(x == 0 for x in v)
    A = transpose(basis)
    return solve_diophantine(A, v).solvable


# ---------------------------------------------------------------------------
# Diophantine systems

@dataclass(frozen=True)
class DiophantineResult:
    """Outcome of solving A x = b over the integers.

    When solvable, ``x`` is one solution and ``kernel`` a lattice basis of
    ker A, so the full solution set is x + span_Z(kernel).  When not,
    ``certificate`` pins the SNF obstruction: either an invariant factor
    that fails to divide the transformed right-hand side, or a zero row
    with nonzero transformed value.
    """

    solvable: bool
    x: tuple[int, ...] | None = None
    kernel: tuple[tuple[int, ...], ...] = ()
    certificate: dict | None = None


def solve_diophantine(A, b) -> DiophantineResult:
    m, n = shape(A)
    if len(b) != m:
        raise PreconditionError("right-hand side length does not match")
    snf = smith_normal_form(A)
    c = mat_vec(snf.U, b)
    r = snf.rank
    y = [0] * n
    for j in range(r):
        d = snf.D[j][j]
        if c[j] % d:
            return DiophantineResult(
                False,
                certificate={"kind": "indivisible", "row": j,
                             "invariant_factor": d, "value": c[j]},
            )
        y[j] = c[j] // d
    for j in range(r, m):
        if c[j]:
            return DiophantineResult(
                False,
                certificate={"kind": "inconsistent-zero-row", "row": j, "value": c[j]},
            )
    x = mat_vec(snf.V, y)
    kern = tuple(tuple(snf.V[i][j] for i in range(n)) for j in range(r, n))
    return DiophantineResult(True, tuple(x), kern)


# ---------------------------------------------------------------------------
# Lattice quotients and abelian group structure

@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant-factor form of a finitely generated abelian group."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise PreconditionError("torsion coefficients must form a divisor chain")
        if any(t <= 1 for t in self.torsion):
            raise PreconditionError("torsion coefficients must exceed 1")

    @property
    def torsion_order(self) -> int:
        return reduce(lambda x, y: x * y, self.torsion, 1)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LatticeQuotient:
    """Structure of (Z-span K) / (Z-span M) plus explicit torsion data.

    ``torsion_generators`` holds (order, ambient vector) pairs, one per
    invariant factor > 1; every torsion coset has a unique representative
    sum(c_j * g_j) with 0 <= c_j < order_j.
    """

    ambient_dim: int
    group: AbelianGroupStructure
    torsion_generators: tuple[tuple[int, tuple[int, ...]], ...]

    def torsion_representatives(self) -> list[tuple[int, ...]]:
        """All torsion-coset representatives, identity (zero) first."""
        reps = [(0,) * self.ambient_dim]
        for order, gen in self.torsion_generators:
            new = []
            for base in reps:
                acc = base
                for _ in range(order):
                    new.append(acc)
                    acc = tuple(a + g for a, g in zip(acc, gen))
            reps = new
        return reps


def lattice_quotient(k_basis, m_generators) -> LatticeQuotient:
    """Quotient of the lattice spanned by ``k_basis`` by its sublattice
    spanned by ``m_generators``; generators outside the lattice are a
    precondition violation."""
    k_basis = [list(v) for v in k_basis]
    kdim = len(k_basis)
    m_generators = [list(v) for v in m_generators]
    ambient = len(k_basis[0]) if kdim else (len(m_generators[0]) if m_generators else 0)
    if kdim == 0:
        if any(any(x for x in m) for m in m_generators):
            raise PreconditionError("generator outside the zero lattice")
        return LatticeQuotient(ambient, AbelianGroupStructure(0), ())
    K = transpose(k_basis)  # ambient x kdim, columns are the basis
    coords = []
    for mvec in m_generators:
        res = solve_diophantine(K, list(mvec))
        if not res.solvable:
            raise PreconditionError("generator outside the lattice spanned by K")
        coords.append(list(res.x))
    if not coords:
        return LatticeQuotient(ambient, AbelianGroupStructure(kdim), ())
    C = transpose(coords)  # kdim x len(M)
    snf = smith_normal_form(C)
    torsion = tuple(d for d in snf.diagonal if d > 1)
    free = kdim - snf.rank
    gens = []
    for j, d in enumerate(snf.diagonal):
        if d > 1:
            coord = [snf.u_inv[i][j] for i in range(kdim)]
            ambient_vec = mat_vec(K, coord)
            gens.append((d, tuple(ambient_vec)))
    return LatticeQuotient(ambient, AbelianGroupStructure(free, torsion), tuple(gens))


# ---------------------------------------------------------------------------
# Integer points of polytopes p + B z >= 0

def _ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for b > 0, exact."""
    return -((-a) // b)


def _propagate(consts, B, lo, hi, free):
    """Interval (bounds-consistency) propagation for p + B z >= 0.

    ``consts`` already includes contributions of fixed coordinates.
    Mutates lo/hi for free coordinates; returns False when some interval
    empties or a constraint cannot be satisfied within the box.
    """
    n = len(consts)
    changed = True
    while changed:
        changed = False
        for r in range(n):
            row = B[r]
            active = [j for j in free if row[j]]
            slack = consts[r]
            for j in active:
                v = row[j]
                slack += v * (hi[j] if v > 0 else lo[j])
            if slack < 0:
                return False
            for j in active:
                v = row[j]
                rest = slack - v * (hi[j] if v > 0 else lo[j])
                # need v * z_j >= -rest
                if v > 0:
                    new_lo = _ceil_div(-rest, v)
                    if new_lo > lo[j]:
                        lo[j] = new_lo
                        changed = True
                else:
                    new_hi = rest // (-v)
                    if new_hi < hi[j]:
                        hi[j] = new_hi
                        changed = True
                if lo[j] > hi[j]:
                    return False
    return True


def find_lattice_point_in_orthant(p, B):
    """First integer z (in a fixed deterministic order) with p + B z >= 0.

    B must have full column rank and the polytope must be bounded; the
    latter is asserted at runtime via exact LP rather than trusted, so a
    violation raises UnboundedSearchError instead of looping.  Returns the
    coordinate tuple z, or None when the polytope holds no integer point.
    """
    p = [int(v) for v in p]
    k = len(B[0]) if B and len(B) else 0
    if k == 0:
        return () if all(v >= 0 for v in p) else None
    bounds = lp.polytope_bounds(p, B)
    if bounds is None:
        return None
    lo, hi, centers = [], [], []
    for lo_q, hi_q in bounds:
        lo.append(int(math.ceil(lo_q)))
        hi.append(int(math.floor(hi_q)))
        centers.append((lo_q + hi_q) / 2)
    if any(a > b for a, b in zip(lo, hi)):
        return None

    order = sorted(range(k), key=lambda j: (hi[j] - lo[j], j))
    consts = list(p)
    z = [None] * k

    def descend(level, lo, hi):
        if level == len(order):
            return all(c >= 0 for c in consts)
        j = order[level]
        free = order[level + 1 :]
        center = centers[j]
        values = sorted(range(lo[j], hi[j] + 1), key=lambda v: (abs(v - center), v))
        for v in values:
            z[j] = v
            for r in range(len(consts)):
                consts[r] += B[r][j] * v
            nlo, nhi = list(lo), list(hi)
            ok = _propagate(consts, B, nlo, nhi, free)
            if ok and descend(level + 1, nlo, nhi):
                return True
            for r in range(len(consts)):
                consts[r] -= B[r][j] * v
            z[j] = None
        return False

    if descend(0, lo, hi):
        return tuple(z)
    return None


def minimize_l1_in_coset(v0, kernel, *, node_limit=2_000_000):
    """Canonical representative of v0 + span_Z(kernel): minimal L1 norm,
    ties broken by lexicographic order of the full vector.

    Falls back to a Hermite-reduced representative if the candidate box
    exceeds ``node_limit`` (documented as best-effort; the corpus stays
    far below the limit).
    """
    v0 = [int(v) for v in v0]
    if not kernel:
        return tuple(v0)
    H, _, r = row_hermite([list(k) for k in kernel])
    H = H[:r]
    # reduce into the Hermite box to get a small incumbent
    v = list(v0)
    pivots = []
    for row in H:
        pc = next(j for j in range(len(row)) if row[j])
        pivots.append((pc, row))
    for pc, row in pivots:
        q = v[pc] // row[pc]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    best_norm = sum(abs(x) for x in v)
    best = tuple(v)

    # search |v0 + N y|_1 <= best_norm exhaustively; N columns = kernel
    N = transpose(H)
    k = r
    n = len(v0)
    # bounds for y via LP on the linearized L1 ball
    try:
        box = _l1_ball_box(v0, N, best_norm)
    except UnboundedSearchError:  # kernel not full rank should not happen
        return best
    if box is None:
        return best
    total = 1
    for a, b in box:
        total *= max(0, b - a + 1)
        if total > node_limit:
            return best

    def rec(j, y):
        nonlocal best, best_norm
        if j == k:
            w = list(v0)
            for col, yj in enumerate(y):
                if yj:
                    for i in range(n):
                        w[i] += N[i][col] * yj
            norm = sum(abs(x) for x in w)
            wt = tuple(w)
            if norm < best_norm or (norm == best_norm and wt < best):
                best_norm, best = norm, wt
            return
        for val in range(box[j][0], box[j][1] + 1):
            rec(j + 1, y + [val])

    rec(0, [])
    return best


def _l1_ball_box(v0, N, radius):
    """Integer bounding box for {y : |v0 + N y|_1 <= radius} via exact LP."""
    n = len(v0)
    k = len(N[0])
    # variables: y = u - w (2k), t (n), slack for sum constraint (1)
    ncols = 2 * k + n + 1
    A, b = [], []
    for i in range(n):
        # t_i - (v0 + N y)_i >= 0   ->  t_i - N_i y >= v0_i is wrong sign;
        # encode t_i >= x_i and t_i >= -x_i with x = v0 + N y:
        row1 = [0] * ncols
        row2 = [0] * ncols
        for j in range(k):
            row1[j] = -N[i][j]
            row1[k + j] = N[i][j]
            row2[j] = N[i][j]
            row2[k + j] = -N[i][j]
        row1[2 * k + i] = 1
        row2[2 * k + i] = 1
        A.append(row1)
        b.append(v0[i])
        A.append(row2)
        b.append(-v0[i])
    # sum t_i + slack = radius
    row = [0] * ncols
    for i in range(n):
        row[2 * k + i] = 1
    row[ncols - 1] = 1
    A.append(row)
    b.append(radius)
    # the two t-rows are inequalities: add surplus variables
    # rewrite: t_i - x_i - s = 0 ... simpler to solve with explicit slacks:
    A2, b2 = [], []
    extra = 2 * n
    width = ncols + extra
    for idx, (row, rhs) in enumerate(zip(A, b)):
        wide = row + [0] * extra
        if idx < 2 * n:
            wide[ncols + idx] = -1  # surplus: lhs - s = rhs
        A2.append(wide)
        b2.append(rhs)
    out = []
    for j in range(k):
        c = [0] * width
        c[j], c[k + j] = 1, -1
        lo = lp.solve_lp(A2, b2, c)
        if lo.status != lp.OPTIMAL:
            return None
        hi = lp.solve_lp(A2, b2, c, maximize=True)
        if hi.status != lp.OPTIMAL:
            return None
        out.append((int(math.floor(lo.value)), int(math.ceil(hi.value))))
    return out
