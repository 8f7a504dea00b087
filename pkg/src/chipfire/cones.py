"""The nonnegative kernel of the Laplacian, its Hilbert basis, and the
vector-valued degree map it defines.

The degree of an i-chain is the tuple of its dot products with the Hilbert
basis elements of {x >= 0 : L_i x = 0}, taken in a canonical order
(ascending coefficient sum, ties by lex).  That order is this package's
convention; published tables that fix a different order compare equal
after re-sorting.

The basis itself is computed by a completion procedure over the kernel
lattice: breadth-first extension of candidate vectors by unit steps that
reduce the residual, with candidates dominated by known solutions pruned.
The queue is processed in coefficient-sum order, so solutions appear in
exactly the canonical order and minimality is automatic.
"""

from __future__ import annotations

from functools import lru_cache

from . import lp
from .complexes import IntChain, SimplicialComplex, boundary_matrix, laplacian
from .errors import PreconditionError
from .intlinalg import (
    row_hermite,
    dot,
    find_lattice_point_in_orthant,
    kernel_basis,
    solve_diophantine,
    transpose,
)

DegreeVector = tuple[int, ...]


class HilbertBasisSet:
    """Canonically ordered Hilbert basis of the nonnegative kernel.

    ``elements`` are IntChains; ``ray_flags`` (computed on first use) mark
    the elements that are extreme rays of the real cone, i.e. those not
    expressible as nonnegative rational combinations of the others.
    """

    def __init__(self, dim: int, elements: tuple[IntChain, ...]):
        self.dim = dim
        self.elements = elements
        self._ray_flags: tuple[bool, ...] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def vectors(self) -> list[tuple[int, ...]]:
        return [h.coeffs for h in self.elements]

    @property
    def ray_flags(self) -> tuple[bool, ...]:
        if self._ray_flags is None:
            vecs = self.vectors()
            flags = []
            for k, h in enumerate(vecs):
                others = [v for j, v in enumerate(vecs) if j != k]
                flags.append(not lp.in_rational_cone(others, h))
            self._ray_flags = tuple(flags)
        return self._ray_flags

    def is_zero_one(self) -> bool:
        return all(c in (0, 1) for h in self.elements for c in h.coeffs)


def positive_kernel_element(complex: SimplicialComplex, i: int) -> IntChain:
    """A strictly positive integer vector in the kernel of the Laplacian.

    Constructive: starting from the zero chain, repeatedly fix the lex
    least face with a nonpositive coefficient by adding the star of the
    face obtained by dropping its first vertex, scaled so that coefficient
    becomes 1.  Each step moves the least bad face strictly later in lex
    order, so at most f_i steps happen.
    """
    if not 0 <= i <= complex.dim:
        raise PreconditionError(f"need 0 <= i <= {complex.dim}")
    faces = complex.faces(i)
    b_t = transpose(boundary_matrix(complex, i))  # rows: i-faces -> stars via columns
    coeffs = [0] * len(faces)
    guard = 0
    while True:
        m = next((k for k, v in enumerate(coeffs) if v <= 0), None)
        if m is None:
            return IntChain(i, tuple(coeffs))
        sub = faces[m][1:]
        star_col = complex.face_index(sub)
        star = [b_t[k][star_col] for k in range(len(faces))]
        scale = 1 - coeffs[m]
        coeffs = [v + scale * s for v, s in zip(coeffs, star)]
        guard += 1
        if guard > len(faces) + 1:  # the lemma guarantees progress
            raise AssertionError("star construction failed to make progress")




def _intersect_with_hyperplane(gens, a) -> list[tuple[int, ...]]:
    """Hilbert basis of monoid(gens) cap {x : a.x = 0}.

    ``gens`` must be the Hilbert basis of a monoid of the form
    {x >= 0 : A x = 0}; then differences of members that stay nonnegative
    are members again, which is what the normal-form reduction uses.

    Completion: candidates are processed by ascending coefficient sum;
    each is reduced by known vectors of compatible value (same sign, not
    larger magnitude), and every surviving vector spawns critical pairs
    with all known vectors of opposite sign.  Minimal value-zero vectors
    are the answer.
    """
    import heapq

    def value(v):
        return dot(a, v)

    kept: list[tuple[tuple[int, ...], int]] = []  # (vector, value)
    heap: list[tuple[int, tuple[int, ...]]] = []
    seen: set[tuple[int, ...]] = set()
    for g in gens:
        t = tuple(g)
        if t not in seen:
            seen.add(t)
            heapq.heappush(heap, (sum(t), t))

    def reduce_full(w, val):
        changed = True
        while changed:
            changed = False
            for s, sval in kept:
                if (0 <= sval <= val or val <= sval <= 0) and all(
                    x >= y for x, y in zip(w, s)
                ):
                    w = tuple(x - y for x, y in zip(w, s))
                    val -= sval
                    changed = True
                    if not any(w):
                        return w, 0
        return w, val

    while heap:
        _, w = heapq.heappop(heap)
        val = value(w)
        w, val = reduce_full(w, val)
        if not any(w):
            continue
        kept.append((w, val))
        if val:
            for s, sval in kept:
                if (sval > 0 > val) or (sval < 0 < val):
                    child = tuple(x + y for x, y in zip(w, s))
                    if child not in seen:
                        seen.add(child)
                        heapq.heappush(heap, (sum(child), child))
    zeros = [w for w, val in kept if val == 0]
    out = []
    for w in sorted(zeros, key=lambda v: (sum(v), v)):
        if not any(all(x >= y for x, y in zip(w, s)) for s in out if s != w):
            out.append(w)
    return out


def _minimal_nonnegative_kernel(rows, n) -> list[tuple[int, ...]]:
    """Minimal nonzero points of {x in Z^n : x >= 0, rows . x = 0}.

    Starts from the unit vectors (the Hilbert basis of the orthant) and
    intersects with one hyperplane at a time.
    """
    gens = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    for a in rows:
        if all(dot(a, g) == 0 for g in gens):
            continue
        gens = _intersect_with_hyperplane(gens, a)
    return [g for g in gens if any(g)]


@lru_cache(maxsize=None)
def hilbert_basis(complex: SimplicialComplex, i: int) -> HilbertBasisSet:
    """The Hilbert basis of {x in Z^{f_i} : L_i x = 0, x >= 0}.

    Canonical order: ascending by (coefficient sum, lex).  The result is
    independent of internal processing order by uniqueness of the Hilbert
    basis of a pointed cone.

    The equality system is presented by a Hermite row basis of the
    Laplacian, which keeps entries small and uses rank-many hyperplanes
    instead of f_i of them.
    """
    if not 0 <= i <= complex.dim:
        raise PreconditionError(f"need 0 <= i <= {complex.dim}")
    H, _, r = row_hermite(laplacian(complex, i))
    rows = [tuple(row) for row in H[:r]]
    sols = _minimal_nonnegative_kernel(rows, complex.face_count(i))
    sols.sort(key=lambda v: (sum(v), v))
    return HilbertBasisSet(i, tuple(IntChain(i, v) for v in sols))


def degree(
    complex: SimplicialComplex,
    i: int,
    sigma: IntChain,
    basis: HilbertBasisSet | None = None,
    *,
    rays_only: bool = False,
) -> DegreeVector:
    """Dot products of sigma with the Hilbert basis, in canonical order.

    ``rays_only`` restricts to extreme-ray elements; the two variants
    induce the same componentwise comparisons.
    """
    if basis is None:
        basis = hilbert_basis(complex, i)
    if sigma.dim != i or len(sigma) != complex.face_count(i):
        raise PreconditionError("chain does not match the complex/dimension")
    values = [dot(sigma.coeffs, h.coeffs) for h in basis.elements]
    if rays_only:
        values = [v for v, flag in zip(values, basis.ray_flags) if flag]
    return tuple(values)


@lru_cache(maxsize=None)
def degree_zero_lattice(complex: SimplicialComplex, i: int) -> tuple:
    """Basis of the lattice of chains of degree zero.

    Degree zero means orthogonal to every Hilbert basis element, which is
    the same as orthogonal to the whole kernel of the Laplacian; that perp
    is computed directly from a kernel lattice basis, so no Hilbert basis
    is required.
    """
    kern = kernel_basis(laplacian(complex, i))
    if not kern:
        n = complex.face_count(i)
        return tuple(tuple(1 if j == k else 0 for j in range(n)) for k in range(n))
    return tuple(tuple(v) for v in kernel_basis(kern))


def degree_is_zero(complex: SimplicialComplex, i: int, sigma: IntChain) -> bool:
    kern = kernel_basis(laplacian(complex, i))
    return all(dot(sigma.coeffs, v) == 0 for v in kern)


def degree_is_nonnegative(complex: SimplicialComplex, i: int, sigma: IntChain) -> bool:
    """Componentwise nonnegativity of the degree, decided by exact LP.

    Equivalent to ``min(degree(sigma)) >= 0`` but does not materialize the
    Hilbert basis: sigma has nonnegative degree iff its dot product with
    every point of the cone is nonnegative, which an LP over the
    sum-normalized cone decides.
    """
    lap = laplacian(complex, i)
    feasible, value = lp.min_dot_over_cone(lap, sigma.coeffs)
    if not feasible:  # cone is the origin only: empty degree vector
        return True
    return value >= 0


def realizable_degree(
    complex: SimplicialComplex,
    i: int,
    delta: DegreeVector,
    mode: str = "any",
) -> IntChain | None:
    """A chain of degree ``delta``, or None if the degree is unrealizable.

    ``mode="any"`` solves H sigma = delta over the integers; ``mode=
    "effective"`` additionally requires sigma >= 0, decided by an integer
    feasibility search over the degree-zero lattice (bounded because the
    only nonnegative chain of degree zero is the zero chain).
    """
    if mode not in ("any", "effective"):
        raise PreconditionError(f"unknown mode {mode!r}")
    basis = hilbert_basis(complex, i)
    if len(delta) != len(basis):
        raise PreconditionError(
            f"degree length {len(delta)} != basis size {len(basis)}"
        )
    H = [list(h.coeffs) for h in basis.elements]
    res = solve_diophantine(H, list(delta))
    if not res.solvable:
        return None
    sigma = IntChain(i, res.x)
    if mode == "any":
        return sigma
    return effective_chain_of_same_degree(complex, i, sigma)


def effective_chain_of_same_degree(
    complex: SimplicialComplex, i: int, sigma: IntChain
) -> IntChain | None:
    """An effective chain with the same degree as sigma, if one exists.

    Works over the degree-zero lattice, so the Hilbert basis itself is not
    needed; this is what makes the test cheap even when the basis is huge.
    """
    if sigma.is_effective():
        return sigma
    lattice = degree_zero_lattice(complex, i)
    B = [[v[r] for v in lattice] for r in range(len(sigma))] if lattice else []
    z = find_lattice_point_in_orthant(list(sigma.coeffs), B)
    if z is None:
        return None
    moved = list(sigma.coeffs)
    for col, zj in enumerate(z):
        if zj:
            for r in range(len(moved)):
                moved[r] += lattice[col][r] * zj
    return IntChain(i, tuple(moved))


def realizable_degrees_monoid_members(
    complex: SimplicialComplex, i: int, chains
) -> list[DegreeVector]:
    """Degrees of the given chains (convenience for table generation)."""
    basis = hilbert_basis(complex, i)
    return [degree(complex, i, sigma, basis) for sigma in chains]
