"""Reduced, ordinary, and relative homology; critical groups.

Everything reduces to lattice quotients computed through Smith normal
form.  The critical group in dimension i is the integer kernel of the
boundary map modulo the image of the Laplacian; its torsion classes come
with explicit chain representatives so that finitely many candidates can
be checked when deciding questions about a whole degree class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import IntChain, SimplicialComplex, boundary_matrix, laplacian
from .errors import PreconditionError
from .intlinalg import (
    AbelianGroupStructure,
    LatticeQuotient,
    kernel_basis,
    lattice_quotient,
    transpose,
)

REDUCED = "reduced"
ORDINARY = "ordinary"
RELATIVE = "relative"


@dataclass(frozen=True)
class HomologyResult:
    dim: int
    group: AbelianGroupStructure
    variant: str

    @property
    def betti(self) -> int:
        return self.group.free_rank


@dataclass(frozen=True)
class CriticalGroupResult:
    dim: int
    group: AbelianGroupStructure
    quotient: LatticeQuotient

    @property
    def torsion_representatives(self) -> tuple[IntChain, ...]:
        """One chain per torsion element, pairwise inequivalent mod im L."""
        return tuple(
            IntChain(self.dim, rep) for rep in self.quotient.torsion_representatives()
        )


@lru_cache(maxsize=None)
def integer_kernel_of_boundary(complex: SimplicialComplex, i: int) -> tuple:
    b = boundary_matrix(complex, i)
    n = complex.face_count(i)
    if not b:  # no rows: the kernel is the whole chain group
        return tuple(
            tuple(1 if j == k else 0 for j in range(n)) for k in range(n)
        )
    return tuple(tuple(v) for v in kernel_basis(b))


def _restricted_boundary(complex, sub, i):
    """Boundary matrix of the quotient complex C(complex)/C(sub)."""
    rows = [
        k for k, f in enumerate(complex.faces(i - 1)) if not sub.has_face(f)
    ]
    cols = [k for k, f in enumerate(complex.faces(i)) if not sub.has_face(f)]
    full = boundary_matrix(complex, i)
    return [[full[r][c] for c in cols] for r in rows]


def homology(
    complex: SimplicialComplex,
    i: int,
    variant: str = REDUCED,
    relative_to: SimplicialComplex | None = None,
) -> HomologyResult:
    """The i-th homology group in the requested variant.

    ``reduced`` uses the augmentation map in dimension 0; ``ordinary``
    replaces it with zero; ``relative`` quotients by a subcomplex (the
    empty subcomplex is allowed and then means ordinary homology).
    """
    if not -1 <= i <= complex.dim:
        raise PreconditionError(f"homology needs -1 <= i <= {complex.dim}")
    if variant == RELATIVE:
        if relative_to is None:
            return homology(complex, i, ORDINARY)
        if not complex.is_subcomplex(relative_to):
            raise PreconditionError("relative homology needs a subcomplex")
        low = _restricted_boundary(complex, relative_to, i)
        high = _restricted_boundary(complex, relative_to, i + 1)
        ncols = len(low[0]) if low else len(
            [f for f in complex.faces(i) if not relative_to.has_face(f)]
        )
        kern = kernel_basis(low) if low else [
            [1 if j == k else 0 for j in range(ncols)] for k in range(ncols)
        ]
        gens = transpose(high) if high and high[0] else []
        return HomologyResult(i, lattice_quotient(kern, gens).group, RELATIVE)
    if variant not in (REDUCED, ORDINARY):
        raise PreconditionError(f"unknown homology variant {variant!r}")

    if variant == ORDINARY and i == 0:
        n = complex.face_count(0)
        kern = [[1 if j == k else 0 for j in range(n)] for k in range(n)]
    else:
        kern = [list(v) for v in integer_kernel_of_boundary(complex, i)]
    high = boundary_matrix(complex, i + 1)
    gens = transpose(high) if high and high[0] else []
    return HomologyResult(i, lattice_quotient(kern, gens).group, variant)


def betti_number(complex: SimplicialComplex, i: int) -> int:
    return homology(complex, i).group.free_rank


@lru_cache(maxsize=None)
def critical_group(complex: SimplicialComplex, i: int) -> CriticalGroupResult:
    """ker of the i-th boundary map modulo the image of the i-th Laplacian.

    Uses the reduced boundary map in dimension 0, so for a connected graph
    this is the Jacobian.
    """
    if not 0 <= i <= complex.dim:
        raise PreconditionError(f"critical group needs 0 <= i <= {complex.dim}")
    kern = [list(v) for v in integer_kernel_of_boundary(complex, i)]
    lap = laplacian(complex, i)
    gens = [list(col) for col in transpose(lap)]
    quotient = lattice_quotient(kern, gens)
    return CriticalGroupResult(i, quotient.group, quotient)
