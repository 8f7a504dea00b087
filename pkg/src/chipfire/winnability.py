"""Deciding the dollar game: linear equivalence, winnability with
certificates, whole degree classes, minimal winning degrees, and the
boundary-cone membership test.

A chain is winnable when its class modulo the Laplacian image contains an
effective chain.  The decision pipeline avoids the expensive search
whenever a cheap certificate exists:

1. already effective;
2. degree zero (checked against a kernel lattice basis, no Hilbert basis
   needed): winnable iff the chain is in the Laplacian image;
3. some degree coordinate negative: unwinnable;
4. otherwise: search the coset for an effective member.  The coset is
   parametrized by a Hermite basis of the Laplacian column lattice, and
   the search region is a polytope that is bounded because the only
   nonnegative chain of degree zero is the zero chain; boundedness is
   still asserted at runtime by exact LP rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import (
    IntChain,
    SimplicialComplex,
    boundary_matrix,
    laplacian,
)
from .cones import (
    DegreeVector,
    degree,
    degree_is_zero,
    hilbert_basis,
)
from .errors import EnumerationLimitError, PreconditionError
from .homology import critical_group
from .intlinalg import (
    column_lattice_basis,
    find_lattice_point_in_orthant,
    kernel_basis,
    mat_vec,
    minimize_l1_in_coset,
    solve_diophantine,
)

REASON_EFFECTIVE = "effective-found"
REASON_NEGATIVE_DEGREE = "negative-degree-coordinate"
REASON_SEARCH_EMPTY = "exhaustive-search-empty"
REASON_DEGREE_ZERO = "degree-zero-not-in-image"


@dataclass(frozen=True)
class WinVerdict:
    winnable: bool
    winning_chain: IntChain | None
    firing_vector: tuple[int, ...] | None
    reason: str


@dataclass(frozen=True)
class DegreeClassReport:
    realizable: bool
    all_winnable: bool
    class_reps: tuple[tuple[IntChain, WinVerdict], ...]


@dataclass(frozen=True)
class MinimalDegreeReport:
    dim: int
    minimal_degrees: tuple[DegreeVector, ...]
    search_bound: int
    complete: bool


def linearly_equivalent(
    complex: SimplicialComplex, i: int, sigma: IntChain, tau: IntChain
) -> tuple[int, ...] | None:
    """A firing vector v with tau = sigma + L v, or None.

    The returned v is canonical: minimal L1 norm over the solution coset,
    ties broken lexicographically.
    """
    _check_chain(complex, i, sigma)
    _check_chain(complex, i, tau)
    lap = laplacian(complex, i)
    res = solve_diophantine(lap, [t - s for s, t in zip(sigma.coeffs, tau.coeffs)])
    if not res.solvable:
        return None
    return minimize_l1_in_coset(res.x, res.kernel)


@lru_cache(maxsize=None)
def _laplacian_image_basis(complex: SimplicialComplex, i: int):
    """Hermite basis B of im L plus the transform W with B = L . W."""
    lap = laplacian(complex, i)
    B, W, r = column_lattice_basis(lap)
    return B, W, r


@lru_cache(maxsize=None)
def is_winnable(complex: SimplicialComplex, i: int, sigma: IntChain) -> WinVerdict:
    """Complete winnability decision with an exact certificate either way."""
    _check_chain(complex, i, sigma)
    if sigma.is_effective():
        return WinVerdict(True, sigma, (0,) * len(sigma), REASON_EFFECTIVE)
    lap = laplacian(complex, i)
    if degree_is_zero(complex, i, sigma):
        res = solve_diophantine(lap, [-c for c in sigma.coeffs])
        if res.solvable:
            zero = IntChain(i, (0,) * len(sigma))
            return WinVerdict(True, zero, tuple(res.x), REASON_EFFECTIVE)
        return WinVerdict(False, None, None, REASON_DEGREE_ZERO)
    deg = degree(complex, i, sigma)
    if any(v < 0 for v in deg):
        return WinVerdict(False, None, None, REASON_NEGATIVE_DEGREE)
    B, W, r = _laplacian_image_basis(complex, i)
    z = find_lattice_point_in_orthant(list(sigma.coeffs), B)
    if z is None:
        return WinVerdict(False, None, None, REASON_SEARCH_EMPTY)
    winning = [c + sum(B[row][j] * z[j] for j in range(r)) for row, c in enumerate(sigma.coeffs)]
    v = mat_vec(W, list(z)) if r else [0] * len(sigma)
    chain = IntChain(i, tuple(winning))
    assert chain.is_effective()
    return WinVerdict(True, chain, tuple(v), REASON_EFFECTIVE)


def _check_chain(complex, i, sigma):
    if sigma.dim != i or len(sigma) != complex.face_count(i):
        raise PreconditionError("chain does not match the complex/dimension")


def all_of_degree_winnable(
    complex: SimplicialComplex, i: int, delta: DegreeVector, *, class_limit=20000
) -> DegreeClassReport:
    """Decide winnability for every chain class of a given degree.

    Finds one chain of the degree (or reports it unrealizable), then
    enumerates the finitely many classes of that degree: they differ by
    the torsion classes of the critical group.
    """
    from .cones import realizable_degree

    sigma0 = realizable_degree(complex, i, delta, mode="any")
    if sigma0 is None:
        return DegreeClassReport(False, False, ())
    crit = critical_group(complex, i)
    if crit.group.torsion_order > class_limit:
        raise EnumerationLimitError(
            f"{crit.group.torsion_order} classes exceed the limit {class_limit}"
        )
    reps = []
    all_win = True
    for t in crit.torsion_representatives:
        chain = sigma0 + t
        verdict = is_winnable(complex, i, chain)
        all_win = all_win and verdict.winnable
        reps.append((chain, verdict))
    return DegreeClassReport(True, all_win, tuple(reps))


def _effective_chains_with_sum(n, total):
    """All length-n nonnegative integer tuples with given coefficient sum."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _effective_chains_with_sum(n - 1, total - first):
            yield (first,) + rest


def minimal_winning_degrees(
    complex: SimplicialComplex, i: int, bound: int, *, samples=25, seed=0
) -> MinimalDegreeReport:
    """Minimal degrees within a bounded search that guarantee winnability.

    Candidates are the degrees of effective chains with coefficient sum at
    most ``bound``.  A candidate qualifies when every class of that exact
    degree is winnable; with a 0-1 Hilbert basis that upgrades to "every
    chain of at least that degree is winnable", so the report is sound and
    its elements are genuinely minimal.  Without a 0-1 basis the upward
    property is only sampled inside the box and ``complete`` is False.
    """
    basis = hilbert_basis(complex, i)
    n = complex.face_count(i)
    zero_one = basis.is_zero_one()

    candidates = set()
    for total in range(0, bound + 1):
        for coeffs in _effective_chains_with_sum(n, total):
            candidates.add(degree(complex, i, IntChain(i, coeffs), basis))
    ordered = sorted(candidates, key=lambda d: (sum(d), d))

    minimals: list[DegreeVector] = []
    winners: set[DegreeVector] = set()
    for delta in ordered:
        if any(_leq(m, delta) for m in minimals):
            continue  # already implied winnable (0-1 case) or dominated
        report = all_of_degree_winnable(complex, i, delta)
        if report.realizable and report.all_winnable:
            minimals.append(delta)
            winners.add(delta)
    minimals = [
        m for m in minimals if not any(_leq(o, m) and o != m for o in minimals)
    ]

    complete = zero_one
    if not zero_one:
        import random

        rand = random.Random(seed)
        kern = kernel_basis(laplacian(complex, i))
        confirmed = []
        for delta in minimals:
            ok = True
            for _ in range(samples):
                coeffs = tuple(rand.randint(0, max(1, bound // 2)) for _ in range(n))
                probe = IntChain(i, coeffs)
                d = degree(complex, i, probe, basis)
                if _leq(delta, d) and not is_winnable(complex, i, probe).winnable:
                    ok = False
                    break
            if ok:
                confirmed.append(delta)
        minimals = confirmed
    return MinimalDegreeReport(i, tuple(minimals), bound, complete)


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_X(complex: SimplicialComplex, i: int, sigma: IntChain) -> bool:
    """Membership in the set of chains whose boundary is a nonnegative
    integer combination of boundary-map columns.

    For i = 0 the condition degenerates to the total sum being >= 0.  For
    i >= 1 it is an integer feasibility question over the kernel lattice
    of the boundary map; the region is bounded because no nonzero
    effective chain lies in that kernel under the standard orientation.
    """
    _check_chain(complex, i, sigma)
    if i == 0:
        return sum(sigma.coeffs) >= 0
    kern = kernel_basis(boundary_matrix(complex, i))
    B = [[v[r] for v in kern] for r in range(len(sigma))] if kern else []
    z = find_lattice_point_in_orthant(list(sigma.coeffs), B)
    return z is not None
