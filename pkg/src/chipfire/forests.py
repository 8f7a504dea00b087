"""Spanning forests in each dimension, forest numbers, and reduced
Laplacians.

A spanning forest in dimension i is a subcomplex with the full (i-1)-
skeleton whose i-faces index a column basis of the boundary map; its
torsion in dimension i-1 enters the forest number with multiplicity two.
The reduced Laplacian over the complementary faces computes the critical
group whenever the forest has the same (i-1)-homology as the complex; the
theorem's hypothesis is reported, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import Face, SimplicialComplex, boundary_matrix, laplacian
from .errors import EnumerationLimitError, PreconditionError
from .homology import homology
from .intlinalg import (
    AbelianGroupStructure,
    rank,
    smith_normal_form,
)


@dataclass(frozen=True)
class ForestCertificate:
    dim: int
    face_subset: tuple[int, ...]  # indices into faces(dim), sorted
    checks: tuple[bool, bool, bool]
    torsion_order: int

    @property
    def is_spanning_forest(self) -> bool:
        return all(self.checks)


@dataclass(frozen=True)
class ReducedLaplacianResult:
    theta: tuple[Face, ...]
    matrix: tuple[tuple[int, ...], ...]
    hypothesis_ok: bool
    cokernel: AbelianGroupStructure


def _forest_subcomplex(complex, i, face_indices):
    faces = complex.faces(i)
    lower = complex.skeleton(i - 1) if i > 0 else None
    chosen = [faces[k] for k in face_indices]
    if i == 0:
        parts = [list(f) for f in chosen]
    else:
        parts = [list(f) for f in complex.skeleton(i - 1).facets] + [
            list(f) for f in chosen
        ]
    from .complexes import complex_from_facets

    # deduplicate facets absorbed into chosen faces
    maximal = []
    as_sets = [set(p) for p in parts]
    for k, p in enumerate(parts):
        if not any(set(p) < s for s in as_sets):
            maximal.append(p)
    seen = set()
    unique = []
    for p in maximal:
        t = tuple(sorted(p))
        if t not in seen:
            seen.add(t)
            unique.append(p)
    return complex_from_facets(unique)


def check_forest(complex: SimplicialComplex, i: int, face_indices) -> ForestCertificate:
    """Evaluate the three spanning-forest conditions for a face subset."""
    faces = complex.faces(i)
    face_indices = tuple(sorted(set(int(k) for k in face_indices)))
    if any(k < 0 or k >= len(faces) for k in face_indices):
        raise PreconditionError("face subset references unknown faces")
    upsilon = _forest_subcomplex(complex, i, face_indices)
    h_i = homology(upsilon, i) if upsilon.dim >= i else None
    cond1 = h_i.group.is_trivial() if h_i is not None else True
    cond2 = homology(upsilon, i - 1).group.free_rank == homology(complex, i - 1).group.free_rank
    skel = complex.skeleton(i)
    cond3 = len(face_indices) == complex.face_count(i) - homology(skel, i).group.free_rank
    torsion = homology(upsilon, i - 1).group.torsion_order
    return ForestCertificate(i, face_indices, (cond1, cond2, cond3), torsion)


def spanning_forests(
    complex: SimplicialComplex,
    i: int,
    mode: str = "all",
    subset=None,
    *,
    enumeration_limit: int = 2_000_000,
):
    """Spanning i-forests as certificates.

    ``first`` returns the greedy lex-first forest; ``all`` enumerates every
    column basis of the boundary map (refusing when the binomial bound
    exceeds ``enumeration_limit``); ``check`` validates a given subset.
    """
    if not 0 <= i <= complex.dim:
        raise PreconditionError(f"need 0 <= i <= {complex.dim}")
    if mode == "check":
        if subset is None:
            raise PreconditionError("check mode needs a subset")
        return [check_forest(complex, i, subset)]
    b = boundary_matrix(complex, i)
    n = complex.face_count(i)
    r = rank(b)
    if mode == "first":
        chosen: list[int] = []
        for c in range(n):
            trial = chosen + [c]
            sub = [[row[k] for k in trial] for row in b]
            if rank(sub) == len(trial):
                chosen.append(c)
            if len(chosen) == r:
                break
        return [check_forest(complex, i, chosen)]
    if mode != "all":
        raise PreconditionError(f"unknown mode {mode!r}")
    if comb(n, r) > enumeration_limit:
        raise EnumerationLimitError(
            f"C({n},{r}) column bases exceed the enumeration limit"
        )
    out = []

    def extend(chosen, start):
        if len(chosen) == r:
            out.append(check_forest(complex, i, chosen))
            return
        # not enough columns left to finish
        for c in range(start, n - (r - len(chosen)) + 1):
            trial = chosen + [c]
            sub = [[row[k] for k in trial] for row in b]
            if rank(sub) == len(trial):
                extend(trial, c + 1)

    extend([], 0)
    return out


def forest_number(complex: SimplicialComplex, i: int) -> int:
    """Sum of squared torsion orders over all spanning i-forests."""
    forests = spanning_forests(complex, i, "all")
    assert all(f.is_spanning_forest for f in forests)
    return sum(f.torsion_order**2 for f in forests)


def reduced_laplacian_group(
    complex: SimplicialComplex, i: int, forest_faces
) -> ReducedLaplacianResult:
    """Cokernel of the Laplacian restricted to the non-forest faces.

    ``forest_faces`` is a list of i-faces (vertex tuples) forming a
    spanning forest; anything else is rejected.  The isomorphism with the
    critical group requires the forest to carry the same (i-1)-homology as
    the complex; when that fails the (possibly different) cokernel is
    still reported, with ``hypothesis_ok`` false.
    """
    faces = complex.faces(i)
    index = {f: k for k, f in enumerate(faces)}
    try:
        chosen = tuple(sorted(index[tuple(sorted(f))] for f in forest_faces))
    except KeyError as exc:
        raise PreconditionError(f"unknown face {exc.args[0]}") from None
    cert = check_forest(complex, i, chosen)
    if not cert.is_spanning_forest:
        raise PreconditionError(
            f"subset is not a spanning forest (conditions {cert.checks})"
        )
    theta = tuple(f for k, f in enumerate(faces) if k not in set(chosen))
    keep = [k for k in range(len(faces)) if k not in set(chosen)]
    lap = laplacian(complex, i)
    reduced = tuple(tuple(lap[a][b] for b in keep) for a in keep)
    if reduced:
        snf = smith_normal_form([list(row) for row in reduced])
        torsion = tuple(d for d in snf.diagonal if d > 1)
        free = len(keep) - snf.rank
    else:
        torsion, free = (), 0
    cokernel = AbelianGroupStructure(free, torsion)
    upsilon = _forest_subcomplex(complex, i, chosen)
    hypothesis_ok = homology(upsilon, i - 1).group == homology(complex, i - 1).group
    return ReducedLaplacianResult(theta, reduced, hypothesis_ok, cokernel)
