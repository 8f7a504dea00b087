"""Pseudomanifold recognition, orientations, the facet incidence digraph,
and the codimension-one Hilbert basis from its simple directed cycles.

For an orientable pseudomanifold, signs can be chosen for the facets so
that the boundaries cancel along interior ridges; the signed facets become
the nodes of a directed graph whose edges are the ridges, and the 0-1
incidence vectors of its simple directed cycles are exactly the Hilbert
basis of the nonnegative Laplacian kernel one dimension down.  Boundary
ridges hook up to an extra node standing for the zero chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Face, IntChain, SimplicialComplex, boundary_matrix
from .cones import HilbertBasisSet
from .errors import NotOrientableError, NotPseudomanifoldError, PreconditionError
from .homology import homology
from .intlinalg import AbelianGroupStructure, mat_vec


@dataclass(frozen=True)
class PseudomanifoldInfo:
    is_pure: bool
    is_nonbranching: bool
    is_strongly_connected: bool
    boundary_faces: tuple[Face, ...]
    orientable: bool
    gamma: tuple[int, ...] | None
    predicted_crit: AbelianGroupStructure | None

    @property
    def is_pseudomanifold(self) -> bool:
        return self.is_pure and self.is_nonbranching and self.is_strongly_connected


@dataclass(frozen=True)
class IncidenceGraph:
    """Directed multigraph on oriented facets; one edge per ridge.

    Node 0..m-1 are the facets in lex order; node m (present only when the
    boundary is nonempty) is the zero-chain node.  Edges are (tail, head,
    ridge) triples in lex ridge order.
    """

    facet_labels: tuple[str, ...]
    has_star_node: bool
    edges: tuple[tuple[int, int, Face], ...]

    @property
    def node_count(self) -> int:
        return len(self.facet_labels) + (1 if self.has_star_node else 0)

    def node_label(self, k: int) -> str:
        if k < len(self.facet_labels):
            return self.facet_labels[k]
        return "*"


def _ridge_incidence(complex: SimplicialComplex):
    d = complex.dim
    facets = complex.faces(d)
    ridges = complex.faces(d - 1)
    b = boundary_matrix(complex, d)
    by_ridge = []
    for r in range(len(ridges)):
        cof = [(c, b[r][c]) for c in range(len(facets)) if b[r][c]]
        by_ridge.append(cof)
    return facets, ridges, by_ridge


def oriented_facet_label(face: Face, sign: int) -> str:
    """Name of a signed facet: negative signs swap the last two vertices."""
    verts = list(face)
    if sign < 0:
        verts[-1], verts[-2] = verts[-2], verts[-1]
    return "".join(str(v) for v in verts)


def analyze(complex: SimplicialComplex) -> PseudomanifoldInfo:
    """Pseudomanifold checks, orientation, and the predicted critical group.

    The orientation (when one exists) is found by propagating signs across
    ridge-adjacent facets; it is normalized so the lex-last facet carries
    +1.  ``predicted_crit`` is the codimension-one critical group implied
    by the structure theory: the reduced homology of the complex one
    dimension down, plus a cyclic factor of order = number of facets when
    the boundary is empty.
    """
    d = complex.dim
    facets, ridges, by_ridge = _ridge_incidence(complex)
    pure = all(len(f) == d + 1 for f in complex.facets)
    nonbranching = all(len(cof) <= 2 for cof in by_ridge)
    boundary = tuple(
        ridges[r] for r, cof in enumerate(by_ridge) if len(cof) == 1
    )

    # strong connectivity of the facet adjacency graph
    adjacency = {k: set() for k in range(len(facets))}
    for cof in by_ridge:
        if len(cof) == 2:
            (a, _), (b_, _) = cof
            adjacency[a].add(b_)
            adjacency[b_].add(a)
    seen = set()
    if facets:
        stack = [0]
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            stack.extend(adjacency[k] - seen)
    strongly_connected = len(seen) == len(facets)

    if not (pure and nonbranching and strongly_connected):
        return PseudomanifoldInfo(
            pure, nonbranching, strongly_connected, boundary, False, None, None
        )

    # orientation by sign propagation: interior ridge forces opposite
    # signed incidences on its two facets
    signs = [0] * len(facets)
    signs[0] = 1
    stack = [0]
    consistent = True
    constraints = {k: [] for k in range(len(facets))}
    for cof in by_ridge:
        if len(cof) == 2:
            (a, ea), (b_, eb) = cof
            constraints[a].append((b_, -ea * eb))
            constraints[b_].append((a, -ea * eb))
    while stack and consistent:
        k = stack.pop()
        for other, rel in constraints[k]:
            expected = signs[k] * rel
            if signs[other] == 0:
                signs[other] = expected
                stack.append(other)
            elif signs[other] != expected:
                consistent = False
                break
    if not consistent:
        return PseudomanifoldInfo(
            pure, nonbranching, strongly_connected, boundary, False, None, None
        )
    if signs[-1] < 0:
        signs = [-s for s in signs]
    gamma = tuple(signs)

    down = homology(complex, d - 1).group
    if boundary:
        predicted = down
    else:
        m = len(facets)
        factors = _merge_cyclic(m, down)
        predicted = factors
    return PseudomanifoldInfo(
        pure, nonbranching, strongly_connected, boundary, True, gamma, predicted
    )


def _merge_cyclic(m: int, group: AbelianGroupStructure) -> AbelianGroupStructure:
    """Invariant factors of (Z/m) + the given group."""
    factors = list(group.torsion) + ([m] if m > 1 else [])
    # renormalize into a divisor chain
    primes = {}
    for f in factors:
        n = f
        p = 2
        while p * p <= n:
            while n % p == 0:
                primes.setdefault(p, []).append(p)
                n //= p
            p += 1
        if n > 1:
            primes.setdefault(n, []).append(n)
    # rebuild: collect prime powers per factor slot
    slots: dict[int, dict[int, int]] = {}
    for f in factors:
        n = f
        powers = {}
        p = 2
        while p * p <= n:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                powers[p] = e
            p += 1
        if n > 1:
            powers[n] = powers.get(n, 0) + 1
        for p, e in powers.items():
            slots.setdefault(p, {})
            bucket = slots[p]
            bucket[len(bucket)] = e
    # for each prime, sort exponents descending; position k contributes to
    # the k-th factor from the top
    per_prime = {p: sorted(d.values(), reverse=True) for p, d in slots.items()}
    depth = max((len(v) for v in per_prime.values()), default=0)
    chain = []
    for k in range(depth):
        val = 1
        for p, exps in per_prime.items():
            if k < len(exps):
                val *= p ** exps[k]
        chain.append(val)
    chain = [c for c in sorted(chain) if c > 1]
    return AbelianGroupStructure(group.free_rank, tuple(chain))


def incidence_graph(
    complex: SimplicialComplex, gamma: tuple[int, ...]
) -> IncidenceGraph:
    """The facet incidence digraph for the given orientation signs."""
    d = complex.dim
    facets, ridges, by_ridge = _ridge_incidence(complex)
    if len(gamma) != len(facets) or any(s not in (-1, 1) for s in gamma):
        raise PreconditionError("orientation must assign +-1 to every facet")
    b = boundary_matrix(complex, d)
    bd = mat_vec(b, list(gamma))
    boundary_rows = {r for r, cof in enumerate(by_ridge) if len(cof) == 1}
    for r, v in enumerate(bd):
        if v and r not in boundary_rows:
            raise PreconditionError(
                "invalid orientation: boundary of gamma not supported on the boundary"
            )
    m = len(facets)
    has_star = bool(boundary_rows)
    star = m
    edges = []
    for r, ridge in enumerate(ridges):
        cof = by_ridge[r]
        if len(cof) == 2:
            (a, ea), (b2, eb) = cof
            sa, sb = ea * gamma[a], eb * gamma[b2]
            # transposed boundary sends the ridge to s_b.gamma_b + s_a.gamma_a
            # with s_a = -s_b; edge runs from the minus facet to the plus one
            if sa == 1:
                edges.append((b2, a, ridge))
            else:
                edges.append((a, b2, ridge))
        elif len(cof) == 1:
            (a, ea) = cof[0]
            if ea * gamma[a] == 1:
                edges.append((star, a, ridge))
            else:
                edges.append((a, star, ridge))
        else:  # pragma: no cover - excluded by the pseudomanifold check
            raise NotPseudomanifoldError("branching ridge")
    labels = tuple(
        oriented_facet_label(f, s) for f, s in zip(facets, gamma)
    )
    return IncidenceGraph(labels, has_star, tuple(edges))


def _simple_directed_cycles(node_count, edges):
    """Edge index sets of the simple directed cycles of a multigraph.

    Cycles visit each node at most once.  Enumeration: from each start
    node (ascending), walk only through higher-numbered nodes (plus the
    start), which yields each cycle exactly once.  Output is sorted by
    (length, edge index sequence).
    """
    outgoing = {}
    for idx, (tail, head, _) in enumerate(edges):
        outgoing.setdefault(tail, []).append((idx, head))
    for lst in outgoing.values():
        lst.sort()
    cycles = []

    def walk(start, node, path, visited):
        for idx, head in outgoing.get(node, ()):
            if head == start:
                cycles.append(tuple(path + [idx]))
            elif head > start and head not in visited:
                visited.add(head)
                walk(start, head, path + [idx], visited)
                visited.remove(head)

    for start in range(node_count):
        walk(start, start, [], {start})
    # canonical: rotate each cycle so its smallest edge index is first,
    # then sort by (length, sequence) and drop duplicates
    canon = set()
    ordered = []
    for cyc in cycles:
        k = cyc.index(min(cyc))
        rot = cyc[k:] + cyc[:k]
        if rot not in canon:
            canon.add(rot)
            ordered.append(rot)
    ordered.sort(key=lambda c: (len(c), c))
    return ordered


def cycle_hilbert_basis(complex: SimplicialComplex) -> HilbertBasisSet:
    """Codimension-one Hilbert basis from simple cycles of the incidence
    digraph.  Must agree with the general algorithm on every orientable
    pseudomanifold; refuses anything else."""
    info = analyze(complex)
    if not info.is_pseudomanifold:
        raise NotPseudomanifoldError("complex is not a pseudomanifold")
    if not info.orientable:
        raise NotOrientableError("pseudomanifold is not orientable")
    graph = incidence_graph(complex, info.gamma)
    d = complex.dim
    ridges = complex.faces(d - 1)
    ridge_index = {f: k for k, f in enumerate(ridges)}
    vectors = []
    for cyc in _simple_directed_cycles(graph.node_count, graph.edges):
        coeffs = [0] * len(ridges)
        for e in cyc:
            coeffs[ridge_index[graph.edges[e][2]]] = 1
        vectors.append(tuple(coeffs))
    vectors.sort(key=lambda v: (sum(v), v))
    return HilbertBasisSet(d - 1, tuple(IntChain(d - 1, v) for v in vectors))
