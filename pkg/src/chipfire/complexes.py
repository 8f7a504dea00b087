"""Simplicial complexes, integer chains, boundary matrices and Laplacians.

Conventions, fixed once and used by every other module:

* Faces are tuples of strictly increasing integer vertex labels.  The empty
  tuple is the single face of dimension -1.
* Within each dimension, faces are ordered lexicographically, and every
  vector or matrix indexed by faces uses that order.
* The orientation is always the one induced by the natural order of the
  vertex labels.  Input facets are sorted; any orientation implied by the
  order the user wrote the vertices in is deliberately ignored.  This
  matters: relabeling vertices changes which games are winnable, so labels
  are never renumbered.
* The boundary map in dimension 0 is the augmentation (all-ones row), i.e.
  the chain complex is the reduced one.  Ordinary homology flips only this
  map to zero and is handled in the homology module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InputError, PreconditionError

Face = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex with lex-ordered faces per dimension.

    ``faces_by_dim[k]`` holds the faces of dimension ``k - 1``, so index 0
    is the empty face.  Instances are immutable and hashable, which lets
    expensive derived data (Laplacians, kernels, Hilbert bases) be cached
    per complex.
    """

    faces_by_dim: tuple[tuple[Face, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 2

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(f[0] for f in self.faces(0))

    @property
    def n(self) -> int:
        return self.face_count(0)

    def faces(self, i: int) -> tuple[Face, ...]:
        """The i-faces in lexicographic order; empty outside -1..dim."""
        if i < -1 or i > self.dim:
            return ()
        return self.faces_by_dim[i + 1]

    def face_count(self, i: int) -> int:
        return len(self.faces(i))

    def face_index(self, face: Face) -> int:
        i = len(face) - 1
        try:
            return _index_maps(self)[i + 1][face]
        except (IndexError, KeyError):
            raise PreconditionError(f"{face} is not a face of the complex") from None

    def has_face(self, face: Face) -> bool:
        i = len(face) - 1
        if i < -1 or i > self.dim:
            return False
        return face in _index_maps(self)[i + 1]

    @property
    def facets(self) -> tuple[Face, ...]:
        """Maximal faces, in lexicographic order."""
        out = []
        for i in range(self.dim, -1, -1):
            for f in self.faces(i):
                if not any(set(f) < set(g) for g in out):
                    out.append(f)
        return tuple(sorted(out))

    def skeleton(self, i: int) -> "SimplicialComplex":
        """The subcomplex of all faces of dimension <= i."""
        if i < 0:
            raise PreconditionError("skeleton dimension must be >= 0")
        top = min(i, self.dim)
        return SimplicialComplex(self.faces_by_dim[: top + 2])

    def is_subcomplex(self, other: "SimplicialComplex") -> bool:
        """True when every face of ``other`` is a face of self."""
        return all(
            self.has_face(f)
            for j in range(0, other.dim + 1)
            for f in other.faces(j)
        )

    def __repr__(self) -> str:  # keep test output readable
        return f"SimplicialComplex(facets={list(self.facets)})"


@lru_cache(maxsize=None)
def _index_maps(complex: SimplicialComplex):
    return tuple(
        {f: k for k, f in enumerate(faces)} for faces in complex.faces_by_dim
    )


@dataclass(frozen=True)
class FaceRef:
    """A face together with its dimension and lex position."""

    dim: int
    index: int
    vertices: Face


@dataclass(frozen=True)
class IntChain:
    """An integer vector indexed by the i-faces of some complex.

    Arithmetic is exact; coefficients are Python ints and may grow without
    bound.  The chain does not hold a reference to its complex: operations
    that need one take it as an argument and check the length.
    """

    dim: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "IntChain") -> "IntChain":
        self._check_mate(other)
        return IntChain(self.dim, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "IntChain") -> "IntChain":
        self._check_mate(other)
        return IntChain(self.dim, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, k: int) -> "IntChain":
        return IntChain(self.dim, tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def _check_mate(self, other: "IntChain"):
        if self.dim != other.dim or len(self.coeffs) != len(other.coeffs):
            raise PreconditionError("chain dimensions do not match")

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def support(self, complex: SimplicialComplex) -> tuple[Face, ...]:
        faces = complex.faces(self.dim)
        return tuple(f for f, c in zip(faces, self.coeffs) if c != 0)

    def __ge__(self, other: "IntChain") -> bool:
        self._check_mate(other)
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def __le__(self, other: "IntChain") -> bool:
        return other.__ge__(self)


def zero_chain(complex: SimplicialComplex, i: int) -> IntChain:
    return IntChain(i, (0,) * complex.face_count(i))


def unit_chain(complex: SimplicialComplex, face: Face) -> IntChain:
    i = len(face) - 1
    coeffs = [0] * complex.face_count(i)
    coeffs[complex.face_index(face)] = 1
    return IntChain(i, tuple(coeffs))


def chain_from_pairs(complex: SimplicialComplex, i: int, pairs) -> IntChain:
    """Build a chain from ``{face: coefficient}`` (dict or iterable of pairs)."""
    items = pairs.items() if hasattr(pairs, "items") else pairs
    coeffs = [0] * complex.face_count(i)
    for face, c in items:
        face = tuple(face)
        if len(face) - 1 != i:
            raise PreconditionError(f"{face} is not {i}-dimensional")
        coeffs[complex.face_index(face)] += int(c)
    return IntChain(i, tuple(coeffs))


def chain_from_coeffs(complex: SimplicialComplex, i: int, coeffs) -> IntChain:
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != complex.face_count(i):
        raise InputError(
            f"chain length {len(coeffs)} != f_{i} = {complex.face_count(i)}"
        )
    return IntChain(i, coeffs)


def _normalize_facet(raw) -> Face:
    try:
        verts = [int(v) for v in raw]
    except (TypeError, ValueError):
        raise InputError(f"facet {raw!r} is not a list of integers") from None
    if not verts:
        raise InputError("empty facet")
    for v in verts:
        if v <= 0:
            raise InputError(f"vertex label {v} is not positive")
    if len(set(verts)) != len(verts):
        raise InputError(f"facet {raw!r} repeats a vertex")
    return tuple(sorted(verts))


def complex_from_facets(facet_list) -> SimplicialComplex:
    """Downward closure of the given facets.

    Facets are sorted into the standard orientation; a facet contained in
    another is absorbed silently, but listing the same facet twice is an
    error (it usually indicates a typo in the input file).
    """
    facets = [_normalize_facet(f) for f in facet_list]
    if len(set(facets)) != len(facets):
        seen, dup = set(), None
        for f in facets:
            if f in seen:
                dup = f
                break
            seen.add(f)
        raise InputError(f"duplicate facet {list(dup)}")
    if not facets:
        raise InputError("a complex needs at least one facet")

    d = max(len(f) for f in facets) - 1
    by_dim: list[set[Face]] = [set() for _ in range(d + 2)]
    by_dim[0].add(())
    for f in facets:
        for k in range(1, len(f) + 1):
            for sub in combinations(f, k):
                by_dim[k].add(sub)
    return SimplicialComplex(tuple(tuple(sorted(s)) for s in by_dim))


@dataclass(frozen=True)
class ComplexDocument:
    """A parsed complex file: the complex plus optional chain and layout."""

    complex: SimplicialComplex
    chain: IntChain | None = None
    layout: dict[int, tuple[float, float]] | None = None


def parse_complex(document: dict) -> ComplexDocument:
    """Parse the JSON object form of a complex file.

    Expected shape::

        {"facets": [[1,2,3], [2,3,4]],
         "chain": {"dim": 1, "coeffs": [-1,2,-3,2,-1]},   # optional
         "layout": {"1": [0.0, -1.7], ...}}               # optional

    Chain coefficients may be JSON numbers or decimal strings (the latter
    for values beyond 53-bit float safety).
    """
    if not isinstance(document, dict) or "facets" not in document:
        raise InputError('complex document must be an object with a "facets" key')
    complex = complex_from_facets(document["facets"])

    chain = None
    if document.get("chain") is not None:
        spec = document["chain"]
        if not isinstance(spec, dict) or "dim" not in spec or "coeffs" not in spec:
            raise InputError('"chain" must be {"dim": i, "coeffs": [...]}')
        chain = chain_from_coeffs(complex, int(spec["dim"]), spec["coeffs"])

    layout = None
    if document.get("layout") is not None:
        layout = {}
        for key, xy in document["layout"].items():
            try:
                layout[int(key)] = (float(xy[0]), float(xy[1]))
            except (TypeError, ValueError, IndexError):
                raise InputError(f"bad layout entry {key!r}: {xy!r}") from None
    return ComplexDocument(complex, chain, layout)


def complex_to_document(
    complex: SimplicialComplex,
    chain: IntChain | None = None,
    layout: dict | None = None,
) -> dict:
    """Canonical JSON-ready form: facets lex-sorted, keys in fixed order."""
    doc: dict = {"facets": [list(f) for f in complex.facets]}
    if chain is not None:
        doc["chain"] = {"dim": chain.dim, "coeffs": list(chain.coeffs)}
    if layout is not None:
        doc["layout"] = {str(v): [xy[0], xy[1]] for v, xy in sorted(layout.items())}
    return doc


@lru_cache(maxsize=None)
def boundary_matrix(complex: SimplicialComplex, i: int) -> IntMatrix:
    """The matrix of the boundary map from i-chains to (i-1)-chains.

    Column for the face v0..vi has (-1)^j in the row of the face with vj
    omitted.  For i = 0 this is the all-ones augmentation row.  Out-of-range
    i yields a matrix with a zero dimension.
    """
    rows = complex.faces(i - 1)
    cols = complex.faces(i)
    row_index = {f: k for k, f in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            matrix[row_index[sub]][c] = -1 if j % 2 else 1
    return tuple(tuple(r) for r in matrix)


@lru_cache(maxsize=None)
def laplacian(complex: SimplicialComplex, i: int) -> IntMatrix:
    """The up-down combinatorial Laplacian in dimension i.

    This is the boundary matrix one dimension up composed with its own
    transpose; it is symmetric, positive semidefinite, and zero when the
    complex has no (i+1)-faces.
    """
    if not 0 <= i <= complex.dim:
        raise PreconditionError(f"laplacian needs 0 <= i <= {complex.dim}, got {i}")
    b = boundary_matrix(complex, i + 1)
    n = complex.face_count(i)
    out = [[0] * n for _ in range(n)]
    for col in range(complex.face_count(i + 1)):
        support = [(r, b[r][col]) for r in range(n) if b[r][col]]
        for r, x in support:
            row = out[r]
            for s, y in support:
                row[s] += x * y
    return tuple(tuple(r) for r in out)
