"""Bundled example complexes.

These are the regression workhorses used throughout the test suite and
exposed as the example gallery of the CLI and playground.  Facet lists are
the single source of truth; the JSON files in ``data/`` are generated from
them and a test pins the two representations together.
"""

from __future__ import annotations

import json
from importlib import resources

from .complexes import (
    ComplexDocument,
    SimplicialComplex,
    chain_from_coeffs,
    complex_from_facets,
    complex_to_document,
    parse_complex,
)

FACETS: dict[str, list[list[int]]] = {
    # 2-simplex: single triangle 123
    "simplex2": [[1, 2, 3]],
    # 3-simplex: single tetrahedron 1234
    "simplex3": [[1, 2, 3, 4]],
    # full simplex on six vertices (only its 3-skeleton matters for crit_2)
    "simplex5": [[1, 2, 3, 4, 5, 6]],
    # two triangles glued along edge 23
    "diamond": [[1, 2, 3], [2, 3, 4]],
    # boundary of the tetrahedron (closed orientable surface)
    "tetrahedron": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
    # two disjoint triangle graphs
    "two_triangles": [[1, 2], [1, 3], [2, 3], [4, 5], [4, 6], [5, 6]],
    # triangle graph
    "triangle": [[1, 2], [1, 3], [2, 3]],
    # path graph on three vertices (a tree)
    "path3": [[1, 2], [2, 3]],
    # triangulated annulus, outer triangle 123, inner triangle 456
    "annulus": [[1, 2, 5], [1, 4, 3], [1, 5, 4], [2, 3, 6], [2, 6, 5], [3, 4, 6]],
    # Klein bottle triangulation on 8 vertices
    "klein": [
        [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5],
        [2, 3, 6], [2, 3, 7], [2, 4, 7], [2, 5, 6],
        [3, 4, 6], [3, 5, 8], [3, 7, 8], [4, 5, 7],
        [4, 5, 8], [4, 6, 8], [5, 6, 7], [6, 7, 8],
    ],
    # 6-vertex triangulation of the real projective plane
    "projective_plane": [
        [1, 2, 3], [1, 2, 6], [1, 3, 4], [1, 4, 5], [1, 5, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
    ],
    # two triangles sharing edge 12 plus the free edge 34
    "staco": [[1, 2, 3], [1, 2, 4], [3, 4]],
    # 3-dimensional forest with 17 facets; 2-chains on it behave unlike graphs
    "seventeen": [
        [1, 2, 3, 4], [1, 2, 3, 6], [1, 2, 3, 7], [1, 2, 4, 6], [1, 2, 5, 7],
        [1, 3, 4, 7], [1, 3, 5, 7], [1, 4, 5, 6], [1, 4, 5, 7], [1, 4, 6, 7],
        [2, 3, 4, 7], [2, 3, 5, 6], [2, 3, 5, 7], [2, 4, 5, 6], [3, 4, 5, 7],
        [3, 5, 6, 7], [4, 5, 6, 7],
    ],
}

# starting chains for the playable examples: (dim, coefficients in lex face order)
CHAINS: dict[str, tuple[int, list[int]]] = {
    "diamond": (1, [-1, 2, -3, 2, -1]),
    "simplex2": (1, [-1, 1, -1]),
    "simplex2_unwinnable": (1, [1, -1, -1]),
    "tetrahedron": (1, [1, -1, 1, 0, 0, 0]),
    "staco": (1, [0, 0, 0, 1, -1, 1]),
    "projective_plane": (1, None),  # filled in below: 12 + 23 - 13
}

LAYOUTS: dict[str, dict[int, tuple[float, float]]] = {
    "diamond": {1: (0.0, -1.8), 2: (-1.0, 0.0), 3: (1.0, 0.0), 4: (0.0, 1.8)},
    "simplex2": {1: (0.0, 0.0), 2: (-1.0, 1.8), 3: (1.0, 1.8)},
    "staco": {1: (0.0, -1.0), 2: (0.0, 0.6), 3: (-1.6, 1.4), 4: (1.6, 1.4)},
    "triangle": {1: (0.0, -1.0), 2: (-1.0, 0.8), 3: (1.0, 0.8)},
    "path3": {1: (-1.5, 0.0), 2: (0.0, 0.0), 3: (1.5, 0.0)},
    "two_triangles": {
        1: (-2.4, -0.8), 2: (-1.2, -0.8), 3: (-1.8, 0.6),
        4: (1.2, -0.8), 5: (2.4, -0.8), 6: (1.8, 0.6),
    },
    "annulus": {
        1: (2.6, -1.6), 2: (0.0, 3.0), 3: (-2.6, -1.6),
        4: (0.0, -1.1), 5: (1.0, 0.6), 6: (-1.0, 0.6),
    },
}


def names() -> list[str]:
    return sorted(FACETS)


def complex_named(name: str) -> SimplicialComplex:
    return complex_from_facets(FACETS[name])


def document_named(name: str) -> ComplexDocument:
    complex = complex_named(name)
    chain = None
    if name in CHAINS:
        dim, coeffs = CHAINS[name]
        if coeffs is not None:
            chain = chain_from_coeffs(complex, dim, coeffs)
    return ComplexDocument(complex, chain, LAYOUTS.get(name))


def document_as_json(name: str) -> dict:
    doc = document_named(name)
    return complex_to_document(doc.complex, doc.chain, doc.layout)


def load_data_file(name: str) -> ComplexDocument:
    """Parse the shipped data/<name>.json (exercises the file format)."""
    text = resources.files("chipfire").joinpath(f"data/{name}.json").read_text()
    return parse_complex(json.loads(text))


def _pp_sigma():
    """The cycle 12 + 23 - 13 on the projective plane."""
    complex = complex_named("projective_plane")
    coeffs = [0] * complex.face_count(1)
    coeffs[complex.face_index((1, 2))] = 1
    coeffs[complex.face_index((2, 3))] = 1
    coeffs[complex.face_index((1, 3))] = -1
    return coeffs


CHAINS["projective_plane"] = (1, _pp_sigma())
