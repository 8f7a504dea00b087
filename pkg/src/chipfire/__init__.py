"""chipfire: an exact-arithmetic workbench for the dollar game on
simplicial complexes.

The public surface re-exports the main operations; see the README for the
command line and the line-delimited game protocol.
"""

from .complexes import (
    ComplexDocument,
    FaceRef,
    IntChain,
    SimplicialComplex,
    boundary_matrix,
    chain_from_coeffs,
    chain_from_pairs,
    complex_from_facets,
    complex_to_document,
    laplacian,
    parse_complex,
    unit_chain,
    zero_chain,
)
from .errors import (
    ChipfireError,
    EnumerationLimitError,
    InputError,
    NotOrientableError,
    NotPseudomanifoldError,
    PreconditionError,
    UnboundedSearchError,
)
from .intlinalg import (
    AbelianGroupStructure,
    DiophantineResult,
    SmithDecomposition,
    smith_normal_form,
    solve_diophantine,
    lattice_quotient,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
