"""Jacobian groups and spanning-tree counts of Y-graphs Y(n;k,l,m)."""
from .asymptotics import MahlerReport, asymptotic_estimate, mahler_integral, mahler_roots
from .graph import (
    YGraphParams,
    edge_multiset,
    laplacian_from_edges,
    laplacian_full,
    reduced_matrix,
    validate_params,
)
from .jacobian import (
    AbelianGroup,
    circulant_tridiag_coker,
    cokernel_torsion,
    fib_lucas,
    groups_isomorphic,
    jacobian_of,
    jacobian_y111_closed,
    jacobian_y111_decomposed,
    normalize_cyclic_sum,
)
from .trees import (
    SpectralPolynomial,
    TreeCountReport,
    build_spectral,
    square_property,
    tree_count,
    tree_count_chebyshev,
    tree_count_kirchhoff,
    tree_count_resultant,
    tree_count_y111_closed,
)

__version__ = "0.1.0"
