from .matrix import (
    IntMatrix,
    SmithForm,
    bareiss_determinant,
    divisibility_chain,
    smith_normal_form,
)
from .poly import (
    IntPoly,
    LaurentPoly,
    chebyshev_T,
    chebyshev_T_eval,
    lucas_like,
    poly_divmod,
    poly_exact_div,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    sylvester_matrix,
)
from .roots import aberth_roots, RootCluster

__all__ = [
    "IntMatrix",
    "SmithForm",
    "bareiss_determinant",
    "divisibility_chain",
    "smith_normal_form",
    "IntPoly",
    "LaurentPoly",
    "chebyshev_T",
    "chebyshev_T_eval",
    "lucas_like",
    "poly_divmod",
    "poly_exact_div",
    "poly_gcd",
    "resultant",
    "squarefree_decomposition",
    "sylvester_matrix",
    "aberth_roots",
    "RootCluster",
]
