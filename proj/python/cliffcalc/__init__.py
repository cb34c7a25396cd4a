"""Complex Clifford algebra kernel.

Multivector arithmetic over Cl(p,q) with p+q <= 9, the standard conjugations,
the recurrent matrix representation, and closed-form trace / determinant /
inverse for n <= 5, every closed form cross-checkable against the matrix side.
"""

from ._core import (
    ExpressionError,
    Multivector,
    NotInvertible,
    UnsupportedDimension,
    __version__,
    add,
    approx_eq,
    build_generators,
    clifford_conjugation,
    complex_conjugate,
    det,
    det_parity_n4,
    det_via_matrix,
    evaluate,
    even_part,
    geometric_product,
    grade_flip,
    grade_involution,
    grade_project,
    hermitian,
    inverse,
    is_invertible,
    nabla,
    odd_part,
    plus_conj,
    pseudo_hermitian,
    random_multivector,
    represent,
    reverse,
    scale,
    trace,
    trace_via_matrix,
    triangle,
)

__all__ = [
    "ExpressionError",
    "Multivector",
    "NotInvertible",
    "UnsupportedDimension",
    "__version__",
    "add",
    "approx_eq",
    "build_generators",
    "clifford_conjugation",
    "complex_conjugate",
    "det",
    "det_parity_n4",
    "det_via_matrix",
    "evaluate",
    "even_part",
    "geometric_product",
    "grade_flip",
    "grade_involution",
    "grade_project",
    "hermitian",
    "inverse",
    "is_invertible",
    "nabla",
    "odd_part",
    "plus_conj",
    "pseudo_hermitian",
    "random_multivector",
    "represent",
    "reverse",
    "scale",
    "trace",
    "trace_via_matrix",
    "triangle",
]
