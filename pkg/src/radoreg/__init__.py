"""Degree-of-regularity tools for single linear homogeneous equations.

Rado's condition, forbidden ratios, linkage matrices, finite coloring
search, and monochromatic solutions subject to extra linear inequalities.
"""

from radoreg.algebra import (
    Equation,
    at_family,
    check_solution,
    forbidden_ratio_solution,
    forbidden_ratios,
    is_multiple_of,
    normalize,
    parse_coeffs,
    rado_regular,
    zero_sum_subset,
)
from radoreg.coloring import (
    Coloring,
    Radius,
    Unknown,
    VerifyOutcome,
    enumerate_solutions,
    permute_colors,
    rado_radius,
    search_coloring,
    verify_coloring,
)
from radoreg.linkage import (
    LinkageMatrix,
    WalkResult,
    build_matrix,
    integrality_base,
    linkage_check,
    linkage_search,
    max_linkage,
    theorem3_walk,
)
from radoreg.strong import (
    InequalitySystem,
    ProductColoring,
    ProgressionFamily,
    apply_lambda,
    find_lambda,
    find_monochromatic_ap,
    lemma1_direct,
    lemma1_pipeline,
    product_coloring,
    progression_halflength,
    strong_solve,
)

__version__ = "0.1.0"
