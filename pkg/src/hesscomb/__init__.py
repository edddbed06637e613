"""Cell structure and Betti numbers of nilpotent and parabolic Hessenberg varieties.

The package computes, for a nilpotent matrix in highest form of a given
Jordan shape: which Schubert cells meet its Springer fiber and Hessenberg
varieties, the dimensions of the resulting affine cells, the Poincare
polynomials these dimensions assemble into, the Schubert points that tie
Springer cells to Schubert varieties, and exhaustive cross checks of all
of the above at desk scale.
"""

from .components import ComponentCandidate, component_candidates
from .harness import (
    CheckReport,
    CHECKS,
    Failure,
    census,
    rows_to_csv,
    rows_to_json,
    run_checks,
)
from .hessvar import (
    HessCell,
    HessenbergFunction,
    cell_dim,
    h_from_parabolic,
    hess_cells,
    hess_contains,
    is_parabolic_function,
    parabolic_cell_dim,
    parabolic_from_h,
    poincare_hessenberg,
    poincare_parabolic_formula,
    springer_min_reps,
)
from .nilpotent import (
    BaseFilling,
    Partition,
    Tableau,
    base_filling,
    dominance_ideal,
    dominance_ideal_from_filling,
    highest_form_roots,
    is_highest_form,
    partitions,
    row_inversions,
    springer_cell_dim,
    springer_contains,
    springer_tableau,
)
from .poly import Poly, t_factorial, t_integer
from .rootsys import (
    Root,
    RootSet,
    all_roots,
    hessenberg_roots,
    parabolic_roots,
    positive_roots,
    root_act,
    root_dominates,
    root_set,
)
from .schubert import (
    SchubertPoint,
    UnionComparison,
    bruhat_lower_ideal,
    compare_with_schubert_union,
    poincare_schubert_union,
    schubert_point,
    schubert_point_respects_cosets,
    schubert_union_tops,
    union_hypothesis,
)
from .symgroup import (
    ParabolicData,
    Permutation,
    StringDecomposition,
    bruhat_leq,
    coset_factor,
    enumerate_sn,
    identity,
    inversion_set,
    is_min_coset_rep,
    is_min_coset_rep_strings,
    longest_element,
    perm_from_word,
    poincare_subgroup,
    string_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "BaseFilling",
    "CHECKS",
    "CheckReport",
    "ComponentCandidate",
    "Failure",
    "HessCell",
    "HessenbergFunction",
    "ParabolicData",
    "Partition",
    "Permutation",
    "Poly",
    "Root",
    "RootSet",
    "SchubertPoint",
    "StringDecomposition",
    "Tableau",
    "UnionComparison",
    "all_roots",
    "base_filling",
    "bruhat_leq",
    "bruhat_lower_ideal",
    "cell_dim",
    "census",
    "compare_with_schubert_union",
    "component_candidates",
    "coset_factor",
    "dominance_ideal",
    "dominance_ideal_from_filling",
    "enumerate_sn",
    "h_from_parabolic",
    "hess_cells",
    "hess_contains",
    "hessenberg_roots",
    "highest_form_roots",
    "identity",
    "inversion_set",
    "is_highest_form",
    "is_min_coset_rep",
    "is_min_coset_rep_strings",
    "is_parabolic_function",
    "longest_element",
    "parabolic_cell_dim",
    "parabolic_from_h",
    "parabolic_roots",
    "partitions",
    "perm_from_word",
    "poincare_hessenberg",
    "poincare_parabolic_formula",
    "poincare_schubert_union",
    "poincare_subgroup",
    "positive_roots",
    "root_act",
    "root_dominates",
    "root_set",
    "row_inversions",
    "rows_to_csv",
    "rows_to_json",
    "run_checks",
    "schubert_point",
    "schubert_point_respects_cosets",
    "schubert_union_tops",
    "springer_cell_dim",
    "springer_contains",
    "springer_min_reps",
    "springer_tableau",
    "string_decompose",
    "t_factorial",
    "t_integer",
    "union_hypothesis",
    "__version__",
]
