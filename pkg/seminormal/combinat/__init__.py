"""Tableaux, the cactus group and cyclic sieving."""

from seminormal.combinat.tableau import (
    Shape,
    StandardTableau,
    TableauStatistics,
    axial_distance,
    bender_knuth,
    content_vector,
    enumerate_syt,
    hook_length_count,
    hook_lengths,
    iter_shapes,
    jdt_promotion,
    partitions,
    reverse_complement,
    statistics,
)
from seminormal.combinat.cactus import (
    CactusAction,
    CactusWord,
    Generator,
    Permutation,
    TableauAction,
    act_on_tableau,
    check_presentation,
    image_in_symmetric,
    promotion_order,
    to_t_word,
    verify_lemma_cyclic,
    verify_rect_order,
)
from seminormal.combinat.csp import (
    CspPolynomial,
    CspVerdict,
    RootComparison,
    b_statistic,
    character_check,
    compare_maj_and_hook,
    csp_check,
    fixed_point_counts,
    maj_generating_function,
    matrix_power_traces,
    promotion_images,
    promotion_orbits,
    q_hook_polynomial,
)

__all__ = [
    "Shape",
    "StandardTableau",
    "TableauStatistics",
    "axial_distance",
    "bender_knuth",
    "content_vector",
    "enumerate_syt",
    "hook_length_count",
    "hook_lengths",
    "iter_shapes",
    "jdt_promotion",
    "partitions",
    "reverse_complement",
    "statistics",
    "CactusAction",
    "CactusWord",
    "Generator",
    "Permutation",
    "TableauAction",
    "act_on_tableau",
    "check_presentation",
    "image_in_symmetric",
    "promotion_order",
    "to_t_word",
    "verify_lemma_cyclic",
    "verify_rect_order",
    "CspPolynomial",
    "CspVerdict",
    "RootComparison",
    "b_statistic",
    "character_check",
    "compare_maj_and_hook",
    "csp_check",
    "fixed_point_counts",
    "maj_generating_function",
    "matrix_power_traces",
    "promotion_images",
    "promotion_orbits",
    "q_hook_polynomial",
]
