"""Multidimensional poverty measurement with interdimensional dependence.

Deprivation gaps are coupled through a validated dependence structure,
poverty is identified with the dual-cutoff rule on the resulting counts,
and the aggregate FGT-family measure divides by the structure's count
ceiling so it cannot be inflated by declaring extra connections.  The
axioms module re-verifies the framework's properties on randomized
instances.
"""

__version__ = "0.1.0"

from .aggregation import (
    DecompositionResult,
    FgtResult,
    decompose_by_group,
    fgt_naive,
    fgt_network_adjusted,
)
from .axioms import (
    AXIOMS,
    AxiomReport,
    GeneratorSettings,
    apply_bistochastic_average,
    apply_rearrangement,
    apply_simple_increment,
    axiom_covered,
    run_axiom_suite,
)
from .bounds import (
    BoundsSummary,
    attainable_scores,
    bounds_summary,
    dimension_jump,
    dimension_jumps,
    lower_bound,
    upper_bound,
    weighted_upper_bound,
)
from .core import (
    AchievementMatrix,
    CutoffVector,
    DependenceStructure,
    MethodologyConfig,
    WeightVector,
    connections_of,
    is_disconnected,
    validate_dependence_structure,
    validate_weights,
)
from .dataio import (
    ConfigDocument,
    Dataset,
    build_report,
    load_config,
    load_config_document,
    load_dataset,
    recompute_fgt_value,
    resolve_methodology,
    run_report,
)
from .deprivation import (
    DeprivationCounts,
    DeprivationMatrix,
    GapMatrix,
    deprivation_counts,
    deprivation_matrix,
    deprivation_score,
    gap_matrix,
    gap_sensitivity,
    normalized_gap,
)
from .identification import PovertyStatusVector, headcount_ratio, identify
from .weights import (
    ImpliedWeights,
    SymmetricConsistencyReport,
    aggregation_coefficient,
    aggregation_coefficients,
    check_symmetric_consistency,
    fgt_via_coefficients,
    implied_weights,
)

__all__ = [
    "AXIOMS",
    "AchievementMatrix",
    "AxiomReport",
    "BoundsSummary",
    "ConfigDocument",
    "CutoffVector",
    "Dataset",
    "DecompositionResult",
    "DependenceStructure",
    "DeprivationCounts",
    "DeprivationMatrix",
    "FgtResult",
    "GapMatrix",
    "GeneratorSettings",
    "ImpliedWeights",
    "MethodologyConfig",
    "PovertyStatusVector",
    "SymmetricConsistencyReport",
    "WeightVector",
    "aggregation_coefficient",
    "aggregation_coefficients",
    "apply_bistochastic_average",
    "apply_rearrangement",
    "apply_simple_increment",
    "attainable_scores",
    "axiom_covered",
    "bounds_summary",
    "build_report",
    "check_symmetric_consistency",
    "connections_of",
    "decompose_by_group",
    "deprivation_counts",
    "deprivation_matrix",
    "deprivation_score",
    "dimension_jump",
    "dimension_jumps",
    "fgt_naive",
    "fgt_network_adjusted",
    "fgt_via_coefficients",
    "gap_matrix",
    "gap_sensitivity",
    "headcount_ratio",
    "identify",
    "implied_weights",
    "is_disconnected",
    "load_config",
    "load_config_document",
    "load_dataset",
    "lower_bound",
    "normalized_gap",
    "recompute_fgt_value",
    "resolve_methodology",
    "run_axiom_suite",
    "run_report",
    "upper_bound",
    "validate_dependence_structure",
    "validate_weights",
    "weighted_upper_bound",
]
