"""Aggregation coefficients and weights implied by a dependence structure.

Rearranging the aggregate sum shows each dimension's plain gaps enter
with an effective coefficient

    coef[j] = w[j] + (1 / (d - 1)) * sum over j' != j of m[j', j] * w[j']

(column-indexed: what j exerts on the others comes back through the
neighbor averages).  The aggregate equals the coefficient-weighted gap
sum over the same denominator, which is the route used to prove the
transfer property and, more practically, a strong cross-check: both
routes must agree to 1e-12.

When the structure is symmetric, the coefficients sum to the weighted
count ceiling for every weight choice, so a symmetric structure with no
explicit weights behaves exactly like a classic weighted measure.  The
weights it implies are d * jump[j] / ceiling, which sum to d by
construction.  Asymmetric structures admit no such reading; deriving
implied weights from one is rejected rather than silently symmetrized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .aggregation import FgtResult, _censored_hash, _statuses_raw
from .bounds import dimension_jumps, upper_bound, weighted_upper_bound
from .core import (
    SYMMETRY_TOL,
    DependenceStructure,
    WeightVector,
    as_achievement_matrix,
    as_cutoff_vector,
    as_dependence_structure,
    as_weight_vector,
    check_dimension_index,
)
from .deprivation import _check_alpha, _gap_values
from .errors import NotSymmetric, ShapeMismatch

#: band for the symmetric-structure coefficient identity
CONSISTENCY_TOL = 1e-9


@dataclass(frozen=True)
class ImpliedWeights:
    """Weights induced by a symmetric dependence structure."""

    weights: WeightVector
    source: DependenceStructure
    upper: float


@dataclass(frozen=True)
class SymmetricConsistencyReport:
    """Coefficient sum versus weighted ceiling, and whether they agree."""

    coefficient_sum: float
    weighted_upper: float
    equal: bool


def aggregation_coefficients(
    structure: DependenceStructure, weights: WeightVector | None = None
) -> NDArray[np.float64]:
    """Effective per-dimension coefficients on plain gaps, as an array."""
    structure = as_dependence_structure(structure)
    d = structure.d
    w = as_weight_vector(weights, d)
    off = structure.off_diagonal()
    # column j of the off-diagonal entries, weighted by the source dimension
    return w.values + (off.T @ w.values) / (d - 1)


def aggregation_coefficient(
    structure: DependenceStructure, weights: WeightVector | None, j: int
) -> float:
    """Coefficient of dimension j (1-based); positive for all valid inputs."""
    structure = as_dependence_structure(structure)
    j = check_dimension_index(j, structure.d)
    return float(aggregation_coefficients(structure, weights)[j - 1])


def fgt_via_coefficients(
    achievements,
    cutoffs,
    structure: DependenceStructure,
    weights: WeightVector | None,
    alpha: float,
    k: float,
) -> FgtResult:
    """Aggregate through the coefficient-on-gaps rewriting.

    Must match :func:`netpoverty.aggregation.fgt_network_adjusted` to
    1e-12 on any valid input; the two compute the same quantity along
    algebraically equal but numerically independent routes.
    """
    alpha = _check_alpha(alpha)
    ym = as_achievement_matrix(achievements)
    zc = as_cutoff_vector(cutoffs)
    ms = as_dependence_structure(structure)
    if not (ym.d == zc.d == ms.d):
        raise ShapeMismatch(
            f"inconsistent dimensions: achievements {ym.d}, cutoffs {zc.d}, "
            f"structure {ms.d}"
        )
    wv = as_weight_vector(weights, ms.d)
    ceiling = weighted_upper_bound(ms, wv)
    statuses = _statuses_raw(
        ym.values, zc.values, ms.off_diagonal(), wv.values, k, ceiling
    )
    coef = aggregation_coefficients(ms, wv)
    gaps = _gap_values(ym.values, zc.values, alpha)
    censored = (gaps * coef) * statuses.statuses[:, None]
    value = math.fsum(np.sum(censored, axis=1)) / (ym.n * ceiling)
    return FgtResult(
        value=value,
        alpha=alpha,
        k=statuses.k,
        denominator=ym.n * ceiling,
        censored_matrix_hash=_censored_hash(censored),
        kind="network_adjusted_coefficient_form",
    )


def implied_weights(structure: DependenceStructure) -> ImpliedWeights:
    """Weights a symmetric structure implies: d * jump[j] / upper bound.

    The sum is d by construction.  Asymmetric input is rejected; the
    coefficient identity behind this reading fails there, and silently
    symmetrizing would hide a modeling error.
    """
    structure = as_dependence_structure(structure)
    if not structure.symmetric:
        m = structure.entries
        mismatch = np.abs(m - m.T) > SYMMETRY_TOL
        j, jp = (int(v) for v in np.argwhere(mismatch)[0])
        raise NotSymmetric(
            f"structure is asymmetric at ({j + 1}, {jp + 1}): "
            f"{m[j, jp]} vs {m[jp, j]}"
        )
    d = structure.d
    upper = upper_bound(structure)
    w = d * dimension_jumps(structure) / upper
    return ImpliedWeights(
        weights=WeightVector(w), source=structure, upper=upper
    )


def check_symmetric_consistency(
    structure: DependenceStructure, weights: WeightVector | None = None
) -> SymmetricConsistencyReport:
    """Compare the coefficient sum with the weighted ceiling.

    Symmetric structures must agree for every weight choice; asymmetric
    ones generally do not once weights are non-uniform.  Disagreement
    means the aggregate does not hit 1 on the fully deprived population,
    so this is the diagnostic to run before trusting the unit endpoint.
    """
    structure = as_dependence_structure(structure)
    w = as_weight_vector(weights, structure.d)
    coef_sum = math.fsum(aggregation_coefficients(structure, w))
    ceiling = weighted_upper_bound(structure, w)
    return SymmetricConsistencyReport(
        coefficient_sum=coef_sum,
        weighted_upper=ceiling,
        equal=abs(coef_sum - ceiling) <= CONSISTENCY_TOL,
    )
