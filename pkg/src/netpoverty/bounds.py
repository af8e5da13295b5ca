"""Attainable ranges of the deprivation count.

The count a person can reach depends on the dependence structure: each
dimension that turns deprived raises the count by its jump, which grows
with the total effect that dimension exerts on the others (its column
sum).  Unweighted, the count tops out at

    upper = d + (total - d) / (d - 1)        total = sum of all entries

and its smallest nonzero value is driven by the weakest column.  With
weights the ceiling becomes the weight-scaled version of the same
expression.  Column sums are accumulated with exact rounding (fsum) so
the uniform-weight ceiling equals the unweighted one bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .core import (
    DependenceStructure,
    WeightVector,
    as_dependence_structure,
    as_weight_vector,
    check_dimension_index,
)
from .errors import DimensionTooLargeForEnumeration

#: hard cap for exact subset enumeration (2**d values)
ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class BoundsSummary:
    """All count bounds for one structure-and-weights choice.

    ``lower_nonzero`` is the unweighted minimum nonzero count; no
    weighted analogue is defined here, use the minimum nonzero element
    of :func:`attainable_scores` instead (a derived quantity).
    """

    upper: float
    lower_nonzero: float
    weighted_upper: float
    jumps: NDArray[np.float64]
    entry_total: float
    column_totals: NDArray[np.float64]

    def __post_init__(self) -> None:
        for name in ("jumps", "column_totals"):
            v = np.array(getattr(self, name), dtype=float, copy=True)
            v.flags.writeable = False
            object.__setattr__(self, name, v)


def _column_sums(structure: DependenceStructure) -> list[float]:
    m = structure.entries
    return [math.fsum(m[:, j]) for j in range(structure.d)]


def upper_bound(structure: DependenceStructure) -> float:
    """Largest attainable unweighted count (everyone deprived everywhere)."""
    structure = as_dependence_structure(structure)
    d = structure.d
    total = math.fsum(_column_sums(structure))
    return d + (total - d) / (d - 1)


def lower_bound(structure: DependenceStructure) -> float:
    """Smallest attainable nonzero unweighted count (one deprived dimension)."""
    structure = as_dependence_structure(structure)
    d = structure.d
    return 1.0 + (min(_column_sums(structure)) - 1.0) / (d - 1)


def dimension_jump(structure: DependenceStructure, j: int) -> float:
    """Increase in the unweighted count when dimension j (1-based) turns deprived."""
    structure = as_dependence_structure(structure)
    j = check_dimension_index(j, structure.d)
    return 1.0 + (_column_sums(structure)[j - 1] - 1.0) / (structure.d - 1)


def dimension_jumps(structure: DependenceStructure) -> NDArray[np.float64]:
    """All per-dimension jumps as an array."""
    structure = as_dependence_structure(structure)
    d = structure.d
    return np.array([1.0 + (c - 1.0) / (d - 1) for c in _column_sums(structure)])


def weighted_upper_bound(
    structure: DependenceStructure, weights: WeightVector | None = None
) -> float:
    """Count ceiling under weights; equals the sum of weighted jumps.

    Reduces to :func:`upper_bound` for uniform weights, exactly.
    """
    structure = as_dependence_structure(structure)
    d = structure.d
    w = as_weight_vector(weights, d)
    cols = _column_sums(structure)
    total = math.fsum(w.values[j] * cols[j] for j in range(d))
    return d + (total - d) / (d - 1)


def attainable_scores(
    structure: DependenceStructure, weights: WeightVector | None = None
) -> NDArray[np.float64]:
    """Sorted multiset of weighted-jump subset sums over deprivation patterns.

    With uniform weights these are exactly the counts a person can
    attain; the maximum element is the weighted ceiling either way.
    Duplicates are kept so degenerate count levels stay visible.
    Enumeration is exact and capped at ``ENUMERATION_LIMIT`` dimensions.
    """
    structure = as_dependence_structure(structure)
    d = structure.d
    if d > ENUMERATION_LIMIT:
        raise DimensionTooLargeForEnumeration(
            f"d = {d} exceeds the enumeration cap of {ENUMERATION_LIMIT}"
        )
    w = as_weight_vector(weights, d)
    step = w.values * dimension_jumps(structure)
    sums = np.zeros(1)
    for v in step:
        sums = np.concatenate([sums, sums + v])
    return np.sort(sums)


def bounds_summary(
    structure: DependenceStructure, weights: WeightVector | None = None
) -> BoundsSummary:
    """All bound quantities in one pass."""
    structure = as_dependence_structure(structure)
    cols = _column_sums(structure)
    return BoundsSummary(
        upper=upper_bound(structure),
        lower_nonzero=lower_bound(structure),
        weighted_upper=weighted_upper_bound(structure, weights),
        jumps=dimension_jumps(structure),
        entry_total=math.fsum(cols),
        column_totals=np.array(cols),
    )
