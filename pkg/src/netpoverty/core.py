"""Domain types for dependence-aware multidimensional poverty measurement.

The central object is a d x d dependence structure whose entry (j, j')
states how strongly deprivation in dimension j' deepens the effective
deprivation in dimension j.  Entries live in [0, 1]; the diagonal is
fixed at 1, so off-diagonal entries read as effects relative to a
dimension's own effect.  Row j collects the effects other dimensions
have *on* j, column j' collects the effects j' exerts on the others.

The remaining types carry achievements, cutoffs, weights and the full
methodology configuration (gap exponent, poverty cutoff, structure,
weights, dimension cutoffs).

All types are frozen dataclasses validated once, on construction, with
their array payloads copied and marked read-only.  Instances are safe to
share across threads and workers.

Dimension indices in public call signatures are 1-based, j in {1, .., d}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import (
    CutoffOutOfRange,
    DiagonalNotOne,
    EntryOutOfRange,
    IndexOutOfRange,
    InvalidAlpha,
    NegativeAchievement,
    NonPositiveCutoff,
    NonPositiveWeight,
    NotSquare,
    ShapeMismatch,
    SumNotD,
    WeightTooLarge,
)

#: Relative tolerance for float comparisons against exact constants
#: (diagonal equals 1, weights sum to d).  Inputs are finite-precision,
#: the underlying model is exact.
REL_TOL = 1e-9

#: Structures are user-authored, so symmetry is expected to be exact up
#: to representation noise.
SYMMETRY_TOL = 1e-12


def _frozen_array(values: ArrayLike) -> NDArray[np.float64]:
    out = np.array(values, dtype=float, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class DependenceStructure:
    """Validated d x d matrix of interdimensional effects.

    ``symmetric`` is recorded at validation time (within
    ``SYMMETRY_TOL``); implied-weight derivation requires it.
    """

    entries: NDArray[np.float64]
    symmetric: bool = field(init=False)

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=float, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotSquare(f"dependence structure must be square, got shape {m.shape}")
        d = m.shape[0]
        if d < 2:
            # the neighbor average divides by d - 1
            raise NotSquare("at least 2 dimensions are required")
        if not np.all(np.isfinite(m)):
            raise EntryOutOfRange("dependence entries must be finite")
        bad = (m < 0.0) | (m > 1.0)
        if np.any(bad):
            j, jp = np.argwhere(bad)[0] + 1
            raise EntryOutOfRange(
                f"entry ({j}, {jp}) = {m[j - 1, jp - 1]} outside [0, 1]"
            )
        off = np.abs(np.diagonal(m) - 1.0)
        if np.any(off > REL_TOL):
            j = int(np.argmax(off)) + 1
            raise DiagonalNotOne(f"diagonal entry ({j}, {j}) = {m[j - 1, j - 1]} != 1")
        symmetric = bool(np.max(np.abs(m - m.T)) <= SYMMETRY_TOL)
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "symmetric", symmetric)

    @property
    def d(self) -> int:
        return self.entries.shape[0]

    def off_diagonal(self) -> NDArray[np.float64]:
        """Copy of the entries with the diagonal zeroed out."""
        out = np.array(self.entries, copy=True)
        np.fill_diagonal(out, 0.0)
        return out

    @classmethod
    def identity(cls, d: int) -> "DependenceStructure":
        """Disconnected structure: every dimension depends only on itself."""
        return cls(np.eye(d))

    @classmethod
    def complete(cls, d: int) -> "DependenceStructure":
        """Fully connected structure with all effects at maximum strength."""
        return cls(np.ones((d, d)))


@dataclass(frozen=True)
class AchievementMatrix:
    """N x d matrix of nonnegative achievements, one row per person."""

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        y = np.array(self.values, dtype=float, copy=True)
        if y.ndim != 2:
            raise ShapeMismatch(f"achievements must be a 2-D matrix, got ndim={y.ndim}")
        if y.shape[0] < 1 or y.shape[1] < 1:
            raise ShapeMismatch(f"achievements must be nonempty, got shape {y.shape}")
        if not np.all(np.isfinite(y)):
            raise NegativeAchievement("achievements must be finite")
        if np.any(y < 0.0):
            i, j = np.argwhere(y < 0.0)[0] + 1
            raise NegativeAchievement(
                f"achievement ({i}, {j}) = {y[i - 1, j - 1]} is negative",
                row=int(i),
                column=int(j),
            )
        y.flags.writeable = False
        object.__setattr__(self, "values", y)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class CutoffVector:
    """Per-dimension deprivation cutoffs, strictly positive."""

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        z = np.array(self.values, dtype=float, copy=True).reshape(-1)
        if z.size < 1:
            raise ShapeMismatch("cutoff vector is empty")
        if not np.all(np.isfinite(z)) or np.any(z <= 0.0):
            j = int(np.argmin(z)) + 1
            raise NonPositiveCutoff(f"cutoff {j} = {z[j - 1]} must be a positive real")
        z.flags.writeable = False
        object.__setattr__(self, "values", z)

    @property
    def d(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class WeightVector:
    """Dimension weights: positive, each below d, summing to d.

    The sum-to-d convention (rather than sum-to-1) keeps uniform weights
    at exactly 1, so the unweighted formulas are the uniform special
    case with no rescaling.
    """

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        w = np.array(self.values, dtype=float, copy=True).reshape(-1)
        d = w.shape[0]
        if d < 1:
            raise ShapeMismatch("weight vector is empty")
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            j = int(np.argmin(w)) + 1
            raise NonPositiveWeight(f"weight {j} = {w[j - 1]} must be a positive real")
        total = math.fsum(w)
        if abs(total - d) > REL_TOL * d:
            raise SumNotD(f"weights sum to {total}, expected {d}")
        if np.any(w >= d):
            j = int(np.argmax(w)) + 1
            raise WeightTooLarge(f"weight {j} = {w[j - 1]} must be below d = {d}")
        w.flags.writeable = False
        object.__setattr__(self, "values", w)

    @property
    def d(self) -> int:
        return self.values.shape[0]

    @classmethod
    def uniform(cls, d: int) -> "WeightVector":
        return cls(np.ones(d))


@dataclass(frozen=True)
class MethodologyConfig:
    """The full methodology: gap exponent, poverty cutoff, structure, weights, cutoffs.

    Validates 0 < k <= weighted score ceiling (the largest count the
    configured structure and weights can produce).
    """

    alpha: float
    k: float
    structure: DependenceStructure
    weights: WeightVector
    cutoffs: CutoffVector
    score_ceiling: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "structure", as_dependence_structure(self.structure))
        object.__setattr__(self, "cutoffs", as_cutoff_vector(self.cutoffs))
        object.__setattr__(
            self, "weights", as_weight_vector(self.weights, self.structure.d)
        )
        d = self.structure.d
        if self.cutoffs.d != d:
            raise ShapeMismatch(
                f"cutoffs have length {self.cutoffs.d}, structure has d = {d}"
            )
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha < 0.0:
            raise InvalidAlpha(f"alpha = {self.alpha} must be a finite real >= 0")
        object.__setattr__(self, "alpha", alpha)

        from .bounds import weighted_upper_bound  # deferred: bounds imports core

        ceiling = weighted_upper_bound(self.structure, self.weights)
        k = float(self.k)
        if not math.isfinite(k) or k <= 0.0 or k > ceiling * (1.0 + REL_TOL):
            raise CutoffOutOfRange(f"k = {self.k} outside (0, {ceiling}]")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "score_ceiling", ceiling)

    @property
    def d(self) -> int:
        return self.structure.d


# --- coercion helpers ---------------------------------------------------------


def as_dependence_structure(m) -> DependenceStructure:
    if isinstance(m, DependenceStructure):
        return m
    return DependenceStructure(np.asarray(m, dtype=float))


def as_achievement_matrix(y) -> AchievementMatrix:
    if isinstance(y, AchievementMatrix):
        return y
    return AchievementMatrix(np.asarray(y, dtype=float))


def as_cutoff_vector(z) -> CutoffVector:
    if isinstance(z, CutoffVector):
        return z
    return CutoffVector(np.asarray(z, dtype=float))


def as_weight_vector(w, d: int) -> WeightVector:
    """Coerce to a validated weight vector; None means uniform."""
    if w is None:
        return WeightVector.uniform(d)
    if not isinstance(w, WeightVector):
        w = validate_weights(w, d)
    if w.d != d:
        raise ShapeMismatch(f"weights have length {w.d}, expected {d}")
    return w


# --- operations ----------------------------------------------------------------


def validate_dependence_structure(raw) -> DependenceStructure:
    """Validate a raw square matrix as a dependence structure.

    Checks entries in [0, 1] and a unit diagonal; records whether the
    matrix is symmetric.
    """
    return as_dependence_structure(raw)


def validate_weights(raw, d: int) -> WeightVector:
    """Validate a raw length-d sequence as a weight vector."""
    w = np.asarray(raw, dtype=float).reshape(-1)
    if w.shape[0] != d:
        raise ShapeMismatch(f"weights have length {w.shape[0]}, expected {d}")
    return WeightVector(w)


def check_dimension_index(j: int, d: int) -> int:
    """Return the validated 1-based dimension index j."""
    j = int(j)
    if not 1 <= j <= d:
        raise IndexOutOfRange(f"dimension index {j} outside 1..{d}")
    return j


def connections_of(structure: DependenceStructure, j: int) -> set[int]:
    """Dimensions with a positive effect on j (1-based), including j itself."""
    structure = as_dependence_structure(structure)
    j = check_dimension_index(j, structure.d)
    row = structure.entries[j - 1]
    return {int(jp) + 1 for jp in np.flatnonzero(row > 0.0)}


def is_disconnected(structure: DependenceStructure) -> bool:
    """True when every dimension is connected only to itself."""
    structure = as_dependence_structure(structure)
    return bool(np.all(structure.off_diagonal() == 0.0))
