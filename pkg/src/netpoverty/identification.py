"""Dual-cutoff identification: poor means the deprivation count reaches k."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .core import REL_TOL
from .deprivation import DeprivationCounts
from .errors import CutoffOutOfRange


@dataclass(frozen=True)
class PovertyStatusVector:
    """Per-person 0/1 poverty statuses under cutoff k."""

    statuses: NDArray[np.int64]
    k: float

    def __post_init__(self) -> None:
        s = np.array(self.statuses, dtype=np.int64, copy=True).reshape(-1)
        s.flags.writeable = False
        object.__setattr__(self, "statuses", s)

    @property
    def n(self) -> int:
        return self.statuses.shape[0]

    @property
    def poor_count(self) -> int:
        return int(np.sum(self.statuses))


def identify(
    counts: DeprivationCounts, k: float, upper: float | None = None
) -> PovertyStatusVector:
    """Mark person i poor when count_i >= k (boundary counts as poor).

    k must be positive; when the count ceiling for the methodology is
    known, pass it as ``upper`` to reject k beyond it.  The comparison
    is an exact float comparison, counts and k are expected to come
    from identical computations on both sides of any before/after test.
    """
    if isinstance(counts, DeprivationCounts):
        values = counts.values
    else:
        values = np.asarray(counts, dtype=float).reshape(-1)
    k = float(k)
    if not math.isfinite(k) or k <= 0.0:
        raise CutoffOutOfRange(f"k = {k} must be a positive real")
    if upper is not None and k > float(upper) * (1.0 + REL_TOL):
        raise CutoffOutOfRange(f"k = {k} exceeds the attainable ceiling {upper}")
    return PovertyStatusVector(statuses=(values >= k).astype(np.int64), k=k)


def headcount_ratio(statuses: PovertyStatusVector) -> float:
    """Share of the population identified as poor."""
    if isinstance(statuses, PovertyStatusVector):
        return statuses.poor_count / statuses.n
    s = np.asarray(statuses)
    return float(np.sum(s != 0) / s.shape[0])
