"""The corrected aggregate measure, and why the naive one is manipulable.

A two-person worked instance first: one person halfway deprived in the
first dimension, one at the cutoffs.  Then a sweep that adds a
connection step by step.  The naive aggregate (denominator N * d) rises
with every added connection even though nobody's achievements changed;
the corrected aggregate divides by the attainable ceiling and stays put
in [0, 1].
"""

import os
import sys

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
)

import numpy as np

import netpoverty as npv


def main() -> None:
    structure = npv.validate_dependence_structure([[1.0, 0.5], [0.0, 1.0]])
    cutoffs = [10.0, 10.0]
    achievements = [[5.0, 10.0], [10.0, 10.0]]

    result = npv.fgt_network_adjusted(achievements, cutoffs, structure, None, 1.0, 1.0)
    counts = npv.deprivation_counts(achievements, cutoffs, structure)
    statuses = npv.identify(counts, 1.0, upper=npv.weighted_upper_bound(structure))
    print("worked instance:")
    print("  counts      :", counts.values)
    print("  headcount   :", npv.headcount_ratio(statuses))
    print("  fgt value   :", result.value)
    print("  denominator :", result.denominator)

    config = npv.MethodologyConfig(
        alpha=1.0, k=1.0, structure=structure, weights=None, cutoffs=cutoffs
    )
    split = npv.decompose_by_group(achievements, ["north", "south"], config)
    print("\nsubgroup decomposition:")
    for label, res in split.group_results.items():
        print(f"  {label}: value {res.value} (n = {split.group_sizes[label]})")
    print("  recombination error:", split.recombination_error)

    print("\nconnection sweep (achievements fixed, one entry grows):")
    y = [[2.0, 4.0, 12.0], [11.0, 12.0, 13.0]]
    z = [10.0, 10.0, 10.0]
    print(f"  {'entry':>6} {'naive':>10} {'adjusted':>10}")
    for step in range(0, 11, 2):
        entry = step / 10
        m = np.eye(3)
        m[1, 0] = entry
        swept = npv.validate_dependence_structure(m)
        naive = npv.fgt_naive(y, z, swept, 1.0, 1.0)
        adjusted = npv.fgt_network_adjusted(y, z, swept, None, 1.0, 1.0)
        print(f"  {entry:>6.1f} {naive.value:>10.6f} {adjusted.value:>10.6f}")
    print("  naive climbs with the entry; the corrected value barely moves")


if __name__ == "__main__":
    main()
