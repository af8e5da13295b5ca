"""Count bounds and choosing the poverty cutoff.

The attainable deprivation counts are not arbitrary reals: they are
subset sums of the per-dimension jumps.  Knowing the exact levels (and
the gaps between them) tells you which cutoffs k are actually distinct
and where the bounds sit for a given structure.
"""

import os
import sys

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
)

import numpy as np

import netpoverty as npv


def main() -> None:
    structure = npv.validate_dependence_structure(
        [
            [1.0, 0.2, 0.0],
            [0.6, 1.0, 0.1],
            [0.1, 0.5, 1.0],
        ]
    )
    summary = npv.bounds_summary(structure)
    print("upper bound (everyone deprived everywhere):", round(summary.upper, 6))
    print("lowest nonzero count (one deprived dim)   :", round(summary.lower_nonzero, 6))
    print("per-dimension jumps:", np.round(summary.jumps, 6))
    print("column totals      :", np.round(summary.column_totals, 6))

    levels = npv.attainable_scores(structure)
    print("\nattainable count levels:", np.round(levels, 6))
    print(
        "any k strictly between two adjacent levels identifies the same "
        "poor set as the upper level"
    )

    weights = npv.validate_weights([1.2, 1.2, 0.6], 3)
    print(
        "\nweighted ceiling with weights (1.2, 1.2, 0.6):",
        round(npv.weighted_upper_bound(structure, weights), 6),
    )
    print(
        "weighted attainable levels:",
        np.round(npv.attainable_scores(structure, weights), 6),
    )

    print("\nspecial cases:")
    print("  identity d=4  -> upper", npv.upper_bound(npv.DependenceStructure.identity(4)))
    print("  all-ones d=4  -> upper", npv.upper_bound(npv.DependenceStructure.complete(4)))


if __name__ == "__main__":
    main()
