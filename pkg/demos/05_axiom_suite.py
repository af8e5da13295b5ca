"""Randomized verification of the measure's axioms.

Runs the full suite at three gap exponents and prints one row per
axiom.  Monotonicity needs alpha > 0 and weak transfer needs
alpha >= 1; at exponents outside those ranges their rows read
"not_covered" rather than pass or fail.
"""

import os
import sys

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
)

import netpoverty as npv


def main() -> None:
    settings = npv.GeneratorSettings(trials=100, n_range=(2, 20), d_range=(2, 5), seed=11)
    for alpha in (0.0, 0.5, 1.0):
        print(f"\nalpha = {alpha}")
        print(f"  {'axiom':<26} {'status':<12} {'violations':>10}  worst margin")
        for report in npv.run_axiom_suite(alpha, settings):
            worst = "-" if report.worst_violation is None else f"{report.worst_violation:+.2e}"
            print(
                f"  {report.axiom:<26} {report.status:<12} "
                f"{report.violations:>10}  {worst}"
            )

    print("\npinned classic methodology (identity structure, uniform weights):")
    config = npv.MethodologyConfig(
        alpha=1.0,
        k=1.0,
        structure=npv.DependenceStructure.identity(3),
        weights=None,
        cutoffs=[10.0, 10.0, 10.0],
    )
    for report in npv.run_axiom_suite(config, settings):
        print(f"  {report.axiom:<26} {report.status}")


if __name__ == "__main__":
    main()
