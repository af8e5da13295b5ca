"""File formats: dataset ingestion, methodology configs, poverty reports.

Dataset (CSV, UTF-8, comma-delimited, '.' decimal separator, no
thousands separators): a required header row of dimension names followed
by one row per person.  A first column headed ``id`` (case-insensitive)
is treated as a person identifier; every other cell must parse as a
finite nonnegative real.  Missing cells are rejected, never imputed:
imputation would silently change poverty counts.

Config (JSON object):

    {
      "cutoffs":    [z1, ..., zd],          required, positive reals
      "alpha":      a >= 0,                 required
      "k":          1.5                      either a number (absolute)
                    | {"mode": "absolute", "value": 1.5}
                    | {"mode": "fraction", "value": f},   0 < f <= 1,
                                            resolved to f * ceiling
      "dependence": [[...], ...],           optional, default identity
      "weights":    [w1, ..., wd]           optional, default uniform
    }

Report (JSON object, fixed key order): fgt_value, headcount_ratio,
d_bar, d_under, d_tilde, deltas, optional naive_diagnostic, dimensions,
per_person (id, deprivation_count, poor, scores), config echo, and
software_version.  Computed numbers are rounded to 12 significant
digits (round half even) before emission so independent implementations
can be compared at the report level; the config echo keeps full
precision so it reloads to an identical methodology.  Same inputs give
byte-identical output.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

import numpy as np

from . import __version__
from .aggregation import fgt_naive, fgt_network_adjusted
from .bounds import bounds_summary, weighted_upper_bound
from .core import (
    AchievementMatrix,
    CutoffVector,
    DependenceStructure,
    MethodologyConfig,
    WeightVector,
    as_cutoff_vector,
    as_dependence_structure,
    validate_weights,
)
from .deprivation import deprivation_counts, deprivation_matrix
from .errors import (
    CutoffOutOfRange,
    EmptyDataset,
    MissingField,
    NegativeAchievement,
    ParseError,
    RaggedRow,
    ValidationError,
    WriteError,
)
from .identification import headcount_ratio, identify


@dataclass(frozen=True)
class Dataset:
    """Validated achievements plus the header metadata they came with."""

    achievements: AchievementMatrix
    dimension_names: tuple[str, ...]
    person_ids: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return self.achievements.n

    @property
    def d(self) -> int:
        return self.achievements.d

    def ids(self) -> tuple:
        if self.person_ids is not None:
            return self.person_ids
        return tuple(range(1, self.n + 1))


@dataclass(frozen=True)
class ConfigDocument:
    """Parsed config fields, core-validated, with k still unresolved."""

    cutoffs: CutoffVector
    structure: DependenceStructure
    weights: WeightVector
    alpha: float | None
    k_mode: str | None
    k_value: float | None


def load_dataset(path) -> Dataset:
    """Read and validate a dataset file.

    Row and column numbers in errors are 1-based and count data rows and
    achievement columns (the header and any id column excluded).
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise EmptyDataset(f"{path}: file is empty")
    header = [cell.strip() for cell in rows[0]]
    if not any(header):
        raise EmptyDataset(f"{path}: header row is empty")
    has_ids = header[0].lower() == "id"
    names = header[1:] if has_ids else header
    if not names:
        raise EmptyDataset(f"{path}: no achievement columns")

    ids: list[str] = []
    data: list[list[float]] = []
    for r, row in enumerate(rows[1:], start=1):
        if len(row) != len(header):
            raise RaggedRow(
                f"{path}: row {r} has {len(row)} fields, header has {len(header)}",
                row=r,
            )
        cells = row[1:] if has_ids else row
        if has_ids:
            ids.append(row[0].strip())
        parsed = []
        for c, cell in enumerate(cells, start=1):
            text = cell.strip()
            try:
                value = float(text)
            except ValueError:
                raise ParseError(
                    f"{path}: row {r}, column {c}: {text!r} is not a number",
                    row=r,
                    column=c,
                ) from None
            if not math.isfinite(value):
                raise ParseError(
                    f"{path}: row {r}, column {c}: {text!r} is not finite",
                    row=r,
                    column=c,
                )
            if value < 0.0:
                raise NegativeAchievement(
                    f"{path}: row {r}, column {c}: negative achievement {value}",
                    row=r,
                    column=c,
                )
            parsed.append(value)
        data.append(parsed)
    if not data:
        raise EmptyDataset(f"{path}: no data rows")
    return Dataset(
        achievements=AchievementMatrix(np.array(data)),
        dimension_names=tuple(names),
        person_ids=tuple(ids) if has_ids else None,
    )


def _require(doc: dict, key: str):
    if key not in doc:
        raise MissingField(f"config field {key!r} is required")
    return doc[key]


def load_config_document(path) -> ConfigDocument:
    """Parse a config file and run core validation on each piece."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{path}: invalid JSON: {exc.msg}", row=exc.lineno, column=exc.colno
            ) from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: config must be a JSON object")

    cutoffs = as_cutoff_vector(np.asarray(_require(doc, "cutoffs"), dtype=float))
    d = cutoffs.d
    if "dependence" in doc:
        structure = as_dependence_structure(np.asarray(doc["dependence"], dtype=float))
    else:
        structure = DependenceStructure.identity(d)
    if structure.d != d:
        raise ValidationError(
            f"{path}: dependence is {structure.d}x{structure.d}, cutoffs have d = {d}"
        )
    if "weights" in doc:
        weights = validate_weights(np.asarray(doc["weights"], dtype=float), d)
    else:
        weights = WeightVector.uniform(d)

    alpha = float(doc["alpha"]) if "alpha" in doc else None
    k_mode: str | None = None
    k_value: float | None = None
    if "k" in doc:
        k_field = doc["k"]
        if isinstance(k_field, dict):
            k_mode = k_field.get("mode")
            if k_mode not in ("absolute", "fraction"):
                raise ValidationError(f"{path}: unknown k mode {k_mode!r}")
            if "value" not in k_field:
                raise MissingField("config field k.value is required")
            k_value = float(k_field["value"])
        else:
            k_mode = "absolute"
            k_value = float(k_field)
    return ConfigDocument(
        cutoffs=cutoffs,
        structure=structure,
        weights=weights,
        alpha=alpha,
        k_mode=k_mode,
        k_value=k_value,
    )


def resolve_methodology(
    doc: ConfigDocument,
    alpha_override: float | None = None,
    k_override: float | None = None,
    k_fraction_override: float | None = None,
) -> MethodologyConfig:
    """Turn a config document into a full methodology, applying overrides."""
    alpha = alpha_override if alpha_override is not None else doc.alpha
    if alpha is None:
        raise MissingField("config field 'alpha' is required (or pass --alpha)")

    ceiling = weighted_upper_bound(doc.structure, doc.weights)
    if k_override is not None:
        k = float(k_override)
    elif k_fraction_override is not None:
        k = _fraction_k(float(k_fraction_override), ceiling)
    elif doc.k_mode == "absolute":
        k = float(doc.k_value)
    elif doc.k_mode == "fraction":
        k = _fraction_k(float(doc.k_value), ceiling)
    else:
        raise MissingField("config field 'k' is required (or pass --k / --k-fraction)")
    return MethodologyConfig(
        alpha=alpha,
        k=k,
        structure=doc.structure,
        weights=doc.weights,
        cutoffs=doc.cutoffs,
    )


def _fraction_k(fraction: float, ceiling: float) -> float:
    if not 0.0 < fraction <= 1.0:
        raise CutoffOutOfRange(f"k fraction {fraction} outside (0, 1]")
    return fraction * ceiling


def load_config(
    path,
    alpha_override: float | None = None,
    k_override: float | None = None,
    k_fraction_override: float | None = None,
) -> MethodologyConfig:
    """Load and resolve a config file in one step."""
    return resolve_methodology(
        load_config_document(path),
        alpha_override=alpha_override,
        k_override=k_override,
        k_fraction_override=k_fraction_override,
    )


def _round12(x: float) -> float:
    return float(f"{float(x):.12g}")


def config_echo(config: MethodologyConfig) -> dict:
    """Full-precision config section; reloads to an identical methodology."""
    return {
        "cutoffs": [float(z) for z in config.cutoffs.values],
        "alpha": float(config.alpha),
        "k": {"mode": "absolute", "value": float(config.k)},
        "dependence": [[float(v) for v in row] for row in config.structure.entries],
        "weights": [float(w) for w in config.weights.values],
    }


def build_report(
    dataset: Dataset, config: MethodologyConfig, diagnostic_naive: bool = False
) -> dict:
    """Assemble the report dict, keys in their documented order."""
    y = dataset.achievements
    if y.d != config.d:
        raise ValidationError(
            f"dataset has d = {y.d} dimensions, config has d = {config.d}"
        )
    result = fgt_network_adjusted(
        y, config.cutoffs, config.structure, config.weights, config.alpha, config.k
    )
    counts = deprivation_counts(y, config.cutoffs, config.structure, config.weights)
    statuses = identify(counts, config.k, upper=config.score_ceiling)
    scored = deprivation_matrix(
        y, config.cutoffs, config.structure, config.alpha, config.weights
    )
    summary = bounds_summary(config.structure, config.weights)

    report: dict = {
        "fgt_value": _round12(result.value),
        "headcount_ratio": _round12(headcount_ratio(statuses)),
        "d_bar": _round12(summary.upper),
        "d_under": _round12(summary.lower_nonzero),
        "d_tilde": _round12(summary.weighted_upper),
        "deltas": [_round12(v) for v in summary.jumps],
    }
    if diagnostic_naive:
        naive = fgt_naive(y, config.cutoffs, config.structure, config.alpha, config.k)
        report["naive_diagnostic"] = {
            "label": "naive (manipulable)",
            "value": _round12(naive.value),
            "denominator": _round12(naive.denominator),
        }
    report["dimensions"] = list(dataset.dimension_names)
    report["per_person"] = [
        {
            "id": pid,
            "deprivation_count": _round12(counts.values[i]),
            "poor": int(statuses.statuses[i]),
            "scores": [_round12(v) for v in scored.values[i]],
        }
        for i, pid in enumerate(dataset.ids())
    ]
    report["config"] = config_echo(config)
    report["software_version"] = __version__
    return report


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def run_report(
    dataset: Dataset,
    config: MethodologyConfig,
    out_path=None,
    diagnostic_naive: bool = False,
) -> dict:
    """Build the report and, when a path is given, write it to disk."""
    report = build_report(dataset, config, diagnostic_naive=diagnostic_naive)
    if out_path is not None:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(render_report(report))
        except OSError as exc:
            raise WriteError(f"could not write report to {out_path}: {exc}") from exc
    return report


def recompute_fgt_value(report: dict) -> float:
    """Rebuild the aggregate from per-person records and the config echo.

    Must reproduce ``fgt_value`` to 1e-12; used to confirm a report is
    internally consistent.
    """
    config = report["config"]
    structure = as_dependence_structure(np.asarray(config["dependence"], dtype=float))
    weights = validate_weights(np.asarray(config["weights"], dtype=float), structure.d)
    ceiling = weighted_upper_bound(structure, weights)
    persons = report["per_person"]
    total = math.fsum(
        math.fsum(rec["scores"]) for rec in persons if rec["poor"] == 1
    )
    return total / (len(persons) * ceiling)
