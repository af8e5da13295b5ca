import json

import pytest

from netpoverty.cli import main

WORKED_CONFIG = {
    "cutoffs": [10.0, 10.0],
    "alpha": 1.0,
    "k": 1.0,
    "dependence": [[1.0, 0.5], [0.0, 1.0]],
}


@pytest.fixture
def worked(tmp_path):
    data = tmp_path / "data.csv"
    data.write_text("health,education\n5,10\n10,10\n", encoding="utf-8")
    config = tmp_path / "config.json"
    config.write_text(json.dumps(WORKED_CONFIG), encoding="utf-8")
    return data, config


class TestCompute:
    def test_report_to_stdout(self, worked, capsys):
        data, config = worked
        code = main(["compute", "--dataset", str(data), "--config", str(config)])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["fgt_value"] == 0.1
        assert report["headcount_ratio"] == 0.5

    def test_report_to_file(self, worked, tmp_path):
        data, config = worked
        out = tmp_path / "report.json"
        code = main(
            ["compute", "--dataset", str(data), "--config", str(config), "--out", str(out)]
        )
        assert code == 0
        assert json.loads(out.read_text())["fgt_value"] == 0.1

    def test_diagnostic_naive_flag(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config), "--diagnostic-naive"])
        report = json.loads(capsys.readouterr().out)
        assert report["naive_diagnostic"]["label"] == "naive (manipulable)"

    def test_alpha_and_k_overrides(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config), "--alpha", "0", "--k", "1"])
        report = json.loads(capsys.readouterr().out)
        assert report["config"]["alpha"] == 0.0

    def test_k_fraction_override(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config), "--k-fraction", "1.0"])
        report = json.loads(capsys.readouterr().out)
        assert report["config"]["k"]["value"] == 2.5

    def test_gap_warning_on_stderr(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config), "--k", "0.7"])
        err = capsys.readouterr().err
        assert "lies strictly between attainable counts" in err

    def test_no_warning_when_k_on_attainable_level(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config)])
        assert capsys.readouterr().err == ""

    def test_no_warning_at_full_fraction(self, worked, capsys):
        data, config = worked
        main(["compute", "--dataset", str(data), "--config", str(config), "--k-fraction", "1.0"])
        assert capsys.readouterr().err == ""

    def test_missing_dataset_exits_3(self, worked, capsys):
        _, config = worked
        assert main(["compute", "--dataset", "/nope.csv", "--config", str(config)]) == 3

    def test_invalid_config_exits_1(self, worked, tmp_path, capsys):
        data, _ = worked
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(dict(WORKED_CONFIG, k=9.0)), encoding="utf-8")
        assert main(["compute", "--dataset", str(data), "--config", str(bad)]) == 1


class TestBounds:
    def test_bounds_payload(self, worked, capsys):
        _, config = worked
        assert main(["bounds", "--config", str(config)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["d_bar"] == 2.5
        assert payload["d_under"] == 1.0
        assert payload["d_tilde"] == 2.5
        assert payload["deltas"] == [1.0, 1.5]
        assert payload["sigma"] == 2.5
        assert payload["sigma_cols"] == [1.0, 1.5]
        assert payload["attainable_scores"] == [0.0, 1.0, 1.5, 2.5]


class TestImpliedWeights:
    def test_symmetric_structure(self, tmp_path, capsys):
        config = tmp_path / "c.json"
        config.write_text(
            json.dumps(
                {
                    "cutoffs": [10, 10, 10],
                    "alpha": 1,
                    "dependence": [[1, 0.5, 0.5], [0.5, 1, 0], [0.5, 0, 1]],
                }
            ),
            encoding="utf-8",
        )
        assert main(["implied-weights", "--config", str(config)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["weights"] == [1.125, 0.9375, 0.9375]
        assert payload["d_bar"] == 4.0

    def test_asymmetric_structure_exits_1(self, worked, capsys):
        _, config = worked
        assert main(["implied-weights", "--config", str(config)]) == 1
        assert "asymmetric at" in capsys.readouterr().err


class TestAxioms:
    def test_clean_run_exits_0(self, worked, capsys):
        _, config = worked
        code = main(
            ["axioms", "--config", str(config), "--trials", "5", "--seed", "3"]
        )
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        records = [json.loads(line) for line in lines]
        assert len(records) == 12
        assert all(r["status"] in ("pass", "not_covered") for r in records)

    def test_inconsistent_methodology_reports_violation(self, tmp_path, capsys):
        # asymmetric structure with non-uniform weights: the unit endpoint
        # genuinely fails, the suite must say so and exit 2
        config = tmp_path / "c.json"
        config.write_text(
            json.dumps(
                {
                    "cutoffs": [10, 10],
                    "alpha": 1,
                    "k": 1.0,
                    "dependence": [[1, 0.8], [0, 1]],
                    "weights": [1.5, 0.5],
                }
            ),
            encoding="utf-8",
        )
        code = main(["axioms", "--config", str(config), "--trials", "5", "--seed", "3"])
        assert code == 2
        records = [
            json.loads(line) for line in capsys.readouterr().out.strip().splitlines()
        ]
        by_name = {r["axiom"]: r for r in records}
        assert by_name["normalization"]["status"] == "fail"


class TestCompare:
    def test_sweep_monotone_naive(self, tmp_path, capsys):
        data = tmp_path / "data.csv"
        data.write_text("a,b\n5,8\n12,15\n", encoding="utf-8")
        config = tmp_path / "c.json"
        config.write_text(
            json.dumps({"cutoffs": [10, 10], "alpha": 1, "k": 1}), encoding="utf-8"
        )
        code = main(
            [
                "compare",
                "--dataset", str(data),
                "--config", str(config),
                "--row", "2",
                "--col", "1",
            ]
        )
        assert code == 0
        records = json.loads(capsys.readouterr().out)
        assert len(records) == 11
        numerators = [r["naive_numerator"] for r in records]
        assert all(b > a for a, b in zip(numerators, numerators[1:]))
        assert all(0.0 <= r["fgt_adjusted"] <= 1.0 for r in records)

    def test_row_col_validation(self, tmp_path, capsys):
        data = tmp_path / "data.csv"
        data.write_text("a,b\n5,8\n", encoding="utf-8")
        config = tmp_path / "c.json"
        config.write_text(
            json.dumps({"cutoffs": [10, 10], "alpha": 1, "k": 1}), encoding="utf-8"
        )
        code = main(
            [
                "compare",
                "--dataset", str(data),
                "--config", str(config),
                "--row", "1",
                "--col", "1",
            ]
        )
        assert code == 1
