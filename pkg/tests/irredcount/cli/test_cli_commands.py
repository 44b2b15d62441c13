import csv
import json

import pytest
from click.testing import CliRunner

from irredcount.cli import cli
from irredcount.core.report import CoefficientSet, CountReport


def _run_json(tmp_path, args):
    out = tmp_path / "out.json"
    result = CliRunner().invoke(cli, [*args, "--output-file", str(out)])
    assert result.exit_code == 0, result.output
    return json.loads(out.read_text())


def test_davenport_command(tmp_path):
    data = _run_json(tmp_path, ["davenport", "--group", "3,3"])

    assert data["schema"] == 1
    assert data["command"] == "davenport"
    assert data["config"]["group"] == [3, 3]
    assert data["result"]["davenport"] == 5


def test_davenport_of_trivial_group(tmp_path):
    data = _run_json(tmp_path, ["davenport", "--group", "1"])
    assert data["result"]["davenport"] == 1
    assert data["result"]["group"] == "C1"


def test_zerosums_command(tmp_path):
    data = _run_json(tmp_path, ["zerosums", "--group", "4", "--m", "3"])
    assert data["result"]["count"] == 2
    assert [p["total"] for p in data["result"]["patterns"]] == [3, 3]


def test_coeffs_command_for_c2(tmp_path):
    data = _run_json(tmp_path, ["coeffs", "--h", "2", "--g", "0.6345", "--z2", "0.1"])
    result = data["result"]

    assert result["davenport"] == 2
    assert result["C"] == pytest.approx(0.25)
    assert result["inputs"]["g"] == [0.0, 0.6345]
    assert result["cyclic_closed_form"]["B"] == pytest.approx(result["B"])


def test_coeffs_for_noncyclic_group(tmp_path):
    data = _run_json(tmp_path, ["coeffs", "--group", "2,2"])
    assert data["result"]["davenport"] == 3
    assert "cyclic_closed_form" not in data["result"]


def test_coeffs_needs_exactly_one_group_choice():
    result = CliRunner().invoke(cli, ["coeffs", "--h", "2", "--group", "2"])
    assert result.exit_code == 2


def test_coeffs_rejects_wrong_vector_length():
    result = CliRunner().invoke(cli, ["coeffs", "--h", "3", "--g", "0.1,0.2"])
    assert result.exit_code == 2


def test_gvalue_command(tmp_path):
    data = _run_json(tmp_path, ["gvalue", "--d", "-5"])
    result = data["result"]

    assert result["x"] == 84
    assert result["g"] == pytest.approx(0.63446996, abs=1e-6)
    assert result["bound"] < 5e-5


def test_count_command(tmp_path):
    data = _run_json(tmp_path, ["count", "--d", "-5", "--x", "10"])
    result = data["result"]

    assert (result["M"], result["P"], result["pair_count"]) == (7, 1, 6)
    assert result["method"] == "census"


def test_count_brute_force_agrees(tmp_path):
    data = _run_json(tmp_path, ["count", "--d", "-15", "--x", "200", "--method", "brute-force"])
    census = _run_json(tmp_path, ["count", "--d", "-15", "--x", "200"])

    assert data["result"]["method"] == "brute_force"
    assert data["result"]["M"] == census["result"]["M"]


def test_classify_command(tmp_path):
    data = _run_json(tmp_path, ["classify", "--d", "-5", "--a", "1", "--b", "1"])
    assert data["result"]["kind"] == "irreducible_nonprime"
    assert data["result"]["norm"] == 6


def test_compare_command_csv(tmp_path):
    out = tmp_path / "compare.csv"
    result = CliRunner().invoke(
        cli,
        ["compare", "--d", "-5", "--xs", "100,50", "--output", "csv", "--output-file", str(out)],
    )
    assert result.exit_code == 0, result.output

    rows = list(csv.DictReader(out.open()))
    assert [float(r["x"]) for r in rows] == [50.0, 100.0]
    assert all(r["method"] == "census" for r in rows)


def test_precision_rounds_floats(tmp_path):
    data = _run_json(tmp_path, ["gvalue", "--d", "-5", "--precision", "3"])
    assert data["result"]["g"] == 0.634


def test_non_squarefree_d_is_a_usage_error():
    result = CliRunner().invoke(cli, ["count", "--d", "-4", "--x", "10"])
    assert result.exit_code == 2


def test_class_number_three_is_a_computation_error():
    result = CliRunner().invoke(cli, ["count", "--d", "-23", "--x", "100"])
    assert result.exit_code == 1


def test_unknown_option_is_a_usage_error():
    result = CliRunner().invoke(cli, ["count", "--d", "-5", "--bogus"])
    assert result.exit_code == 2


def test_text_output_cannot_go_to_a_file(tmp_path):
    result = CliRunner().invoke(
        cli,
        ["davenport", "--group", "2", "--output", "text", "--output-file", str(tmp_path / "x")],
    )
    assert result.exit_code == 2


def test_text_output_to_stdout():
    result = CliRunner().invoke(cli, ["davenport", "--group", "2", "--output", "text"])
    assert result.exit_code == 0
    assert "davenport" in result.output


def test_selftest_passes():
    result = CliRunner().invoke(cli, ["selftest", "--output", "csv"])
    assert result.exit_code == 0, result.output


def test_selftest_exits_1_on_failure(monkeypatch):
    monkeypatch.setattr(
        "irredcount.selftest.command.run_selftest",
        lambda: {"residues": {"status": "failed", "error": "boom"}},
    )
    result = CliRunner().invoke(cli, ["selftest"])
    assert result.exit_code == 1


@pytest.mark.parametrize(
    "args",
    [
        ["gvalue", "--d", "-5"],
        ["count", "--d", "-15", "--x", "1000"],
        ["compare", "--d", "-5", "--xs", "100,1000", "--output", "csv"],
    ],
)
def test_repeated_runs_print_identical_output(args):
    first = CliRunner().invoke(cli, args)
    second = CliRunner().invoke(cli, args)

    assert first.exit_code == 0, first.output
    assert first.stdout
    assert first.stdout == second.stdout


def test_count_result_parses_back_into_a_report(tmp_path):
    result = _run_json(tmp_path, ["count", "--d", "-5", "--x", "100000"])["result"]
    report = CountReport.from_dict(result)

    assert report.M == report.P + report.pair_count
    assert report.to_dict() == result


def test_coeffs_result_parses_back_into_a_coefficient_set(tmp_path):
    result = _run_json(tmp_path, ["coeffs", "--h", "3", "--g", "0.5", "--z2", "0.1"])["result"]
    coefficients = CoefficientSet.from_dict(result)

    assert coefficients.davenport == 3
    assert coefficients.g == result["inputs"]["g"]
    round_trip = coefficients.to_dict()
    assert round_trip == {key: result[key] for key in round_trip}
