import json

from click.testing import CliRunner

from irredcount.cli import cli


def test_cli_output_overrides_yaml(write_config, tmp_path):
    config = write_config({"version": 1, "defaults": {"output": "csv", "precision": 3}})
    out = tmp_path / "out.json"

    result = CliRunner().invoke(
        cli,
        ["davenport", "--group", "2", "--config", config, "--output", "json",
         "--output-file", str(out)],
    )
    assert result.exit_code == 0, result.output

    data = json.loads(out.read_text())
    assert data["config"]["output"] == "json"
    assert data["config"]["precision"] == 3


def test_yaml_output_applies_without_flag(write_config, tmp_path):
    config = write_config({"version": 1, "defaults": {"output": "csv"}})
    out = tmp_path / "out.csv"

    result = CliRunner().invoke(
        cli, ["davenport", "--group", "3", "--config", config, "--output-file", str(out)]
    )
    assert result.exit_code == 0, result.output
    assert out.read_text().splitlines()[0] == "m,patterns"


def test_yaml_tolerance_reaches_gvalue(write_config, tmp_path):
    config = write_config({"version": 1, "defaults": {"tolerance": 1e-3}})
    out = tmp_path / "out.json"

    result = CliRunner().invoke(
        cli, ["gvalue", "--d", "-15", "--config", config, "--output-file", str(out)]
    )
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text())
    assert data["config"]["tolerance"] == 1e-3
    assert data["result"]["x"] == 21


def test_cli_tolerance_overrides_yaml(write_config, tmp_path):
    config = write_config({"version": 1, "defaults": {"tolerance": 1e-3}})
    out = tmp_path / "out.json"

    result = CliRunner().invoke(
        cli,
        ["gvalue", "--d", "-15", "--tol", "5e-5", "--config", config, "--output-file", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["result"]["x"] == 84


def test_invalid_yaml_is_a_usage_error(write_config):
    config = write_config({"version": 1, "defaults": {"colour": "blue"}})
    result = CliRunner().invoke(cli, ["davenport", "--group", "2", "--config", config])
    assert result.exit_code == 2
