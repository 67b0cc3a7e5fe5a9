import json
import logging
import os
from fractions import Fraction

import click
import pytest
from click.testing import CliRunner

from ice20v.cli import cli
from ice20v.icemodel import enumerate_configs
from ice20v.util.cli import FRACTION, emit, log_level
from ice20v.verify import Check, Outcome


def invoke(*args: str):
    runner = CliRunner()
    return runner.invoke(cli, args=list(args), catch_exceptions=False)


def test_version():
    """
    CLI test: Invoke `ice20v --version`
    """
    result = invoke("--version")
    assert result.exit_code == 0


def test_help_lists_commands():
    result = invoke("--help")
    assert result.exit_code == 0
    for command in ("seq", "verify", "det", "render"):
        assert command in result.output


def test_help_keeps_example_lines():
    result = invoke("--help")
    lines = [line.strip() for line in result.output.splitlines()]
    assert "ice20v seq --family A --max-n 6" in lines
    assert "ice20v verify --suite z20t4 --max-n 5" in lines
    assert "ice20v render config.json --out config.svg" in lines


def test_seq_json():
    result = invoke("seq", "--family", "A", "--max-n", "4")
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "family": "A",
        "index": "n",
        "params": {},
        "values": ["1", "3", "23", "433"],
    }


def test_seq_alias_and_empty():
    result = invoke("sequence", "--family", "B", "--max-n", "0")
    assert result.exit_code == 0
    assert json.loads(result.output)["values"] == []


def test_seq_csv():
    result = invoke("seq", "--family", "N", "--b", "1", "--c", "1", "--max-n", "3", "--format", "csv")
    assert result.exit_code == 0
    assert result.output == "a,value\n0,3\n1,11\n2,41\n"


def test_seq_pentagon():
    result = invoke("seq", "--family", "p", "--k", "1", "--max-n", "3")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["params"] == {"k": "1"}
    assert document["values"] == ["1", "4", "56"]


def test_seq_theta_and_polynomials():
    result = invoke("seq", "--family", "T4", "--theta", "2", "--max-n", "2")
    assert json.loads(result.output)["values"] == ["1", "5"]
    result = invoke("seq", "--family", "refined2", "--max-n", "3")
    assert json.loads(result.output)["values"] == [["1"], ["2", "1"], ["10", "10", "3"]]


def test_seq_to_file(tmp_path):
    target = tmp_path / "b.json"
    result = invoke("seq", "--family", "b_n", "--max-n", "3", "--out", str(target))
    assert result.exit_code == 0
    assert result.output == ""
    assert json.loads(target.read_text())["values"] == ["1", "3", "29"]


@pytest.mark.parametrize(
    "args",
    [
        ["--family", "A", "--max-n", "9"],
        ["--family", "p", "--max-n", "3"],
        ["--family", "N", "--b", "1", "--max-n", "3"],
        ["--family", "N", "--b", "3", "--c", "3", "--max-n", "3"],
        ["--family", "Z"],
        ["--family", "T4", "--theta", "x/y"],
    ],
)
def test_seq_usage_errors(args):
    result = invoke("seq", *args)
    assert result.exit_code == 2


def test_verify_passes():
    result = invoke("verify", "--suite", "an6v", "--max-n", "3")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["passed"] is True
    assert [suite["suite"] for suite in document["suites"]] == ["an6v"]
    assert document["suites"][0]["failures"] == []


def test_verify_reports_failure(mocker, tmp_path):
    broken = [Check("broken", "src", lambda: Outcome(expected=1, actual=2))]
    mocker.patch("ice20v.verify.core.build_checks", return_value=(1, broken))
    target = tmp_path / "report.json"
    result = invoke("check", "--suite", "an6v", "--max-n", "1", "--out", str(target))
    assert result.exit_code == 1
    document = json.loads(target.read_text())
    assert document["passed"] is False
    assert document["suites"][0]["failures"][0]["check"] == "broken"


def test_verify_jobs_from_environment(mocker):
    mocker.patch.dict(os.environ, {"ICE20V_JOBS": "3"})
    runner = mocker.patch("ice20v.cli.SuiteRunner")
    runner.return_value.run.return_value = []
    runner.return_value.passed.return_value = True
    result = invoke("verify", "--suite", "an6v", "--jobs", "1")
    assert result.exit_code == 0
    runner.assert_called_once_with(["an6v"], max_n=4, jobs=3)


def test_verify_rejects_bad_jobs_variable(mocker):
    mocker.patch.dict(os.environ, {"ICE20V_JOBS": "many"})
    result = invoke("verify", "--suite", "an6v")
    assert result.exit_code == 2
    assert "ICE20V_JOBS" in result.output


def test_det_dump():
    result = invoke("det", "--builder", "t4", "--n", "3", "--dump")
    assert result.exit_code == 0
    assert result.output == "[[1,0,0],[2,3,2],[4,8,13]]\n23\n"


def test_det_refined():
    result = invoke("determinant", "--builder", "t4-refined", "--type", "2", "--n", "4")
    assert result.exit_code == 0
    assert result.output == "122+182τ+106τ²+23τ³\n"


@pytest.mark.parametrize(
    "args,expected",
    [
        (["--builder", "ik", "--n", "3"], "23"),
        (["--builder", "lgv-triangle", "--n", "3"], "29"),
        (["--builder", "lgv-triangle", "--n", "3", "--k", "1"], "56"),
        (["--builder", "t4", "--n", "2", "--theta", "2"], "5"),
    ],
)
def test_det_builders(args, expected):
    result = invoke("det", *args)
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == expected


def test_det_ik_dump_shows_prefactor():
    result = invoke("det", "--builder", "ik", "--n", "2", "--dump")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[1].startswith("prefactor: ")
    assert lines[-1] == "3"


def test_det_rejects_degenerate_deformation():
    result = invoke("det", "--builder", "ik-refined", "--n", "2", "--v", "1")
    assert result.exit_code == 2


def test_render_config(tmp_path):
    source = tmp_path / "config.json"
    source.write_text(json.dumps(enumerate_configs("DWBC1", 2).configs[0].to_dict()))
    target = tmp_path / "config.svg"
    result = invoke("render", str(source), "--out", str(target))
    assert result.exit_code == 0
    svg = target.read_text()
    assert svg.startswith("<?xml")
    assert svg.count('<g id="path-') == 4


def test_render_all_tilings(tmp_path):
    source = tmp_path / "triangle.json"
    source.write_text(json.dumps({"region": ["###", "###", "#..", "#.."]}))
    target = tmp_path / "triangle.svg"
    result = invoke("draw", str(source), "--out", str(target), "--all")
    assert result.exit_code == 0
    assert result.output == "3 tilings\n"
    assert sorted(path.name for path in tmp_path.glob("triangle-*.svg")) == [
        "triangle-1.svg",
        "triangle-2.svg",
        "triangle-3.svg",
    ]


def test_render_region_first_tiling(tmp_path):
    source = tmp_path / "square.json"
    source.write_text(json.dumps({"cells": [[0, 0], [0, 1], [1, 0], [1, 1]]}))
    target = tmp_path / "square.svg"
    result = invoke("render", str(source), "--out", str(target))
    assert result.exit_code == 0
    assert target.read_text().count('<g id="domino-') == 2


def test_render_errors(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps(enumerate_configs("DWBC3", 1).configs[0].to_dict()))
    assert invoke("render", str(config), "--out", str(tmp_path / "x.svg"), "--all").exit_code == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert invoke("render", str(garbage), "--out", str(tmp_path / "y.svg")).exit_code == 2
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"tiles": []}))
    assert invoke("render", str(unknown), "--out", str(tmp_path / "z.svg")).exit_code == 2


@pytest.mark.parametrize(
    "verbose,debug,level",
    [
        (False, False, logging.WARNING),
        (True, False, logging.INFO),
        (False, True, logging.DEBUG),
        (True, True, logging.DEBUG),
    ],
)
def test_log_level(verbose, debug, level):
    assert log_level(verbose=verbose, debug=debug) == level


def test_fraction_parameter():
    assert FRACTION.convert("-2/5", None, None) == Fraction(-2, 5)
    assert FRACTION.convert(Fraction(3), None, None) == 3
    with pytest.raises(click.BadParameter):
        FRACTION.convert("1/0", None, None)


def test_emit_to_file(tmp_path):
    target = tmp_path / "out.txt"
    emit("ice\n", str(target))
    assert target.read_text() == "ice\n"
