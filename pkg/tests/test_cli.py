from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from hommodels.cli import EXIT_OK, EXIT_USAGE, run

GOLDEN = Path(__file__).parent / "golden"


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_stiefel_json(capsys, report_schema):
    code, out, _ = _run(capsys, "verify", "stiefel", "--n", "1", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, report_schema)
    (report,) = doc["reports"]
    assert report["status"] == "pass"
    assert report["counts"]["small"] == report["counts"]["target"] == 36
    assert "wall_time" not in report


def test_timings_are_opt_in(capsys, report_schema):
    code, out, _ = _run(capsys, "verify", "restriction", "--n", "1", "--format", "json", "--timings")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, report_schema)
    assert "wall_time" in doc["reports"][0]


def test_output_is_byte_stable(capsys):
    argv = ("verify", "involution", "--n", "1", "--format", "json")
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv, "--threads", "3")
    assert first == second


def test_hom_c5_k2_is_empty(capsys):
    code, out, _ = _run(capsys, "hom", "--g", "cycle:5", "--h", "complete:2")
    assert code == EXIT_OK
    assert "empty complex" in out


def test_hom_json(capsys, report_schema):
    code, out, _ = _run(capsys, "hom", "--g", "cycle:5", "--h", "complete:3", "--S", "2,4", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, report_schema)
    assert doc["result"]["cells"] == 36


def test_hom_covers(capsys):
    code, out, _ = _run(capsys, "hom", "--g", "path:1", "--h", "complete:3", "--covers")
    assert code == EXIT_OK
    assert "(0:{1} 1:{2}) < (0:{1} 1:{2,3})" in out
    assert out.endswith((GOLDEN / "hom_p1_k3_covers.txt").read_text(encoding="utf-8"))


def test_hom_covers_json_matches_golden_file(capsys):
    code, out, _ = _run(capsys, "hom", "--g", "path:1", "--h", "complete:3", "--covers", "--format", "json")
    assert code == EXIT_OK
    assert out == (GOLDEN / "hom_p1_k3.json").read_text(encoding="utf-8")


def test_homology_of_face_list(capsys, tmp_path):
    path = tmp_path / "hexagon.txt"
    path.write_text("".join(f"{i} {(i + 1) % 6}\n" for i in range(6)), encoding="utf-8")
    code, out, _ = _run(capsys, "homology", "--faces", str(path))
    assert code == EXIT_OK
    assert "(Z, Z)" in out


def test_homology_of_hom_cellular(capsys):
    code, out, _ = _run(capsys, "homology", "--g", "cycle:5", "--h", "complete:3", "--cellular", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["homology"]["groups"] == ["Z^2", "Z^2"]


def test_subdivide(capsys):
    code, out, _ = _run(capsys, "subdivide", "--poset", "boundary:2", "--kind", "intint", "--format", "json")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["elements"] == result["four_chains"]


def test_neighborhood_command(capsys):
    code, out, _ = _run(capsys, "neighborhood", "--poset", "boundary:2", "--no-links")
    assert code == EXIT_OK
    assert "neighborhood" in out and "pass" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("verify", "stiefel", "--n", "9"),
        ("verify", "stiefel"),
        ("verify", "stiefel", "--n", "1", "--threads", "0"),
        ("hom", "--g", "cycle:5"),
        ("hom", "--g", "cycle:2", "--h", "complete:3"),
        ("hom", "--g", "cycle:5", "--h", "complete:3", "--S", "2,x"),
        ("homology", "--faces", "/nonexistent/faces.txt"),
    ],
)
def test_usage_errors_exit_2_without_output(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err


def test_failing_check_exits_1(capsys, monkeypatch):
    from hommodels import cli
    from hommodels.models import VerificationReport

    def failing(name, params, budgets):
        report = VerificationReport(name, {"n": params.get("n")})
        report.check("always", False, witness="x")
        return report

    monkeypatch.setattr(cli, "run_scenario", failing)
    code, out, _ = _run(capsys, "verify", "stiefel", "--n", "1")
    assert code == 1
    assert "fail" in out
