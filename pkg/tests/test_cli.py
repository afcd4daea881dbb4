from __future__ import annotations

import io
import json
import os
import subprocess
import sys

import pytest

from intercat.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, main
from intercat.description import export_description, validate_report, write_json
from intercat.instances.table import build_z2, z2_description
from intercat.morphisms import collapse_morphism, export_morphism


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_builtin_passes(capsys):
    code, out, _ = run(["check", "duoidal:1", "--budget", "300"], capsys)
    assert code == EXIT_PASS
    assert out.strip().endswith("verdict: pass")
    assert "C24" in out


def test_check_terminal_counts_one_tuple(capsys):
    code, out, _ = run(["check", "terminal", "--format", "json"], capsys)
    assert code == EXIT_PASS
    doc = json.loads(out)
    validate_report(doc)
    laws = {r["law"]: r for r in doc["instances"][0]["laws"]}
    assert laws["C21"]["checked"] == 1 and laws["NAT-TAU"]["checked"] == 1


def test_broken_file_exits_one_and_names_the_law(tmp_path, capsys):
    path = tmp_path / "broken.json"
    write_json(z2_description("broken", {"lambda_h": "1"}), path)
    code, out, _ = run(["check", str(path), "--format", "json"], capsys)
    assert code == EXIT_FAIL
    doc = json.loads(out)
    validate_report(doc)
    failing = {r["law"] for r in doc["instances"][0]["laws"] if r["status"] == "fail"}
    assert "WD-H-TRIANGLE" in failing
    w = next(r for r in doc["instances"][0]["laws"] if r["law"] == "WD-H-TRIANGLE")["failures"][0]
    assert w["lhs"] != w["rhs"] and w["inputs"]


def test_text_report_shows_witnesses(tmp_path, capsys):
    path = tmp_path / "broken.json"
    write_json(z2_description("broken", {"chi": "1"}), path)
    code, out, _ = run(["check", str(path)], capsys)
    assert code == EXIT_FAIL
    assert "witness" in out and "verdict: fail" in out


def test_export_then_check_round_trip(tmp_path, capsys):
    path = tmp_path / "d1.json"
    assert main(["export", "duoidal:1", str(path)]) == EXIT_PASS
    capsys.readouterr()
    code, out, _ = run(["check", str(path), "--budget", "300"], capsys)
    assert code == EXIT_PASS
    assert "instance duoidal:1" in out


def test_export_to_stdout(capsys):
    code, out, _ = run(["export", "terminal"], capsys)
    assert code == EXIT_PASS
    assert json.loads(out)["schema"] == "intercat/v1"


def test_export_to_unwritable_path(tmp_path, capsys):
    code, _, err = run(["export", "terminal", "-o", str(tmp_path / "no" / "such" / "dir.json")], capsys)
    assert code == EXIT_ERROR
    assert "cannot write" in err


@pytest.mark.parametrize(
    "content,needle",
    [
        ("{not json", "not valid JSON"),
        ('{"schema": "intercat/v1", "instances": [{"name": 3}]}', "instances[0]"),
    ],
)
def test_bad_files_exit_two(tmp_path, capsys, content, needle):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, _, err = run(["check", str(path)], capsys)
    assert code == EXIT_ERROR
    assert needle in err


def test_missing_file_and_unknown_builtin(capsys):
    assert run(["check", "nowhere/missing.json"], capsys)[0] == EXIT_ERROR
    code, _, err = run(["check", "hexagonal:3"], capsys)
    assert code == EXIT_ERROR and "unknown instance" in err


def test_bad_budget_and_duality(capsys):
    assert run(["check", "terminal", "--budget", "0"], capsys)[0] == EXIT_ERROR
    assert run(["check", "terminal", "--duality", "xyz"], capsys)[0] == EXIT_ERROR


def test_duality_is_echoed(capsys):
    code, out, _ = run(["check", "z2", "--duality", "hvtr", "--format", "json", "--seed", "5"], capsys)
    assert code == EXIT_PASS
    cfg = json.loads(out)["instances"][0]["config"]
    assert cfg == {"budget": 1000, "seed": 5, "duality": "hvtr"}


def test_morphism_file_is_checked(tmp_path, capsys):
    from intercat.instances import build_duoidal
    from intercat.instances.table import build_terminal

    D, T = build_duoidal(1), build_terminal()
    F = collapse_morphism(D, T)
    doc = export_description(T)
    doc["morphisms"] = [export_morphism(F)]
    doc["morphisms"][0]["source"] = "duoidal:1"
    path = tmp_path / "collapse.json"
    write_json(doc, path)
    code, out, _ = run(["check", str(path), "--format", "json"], capsys)
    assert code == EXIT_PASS
    rep = json.loads(out)
    validate_report(rep)
    assert rep["morphisms"][0]["kind"] == "colax-colax"


def test_demos(capsys):
    code, out, _ = run(["demo", "duoidal"], capsys)
    assert code == EXIT_PASS
    assert "[(0->0), (1->3)]" in out
    assert "injective=True surjective=False" in out
    code, out, _ = run(["demo", "span-cospan"], capsys)
    assert code == EXIT_PASS
    assert "pullback" in out and "pushout" in out and "comparison map" in out
    code, _, err = run(["demo", "nope"], capsys)
    assert code == EXIT_ERROR and "unknown demo" in err


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_console_script_entry_point():
    env = dict(os.environ)
    r = subprocess.run([sys.executable, "-m", "intercat.cli", "check", "terminal"], capture_output=True, text=True, env=env)
    assert r.returncode == 0
    assert "verdict: pass" in r.stdout


def test_stream_argument():
    from intercat.cli import cmd_check

    buf = io.StringIO()
    assert cmd_check("z2", budget=50, out=buf) == EXIT_PASS
    assert "instance z2" in buf.getvalue()
    assert build_z2().name == "z2"
