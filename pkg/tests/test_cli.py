import json
import os
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "fixtures")


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "logskel", *args],
                          capture_output=True, text=True, cwd=ROOT)


def test_weight_command_example_values():
    out = run_cli("weight",
                  "--pair", os.path.join(FIX, "strict_inclusion_pair.json"),
                  "--form", os.path.join(FIX, "strict_inclusion_form.json"),
                  "--points", os.path.join(FIX, "strict_inclusion_points.json"))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    got = {v["point"]["kato_point"][0]: v["weight"] for v in doc["values"]}
    assert got == {"D1": "2", "D2": "3", "D3": "3"}


def test_ks_command_example():
    out = run_cli("ks",
                  "--pair", os.path.join(FIX, "strict_inclusion_pair.json"),
                  "--form", os.path.join(FIX, "strict_inclusion_form.json"))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["min_value"] == "2"
    assert len(doc["faces"]) == 1
    assert doc["faces"][0]["kato_point"] == ["D1"]
    assert doc["faces"][0]["vertices"] == [["1/2"]]


def test_residue_command_with_trace_ks():
    out = run_cli("residue",
                  "--pair", os.path.join(FIX, "strict_inclusion_pair.json"),
                  "--form", os.path.join(FIX, "strict_inclusion_form.json"),
                  "--stratum", "D4", "--ks")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["residue_form"]["dlog"] == ["D3"]
    assert doc["ks"]["min_value"] == "3"


def test_gauss_command():
    out = run_cli("gauss", "--c", "1", "--a", "1", "--l", "2", "--m", "1")
    doc = json.loads(out.stdout)
    assert doc["log_r"] == "-2"
    assert doc["log_norm_trivial"] == "-2"
    assert doc["log_norm_discrete"] == "-4"
    assert doc["identity_holds"] is True


def test_character_variety_command():
    out = run_cli("character-variety", "--group", "gl", "--n", "2")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["matches_sphere"] is True
    assert doc["sphere_dimension"] == 3
    ranks = [d["rank"] for d in doc["homology"]["degree"]]
    assert ranks == [1, 0, 0, 1]


def test_tate_command():
    out = run_cli("tate", "--n", "2", "--alpha", "-1", "-1")
    doc = json.loads(out.stdout)
    assert doc["case"] == "negative"
    contained = {(tuple(s["J"]), s["j"]) for s in doc["strata"] if s["contained"]}
    assert contained == {((1, 2), 1), ((1, 2), 2)}


def test_slice_command_dwork_circle():
    out = run_cli("slice", "--pair", os.path.join(FIX, "dwork_pair.json"),
                  "--essential")
    doc = json.loads(out.stdout)
    ranks = [d["rank"] for d in doc["homology"]["degree"]]
    assert ranks == [1, 1]


def test_closure_command_snc_points():
    out = run_cli("closure", "--pair", os.path.join(FIX, "a2_pair.json"),
                  "--points", os.path.join(FIX, "closure_points_a2.json"))
    doc = json.loads(out.stdout)
    strata = [c["stratum"] for c in doc["classified"]]
    assert strata == [["B2"], ["B1", "B2"]]


def test_skeleton_command_toric():
    out = run_cli("skeleton", "--fan", os.path.join(FIX, "p2_fan.json"))
    doc = json.loads(out.stdout)
    assert doc["kato_points"] == 7


def test_dual_complex_command():
    out = run_cli("dual-complex", "--fan", os.path.join(FIX, "p2_fan.json"))
    doc = json.loads(out.stdout)
    ranks = [d["rank"] for d in doc["homology"]["degree"]]
    assert ranks == [1, 1]


def test_homology_command_roundtrip(tmp_path):
    cx = {"schema": "1", "vertices": [0, 1, 2],
          "facets": [[0, 1], [1, 2], [0, 2]]}
    path = tmp_path / "circle.json"
    path.write_text(json.dumps(cx))
    out = run_cli("homology", "--complex", str(path))
    doc = json.loads(out.stdout)
    assert [d["rank"] for d in doc["homology"]["degree"]] == [1, 1]


def test_byte_identical_output():
    args = ("gauss", "--c", "5/3", "--a", "2", "--l", "3", "--m", "2")
    assert run_cli(*args).stdout == run_cli(*args).stdout


def test_validation_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    out = run_cli("homology", "--complex", str(bad))
    assert out.returncode == 2
    assert "line" in out.stderr


def test_unknown_stratum_is_validation_error(tmp_path):
    out = run_cli("residue",
                  "--pair", os.path.join(FIX, "strict_inclusion_pair.json"),
                  "--form", os.path.join(FIX, "strict_inclusion_form.json"),
                  "--stratum", "D9")
    assert out.returncode == 2


def test_fixtures_command_green():
    out = run_cli("fixtures")
    assert out.returncode == 0
    assert "FAIL" not in out.stdout


def test_output_file_and_env_dir(tmp_path):
    env = dict(os.environ, LOGSKEL_OUTPUT_DIR=str(tmp_path))
    out = subprocess.run(
        [sys.executable, "-m", "logskel", "gauss", "--c", "1", "--a", "0",
         "--l", "1", "--m", "1", "-o", "report.json"],
        capture_output=True, text=True, cwd=ROOT, env=env)
    assert out.returncode == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["identity_holds"] is True
