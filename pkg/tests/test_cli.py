from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from stpizza.corpus import scene_path

from .conftest import FIXTURES

GOLDEN = Path(__file__).parent / "golden"


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "stpizza.pizzactl", *map(str, args)],
        capture_output=True,
        text=True,
    )


class TestExitCodes:
    def test_validate_ok(self):
        r = run("validate", "--scene", scene_path("ladder-1"))
        assert r.returncode == 0
        assert r.stdout == "ladder-1: valid geometric scene\n"

    def test_validation_failure(self):
        r = run("validate", "--scene", FIXTURES / "partial-hover.json")
        assert r.returncode == 1
        assert "regular pairs" in r.stderr

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"kind": "geometric", "name": "x", "geometric": {"ambient_dim": 2, "T": [], "Tp": [], "z": 1}}')
        r = run("validate", "--scene", bad)
        assert r.returncode == 2
        assert "geometric.z" in r.stderr

    def test_float_is_a_parse_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(scene_path("hover").read_text().replace('["2", "1"]', '["2", 1.0]', 1))
        assert run("validate", "--scene", bad).returncode == 2

    def test_missing_file(self, tmp_path):
        assert run("validate", "--scene", tmp_path / "nope.json").returncode == 2

    def test_usage_error(self):
        assert run("frobnicate").returncode == 2


class TestGolden:
    @pytest.mark.parametrize("name", ["hover", "ladder-2", "one-loop"])
    def test_sigtau_text(self, name):
        r = run("sigtau", "--scene", scene_path(name))
        assert r.returncode == 0
        assert r.stdout == (GOLDEN / f"{name}.sigtau.txt").read_text()

    def test_sigtau_json(self):
        r = run("sigtau", "--format", "json", "--scene", scene_path("ladder-1"))
        assert r.stdout == (GOLDEN / "ladder-1.sigtau.json").read_text()
        data = json.loads(r.stdout)
        assert data["graph_representable"]["answer"] == "unknown"

    def test_output_is_deterministic(self):
        a = run("sigtau", "--scene", scene_path("ladder-1")).stdout
        b = run("sigtau", "--scene", scene_path("ladder-1")).stdout
        assert a == b


class TestCommands:
    def test_pizza_text_stops_before_sigma(self):
        r = run("pizza", "--scene", scene_path("tilt"))
        assert "q - 1" in r.stdout and "sigma" not in r.stdout

    def test_pizza_json(self):
        data = json.loads(run("pizza", "--format", "json", "--scene", scene_path("shared-edge")).stdout)
        slice_ = data["pizza_T"]["slices"][0]
        assert (slice_["q_prev"], slice_["q_next"], slice_["mu"]) == ("inf", "1", {"a": "1", "b": "0"})

    def test_compare(self):
        r = run("compare", scene_path("ladder-1"), scene_path("ladder-2"))
        assert r.returncode == 0
        assert r.stdout == "ladder-1 vs ladder-2: not equivalent: sigma differs at index 2\n"
        r = run("compare", "--format", "json", scene_path("hover"), scene_path("hover"))
        assert json.loads(r.stdout)["verdict"] == "equivalent"

    def test_render_writes_svg(self, tmp_path):
        out = tmp_path / "l2.svg"
        r = run("render", "--scene", scene_path("ladder-2"), "--out", out)
        assert r.returncode == 0 and r.stdout == ""
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")
        assert len(root.findall("{http://www.w3.org/2000/svg}circle")) == 12

    def test_render_is_deterministic_and_matches_svg_format(self):
        a = run("render", "--scene", scene_path("one-loop"))
        b = run("sigtau", "--format", "svg", "--scene", scene_path("one-loop"))
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout == run("render", "--scene", scene_path("one-loop")).stdout

    def test_oracle(self):
        r = run("oracle", "--scene", scene_path("hover"), "--samples", 3, "--seed", 1)
        assert r.returncode == 0
        assert r.stdout.strip().endswith("0 mismatches")

    def test_oracle_json(self):
        r = run("oracle", "--format", "json", "--scene", scene_path("tilt"), "--kmin", 12, "--kmax", 30)
        data = json.loads(r.stdout)
        assert data["mismatches"] == [] and data["checks"] > 0

    def test_oracle_rejects_abstract_charts(self):
        r = run("oracle", "--scene", scene_path("one-loop"))
        assert r.returncode == 1

    def test_console_script_is_installed(self):
        import shutil

        exe = shutil.which("pizzactl")
        if exe is None:
            pytest.skip("package not installed with its console script")
        r = subprocess.run([exe, "validate", "--scene", str(scene_path("hover"))], capture_output=True, text=True)
        assert r.returncode == 0
