"""End-to-end CLI behavior: commands, exit codes, determinism, SVG output."""

import json
from pathlib import Path

import pytest

from encwrithe.cli import main
from encwrithe.data import (
    LINKED_CIRCLES_PATH,
    MODEL_CROSSING_PATH,
    MODEL_FAMILY_PATH,
    MODEL_SOLITARY_PATH,
    WALL_QUARTIC_FAMILY_PATH,
)
from encwrithe.fileio import link_to_lines, parse_curve_file, write_link_file


class TestWritheCommand:
    def test_model_crossing(self, capsys):
        code = main(["writhe", str(MODEL_CROSSING_PATH), "--center", "0,0,1,0"])
        out = capsys.readouterr().out
        assert code == 0
        assert "Cw = -1" in out
        assert "1 crossing(s), 0 solitary" in out

    def test_model_solitary(self, capsys):
        code = main(["writhe", str(MODEL_SOLITARY_PATH), "--center", "0,0,1,0"])
        out = capsys.readouterr().out
        assert code == 0
        assert "Cw = -1" in out
        assert "0 crossing(s), 1 solitary" in out

    def test_oriented_output_and_json(self, capsys, tmp_path):
        report = tmp_path / "report.json"
        code = main(["writhe", str(LINKED_CIRCLES_PATH), "--seed", "3", "--json", str(report)])
        out = capsys.readouterr().out
        assert code == 0
        assert "Cw (oriented) =" in out
        assert "lk[0][1] =" in out
        payload = json.loads(report.read_text())
        assert payload["unoriented"] == 0
        assert abs(int(payload["linking"][0][1])) == 1

    def test_conic_empty_diagram(self, capsys, tmp_path):
        path = tmp_path / "conic.jsonl"
        path.write_text(
            '{"kind": "link"}\n'
            '{"x": [1, 0, -1], "y": [0, 2], "z": [0], "w": [1, 0, 1]}\n'
        )
        code = main(["writhe", str(path), "--seed", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "Cw = 0" in out
        assert "0 crossing(s), 0 solitary" in out

    def test_deterministic_output(self, capsys):
        main(["writhe", str(MODEL_CROSSING_PATH), "--seed", "4"])
        first = capsys.readouterr().out
        main(["writhe", str(MODEL_CROSSING_PATH), "--seed", "4"])
        second = capsys.readouterr().out
        assert first == second


class TestVerifyCommand:
    def test_model_passes(self, capsys, tmp_path):
        report = tmp_path / "verify.json"
        code = main(
            [
                "verify",
                str(MODEL_CROSSING_PATH),
                "--centers",
                "4",
                "--isotopies",
                "3",
                "--seed",
                "1",
                "--json",
                str(report),
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "center-independence: pass" in out
        assert "isotopy-invariance-and-mirror: pass" in out
        payload = json.loads(report.read_text())
        assert payload["passed"] is True

    def test_family_scan(self, capsys):
        code = main(["verify", str(WALL_QUARTIC_FAMILY_PATH)])
        out = capsys.readouterr().out
        assert code == 0
        assert "singular-curve" in out
        assert "jump" in out

    def test_model_family_scan(self, capsys):
        code = main(["verify", str(MODEL_FAMILY_PATH)])
        out = capsys.readouterr().out
        assert code == 0
        assert "degenerate-projection" in out
        assert "jump +0" in out


class TestSampleCommand:
    def test_sample_writes_validated_reloadable_files(self, capsys, tmp_path):
        code = main(
            ["sample", "--degree", "3", "--count", "2", "--seed", "1", "--out", str(tmp_path)]
        )
        assert code == 0
        files = sorted(tmp_path.glob("*.jsonl"))
        assert len(files) == 2
        for f in files:
            link = parse_curve_file(f)
            assert link.components[0].degree == 3

    def test_sample_deterministic_bytes(self, tmp_path, capsys):
        a_dir, b_dir = tmp_path / "a", tmp_path / "b"
        main(["sample", "--degree", "3", "--count", "2", "--seed", "7", "--out", str(a_dir)])
        main(["sample", "--degree", "3", "--count", "2", "--seed", "7", "--out", str(b_dir)])
        capsys.readouterr()
        for fa, fb in zip(sorted(a_dir.iterdir()), sorted(b_dir.iterdir())):
            assert fa.read_bytes() == fb.read_bytes()


class TestDiagramCommand:
    def test_crossing_svg(self, capsys, tmp_path):
        out = tmp_path / "crossing.svg"
        code = main(
            ["diagram", str(MODEL_CROSSING_PATH), "--center", "0,0,1,0", "--out", str(out)]
        )
        capsys.readouterr()
        assert code == 0
        text = out.read_text()
        assert text.startswith("<svg")
        assert "-1" in text  # sign label
        assert "exact diagram data" in text
        assert '"kind": "crossing"' in text

    def test_solitary_svg_has_dashed_marker(self, capsys, tmp_path):
        out = tmp_path / "solitary.svg"
        code = main(
            ["diagram", str(MODEL_SOLITARY_PATH), "--center", "0,0,1,0", "--out", str(out)]
        )
        capsys.readouterr()
        assert code == 0
        text = out.read_text()
        assert "stroke-dasharray" in text
        assert '"kind": "solitary"' in text

    def test_svg_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for target in (a, b):
            main(["diagram", str(MODEL_CROSSING_PATH), "--seed", "2", "--out", str(target)])
        capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()


class TestErrorPaths:
    def test_zero_w_coordinate_rejected(self, capsys, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text(
            '{"kind": "link"}\n'
            '{"x": [1, 0, -1], "y": [0, 1, 0, -1], "z": [0, -1], "w": [0]}\n'
        )
        code = main(["writhe", str(path)])
        err = capsys.readouterr().err
        assert code == 2
        assert "identically zero" in err

    def test_invalid_json_rejected(self, capsys, tmp_path):
        path = tmp_path / "garbage.jsonl"
        path.write_text("not json at all\n")
        code = main(["writhe", str(path)])
        assert code == 2

    def test_singular_curve_rejected(self, capsys, tmp_path):
        path = tmp_path / "nodal.jsonl"
        path.write_text(
            '{"kind": "link"}\n'
            '{"x": [0, -1, 1, -1, 1], "y": [0, -1, 0, -1, 2], "z": [0, 1, 0, -2, 1], "w": [1]}\n'
        )
        code = main(["writhe", str(path)])
        assert code == 2

    def test_missing_file(self, capsys):
        assert main(["writhe", "/nonexistent/file.jsonl"]) == 2


class TestRoundTrip:
    def test_parse_write_reproduces_coefficients(self, tmp_path):
        link = parse_curve_file(LINKED_CIRCLES_PATH)
        out = tmp_path / "roundtrip.jsonl"
        write_link_file(link, out)
        again = parse_curve_file(out)
        assert [c.coords for c in again.components] == [
            c.coords for c in link.components
        ]
        assert again.orientations == link.orientations

    def test_canonical_file_bytes_stable(self):
        link = parse_curve_file(LINKED_CIRCLES_PATH)
        assert "\n".join(link_to_lines(link)) + "\n" == LINKED_CIRCLES_PATH.read_text()

    def test_rational_coefficients_survive(self, tmp_path):
        from encwrithe.curves import Link, RationalSpaceCurve
        from fractions import Fraction

        curve = RationalSpaceCurve(
            [Fraction(1, 3), 1], [Fraction(-2, 7)], [0], [1]
        )
        out = tmp_path / "frac.jsonl"
        write_link_file(Link([curve]), out)
        again = parse_curve_file(out)
        assert again.components[0] == curve
