"""Command-line interface: exit codes, report shape, determinism."""

import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from superstein.cli import main

SCHEMA = json.loads(resources.files("superstein").joinpath("report_schema.json").read_text())


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv + ["--emit", "json"])
    rep = json.loads(out)
    jsonschema.validate(rep, SCHEMA)
    return code, rep


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, out, _ = run(capsys, ["validate", "builtin:grassmann1"])
        assert code == 0
        assert "table validation: pass" in out

    def test_unknown_builtin_is_two(self, capsys):
        code, _, err = run(capsys, ["sl", "--algebra", "builtin:nosuch", "--shape", "2|1"])
        assert code == 2
        assert "unknown builtin" in err

    def test_missing_file_is_two(self, capsys):
        code, _, err = run(capsys, ["validate", "/nonexistent/path.alg"])
        assert code == 2

    def test_bad_shape_is_two(self, capsys):
        code, _, _ = run(capsys, ["sl", "--algebra", "builtin:field", "--shape", "banana"])
        assert code == 2

    def test_unmet_precondition_is_two(self, capsys):
        code, _, err = run(capsys, ["st", "--algebra", "builtin:field", "--shape", "1|1"])
        assert code == 2
        assert "m+n >= 3" in err

    def test_wrong_cocycle_shape_is_two(self, capsys):
        code, _, _ = run(capsys, ["homology", "--target", "stsharp",
                                  "--algebra", "builtin:field", "--shape", "2|1"])
        assert code == 2

    def test_unknown_subcommand_is_two(self, capsys):
        code, _, _ = run(capsys, ["frobulate"])
        assert code == 2

    def test_failing_validation_is_one(self, capsys, tmp_path):
        doc = tmp_path / "bad.alg"
        doc.write_text(
            "name bad\nfield Q\nbasis one:even u:even v:even\nunit one\n"
            "mul u u = 1*v\nmul u v = 1*one\n"
        )
        code, out, _ = run(capsys, ["validate", str(doc)])
        assert code == 1
        assert "table validation: fail" in out
        assert "associativity" in out

    def test_syntax_error_is_two(self, capsys, tmp_path):
        doc = tmp_path / "f2.alg"
        doc.write_text("name x\nfield Fp:2\nbasis e:even\nunit e\n")
        code, _, err = run(capsys, ["validate", str(doc)])
        assert code == 2
        assert "characteristic 2" in err

    def test_version_flag_is_zero(self, capsys):
        assert main(["--version"]) == 0


class TestReportShape:
    @pytest.mark.parametrize(
        "argv",
        [
            ["validate", "builtin:mat2"],
            ["hc", "--algebra", "builtin:grassmann1", "--degree", "1"],
            ["hc", "--algebra", "builtin:field", "--degree", "2"],
            ["pairing", "--algebra", "builtin:grassmann1"],
            ["sl", "--algebra", "builtin:dual", "--shape", "2|1"],
            ["st", "--algebra", "builtin:field", "--shape", "2|1", "--verify"],
            ["kernel", "--algebra", "builtin:grassmann1", "--shape", "2|1"],
            ["homology", "--target", "st", "--algebra", "builtin:field", "--shape", "2|1"],
            ["cocycle22", "--algebra", "builtin:field"],
        ],
    )
    def test_json_reports_validate_against_schema(self, capsys, argv):
        code, rep = run_json(capsys, argv)
        assert code == 0
        assert rep["version"]
        assert all(v["status"] in ("pass", "skipped") for v in rep["verdicts"])

    def test_failing_report_carries_witness(self, capsys, tmp_path):
        doc = tmp_path / "bad.alg"
        doc.write_text(
            "name bad\nfield Q\nbasis one:even u:even v:even\nunit one\n"
            "mul u u = 1*v\nmul u v = 1*one\n"
        )
        code, rep = run_json(capsys, ["validate", str(doc)])
        assert code == 1
        fails = [v for v in rep["verdicts"] if v["status"] == "fail"]
        assert fails and "witness" in fails[0]

    def test_text_and_json_agree_on_numbers(self, capsys):
        argv = ["kernel", "--algebra", "builtin:grassmann1", "--shape", "2|1"]
        _, text, _ = run(capsys, argv)
        _, rep = run_json(capsys, argv)
        for key in ("kernel_dim", "hc1_dim"):
            assert f"{key} = {rep['results'][key]}" in text

    def test_runtime_is_integer_ms(self, capsys):
        _, rep = run_json(capsys, ["validate", "builtin:field"])
        assert isinstance(rep["runtime_ms"], int)


class TestNumbers:
    def test_kernel_of_grassmann_projection(self, capsys):
        code, rep = run_json(capsys, ["kernel", "--algebra", "builtin:grassmann1", "--shape", "2|1"])
        assert code == 0
        assert rep["results"]["kernel_dim"] == 1
        assert rep["results"]["hc1_dim"] == 1

    def test_square_steinberg_second_homology(self, capsys):
        code, rep = run_json(capsys, ["homology", "--target", "st",
                                      "--algebra", "builtin:field", "--shape", "2|2"])
        assert code == 0
        assert rep["results"]["h2_dim"] == 2
        assert rep["results"]["expected_h2"] == 2

    def test_field_first_cyclic_homology_vanishes(self, capsys):
        code, rep = run_json(capsys, ["hc", "--algebra", "builtin:field", "--degree", "1"])
        assert code == 0
        assert rep["results"]["hc1_dim"] == 0
        assert rep["results"]["pairing_route_dim"] == rep["results"]["complex_route_dim"] == 0

    def test_pairing_basis_is_printed(self, capsys):
        _, rep = run_json(capsys, ["pairing", "--algebra", "builtin:grassmann1"])
        assert rep["results"]["hc1_dim"] == 1
        assert len(rep["results"]["hc1_basis"]) == 1
        assert "<<" in rep["results"]["hc1_basis"][0]

    def test_steinberg_dims_split_by_segment(self, capsys):
        _, rep = run_json(capsys, ["st", "--algebra", "builtin:grassmann1", "--shape", "2|1"])
        r = rep["results"]
        assert (r["f_dim"], r["h_dim"], r["d_dim"]) == (12, 1, 4)
        assert r["dim"] == 17

    def test_extension_dimension_sum(self, capsys):
        _, rep = run_json(capsys, ["cocycle22", "--algebra", "builtin:grassmann1"])
        r = rep["results"]
        assert r["st_sharp_dim"] == r["st_dim"] + r["w_dim"] == 35


class TestGuards:
    def test_wedge_cap_skips_instead_of_failing(self, capsys):
        code, rep = run_json(capsys, ["homology", "--target", "sl",
                                      "--algebra", "builtin:grassmann1", "--shape", "3|2",
                                      "--max-wedge", "100"])
        assert code == 0
        assert any(v["status"] == "skipped" for v in rep["verdicts"])

    def test_chain_cap_rejects_oversized_complex(self, capsys):
        code, _, err = run(capsys, ["hc", "--algebra", "builtin:grassmann2",
                                    "--degree", "2", "--max-chain", "4"])
        assert code == 2

    def test_file_algebra_reaches_subcommands(self, capsys, tmp_path):
        doc = tmp_path / "g.alg"
        doc.write_text("name g\nfield Q\nbasis one:even th:odd\nunit one\n")
        code, rep = run_json(capsys, ["kernel", "--algebra", str(doc), "--shape", "2|1"])
        assert code == 0
        assert rep["results"]["kernel_dim"] == 1


class TestCorpus:
    def test_corpus_passes_and_is_deterministic(self):
        cmd = [sys.executable, "-m", "superstein.cli", "corpus"]
        first = subprocess.run(cmd, capture_output=True, text=True)
        second = subprocess.run(cmd, capture_output=True, text=True)
        assert first.returncode == 0
        assert second.returncode == 0

        def strip(out):
            return [ln for ln in out.splitlines() if "runtime_ms" not in ln]

        assert strip(first.stdout) == strip(second.stdout)
        assert any(": pass" in ln for ln in strip(first.stdout))
        assert not any(": fail" in ln for ln in strip(first.stdout))

    def test_corpus_counts_tally(self, capsys):
        code, rep = run_json(capsys, ["corpus"])
        assert code == 0
        r = rep["results"]
        assert r["fail"] == 0
        assert r["pass"] + r["fail"] + r["skipped"] == len(rep["verdicts"])
        assert r["pass"] >= 90

    def test_tight_guard_adds_skips_deterministically(self, capsys):
        code1, rep1 = run_json(capsys, ["corpus", "--max-wedge", "500"])
        code2, rep2 = run_json(capsys, ["corpus", "--max-wedge", "500"])
        assert code1 == code2 == 0
        rep1["runtime_ms"] = rep2["runtime_ms"] = 0
        assert rep1 == rep2
        assert rep1["results"]["skipped"] > 0
