"""End-to-end CLI behavior through main(argv): outputs, exit codes, errors."""

import io
import json
import contextlib

import pytest

from tetrahess.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def ones_file(tmp_path):
    path = tmp_path / "ones.json"
    path.write_text(json.dumps({"generator": "ones"}))
    return str(path)


@pytest.fixture()
def tsym_file(tmp_path):
    path = tmp_path / "tsym.json"
    path.write_text(json.dumps({"a": ["1"], "b": ["1", "1"], "c": ["2", "2", "2"]}))
    return str(path)


class TestJP:
    def test_akv_head_values(self):
        code, out, _ = run(["jp", "--alpha", "0", "--beta", "-1/2", "--gamma", "0",
                            "--variant", "akv", "--count", "3"])
        assert code == 0
        assert out.strip() == '["1/2","-1/6","1/3"]'

    def test_first_variant_default(self):
        code, out, _ = run(["jp", "--alpha", "0", "--beta", "-1/2", "--gamma", "0",
                            "--count", "6"])
        assert code == 0
        assert json.loads(out) == ["1/2", "0", "1/6", "2/15", "1/5", "1/14"]

    def test_outside_region_is_input_error(self):
        code, _, err = run(["jp", "--alpha", "1", "--beta", "0", "--gamma", "0"])
        assert code == 65
        assert "natural region" in err

    def test_out_file_payload(self, tmp_path):
        dest = tmp_path / "alphas.json"
        code, _, _ = run(["jp", "--alpha", "0", "--beta", "1/2", "--gamma", "0",
                          "--count", "4", "--out", str(dest)])
        assert code == 0
        payload = json.loads(dest.read_text())
        assert payload["start_index"] == {"alpha": 1}
        assert len(payload["alpha"]) == 4


class TestJPScan:
    def test_csv_shape(self):
        code, out, _ = run(["jp-scan"])
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "alpha,beta,region,pbf_flag,oscillatory_flag"
        assert len(rows) == 9

    def test_strip_rows_are_oscillatory(self):
        _, out, _ = run(["jp-scan"])
        for line in out.strip().splitlines()[1:]:
            _, _, region, pbf, osc = line.split(",")
            assert osc == ("true" if region in ("R2", "R3") else "false")
            assert pbf == ("true" if region == "R3" else "false")


class TestFactor:
    def test_indefinite_exit_code(self, tsym_file):
        code, out, _ = run(["factor", "--input", tsym_file, "--n", "2",
                            "--alpha2", "0"])
        assert code == 2
        body = json.loads(out)
        assert body["classification"] == "INDEFINITE"
        assert body["alpha"] == ["2", "0", "1/2", "3/2", "1", "-2/3", "5/3"]

    def test_pbf_exit_code(self, ones_file):
        code, out, _ = run(["factor", "--input", ones_file, "--n", "3",
                            "--alpha2", "1"])
        assert code == 0
        assert json.loads(out)["classification"] == "PBF"

    def test_breakdown_maps_to_compute_error(self, tsym_file):
        code, _, err = run(["factor", "--input", tsym_file, "--n", "2",
                            "--alpha2", "1/2"])
        assert code == 70
        assert "alpha_3" in err


class TestPolys:
    def test_type2_coefficients(self, ones_file):
        code, out, _ = run(["polys", "--input", ones_file, "--n", "3",
                            "--kind", "type2"])
        assert code == 0
        body = json.loads(out)
        assert body["B"][2] == ["1", "-4", "1"]
        assert body["B"][3] == ["-1", "10", "-7", "1"]

    def test_type1_needs_nu(self, ones_file):
        code, _, _ = run(["polys", "--input", ones_file, "--n", "3",
                          "--kind", "type1"])
        assert code == 64

    def test_type1_at_origin(self, ones_file):
        code, out, _ = run(["polys", "--input", ones_file, "--n", "4",
                            "--kind", "type1", "--nu", "-1", "--at", "0"])
        assert code == 0
        body = json.loads(out)
        assert body["A1"] == ["1", "-1", "1", "-1", "1"]
        assert body["A2"] == ["0", "1", "-2", "3", "-4"]

    def test_second_kind_families(self, ones_file):
        code, out, _ = run(["polys", "--input", ones_file, "--n", "3",
                            "--kind", "second", "--nu", "-1"])
        assert code == 0
        body = json.loads(out)
        assert set(body) == {"B1", "B2", "b1"}
        assert body["B1"][2] == ["-3", "1"]


class TestDarboux:
    def test_hat_bands(self, ones_file):
        code, out, _ = run(["darboux", "--alphas", ones_file, "--which", "hat"])
        assert code == 0
        body = json.loads(out)
        assert body["c"][:3] == ["2", "3", "3"]
        assert body["b"][:2] == ["3", "3"]
        assert body["start_index"] == {"a": 2, "b": 1, "c": 0}

    def test_hathat_bands(self, ones_file):
        code, out, _ = run(["darboux", "--alphas", ones_file, "--which", "hathat"])
        assert code == 0
        assert json.loads(out)["c"][:3] == ["3", "3", "3"]


class TestVerify:
    def test_all_suites_pass_on_ones(self, ones_file):
        code, out, err = run(["verify", "--suite", "all", "--alphas", ones_file,
                              "--n", "6"])
        assert code == 0, err
        body = json.loads(out)
        assert body["status"] == "pass"
        assert len(body["suites"]) == 6
        for suite in ("tn", "christoffel", "akv", "roundtrip", "charpoly"):
            assert f"verify {suite}: pass" in err

    def test_single_suite(self, ones_file):
        code, out, _ = run(["verify", "--suite", "charpoly", "--alphas", ones_file,
                            "--n", "5"])
        assert code == 0
        suites = json.loads(out)["suites"]
        assert len(suites) == 1 and suites[0]["suite"] == "charpoly"

    def test_matrix_input_without_alphas(self, tsym_file):
        code, _, _ = run(["verify", "--suite", "tn", "--input", tsym_file,
                          "--n", "2"])
        assert code == 0

    def test_suite_needing_alphas_without_them(self, tsym_file):
        code, _, err = run(["verify", "--suite", "christoffel", "--input",
                            tsym_file, "--n", "2"])
        assert code == 65

    def test_float_mode_refused(self, ones_file):
        code, _, _ = run(["--mode", "float", "verify", "--suite", "tn",
                          "--alphas", ones_file])
        assert code == 64

    def test_tampered_alphas_fail(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"alpha": ["1"] * 10 + ["-1"] + ["1"] * 10}))
        code, _, _ = run(["verify", "--suite", "akv", "--alphas", str(bad),
                          "--n", "4"])
        assert code == 70  # negative band surfaces as a compute error


class TestErrorMapping:
    def test_missing_required_flag(self, tsym_file):
        code, _, err = run(["factor", "--input", tsym_file])
        assert code == 64
        assert "usage error" in err

    def test_missing_file(self):
        code, _, _ = run(["factor", "--input", "/nonexistent.json", "--n", "2",
                          "--alpha2", "1"])
        assert code == 65

    def test_malformed_json(self, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        code, _, _ = run(["factor", "--input", str(broken), "--n", "2",
                          "--alpha2", "1"])
        assert code == 65

    def test_unknown_subcommand(self):
        code, _, _ = run(["frobnicate"])
        assert code == 64
