"""File formats and the command-line interface."""

import json

import pytest

import edk
from edk.catalog import k5_two_cycles, quadratic_residue_tournament
from edk.cli import main
from edk.files import format_graph, format_property


@pytest.fixture
def prop_files(tmp_path):
    files = {}
    files["rainbow"] = tmp_path / "rainbow.prop"
    files["rainbow"].write_text("multicolor r=3\ngraph n=3\n1 2\n3\n")
    files["ctri"] = tmp_path / "ctri.prop"
    files["ctri"].write_text("directed palette=tourn\ngraph n=3\n> <\n>\n")
    files["trans"] = tmp_path / "trans.prop"
    files["trans"].write_text("directed palette=tourn\ngraph n=3\n> >\n>\n")
    files["graph"] = tmp_path / "g.graph"
    files["graph"].write_text(format_graph(k5_two_cycles().recolored(0, 1, 2)))
    files["rgraph"] = tmp_path / "r3.graph"
    files["rgraph"].write_text(
        "multicolor r=3\ngraph n=5\n1 2 3 1\n2 2 1\n3 3\n1\n"
    )
    return files


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestFormats:
    def test_property_roundtrip_qr7(self):
        fam = edk.PropertyFamily.directed("tourn", [quadratic_residue_tournament()])
        assert edk.parse_property(format_property(fam)) == fam

    def test_comments_and_blank_lines(self):
        text = "# heading\nmulticolor r=2\n\n# block\ngraph n=2\n1  # the pair\n"
        fam = edk.parse_property(text)
        assert fam.forbidden[0].colors == (1,)

    def test_graph_file_must_hold_one_graph(self):
        text = "multicolor r=2\ngraph n=2\n1\n\ngraph n=2\n2\n"
        with pytest.raises(edk.PropertyFormatError):
            edk.parse_graph(text)


class TestCli:
    def test_chi(self, capsys, prop_files):
        code, out = run(capsys, "chi", "--property", str(prop_files["rainbow"]))
        assert code == 0
        assert json.loads(out) == {"mode": "weak", "chi": 2}

    def test_chi_trivial_flag(self, capsys, prop_files):
        code, out = run(capsys, "chi", "--property", str(prop_files["trans"]))
        assert code == 0
        assert json.loads(out) == {"mode": "weak", "chi": 1, "trivial": True}

    def test_spectrum_json_and_csv(self, capsys, prop_files):
        code, out = run(capsys, "spectrum", "--property", str(prop_files["rainbow"]))
        assert code == 0
        payload = json.loads(out)
        assert payload["chi"] == 2
        assert [0, 0, 0] in payload["tuples"]
        code, out = run(
            capsys, "spectrum", "--property", str(prop_files["rainbow"]), "--format", "csv"
        )
        assert code == 0
        assert "0,0,0" in out.splitlines()

    def test_types_text_and_json(self, capsys, prop_files):
        code, out = run(capsys, "types", "--property", str(prop_files["ctri"]), "--kmax", "1")
        assert code == 0
        assert "type n=1" in out
        code, out = run(
            capsys, "types", "--property", str(prop_files["ctri"]), "--kmax", "1",
            "--format", "json",
        )
        payload = json.loads(out)
        assert payload["count"] == 2

    def test_distfn_point(self, capsys, prop_files):
        code, out = run(
            capsys, "distfn", "--property", str(prop_files["rainbow"]),
            "--p", "1/2,1/4,1/4", "--kmax", "2",
        )
        assert code == 0
        assert json.loads(out)["value"] == "1/4"

    def test_distfn_grid_csv(self, capsys, prop_files):
        code, out = run(
            capsys, "distfn", "--property", str(prop_files["rainbow"]),
            "--grid", "1/4", "--kmax", "1", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 15  # compositions of 4 into 3 parts
        assert all(len(line.split(",")) == 4 for line in lines)

    def test_distfn_max(self, capsys, prop_files):
        code, out = run(
            capsys, "distfn", "--property", str(prop_files["ctri"]), "--kmax", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["max_value"] == "1/2"
        assert payload["turan_lower"] == "1/2"

    def test_edit_and_oracle(self, capsys, prop_files):
        code, out = run(
            capsys, "edit", "--property", str(prop_files["rainbow"]),
            "--graph", str(prop_files["rgraph"]), "--type-index", "0", "--kmax", "1",
            "--weights", "1", "--seed", "7",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["member"] is True
        code, out = run(
            capsys, "oracle", "--property", str(prop_files["rainbow"]),
            "--graph", str(prop_files["rgraph"]),
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["witness_member"] is True
        assert payload["hamming_check"] is True

    def test_sample_roundtrip(self, capsys, tmp_path, prop_files):
        out_file = tmp_path / "sampled.graph"
        code, _ = run(
            capsys, "sample", "--n", "6", "--seed", "3", "--p", "1/3,1/3,1/3",
            "--out", str(out_file),
        )
        assert code == 0
        g = edk.parse_graph(out_file.read_text())
        assert g.n == 6

    def test_sample_deterministic(self, capsys):
        code1, out1 = run(capsys, "sample", "--n", "6", "--seed", "3", "--p", "1/2,1/2")
        code2, out2 = run(capsys, "sample", "--n", "6", "--seed", "3", "--p", "1/2,1/2")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_estimate(self, capsys, prop_files):
        code, out = run(
            capsys, "estimate", "--property", str(prop_files["rainbow"]),
            "--n", "5", "--p", "1/3,1/3,1/3", "--trials", "6", "--seed", "2",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["mode"] == "exact"
        assert payload["trials"] == 6

    def test_estimate_jobs_match_sequential(self, capsys, prop_files):
        args = [
            "estimate", "--property", str(prop_files["rainbow"]),
            "--n", "5", "--p", "1/3,1/3,1/3", "--trials", "4", "--seed", "2",
        ]
        _, seq = run(capsys, *args)
        _, par = run(capsys, *args, "--jobs", "2")
        assert seq == par

    def test_edit_trials_jobs_match_sequential(self, capsys, prop_files):
        args = [
            "edit", "--property", str(prop_files["rainbow"]),
            "--graph", str(prop_files["rgraph"]), "--type-index", "0", "--kmax", "1",
            "--weights", "1", "--seed", "7", "--trials", "5",
        ]
        _, seq = run(capsys, *args)
        _, par = run(capsys, *args, "--jobs", "2")
        assert seq == par

    def test_verify_cases(self, capsys):
        code, out = run(capsys, "verify-paper", "--case", "example-spectra")
        assert code == 0
        payload = json.loads(out)
        assert payload["pass"] is True

    def test_verify_unknown_case(self, capsys):
        code, _ = run(capsys, "verify-paper", "--case", "nope")
        assert code == 1

    def test_usage_error_exits_2(self, capsys):
        assert main(["chi"]) == 2  # missing --property
        assert main(["nonsense"]) == 2

    def test_malformed_file_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.prop"
        bad.write_text("multicolor r=2\ngraph n=3\n1 3\n2\n")
        assert main(["chi", "--property", str(bad)]) == 2
        assert main(["chi", "--property", str(tmp_path / "missing.prop")]) == 2

    def test_domain_error_exits_1(self, capsys, prop_files):
        assert main(["distfn", "--property", str(prop_files["trans"]), "--kmax", "1"]) == 1

    def test_byte_identical_reruns(self, capsys, prop_files):
        args = [
            "distfn", "--property", str(prop_files["rainbow"]), "--kmax", "2",
            "--p", "1/3,1/3,1/3",
        ]
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second
