"""Command-line interface: report shapes, determinism, golden outputs,
and error handling."""

import json
import pathlib

import pytest

from diskew.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 0, err
    return json.loads(out)


def test_verify_report(capsys):
    report = run_json(capsys, ["--preset", "weyl-q", "verify"])
    assert report["command"] == "verify"
    assert report["inputs"] == {"spec": "weyl-q"}
    assert report["results"]["gwa"]["ok"] is True


def test_mul_and_normal_form(capsys):
    report = run_json(capsys, ["--preset", "weyl-q", "mul", "x", "y"])
    assert report["results"]["product"] == "h - 1"
    report = run_json(capsys, ["--preset", "weyl-q", "normal-form", "y", "x"])
    assert report["results"]["normal_form"] == "h"
    report = run_json(capsys, ["--preset", "usl2-dpr", "mul", "x", "y"])
    assert report["results"]["product"] == "y*x + 2*H"


def test_structure_constants(capsys):
    report = run_json(
        capsys, ["--preset", "weyl-q", "structure-constants", "--range", "2"]
    )
    table = {(row["n"], row["m"]): row["value"] for row in report["results"]["table"]}
    assert table[(2, -2)] == "h^2 - 3*h + 2"
    assert table[(-2, 2)] == "h^2 + h"


def test_to_gwa(capsys):
    report = run_json(capsys, ["--preset", "usl2-dpr", "to-gwa"])
    assert report["results"]["sigma_h"] == "h + 2*H"
    assert report["results"]["tau_h"] == "h - 2*H - 2"


def test_roundtrip_and_bi_table(capsys):
    report = run_json(
        capsys, ["--preset", "usl2-dpr", "roundtrip", "--samples", "20"]
    )
    assert report["results"]["ok"] is True
    report = run_json(capsys, ["--preset", "usl2-dpr", "bi-table", "--max", "2"])
    assert [row["b_i"] for row in report["results"]["rows"]] == ["2*H", "4*H - 2"]


def test_normal_element(capsys):
    report = run_json(capsys, ["--preset", "usl2-dpr", "alpha-solve"])
    assert report["results"]["alpha"] == "H^2 + H"
    report = run_json(capsys, ["--preset", "usl2-dpr", "normal-element"])
    assert report["results"]["exists"] is True
    assert report["results"]["element"] == "h + H^2 + H"
    assert report["results"]["checks"]["ok"] is True


def test_simplicity_verdicts(capsys):
    report = run_json(capsys, ["--preset", "weyl-q", "simplicity"])
    assert report["results"]["gwa"]["verdict"] == "Simple"
    report = run_json(capsys, ["--preset", "weyl-fp", "--p", "3", "simplicity"])
    assert report["results"]["gwa"]["verdict"] == "NotSimple"
    report = run_json(capsys, ["--preset", "usl2-dpr", "simplicity"])
    assert report["results"]["dpr"]["witness"] == ["no_normal_element", "H^2 + H"]


def test_iprime_and_involution(capsys):
    report = run_json(
        capsys, ["--preset", "weyl-q", "iprime", "--ideal", "h", "--depth", "1"]
    )
    assert report["results"]["generators"] == ["1"]
    report = run_json(capsys, ["--preset", "weyl-q", "involution-check"])
    assert report["results"]["ok"] is True


def test_padic_commands(capsys):
    report = run_json(capsys, ["lucas", "10", "4", "3"])
    assert report["results"]["value"] == 0
    report = run_json(capsys, ["neighbour", "50", "5"])
    assert report["results"]["value"] == 25


def test_spec_file(tmp_path, capsys):
    spec = tmp_path / "algebra.toml"
    spec.write_text(
        """
[ring]
kind = "poly"
field = "Q"
vars = ["h"]

[endo.sigma]
h = "h - 1"

[endo.tau]
h = "h + 1"

[gwa]
sigma = "sigma"
tau = "tau"
a = "h"
"""
    )
    report = run_json(capsys, ["--spec", str(spec), "mul", "y", "x"])
    assert report["results"]["product"] == "h"


def test_error_paths(capsys):
    code, out, err = run(capsys, ["--preset", "weyl-q", "mul", "x", "z"])
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert payload["error"] == "UnknownVariable"
    code, _, err = run(capsys, ["--preset", "weyl-q", "to-gwa"])
    assert code == 2
    assert json.loads(err)["error"] == "SpecInvalid"
    with pytest.raises(SystemExit):
        main(["verify"])  # neither --spec nor --preset


GOLDEN_CASES = {
    "weyl-q-simplicity.json": ["--preset", "weyl-q", "simplicity"],
    "weyl-fp3-simplicity.json": ["--preset", "weyl-fp", "--p", "3", "simplicity"],
    "usl2-dpr-normal-element.json": ["--preset", "usl2-dpr", "normal-element"],
    "usl2-dpr-to-gwa.json": ["--preset", "usl2-dpr", "to-gwa"],
    "weyl-q-structure-constants.json": [
        "--preset", "weyl-q", "structure-constants", "--range", "2",
    ],
    "rank2-weyl-verify.json": ["--preset", "rank2-weyl", "verify"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs(capsys, name):
    code, out, err = run(capsys, GOLDEN_CASES[name])
    assert code == 0, err
    expected = (GOLDEN / name).read_text()
    assert out == expected
