"""Test script"""
import contextlib
import csv
import io
import json
import math
import os
import sys
import traceback
from os import path
from unittest import mock

import pytest

from syndromelab import device
from syndromelab import scriptutils
from syndromelab import specgen
from syndromelab import specreader
from syndromelab import states
from syndromelab import __main__ as main


_GOLDEN = path.join(path.dirname(path.realpath(__file__)), "golden")


def run(*args):
    """Run a command line and return if it ran successfully"""
    try:
        main.amain(*args)
    except SystemExit as ex:
        return not int(str(ex))
    except Exception:  # pylint: disable=broad-except
        traceback.print_exc()
        return False
    return True


def stdin(inp):
    """Patch stdin with input"""
    return mock.patch.object(sys, "stdin", io.StringIO(inp))


def stdout():
    """Patch stdout and return stringio"""
    return contextlib.redirect_stdout(io.StringIO())


def stderr():
    """Patch stderr and return stringio"""
    return contextlib.redirect_stderr(io.StringIO())


def read_csv(text):
    """Parse csv output into a header and rows"""
    header, *rows = csv.reader(io.StringIO(text))
    return header, rows


@pytest.fixture(scope="session", name="spec_file")
def fix_spec_file(tmpdir_factory):
    """File with a spec"""
    spec_file = str(tmpdir_factory.mktemp("specs").join("example4.json"))
    with open(spec_file, "w") as fil:
        specreader.dump(specgen.example4(), fil)
    return spec_file


def test_help():
    """Test getting help by itself"""
    with stdout() as out, stderr():
        assert not run()
    assert "commands" in out.getvalue()
    with stdout() as out:
        assert run("--help")
    for command in ["validate", "run", "sweep", "suite", "emit-qasm", "device-info"]:
        assert command in out.getvalue()


@pytest.mark.parametrize(
    "cmd", ["validate", "val", "run", "sweep", "suite", "emit-qasm", "qasm", "dev"]
)
def test_command_help(cmd):
    """Test help for each command"""
    with stdout() as out, stderr():
        assert run(cmd, "--help")
    assert "--out" in out.getvalue()


def test_version():
    """Test the version flag"""
    with stdout() as out, stderr():
        assert run("-V")
    assert "1.0.0" in out.getvalue()


def test_bad_flag():
    """Test that unknown flags fail"""
    with stderr() as err:
        assert not run("run", "--sideways")
    assert "--sideways" in err.getvalue()


def test_validate():
    """Test validating a valid spec"""
    with stdout() as out:
        assert run("validate", "-s", "example4")
    lines = out.getvalue().splitlines()
    assert lines[0] == "valid"
    assert "parity: Mixed" in lines
    assert "ancilla_entangling: True" in lines
    assert "separable: False" in lines


def test_validate_invalid():
    """Test validating invalid specs"""
    with stdout() as out, stderr():
        assert not run("validate", "-s", '{"representatives": ["00", "11"]}')
    lines = out.getvalue().splitlines()
    assert lines[0] == "invalid"
    assert lines[1].startswith("complement: ")


def test_validate_json():
    """Test json validation output"""
    with stdout() as out:
        assert run("val", "-s", "bell-", "-f", "json")
    result = json.loads(out.getvalue())
    assert result["valid"]
    assert result["violations"] == []
    assert result["sign"] == "-"
    assert result["parity"] == "AllEven"
    assert math.isclose(result["concurrence"], 1)

    with stdout() as out, stderr():
        assert not run(
            "validate",
            "-f",
            "json",
            "-s",
            '{"n": 1, "representatives": ["00", "00", "0a"]}',
        )
    result = json.loads(out.getvalue())
    assert not result["valid"]
    assert {v["kind"] for v in result["violations"]} == {"duplicate", "bad-ket"}


def test_validate_sources(spec_file):
    """Test spec files and stdin"""
    with stdout() as out:
        assert run("validate", "-s", spec_file)
    assert out.getvalue().startswith("valid\n")
    with stdin(specreader.dumps(specgen.psi())), stdout() as out:
        assert run("validate", "-s", "-")
    assert "representatives: 1" in out.getvalue().splitlines()


def test_unparsable_spec():
    """Test specs that aren't json"""
    with stderr():
        assert not run("validate", "-s", "not a spec")


def test_run_bit_flip():
    """Test a full bit flip"""
    with stdout() as out:
        assert run("run", "-s", "bell", "-e", "X:pi")
    assert out.getvalue() == (
        "00 0.000000 NoError\n"
        "10 1.000000 BitFlip\n"
        "01 0.000000 PhaseFlip\n"
        "11 0.000000 Both\n"
        "modal outcome 10: BitFlip\n"
    )


def test_run_parity_qubit():
    """Test phase flips on the appended qubit go undetected"""
    with stdout() as out:
        assert run("run", "-e", "Z:pi", "-t", "12")
    lines = out.getvalue().splitlines()
    assert lines[0] == "00 1.000000 NoError"
    assert lines[-1] == "modal outcome 00: NoError"


def test_run_negative_sign():
    """Test outcomes relative to the baseline"""
    with stdout() as out:
        assert run("run", "-s", "bell-")
    lines = out.getvalue().splitlines()
    assert lines[0] == "00 0.000000 PhaseFlip"
    assert lines[2] == "01 1.000000 NoError"
    assert lines[-1] == "modal outcome 01: NoError"


def test_run_json():
    """Test json run output"""
    with stdout() as out:
        assert run(
            "run", "-s", "ghz:4", "-e", "X:pi/3,Y:2pi/3", "-t", "2", "-f", "json"
        )
    result = json.loads(out.getvalue())
    assert result["error"] == "X_{pi/3}Y_{2pi/3}"
    assert result["target"] == 2
    assert result["baseline"] == "00"
    assert [row["outcome"] for row in result["outcomes"]] == ["00", "10", "01", "11"]
    assert math.isclose(sum(row["probability"] for row in result["outcomes"]), 1)
    assert all("counts" not in row for row in result["outcomes"])


def test_run_shots():
    """Test sampled runs"""
    args = ("run", "-s", "bell", "-e", "Y:pi/3", "-m", "shots", "-n", "1000")
    with stdout() as out:
        assert run(*args, "--seed", "3", "-f", "json")
    result = json.loads(out.getvalue())
    assert sum(row["counts"] for row in result["outcomes"]) == 1000
    assert result["class_mode"] == "NoError"

    with stdout() as first:
        assert run(*args, "--seed", "3")
    with mock.patch.dict(os.environ, {scriptutils.SEED_VARIABLE: "3"}):
        with stdout() as second:
            assert run(*args)
    assert first.getvalue() == second.getvalue()
    assert len(first.getvalue().splitlines()[0].split()) == 4


def test_run_bad_seed():
    """Test invalid seed variables"""
    args = ("run", "-s", "bell", "-m", "shots")
    with mock.patch.dict(os.environ, {scriptutils.SEED_VARIABLE: "abc"}):
        with stderr():
            assert not run(*args)
    with stderr():
        assert not run(*args, "--seed", "-1")
        assert not run(*args, "-n", "0")


def test_run_errors():
    """Test invalid errors and targets"""
    with stderr():
        assert not run("run", "-s", "bell", "-e", "Q:pi")
        assert not run("run", "-s", "bell", "-e", "X", "-t", "3")
        assert not run("run", "-s", "ghz:3")


def test_sweep():
    """Test the default sweep"""
    with stdout() as out:
        assert run("sweep", "-s", "bell")
    header, rows = read_csv(out.getvalue())
    assert header == ["theta", "p00", "p10", "p01", "p11", "class_mode"]
    assert len(rows) == 31
    assert math.isclose(float(rows[0][0]), -math.pi)
    assert math.isclose(float(rows[15][1]), 1)
    assert rows[15][5] == "NoError"
    assert math.isclose(float(rows[-1][4]), 1)
    assert rows[-1][5] == "Both"
    for row in rows:
        assert math.isclose(sum(map(float, row[1:5])), 1)


def test_sweep_grid():
    """Test explicit grids and axes"""
    with stdout() as out:
        assert run("sweep", "-a", "x", "--theta-grid=-10pi/15", "-s", "paper13")
    _, rows = read_csv(out.getvalue())
    assert len(rows) == 1
    assert [round(float(p), 10) for p in rows[0][1:5]] == [0.25, 0.75, 0, 0]
    assert rows[0][5] == "BitFlip"

    with stdout() as out:
        assert run("sweep", "-a", "Z", "-g", "0:pi:3", "-f", "json", "-s", "bell")
    result = json.loads(out.getvalue())
    assert len(result) == 3
    assert math.isclose(result[1]["theta"], math.pi / 2)
    assert math.isclose(result[2]["p01"], 1)
    assert result[2]["class_mode"] == "PhaseFlip"


def test_sweep_processes():
    """Test that processes don't change sweeps"""
    args = ("sweep", "-s", "example4", "--theta-grid=-pi:pi:5")
    args += ("-m", "shots", "-n", "500")
    with stdout() as first:
        assert run(*args, "--seed", "2")
    with stdout() as second:
        assert run(*args, "--seed", "2", "-p", "2")
    assert first.getvalue() == second.getvalue()


def test_sweep_bad_grid():
    """Test invalid grids"""
    with stderr():
        assert not run("sweep", "-s", "bell", "-g", "0:pi")
        assert not run("sweep", "-s", "bell", "-g", "0:pi:0")
        assert not run("sweep", "-s", "bell", "-g", "zero")
        assert not run("sweep", "-s", "bell", "-a", "W")


def test_suite():
    """Test the named error table"""
    with stdout() as out:
        assert run("suite", "-s", "bell")
    header, rows = read_csv(out.getvalue())
    assert header == ["error", "p00", "p10", "p01", "p11", "class_mode"]
    assert [row[0] for row in rows] == [
        "Y_{pi/3}",
        "X_{pi/3}",
        "X_{pi/3}Y_{pi/3}",
        "X_{pi/3}Y_{2pi/3}",
        "X_{2pi/3}Y_{pi/3}",
        "X_{2pi/3}Y_{2pi/3}",
        "R",
        "H",
    ]
    assert rows[0][5] == "NoError"
    assert math.isclose(float(rows[5][3]), 0.5625)
    assert rows[5][5] == "PhaseFlip"


def test_suite_json_shots():
    """Test sampled suites"""
    with stdout() as out:
        assert run(
            "suite", "-s", "psi-", "-t", "1", "-m", "shots", "-n", "200", "-f", "json"
        )
    result = json.loads(out.getvalue())
    assert len(result) == 8
    for row in result:
        total = sum(row[key] for key in ["p00", "p10", "p01", "p11"])
        assert math.isclose(total, 1)


def test_emit_qasm():
    """Test emission against the stored program"""
    with open(path.join(_GOLDEN, "bell.qasm")) as fil:
        expected = fil.read()
    with stdout() as out:
        assert run("emit-qasm", "-s", "bell")
    assert out.getvalue() == expected
    with stdout() as out:
        assert run("qasm", "-s", "bell", "-c", "exact")
    assert out.getvalue() == expected


def test_emit_qasm_error():
    """Test emission with errors"""
    with stdout() as out:
        assert run("emit-qasm", "-s", "bell", "-e", "X:pi/3", "-c", "exact")
    assert "u3(pi/3,-pi/2,pi/2) q[0];" in out.getvalue().splitlines()
    with stderr():
        assert not run("emit-qasm", "-s", "bell", "-e", "X", "-t", "5")
        assert not run("emit-qasm", "-s", "bell", "--register-size", "3")
        assert not run("emit-qasm", "-s", "bell", "-l", "0,1,2,3,4")


def test_emit_qasm_device():
    """Test emission placed on the device"""
    with stdout() as out, stderr():
        assert run("emit-qasm", "-s", "bell", "-d", "-l", "0,2,1,3,15")
    text = out.getvalue()
    assert "qreg q[16];" in text.splitlines()
    assert device.lint_qasm(text) == []
    with stderr():
        assert not run("emit-qasm", "-s", "bell", "-d", "-l", "0,0,1,2,3")
        assert not run("emit-qasm", "-s", "bell", "-d", "-l", "0,x")


def test_device_info():
    """Test device text output"""
    with stdout() as out:
        assert run("device-info")
    text = out.getvalue()
    assert text == device.dumps(device.builtin_ibmqx5())

    with stdout() as out:
        assert run("dev", "-s", "bell")
    lines = out.getvalue().splitlines()
    start = lines.index("[legality]") + 1
    assert len(lines[start:]) == 7
    assert lines[start] == "0 2 -> Q0 Q2 illegal 2"


def test_device_info_json():
    """Test device json output"""
    with stdout() as out:
        assert run("device-info", "-f", "json", "-s", "bell", "-l", "0,2,1,3,15")
    result = json.loads(out.getvalue())
    assert result["name"] == "ibmqx5"
    assert len(result["qubits"]) == 16
    assert math.isclose(result["qubits"][0]["frequency"], 5.26)
    assert len(result["coupling"]) == 22
    assert result["legality"][0] == {
        "control": 0,
        "target": 2,
        "physical": [0, 1],
        "category": "reversible",
        "distance": 1.0,
    }


def test_output_file(tmpdir):
    """Test writing to files"""
    out_file = str(tmpdir.join("sweep.csv"))
    args = ("sweep", "-s", "bell", "-g", "0,pi", "-o", out_file)
    assert run(*args)
    with open(out_file) as fil:
        header, rows = read_csv(fil.read())
    assert header[0] == "theta"
    assert len(rows) == 2
    with stderr():
        assert not run(*args)
    assert run(*args, "--force")


def test_parse_grid():
    """Test theta grid syntax"""
    grid = scriptutils.parse_grid(None)
    assert len(grid) == 31
    assert math.isclose(grid[0], -math.pi)
    assert grid[15] == 0
    assert math.isclose(grid[-1], math.pi)
    grid = scriptutils.parse_grid("-pi:pi:5")
    assert [round(t / math.pi, 10) for t in grid] == [-1, -0.5, 0, 0.5, 1]
    grid = scriptutils.parse_grid("0, pi/3 ,2pi/3")
    assert len(grid) == 3
    assert math.isclose(grid[2], 2 * math.pi / 3)
    for text in ["", "0:1", "0:1:x", "a:b:2", "0:1:2:3"]:
        with pytest.raises(ValueError):
            scriptutils.parse_grid(text)


def test_resolve_seed():
    """Test seed resolution order"""
    with mock.patch.dict(os.environ, {scriptutils.SEED_VARIABLE: "7"}):
        assert scriptutils.resolve_seed(None) == 7
        assert scriptutils.resolve_seed(2) == 2
    with mock.patch.dict(os.environ, clear=True):
        assert scriptutils.resolve_seed(None) == 0


def test_load_spec(spec_file):
    """Test spec sources"""
    assert scriptutils.load_spec("bell") == specgen.bell()
    assert scriptutils.load_spec(spec_file) == specgen.example4()
    assert scriptutils.load_spec('{"representatives": ["01"]}') == specgen.psi()
    with pytest.raises(ValueError):
        scriptutils.load_spec("missing.json")


def test_load_spec_long_inline():
    """Test inline specs longer than a file name can be"""
    reps = states.pair_representatives(6)[:40]
    text = json.dumps({"n": 6, "representatives": reps})
    assert len(text) > 255
    spec = scriptutils.load_spec(text)
    assert spec.n == 6
    assert spec.representatives == tuple(reps)
    with stdout() as out:
        assert run("validate", "-s", text)
    assert out.getvalue().splitlines()[0] == "valid"


def test_load_spec_directory():
    """Test that directories are parsed as json and rejected"""
    with pytest.raises(ValueError):
        scriptutils.load_spec(_GOLDEN)
    with stderr():
        assert not run("validate", "-s", _GOLDEN)
