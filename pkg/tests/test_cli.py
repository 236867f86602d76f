import io
import json
import subprocess
import sys

import pytest

from kriordan.cli import main
from kriordan.riordan import pascal, to_matrix
from oracles import pascal_rows


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_matrix_csv_is_pascal():
    code, out, _ = run("matrix", "--g", "1/(1-z)", "--f", "z/(1-z)", "--trunc", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\\k,0,1,2,3,4,5"
    rows = [[int(x) for x in line.split(",")[1:]] for line in lines[1:]]
    assert rows == pascal_rows(5)


def test_verify_phi():
    code, out, _ = run("verify", "--map", "phi", "--trials", "20", "--trunc", "16", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "report" and doc["trunc"] == 16
    assert doc["verified"] and doc["failures"] == []


def test_rmul_matches_matrix_of_product():
    code, out, _ = run("rmul", "--g", "1/(1-z)", "--f", "z/(1-z)", "--trunc", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "array" and doc["k"] == 1
    g, (f,) = " + ".join(f"({c})*z^{i}" for i, c in enumerate(doc["g"])), doc["multipliers"]
    f = " + ".join(f"({c})*z^{i}" for i, c in enumerate(f))
    code, out, _ = run("matrix", "--g", g, "--f", f, "--trunc", "6")
    m = to_matrix(pascal(6))
    assert json.loads(out)["rows"] == [[str(c) for c in row] for row in (m @ m).rows]


def test_k_array_commands():
    base = ["--g", "1/(1-z^2)", "--m", "z", "--m", "z/(1-z^2)", "--trunc", "8"]
    code, out, _ = run("rinv", *base)
    assert code == 0 and json.loads(out)["k"] == 2
    code, out, _ = run("rmul", *base, "--g2", "1", "--m2", "z", "--m2", "z")
    assert json.loads(out)["g"] == ["1", "0", "1", "0", "1", "0", "1", "0", "1"]
    code, out, _ = run("apply", *base, "--a", "1")
    assert json.loads(out)["coeffs"] == json.loads(run("eval", "1/(1-z^2)", "--trunc", "8")[1])["coeffs"]
    code, out, _ = run("map", "--map", "chi", *base, "--format", "pretty")
    assert out.splitlines()[1] == "m1 = z + O(z^9)"


def test_map_phi():
    code, out, _ = run("map", "--map", "phi", "--g", "1/(1-z)", "--f", "z/(1-z)", "--trunc", "6")
    doc = json.loads(out)
    assert doc["g"] == ["1", "0", "1", "0", "1", "0", "1"]
    assert doc["multipliers"][0] == ["0", "1", "0", "0", "0", "0", "0"]
    assert doc["multipliers"][1] == ["0", "1", "0", "1", "0", "1", "0"]


def test_rationals_rendered_exactly():
    code, out, _ = run("eval", "1/(2-z)", "--trunc", "3")
    assert json.loads(out)["coeffs"] == ["1/2", "1/4", "1/8", "1/16"]
    code, out, _ = run("eval", "1/(2-z)", "--trunc", "2", "--format", "csv")
    assert out == "n,coeff\n0,1/2\n1,1/4\n2,1/8\n"


@pytest.mark.parametrize("argv, status", [
    (["eval", "1/z"], 1),
    (["map", "--map", "psi", "--g", "1/(1-z)", "--f", "z/(1-z)"], 1),
    (["matrix", "--g", "z", "--f", "z"], 1),
    (["eval", "1/(1-"], 2),
    (["verify", "--map", "bogus"], 2),
    (["matrix", "--g", "1"], 2),
    (["frobnicate"], 2),
    (["eval", "z", "--trunc", "0"], 2),
])
def test_exit_codes(argv, status):
    code, out, err = run(*argv)
    assert code == status
    assert out == ""
    assert json.loads(err)["kind"] == "error"


def test_syntax_error_document():
    _, _, err = run("eval", "1/(1-")
    doc = json.loads(err)
    assert doc["position"] == 6 and "z" in doc["expected"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kriordan", "eval", "1+z", "--trunc", "2",
                           "--format", "pretty"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1 + z + O(z^3)\n"
