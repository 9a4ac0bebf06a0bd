import io
import json
import subprocess
import sys

import pytest

from nilbalanced.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        code = run(list(argv), out, err)
    except SystemExit as ex:
        code = ex.code
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == "1"
    return doc


def test_classify_text():
    code, out, _ = call("classify", "--family", "F215", "--rho", "0", "--delta", "0", "--s", "1", "--t", "1")
    assert code == 0
    assert out.strip() == "algebra: h3, J: abelian, balanced: yes"


def test_classify_equations_inline():
    doc = call_json("classify", "--equations", "de5 = e13 - e24; de6 = e14 + e23")
    assert doc["algebra"] == "h5"
    assert doc["J"] == "complex-parallelizable"
    assert doc["balanced"] is True


def test_classify_equations_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("(0,0,0,0,12,34)\n")
    doc = call_json("classify", "--equations", str(p))
    assert doc["algebra"] == "h2"


def test_holonomy_parallelizable():
    doc = call_json("holonomy", "--family", "F214", "--t", "1")
    assert doc["dim"] == 8 and doc["label"] == "su3"


def test_strominger_h3():
    args = ("strominger", "--family", "F215", "--rho", "0", "--delta", "0", "--t", "1", "--lambda", "1")
    doc = call_json(*args)
    assert doc["alpha_prime"] == "2/3"
    assert doc["heterotic"] is True
    code, out, _ = call(*args)
    assert "alpha': 2/3" in out and "heterotic: true" in out


def test_strominger_tau_solve():
    doc = call_json("strominger", "--family", "F217", "--s", "1", "--r", "1", "--kind", "chern")
    assert doc["tau2"] == "0"
    doc = call_json("strominger", "--family", "F217", "--s", "1", "--r", "1")
    assert doc["tau2"] == "2/9" and doc["alpha_prime"] == "2"


def test_strominger_external_trace():
    doc = call_json("strominger", "--family", "F215", "--rho", "1", "--b2", "1", "--t", "1",
                    "--external-trace", "-2")
    assert doc["c_instanton_verified"] is False
    assert doc["d_anomaly"] == "solved"


def test_connection_and_build_outputs():
    doc = call_json("connection", "--family", "F214", "--t", "1")
    assert doc["curvature"]["12"] == "2*gamma4"
    assert doc["dT"] == "-4*e1234"
    assert doc["metric"] and doc["J_parallel"]
    doc = call_json("build", "--family", "F214", "--t", "2")
    assert doc["equations"] == ["de5 = 2 e13 - 2 e24", "de6 = 2 e14 + 2 e23"]


def test_ddbar_failure_reports_witness():
    doc = call_json("ddbar", "--family", "F215", "--rho", "1", "--s", "1", "--t", "1")
    assert doc["verdict"] == "fails"
    assert "witness" in doc


def test_float_backend_deformation():
    doc = call_json("holonomy", "--family", "I_lambda", "--lambda", "1/2", "--backend", "float")
    assert doc["dim"] == 8


def test_sweep_grid():
    doc = call_json("sweep", "--family", "F215", "--rho", "0", "--t", "1",
                    "--vary", "delta=0,1", "--vary", "s=1,2")
    rows = doc["rows"]
    assert len(rows) == 4
    assert [r["hol_dim"] for r in rows] == [1, 1, 3, 3]


def test_sweep_empty_grid():
    code, out, _ = call("sweep", "--family", "F215", "--vary", "s=")
    assert code == 0 and out == ""
    assert call_json("sweep", "--family", "F215")["rows"] == []


@pytest.mark.parametrize("argv", [
    ("classify", "--family", "F214", "--t", "abc"),
    ("classify",),
    ("classify", "--family", "F214", "--equations", "de5 = e12"),
    ("classify", "--equations", "de5 = e12; oops"),
    ("nonsense",),
    ("classify", "--family", "F214", "--backend", "quad"),
    ("sweep", "--family", "F215", "--vary", "s"),
])
def test_parse_errors_exit_1(argv):
    code, _, err = call(*argv)
    assert code == 1
    assert err


@pytest.mark.parametrize("argv,needle", [
    (("classify", "--family", "F214", "--t", "0"), "t != 0"),
    (("classify", "--family", "F216", "--s", "1", "--u", "1,1"), "s^2 > |u|^2"),
    (("strominger", "--family", "F215", "--rho", "1", "--lambda", "1"), "abelian"),
    (("classify", "--family", "I_lambda", "--lambda", "1"), "lambda"),
])
def test_precondition_errors_exit_2(argv, needle):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert needle in err and err.count("\n") == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nilbalanced", "holonomy", "--family", "F214"],
                         capture_output=True, text=True, timeout=60)
    assert res.returncode == 0
    assert "dim: 8" in res.stdout
