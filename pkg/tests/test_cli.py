import json

import pytest

from quiverflow import fixture
from quiverflow.cli import main
from quiverflow.jsonio import quiver_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def jordan_file(tmp_path):
    p = tmp_path / "jordan.json"
    p.write_text(json.dumps(quiver_to_dict(*fixture("jordan"))))
    return str(p)


def test_check(capsys, jordan_file):
    code, out, _ = run(capsys, "check", "--quiver", jordan_file)
    assert code == 0 and json.loads(out)["complete"] is True


def test_dims_edgeless(capsys):
    code, out, _ = run(capsys, "dims", "--quiver", "edgeless:2", "--v", "2,3", "--v2", "1,4")
    assert code == 0 and json.loads(out)["ringel_R"] == 2 * 1 + 3 * 4


def test_flow_writes_csv(capsys, tmp_path):
    csv = tmp_path / "traj.csv"
    js = tmp_path / "out.json"
    code, out, _ = run(capsys, "flow", "--quiver", "jordan", "--v", "1,1", "--seed", "3",
                       "--csv-out", str(csv), "--json-out", str(js))
    assert code == 0
    data = json.loads(out)
    assert data["flow"]["status"] == "Converged"
    assert data["classification"]["hn"] == data["start_hn"]
    assert csv.read_text().startswith("t,f,grad_norm\n")
    assert json.loads(js.read_text()) == data


def test_flow_stall_exits_3(capsys):
    code, out, err = run(capsys, "flow", "--quiver", "jordan", "--v", "1,1", "--tol.max_steps=2")
    assert code == 3 and json.loads(out)["classification"] is None and "MaxSteps" in err


def test_precondition_exit_2(capsys):
    assert run(capsys, "flow", "--quiver", "jordan")[0] == 2
    assert run(capsys, "dims", "--quiver", "no-such-quiver", "--v", "1")[0] == 2


def test_usage_exit_64(capsys):
    assert run(capsys)[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys, "verify", "--suite", "nope")[0] == 64
    assert run(capsys, "check", "--quiver", "jordan", "--tol.rank_rtol")[0] == 64


def test_hn_and_slice(capsys):
    code, out, _ = run(capsys, "hn", "--quiver", "jordan", "--v", "2,1")
    assert code == 0 and "hn" in json.loads(out)
    code, out, _ = run(capsys, "slice", "--quiver", "jordan", "--v", "0,1", "--v2", "1,0")
    data = json.loads(out)
    assert code == 0 and data["slice_dim"] == 1


def test_hecke_and_ledger(capsys):
    code, out, _ = run(capsys, "hecke", "--quiver", "jordan", "--v-u", "0,1", "--k", "1")
    assert code == 0 and json.loads(out)["d"] == 0
    code, out, _ = run(capsys, "ledger", "--quiver", "jordan", "--v-u", "0,1", "--k", "1")
    data = json.loads(out)
    assert code == 0 and (data["lambda_u"], data["shift"]) == (2, -2)


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cokernel", "--trials", "3")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["reproduce"] is None


def test_verify_all_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--trials", "1")
    assert code == 0 and json.loads(out)["passed"]
