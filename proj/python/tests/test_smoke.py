import json
import os
import subprocess

import pytest

azrep = pytest.importorskip("azrep")


def k_interval(lo, hi, orientation, vertices, field="gf2"):
    return azrep.interval_rep(lo, hi, orientation, vertices, field)


def test_barcode_of_interval():
    rep = k_interval(0, 3, "RRR", [1, 2])
    bc = azrep.barcode(rep)
    assert bc == {"bars": [{"a": 1, "b": 2, "mult": 1}]}


def test_support_and_membership():
    rep = k_interval(0, 3, "RLR", [0, 1])
    assert azrep.support(rep) == [0, 1]
    assert azrep.member(rep, 3)
    assert not azrep.member(rep, 0)


def test_tensor_intersects_intervals():
    a = k_interval(0, 4, "RRRR", [0, 1, 2, 3])
    b = k_interval(0, 4, "RRRR", [2, 3, 4])
    bc = azrep.barcode(azrep.tensor(a, b))
    assert bc == {"bars": [{"a": 2, "b": 3, "mult": 1}]}


def test_witness_verifies():
    rep = k_interval(0, 2, "RL", [1], field="gf5")
    w = azrep.witness(rep)
    assert w["verified"]
    assert w["trunk"]
    assert w["branch_b"][-1]["dims"] == [1, 1, 1]


def test_certify_rejects_unbounded():
    cert = {
        "seeds": [{"bars": []}, {"bars": [], "dust": [{"offset": 0, "period": 1}]}],
        "steps": [
            {"op": "ext", "args": [0, 1], "claim": {"bars": [{"a": "-inf", "b": "inf"}]}}
        ],
    }
    verdict = azrep.certify(cert)
    assert not verdict["accepted"]
    assert verdict["step"] == 0


def test_certify_accepts_bounded():
    cert = {
        "seeds": [{"bars": []}, {"bars": [], "dust": [{"offset": 0, "period": 1}]}],
        "steps": [
            {"op": "tensor", "args": [1], "claim": {"bars": [{"a": 0, "b": 0}]}},
        ],
    }
    assert azrep.certify(cert)["accepted"]


def test_cli_agrees_with_module(tmp_path):
    cli = os.environ.get("AZREP_CLI")
    if not cli:
        pytest.skip("AZREP_CLI not set")
    rep = k_interval(0, 2, "RR", [0, 1, 2])
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(rep))
    out = subprocess.run(
        [cli, "--json", "barcode", str(path)], capture_output=True, text=True, check=True
    )
    assert json.loads(out.stdout) == azrep.barcode(rep)
