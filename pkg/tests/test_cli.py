import io
import json
import subprocess
import sys

import pytest

from biregular.cli import dispatch


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_info_k4():
    code, rep, _ = run_json("info", "--graph6", "C~")
    assert code == 0
    assert rep["command"] == "info" and rep["exact"] is True
    p = rep["payload"]
    assert p["kind"] == "regular" and p["d"] == 3 and p["graph6"] == "C~"


def test_info_star_family():
    code, rep, _ = run_json("info", "--family", "star:3")
    p = rep["payload"]
    assert (p["d1"], p["d2"], p["n1"], p["n2"]) == (1, 3, 3, 1)


def test_edges_file(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0-1\n1-2\n2-3\n")
    code, rep, _ = run_json("charpoly", "--edges", str(f), "--matrix", "Q")
    assert code == 0
    assert rep["payload"]["charpoly"] == [0, -4, 10, -6, 1]


def test_charpoly_nl_fractions():
    code, rep, _ = run_json("charpoly", "--family", "complete:4", "--matrix", "NL")
    assert rep["payload"]["charpoly"] == [0, "-64/27", "16/3", -4, 1]


def test_relate_p4():
    code, rep, _ = run_json("relate", "--family", "path:4", "--x", "A", "--y", "Q")
    p = rep["payload"]
    assert code == 0 and p["nontrivial"] and p["kernel_dim"] == 1
    assert p["pairs"] == [[[0, -2, 0, 1], [-1, 6, -5, 1]]]


def test_relate_power_radical():
    code, rep, _ = run_json("relate", "--family", "star:3", "--x", "NL", "--y", "A", "--power", "1")
    p = rep["payload"]
    assert p["exists"] and p["f"] == [1, {"3": "-1/3"}]


def test_identity_exit_codes():
    ok = run("identity", "--family", "path:4", "--x", "A", "--y", "Q", "--f", "0,-2,0,1", "--g=-1,6,-5,1")
    assert ok[0] == 0 and "holds: true" in ok[1]
    bad = run("identity", "--family", "path:4", "--x", "A", "--y", "Q", "--f", "0,-2,0,1", "--g=-2,6,-5,1")
    assert bad[0] == 2


def test_trees_methods():
    for method in ("matrixtree", "spectral", "cube"):
        code, rep, _ = run_json("trees", "--family", "cube:4,2", "--method", method)
        assert code == 0 and rep["payload"]["spanning_trees"] == 128
    code, rep, _ = run_json("trees", "--family", "subspace:3,1,2", "--method", "subspace")
    assert rep["payload"]["spanning_trees"] == 1


def test_transport_and_verify():
    code, rep, _ = run_json("transport", "--family", "kbip:2,3")
    assert code == 0 and rep["payload"]["matches_direct"]
    code, rep, _ = run_json("verify-biregular", "--family", "kbip:2,3")
    assert code == 0 and rep["payload"]["q_identity"]


def test_jpoly_petersen():
    code, rep, _ = run_json("jpoly", "--family", "petersen")
    assert rep["payload"]["srg_params"] == [10, 3, 0, 1]


def test_scan_small():
    code, rep, _ = run_json("scan", "--nmax", "5", "--check", "con_square", "--check", "lemma_conditions")
    assert code == 0 and rep["payload"]["counterexamples"] == []
    assert rep["payload"]["connected_count"] == 1 + 2 + 6 + 21


def test_errors():
    assert run("info")[0] == 1
    assert run("info", "--graph6", "C~", "--family", "star:3")[0] == 1
    assert run("info", "--graph6", "C" + chr(127))[0] == 1
    assert run("verify-biregular", "--family", "paw")[0] == 1
    assert run("jpoly", "--family", "path:3")[0] == 1
    assert run("relate", "--family", "paw", "--x", "A", "--y", "NL")[0] == 1
    assert run("scan", "--nmax", "9")[0] == 1
    assert run("bogus")[0] == 1


def test_text_json_parity():
    _, text, _ = run("info", "--family", "paw")
    _, rep, _ = run_json("info", "--family", "paw")
    for key, value in rep["payload"].items():
        shown = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
        assert f"{key}: {shown}" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "biregular", "info", "--graph6", "C~"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "kind: regular" in proc.stdout
