import json
import subprocess
import sys

import pytest

from hopfkit.cli import main
from hopfkit.io import dumps, hopf_to_json, load, save
from hopfkit.qt import QTStructure

from mutations import mutate_mult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, sw):
    sw_path = tmp_path / "sweedler.json"
    save(hopf_to_json(sw), sw_path)
    bad = tmp_path / "mutated.json"
    save(hopf_to_json(QTStructure(mutate_mult(sw.H, 2, 1, 0), sw.R)), bad)
    garbage = tmp_path / "garbage.json"
    garbage.write_text('{"kind": "hopf", "conductor": 1')
    return {"sw": str(sw_path), "bad": str(bad), "garbage": str(garbage), "dir": tmp_path}


def test_verify_exit_codes(capsys, files):
    assert run(capsys, "verify", files["sw"])[0] == 0
    code, out, _ = run(capsys, "verify", files["bad"])
    assert code == 1 and "associativity" in out and "FAIL" in out.upper()
    code, _, err = run(capsys, "verify", files["garbage"])
    assert code == 2 and "error" in err
    assert run(capsys, "verify", str(files["dir"] / "missing.json"))[0] == 2


def test_verify_json(capsys, files):
    code, out, _ = run(capsys, "verify", files["bad"], "--json")
    d = json.loads(out)
    assert code == 1 and d["ok"] is False
    assert d["axioms"]["associativity"]["witness"] is not None


def test_report_sweedler(capsys, files):
    code, out, _ = run(capsys, "report", files["sw"], "--json")
    d = json.loads(out)
    assert code == 0
    expected = dict(factorizable=False, weakly_factorizable=False, muger_trivial=False,
                    omega_rank=1, dim_cf=2, dim_ce=1, consistent=True)
    assert {k: d[k] for k in expected} == expected


def test_report_zoo_refs(capsys):
    d = json.loads(run(capsys, "report", "zoo://gbichar:4:1:4", "--json")[1])
    assert (d["factorizable"], d["weakly_factorizable"], d["muger_trivial"], d["omega_rank"]) == (False, False, False, 2)
    assert run(capsys, "report", "zoo://group:3")[0] == 2  # no R-matrix
    assert run(capsys, "report", "zoo://nonsense")[0] == 2


def test_zoo_build_then_report(capsys, tmp_path):
    out = tmp_path / "u3.json"
    assert run(capsys, "zoo", "build", "uqsl2:3", "-o", str(out))[0] == 0
    code, text, _ = run(capsys, "report", str(out), "--json")
    d = json.loads(text)
    assert code == 0 and d["consistent"] and d["factorizable"]


def test_zoo_build_stdout_is_canonical(capsys):
    code, text, _ = run(capsys, "zoo", "build", "sweedler")
    from hopfkit.zoo import build

    assert code == 0 and text == dumps(hopf_to_json(build("sweedler")))


def test_zoo_list(capsys):
    code, text, _ = run(capsys, "zoo", "list")
    assert code == 0 and "sweedler" in text.split()


def test_crosscheck(capsys, files):
    code, text, _ = run(capsys, "crosscheck", "zoo://all", "--skip-large")
    assert code == 0
    assert text.count("ok  ") == 9
    code, text, _ = run(capsys, "crosscheck", files["sw"], files["bad"])
    assert code == 1


def test_pointed(capsys):
    code, text, _ = run(capsys, "pointed", "--group", "4", "--chi", "1", "--root", "4", "--json", "--bridge")
    d = json.loads(text)
    assert code == 0
    assert d["radical_order"] == 2 and d["omega_rank"] == 2 == d["hopf_omega_rank"]
    assert d["identities_ok"] and d["bridge_ok"]
    code, text, _ = run(capsys, "pointed", "--group", "12x3", "--chi", "1,0,0,4", "--root", "12", "--json")
    assert code == 0 and json.loads(text)["subgroups_checked"] > 0
    assert run(capsys, "pointed", "--group", "12x3", "--chi", "1,0,0,1", "--root", "12")[0] == 2
    assert run(capsys, "pointed", "--group", "4", "--chi", "1,2", "--root", "4")[0] == 2


def test_yd_commands(capsys, tmp_path):
    d = tmp_path / "yd"
    assert run(capsys, "yd", "build", "3", "--out-dir", str(d))[0] == 0
    base = ["--over", str(d / "B.json"), "--base", str(d / "H.json")]
    for name in ("P", "Q", "T", "REG"):
        assert run(capsys, "yd", "verify", str(d / f"{name}.json"), *base)[0] == 0
    code, text, _ = run(capsys, "yd", "muger", str(d / "P.json"), *base)
    assert code == 0 and text.strip() == "false"
    code, text, _ = run(capsys, "yd", "muger", str(d / "T.json"), *base)
    assert code == 0 and text.strip() == "true"
    d2 = json.loads(run(capsys, "yd", "muger", str(d / "Q.json"), *base, "--json")[1])
    assert d2["member"] is False and d2["witness"]


def test_yd_mutated_module(capsys, tmp_path):
    d = tmp_path / "yd"
    run(capsys, "yd", "build", "3", "--out-dir", str(d))
    obj = load(d / "P.json")
    obj["coact"]["entries"][0][2] = "2"
    save(obj, d / "P_bad.json")
    base = ["--over", str(d / "B.json"), "--base", str(d / "H.json")]
    assert run(capsys, "yd", "verify", str(d / "P_bad.json"), *base)[0] == 1


def test_reports_deterministic(capsys, files):
    a = run(capsys, "report", files["sw"], "--json")[1]
    b = run(capsys, "report", files["sw"], "--json")[1]
    assert a == b


def test_console_script(files):
    r = subprocess.run([sys.executable, "-m", "hopfkit.cli", "verify", files["sw"]], capture_output=True, text=True)
    assert r.returncode == 0
