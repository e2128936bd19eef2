import json

import pytest

from psc import cli
from psc import embedding as emb


def run(argv):
    return cli.main(argv)


@pytest.fixture
def w11(tmp_path):
    path = tmp_path / "w11.pg"
    assert run(["gen", "--family", "wegner", "--delta", "11",
                "-o", str(path)]) == 0
    return path


@pytest.fixture
def tri(tmp_path):
    path = tmp_path / "t.pg"
    assert run(["gen", "--family", "stacked", "--n", "50", "--seed", "7",
                "-o", str(path)]) == 0
    return path


def test_gen_wegner(w11):
    g = emb.from_pg(w11.read_text())
    assert g.n == 18 and g.max_degree() == 11


def test_gen_stacked(tri):
    g = emb.from_pg(tri.read_text())
    assert g.n == 50 and g.m == 144


def test_gen_bad_delta(capsys):
    assert run(["gen", "--family", "wegner", "--delta", "8"]) == 2
    assert "delta" in capsys.readouterr().err


def test_gen_seed_env(tmp_path, monkeypatch):
    a = tmp_path / "a.pg"
    b = tmp_path / "b.pg"
    monkeypatch.setenv("PSC_SEED", "99")
    run(["gen", "--family", "stacked", "--n", "20", "-o", str(a)])
    monkeypatch.delenv("PSC_SEED")
    run(["gen", "--family", "stacked", "--n", "20", "--seed", "99",
         "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_color_exact_wegner(w11, capsys):
    assert run(["color", "--mode", "exact", str(w11)]) == 0
    assert "palette=17" in capsys.readouterr().out


def test_color_constructive(tri, capsys):
    assert run(["color", "--mode", "constructive", str(tri)]) == 0
    out = capsys.readouterr().out
    assert "verified=yes" in out


def test_color_constructive_json(tri, tmp_path):
    out = tmp_path / "c.json"
    assert run(["color", "--mode", "constructive", "--json", str(tri),
                "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["verified"] is True
    assert obj["palette"] <= 2 * 11 + 7 or obj["palette"] <= 2 * emb.from_pg(
        tri.read_text()).max_degree() + 7
    assert obj["trace"][-1]["terminal"]["palette"] >= 1


def test_color_greedy(tri, capsys):
    assert run(["color", "--mode", "greedy", str(tri)]) == 0
    assert "verified=yes" in capsys.readouterr().out


def test_color_budget_failure(w11):
    assert run(["color", "--mode", "dsatur", "--budget", "3", str(w11)]) == 1


def test_audit_text(w11, capsys):
    assert run(["audit", str(w11)]) == 0
    assert "sum=-12/1" in capsys.readouterr().out


def test_audit_json(tmp_path, capsys):
    k4 = tmp_path / "k4.pg"
    run(["gen", "--family", "k4", "-o", str(k4)])
    assert run(["audit", "--json", str(k4)]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["sum_final"] == "-12/1"
    assert len(obj["negatives"]) == 4


def test_detect(tmp_path, capsys):
    k4 = tmp_path / "k4.pg"
    run(["gen", "--family", "k4", "-o", str(k4)])
    assert run(["detect", "--all", str(k4)]) == 0
    ws = json.loads(capsys.readouterr().out)
    assert any(w["kind"] == "W_Deg3Triangle" for w in ws)


def test_detect_first(w11, capsys):
    assert run(["detect", str(w11)]) == 0
    ws = json.loads(capsys.readouterr().out)
    assert len(ws) == 1 and ws[0]["kind"] == "Deg2"


def test_verify_roundtrip(tri, tmp_path, capsys):
    cjson = tmp_path / "c.json"
    run(["color", "--mode", "constructive", "--json", str(tri),
         "-o", str(cjson)])
    obj = json.loads(cjson.read_text())
    plain = tmp_path / "plain.json"
    plain.write_text(json.dumps(
        {"palette": obj["palette"], "colors": obj["colors"]}))
    assert run(["verify", str(tri), str(plain)]) == 0
    assert "valid" in capsys.readouterr().out


def test_verify_invalid(tmp_path, capsys):
    p3 = tmp_path / "p3.pg"
    p3.write_text("n 3\n0: 1\n1: 0 2\n2: 1\n")
    bad = tmp_path / "bad.json"
    bad.write_text('{"palette": 2, "colors": {"0": 1, "1": 2, "2": 1}}')
    assert run(["verify", str(p3), str(bad)]) == 1
    assert "share color" in capsys.readouterr().out


def test_verify_partial(tmp_path):
    p3 = tmp_path / "p3.pg"
    p3.write_text("n 3\n0: 1\n1: 0 2\n2: 1\n")
    part = tmp_path / "part.json"
    part.write_text('{"palette": 2, "colors": {"0": 1, "1": 2}}')
    assert run(["verify", str(p3), str(part)]) == 2


def test_missing_input_exit_2(tmp_path):
    assert run(["color", str(tmp_path / "nope.pg")]) == 2


def test_corpus(capsys):
    assert run(["corpus", "--n", "4", "--delta", "9", "--seed", "2"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out


def test_determinism_cli(tri, tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    run(["color", "--mode", "constructive", str(tri), "-o", str(a)])
    run(["color", "--mode", "constructive", str(tri), "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()
