import json
import subprocess
import sys

import pytest

from toralorders.cli import main

SINGULAR_22 = {"variant": "singular_hj", "q": 7, "m_list": [2, 2], "g": {"prime": "end_left", "value": 2}}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out.out) if out.out else None


def test_hj_json(capsys):
    code, out = run_json(capsys, "hj", "-i", '{"m_list": [3, 2]}')
    assert code == 0
    assert out["type"] == {"m": 5, "k": 2} and out["det"] == 5
    assert out["seed"] == 0 and out["truncation"] == 6


def test_cover(capsys):
    code, out = run_json(capsys, "cover", "-i", '{"m_list": [2]}', "-N", "3")
    assert code == 0 and out["truncation"] == 3


def test_symbol_text(capsys):
    code, out = run(capsys, "symbol", "-i", '{"q": 3, "n": 2, "a": "-1", "b": "-1"}', "-N", "2")
    assert code == 0
    assert "split_witness: 1 + y + x" in out.out


def test_order(capsys):
    code, out = run_json(capsys, "order", "-i", '{"base": {"kind": "dvr", "q": 3}, "d": 3, "z": "s"}', "-N", "4")
    assert code == 0
    assert out["uniformiser"]["t_power_is_z"] and out["simples"]["cycle_type"] == [3]
    assert out["hom_closed_form_agrees"] and out["flags"]["classes"] == 3


def test_order_hj(capsys):
    spec = {"base": {"kind": "hj", "q": 7, "m_list": [2, 2]}, "d": 2, "z": "f1"}
    code, out = run_json(capsys, "order", "-i", json.dumps(spec), "-N", "4")
    assert code == 0 and out["uniformiser"]["t_power_is_z"]


def test_classify_positive(capsys):
    code, out = run_json(capsys, "classify", "-i", json.dumps(SINGULAR_22), "-N", "4")
    assert code == 0 and out["verdict"] == "toral-terminal-singular"
    assert out["presentation"]["formula"] == "M_1(Δ_2(f1))"


def test_classify_negative(capsys):
    bad = {"variant": "regular_no_secondary", "q": 7, "n": 3, "a": 1}
    code, out = run_json(capsys, "classify", "-i", json.dumps(bad))
    assert code == 1 and out["verdict"] == "not-toral-terminal"


def test_classify_missing_roots(capsys):
    code, out = run(capsys, "classify", "-i", '{"variant":"singular_hj","q":5,"m_list":[2,2]}')
    assert code == 2 and "no primitive root of unity" in out.err


@pytest.mark.parametrize("argv", [
    ("hj", "-i", "{not json"),
    ("hj", "-i", '{"m_list": [1]}'),
    ("classify", "-i", '{"variant": "x"}'),
    ("order", "-i", '{"base": {"kind": "dvr", "q": 3}, "d": 2}'),
    ("hj", "-i", "{}", "-N", "1"),
])
def test_malformed_exit_2(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_input_file(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"m_list": [2, 2, 2]}))
    code, out = run_json(capsys, "hj", "-i", str(path))
    assert code == 0 and out["det"] == 4


def test_schema(capsys):
    code, out = run(capsys, "--schema")
    assert code == 0 and "classify" in json.loads(out.out)


def test_byte_identical():
    argv = [sys.executable, "-m", "toralorders", "classify", "-i", json.dumps(SINGULAR_22), "-N", "4", "--seed", "5"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and b"seed=5" in a


def test_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO('{"m_list": [2]}'))
    code, out = run_json(capsys, "hj", "-i", "-")
    assert code == 0 and out["det"] == 2
