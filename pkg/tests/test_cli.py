import json

import pytest

from weighwright.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_count(capsys):
    assert run(capsys, "count", "--kind", "lhr", "--class", "known-light", "--w", "5")[:2] == (0, "99")
    assert run(capsys, "count", "--kind", "lr", "--class", "unknown-oblivious", "--w", "7")[:2] == (0, "82")
    code, _, err = run(capsys, "count", "--kind", "lhr", "--class", "unknown-oblivious", "--w", "6")
    assert code == 3 and "UnsupportedBound" in err


def test_count_table(capsys):
    code, out, _ = run(capsys, "count", "--table", "7")
    assert code == 0
    assert out.splitlines()[-1].split() == ["LHR", "1", "3", "9", "19", "49", "123", "297", "707"]
    code, out, _ = run(capsys, "--json", "count", "--table", "2")
    assert json.loads(out)["H"] == [1, 3, 5]


def test_count_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--kind", "lhr"])
    assert exc.value.code == 2


def test_synth_and_verify(tmp_path, capsys):
    path = str(tmp_path / "a.wwjson")
    code, out, _ = run(capsys, "synth", "--kind", "lh", "--start", "light", "--coins", "27", "--w", "3", "--out", path)
    assert code == 0 and "27 itineraries" in out
    with open(path) as fh:
        assert len(json.load(fh)["itineraries"]) == 27
    assert run(capsys, "verify", path)[:2] == (0, "legitimate: yes, decodable: yes")


def test_synth_builtin_to_stdout(capsys):
    code, out, _ = run(capsys, "synth", "--builtin", "lr-unknown-w5-20c")
    assert code == 0
    doc = json.loads(out)
    assert doc["num_coins"] == 20 and doc["scenario"] == {"type": "unknown"}
    code, out, _ = run(capsys, "synth", "--builtin", "lr-unknown-w4-11c", "--coins", "7")
    assert json.loads(out)["num_coins"] == 7


def test_synth_errors(capsys):
    code, _, err = run(capsys, "synth", "--kind", "lh", "--mixed", "1:1", "--w", "4")
    assert code == 3 and "Unsolvable" in err
    code, _, err = run(capsys, "synth", "--kind", "lhr", "--start", "light", "--coins", "100", "--w", "5")
    assert code == 3 and "TooManyCoins" in err
    code, _, err = run(capsys, "synth", "--kind", "lhr", "--mixed", "7:1:1", "--w", "2")
    assert code == 3 and "KnownImpossible" in err
    code, _, err = run(capsys, "synth", "--kind", "lhr", "--mixed", "0:11:1", "--w", "3")
    assert code == 3 and "InsufficientGenuineCoins" in err
    assert run(capsys, "synth", "--kind", "lhr", "--mixed", "0:11:1", "--w", "3", "--genuine", "1")[0] == 0
    code, _, err = run(capsys, "synth", "--builtin", "nope")
    assert code == 2
    code, _, err = run(capsys, "synth", "--kind", "lhr", "--mixed", "1:2", "--w", "3")
    assert code == 2


def test_verify_simulate_decode_builtin(capsys):
    assert run(capsys, "verify", "--builtin", "lhr-unknown-w3-6c")[:2] == (0, "legitimate: yes, decodable: yes")
    assert run(capsys, "simulate", "--builtin", "lhr-unknown-w3-6c", "--coin", "0", "--start", "heavy")[:2] == (0, ">=<")
    assert run(capsys, "decode", "--builtin", "lhr-unknown-w3-6c", "--outcome", "===")[:2] == (0, "coin 5, state ambiguous")
    assert run(capsys, "decode", "--builtin", "lhr-unknown-w3-6c", "--outcome", "<>=")[:2] == (0, "coin 0, state light")
    assert run(capsys, "decode", "--builtin", "lhr-unknown-w3-6c", "--outcome", "<<<")[0] == 4


def test_seedless_flag_either_position(capsys):
    code, out, _ = run(capsys, "--seedless", "verify", "--builtin", "lr-unknown-w4-11c")
    assert code == 4 and "decodable: no" in out
    assert run(capsys, "verify", "--seedless", "--builtin", "lr-unknown-w4-11c")[0] == 4
    assert run(capsys, "verify", "--builtin", "lr-unknown-w4-11c")[0] == 0
    assert run(capsys, "verify", "--seedless", "--builtin", "lr-unknown-w7-82c")[0] == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "verify", "--json", "--builtin", "lr-unknown-w5-20c")
    data = json.loads(out)
    assert code == 0 and data["decodable"] and data["hypotheses"] == 40


def test_bad_document_exit(tmp_path, capsys):
    path = tmp_path / "b.wwjson"
    path.write_text("{bad")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 6 and "DocumentError" in err


def test_solve(tmp_path, capsys):
    tree = tmp_path / "t.json"
    assert run(capsys, "solve", "--kind", "lhr", "--unknown", "16", "--w", "4", "--tree", str(tree))[:2] == (0, "Solvable")
    data = json.loads(tree.read_text())
    assert data["left"] == {"u": 7} and set(data["children"]) == {"=", "<", ">"}
    assert run(capsys, "solve", "--kind", "lhr", "--unknown", "17", "--w", "4")[:2] == (3, "Unsolvable")
    assert run(capsys, "solve", "--kind", "lhr", "--mixed", "0:7:7", "--w", "3")[:2] == (0, "Solvable")


def test_solve_ceiling(capsys, monkeypatch):
    monkeypatch.delenv("WEIGHWRIGHT_SEARCH_CEILING", raising=False)
    code, _, err = run(capsys, "solve", "--kind", "lhr", "--unknown", "41", "--w", "5")
    assert code == 5 and "40 suspect coins" in err


def test_solve_example(capsys):
    code, out, _ = run(capsys, "--json", "solve", "--example", "lhr-unknown-w4-16c")
    assert code == 0 and json.loads(out)["ok"]
    assert run(capsys, "solve", "--example", "nope")[0] == 2


def test_check_impossible(capsys):
    code, out, _ = run(capsys, "check-impossible", "--w-max", "1")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "check-impossible", "--w-max", "2")
    assert code == 4 and out.count("FAIL") == 4
