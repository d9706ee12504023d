"""Command-line surface: verbs, global flags, config files, exit codes."""

import json

import pytest

from parabolicqi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_nf(capsys):
    code, out = run(capsys, "nf", "1 2 1")
    assert code == 0
    assert out.startswith("power 0 | ")


def test_eq_exit_codes(capsys):
    code, out = run(capsys, "eq", "1 2 1", "2 1 2")
    assert code == 0 and out.strip() == "equal"
    code, out = run(capsys, "eq", "1", "2")
    assert code == 1 and out.strip() == "different"


def test_member(capsys):
    code, out = run(capsys, "member", "1 -2 1", "1", "2")
    assert code == 0 and out.strip() == "member"
    code, out = run(capsys, "member", "3", "1", "2")
    assert code == 1


def test_act(capsys):
    code, out = run(capsys, "--rank", "9", "act", "2 1", "4 5 6")
    assert code == 0 and out.strip() == "x4 x5 x6"


def test_eta_round_trip(capsys):
    code, out = run(capsys, "--type", "B", "eta", "1 2 3")
    assert code == 0 and out.strip() == "1 1 2 3"
    code, out = run(capsys, "eta-inv", "1 1 2 3")
    assert code == 0 and out.strip() == "1 2 3"
    code, out = run(capsys, "psi", "1 1 2 3 -3 -2")
    assert code == 0 and out.strip() == "1"


def test_check_writes_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out = run(capsys, "check", "--statement", "lemma1", "--json", str(path))
    assert code == 0 and "PASS" in out
    payload = json.loads(path.read_text())
    assert payload["statement"] == "lemma1"
    assert payload["failures"] == []
    assert payload["elapsed_ms"] is None


def test_check_global_flags_after_verb(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _ = run(capsys, "check", "--statement", "lemma2", "--trials", "60",
                  "--rank", "4", "--seed", "11", "--json", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["rank"] == 4
    assert payload["seed"] == 11


def test_check_determinism_byte_identical(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        code, _ = run(capsys, "check", "--statement", "prop4", "--trials", "40",
                      "--seed", "3", "--json", str(p))
        assert code == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_config_defaults_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rank": 4, "trials": 70}))
    path = tmp_path / "r.json"
    code, _ = run(capsys, "--config", str(cfg), "check", "--statement", "lemma2",
                  "--json", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["rank"] == 4
    assert payload["caps"]["trials"] == 70
    # explicit flags beat the config
    code, _ = run(capsys, "--config", str(cfg), "check", "--statement", "lemma2",
                  "--rank", "3", "--trials", "30", "--json", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["rank"] == 3
    assert payload["caps"]["trials"] == 30


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"no-such-flag": 1}))
    with pytest.raises(SystemExit):
        main(["--config", str(cfg), "check", "--statement", "lemma1"])
    capsys.readouterr()


def test_bfs(capsys):
    code, out = run(capsys, "bfs", "3 2 1", "--kind", "NP", "--radius-cap", "3")
    assert code == 0
    assert out.splitlines()[0] == "norm bound 2"


def test_qi_and_distortion(capsys):
    code, out = run(capsys, "qi", "--samples", "2", "--max-word-len", "1",
                    "--radius-cap", "3")
    assert code == 0 and out.startswith("qi-NP")
    code, out = run(capsys, "distortion", "--powers", "1", "--max-word-len", "1",
                    "--radius-cap", "3")
    assert code == 0 and "power 0: P bound 0, NP bound 0" in out
