"""CLI behavior: output formats, determinism, exit codes."""

import json

import pytest

from indexlab.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, ["invariants", "x^3 - x^2 - 2*x - 8"])
    assert code == 0
    payload = json.loads(out)
    assert payload["field"]["disc"] == "-503"
    assert payload["field"]["degree"] == 3
    assert payload["invariants"]["i_K"] == "2"
    assert payload["invariants"]["I_K"] == "2"
    assert payload["splitting"]["2"] == [[1, 1], [1, 1], [1, 1]]
    assert payload["invariants"]["valuations"]["2"] == [1, 1]
    assert set(payload["witness"]) == {"coords", "char_poly"}


def test_invariants_tsv_and_primes_filter(capsys):
    code, out, _ = run_cli(
        capsys, ["invariants", "x^2 - 17", "--format", "tsv", "--primes", "2"]
    )
    assert code == 0
    entries = dict(line.split("\t") for line in out.strip().split("\n"))
    assert entries["i_K"] == "2"
    assert entries["I_K"] == "1"
    assert entries["splitting.2"] == "(1,1)(1,1)"
    assert entries["witness.char_poly"] == "x^2 - x - 4"


def test_invariants_accepts_coefficient_lists(capsys):
    code, out, _ = run_cli(capsys, ["invariants", "[3, -1, 0, 1]"])
    assert code == 0
    assert json.loads(out)["invariants"]["i_K"] == "3"


def test_invariants_deterministic(capsys):
    _, first, _ = run_cli(capsys, ["invariants", "x^3 - 13*x + 4"])
    _, second, _ = run_cli(capsys, ["invariants", "x^3 - 13*x + 4"])
    assert first == second


def test_exit_codes(capsys):
    code, _, err = run_cli(capsys, ["invariants", "x^2 +"])
    assert code == 2 and "parse error" in err
    code, _, err = run_cli(capsys, ["invariants", "x^2 - 4"])
    assert code == 3
    code, _, err = run_cli(capsys, ["invariants", "x^8 - 2"])
    assert code == 3
    code, _, err = run_cli(capsys, ["verify", "octic", "--range", "0..3"])
    assert code == 2
    code, _, err = run_cli(capsys, ["compare", "x^2 - 2", "x^3 - 2", "--prime", "2"])
    assert code == 2
    code, _, err = run_cli(
        capsys, ["search-t1", "--degree", "3", "--prime", "3", "--budget", "0"]
    )
    assert code == 4


def test_verify_tsv_output(capsys):
    code, out, err = run_cli(capsys, ["verify", "simplest_cubic", "--range", "0..10"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("family\tm\t")
    assert len(lines) == 12
    assert "0 discrepancies" in err


def test_verify_json_and_out_file(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        ["verify", "quadratic", "--range=-20..20", "--format", "json",
         "--out", str(out_file)],
    )
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["family"] == "quadratic"
    assert payload["discrepancies"] == 0


def test_verify_comma_list_range(capsys):
    code, out, _ = run_cli(
        capsys, ["verify", "simplest_quartic", "--range", "1,2,16"]
    )
    assert code == 0
    assert len(out.strip().split("\n")) == 4


def test_search_t1(capsys):
    code, out, _ = run_cli(capsys, ["search-t1", "--degree", "3", "--prime", "2"])
    assert code == 0
    payload = json.loads(out)
    assert int(payload["i_K"]) % 2 == 0
    assert payload["poly"][-1] == 1 and len(payload["poly"]) == 4


def test_search_t1_deterministic(capsys):
    _, first, _ = run_cli(capsys, ["search-t1", "--degree", "4", "--prime", "2"])
    _, second, _ = run_cli(capsys, ["search-t1", "--degree", "4", "--prime", "2"])
    assert first == second


def test_compare_same_splitting(capsys):
    code, out, _ = run_cli(capsys, ["compare", "x^2 - 17", "x^2 - 41", "--prime", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["same_splitting"] is True
    assert payload["valuations"]["field1"] == [1, 0]
    assert payload["valuations"]["field2"] == [1, 0]
    assert payload["splitting_blind_spot"] is False


def test_compare_different_splitting(capsys):
    code, out, _ = run_cli(
        capsys, ["compare", "x^3 - x + 3", "x^3 - x^2 - 2*x - 8", "--prime", "2"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["same_splitting"] is False


def test_compare_ramified_pair(capsys):
    code, out, _ = run_cli(capsys, ["compare", "x^2 - 2", "x^2 - 3", "--prime", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["same_splitting"] is True
    assert payload["fields"][0]["splitting"] == [[2, 1]]
    assert payload["valuations"]["field1"] == payload["valuations"]["field2"] == [0, 0]


def test_cap_flag(capsys):
    code, _, _ = run_cli(capsys, ["invariants", "x^2 - 17", "--cap", "9"])
    assert code == 0
