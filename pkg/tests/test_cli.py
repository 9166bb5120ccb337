"""The command-line surface: records, formats, exit codes."""

import json

import pytest

from qaw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_show_n1_exact(capsys):
    code, out, _ = run(capsys, "show", "--n", "1")
    assert code == 0
    assert out == "x - t\n"


def test_show_latex(capsys):
    code, out, _ = run(capsys, "show", "--n", "2", "--latex")
    assert code == 0
    assert "x^{2}" in out


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--n", "0", "--q", "0.5", "--x", "2.0")
    assert code == 0
    assert float(out) == 1.0


def test_eval_bad_q(capsys):
    code, _, err = run(capsys, "eval", "--n", "1", "--q", "1.5", "--x", "2.0")
    assert code == 2
    assert "error" in err


def test_verify_proposition_base_case(capsys):
    code, out, _ = run(capsys, "verify", "proposition", "--n-max", "0", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert [r["check"] for r in recs] == ["sq-relation", "dq-relation"]
    assert all(r["status"] == "pass" for r in recs)


def test_verify_proposition_includes_bandwidth(capsys):
    code, out, _ = run(capsys, "verify", "proposition", "--n-max", "4", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert len(recs) == 11
    assert recs[-1]["check"] == "bandwidth"
    assert recs[-1]["max_r"] == 2 and recs[-1]["max_s"] == 1


def test_verify_proposition_env_default(capsys, monkeypatch):
    monkeypatch.setenv("QAW_NMAX_DEFAULT", "2")
    code, out, _ = run(capsys, "verify", "proposition", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert max(r.get("n", 0) for r in recs) == 2


def test_verify_proposition_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("QAW_NMAX_DEFAULT", "forty")
    code, _, err = run(capsys, "verify", "proposition")
    assert code == 2
    assert "QAW_NMAX_DEFAULT" in err


def test_verify_proof(capsys):
    code, out, _ = run(capsys, "verify", "proof", "--k-samples", "2,3", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    verdicts = [r for r in recs if "verdict" in r]
    assert len(verdicts) == 15
    assert all(r["verdict"] == "zero" for r in verdicts)
    coherence = [r for r in recs if r.get("check") == "instantiation-coherence"]
    assert len(coherence) == 20


def test_verify_proof_bad_k_samples(capsys):
    code, _, err = run(capsys, "verify", "proof", "--k-samples", "2,x")
    assert code == 2
    assert "k-samples" in err


def test_verify_numeric(capsys):
    code, out, _ = run(
        capsys, "verify", "numeric", "--n-max", "3",
        "--q", "0.4", "--x", "1.5,2.5", "--format", "json",
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["check"] == "numeric"
    assert rec["status"] == "pass"


def test_verify_numeric_bad_grid(capsys):
    code, _, err = run(capsys, "verify", "numeric", "--x", "0.5")
    assert code == 2
    assert "|x| > 1" in err


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--n-max", "3", "--format", "json")
    assert code == 0
    recs = json_lines(out)
    assert len(recs) == 8
    assert {r["params"] for r in recs} == {"counterexample", "generic"}
    assert all(r["status"] == "pass" for r in recs)


def test_expand(capsys):
    code, out, _ = run(
        capsys, "expand", "--degree-poly", "x^2 - t*x + 1", "--n", "3", "--format", "json"
    )
    assert code == 0
    recs = json_lines(out)
    assert [r["index"] for r in recs] == [0, 1, 2, 3]
    assert recs[2]["coefficient"] == "1"
    assert recs[3]["coefficient"] == "0"


def test_expand_malformed_poly(capsys):
    code, _, err = run(capsys, "expand", "--degree-poly", "x +")
    assert code == 2
    assert "position" in err


def test_expand_n_below_degree(capsys):
    code, _, err = run(capsys, "expand", "--degree-poly", "x^3", "--n", "1")
    assert code == 2
    assert "beyond" in err


def test_text_format_is_default(capsys):
    code, out, _ = run(capsys, "verify", "proposition", "--n-max", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("check=sq-relation")


def test_seed_flag_accepted(capsys):
    code, _, _ = run(capsys, "verify", "oracle", "--n-max", "1", "--seed", "7")
    assert code == 0


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "proposition", "--frobnicate"])
    assert info.value.code == 2


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2
