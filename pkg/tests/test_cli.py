"""CLI contract: exit codes, output formats, JSON round-trip."""

import json

import pytest
from mpmath import mp

from mzvparity import IDENTITIES, PrecisionContext, ResidualReport, eval_admissible_mzv
from mzvparity.cli import main


def test_reduce_exit_zero_and_value(capsys):
    assert main(["reduce", "1,2", "--digits", "20"]) == 0
    out = capsys.readouterr().out
    assert "1.2020569031595942854" in out
    assert "zeta(3)" in out


def test_reduce_parity_violation_exits_two(capsys):
    assert main(["reduce", "1,1,1"]) == 2
    err = capsys.readouterr().err
    assert "parity" in err


def test_reduce_admissibility_violation_exits_two(capsys):
    assert main(["reduce", "2,1"]) == 2
    assert "admissible" in capsys.readouterr().err


def test_reduce_nonadmissible_allowed(capsys):
    assert main(["reduce", "2,1", "--allow-nonadmissible", "--digits", "15"]) == 0
    assert "T" in capsys.readouterr().out


def test_reduce_bad_composition_exits_two(capsys):
    assert main(["reduce", "1,x"]) == 2
    assert main(["reduce", "0,2"]) == 2
    capsys.readouterr()


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["bogus-command"])
    assert exc.value.code == 2


def test_eval_mzv(capsys):
    assert main(["eval", "mzv", "3", "--digits", "20"]) == 0
    assert "1.2020569031595942854" in capsys.readouterr().out


def test_eval_divergent_requires_T(capsys):
    assert main(["eval", "mzv", "5,3,1"]) == 2
    assert "--T" in capsys.readouterr().err
    assert main(["eval", "mzv", "5,3,1", "--T", "0", "--digits", "15"]) == 0
    capsys.readouterr()


def test_eval_monotangent_pi_squared(capsys):
    assert main(["eval", "monotangent", "2", "--z", "0.5,0", "--digits", "20"]) == 0
    out = capsys.readouterr().out
    with mp.workdps(30):
        assert mp.nstr(mp.pi**2, 20) in out


def test_eval_missing_z_exits_two(capsys):
    assert main(["eval", "monotangent", "2"]) == 2
    capsys.readouterr()


def test_verify_single_pass(capsys):
    assert main(["verify", "main", "--k", "1,2", "--digits", "20"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "0 failed" in out


def test_verify_skip_exits_zero(capsys):
    assert main(["verify", "main", "--k", "2,2"]) == 0
    out = capsys.readouterr().out
    assert "skipped" in out


def test_verify_sweep_all_pass(capsys):
    assert main(["verify", "fundeq2", "--max-weight", "3", "--digits", "15"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out and "PASS" in out


def test_verify_sweep_weight_cap(capsys):
    assert main(["verify", "main", "--max-weight", "99"]) == 2
    assert "cap" in capsys.readouterr().err


def test_verify_unknown_identity(capsys):
    assert main(["verify", "euler", "--k", "2"]) == 2
    capsys.readouterr()


def test_digits_below_minimum_exits_two(capsys):
    assert main(["eval", "mzv", "2", "--digits", "5"]) == 2
    capsys.readouterr()


def test_verify_needs_target(capsys):
    assert main(["verify", "main"]) == 2
    capsys.readouterr()


def test_verify_failure_exits_one(capsys, monkeypatch):
    def always_fail(c, ctx, T_values=(0, 1)):
        return ResidualReport(
            identity="main2",
            composition=c,
            digits=ctx.digits,
            residual=mp.mpf(1),
            bound=ctx.residual_bound(),
            status="fail",
        )

    monkeypatch.setitem(IDENTITIES, "main2", always_fail)
    assert main(["verify", "main2", "--k", "2"]) == 1
    capsys.readouterr()


def test_env_default_digits(capsys, monkeypatch):
    monkeypatch.setenv("MZV_DIGITS", "15")
    assert main(["eval", "mzv", "2"]) == 0
    out = capsys.readouterr().out
    assert out.strip().startswith("1.6449340668482")
    monkeypatch.setenv("MZV_DIGITS", "not-a-number")
    assert main(["eval", "mzv", "2"]) == 2
    capsys.readouterr()


def test_table_empty(capsys):
    assert main(["table", "--max-weight", "0"]) == 0
    assert json.loads(capsys.readouterr().out) == []


def test_table_weight_two_single_entry(capsys):
    assert main(["table", "--max-weight", "2", "--digits", "20"]) == 0
    entries = json.loads(capsys.readouterr().out)
    assert len(entries) == 1
    assert entries[0]["composition"] == [2]


def test_table_json_round_trip(tmp_path):
    ctx = PrecisionContext(digits=25)
    path = tmp_path / "table.json"
    assert main(["table", "--max-weight", "5", "--digits", "25", "-o", str(path)]) == 0
    entries = json.loads(path.read_text())
    assert entries, "table must not be empty"
    with mp.workdps(40):
        for entry in entries:
            total = mp.mpf(0)
            for term in entry["expanded"]:
                coeff = mp.mpf(int(term["coeff_num"])) / int(term["coeff_den"])
                val = coeff * mp.pi ** term["pi_exp"]
                assert term["T_deg"] == 0
                if term["word"]:
                    val *= eval_admissible_mzv(tuple(term["word"]), ctx).value
                total += val
            stored = mp.mpf(entry["value"])
            assert abs(total - stored) < mp.mpf(10) ** (-(entry["digits"] - 2))


def test_table_latex(capsys):
    assert main(["table", "--max-weight", "3", "--format", "latex", "--digits", "15"]) == 0
    out = capsys.readouterr().out
    assert r"\zeta(1,2)" in out and r"\begin{align*}" in out


def test_reduce_json_format(capsys):
    assert main(["reduce", "2", "--format", "json", "--digits", "20"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["composition"] == [2]
    assert data["expanded"][0]["pi_exp"] == 2
    assert data["expanded"][0]["coeff_num"] == "1"
    assert data["expanded"][0]["coeff_den"] == "6"
