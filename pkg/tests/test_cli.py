"""Command-line contract: exit codes, JSON round-trips, deterministic output."""

import csv
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from floorcomm.classify import classify
from floorcomm.cli import main, verdict_from_dict, verdict_to_dict
from floorcomm.floorfn import DilationPair

GOLDEN = Path(__file__).parent / "data" / "plot_M2_D2_R2.svg"


def test_classify_member_exit_code_and_json(capsys):
    assert main(["classify", "1/3", "1/2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["member"] is True
    assert payload["witness"] == {"kind": "positive_linear", "m": 1, "n": 1}
    assert payload["oracle"]["min_value"] == 0
    assert payload["oracle"]["agrees"] is True


def test_classify_non_member_exit_code(capsys):
    assert main(["classify", "2/3", "1/2"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["member"] is False
    assert payload["witness"] is None
    assert payload["counterexample"] == "3"


def test_classify_parse_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["classify", "0.5", "2"])
    assert excinfo.value.code == 2


def test_classify_missing_argument_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["classify", "1/3"])
    assert excinfo.value.code == 2


def test_classify_negative_rational_positional(capsys):
    assert main(["classify", "-3/2", "-3/4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["witness"]["kind"] == "neg_hyperbola"


def test_classify_no_oracle_flag(capsys):
    assert main(["classify", "1/3", "1/2", "--no-oracle"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert "oracle" not in payload


def test_classify_plain_format(capsys):
    assert main(["classify", "1/3", "1/2", "--plain"]) == 0
    out = capsys.readouterr().out
    assert "(1/3, 1/2): member" in out
    assert "witness: positive_linear m=1 n=1" in out


def test_verdict_json_round_trip(capsys):
    for alpha, beta in [("1/3", "1/2"), ("-3/2", "-3/4"), ("2/3", "1/2"), ("0", "5/3"), ("-2", "-5/3")]:
        capsys.readouterr()
        main(["classify", alpha, beta])
        payload = json.loads(capsys.readouterr().out)
        pair = DilationPair(Fraction(alpha), Fraction(beta))
        assert verdict_from_dict(payload) == classify(pair)
        # and the dict encoding itself round-trips exactly
        assert verdict_to_dict(verdict_from_dict(payload)) == {
            key: payload[key] for key in ("alpha", "beta", "member", "witness", "counterexample")
        }


def test_verify_reports_oracle(capsys):
    assert main(["verify", "2/3", "1/2"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["min_value"] == -1
    assert payload["argmin"] == "3"
    assert payload["period"] == "6"
    assert payload["member"] is False
    assert main(["verify", "-1", "1"]) == 0


def test_sweep_csv_contract(capsys, tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "-P", "2", "-Q", "2", "--quadrant=+-", "--out", str(out)]) == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["alpha", "beta", "member", "witness_kind", "witness_params", "oracle_min", "agree"]
    body = rows[1:]
    assert len(body) == 9  # {1/2, 1, 2} x {-1/2, -1, -2}
    assert all(row[2] == "false" for row in body)  # (+, -) pairs never belong
    assert all(row[6] == "true" for row in body)
    err = capsys.readouterr().err
    assert "9 pairs, 0 members, 0 disagreements" in err


def test_sweep_negative_positive_quadrant_all_members(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "-P", "2", "-Q", "2", "--quadrant=-+", "--out", str(out)]) == 0
    body = list(csv.reader(out.read_text().splitlines()))[1:]
    assert len(body) == 9
    assert all(row[2] == "true" for row in body)
    assert all(row[3] == "mixed_neg_pos" for row in body)


def test_sweep_rows_sorted_and_json_mode(capsys):
    assert main(["sweep", "-P", "2", "-Q", "1", "--quadrant=++", "--json"]) == 0
    captured = capsys.readouterr()
    payload = json.loads(captured.out)
    pairs = [(Fraction(r["alpha"]), Fraction(r["beta"])) for r in payload["rows"]]
    assert pairs == sorted(pairs)
    assert payload["summary"] == {"pairs": 4, "members": 3, "disagreements": 0}


def test_beatty_command(capsys):
    assert main(["beatty", "5/2", "5/3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["criterion"] == {"m": 1, "n": 1}
    assert payload["reduced_disjoint"] is True and payload["agree"] is True
    assert main(["beatty", "5/2", "7/3"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["reduced_disjoint"] is False and payload["criterion"] is None
    assert 2 in payload["window"]["u"]["reduced"]


def test_frobenius_command(capsys):
    assert main(["frobenius", "3", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["frobenius_number"] == 7
    assert payload["nonrealizing_set"] == [1, 2, 4, 7]
    assert payload["sylvester_duality"] is True


def test_frobenius_rejects_bad_generators(capsys):
    assert main(["frobenius", "4", "6"]) == 2
    assert main(["frobenius", "1", "5"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_preorder_command(capsys):
    assert main(["preorder", "-P", "2", "-Q", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["transitivity_counterexample"] is None
    size = len(payload["values"])
    assert len(payload["precedes"]) == size
    assert all(len(row) == size for row in payload["precedes"])
    assert ["1/2", "1", "2"] not in payload["equivalence_classes"]  # 2 not equiv to 1
    assert any("1/2" in cls and "1" in cls for cls in payload["equivalence_classes"])


def test_preorder_csv(tmp_path, capsys):
    out = tmp_path / "matrix.csv"
    assert main(["preorder", "-P", "2", "-Q", "1", "--csv", "--out", str(out)]) == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0][0] == "alpha\\beta"
    assert len(rows) == len(rows[0])  # square matrix plus header row/column


def test_plot_matches_golden_file(tmp_path):
    out = tmp_path / "plot.svg"
    assert main(["plot", "--out", str(out)]) == 0
    assert out.read_bytes() == GOLDEN.read_bytes()


def test_plot_deterministic(tmp_path):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    args = ["plot", "-M", "3", "-R", "3", "-D", "3", "--viewbox", "-3", "3", "-3", "3"]
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_plot_empty_viewbox_is_usage_error(capsys):
    assert main(["plot", "--viewbox", "1", "1", "0", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_plot_unwritable_output(capsys):
    assert main(["plot", "--out", "/nonexistent-dir/x.svg"]) == 2
    assert "error:" in capsys.readouterr().err


def test_module_entry_point_smoke():
    result = subprocess.run(
        [sys.executable, "-m", "floorcomm", "classify", "1/3", "1/2", "--no-oracle"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["member"] is True
