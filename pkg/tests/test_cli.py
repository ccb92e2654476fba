import json

import pytest

from semigroup_hh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_example(capsys):
    code, out, _ = run(capsys, "dim", "--a", "2", "--b", "3", "--char", "0",
                       "--max-degree", "4", "--weight-min", "-15",
                       "--weight-max", "8")
    assert code == 0
    report = json.loads(out)
    assert {"m": 2, "n": -6, "dim": 1} in report["results"]


def test_cup_example(capsys):
    code, out, _ = run(capsys, "cup", "--a", "2", "--b", "3", "--char", "2",
                       "--left", "e1:q=0:alpha=0", "--right", "e1:q=0:alpha=0")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["product"] == [
        {"coeff": "1", "label": "t:q=1:alpha=0"}]


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--a", "3", "--b", "4", "--char", "0",
                       "--max-degree", "4",
                       "--weight-min", "-24", "--weight-max", "12")
    assert code == 0
    assert json.loads(out)["checks"]["ok"]


def test_invalid_config_exit_two(capsys):
    code, _, err = run(capsys, "dim", "--a", "2", "--b", "4")
    assert code == 2
    assert "coprime" in err


def test_bad_label_exit_two(capsys):
    code, _, err = run(capsys, "cup", "--a", "2", "--b", "3",
                       "--left", "nonsense", "--right", "t:q=1:alpha=0")
    assert code == 2
    assert "label" in err


def test_json_output_deterministic(capsys):
    argv = ["basis", "--a", "3", "--b", "5", "--char", "5",
            "--max-degree", "4", "--weight-min", "-30", "--weight-max", "15"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_text_format(capsys):
    code, out, _ = run(capsys, "hilbert", "--a", "2", "--b", "3", "--char", "2",
                       "--max-degree", "2", "--weight-min", "-6",
                       "--weight-max", "6", "--format", "text")
    assert code == 0
    assert "case: case_ii_divides_a" in out
    assert "check" in out


def test_hilbert_variant_flag(capsys):
    code, out, _ = run(capsys, "hilbert", "--a", "2", "--b", "3", "--char", "2",
                       "--max-degree", "2", "--weight-min", "-6",
                       "--weight-max", "6", "--variant", "minus-b")
    assert code == 0
    report = json.loads(out)
    assert set(report["results"]) == {"series_minus_b"}
