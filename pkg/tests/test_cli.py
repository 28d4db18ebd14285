"""Tests for the command-line interface.

Runs main() in-process with capsys so exit codes and exact output can be
asserted without subprocess overhead.  One subprocess test at the end
confirms the installed console script exists at all.
"""

import json

import pytest

from hilbtorus.bfile import SEQUENCES
from hilbtorus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_cn_pretty(capsys):
    code, out, err = run(capsys, "compute", "cn", "2")
    assert code == 0
    assert out == "q^4 - q^3 - q + 1\n"
    assert err == ""


def test_compute_pn_pretty(capsys):
    code, out, _ = run(capsys, "compute", "pn", "1")
    assert code == 0
    assert out == "1\n"


def test_compute_json_single(capsys):
    code, out, _ = run(capsys, "compute", "cn", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 1,
        "coeffs": [{"e": 0, "v": "1"}, {"e": 1, "v": "-2"}, {"e": 2, "v": "1"}],
    }


def test_compute_json_range(capsys):
    code, out, _ = run(capsys, "compute", "pn", "1..3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list)
    assert [item["n"] for item in payload] == [1, 2, 3]
    assert payload[1]["coeffs"] == [
        {"e": 0, "v": "1"}, {"e": 1, "v": "1"}, {"e": 2, "v": "1"}]


def test_compute_range_pretty(capsys):
    code, out, _ = run(capsys, "compute", "pn", "2..3")
    assert code == 0
    assert out == "2: q^2 + q + 1\n3: q^4 + q^3 + q + 1\n"


def test_compute_zeta_pretty(capsys):
    code, out, _ = run(capsys, "compute", "zeta", "5")
    assert code == 0
    assert out == ("(1 - q t)(1 - q^3 t)(1 - q^7 t)(1 - q^9 t)"
                   " / ((1 - t)(1 - q^4 t)(1 - q^6 t)(1 - q^10 t))\n")


def test_compute_zeta_json(capsys):
    code, out, _ = run(capsys, "compute", "zeta", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 1,
        "factors": [{"e": 0, "m": 1}, {"e": 1, "m": -2}, {"e": 2, "m": 1}],
    }


def test_compute_hasse_weil(capsys):
    code, out, _ = run(capsys, "compute", "hasse-weil", "1")
    assert code == 0
    assert out == "zeta(s) zeta(s - 2) / zeta(s - 1)^2\n"


def test_compute_ad_all_orders(capsys):
    code, out, _ = run(capsys, "compute", "ad", "5")
    assert code == 0
    assert out == "a_2(5) = -8, a_3(5) = 0, a_4(5) = 0, a_6(5) = 4\n"


def test_compute_ad_single_order(capsys):
    code, out, _ = run(capsys, "compute", "ad", "5", "--d", "2")
    assert code == 0
    assert out == "a_2(5) = -8\n"


def test_compute_ad_json(capsys):
    code, out, _ = run(capsys, "compute", "ad", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 5, "values": {"2": "-8", "3": "0", "4": "0", "6": "4"}}


def test_compute_sections(capsys):
    code, out, _ = run(capsys, "compute", "sections", "12")
    assert code == 0
    assert out == ("s_1(12) = 28, s_2(12) = 14, s_3(12) = 10, "
                   "s_4(12) = 7, s_6(12) = 5\n")


def test_d_flag_requires_ad(capsys):
    code, out, err = run(capsys, "compute", "cn", "3", "--d", "2")
    assert code == 2
    assert out == ""
    assert "--d only applies" in err


def test_bad_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "cn", "8..3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "cn", "zero"])
    assert exc.value.code == 2


def test_table_output(capsys):
    code, out, _ = run(capsys, "table", "4", "--max-n", "3")
    assert code == 0
    assert out == ("n\ts_2(n)\ts_3(n)\ts_4(n)\ts_6(n)\n"
                   "1\t1\t1\t1\t1\n2\t2\t1\t1\t1\n3\t2\t2\t2\t1\n")


def test_verify_selected_suites(capsys):
    code, out, err = run(capsys, "verify", "--suite", "zeta,tables", "--max-n", "30")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert lines[0].startswith("ok   zeta")
    assert lines[1].startswith("ok   tables")


def test_verify_unknown_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_oeis_compare_ok(capsys, tmp_path):
    seq = SEQUENCES["a004018"]
    path = tmp_path / "b004018.txt"
    path.write_text("".join(f"{i} {seq.value(i)}\n" for i in range(25)))
    code, out, _ = run(capsys, "oeis-compare", "a004018", str(path))
    assert code == 0
    assert "all agree" in out


def test_oeis_compare_mismatch(capsys, tmp_path):
    path = tmp_path / "b067742.txt"
    path.write_text("1 1\n2 999\n")
    code, out, _ = run(capsys, "oeis-compare", "a067742", str(path))
    assert code == 1
    assert "index 2: file has 999, computed 1" in out


def test_oeis_compare_malformed(capsys, tmp_path):
    path = tmp_path / "b067742.txt"
    path.write_text("1 x\n")
    code, out, err = run(capsys, "oeis-compare", "a067742", str(path))
    assert code == 2
    assert "non-integer" in err


def test_oeis_compare_missing_file(capsys, tmp_path):
    code, out, err = run(capsys, "oeis-compare", "a067742",
                         str(tmp_path / "absent.txt"))
    assert code == 2
    assert err


def test_console_script_installed():
    import shutil
    import subprocess

    exe = shutil.which("hilbtorus")
    assert exe, "console script not on PATH"
    proc = subprocess.run([exe, "compute", "cn", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "q^2 - 2q + 1\n"
