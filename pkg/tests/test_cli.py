import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import apx.count
from apx.cli import main

DATA = Path(__file__).parent / "data"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count(capsys):
    assert run(["count", "100"], capsys) == (0, "78\n", "")
    assert run(["count", "1"], capsys) == (0, "1\n", "")


def test_count_breakdown(capsys):
    code, out, err = run(["count", "100", "--breakdown"], capsys)
    assert code == 0
    assert out == "trivial 9\neven 62\nodd 7\ntotal 78\n"


def test_count_rejects_bad_n():
    with pytest.raises(SystemExit) as err:
        main(["count", "0"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["count", "notanumber"])
    assert err.value.code == 2


def test_list_text(capsys):
    code, out, err = run(["list", "6"], capsys)
    assert code == 0
    assert out == (
        "6 = 6\n"
        "3 + 3 = 6\n"
        "2 + 2 + 2 = 6\n"
        "1 + 1 + 1 + 1 + 1 + 1 = 6\n"
        "1 + 2 + 3 = 6\n"
        "2 + 4 = 6\n"
        "1 + 5 = 6\n"
    )
    assert run(["list", "1"], capsys) == (0, "1 = 1\n", "")


def test_list_json(capsys):
    code, out, err = run(["list", "10", "--format", "json"], capsys)
    assert code == 0
    objects = [json.loads(line) for line in out.splitlines()]
    assert len(objects) == 9
    assert objects[0] == {"n": 10, "first": 10, "diff": 0, "length": 1, "parts": [10]}
    for obj in objects:
        assert sum(obj["parts"]) == 10
        assert len(obj["parts"]) == obj["length"]


def test_lengths(capsys):
    assert run(["lengths", "1"], capsys) == (0, "{1} (1)\n", "")
    assert run(["lengths", "6"], capsys) == (0, "{1, 2, 3, 6} (4)\n", "")
    code, out, _ = run(["lengths", "500"], capsys)
    assert code == 0
    assert out.endswith("(13)\n")


def test_seq_csv(capsys):
    code, out, err = run(["seq", "ap", "20"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    assert len(lines) == 21
    assert lines[1] == "1,1"
    assert lines[6] == "6,7"
    assert lines[12] == "12,14"


def test_seq_apdiv_row_500(capsys):
    code, out, _ = run(["seq", "apdiv", "500"], capsys)
    assert code == 0
    assert out.splitlines()[500] == "500,13"


def test_seq_out_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, err = run(["seq", "ap", "100", "--out", str(target)], capsys)
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "n,value"
    assert lines[100] == "100,78"


def test_seq_out_io_error(tmp_path, capsys):
    code, out, err = run(
        ["seq", "ap", "10", "--out", str(tmp_path / "missing" / "t.csv")], capsys
    )
    assert code == 3
    assert "apx:" in err


def test_comet_is_seq_ap(capsys):
    code, comet_out, _ = run(["comet", "50"], capsys)
    assert code == 0
    code, seq_out, _ = run(["seq", "ap", "50"], capsys)
    assert code == 0
    assert comet_out == seq_out
    assert comet_out.splitlines()[1] == "1,1"


def test_verify_oracle_ok(capsys):
    code, out, _ = run(["verify-oracle", "200"], capsys)
    assert code == 0
    assert out.startswith("OK")
    assert run(["verify-oracle", "1"], capsys)[0] == 0


def test_verify_oracle_bound(capsys):
    code, _, err = run(["verify-oracle", "5001"], capsys)
    assert code == 2
    assert "bound" in err


def test_verify_oracle_reports_injected_fault(monkeypatch, capsys):
    real = apx.count.ap_count

    def faulty(n):
        result = real(n)
        if n == 37:
            return apx.count.CountBreakdown(
                n=n,
                trivial=result.trivial + 1,
                even_sum=result.even_sum,
                odd_sum=result.odd_sum,
                total=result.total + 1,
            )
        return result

    monkeypatch.setattr(apx.count, "ap_count", faulty)
    code, out, _ = run(["verify-oracle", "50"], capsys)
    assert code == 1
    assert "mismatch at n=37" in out
    assert "expected" in out and "got" in out


def test_verify_oeis_fixtures(capsys):
    code, out, _ = run(["verify-oeis", "ap", str(DATA / "b049988.txt"), "--limit", "2000"], capsys)
    assert code == 0
    assert "2000 terms match" in out
    code, out, _ = run(["verify-oeis", "apdiv", str(DATA / "b175239.txt"), "--limit", "2000"], capsys)
    assert code == 0


def test_verify_oeis_empty_bfile(tmp_path, capsys):
    empty = tmp_path / "b000001.txt"
    empty.write_text("# just a comment\n")
    code, out, err = run(["verify-oeis", "ap", str(empty)], capsys)
    assert code == 0
    assert "0 terms compared" in err


def test_verify_oeis_detects_mismatch(tmp_path, capsys):
    bad = tmp_path / "b049988.txt"
    bad.write_text("1 1\n2 2\n3 999\n")
    code, out, _ = run(["verify-oeis", "ap", str(bad)], capsys)
    assert code == 1
    assert "mismatch at n=3" in out


def test_verify_oeis_parse_error(tmp_path, capsys):
    broken = tmp_path / "b.txt"
    broken.write_text("1 1\nnot numbers\n")
    code, _, err = run(["verify-oeis", "ap", str(broken)], capsys)
    assert code == 3
    assert "line 2" in err


def test_verify_oeis_missing_file(capsys):
    code, _, err = run(["verify-oeis", "ap", "/no/such/bfile.txt"], capsys)
    assert code == 3


def test_verify_oeis_requires_path_or_fetch(capsys):
    code, _, err = run(["verify-oeis", "ap"], capsys)
    assert code == 2
    assert "b-file" in err


def test_kcalc(capsys):
    assert run(["kcalc", "product", "9", "8", "3"], capsys) == (0, "100\n", "")
    assert run(["kcalc", "product", "7", "1", "5"], capsys) == (0, "7\n", "")
    assert run(["kcalc", "quotient", "57", "6", "3"], capsys) == (0, "7\n", "")
    assert run(["kcalc", "quotient", "100", "9", "3"], capsys) == (0, "not divisible\n", "")
    assert run(["kcalc", "divisors", "12", "3"], capsys) == (0, "1 3 8 24\n", "")
    assert run(["kcalc", "divisors", "12", "2"], capsys) == (0, "1 2 3 4 6 12\n", "")


def test_kcalc_quotient_by_zero(capsys):
    code, _, err = run(["kcalc", "quotient", "5", "0", "3"], capsys)
    assert code == 2
    assert "zero" in err


def test_kcalc_negative_arguments(capsys):
    assert run(["kcalc", "product", "-2", "8", "3"], capsys) == (0, "12\n", "")
    assert run(["kcalc", "quotient", "12", "8", "3"], capsys) == (0, "-2\n", "")


def test_max_n_override_limits_commands(monkeypatch, capsys):
    monkeypatch.setenv("APX_MAX_N", "50")
    code, _, err = run(["list", "51"], capsys)
    assert code == 2
    assert "APX_MAX_N" in err
    assert run(["list", "50"], capsys)[0] == 0


def test_max_n_override_validated(monkeypatch, capsys):
    monkeypatch.setenv("APX_MAX_N", "zero")
    code, _, err = run(["count", "5"], capsys)
    assert code == 2
    assert "APX_MAX_N" in err


def test_output_is_deterministic(capsys):
    first = run(["list", "360"], capsys)
    second = run(["list", "360"], capsys)
    assert first == second
    assert run(["seq", "ap", "300"], capsys) == run(["seq", "ap", "300"], capsys)


def test_backends_emit_identical_bytes():
    cmd = [sys.executable, "-m", "apx", "seq", "ap", "400"]
    pure = subprocess.run(
        cmd, capture_output=True, env={**os.environ, "APX_PURE": "1"}
    )
    selected = subprocess.run(
        cmd, capture_output=True, env={**os.environ, "APX_PURE": "0"}
    )
    assert pure.returncode == 0 and selected.returncode == 0
    assert pure.stdout == selected.stdout
