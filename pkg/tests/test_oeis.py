from pathlib import Path

import pytest

from apx import sieve
from apx.oeis import BFileParseError, compare_table, fetch_bfile, load_bfile, parse_bfile

DATA = Path(__file__).parent / "data"


def test_parse_skips_comments_and_blank_lines():
    bfile = parse_bfile("# header\n\n1 1\n2 2\n\n# trailing\n3 3\n", "A000001")
    assert bfile.sequence_id == "A000001"
    assert bfile.entries == {1: 1, 2: 2, 3: 3}
    assert bfile.last_index() == 3


def test_parse_empty():
    bfile = parse_bfile("# nothing but comments\n")
    assert bfile.entries == {}
    assert bfile.last_index() == 0


def test_parse_reports_line_numbers():
    with pytest.raises(BFileParseError) as err:
        parse_bfile("1 1\n2 2\nbogus line here\n")
    assert "line 3" in str(err.value)
    assert err.value.line_no == 3

    with pytest.raises(BFileParseError) as err:
        parse_bfile("1 1\n2 x\n")
    assert err.value.line_no == 2

    with pytest.raises(BFileParseError) as err:
        parse_bfile("5 1\n4 2\n")
    assert err.value.line_no == 2


def test_parse_accepts_negative_values_and_extra_whitespace():
    bfile = parse_bfile("  7   -3 \n8 0\n")
    assert bfile.entries == {7: -3, 8: 0}


def test_load_infers_sequence_id(tmp_path):
    path = tmp_path / "b123456.txt"
    path.write_text("1 1\n")
    assert load_bfile(path).sequence_id == "A123456"
    other = tmp_path / "prefix.txt"
    other.write_text("1 1\n")
    assert load_bfile(other).sequence_id == "unknown"


def test_fetch_rejects_malformed_ids():
    with pytest.raises(ValueError):
        fetch_bfile("49988")
    with pytest.raises(ValueError):
        fetch_bfile("A4998")


def test_compare_table_detects_mismatches():
    table = sieve.ap_count_range(20)
    good = parse_bfile("1 1\n2 2\n3 3\n")
    assert compare_table(table, good, 20) == ([], 3)

    bad = parse_bfile("1 1\n2 5\n3 3\n")
    mismatches, compared = compare_table(table, bad, 20)
    assert compared == 3
    assert mismatches == [(2, 5, 2)]


def test_compare_table_honors_limit():
    table = sieve.ap_count_range(20)
    bfile = parse_bfile("1 1\n2 2\n15 999\n")
    mismatches, compared = compare_table(table, bfile, 10)
    assert compared == 2
    assert mismatches == []


def test_vendored_fixture_prefixes_match_sieve():
    ap_table = sieve.ap_count_range(500)
    ap_bfile = load_bfile(DATA / "b049988.txt")
    assert ap_bfile.sequence_id == "A049988"
    assert compare_table(ap_table, ap_bfile, 500) == ([], 500)

    apdiv_table = sieve.apdiv_count_range(500)
    apdiv_bfile = load_bfile(DATA / "b175239.txt")
    assert apdiv_bfile.sequence_id == "A175239"
    assert compare_table(apdiv_table, apdiv_bfile, 500) == ([], 500)
