"""OEIS b-file parsing, fetching, and comparison against computed tables.

A b-file is plain text with one "index value" pair per line; lines
starting with '#' are comments.  Parsing is strict: malformed lines and
non-increasing indices raise with the offending line number.
"""

from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .sieve import SequenceTable

OEIS_BFILE_URL = "https://oeis.org/{aid}/b{digits}.txt"


class BFileParseError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: sequence id plus index -> value, indices increasing."""

    sequence_id: str
    entries: dict[int, int]

    def last_index(self) -> int:
        return next(reversed(self.entries)) if self.entries else 0


def parse_bfile(text: str, sequence_id: str = "unknown") -> BFile:
    """Parse b-file text; '#' comments and blank lines are ignored."""
    entries: dict[int, int] = {}
    previous = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", line_no)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", line_no) from None
        if previous is not None and index <= previous:
            raise BFileParseError(f"index {index} not greater than {previous}", line_no)
        entries[index] = value
        previous = index
    return BFile(sequence_id=sequence_id, entries=entries)


def load_bfile(path: str | Path) -> BFile:
    """Parse a b-file from disk, inferring the A-number from bNNNNNN.txt."""
    path = Path(path)
    match = re.fullmatch(r"b(\d+)", path.stem)
    sequence_id = f"A{match.group(1)}" if match else "unknown"
    return parse_bfile(path.read_text(encoding="ascii"), sequence_id)


def fetch_bfile(sequence_id: str, timeout: float = 30.0) -> str:
    """Download the b-file for an A-number from oeis.org (network!)."""
    if not re.fullmatch(r"A\d{6}", sequence_id):
        raise ValueError(f"not an OEIS sequence id: {sequence_id!r}")
    url = OEIS_BFILE_URL.format(aid=sequence_id, digits=sequence_id[1:])
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read().decode("utf-8")


def compare_table(table: SequenceTable, bfile: BFile, limit: int) -> tuple[list[tuple[int, int, int]], int]:
    """Compare computed values against b-file entries with index <= limit.

    Returns (mismatches, compared) where each mismatch is
    (index, expected from the b-file, computed value).
    """
    mismatches = []
    compared = 0
    top = min(limit, table.upper)
    for index, expected in bfile.entries.items():
        if not 1 <= index <= top:
            continue
        compared += 1
        got = table[index]
        if got != expected:
            mismatches.append((index, expected, got))
    return mismatches, compared
