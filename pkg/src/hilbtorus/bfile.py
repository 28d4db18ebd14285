"""OEIS b-file parsing and sequence comparison.

A b-file is plain text with one "index value" pair per line, '#' comment
lines, and blank lines.  Files are user-supplied paths (nothing is
fetched).  Each supported sequence id is pinned here to a generator
together with its starting index; the theta-style expansions carry a
constant term 1 at index 0, the divisor-flavoured sequences start at 1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

from . import arith, rootvalues
from .errors import BFileError


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    entries: tuple[tuple[int, int], ...]  # (index, value), indices increasing


@dataclass(frozen=True)
class Sequence:
    min_index: int
    value: Callable[[int], int]
    describes: str


def _theta_row(d: int) -> Callable[[int], int]:
    def value(idx: int) -> int:
        return 1 if idx == 0 else rootvalues.root_sequence(idx, d)
    return value


SEQUENCES: dict[str, Sequence] = {
    "a067742": Sequence(1, arith.middle_divisors, "number of middle divisors of n"),
    "a004018": Sequence(0, arith.r2, "representations of n by x^2 + y^2"),
    "a033715": Sequence(0, arith.r_prime, "representations of n by x^2 + 2y^2"),
    "a004016": Sequence(0, arith.r_hex, "representations of n by x^2 + xy + y^2"),
    "a113063": Sequence(1, arith.lambda_fn, "hexagonal-lattice excess combination"),
    "a005928": Sequence(0, _theta_row(3), "signed sequence at the third roots of unity"),
    "a082564": Sequence(0, _theta_row(4), "signed sequence at the fourth roots of unity"),
    "a258210": Sequence(0, _theta_row(6), "signed sequence at the sixth roots of unity"),
    "a145394": Sequence(1, lambda n: rootvalues.section_formula(n, 3),
                        "3-section of the reduced polynomial coefficients"),
}


def parse_bfile(path: str, sequence_id: str = "") -> BFile:
    """Read a b-file; raise BFileError (with line number) on bad input."""
    if not sequence_id:
        stem = os.path.basename(path).split(".")[0]
        if stem.startswith("b") and stem[1:].isdigit():
            sequence_id = "a" + stem[1:]
    entries: list[tuple[int, int]] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise BFileError(
                    f"{path}:{lineno}: expected 'index value', got {line!r}")
            try:
                index, value = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise BFileError(
                    f"{path}:{lineno}: non-integer token in {line!r}") from None
            if entries and index <= entries[-1][0]:
                raise BFileError(
                    f"{path}:{lineno}: index {index} does not increase "
                    f"past {entries[-1][0]}")
            entries.append((index, value))
    return BFile(sequence_id, tuple(entries))


@dataclass(frozen=True)
class ComparisonReport:
    sequence_id: str
    checked: int
    skipped: int
    mismatches: tuple[tuple[int, int, int], ...]  # (index, file value, computed)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        head = (f"{self.sequence_id}: {self.checked} entries checked, "
                f"{self.skipped} skipped")
        if self.ok:
            return head + ", all agree"
        lines = [head + f", {len(self.mismatches)} MISMATCH(ES)"]
        for index, got, want in self.mismatches[:10]:
            lines.append(f"  index {index}: file has {got}, computed {want}")
        if len(self.mismatches) > 10:
            lines.append(f"  ... and {len(self.mismatches) - 10} more")
        return "\n".join(lines)


def compare_bfile(sequence_id: str, path: str,
                  max_terms: int | None = None) -> ComparisonReport:
    """Check every in-range entry of the file against the pinned generator."""
    key = sequence_id.lower()
    if key not in SEQUENCES:
        raise BFileError(
            f"unknown sequence id {sequence_id!r}; "
            f"known: {', '.join(sorted(SEQUENCES))}")
    seq = SEQUENCES[key]
    data = parse_bfile(path, key)
    checked = skipped = 0
    mismatches: list[tuple[int, int, int]] = []
    for index, value in data.entries:
        if index < seq.min_index or (max_terms is not None and checked >= max_terms):
            skipped += 1
            continue
        computed = seq.value(index)
        checked += 1
        if computed != value:
            mismatches.append((index, value, computed))
    return ComparisonReport(key, checked, skipped, tuple(mismatches))
