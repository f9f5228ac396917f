"""CSV and JSON encodings of a :class:`PBernoulliTable`.

Each cell is written as ``n, p, numerator, denominator`` with the fraction in
lowest terms.  Rows are n-major.  In JSON the numerator and denominator are
decimal strings so that no consumer truncates them to a double.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .pbern import PBernoulliTable

CSV_HEADER = ("n", "p", "numerator", "denominator")


def table_to_csv(table: PBernoulliTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for n, p, value in table.cells():
        writer.writerow((n, p, value.numerator, value.denominator))
    return buf.getvalue()


def table_to_records(table: PBernoulliTable) -> list[dict]:
    return [
        {
            "n": n,
            "p": p,
            "numerator": str(value.numerator),
            "denominator": str(value.denominator),
        }
        for n, p, value in table.cells()
    ]


def table_to_json(table: PBernoulliTable) -> str:
    return json.dumps(table_to_records(table), indent=2) + "\n"


def _from_cells(cells: list[tuple[int, int, Fraction]]) -> PBernoulliTable:
    if not cells:
        raise ValueError("empty table")
    n_max = max(c[0] for c in cells)
    p_max = max(c[1] for c in cells)
    grid: list[list[Fraction | None]] = [[None] * (p_max + 1) for _ in range(n_max + 1)]
    for n, p, value in cells:
        if grid[n][p] is not None:
            raise ValueError(f"duplicate cell n={n}, p={p}")
        grid[n][p] = value
    for n, row in enumerate(grid):
        for p, value in enumerate(row):
            if value is None:
                raise ValueError(f"missing cell n={n}, p={p}")
    return PBernoulliTable(n_max, p_max, tuple(tuple(row) for row in grid))


def _fraction(num: str | int, den: str | int) -> Fraction:
    num, den = int(num), int(den)
    value = Fraction(num, den)
    if den <= 0 or value.numerator != num:
        raise ValueError(f"{num}/{den} is not in lowest terms with positive denominator")
    return value


def table_from_csv(text: str) -> PBernoulliTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    cells = [(int(n), int(p), _fraction(num, den)) for n, p, num, den in reader]
    return _from_cells(cells)


def table_from_json(text: str) -> PBernoulliTable:
    records = json.loads(text)
    cells = [
        (int(r["n"]), int(r["p"]), _fraction(r["numerator"], r["denominator"]))
        for r in records
    ]
    return _from_cells(cells)
