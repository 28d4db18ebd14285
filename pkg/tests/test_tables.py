"""Tests for the built-in tables.

All four numeric grids are frozen in full; the rendering tests only pin
shape and determinism, since the cell values are already covered.
"""

import pytest

from hilbtorus.tables import DEFAULT_MAX_N, TABLE_NUMBERS, render_table, table_data

C_AT_MINUS_ONE = [4, 4, 0, 4, 8, 0, 0, 4, 4, 8, 0, 0]

# columns: P_n(1), P_n(-1), |P_n(j)|, |P_n(i)|, a_{n,0}
REDUCED_COLUMNS = [
    (1, 1, 1, 1, 1),
    (3, 1, 0, 1, 1),
    (4, 0, 2, 2, 0),
    (7, 1, 1, 1, 1),
    (6, 2, 0, 0, 0),
    (12, 0, 0, 2, 2),
    (8, 0, 2, 0, 0),
    (15, 1, 0, 1, 1),
    (13, 1, 2, 3, 1),
    (18, 2, 0, 0, 0),
    (12, 0, 0, 2, 0),
    (28, 0, 2, 2, 2),
]

ABS_ROOT_ROWS = {
    2: [4, 4, 0, 4, 8, 0, 0, 4, 4, 8, 0, 0, 8, 0, 0, 4, 8, 4],
    3: [3, 0, 6, 3, 0, 0, 6, 0, 6, 0, 0, 6, 6, 0, 0, 3, 0, 0],
    4: [2, 2, 4, 2, 0, 4, 0, 2, 6, 0, 4, 4, 0, 0, 0, 2, 4, 6],
    6: [1, 2, 0, 1, 4, 0, 0, 2, 4, 2, 0, 0, 2, 0, 0, 1, 4, 4],
}

SECTION_ROWS = {
    # s_2(13) = (sigma(13) + r(13)/4)/2 = (14 + 2)/2 = 8: the even-exponent
    # coefficients of P_13 sit at {0,2,4,6,18,20,22,24}
    2: [1, 2, 2, 4, 4, 6, 4, 8, 7, 10, 6, 14, 8, 12, 12, 16, 10, 20],
    3: [1, 1, 2, 3, 2, 4, 4, 5, 5, 6, 4, 10, 6, 8, 8, 11, 6, 13],
    4: [1, 1, 2, 2, 2, 3, 2, 4, 5, 5, 4, 7, 4, 6, 6, 8, 6, 10],
    6: [1, 1, 1, 2, 2, 2, 2, 3, 2, 4, 2, 5, 4, 4, 4, 6, 4, 6],
}


def test_table_one():
    data = table_data(1)
    assert data["columns"] == ("n", "C_n(q)", "C_n(-1)")
    assert len(data["rows"]) == 12
    assert data["rows"][0] == (1, "q^2 - 2q + 1", 4)
    for n, row in enumerate(data["rows"], start=1):
        assert row[0] == n
        assert row[2] == C_AT_MINUS_ONE[n - 1]


def test_table_two():
    data = table_data(2)
    assert data["columns"] == ("n", "P_n(q)", "P_n(1)", "P_n(-1)",
                               "|P_n(j)|", "|P_n(i)|", "a_{n,0}")
    assert len(data["rows"]) == 12
    assert data["rows"][0][1] == "1"
    for n, row in enumerate(data["rows"], start=1):
        assert row[0] == n
        assert row[2:] == REDUCED_COLUMNS[n - 1]


def test_table_three():
    data = table_data(3)
    assert data["columns"] == ("n", "|a_2(n)|", "|a_3(n)|", "|a_4(n)|", "|a_6(n)|")
    assert len(data["rows"]) == 18
    for col, d in enumerate((2, 3, 4, 6), start=1):
        assert [row[col] for row in data["rows"]] == ABS_ROOT_ROWS[d], d


def test_table_four():
    data = table_data(4)
    assert data["columns"] == ("n", "s_2(n)", "s_3(n)", "s_4(n)", "s_6(n)")
    assert len(data["rows"]) == 18
    for col, k in enumerate((2, 3, 4, 6), start=1):
        assert [row[col] for row in data["rows"]] == SECTION_ROWS[k], k


def test_default_sizes():
    assert DEFAULT_MAX_N == {1: 12, 2: 12, 3: 18, 4: 18}
    for which in TABLE_NUMBERS:
        assert len(table_data(which)["rows"]) == DEFAULT_MAX_N[which]


def test_max_n_override():
    assert len(table_data(3, 5)["rows"]) == 5
    assert len(table_data(1, 20)["rows"]) == 20


def test_invalid_table_number():
    with pytest.raises(ValueError):
        table_data(5)
    with pytest.raises(ValueError):
        render_table(0)


def test_render_shape_and_determinism():
    text = render_table(4)
    assert text == render_table(4)
    lines = text.split("\n")
    assert len(lines) == 19
    assert lines[0] == "n\ts_2(n)\ts_3(n)\ts_4(n)\ts_6(n)"
    assert lines[1] == "1\t1\t1\t1\t1"
    assert lines[12] == "12\t14\t10\t7\t5"
