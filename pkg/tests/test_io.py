"""Text and JSON serialisation: round-trips, malformed inputs, alignment."""

import json

import numpy as np
import pytest
from hypothesis import given

from minplus import (
    BadToken,
    Empty,
    INT64_MAX,
    RaggedRows,
    format_matrix,
    identity,
    load_matrix,
    matrix_json_obj,
    parse_matrix,
    scalar_mul,
)
from tutil import lists, mat, matrices, random_lists


class TestParse:
    def test_identity(self):
        assert parse_matrix("0 E\nE 0") == identity(2)

    def test_golden_table(self, fixtures_dir):
        doc = load_matrix(fixtures_dir / "p31_A.txt")
        assert doc.source_name.endswith("p31_A.txt")
        assert lists(doc.matrix) == [
            [12, 0, None, 3, 5],
            [-1, 0, 2, None, 7],
            [5, 3, 1, 8, 0],
        ]

    def test_inline_golden_text(self):
        text = "12 0 E 3 5\n-1 0 2 E 7\n5 3 1 8 0"
        assert lists(parse_matrix(text)) == [
            [12, 0, None, 3, 5],
            [-1, 0, 2, None, 7],
            [5, 3, 1, 8, 0],
        ]

    def test_ragged_rows(self):
        with pytest.raises(RaggedRows):
            parse_matrix("1 2\n3")

    def test_bad_token(self):
        with pytest.raises(BadToken):
            parse_matrix("1 x\n2 3")

    def test_bad_token_reports_line(self):
        with pytest.raises(BadToken, match="line 2"):
            parse_matrix("1 2\n3 oops")

    def test_lowercase_e_is_rejected(self):
        with pytest.raises(BadToken):
            parse_matrix("1 e")

    def test_empty_inputs(self):
        for text in ("", "   ", "\n\n", " \t \r\n"):
            with pytest.raises(Empty):
                parse_matrix(text)

    def test_crlf_and_blank_lines(self):
        assert parse_matrix("0 E\r\n\r\nE 0\r\n\n") == identity(2)

    def test_tabs_and_extra_spaces(self):
        assert parse_matrix("  0\t E  \nE    0") == identity(2)

    def test_out_of_range_token(self):
        assert parse_matrix(str(INT64_MAX)).entry(0, 0).value == INT64_MAX
        with pytest.raises(BadToken):
            parse_matrix(str(INT64_MAX + 1))

    def test_single_column(self):
        assert lists(parse_matrix("10\n-2\n3")) == [[10], [-2], [3]]


class TestFormatText:
    def test_identity(self):
        assert format_matrix(identity(2)) == "0 E\nE 0"

    def test_columns_right_aligned(self, fixtures_dir):
        scaled = scalar_mul(-5, load_matrix(fixtures_dir / "p33_A.txt").matrix)
        assert format_matrix(scaled) == "-1 -12  3  E\n 0   E -5  3\n 4  -3 -2 -4"

    def test_no_trailing_whitespace(self):
        text = format_matrix(mat([[100, 1], [1, None]]))
        assert text == "100 1\n  1 E"
        assert all(line == line.rstrip() for line in text.splitlines())

    def test_rejects_unknown_format(self):
        with pytest.raises(ValueError):
            format_matrix(identity(1), "yaml")


class TestFormatJson:
    def test_single_negative_entry(self):
        assert format_matrix(mat([[-5]]), "json") == '{"rows":1,"cols":1,"entries":[[-5]]}'

    def test_epsilon_encoded_as_string(self):
        obj = json.loads(format_matrix(identity(2), "json"))
        assert obj == {"rows": 2, "cols": 2, "entries": [[0, "E"], ["E", 0]]}

    def test_json_obj_matches_dump(self):
        m = mat([[1, None], [2, 3]])
        assert json.loads(format_matrix(m, "json")) == matrix_json_obj(m)


class TestRoundTrip:
    @given(a=matrices(max_rows=8, max_cols=8, lo=-(10**6), hi=10**6))
    def test_parse_format_identity(self, a):
        assert parse_matrix(format_matrix(a)) == a

    @given(a=matrices(max_rows=6, max_cols=6, lo=-(10**6), hi=10**6))
    def test_json_survives_reload(self, a):
        obj = json.loads(format_matrix(a, "json"))
        rebuilt = mat(
            [[None if v == "E" else v for v in row] for row in obj["entries"]]
        )
        assert rebuilt == a

    def test_seeded_fuzz(self):
        rng = np.random.default_rng(8)
        for _ in range(250):
            m = int(rng.integers(1, 9))
            n = int(rng.integers(1, 9))
            a = mat(random_lists(rng, m, n, lo=-(10**6), hi=10**6))
            assert parse_matrix(format_matrix(a)) == a


class TestLoadMatrix:
    def test_reads_file(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("1 2\n3 E\n", encoding="utf-8")
        doc = load_matrix(path)
        assert lists(doc.matrix) == [[1, 2], [3, None]]

    def test_error_names_the_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 2\n3\n", encoding="utf-8")
        with pytest.raises(RaggedRows, match="bad.txt"):
            load_matrix(path)

    def test_missing_file_is_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_matrix(tmp_path / "nope.txt")
