import json
from fractions import Fraction as F

import pytest

from effvec.cli import main
from effvec.errors import ParseError
from effvec.io import (
    load_matrix,
    parse_matrix_text,
    parse_scalar,
    parse_vector_text,
    scalar_repr,
)


class TestParseScalar:
    def test_rational(self):
        assert parse_scalar("3/4") == F(3, 4)

    def test_int(self):
        v = parse_scalar("7")
        assert v == 7 and isinstance(v, F)

    def test_decimal_float(self):
        v = parse_scalar("0.5")
        assert v == 0.5 and isinstance(v, float)

    def test_decimal_exact_backend(self):
        v = parse_scalar("0.5", backend="exact")
        assert v == F(1, 2) and isinstance(v, F)

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_scalar("x/y")
        with pytest.raises(ParseError):
            parse_scalar("1/0")


class TestParseMatrix:
    def test_csv(self):
        A = parse_matrix_text("1,2\n1/2,1\n")
        assert A.n == 2 and A[0, 1] == 2 and A.exact

    def test_csv_comments_blanks(self):
        A = parse_matrix_text("# header\n\n1,3\n1/3,1\n")
        assert A[0, 1] == 3

    def test_json_dict(self):
        A = parse_matrix_text(json.dumps({"n": 2, "entries": [["1", "2"], ["1/2", "1"]]}))
        assert A[1, 0] == F(1, 2)

    def test_json_bare_list(self):
        A = parse_matrix_text("[[1, 2], [0.5, 1]]")
        assert not A.exact

    def test_json_n_mismatch(self):
        with pytest.raises(ParseError):
            parse_matrix_text(json.dumps({"n": 3, "entries": [[1, 2], [0.5, 1]]}))

    def test_backend_float_coercion(self):
        A = parse_matrix_text("1,2\n1/2,1\n", backend="float")
        assert not A.exact and A[0, 1] == 2.0


class TestParseVector:
    def test_row(self):
        assert parse_vector_text("1,2,3\n") == (F(1), F(2), F(3))

    def test_column(self):
        assert parse_vector_text("1\n2\n3\n") == (F(1), F(2), F(3))

    def test_json(self):
        assert parse_vector_text('["1/2", 2]') == (F(1, 2), F(2))

    def test_ragged(self):
        with pytest.raises(ParseError):
            parse_vector_text("1,2\n3\n")


def test_scalar_repr_round_trip():
    assert scalar_repr(F(3, 4)) == "3/4"
    assert scalar_repr(F(5)) == 5
    assert scalar_repr(0.25) == 0.25


# ---------------------------------------------------------------------------
# CLI


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


CC_CSV = "1,2,3,1/2\n1/2,1,1,1\n1/3,1,1,1\n2,1,1,1\n"


class TestCheckCommand:
    def test_efficient_exit_zero(self, files, capsys):
        m = files("m.csv", CC_CSV)
        v = files("v.csv", "3,2,1,2\n")
        assert main(["check", m, v, "--format", "json"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["status"] == "efficient"

    def test_inefficient_exit_one(self, files, capsys):
        m = files("m.csv", "1,2,3\n1/2,1,1\n1/3,1,1\n")
        v = files("v.csv", "3,2,1\n")
        assert main(["check", m, v, "--format", "json"]) == 1
        out = json.loads(capsys.readouterr().out)
        assert out["status"] == "inefficient"
        assert out["source_set"] and out["dominator"]

    def test_csv_format(self, files, capsys):
        m = files("m.csv", "1,2,3\n1/2,1,1\n1/3,1,1\n")
        v = files("v.csv", "3,2,1\n")
        assert main(["check", m, v, "--format", "csv"]) == 1
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "status,inefficient"
        assert lines[1].startswith("dominator,")

    def test_table_format_no_color(self, files, capsys, monkeypatch):
        monkeypatch.setenv("PCM_NO_COLOR", "1")
        m = files("m.csv", CC_CSV)
        v = files("v.csv", "3,2,1,2\n")
        assert main(["check", m, v]) == 0
        assert "EFFICIENT" in capsys.readouterr().out

    def test_missing_file_exit_two(self, capsys):
        assert main(["check", "/nonexistent/a.csv", "/nonexistent/b.csv"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_matrix_exit_two(self, files, capsys):
        m = files("m.csv", "1,2\n3,1\n")
        v = files("v.csv", "1,1\n")
        assert main(["check", m, v]) == 2

    def test_bad_tol_exit_two(self, files, capsys):
        m = files("m.csv", CC_CSV)
        v = files("v.csv", "3,2,1,2\n")
        assert main(["check", m, v, "--tol-edge", "0.5"]) == 2


class TestPerronCommand:
    def test_json_output(self, files, capsys):
        m = files("m.csv", "1,2,4,1\n1/2,1,2,1\n1/4,1/2,1,1\n1,1,1,1\n")
        rc = main(["perron", m, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert rc == 0 and out["verdict"]["status"] == "efficient"
        assert out["residual"] <= 1e-12
        assert out["lambda"] >= 4.0 - 1e-9

    def test_block_detection_fields(self, files, capsys):
        rows = "1,2,3,1/2,1,1\n1/2,1,1,1,1,1\n1/3,1,1,1,1,1\n2,1,1,1,1,1\n1,1,1,1,1,1\n1,1,1,1,1,1\n"
        m = files("m.csv", rows)
        main(["perron", m, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert out["block_indices"] == [1, 2, 3, 4]
        assert out["structure_ok"] is True

    def test_three_block_condition_reported(self, files, capsys):
        rows = "1,2,4,1,1\n1/2,1,3,1,1\n1/4,1/3,1,1,1\n1,1,1,1,1\n1,1,1,1,1\n"
        m = files("m.csv", rows)
        rc = main(["perron", m, "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert out["sufficient_condition"] == "cond1"

    def test_table_format(self, files, capsys, monkeypatch):
        monkeypatch.setenv("PCM_NO_COLOR", "1")
        m = files("m.csv", CC_CSV)
        main(["perron", m])
        out = capsys.readouterr().out
        assert "lambda" in out and "residual" in out


class TestGenerateCommand:
    def _records(self, capsys):
        return [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]

    def test_two_block(self, capsys):
        rc = main(["generate", "2block", "--n", "5", "--x", "3", "--count", "5",
                   "--seed", "11"])
        recs = self._records(capsys)
        assert rc == 0 and len(recs) == 5
        for r in recs:
            assert len(r["vector"]) == 5 and len(r["seed_head"]) == 2

    def test_three_block(self, capsys):
        rc = main(["generate", "3block", "--n", "6", "--a12", "2", "--a13", "8",
                   "--a23", "2", "--count", "4", "--seed", "7"])
        recs = self._records(capsys)
        assert rc == 0 and len(recs) == 4
        for r in recs:
            assert len(r["vector"]) == 6
            assert sorted(r["permutation"]) == [0, 1, 2]

    def test_constant(self, capsys):
        rc = main(["generate", "constant", "--n", "6", "--s", "4", "--x", "1/2",
                   "--count", "4", "--seed", "3"])
        recs = self._records(capsys)
        assert rc == 0 and len(recs) == 4

    def test_missing_params_exit_two(self, capsys):
        assert main(["generate", "2block", "--n", "5"]) == 2
        assert main(["generate", "3block", "--n", "5"]) == 2
        assert main(["generate", "constant", "--n", "5", "--x", "2"]) == 2


class TestReproduceCommand:
    def test_table1(self, capsys, monkeypatch):
        monkeypatch.setenv("PCM_NO_COLOR", "1")
        assert main(["reproduce", "table1"]) == 0
        out = capsys.readouterr().out
        assert "[PASS]" in out and "[FAIL]" not in out

    def test_all(self, capsys, monkeypatch):
        monkeypatch.setenv("PCM_NO_COLOR", "1")
        assert main(["reproduce", "all"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out[-1].endswith("checks passed")


def test_entry_point_installed():
    import shutil

    assert shutil.which("effvec") is not None
