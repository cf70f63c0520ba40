import csv
import io
from fractions import Fraction

import pytest
from src.cli import main, parse_target_range
from src.exceptions import TableArgumentError
from src.services.pipeline.relevance import relevance


def _read_csv(path):
    return list(csv.reader(io.StringIO(path.read_text())))


class TestRun:
    def test_full_run_writes_listing_and_totals(self, liver_file, tmp_path):
        implications = tmp_path / "implications.txt"
        tsup = tmp_path / "tsup.csv"

        args = ["run", "--input", str(liver_file), "--target", "22", "--minsup", "3", "--pipeline", "full"]
        code = main(args + ["--emit-implications", str(implications), "--emit-tsup", str(tsup)])

        assert code == 0
        lines = implications.read_text().splitlines()
        assert lines[0] == "6 <=>"
        assert lines[2] == "8 <=> 7"
        assert lines[4] == "1; 1 4 -> 22 ; Support = 4; rows = 3, 4, 7, 8,"
        assert lines[-1] == "14; 21 14 -> 22 ; Support = 4; rows = 1, 4, 8, 10,"
        rows = _read_csv(tsup)
        assert rows[0] == ["column", "tsup"]
        assert rows[1] == ["1", "16"]
        assert rows[20] == ["20", "10"]
        assert rows[21] == ["21", "5.5"]

    def test_small_run_writes_totals_only(self, table1_file, capsys):
        code = main(["run", "--input", str(table1_file), "--target", "1", "--minsup", "1", "--pipeline", "small"])

        out = capsys.readouterr().out
        assert code == 0
        assert out == "column,tsup\n1,0\n2,3\n3,3\n4,1.5\n5,1.5\n6,0\n"

    def test_outputs_are_deterministic(self, liver_file, tmp_path):
        outputs = []
        for name in ("a", "b"):
            listing, totals = tmp_path / f"{name}.txt", tmp_path / f"{name}.csv"
            args = ["run", "--input", str(liver_file), "--target", "22", "--pipeline", "full"]
            assert main(args + ["--emit-implications", str(listing), "--emit-tsup", str(totals)]) == 0
            outputs.append((listing.read_bytes(), totals.read_bytes()))

        assert outputs[0] == outputs[1]

    def test_dump_transversals(self, table1_file, tmp_path):
        dump = tmp_path / "dump.txt"

        assert main(["run", "--input", str(table1_file), "--target", "1", "--dump-transversals", str(dump)]) == 0
        assert dump.read_text() == "3 2\n3 4\n5 2\n"

    def test_target_out_of_range(self, table1_file, capsys):
        code = main(["run", "--input", str(table1_file), "--target", "99"])

        assert code == 1
        assert "out of range" in capsys.readouterr().err

    def test_reducible_target(self, liver_file, capsys):
        code = main(["run", "--input", str(liver_file), "--target", "6"])

        assert code == 2
        assert "column 6 is reduced" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["run", "--input", str(tmp_path / "nope.txt"), "--target", "1"]) == 1

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1 0\n0 x\n")

        assert main(["run", "--input", str(path), "--target", "1"]) == 1
        assert "line 2, token 2" in capsys.readouterr().err

    def test_usage_error(self):
        assert main(["run", "--target", "1"]) == 1

    def test_non_utf8_input(self, tmp_path, capsys):
        path = tmp_path / "binary.txt"
        path.write_bytes(b"0 1\n\xff\xfe 1\n")

        assert main(["run", "--input", str(path), "--target", "1"]) == 1
        assert "not UTF-8" in capsys.readouterr().err

    def test_small_pipeline_rejects_implication_listing(self, table1_file, tmp_path, capsys):
        path = tmp_path / "imp.txt"

        code = main(["run", "--input", str(table1_file), "--target", "1", "--pipeline", "small", "--emit-implications", str(path)])

        assert code == 1
        assert "keeps no implications" in capsys.readouterr().err

    def test_cap(self, liver_file, tmp_path):
        dump = tmp_path / "dump.txt"

        assert main(["run", "--input", str(liver_file), "--target", "22", "--cap", "4", "--dump-transversals", str(dump)]) == 0
        assert len(dump.read_text().splitlines()) == 4

    def test_implications_pass_confidence_check(self, liver_file, tmp_path, liver):
        path = tmp_path / "imp.txt"
        main(["run", "--input", str(liver_file), "--target", "22", "--pipeline", "full", "--emit-implications", str(path)])

        for line in path.read_text().splitlines():
            if "->" not in line:
                continue
            antecedent = [int(v) - 1 for v in line.split(";")[1].split("->")[0].split()]
            for row in liver.rows:
                if all(row >> y & 1 for y in antecedent):
                    assert row >> 21 & 1


class TestRelevance:
    def test_table1(self, table1_file, tmp_path):
        out = tmp_path / "relevance.csv"
        t_csv, not_t_csv = tmp_path / "t.csv", tmp_path / "not_t.csv"

        assert main(["relevance", "--input", str(table1_file), "--target", "1", "--out", str(out)]) == 0
        main(["run", "--input", str(table1_file), "--target", "1", "--emit-tsup", str(t_csv)])
        main(["run", "--input", str(table1_file), "--target", "1", "--negate", "--emit-tsup", str(not_t_csv)])

        tsup_t = [Fraction(r[1]) for r in _read_csv(t_csv)[1:]]
        tsup_not_t = [Fraction(r[1]) for r in _read_csv(not_t_csv)[1:]]
        oracle = relevance(tsup_t, tsup_not_t)

        rows = _read_csv(out)
        assert rows[0] == ["column", "tsup_t", "tsup_not_t", "relevance"]
        assert sorted(int(r[0]) for r in rows[1:]) == [2, 3, 4, 5, 6]
        for r in rows[1:]:
            assert float(r[3]) == pytest.approx(float(oracle[int(r[0]) - 1]), abs=0.01)
        assert [float(r[3]) for r in rows[1:]] == sorted((float(r[3]) for r in rows[1:]), reverse=True)

    def test_empty_complement_extent(self, liver_file, capsys):
        code = main(["relevance", "--input", str(liver_file), "--target", "6"])

        assert code == 2
        assert "target column 6" in capsys.readouterr().err


class TestBench:
    def test_liver_sweep(self, liver_file, tmp_path):
        out = tmp_path / "bench.csv"

        assert main(["bench", "--input", str(liver_file), "--targets", "1-22", "--minsup", "1", "--out", str(out)]) == 0
        rows = _read_csv(out)
        assert len(rows) == 1 + 22 + 2
        assert [r[0] for r in rows[1:23] if r[1] == "starred"] == ["6", "8"]

    def test_single_target_range(self, liver_file, capsys):
        assert main(["bench", "--input", str(liver_file), "--targets", "5-5"]) == 0

        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert len(rows) == 1 + 1 + 2
        assert rows[1][0] == "5"

    def test_savings_column_recomputes(self, liver_file, tmp_path):
        out = tmp_path / "bench.csv"
        main(["bench", "--input", str(liver_file), "--targets", "20-22", "--out", str(out)])

        for r in _read_csv(out)[1:4]:
            orig, small = int(r[2]), int(r[3])
            assert float(r[5]) == pytest.approx((orig - small) / orig * 100, abs=0.01)

    def test_bad_range(self, liver_file):
        assert main(["bench", "--input", str(liver_file), "--targets", "9-3"]) == 1

    @pytest.mark.parametrize("workers", ["0", "-1"])
    def test_invalid_worker_count(self, liver_file, capsys, workers):
        code = main(["bench", "--input", str(liver_file), "--targets", "1-2", "--workers", workers])

        assert code == 1
        assert "workers and repeats must be at least 1" in capsys.readouterr().err


@pytest.mark.parametrize("text,expected", [("5", [5]), ("1-3", [1, 2, 3]), ("4-4", [4])])
def test_parse_target_range(text, expected):
    assert parse_target_range(text) == expected


@pytest.mark.parametrize("text", ["0-2", "a-b", "3-1", ""])
def test_parse_target_range_rejects(text):
    with pytest.raises(TableArgumentError):
        parse_target_range(text)
