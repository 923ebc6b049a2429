import numpy as np
import pytest

from stockguard.ingest import (
    ColumnNotFoundError,
    DatasetError,
    Elec2Series,
    ValueRangeError,
    load_elec2,
    split_windows,
)


def write_csv(path, rows, header="date,nswprice,NSWdemand,transfer"):
    lines = [header] + [",".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return path


class TestLoadElec2:
    def test_small_fixture(self, tmp_path):
        f = write_csv(
            tmp_path / "elec.csv",
            [(1, 0.02, w, 0.5) for w in (0.1, 0.5, 0.9, 0.3)],
        )
        series = load_elec2(f, "nswdemand")
        assert len(series) == 4
        assert series.values.tolist() == [0.1, 0.5, 0.9, 0.3]

    def test_column_match_case_insensitive(self, tmp_path):
        f = write_csv(tmp_path / "elec.csv", [(1, 0.0, 0.5, 0.0)])
        assert load_elec2(f, "NSWDEMAND").values.tolist() == [0.5]

    def test_out_of_range_value(self, tmp_path):
        f = write_csv(tmp_path / "elec.csv", [(1, 0.0, 1.5, 0.0)])
        with pytest.raises(ValueRangeError):
            load_elec2(f, "nswdemand")

    def test_missing_column(self, tmp_path):
        f = write_csv(tmp_path / "elec.csv", [(1, 0.0, 0.5, 0.0)])
        with pytest.raises(ColumnNotFoundError):
            load_elec2(f, "bogus")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_elec2(tmp_path / "nope.csv")

    def test_unparseable_cell(self, tmp_path):
        f = write_csv(tmp_path / "elec.csv", [(1, 0.0, "abc", 0.0)])
        with pytest.raises(DatasetError):
            load_elec2(f, "nswdemand")


class TestSplitWindows:
    def series(self, n):
        return Elec2Series(values=np.linspace(0.0, 1.0, n), column="nswdemand")

    def test_boundary_length(self):
        T_hist, T = 3, 7
        s = self.series(2 * (T_hist + T))
        tuning, evaluation = split_windows(s, T_hist, T)
        assert len(tuning) == len(evaluation) == T_hist + T
        joined = np.concatenate([tuning, evaluation])
        assert np.array_equal(joined, s.values)

    def test_experiment_window_arithmetic(self):
        T_hist, T = 3 * 48, 12 * 7 * 48
        assert T_hist + T == 4176
        s = self.series(2 * 4176)
        tuning, evaluation = split_windows(s, T_hist, T)
        assert len(tuning) == 4176 and len(evaluation) == 4176

    def test_one_sample_short(self):
        T_hist, T = 3, 7
        s = self.series(2 * (T_hist + T) - 1)
        with pytest.raises(DatasetError):
            split_windows(s, T_hist, T)

    def test_windows_disjoint_contiguous(self):
        s = self.series(40)
        tuning, evaluation = split_windows(s, 4, 6)
        assert np.array_equal(tuning, s.values[:10])
        assert np.array_equal(evaluation, s.values[10:20])
