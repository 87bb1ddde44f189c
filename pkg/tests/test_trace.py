import pytest

from accsim.trace import (TRACE_COLUMNS, StepTrace, detect_collision,
                          read_trace_csv, write_trace_csv)


def make_row(t=0, d=100.0, collided=0):
    return StepTrace(t=t, v_h_true=20.0, v_l=25.0, z=20.123456789,
                     v_hat_post=20.05, v_thr=22.0, z_min=24.1, d=d,
                     d_safe=94.8235294, u=-0.5, mode="cruise", s_flag=0,
                     attack_active=0, collided=collided)


class TestCsvContract:
    def test_header_is_exact(self, tmp_path):
        path = tmp_path / "t.csv"
        write_trace_csv([make_row()], path)
        first = path.read_text(encoding="utf-8").splitlines()[0]
        assert first == ",".join(TRACE_COLUMNS)
        assert first == ("t,v_h_true,v_l,z,v_hat_post,v_thr,z_min,"
                         "d,d_safe,u,mode,s_flag,attack_active,collided")

    def test_floats_use_nine_significant_digits(self, tmp_path):
        path = tmp_path / "t.csv"
        write_trace_csv([make_row()], path)
        data_line = path.read_text(encoding="utf-8").splitlines()[1]
        assert "20.1234568" in data_line  # z rounded to 9 significant digits
        assert "94.8235294" in data_line

    def test_file_ends_with_newline(self, tmp_path):
        path = tmp_path / "t.csv"
        write_trace_csv([make_row()], path)
        assert path.read_bytes().endswith(b"\n")

    def test_round_trip_preserves_values(self, tmp_path):
        path = tmp_path / "t.csv"
        rows = [make_row(t=k, d=100.0 - k) for k in range(5)]
        write_trace_csv(rows, path)
        back = read_trace_csv(path)
        assert len(back) == 5
        assert back[3].t == 3
        assert back[3].d == pytest.approx(97.0)
        assert back[3].mode == "cruise"

    def test_read_rejects_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ValueError, match="empty"):
            read_trace_csv(path)

    def test_read_rejects_missing_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,v_h_true\n0,20.0\n")
        with pytest.raises(ValueError, match="missing columns"):
            read_trace_csv(path)


class TestDetectCollision:
    def test_none_when_gap_stays_positive(self):
        assert detect_collision([make_row(t=k, d=50.0) for k in range(10)]) is None

    def test_first_nonpositive_gap_wins(self):
        rows = [make_row(t=0, d=10.0), make_row(t=1, d=0.0),
                make_row(t=2, d=-5.0)]
        assert detect_collision(rows) == 1

    def test_empty_trace(self):
        assert detect_collision([]) is None
