import pytest

from accplots.render import (ACCURACY_SWEEP, DISTANCE_PANEL, SPEED_PANEL,
                             PlotSpec, RenderError, _first_collision, render)


def spec(kind, input_csv, out, **kwargs):
    return PlotSpec(kind=kind, input_csv=input_csv, output_image=out, **kwargs)


class TestRenderAllScenarios:
    def test_every_trace_renders_both_panels(self, baseline_trace,
                                             attack_kf_trace,
                                             attack_ids_trace, tmp_path):
        for i, trace in enumerate((baseline_trace, attack_kf_trace,
                                   attack_ids_trace)):
            for kind in (SPEED_PANEL, DISTANCE_PANEL):
                out = render(spec(kind, trace, tmp_path / f"{kind}_{i}.png"))
                assert out.exists() and out.stat().st_size > 0

    def test_sweep_csv_renders(self, sweep_csv, tmp_path):
        out = render(spec(ACCURACY_SWEEP, sweep_csv, tmp_path / "sweep.png"))
        assert out.exists() and out.stat().st_size > 0

    def test_title_is_accepted(self, baseline_trace, tmp_path):
        out = render(spec(SPEED_PANEL, baseline_trace, tmp_path / "t.png",
                          title="no attack"))
        assert out.exists()


class TestCollisionMarker:
    def test_unguarded_attack_trace_has_a_collision_step(self, attack_kf_trace):
        step = _first_collision(attack_kf_trace)
        assert step is not None and step > 0

    def test_no_attack_trace_has_none(self, baseline_trace):
        assert _first_collision(baseline_trace) is None

    def test_guarded_attack_trace_has_none(self, attack_ids_trace):
        assert _first_collision(attack_ids_trace) is None

    def test_marker_changes_the_rendered_image(self, baseline_trace,
                                               attack_kf_trace, tmp_path):
        a = render(spec(DISTANCE_PANEL, baseline_trace, tmp_path / "a.png"))
        b = render(spec(DISTANCE_PANEL, attack_kf_trace, tmp_path / "b.png"))
        assert a.read_bytes() != b.read_bytes()


class TestDeterminism:
    def test_rerun_overwrites_byte_identically(self, attack_kf_trace, tmp_path):
        out = tmp_path / "again.png"
        first = render(spec(DISTANCE_PANEL, attack_kf_trace, out)).read_bytes()
        second = render(spec(DISTANCE_PANEL, attack_kf_trace, out)).read_bytes()
        assert first == second


class TestErrors:
    def test_unknown_kind_rejected(self, baseline_trace, tmp_path):
        with pytest.raises(RenderError, match="unknown plot kind"):
            PlotSpec(kind="pie_chart", input_csv=baseline_trace,
                     output_image=tmp_path / "x.png")

    def test_missing_column_names_the_column(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("t,v_h_true,v_l,z\n0,20,25,20.1\n")
        with pytest.raises(RenderError, match="v_thr"):
            render(spec(SPEED_PANEL, bad, tmp_path / "x.png"))

    def test_empty_csv_errors_and_writes_nothing(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("")
        out = tmp_path / "never.png"
        with pytest.raises(RenderError, match="empty"):
            render(spec(SPEED_PANEL, empty, out))
        assert not out.exists()

    def test_header_only_csv_errors_and_writes_nothing(self, tmp_path):
        header_only = tmp_path / "header.csv"
        header_only.write_text("t,v_h_true,v_l,z,v_thr\n")
        out = tmp_path / "never.png"
        with pytest.raises(RenderError, match="no data rows"):
            render(spec(SPEED_PANEL, header_only, out))
        assert not out.exists()

    def test_nonexistent_input(self, tmp_path):
        with pytest.raises(RenderError, match="cannot read"):
            render(spec(SPEED_PANEL, tmp_path / "ghost.csv",
                        tmp_path / "x.png"))
