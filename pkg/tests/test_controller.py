import pytest
from hypothesis import given, strategies as st

from accsim.controller import (CRUISE, SPACING, ControllerState,
                               DEFAULT_CRUISE_GAINS, DEFAULT_SPACING_GAINS,
                               PidGains, acc_ids_control, pid_step,
                               select_error)
from accsim.dynamics import PhysicalParams


def make_state(**kwargs):
    kwargs.setdefault("v_ref", 25.0)
    return ControllerState(**kwargs)


class TestSelectError:
    def test_far_gap_tracks_speed(self):
        mode, err = select_error(d=200.0, d_safe=90.0, v_ref=25.0,
                                 v_est=20.0, switch_ratio=1.2)
        assert mode == CRUISE
        assert err == pytest.approx(5.0)

    def test_close_gap_tracks_spacing(self):
        mode, err = select_error(d=100.0, d_safe=90.0, v_ref=25.0,
                                 v_est=20.0, switch_ratio=1.2)
        assert mode == SPACING
        assert err == pytest.approx(10.0)

    def test_boundary_engages_spacing(self):
        mode, _ = select_error(d=108.0, d_safe=90.0, v_ref=25.0,
                               v_est=20.0, switch_ratio=1.2)
        assert mode == SPACING

    def test_spacing_error_negative_when_too_close(self):
        _, err = select_error(d=50.0, d_safe=90.0, v_ref=25.0,
                              v_est=20.0, switch_ratio=1.2)
        assert err == pytest.approx(-40.0)


class TestPidStep:
    def test_first_step_cruise_gains(self):
        state = make_state()
        u = pid_step(5.0, state, DEFAULT_CRUISE_GAINS, dt=1.0)
        assert u == pytest.approx(1.5)  # 0.2*5 + 0.1*5 + 0*(5-0)
        assert state.e_prev == 5.0
        assert state.e_integral == pytest.approx(5.0)

    def test_large_negative_error_hits_lower_limit(self):
        state = make_state(mode=SPACING)
        u = pid_step(-10.0, state, DEFAULT_SPACING_GAINS, dt=1.0)
        assert u == state.u_limits[0] == -6.0

    def test_unclamped_value_matches_pid_formula(self):
        state = make_state(mode=SPACING, u_limits=(-100.0, 100.0))
        u = pid_step(-10.0, state, DEFAULT_SPACING_GAINS, dt=1.0)
        assert u == pytest.approx(-7.5)  # 0.5*-10 + 0.05*-10 + 0.2*-10

    def test_integral_accumulates(self):
        state = make_state(u_limits=(-100.0, 100.0))
        gains = PidGains(0.0, 1.0, 0.0)
        pid_step(2.0, state, gains, dt=1.0)
        assert pid_step(2.0, state, gains, dt=1.0) == pytest.approx(4.0)

    def test_derivative_uses_backward_difference(self):
        state = make_state(e_prev=1.0, u_limits=(-100.0, 100.0))
        u = pid_step(3.0, state, PidGains(0.0, 0.0, 2.0), dt=1.0)
        assert u == pytest.approx(4.0)  # 2 * (3 - 1) / 1

    def test_respects_dt(self):
        state = make_state(u_limits=(-100.0, 100.0))
        u = pid_step(2.0, state, PidGains(0.0, 1.0, 1.0), dt=0.5)
        assert u == pytest.approx(2.0 * 0.5 + 2.0 / 0.5)

    def test_rejects_nonpositive_dt(self):
        with pytest.raises(ValueError):
            pid_step(1.0, make_state(), DEFAULT_CRUISE_GAINS, dt=0.0)

    @given(e=st.floats(-50, 50), scale=st.floats(0.1, 3.0))
    def test_first_step_output_is_linear_in_error(self, e, scale):
        gains = PidGains(0.3, 0.05, 0.1)
        u1 = pid_step(e, make_state(u_limits=(-1e9, 1e9)), gains, dt=1.0)
        u2 = pid_step(e * scale, make_state(u_limits=(-1e9, 1e9)), gains, dt=1.0)
        assert u2 == pytest.approx(u1 * scale, abs=1e-6)

    def test_reset_history_clears_integral_and_prev(self):
        state = make_state(e_prev=3.0, e_integral=7.0)
        state.reset_history()
        assert state.e_prev == 0.0
        assert state.e_integral == 0.0


class TestAccIdsControl:
    def test_override_forces_emergency_braking(self):
        assert acc_ids_control(1, 2.0, PhysicalParams()) == pytest.approx(-3.4)

    def test_no_flag_passes_nominal_command(self):
        assert acc_ids_control(0, 1.7, PhysicalParams()) == pytest.approx(1.7)

    @given(u=st.floats(-6, 2.5), s=st.sampled_from([0, 1]))
    def test_output_is_one_of_the_two_branches(self, u, s):
        params = PhysicalParams()
        assert acc_ids_control(s, u, params) == (-params.a if s else u)
