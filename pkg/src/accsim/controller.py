"""Upper-level ACC control: PID law, cruise/spacing mode selection, IDS override."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dynamics import PhysicalParams

CRUISE = "cruise"
SPACING = "spacing"


@dataclass
class PidGains:
    kp: float
    ki: float
    kd: float


# Representative gains for a mid-size passenger car.
DEFAULT_CRUISE_GAINS = PidGains(kp=0.2, ki=0.1, kd=0.0)
DEFAULT_SPACING_GAINS = PidGains(kp=0.5, ki=0.05, kd=0.2)


@dataclass
class ControllerState:
    v_ref: float                 # driver-selected reference speed, m/s
    mode: str = CRUISE
    e_prev: float = 0.0
    e_integral: float = 0.0
    u_limits: tuple[float, float] = field(default=(-6.0, 2.5))

    def reset_history(self):
        # Error units change between modes (m vs m/s); history must not carry over.
        self.e_prev = 0.0
        self.e_integral = 0.0


def select_error(d: float, d_safe: float, v_ref: float, v_est: float,
                 switch_ratio: float) -> tuple[str, float]:
    """Pick the active mode and its tracking error.

    Spacing control engages when the lead constrains the host, i.e. the gap
    is within switch_ratio times the required safe distance; otherwise the
    controller tracks the reference speed using the filtered estimate.
    """
    if d <= switch_ratio * d_safe:
        return SPACING, d - d_safe
    return CRUISE, v_ref - v_est


def pid_step(error: float, state: ControllerState, gains: PidGains, dt: float) -> float:
    """Discrete PID: rectangle-rule integral, backward-difference derivative."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    state.e_integral += error * dt
    u = (gains.kp * error
         + gains.ki * state.e_integral
         + gains.kd * (error - state.e_prev) / dt)
    state.e_prev = error
    u_min, u_max = state.u_limits
    return min(max(u, u_min), u_max)


def acc_ids_control(s_flag: int, nominal_u: float, params: PhysicalParams) -> float:
    """Fail-safe law: enforce braking at -a whenever the IDS flags an intrusion."""
    return s_flag * (-params.a) + (1 - s_flag) * nominal_u
