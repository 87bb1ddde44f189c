"""Analytic safety thresholds and the fail-safe collision-avoidance checker.

speed_threshold returns the unique positive speed at which the required safe
distance equals the next-step gap; any larger updated estimate means the
controller's spacing constraint is violated one step ahead. The measurement
bound inverts the Kalman update to find the smallest reported speed that can
push the posterior above that threshold. The theorem checker replays a
completed trace and verifies that, once the detector latches and braking is
enforced, the braking margin d - v^2/(2a) never goes negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .dynamics import PhysicalParams, safe_distance
from .ids import IdsConfig
from .trace import StepTrace, detect_collision

PHI_TOLERANCE = 1e-9
# Trace CSVs store floats with 9 significant digits, so a replayed trace can
# deviate from the exact arithmetic by a few 1e-7 on hundred-meter gaps.
CSV_PHI_TOLERANCE = 1e-5


@dataclass
class ThresholdInputs:
    d: float         # current gap, m
    v_l_next: float  # lead speed at t+dt, m/s
    v_h_next: float  # true host speed at t+dt, m/s
    params: PhysicalParams

    def predicted_gap(self) -> float:
        return self.d + (self.v_l_next - self.v_h_next) * self.params.dt


def speed_threshold(inputs: ThresholdInputs) -> float:
    """Unique positive root of v^2/(2a) + h*v - predicted_gap = 0."""
    gap = inputs.predicted_gap()
    if gap <= 0:
        raise ValueError(f"predicted next-step gap must be positive, got {gap}")
    a, h = inputs.params.a, inputs.params.h
    return a * (-h + math.sqrt(h * h + (2.0 / a) * gap))


def measurement_threshold(v_thr: float, v_hat_prior: float, gain: float) -> float:
    """Smallest measurement whose Kalman update lands the posterior above v_thr."""
    if not 0.0 < gain < 1.0:
        raise ValueError(f"gain must lie strictly in (0, 1), got {gain}")
    return (v_thr - (1.0 - gain) * v_hat_prior) / gain


def braking_margin(d: float, v_h: float, params: PhysicalParams) -> float:
    """Gap minus the distance needed to brake to a stop from v_h."""
    return d - v_h * v_h / (2.0 * params.a)


@dataclass
class TheoremReport:
    passed: bool
    vacuous: bool = False
    part_a: Optional[bool] = None
    part_b: Optional[bool] = None
    attack_start: Optional[int] = None
    detection_step: Optional[int] = None
    collision_step: Optional[int] = None
    max_phi_residual: float = 0.0
    failed_assumptions: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_text(self) -> str:
        lines = ["fail-safe braking check"]
        lines.append(f"  result: {'PASS' if self.passed else 'FAIL'}"
                     + (" (vacuous)" if self.vacuous else ""))
        lines.append(f"  attack_start: {self.attack_start}")
        lines.append(f"  detection_step: {self.detection_step}")
        lines.append(f"  collision_step: {self.collision_step}")
        if self.part_a is not None:
            lines.append(f"  braking_distance_at_detection (A): "
                         f"{'ok' if self.part_a else 'violated'}")
        if self.part_b is not None:
            lines.append(f"  braking_margin_invariant (B): "
                         f"{'ok' if self.part_b else 'violated'}")
            lines.append(f"  max_phi_residual: {self.max_phi_residual:.3e}")
        for name in self.failed_assumptions:
            lines.append(f"  assumption failed: {name}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


def check_theorem(trace: Sequence[StepTrace], params: PhysicalParams,
                  ids_cfg: IdsConfig,
                  tolerance: float = PHI_TOLERANCE) -> TheoremReport:
    """Verify the post-detection braking guarantee on a completed run.

    tolerance bounds every numeric comparison, including the per-step
    braking-margin identity; use CSV_PHI_TOLERANCE for traces that went
    through the 9-significant-digit CSV format.
    """
    collision = detect_collision(trace)
    attack_rows = [row.t for row in trace if row.attack_active]
    detect_rows = [row.t for row in trace if row.s_flag]
    t_star = attack_rows[0] if attack_rows else None
    t_bar = detect_rows[0] if detect_rows else None

    report = TheoremReport(passed=True, attack_start=t_star,
                           detection_step=t_bar, collision_step=collision)

    if t_star is None:
        # No attack: the guarantee's premises never trigger.
        report.vacuous = True
        report.notes.append("no attack in trace; nothing to verify")
        report.passed = collision is None
        if collision is not None:
            report.notes.append("collision occurred without any attack")
        return report

    if t_bar is None:
        report.vacuous = True
        report.passed = collision is None
        if collision is not None:
            report.notes.append("collision occurred and the IDS never detected "
                                "the attack (fail-safe was never engaged)")
        else:
            report.notes.append("attack present but never detected; guarantee "
                                "not exercised")
        return report

    rows = {row.t: row for row in trace}
    failed = report.failed_assumptions

    # Initial condition: safe gap at engagement.
    first = trace[0]
    if not (first.d > 0 and first.d >= safe_distance(first.v_h_true, params) - tolerance):
        failed.append("initial gap below the true safe distance (d(0) >= d_safe(0))")
    # Lead never reverses.
    if any(row.v_l < 0 for row in trace):
        failed.append("lead speed went negative")
    # Safe gap at the attack start.
    row_star = rows[t_star]
    if row_star.d < safe_distance(row_star.v_h_true, params) - tolerance:
        failed.append("gap below the true safe distance at the attack start")
    # Bounded detection delay, within the reaction-time budget.
    n = ids_cfg.max_delay_steps
    if n * params.dt > params.h:
        failed.append("delay bound exceeds the headway budget (N*dt <= h)")
    if t_bar < t_star:
        failed.append("detection precedes the attack start")
    elif t_bar - t_star > n:
        failed.append(f"detection delay {t_bar - t_star} steps exceeds the "
                      f"bound of {n}")
    # Detection-window speeds bounded by the speed at the attack start.
    window = [rows[t].v_h_true for t in range(t_star + 1, t_bar + 1) if t in rows]
    if window and max(window) > row_star.v_h_true + tolerance:
        failed.append("host speed rose above its attack-start value before detection")

    if failed:
        report.passed = False
        report.vacuous = True
        report.notes.append("preconditions not met; the guarantee is vacuous here")
        return report

    # (A) enough gap to brake to a stop at detection time.
    row_bar = rows[t_bar]
    report.part_a = row_bar.d >= row_bar.v_h_true ** 2 / (2.0 * params.a) - tolerance

    # (B) braking margin stays non-negative, with the exact one-step identity
    # while braking at -a; once the host speed clamps at zero the identity no
    # longer applies and the gap itself must be nondecreasing.
    part_b = True
    max_resid = 0.0
    post = [row for row in trace if row.t >= t_bar]
    for row in post:
        if braking_margin(row.d, row.v_h_true, params) < -tolerance or row.d <= 0:
            part_b = False
            break
    if part_b:
        for prev, cur in zip(post, post[1:]):
            if prev.v_h_true > 0 and cur.v_h_true > 0:
                resid = abs(braking_margin(cur.d, cur.v_h_true, params)
                            - braking_margin(prev.d, prev.v_h_true, params)
                            - cur.v_l * params.dt
                            - params.a * params.dt ** 2 / 2.0)
                max_resid = max(max_resid, resid)
                if resid > tolerance:
                    part_b = False
                    break
            elif cur.d < prev.d - tolerance:
                part_b = False
                break
    report.part_b = part_b
    report.max_phi_residual = max_resid
    report.passed = bool(report.part_a and report.part_b and collision is None)
    return report
