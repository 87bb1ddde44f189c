"""Scenario orchestration: wires plant, sensor, estimator, controller, and IDS.

Per-step order: lead update, measurement, filter prediction, threshold
computation, IDS decision, filter update (or hold when flagged), perceived
safe distance, error selection and PID, fail-safe override, plant update,
collision check. The measurement is screened by the IDS before the filter
update so a flagged spoof never contaminates the estimate.

Plant coupling: the low-level actuation loop closes on the reported speed,
so while the sensor is trusted the host's next speed is the filtered estimate
plus the commanded acceleration. Once the IDS override is active the system
ignores the sensor entirely and brakes open loop on the true speed. The gap
always evolves with the host's actual end-of-step speed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import controller as ctl
from .config import ConfigError, ScenarioConfig
from .dynamics import LeadVehicle, safe_distance, step_gap, step_host_speed
from .estimator import KfParams, initial_state, kf_gain, kf_hold, kf_predict, kf_update
from .ids import IdsState, ids_step
from .safety import ThresholdInputs, measurement_threshold, speed_threshold
from .threat import SensorModel, measure
from .trace import StepTrace, detect_collision  # noqa: F401  (re-exported)


@dataclass
class SweepResult:
    accuracy: float
    time_to_crash: int  # horizon + 1 when censored
    censored: bool
    seed: int


def run_scenario(cfg: ScenarioConfig) -> list[StepTrace]:
    p = cfg.physical
    streams = np.random.SeedSequence(cfg.seed).spawn(3)
    lead = LeadVehicle(cfg.lead, p, np.random.default_rng(streams[0]))
    sensor = SensorModel(cfg.noise_std, np.random.default_rng(streams[1]))
    ids_rng = np.random.default_rng(streams[2])

    kf_params = replace(cfg.kf, v0=cfg.initial_speed)
    kf = initial_state(kf_params)
    control = ctl.ControllerState(v_ref=cfg.v_ref, u_limits=cfg.u_limits)
    ids_state = IdsState()

    v_h = float(cfg.initial_speed)
    v_l = float(cfg.initial_speed)
    d = cfg.initial_gap_ratio * safe_distance(v_h, p)
    u_applied = 0.0

    rows: list[StepTrace] = []
    frozen: Optional[StepTrace] = None

    for t in range(cfg.horizon):
        if frozen is not None:
            rows.append(replace(frozen, t=t))
            continue
        if d <= 0.0:
            frozen = StepTrace(t=t, v_h_true=v_h, v_l=v_l, z=v_h,
                               v_hat_post=kf.v_post, v_thr=0.0, z_min=0.0,
                               d=d, d_safe=safe_distance(max(kf.v_post, 0.0), p),
                               u=0.0, mode=control.mode, s_flag=int(ids_state.latched),
                               attack_active=int(cfg.attack.active(t)), collided=1)
            rows.append(frozen)
            continue

        v_l_next = lead.step(v_l)
        z = measure(v_h, t, cfg.attack, sensor)

        kf = kf_predict(kf, kf_params)
        gain = kf_gain(kf.p_prior, kf_params.r)
        # Controller-side one-step prediction of the true host speed, using the
        # last applied acceleration (attack- and noise-free by construction).
        v_h_pred = step_host_speed(v_h, u_applied, p)
        inputs = ThresholdInputs(d=d, v_l_next=v_l_next, v_h_next=v_h_pred, params=p)
        if inputs.predicted_gap() > 0:
            v_thr = speed_threshold(inputs)
        else:
            v_thr = 0.0  # gap about to close: any speed counts as a violation
        z_min = measurement_threshold(v_thr, kf.v_prior, gain)

        if cfg.ids_enabled:
            s = ids_step(z, z_min, t, ids_state, cfg.ids, ids_rng)
        else:
            s = 0

        kf = kf_hold(kf, kf_params) if s else kf_update(kf, z, kf_params)
        d_safe_hat = safe_distance(max(kf.v_post, 0.0), p)

        mode, error = ctl.select_error(d, d_safe_hat, cfg.v_ref, kf.v_post,
                                       cfg.switch_ratio)
        if mode != control.mode:
            control.mode = mode
            control.reset_history()
        gains = cfg.gains_spacing if mode == ctl.SPACING else cfg.gains_cruise
        u_nominal = ctl.pid_step(error, control, gains, p.dt)
        u = ctl.acc_ids_control(s, u_nominal, p)

        base_speed = v_h if s else max(kf.v_post, 0.0)
        v_h_next = step_host_speed(base_speed, u, p)
        d_next = step_gap(d, v_l_next, v_h_next, p)

        rows.append(StepTrace(t=t, v_h_true=v_h, v_l=v_l, z=z,
                              v_hat_post=kf.v_post, v_thr=v_thr, z_min=z_min,
                              d=d, d_safe=d_safe_hat, u=u, mode=mode, s_flag=s,
                              attack_active=int(cfg.attack.active(t)), collided=0))

        u_applied = u
        v_h, v_l, d = v_h_next, v_l_next, d_next

    return rows


def derived_seed(base_seed: int, grid_index: int, repeat_index: int) -> int:
    ss = np.random.SeedSequence([base_seed, grid_index, repeat_index])
    return int(ss.generate_state(1)[0])


def sweep_accuracy(cfg: ScenarioConfig, grid: Sequence[float],
                   repeats: int = 1) -> list[SweepResult]:
    """Run the attack scenario across an IDS-accuracy grid with derived seeds."""
    if not cfg.attack.enabled:
        raise ConfigError("accuracy sweep requires the attack to be enabled")
    if cfg.ids.enforce_delay_bound:
        raise ConfigError("accuracy sweep requires the delay backstop to be off "
                          "so accuracy alone drives detection")
    if repeats < 1:
        raise ConfigError(f"repeats must be >= 1, got {repeats}")
    grid = sorted(grid)
    results = []
    for gi, accuracy in enumerate(grid):
        for ri in range(repeats):
            seed = derived_seed(cfg.seed, gi, ri)
            sub = replace(cfg, seed=seed, ids=replace(cfg.ids, accuracy=accuracy),
                          ids_enabled=True)
            trace = run_scenario(sub)
            crash = detect_collision(trace)
            results.append(SweepResult(
                accuracy=accuracy,
                time_to_crash=crash if crash is not None else cfg.horizon + 1,
                censored=crash is None,
                seed=seed))
    return results


def write_sweep_csv(results: Sequence[SweepResult], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write("accuracy,time_to_crash,censored,seed\n")
        for r in results:
            f.write(f"{format(r.accuracy, '.9g')},{r.time_to_crash},"
                    f"{int(r.censored)},{r.seed}\n")
