"""Deterministic ACC simulator with Kalman filtering, spoofing attacks, and IDS fail-safe."""

from .config import ConfigError, ScenarioConfig, config_from_dict, load_config
from .controller import (ControllerState, PidGains, acc_ids_control, pid_step,
                         select_error)
from .dynamics import (LeadBehavior, LeadVehicle, PhysicalParams, WorldState,
                       safe_distance, step_gap, step_host_speed)
from .estimator import KfParams, KfState, kf_hold, kf_predict, kf_update
from .harness import SweepResult, run_scenario, sweep_accuracy, write_sweep_csv
from .ids import IdsConfig, IdsState, ids_step
from .safety import (ThresholdInputs, braking_margin, check_theorem,
                     measurement_threshold, speed_threshold)
from .threat import AttackProfile, SensorModel, measure
from .trace import StepTrace, detect_collision, read_trace_csv, write_trace_csv

__all__ = [
    "AttackProfile", "ConfigError", "ControllerState", "IdsConfig", "IdsState",
    "KfParams", "KfState", "LeadBehavior", "LeadVehicle", "PhysicalParams",
    "PidGains", "ScenarioConfig", "SensorModel", "StepTrace", "SweepResult",
    "ThresholdInputs", "WorldState", "acc_ids_control", "braking_margin",
    "check_theorem", "config_from_dict", "detect_collision", "ids_step",
    "kf_hold", "kf_predict", "kf_update", "load_config", "measure",
    "measurement_threshold", "pid_step", "read_trace_csv", "run_scenario",
    "safe_distance", "select_error", "speed_threshold", "step_gap",
    "step_host_speed", "sweep_accuracy", "write_sweep_csv", "write_trace_csv",
]
