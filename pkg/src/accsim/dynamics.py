"""Discrete-time longitudinal plant: host speed, gap evolution, safe distance, lead vehicle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass
class PhysicalParams:
    """Shared physical constants of the longitudinal model."""

    dt: float = 1.0      # sampling period, s
    h: float = 1.8       # headway time, s
    a: float = 3.4       # comfortable braking deceleration, m/s^2
    v_max: float = 40.0  # speed cap for both vehicles, m/s

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not 1.5 <= self.h <= 2.5:
            raise ValueError(f"headway time must be in [1.5, 2.5], got {self.h}")
        if not self.a >= 3.4:
            raise ValueError(f"braking deceleration must be >= 3.4, got {self.a}")
        if not self.v_max > 0:
            raise ValueError(f"v_max must be positive, got {self.v_max}")


@dataclass
class WorldState:
    """True host/lead kinematics and gap at one step."""

    t: int
    v_h: float        # true host speed, m/s
    v_l: float        # lead speed, m/s
    d: float          # inter-vehicle gap, m
    u_applied: float  # last applied host acceleration, m/s^2


@dataclass
class LeadBehavior:
    """Lead vehicle cruise behavior with occasional random braking events."""

    v_cruise: float = 25.0
    p_brake: float = 0.003    # per-step probability of starting a braking event
    brake_decel: float = 1.5  # m/s^2 during an event
    brake_steps: int = 4      # event duration, steps
    accel: float = 1.0        # re-acceleration toward cruise speed, m/s^2

    def __post_init__(self):
        if not 0.0 <= self.p_brake <= 1.0:
            raise ValueError(f"p_brake must be in [0, 1], got {self.p_brake}")
        if not self.brake_decel > 0:
            raise ValueError(f"brake_decel must be positive, got {self.brake_decel}")
        if self.brake_steps < 1:
            raise ValueError(f"brake_steps must be >= 1, got {self.brake_steps}")


def step_host_speed(v_h: float, u: float, params: PhysicalParams) -> float:
    """Integrate the host speed one step and clamp to the physical range."""
    return min(max(v_h + u * params.dt, 0.0), params.v_max)


def step_gap(d: float, v_l_next: float, v_h_next: float, params: PhysicalParams) -> float:
    """One-step gap evolution using end-of-period speeds; may go negative (collision)."""
    return d + (v_l_next - v_h_next) * params.dt


def safe_distance(v: float, params: PhysicalParams) -> float:
    """Reaction distance plus braking distance for speed v."""
    if v < 0:
        raise ValueError(f"speed must be non-negative, got {v}")
    return params.h * v + v * v / (2.0 * params.a)


def reaction_distance(v: float, params: PhysicalParams) -> float:
    return params.h * v


def braking_distance(v: float, params: PhysicalParams) -> float:
    return v * v / (2.0 * params.a)


@dataclass
class LeadVehicle:
    """Stateful lead model: cruise at v_cruise, Bernoulli-triggered braking events.

    Deterministic given the rng seed; one instance per scenario run.
    """

    behavior: LeadBehavior
    params: PhysicalParams
    rng: np.random.Generator
    brake_steps_left: int = field(default=0)

    def step(self, v_l: float) -> float:
        if self.brake_steps_left == 0 and self.rng.random() < self.behavior.p_brake:
            self.brake_steps_left = self.behavior.brake_steps
        if self.brake_steps_left > 0:
            self.brake_steps_left -= 1
            v_next = v_l - self.behavior.brake_decel * self.params.dt
        elif v_l < self.behavior.v_cruise:
            v_next = min(v_l + self.behavior.accel * self.params.dt, self.behavior.v_cruise)
        else:
            v_next = self.behavior.v_cruise
        if not math.isfinite(v_next):
            raise ValueError("lead speed became non-finite")
        return min(max(v_next, 0.0), self.params.v_max)
