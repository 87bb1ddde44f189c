"""Speed sensor model: Gaussian measurement noise plus the speed-injection attack."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

CONSTANT_OFFSET = "constant_offset"
CUMULATIVE_RAMP = "cumulative_ramp"


@dataclass
class AttackProfile:
    """Measurement-corruption schedule: a positive bias over a fixed window."""

    enabled: bool = False
    start_step: int = 300
    duration: int = 400
    bias: float = 0.8  # m/s per application
    shape: str = CUMULATIVE_RAMP

    def __post_init__(self):
        if self.start_step < 0:
            raise ValueError(f"start_step must be >= 0, got {self.start_step}")
        if self.duration < 1:
            raise ValueError(f"duration must be >= 1, got {self.duration}")
        if not self.bias > 0:
            raise ValueError(f"bias must be positive, got {self.bias}")
        if self.shape not in (CONSTANT_OFFSET, CUMULATIVE_RAMP):
            raise ValueError(f"unknown attack shape: {self.shape!r}")

    def active(self, step: int) -> bool:
        return (self.enabled
                and self.start_step <= step < self.start_step + self.duration)

    def bias_at(self, step: int) -> float:
        if not self.active(step):
            return 0.0
        if self.shape == CONSTANT_OFFSET:
            return self.bias
        return self.bias * (step - self.start_step + 1)


@dataclass
class SensorModel:
    noise_std: float
    rng: np.random.Generator

    def __post_init__(self):
        if self.noise_std < 0:
            raise ValueError(f"noise_std must be non-negative, got {self.noise_std}")


def measure(v_true: float, step: int, profile: AttackProfile, sensor: SensorModel) -> float:
    """Reported speed: truth plus noise plus the attack bias, clamped at zero."""
    noise = sensor.rng.normal(0.0, sensor.noise_std) if sensor.noise_std > 0 else 0.0
    return max(v_true + noise + profile.bias_at(step), 0.0)
