"""Behavioral model of the ML intrusion detector.

The detector sees only the reported speed and the per-step measurement bound;
it never looks at the inter-vehicle distance. Accuracy is modeled as per-step
sensitivity on true violations (a Bernoulli miss process); false positives are
not modeled. An optional deterministic backstop forces a flag once a violation
has persisted for max_delay_steps, bounding the detection delay.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class IdsConfig:
    accuracy: float = 1.0          # probability of flagging a true violation per step
    max_delay_steps: int = 1       # N; N*dt <= h required for the fail-safe guarantee
    latch: bool = True             # once flagged, stay flagged
    enforce_delay_bound: bool = False  # deterministic backstop after max_delay_steps

    def __post_init__(self):
        if not 0.0 <= self.accuracy <= 1.0:
            raise ValueError(f"accuracy must be in [0, 1], got {self.accuracy}")
        if self.max_delay_steps < 1:
            raise ValueError(f"max_delay_steps must be >= 1, got {self.max_delay_steps}")


@dataclass
class IdsState:
    latched: bool = False
    first_detection_step: Optional[int] = None
    violation_streak: int = 0


def ids_step(z: float, z_min: float, step: int, state: IdsState,
             cfg: IdsConfig, rng: np.random.Generator) -> int:
    """One detector evaluation; returns the binary intrusion flag S."""
    if state.latched:
        return 1

    if z <= z_min:
        state.violation_streak = 0
        return 0

    state.violation_streak += 1
    flagged = False
    if cfg.accuracy >= 1.0:
        flagged = True
    elif cfg.accuracy > 0.0 and rng.random() < cfg.accuracy:
        flagged = True
    if (not flagged and cfg.enforce_delay_bound
            and state.violation_streak >= cfg.max_delay_steps):
        flagged = True

    if flagged:
        if state.first_detection_step is None:
            state.first_detection_step = step
        if cfg.latch:
            state.latched = True
        return 1
    return 0
