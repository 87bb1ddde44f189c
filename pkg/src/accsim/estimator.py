"""Scalar constant-velocity Kalman filter for the host speed.

The filter state is the speed alone. Prediction carries the posterior forward
and inflates the covariance by the process-noise variance; the update blends
the prediction with the measurement through the gain p / (p + r), which stays
strictly inside (0, 1) whenever the prior covariance and r are positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass
class KfParams:
    q: float = 0.5   # process-noise variance, (m/s)^2
    r: float = 2.0   # measurement-noise variance, (m/s)^2
    p0: float = 1.0  # initial covariance
    v0: float = 0.0  # initial speed estimate, m/s

    def __post_init__(self):
        if self.q < 0:
            raise ValueError(f"q must be non-negative, got {self.q}")
        if not self.r > 0:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.p0 < 0:
            raise ValueError(f"p0 must be non-negative, got {self.p0}")


@dataclass
class KfState:
    v_prior: float  # predicted speed before the measurement
    v_post: float   # updated speed after the measurement
    p_prior: float
    p_post: float
    gain: float


def initial_state(params: KfParams) -> KfState:
    return KfState(v_prior=params.v0, v_post=params.v0,
                   p_prior=params.p0, p_post=params.p0, gain=0.0)


def kf_gain(p_prior: float, r: float) -> float:
    """Gain the update would apply for a given prior covariance."""
    return p_prior / (p_prior + r)


def kf_predict(state: KfState, params: KfParams) -> KfState:
    # Constant-velocity model: the one-step prediction equals the last posterior.
    return replace(state,
                   v_prior=state.v_post,
                   p_prior=state.p_post + params.q)


def kf_update(state: KfState, z: float, params: KfParams) -> KfState:
    if not math.isfinite(z):
        raise ValueError(f"measurement must be finite, got {z}")
    gain = kf_gain(state.p_prior, params.r)
    return replace(state,
                   gain=gain,
                   v_post=state.v_prior + gain * (z - state.v_prior),
                   p_post=(1.0 - gain) * state.p_prior)


def kf_hold(state: KfState, params: KfParams) -> KfState:
    """Skip the measurement update (intrusion flagged): keep the prediction."""
    return replace(state,
                   gain=kf_gain(state.p_prior, params.r),
                   v_post=state.v_prior,
                   p_post=state.p_prior)
