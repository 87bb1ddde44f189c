"""Scenario configuration: schema, validation, YAML loading."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import yaml

from .controller import DEFAULT_CRUISE_GAINS, DEFAULT_SPACING_GAINS, PidGains
from .dynamics import LeadBehavior, PhysicalParams
from .estimator import KfParams
from .ids import IdsConfig
from .threat import AttackProfile


class ConfigError(ValueError):
    """Raised for any invalid or unknown configuration content."""


@dataclass
class ScenarioConfig:
    physical: PhysicalParams = field(default_factory=PhysicalParams)
    kf: KfParams = field(default_factory=KfParams)
    gains_cruise: PidGains = field(default_factory=lambda: replace(DEFAULT_CRUISE_GAINS))
    gains_spacing: PidGains = field(default_factory=lambda: replace(DEFAULT_SPACING_GAINS))
    lead: LeadBehavior = field(default_factory=LeadBehavior)
    attack: AttackProfile = field(default_factory=AttackProfile)
    ids: IdsConfig = field(default_factory=IdsConfig)
    ids_enabled: bool = False
    horizon: int = 1000
    seed: int = 0
    initial_gap_ratio: float = 1.1
    v_ref: float = 30.0
    switch_ratio: float = 1.2
    initial_speed: Optional[float] = None  # host and lead start here; default 0.8 * v_cruise
    u_limits: tuple[float, float] = (-6.0, 2.5)
    noise_std: Optional[float] = None      # default sqrt(kf.r); must satisfy noise_std^2 == r

    def __post_init__(self):
        if self.horizon < 1:
            raise ConfigError(f"horizon must be >= 1, got {self.horizon}")
        if self.initial_gap_ratio < 1.0:
            raise ConfigError(f"initial_gap_ratio must be >= 1, got {self.initial_gap_ratio}")
        if self.switch_ratio <= 0:
            raise ConfigError(f"switch_ratio must be positive, got {self.switch_ratio}")
        if self.u_limits[0] >= self.u_limits[1]:
            raise ConfigError(f"u_limits must be ordered, got {self.u_limits}")
        if self.u_limits[0] > -self.physical.a:
            raise ConfigError("u_limits must allow braking at least as strong as "
                              f"-a = {-self.physical.a}")
        if self.noise_std is None:
            self.noise_std = math.sqrt(self.kf.r)
        elif not math.isclose(self.noise_std ** 2, self.kf.r, rel_tol=1e-9):
            raise ConfigError(f"sensor noise_std^2 ({self.noise_std ** 2}) must equal "
                              f"the filter's measurement variance r ({self.kf.r})")
        if self.initial_speed is None:
            self.initial_speed = 0.8 * self.lead.v_cruise
        if not 0.0 <= self.initial_speed <= self.physical.v_max:
            raise ConfigError(f"initial_speed must be in [0, v_max], got {self.initial_speed}")


_SECTION_TYPES = {
    "physical": PhysicalParams,
    "kf": KfParams,
    "gains_cruise": PidGains,
    "gains_spacing": PidGains,
    "lead": LeadBehavior,
}

_SCALAR_KEYS = {"horizon", "seed", "initial_gap_ratio", "v_ref", "switch_ratio",
                "initial_speed", "u_limits", "noise_std"}


def _build_section(name: str, cls, data: dict):
    if not isinstance(data, dict):
        raise ConfigError(f"section {name!r} must be a mapping")
    allowed = set(cls.__dataclass_fields__)
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in section {name!r}: {sorted(unknown)}")
    try:
        return cls(**data)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid section {name!r}: {exc}") from exc


def config_from_dict(data: dict) -> ScenarioConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration root must be a mapping")
    known = set(_SECTION_TYPES) | _SCALAR_KEYS | {"attack", "ids"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")

    kwargs = {}
    for name, cls in _SECTION_TYPES.items():
        if name in data:
            kwargs[name] = _build_section(name, cls, data[name])
    if "attack" in data:
        kwargs["attack"] = _build_section("attack", AttackProfile, data["attack"])
    if "ids" in data:
        ids_data = dict(data["ids"]) if isinstance(data["ids"], dict) else None
        if ids_data is None:
            raise ConfigError("section 'ids' must be a mapping")
        enabled = bool(ids_data.pop("enabled", False))
        kwargs["ids"] = _build_section("ids", IdsConfig, ids_data)
        kwargs["ids_enabled"] = enabled
    for key in _SCALAR_KEYS & set(data):
        value = data[key]
        if key == "u_limits":
            if (not isinstance(value, (list, tuple))) or len(value) != 2:
                raise ConfigError(f"u_limits must be a two-element list, got {value!r}")
            value = (float(value[0]), float(value[1]))
        kwargs[key] = value
    try:
        return ScenarioConfig(**kwargs)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc


def load_config(path) -> ScenarioConfig:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse config {path}: {exc}") from exc
    return config_from_dict(data or {})
