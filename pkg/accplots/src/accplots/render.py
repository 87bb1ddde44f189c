"""Render simulator CSV outputs into figures.

Consumes only the documented CSV contracts: trace files with the header
t,v_h_true,v_l,z,v_hat_post,v_thr,z_min,d,d_safe,u,mode,s_flag,
attack_active,collided and sweep files with accuracy,time_to_crash,
censored,seed. Rendering is read-only over inputs and deterministic:
fixed figure size, no timestamps, reruns overwrite the output.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

SPEED_PANEL = "speed_panel"
DISTANCE_PANEL = "distance_panel"
ACCURACY_SWEEP = "accuracy_sweep"
KINDS = (SPEED_PANEL, DISTANCE_PANEL, ACCURACY_SWEEP)

FIGSIZE = (8.0, 4.5)

TRACE_COLUMNS = {
    SPEED_PANEL: ("t", "v_h_true", "v_l", "z", "v_thr"),
    DISTANCE_PANEL: ("t", "d", "d_safe"),
    ACCURACY_SWEEP: ("accuracy", "time_to_crash", "censored"),
}


class RenderError(ValueError):
    """Raised for unusable input CSVs or invalid plot requests."""


@dataclass
class PlotSpec:
    kind: str
    input_csv: Path
    output_image: Path
    title: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RenderError(f"unknown plot kind {self.kind!r}; "
                              f"expected one of {', '.join(KINDS)}")
        self.input_csv = Path(self.input_csv)
        self.output_image = Path(self.output_image)


def _read_columns(path: Path, required: tuple[str, ...]) -> dict[str, list[float]]:
    try:
        f = open(path, "r", newline="", encoding="utf-8")
    except OSError as exc:
        raise RenderError(f"cannot read input CSV {path}: {exc}") from exc
    with f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None:
            raise RenderError(f"input CSV is empty: {path}")
        for column in required:
            if column not in reader.fieldnames:
                raise RenderError(f"input CSV {path} is missing required "
                                  f"column {column!r}")
        data: dict[str, list[float]] = {c: [] for c in required}
        for rec in reader:
            for column in required:
                data[column].append(float(rec[column]))
    if not data[required[0]]:
        raise RenderError(f"input CSV has a header but no data rows: {path}")
    return data


def _first_collision(path: Path) -> float | None:
    rows = _read_columns(path, ("t", "d"))
    for t, d in zip(rows["t"], rows["d"]):
        if d <= 0.0:
            return t
    return None


def _speed_panel(ax, data):
    ax.plot(data["t"], data["v_l"], label="lead speed", color="tab:green")
    ax.plot(data["t"], data["v_h_true"], label="host speed (true)",
            color="tab:blue")
    ax.plot(data["t"], data["z"], label="reported speed", color="tab:orange",
            alpha=0.5, linewidth=0.8)
    ax.plot(data["t"], data["v_thr"], label="speed threshold",
            color="tab:red", linestyle="--", linewidth=1.0)
    ax.set_ylabel("speed (m/s)")


def _distance_panel(ax, data, collision_step):
    ax.plot(data["t"], data["d"], label="gap", color="tab:blue")
    ax.plot(data["t"], data["d_safe"], label="required safe distance",
            color="tab:red", linestyle="--")
    if collision_step is not None:
        ax.axvline(collision_step, color="black", linestyle=":",
                   label=f"collision (t={collision_step:g})")
    ax.set_ylabel("distance (m)")


def _accuracy_sweep(ax, data):
    acc = data["accuracy"]
    ttc = data["time_to_crash"]
    censored = [bool(c) for c in data["censored"]]
    crashed = [(a, t) for a, t, c in zip(acc, ttc, censored) if not c]
    survived = [(a, t) for a, t, c in zip(acc, ttc, censored) if c]
    if crashed:
        xs, ys = zip(*crashed)
        ax.scatter(xs, ys, label="crashed", color="tab:red", marker="o")
    if survived:
        xs, ys = zip(*survived)
        ax.scatter(xs, ys, label="censored (no crash)", color="tab:blue",
                   marker="^", facecolors="none")
    ax.set_xlabel("detector accuracy")
    ax.set_ylabel("time to crash (steps)")


def render(spec: PlotSpec) -> Path:
    """Render one figure; returns the output path. No file on error."""
    data = _read_columns(spec.input_csv, TRACE_COLUMNS[spec.kind])

    fig, ax = plt.subplots(figsize=FIGSIZE)
    try:
        if spec.kind == SPEED_PANEL:
            _speed_panel(ax, data)
            ax.set_xlabel("step")
        elif spec.kind == DISTANCE_PANEL:
            _distance_panel(ax, data, _first_collision(spec.input_csv))
            ax.set_xlabel("step")
        else:
            _accuracy_sweep(ax, data)
        if spec.title:
            ax.set_title(spec.title)
        ax.legend(loc="best")
        fig.tight_layout()
        spec.output_image.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(spec.output_image, metadata={"Software": None})
    finally:
        plt.close(fig)
    return spec.output_image
