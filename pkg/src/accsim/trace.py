"""Per-step trace records and the CSV contract shared by all tools."""

from __future__ import annotations

import csv
from dataclasses import dataclass, fields
from typing import Optional, Sequence

TRACE_COLUMNS = (
    "t", "v_h_true", "v_l", "z", "v_hat_post", "v_thr", "z_min",
    "d", "d_safe", "u", "mode", "s_flag", "attack_active", "collided",
)


@dataclass
class StepTrace:
    t: int
    v_h_true: float
    v_l: float
    z: float
    v_hat_post: float
    v_thr: float
    z_min: float
    d: float
    d_safe: float
    u: float
    mode: str
    s_flag: int
    attack_active: int
    collided: int


assert tuple(f.name for f in fields(StepTrace)) == TRACE_COLUMNS


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def write_trace_csv(trace: Sequence[StepTrace], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for row in trace:
            writer.writerow([_fmt(getattr(row, name)) for name in TRACE_COLUMNS])


def read_trace_csv(path) -> list[StepTrace]:
    with open(path, "r", newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None:
            raise ValueError(f"empty trace CSV: {path}")
        missing = [c for c in TRACE_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise ValueError(f"trace CSV missing columns {missing}: {path}")
        rows = []
        for rec in reader:
            rows.append(StepTrace(
                t=int(rec["t"]),
                v_h_true=float(rec["v_h_true"]),
                v_l=float(rec["v_l"]),
                z=float(rec["z"]),
                v_hat_post=float(rec["v_hat_post"]),
                v_thr=float(rec["v_thr"]),
                z_min=float(rec["z_min"]),
                d=float(rec["d"]),
                d_safe=float(rec["d_safe"]),
                u=float(rec["u"]),
                mode=rec["mode"],
                s_flag=int(rec["s_flag"]),
                attack_active=int(rec["attack_active"]),
                collided=int(rec["collided"]),
            ))
    return rows


def detect_collision(trace: Sequence[StepTrace]) -> Optional[int]:
    """First step index at which the gap is non-positive, if any."""
    for row in trace:
        if row.d <= 0.0:
            return row.t
    return None
