"""Shared fixtures: simulator outputs generated through the accsim CLI.

The renderer is a pure consumer of the CSV contract, so its tests drive the
simulator exclusively through its command-line interface.
"""

import subprocess
from pathlib import Path

import pytest

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def _run_accsim(*args):
    result = subprocess.run(["accsim", *args], capture_output=True, text=True)
    assert result.returncode == 0, result.stderr
    return result


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("sim_outputs")
    for name in ("baseline", "attack_kf", "attack_ids"):
        _run_accsim("run", "--config", str(CONFIGS / f"{name}.yaml"),
                    "--out", str(out))
    _run_accsim("sweep", "--config", str(CONFIGS / "sweep.yaml"),
                "--grid", "0.3:1.0:0.35", "--repeats", "2",
                "--out", str(out))
    return out


@pytest.fixture(scope="session")
def baseline_trace(data_dir):
    return data_dir / "baseline_trace.csv"


@pytest.fixture(scope="session")
def attack_kf_trace(data_dir):
    return data_dir / "attack_kf_trace.csv"


@pytest.fixture(scope="session")
def attack_ids_trace(data_dir):
    return data_dir / "attack_ids_trace.csv"


@pytest.fixture(scope="session")
def sweep_csv(data_dir):
    return data_dir / "sweep_sweep.csv"
