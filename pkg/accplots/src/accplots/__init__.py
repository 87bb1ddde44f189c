"""Figure renderer for simulator trace and sweep CSVs."""

from .render import (ACCURACY_SWEEP, DISTANCE_PANEL, KINDS, SPEED_PANEL,
                     PlotSpec, RenderError, render)

__all__ = ["ACCURACY_SWEEP", "DISTANCE_PANEL", "KINDS", "SPEED_PANEL",
           "PlotSpec", "RenderError", "render"]
