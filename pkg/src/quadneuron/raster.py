"""Decision-surface rasterization and CSV / plain-PGM export.

A raster samples the neuron output at the centers of a square lattice of
cells.  Values are stored row-major with row 0 at y_min.  The CSV export
keeps that orientation; the PGM export follows image convention, so its top
row corresponds to the highest y.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .neurons import DEFAULT_ACTIVATION, Neuron, SigmoidActivation, forward

Bounds = tuple[float, float, float, float]

GATE_BOUNDS: Bounds = (-0.5, 1.5, -0.5, 1.5)
RING_BOUNDS: Bounds = (-1.25, 1.25, -1.25, 1.25)
DEFAULT_RESOLUTION = 200


@dataclass(frozen=True)
class GridRaster:
    """Neuron outputs on a resolution x resolution lattice of cell centers."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    resolution: int
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.shape != (self.resolution, self.resolution):
            raise ValueError(
                f"values must have shape ({self.resolution}, {self.resolution}), "
                f"got {values.shape}"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)


def grid_raster(
    neuron: Neuron,
    act: SigmoidActivation = DEFAULT_ACTIVATION,
    bounds: Bounds = GATE_BOUNDS,
    resolution: int = DEFAULT_RESOLUTION,
) -> GridRaster:
    """Evaluate a 2-input neuron at every cell center of the bounded lattice.

    Cell centers sit at x_min + (col + 0.5) * (x_max - x_min) / resolution,
    and likewise for y; values[row][col] is the output at (x(col), y(row)).
    """
    x_min, x_max, y_min, y_max = (float(v) for v in bounds)
    if not (x_min < x_max and y_min < y_max):
        raise ValueError(f"bounds must satisfy x_min < x_max and y_min < y_max, got {bounds}")
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    if neuron.n != 2:
        raise ValueError(f"rasterization needs a 2-input neuron, got n={neuron.n}")
    xs = x_min + (np.arange(resolution) + 0.5) * (x_max - x_min) / resolution
    ys = y_min + (np.arange(resolution) + 0.5) * (y_max - y_min) / resolution
    grid_x, grid_y = np.meshgrid(xs, ys)
    points = np.column_stack([grid_x.ravel(), grid_y.ravel()])
    values = forward(neuron, points, act).reshape(resolution, resolution)
    return GridRaster(
        x_min=x_min, x_max=x_max, y_min=y_min, y_max=y_max,
        resolution=resolution, values=values,
    )


def export_raster_csv(raster: GridRaster, path) -> None:
    """Write the raster row-major, row 0 (lowest y) first, 17 significant digits."""
    lines = []
    for row in raster.values:
        lines.append(",".join(f"{v:.17g}" for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def pgm_pixel(value: float) -> int:
    """Map a value in [0, 1] to a grey level: round(255 * value), halves away from zero."""
    return int(np.floor(255.0 * value + 0.5))


def export_raster_pgm(raster: GridRaster, path) -> None:
    """Write the raster as plain (P2) PGM, top image row at the highest y."""
    res = raster.resolution
    pixels = np.floor(255.0 * raster.values + 0.5).astype(np.int64)
    lines = [f"P2", f"{res} {res}", "255"]
    for row in pixels[::-1]:
        lines.append(" ".join(str(p) for p in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")
