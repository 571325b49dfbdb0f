"""Datasets: gate truth tables, fuzzy corner clouds, concentric rings, CSV I/O.

Every generator is a pure function of its spec, including the seed, and the
pseudo-random source is a portable splitmix64 stream, so generated datasets
are bit-identical across platforms and runs.

CSV format: no header, one sample per line, the n feature columns followed
by the label column, comma-separated, '.' decimal point, LF line endings.
Values are written with 17 significant digits, which round-trips 64-bit
floats exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF

GATE_LABELS = {
    "XOR": (0, 1, 1, 0),
    "NAND": (1, 1, 1, 0),
    "NOR": (1, 0, 0, 0),
    "OR": (0, 1, 1, 1),
    "AND": (0, 0, 0, 1),
}

# Corner order used everywhere: (x1, x2) over {0,1}^2.
CORNERS = ((0, 0), (0, 1), (1, 0), (1, 1))


class SplitMix64:
    """Minimal splitmix64 generator; trivially portable across languages."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1): the top 53 bits over 2^53."""
        return (self.next_uint64() >> 11) * 2.0**-53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.next_float()


@dataclass(frozen=True)
class Sample:
    """One training pair: input vector x and fuzzy target y in [0, 1]."""

    x: np.ndarray
    y: float

    def __post_init__(self):
        x = np.array(self.x, dtype=np.float64)
        if x.ndim != 1 or x.size == 0:
            raise ValueError(f"x must be a non-empty vector, got shape {x.shape}")
        if not np.all(np.isfinite(x)):
            raise ValueError("x contains non-finite entries")
        x.flags.writeable = False
        object.__setattr__(self, "x", x)
        y = float(self.y)
        if not 0.0 <= y <= 1.0:
            raise ValueError(f"y must lie in [0, 1], got {y}")
        object.__setattr__(self, "y", y)


class Dataset:
    """An ordered set of m samples sharing one input dimension n."""

    def __init__(self, X, y):
        X = np.array(X, dtype=np.float64)
        y = np.array(y, dtype=np.float64)
        if X.ndim != 2:
            raise ValueError(f"X must be 2-D (m, n), got shape {X.shape}")
        if y.shape != (X.shape[0],):
            raise ValueError(f"y must have shape ({X.shape[0]},), got {y.shape}")
        if X.shape[0] < 1 or X.shape[1] < 1:
            raise ValueError("dataset needs at least one sample and one feature")
        if not np.all(np.isfinite(X)):
            raise ValueError("X contains non-finite entries")
        if np.any(y < 0.0) or np.any(y > 1.0):
            raise ValueError("labels must lie in [0, 1]")
        X.flags.writeable = False
        y.flags.writeable = False
        self.X = X
        self.y = y

    @classmethod
    def from_samples(cls, samples) -> "Dataset":
        samples = list(samples)
        if not samples:
            raise ValueError("dataset needs at least one sample")
        return cls(
            X=np.stack([s.x for s in samples]),
            y=np.array([s.y for s in samples]),
        )

    @property
    def n(self) -> int:
        return self.X.shape[1]

    def __len__(self) -> int:
        return self.X.shape[0]

    def __iter__(self):
        for i in range(len(self)):
            yield Sample(x=self.X[i], y=self.y[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return np.array_equal(self.X, other.X) and np.array_equal(self.y, other.y)


def gate_labels(gate: str) -> tuple[int, int, int, int]:
    """The gate's truth-table labels in corner order (0,0),(0,1),(1,0),(1,1)."""
    key = gate.upper()
    if key not in GATE_LABELS:
        raise ValueError(f"unknown gate {gate!r}; expected one of {sorted(GATE_LABELS)}")
    return GATE_LABELS[key]


def gate_truth_table(gate: str) -> Dataset:
    """The four-sample Boolean truth table of the gate."""
    labels = gate_labels(gate)
    return Dataset(X=np.array(CORNERS, dtype=np.float64), y=np.array(labels, dtype=np.float64))


@dataclass(frozen=True)
class CloudSpec:
    """Fuzzy gate pattern: jittered point clouds on the four unit-square corners.

    jitter is the half-width of the uniform perturbation and must stay below
    0.5 so the clouds never cross the midlines between corners.
    """

    gate: str = "XOR"
    points_per_corner: int = 25
    jitter: float = 0.2
    seed: int = 1

    def __post_init__(self):
        gate_labels(self.gate)
        if self.points_per_corner < 1:
            raise ValueError("points_per_corner must be positive")
        if not 0.0 <= self.jitter < 0.5:
            raise ValueError(f"jitter must lie in [0, 0.5), got {self.jitter}")
        if not 0 <= int(self.seed) <= _MASK64:
            raise ValueError("seed must fit in 64 bits")


def fuzzy_gate_cloud(spec: CloudSpec) -> Dataset:
    """Generate the jittered corner clouds described by the spec.

    Corners are processed in the fixed order (0,0),(0,1),(1,0),(1,1); each
    point draws its x1 offset and then its x2 offset from one splitmix64
    stream seeded with spec.seed.
    """
    labels = gate_labels(spec.gate)
    rng = SplitMix64(spec.seed)
    xs, ys = [], []
    for corner, label in zip(CORNERS, labels):
        for _ in range(spec.points_per_corner):
            u1 = rng.uniform(-spec.jitter, spec.jitter)
            u2 = rng.uniform(-spec.jitter, spec.jitter)
            xs.append((corner[0] + u1, corner[1] + u2))
            ys.append(float(label))
    return Dataset(X=np.array(xs), y=np.array(ys))


@dataclass(frozen=True)
class RingSpec:
    """Two concentric rings centered at the origin, one per class.

    The inner ring carries label 1, the outer label 0.  radial_noise is the
    half-width of the uniform radial perturbation; the invariant
    r_inner + radial_noise < r_outer - radial_noise keeps the rings disjoint.
    """

    n_inner: int = 100
    n_outer: int = 100
    r_inner: float = 0.5
    r_outer: float = 1.0
    radial_noise: float = 0.05
    seed: int = 7

    def __post_init__(self):
        if self.n_inner < 1 or self.n_outer < 1:
            raise ValueError("ring point counts must be positive")
        if not 0.0 < self.r_inner < self.r_outer:
            raise ValueError("need 0 < r_inner < r_outer")
        if self.radial_noise < 0.0:
            raise ValueError("radial_noise must be >= 0")
        if self.r_inner + self.radial_noise >= self.r_outer - self.radial_noise:
            raise ValueError("rings overlap: r_inner + noise must stay below r_outer - noise")
        if not 0 <= int(self.seed) <= _MASK64:
            raise ValueError("seed must fit in 64 bits")


def concentric_rings(spec: RingSpec) -> Dataset:
    """Generate the two-ring dataset described by the spec.

    Inner-ring points come first.  Each point draws its radial offset and
    then its angle (uniform in [0, 2*pi)) from one splitmix64 stream.
    """
    rng = SplitMix64(spec.seed)
    xs, ys = [], []
    for count, radius, label in (
        (spec.n_inner, spec.r_inner, 1.0),
        (spec.n_outer, spec.r_outer, 0.0),
    ):
        for _ in range(count):
            r = radius + rng.uniform(-spec.radial_noise, spec.radial_noise)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            xs.append((r * math.cos(theta), r * math.sin(theta)))
            ys.append(label)
    return Dataset(X=np.array(xs), y=np.array(ys))


def save_csv(dataset: Dataset, path) -> None:
    """Write the dataset in the package CSV format (lossless round trip)."""
    lines = []
    for i in range(len(dataset)):
        fields = [f"{v:.17g}" for v in dataset.X[i]] + [f"{dataset.y[i]:.17g}"]
        lines.append(",".join(fields))
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def load_csv(path) -> Dataset:
    """Read a dataset written by save_csv; malformed rows fail with a line number."""
    text = Path(path).read_text(encoding="ascii")
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows.pop()
    if not rows:
        raise ValueError(f"{path}: empty dataset file")
    xs, ys = [], []
    n_cols = None
    for lineno, row in enumerate(rows, start=1):
        fields = row.split(",")
        if n_cols is None:
            n_cols = len(fields)
            if n_cols < 2:
                raise ValueError(
                    f"{path}: line {lineno}: need at least one feature and a label"
                )
        if len(fields) != n_cols:
            raise ValueError(
                f"{path}: line {lineno}: expected {n_cols} columns, got {len(fields)}"
            )
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise ValueError(f"{path}: line {lineno}: non-numeric value in {row!r}") from None
        xs.append(values[:-1])
        ys.append(values[-1])
    return Dataset(X=np.array(xs), y=np.array(ys))
