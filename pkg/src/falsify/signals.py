"""Uniformly sampled time-bounded signals and piecewise-constant input signals.

A signal holds samples at t_j = j*step for j = 0..n; its horizon is n*step.
All values are immutable after construction and safe to share between threads.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

GRID_RTOL = 1e-9


def snap_to_grid(t: float, step: float, what: str = "time") -> int:
    """Map ``t`` to its sample index, requiring it to lie on the grid.

    Tolerates relative rounding error up to 1e-9 and snaps to the nearest
    index; anything further off the grid is an error.
    """
    idx = int(round(t / step))
    if abs(idx * step - t) > GRID_RTOL * max(1.0, abs(t)):
        raise ValueError(f"{what}={t!r} is not a multiple of the sample step {step!r}")
    return idx


@dataclass(frozen=True, eq=False)
class Signal:
    """A multi-dimensional signal sampled uniformly on [0, horizon].

    ``values`` has shape (n+1, dim): one row per sample instant j*step.
    """

    values: np.ndarray
    step: float
    var_names: tuple[str, ...]

    def __post_init__(self):
        arr = np.atleast_2d(np.asarray(self.values, dtype=float))
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ValueError("values must be a non-empty (samples, dim) array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("signal samples must all be finite")
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step!r}")
        names = tuple(self.var_names)
        if len(names) != arr.shape[1]:
            raise ValueError(
                f"{len(names)} variable names for {arr.shape[1]} signal dimensions"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "var_names", names)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    @property
    def horizon(self) -> float:
        return (self.n_samples - 1) * self.step

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_samples) * self.step

    def column(self, name: str) -> np.ndarray:
        """Samples of one named variable."""
        try:
            j = self.var_names.index(name)
        except ValueError:
            raise KeyError(f"signal has no variable {name!r}") from None
        return self.values[:, j]

    def at(self, t: float) -> np.ndarray:
        """Sample vector at grid time ``t``."""
        return self.values[snap_to_grid(t, self.step)]

    def to_csv(self) -> str:
        """Serialize as ``t,<var1>,...`` rows; floats printed exactly (repr)."""
        buf = io.StringIO()
        buf.write("t," + ",".join(self.var_names) + "\n")
        for j in range(self.n_samples):
            row = [repr(j * self.step)] + [repr(v) for v in self.values[j]]
            buf.write(",".join(row) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "Signal":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) < 2:
            raise ValueError("signal CSV needs a header and at least one sample row")
        header = [h.strip() for h in lines[0].split(",")]
        if not header or header[0] != "t":
            raise ValueError("signal CSV header must start with 't'")
        names = tuple(header[1:])
        rows = [[float(x) for x in ln.split(",")] for ln in lines[1:]]
        times = np.array([r[0] for r in rows])
        values = np.array([r[1:] for r in rows])
        if len(times) == 1:
            step = 1.0
        else:
            step = float(times[1] - times[0])
            if step <= 0 or not np.allclose(np.diff(times), step, rtol=1e-6, atol=1e-12):
                raise ValueError("signal CSV samples must be uniformly spaced in time")
        return cls(values, step, names)


def concat(w: Signal, w2: Signal) -> Signal:
    """Concatenation: result follows ``w`` on [0, w.horizon] and ``w2`` after.

    The junction sample at t = w.horizon takes w's final value; w2's sample
    at its own time 0 is dropped.
    """
    if w.dim != w2.dim:
        raise ValueError(f"dimension mismatch: {w.dim} vs {w2.dim}")
    if abs(w.step - w2.step) > GRID_RTOL * w.step:
        raise ValueError(f"step mismatch: {w.step!r} vs {w2.step!r}")
    values = np.vstack([w.values, w2.values[1:]])
    return Signal(values, w.step, w.var_names)


def restrict(w: Signal, t1: float, t2: float) -> Signal:
    """The part of ``w`` on [t1, t2], re-based to start at time 0."""
    i1 = snap_to_grid(t1, w.step, "t1")
    i2 = snap_to_grid(t2, w.step, "t2")
    if not (0 <= i1 < i2 <= w.n_samples - 1):
        raise ValueError(
            f"restriction bounds [{t1!r}, {t2!r}] not within [0, {w.horizon!r}]"
        )
    return Signal(w.values[i1 : i2 + 1], w.step, w.var_names)


def shift(w: Signal, t: float) -> Signal:
    """The t-shift of ``w``: result(t') = w(t + t')."""
    i = snap_to_grid(t, w.step, "shift")
    if not (0 <= i <= w.n_samples - 1):
        raise ValueError(f"shift {t!r} outside [0, {w.horizon!r}]")
    return Signal(w.values[i:], w.step, w.var_names)


@dataclass(frozen=True, eq=False)
class PiecewiseConstantInput:
    """K constant input levels spanning [0, horizon] in equal segments.

    ``levels`` has shape (K, M); row i holds on [i*T/K, (i+1)*T/K), and the
    final instant t = T carries levels[K-1].
    """

    levels: np.ndarray
    horizon: float

    def __post_init__(self):
        arr = np.atleast_2d(np.asarray(self.levels, dtype=float))
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("levels must be a non-empty (K, M) matrix")
        if not np.all(np.isfinite(arr)):
            raise ValueError("input levels must all be finite")
        if not self.horizon > 0:
            raise ValueError(f"horizon must be positive, got {self.horizon!r}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "levels", arr)

    @property
    def control_points(self) -> int:
        return self.levels.shape[0]

    @property
    def dims(self) -> int:
        return self.levels.shape[1]


def realize(u: PiecewiseConstantInput, step: float, var_names=None) -> Signal:
    """Sample a piecewise-constant input on a uniform grid of the given step.

    The segment length T/K must be an integer multiple of step.  Segment
    boundaries are half-open: the sample at i*T/K carries levels[i] for i < K.
    """
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    K = u.control_points
    per_segment = snap_to_grid(u.horizon / K, step, "segment length")
    if per_segment < 1:
        raise ValueError(
            f"step {step!r} does not divide the segment length {u.horizon / K!r}"
        )
    n = K * per_segment
    seg = np.minimum(np.arange(n + 1) // per_segment, K - 1)
    if var_names is None:
        var_names = tuple(f"u{i + 1}" for i in range(u.dims))
    return Signal(u.levels[seg], step, var_names)
