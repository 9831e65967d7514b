"""Quantitative (robust) and Boolean semantics over sampled signals.

Suprema and infima are taken over sample instants only; unbounded intervals
are clipped to the signal horizon.  The Until recursion keeps the inner
minimum over [0, t) exclusive of t, so an empty range yields +inf.
"""
from __future__ import annotations

import math

import numpy as np

from ..errors import EvaluationError
from ..signals import Signal
from .formula import And, Atom, FalseFormula, Formula, Not, TimeInterval, Until

INTERVAL_RTOL = 1e-9


def in_interval(t: float, interval: TimeInterval) -> bool:
    """Grid-time membership with 1e-9 relative tolerance at both endpoints."""
    lo, hi = interval.lo, interval.hi
    if t < lo - INTERVAL_RTOL * max(1.0, abs(lo)):
        return False
    if math.isinf(hi):
        return True
    return t <= hi + INTERVAL_RTOL * max(1.0, abs(hi))


def _interval_offsets(interval: TimeInterval, step: float, n: int) -> tuple[int, int]:
    """Contiguous range of sample offsets d with d*step inside the interval.

    Returns (dlo, dhi) with dlo > dhi when no offset in 0..n qualifies.
    """
    dlo = max(0, math.ceil((interval.lo / step) * (1 - INTERVAL_RTOL)) - 1)
    while dlo <= n and not in_interval(dlo * step, interval):
        dlo += 1
    if dlo > n:
        return 1, 0
    if interval.unbounded:
        return dlo, n
    dhi = min(n, math.floor((interval.hi / step) * (1 + INTERVAL_RTOL)) + 1)
    while dhi > dlo and not in_interval(dhi * step, interval):
        dhi -= 1
    return dlo, dhi


def _check_variables(w: Signal, phi: Formula) -> dict[str, np.ndarray]:
    missing = sorted(phi.variables() - set(w.var_names))
    if missing:
        raise EvaluationError(f"unknown variable {missing[0]!r} in formula")
    return {name: w.column(name) for name in phi.variables()}


def _as_array(value, n: int) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 0:
        arr = np.full(n + 1, float(arr))
    return arr


def _rho(phi: Formula, env, n: int, step: float, lo: int, hi: int) -> np.ndarray:
    """Robustness of ``phi`` on every suffix start index; valid on [lo, hi]."""
    if isinstance(phi, Atom):
        return _as_array(phi.expr.eval(env), n)
    if isinstance(phi, FalseFormula):
        return np.full(n + 1, -np.inf)
    if isinstance(phi, Not):
        return -_rho(phi.child, env, n, step, lo, hi)
    if isinstance(phi, And):
        return np.minimum(
            _rho(phi.left, env, n, step, lo, hi),
            _rho(phi.right, env, n, step, lo, hi),
        )
    if isinstance(phi, Until):
        out = np.full(n + 1, -np.inf)
        dlo, dhi = _interval_offsets(phi.interval, step, n)
        if dlo > dhi:
            return out
        child_hi = min(n, hi + dhi)
        r1 = _rho(phi.left, env, n, step, lo, child_hi)
        r2 = _rho(phi.right, env, n, step, lo, child_hi)
        for j in range(lo, hi + 1):
            k0 = j + dlo
            k1 = min(n, j + dhi)
            if k0 > k1:
                continue
            # prefix[m] = min over r1[j .. j+m), empty prefix = +inf
            prefix = np.empty(k1 - j + 1)
            prefix[0] = np.inf
            if k1 > j:
                prefix[1:] = np.minimum.accumulate(r1[j:k1])
            out[j] = np.minimum(r2[k0 : k1 + 1], prefix[k0 - j :]).max()
        return out
    raise TypeError(f"unknown formula node {type(phi).__name__}")


def _sat(phi: Formula, env, n: int, step: float, lo: int, hi: int) -> np.ndarray:
    """Classical satisfaction on every suffix start index; valid on [lo, hi]."""
    if isinstance(phi, Atom):
        return _as_array(phi.expr.eval(env), n) > 0
    if isinstance(phi, FalseFormula):
        return np.zeros(n + 1, dtype=bool)
    if isinstance(phi, Not):
        return ~_sat(phi.child, env, n, step, lo, hi)
    if isinstance(phi, And):
        return _sat(phi.left, env, n, step, lo, hi) & _sat(phi.right, env, n, step, lo, hi)
    if isinstance(phi, Until):
        out = np.zeros(n + 1, dtype=bool)
        dlo, dhi = _interval_offsets(phi.interval, step, n)
        if dlo > dhi:
            return out
        child_hi = min(n, hi + dhi)
        s1 = _sat(phi.left, env, n, step, lo, child_hi)
        s2 = _sat(phi.right, env, n, step, lo, child_hi)
        for j in range(lo, hi + 1):
            k0 = j + dlo
            k1 = min(n, j + dhi)
            if k0 > k1:
                continue
            prefix = np.empty(k1 - j + 1, dtype=bool)
            prefix[0] = True
            if k1 > j:
                prefix[1:] = np.logical_and.accumulate(s1[j:k1])
            out[j] = bool(np.any(s2[k0 : k1 + 1] & prefix[k0 - j :]))
        return out
    raise TypeError(f"unknown formula node {type(phi).__name__}")


def robustness(w: Signal, phi: Formula) -> float:
    """Robustness of ``phi`` over ``w``, evaluated at time 0."""
    env = _check_variables(w, phi)
    n = w.n_samples - 1
    return float(_rho(phi, env, n, w.step, 0, 0)[0])


def boolean_sat(w: Signal, phi: Formula) -> bool:
    """Classical satisfaction of ``phi`` over ``w`` on the same sample grid."""
    env = _check_variables(w, phi)
    n = w.n_samples - 1
    return bool(_sat(phi, env, n, w.step, 0, 0)[0])
