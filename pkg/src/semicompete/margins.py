"""Semiparametric transformation marginals.

A margin is S(t | z) = exp(-G(R(t) * exp(beta' z))) with G a known
transformation (proportional hazards: G(x) = x; proportional odds:
G(x) = log(1 + x)) and R a nondecreasing step function with a jump at
every observed event time (optionally a mass epsilon0 at time zero).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

PH = "PH"
PO = "PO"
TRANSFORMS = (PH, PO)


def g_derivs(transform, x, order):
    """G and its derivatives: g_derivs(tr, x, k) = d^k G(x) / dx^k, k = 0..3."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise DomainError("transformation argument must be nonnegative")
    if order not in (0, 1, 2, 3):
        raise DomainError("derivative order must be in 0..3")
    if transform == PH:
        if order == 0:
            return x + 0.0
        if order == 1:
            return np.ones_like(x)
        return np.zeros_like(x)
    if transform == PO:
        if order == 0:
            return np.log1p(x)
        if order == 1:
            return 1.0 / (1.0 + x)
        if order == 2:
            return -1.0 / (1.0 + x) ** 2
        return 2.0 / (1.0 + x) ** 3
    raise DomainError(f"unknown transformation {transform!r}")


def g_pack(transform, x):
    """(G, G', G'', G''') evaluated together."""
    return tuple(g_derivs(transform, x, k) for k in range(4))


@dataclass
class BaselineStep:
    """Step baseline R(t) = epsilon0 + sum of jumps at times <= t."""

    times: np.ndarray
    jumps: np.ndarray
    epsilon0: float = 0.0
    _csum: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.jumps = np.asarray(self.jumps, dtype=float)
        if self.times.ndim != 1 or self.times.shape != self.jumps.shape:
            raise DomainError("times and jumps must be 1-d of equal length")
        if np.any(self.times <= 0.0) or not np.all(np.isfinite(self.times)):
            raise DomainError("jump times must be positive and finite")
        if np.any(np.diff(self.times) <= 0.0):
            raise DomainError("jump times must be strictly increasing")
        if np.any(self.jumps <= 0.0) or not np.all(np.isfinite(self.jumps)):
            raise DomainError("jumps must be positive and finite")
        if self.epsilon0 < 0.0:
            raise DomainError("epsilon0 must be nonnegative")
        self._csum = np.concatenate(([0.0], np.cumsum(self.jumps)))


def baseline_eval(baseline, t):
    """R(t), vectorized over t >= 0."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0):
        raise DomainError("evaluation times must be nonnegative")
    idx = np.searchsorted(baseline.times, t, side="right")
    out = baseline.epsilon0 + baseline._csum[idx]
    return out if out.shape else float(out)


@dataclass
class MarginalModel:
    """One margin: transformation type, regression coefficients, baseline."""

    transform: str
    beta: np.ndarray
    baseline: BaselineStep

    def __post_init__(self):
        if self.transform not in TRANSFORMS:
            raise DomainError(f"unknown transformation {self.transform!r}")
        self.beta = np.atleast_1d(np.asarray(self.beta, dtype=float))


def marginal_survival(model, t, z):
    """S(t | z) = exp(-G(R(t) e^{beta'z})); lies in (0, 1].

    t may be scalar or (m,); z is (p,) or (m, p) matching t.
    """
    r = baseline_eval(model.baseline, t)
    z = np.asarray(z, dtype=float)
    lin = z @ model.beta if z.ndim else z * model.beta
    lam = r * np.exp(lin)
    return np.exp(-g_derivs(model.transform, lam, 0))
