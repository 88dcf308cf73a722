"""Trust-region Newton maximizer with dogleg steps.

The objective protocol is ``fun(x, order)``: order 2 returns
(value, gradient, hessian), order 0 returns the value alone (used for
trial points).  Maximization is performed by minimizing the negated
model; the Newton system uses the negated Hessian with its eigenvalues
floored away from zero whenever it is not safely positive definite, so
every step is an ascent direction of the model.

Coordinate reparameterizations (identity / log / dependence-parameter
maps) lift a constrained natural parameterization to an unconstrained
internal one with exact first- and second-order chain rule.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg

from .errors import DomainError

_EIG_FLOOR = 1e-8


@dataclass
class TrustRegionConfig:
    initial_radius: float = 1.0
    max_radius: float = 100.0
    eta_accept: float = 0.1
    gradient_tol: float = 1e-7
    step_tol: float = 1e-10
    max_iter: int = 500

    def __post_init__(self):
        if not 0.0 < self.eta_accept < 0.25:
            raise DomainError("eta_accept must lie in (0, 0.25)")
        if self.initial_radius <= 0 or self.max_radius < self.initial_radius:
            raise DomainError("invalid trust-region radii")


@dataclass
class MaximizeResult:
    x: np.ndarray
    value: float
    gradient: np.ndarray
    iterations: int
    converged: bool
    status: str
    radius: float


class _NewtonSolver:
    """Solve B p = -g for the (floored) negated Hessian B = -H."""

    def __init__(self, hess):
        B = -np.asarray(hess, dtype=float)
        B = 0.5 * (B + B.T)
        self.modified = False
        try:
            self._cho = linalg.cho_factor(B, check_finite=False)
            self._B = B
            self._eig = None
        except linalg.LinAlgError:
            vals, vecs = linalg.eigh(B, check_finite=False)
            floor = _EIG_FLOOR * max(np.max(np.abs(vals)), 1.0)
            vals = np.maximum(vals, floor)
            self.modified = True
            self._cho = None
            self._eig = (vals, vecs)
            self._B = (vecs * vals) @ vecs.T

    def solve(self, rhs):
        if self._cho is not None:
            return linalg.cho_solve(self._cho, rhs, check_finite=False)
        vals, vecs = self._eig
        return vecs @ ((vecs.T @ rhs) / vals)

    def quad(self, p):
        return float(p @ (self._B @ p))


def _dogleg(g_min, solver, radius):
    """Dogleg step for min model m(p) = g'p + p'Bp/2 within the radius."""
    p_newton = solver.solve(-g_min)
    norm_newton = np.linalg.norm(p_newton)
    if norm_newton <= radius:
        return p_newton, norm_newton == radius
    g_norm2 = float(g_min @ g_min)
    curv = solver.quad(g_min)
    p_cauchy = -(g_norm2 / curv) * g_min
    norm_cauchy = np.linalg.norm(p_cauchy)
    if norm_cauchy >= radius:
        return -(radius / np.sqrt(g_norm2)) * g_min, True
    d = p_newton - p_cauchy
    a = float(d @ d)
    b = 2.0 * float(p_cauchy @ d)
    c = float(p_cauchy @ p_cauchy) - radius * radius
    t = (-b + np.sqrt(b * b - 4.0 * a * c)) / (2.0 * a)
    return p_cauchy + t * d, True


def maximize(fun, x0, config=None):
    """Maximize fun by a dogleg trust-region Newton iteration.

    Parameters
    ----------
    fun : callable fun(x, order) -> (value, grad, hess) for order=2,
        or the value alone for order=0.  A trial value of -inf or nan
        rejects the step (the radius shrinks); exceptions propagate.
    x0 : starting point.
    config : TrustRegionConfig.

    Returns
    -------
    MaximizeResult; ``converged`` is False when the iteration or step
    budget runs out first, in which case x holds the best iterate seen.
    """
    cfg = config or TrustRegionConfig()
    x = np.asarray(x0, dtype=float).copy()
    value, grad, hess = fun(x, 2)
    if not np.isfinite(value):
        raise DomainError("objective not finite at the starting point")
    radius = cfg.initial_radius
    status = "max_iter"
    converged = False
    it = 0
    while it < cfg.max_iter:
        it += 1
        if np.max(np.abs(grad)) < cfg.gradient_tol:
            converged = True
            status = "gradient_tol"
            break
        solver = _NewtonSolver(hess)
        step, on_boundary = _dogleg(-grad, solver, radius)
        step_norm = np.linalg.norm(step)
        if step_norm < cfg.step_tol or radius < cfg.step_tol:
            status = "step_tol"
            converged = bool(np.max(np.abs(grad)) < cfg.gradient_tol)
            break
        predicted = float(grad @ step) - 0.5 * solver.quad(step)
        trial_value = fun(x + step, 0)
        if np.isfinite(trial_value) and predicted > 0.0:
            rho = (trial_value - value) / predicted
        else:
            rho = -np.inf
        if rho < 0.25:
            radius *= 0.25
        elif rho > 0.75 and on_boundary:
            radius = min(2.0 * radius, cfg.max_radius)
        if rho > cfg.eta_accept and trial_value > value:
            x = x + step
            value, grad, hess = fun(x, 2)
    return MaximizeResult(x=x, value=value, gradient=grad, iterations=it,
                          converged=converged, status=status, radius=radius)


# -- reparameterization -----------------------------------------------------

_KINDS = ("identity", "log", "shift_log", "atanh")


@dataclass
class Reparameterization:
    """Coordinate-wise bijections between natural and internal spaces.

    kinds per coordinate: 'identity' (x = a), 'log' (x = e^a, for
    positive parameters such as baseline jumps or a Clayton dependence),
    'shift_log' (x = 1 + e^a, Gumbel dependence), 'atanh' (x = tanh(a),
    Gaussian dependence).
    """

    kinds: tuple

    def __post_init__(self):
        bad = [k for k in self.kinds if k not in _KINDS]
        if bad:
            raise DomainError(f"unknown reparameterization kind {bad[0]!r}")
        self.kinds = tuple(self.kinds)

    def to_internal(self, x):
        x = np.asarray(x, dtype=float)
        a = np.empty_like(x)
        for i, k in enumerate(self.kinds):
            if k == "identity":
                a[i] = x[i]
            elif k == "log":
                if x[i] <= 0:
                    raise DomainError("log-reparameterized coordinate must be positive")
                a[i] = np.log(x[i])
            elif k == "shift_log":
                if x[i] <= 1:
                    raise DomainError("shift_log coordinate must exceed 1")
                a[i] = np.log(x[i] - 1.0)
            else:
                if not -1.0 < x[i] < 1.0:
                    raise DomainError("atanh coordinate must lie in (-1, 1)")
                a[i] = np.arctanh(x[i])
        return a

    def to_natural(self, a):
        x, _, _ = self.derivs(a)
        return x

    def derivs(self, a):
        """Natural value and first two derivatives of the map, per coordinate."""
        a = np.asarray(a, dtype=float)
        x = np.empty_like(a)
        d1 = np.empty_like(a)
        d2 = np.empty_like(a)
        for i, k in enumerate(self.kinds):
            if k == "identity":
                x[i], d1[i], d2[i] = a[i], 1.0, 0.0
            elif k == "log":
                e = np.exp(a[i])
                x[i], d1[i], d2[i] = e, e, e
            elif k == "shift_log":
                e = np.exp(a[i])
                x[i], d1[i], d2[i] = 1.0 + e, e, e
            else:
                t = np.tanh(a[i])
                x[i] = t
                d1[i] = 1.0 - t * t
                d2[i] = -2.0 * t * d1[i]
        return x, d1, d2


def chain_rule_lift(fun, repar):
    """Lift a natural-space objective to the internal space.

    The lifted gradient is g * phi' and the lifted Hessian is
    phi' H phi' + diag(g * phi''), both exact.
    """

    def lifted(a, order=2):
        x, d1, d2 = repar.derivs(a)
        if order == 0:
            return fun(x, 0)
        value, grad, hess = fun(x, 2)
        grad_l = grad * d1
        hess_l = hess * np.outer(d1, d1) + np.diag(grad * d2)
        return value, grad_l, hess_l

    return lifted
