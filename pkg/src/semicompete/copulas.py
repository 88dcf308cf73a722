"""Copula families for joint survival modeling.

Supported families: clayton (alpha > 0), frank (alpha != 0), gumbel
(alpha >= 1), gaussian (-1 < alpha < 1).  The joint survival function of a
pair is C(u1, u2; alpha) with u_j the marginal survivals.  Partial
derivatives with respect to (u1, u2, alpha) are available for every
multi-index of total order <= 4 that the estimation machinery needs;
Clayton/Frank/Gumbel are closed forms (generated symbolically), the
Gaussian family falls back to extrapolated central differences above
order two.
"""

import numpy as np
from scipy import integrate, optimize

from . import _copula_generated as _gen
from . import _gaussian
from .errors import DomainError, UnsupportedIndexError

FAMILIES = ("clayton", "frank", "gumbel", "gaussian")

VAL_INDICES = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))
SCORE_INDICES = VAL_INDICES + (
    (0, 0, 1), (2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1),
    (1, 1, 1), (2, 1, 0), (1, 2, 0),
)
INFO_INDICES = SCORE_INDICES + (
    (0, 0, 2), (2, 0, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2),
    (3, 0, 0), (0, 3, 0), (1, 1, 2), (2, 1, 1), (1, 2, 1),
    (3, 1, 0), (1, 3, 0), (2, 2, 0),
)
SUPPORTED_INDICES = frozenset(INFO_INDICES) - {(0, 0, 0)}

_EPS_U = 1e-12

LINKS = ("identity", "log", "logit_scaled")


def _require_family(family):
    if family not in FAMILIES:
        raise DomainError(f"unknown copula family {family!r}")


def check_alpha(family, alpha):
    """Validate the dependence parameter against the family domain."""
    _require_family(family)
    a = np.asarray(alpha, dtype=float)
    if not np.all(np.isfinite(a)):
        raise DomainError(f"{family}: non-finite alpha")
    ok = {
        "clayton": np.all(a > 0.0),
        "frank": np.all(a != 0.0),
        "gumbel": np.all(a >= 1.0),
        "gaussian": np.all(np.abs(a) < 1.0),
    }[family]
    if not ok:
        raise DomainError(f"{family}: alpha {alpha!r} outside family domain")


def _check_u(u, name):
    arr = np.asarray(u, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr


def _clip_u(u):
    return np.clip(u, _EPS_U, 1.0 - _EPS_U)


def copula_cdf(family, u1, u2, alpha):
    """C(u1, u2; alpha), vectorized; exact on the boundary of [0,1]^2."""
    check_alpha(family, alpha)
    u1 = _check_u(u1, "u1")
    u2 = _check_u(u2, "u2")
    if family == "gaussian":
        return _gaussian.cdf(u1, u2, alpha)
    fn = getattr(_gen, f"{family}_vals")
    out = fn(_clip_u(u1), _clip_u(u2), alpha)[(0, 0, 0)]
    # boundary identities hold exactly rather than to clip precision
    shape = np.broadcast_shapes(u1.shape, u2.shape, np.shape(alpha))
    out = np.broadcast_to(out, shape).copy()
    b1 = np.broadcast_to(u1, shape)
    b2 = np.broadcast_to(u2, shape)
    out[b1 == 0.0] = 0.0
    out[b2 == 0.0] = 0.0
    np.copyto(out, b2, where=(b1 == 1.0))
    np.copyto(out, b1, where=(b2 == 1.0))
    out[(b1 == 1.0) & (b2 == 1.0)] = 1.0
    return out if shape else float(out)


def copula_partial(family, index, u1, u2, alpha):
    """Partial derivative of C wrt (u1, u2, alpha) at a multi-index.

    ``index`` is a tuple (d_u1, d_u2, d_alpha) with total order 1..4 from
    the supported set.  u values in [0, 1] are clipped into the open
    interval by 1e-12 before evaluation.
    """
    index = tuple(int(k) for k in index)
    if index not in SUPPORTED_INDICES:
        raise UnsupportedIndexError(f"unsupported derivative index {index}")
    check_alpha(family, alpha)
    u1 = _clip_u(_check_u(u1, "u1"))
    u2 = _clip_u(_check_u(u2, "u2"))
    if family == "gaussian":
        return _gaussian.partial(index, u1, u2, alpha)
    fn = getattr(_gen, f"{family}_info")
    return fn(u1, u2, alpha)[index]


def partial_method(family, index):
    """'closed_form' or 'finite_difference' for a supported index."""
    index = tuple(int(k) for k in index)
    if index not in SUPPORTED_INDICES:
        raise UnsupportedIndexError(f"unsupported derivative index {index}")
    _require_family(family)
    if family == "gaussian" and sum(index) >= 3:
        return "finite_difference"
    return "closed_form"


def copula_pack(family, u1, u2, alpha, level="info"):
    """All partials up to a level ('vals' | 'score' | 'info') in one call.

    Returns a dict keyed by multi-index, including (0,0,0) for the CDF.
    Used by the likelihood internals; u values are clipped as in
    ``copula_partial``.
    """
    check_alpha(family, alpha)
    u1 = _clip_u(_check_u(u1, "u1"))
    u2 = _clip_u(_check_u(u2, "u2"))
    if family == "gaussian":
        return _gaussian.pack(u1, u2, alpha, level)
    fn = getattr(_gen, f"{family}_{level}")
    return fn(u1, u2, alpha)


def _frank_j(alpha):
    """J(alpha) = int_0^alpha t / (e^t - 1) dt, adaptive quadrature."""

    def integrand(t):
        if abs(t) < 1e-8:
            return 1.0 - 0.5 * t
        return t / np.expm1(t)

    val, _ = integrate.quad(integrand, 0.0, alpha, epsabs=1e-12, epsrel=1e-12,
                            limit=200)
    return val


def kendall_tau(family, alpha):
    """Population Kendall's tau implied by the dependence parameter."""
    check_alpha(family, alpha)
    a = float(alpha)
    if family == "gumbel":
        return (a - 1.0) / a
    if family == "clayton":
        return a / (a + 2.0)
    if family == "gaussian":
        return 2.0 / np.pi * np.arcsin(a)
    return 1.0 - 4.0 / a + 4.0 / (a * a) * _frank_j(a)


def tau_derivative(family, alpha):
    """d tau / d alpha, used for delta-method intervals."""
    check_alpha(family, alpha)
    a = float(alpha)
    if family == "gumbel":
        return 1.0 / (a * a)
    if family == "clayton":
        return 2.0 / (a + 2.0) ** 2
    if family == "gaussian":
        return 2.0 / (np.pi * np.sqrt(1.0 - a * a))
    return 4.0 / (a * a) + 4.0 / (a * np.expm1(a)) - 8.0 * _frank_j(a) / a ** 3


_FRANK_ALPHA_MAX = 700.0


def tau_to_alpha(family, tau):
    """Invert the tau map; errors when tau is outside the family's range."""
    _require_family(family)
    tau = float(tau)
    if family == "gumbel":
        if not 0.0 <= tau < 1.0:
            raise DomainError("gumbel requires tau in [0, 1)")
        return 1.0 / (1.0 - tau)
    if family == "clayton":
        if not 0.0 < tau < 1.0:
            raise DomainError("clayton (alpha > 0) requires tau in (0, 1)")
        return 2.0 * tau / (1.0 - tau)
    if family == "gaussian":
        if not -1.0 < tau < 1.0:
            raise DomainError("gaussian requires tau in (-1, 1)")
        return float(np.sin(0.5 * np.pi * tau))
    if tau == 0.0 or not -1.0 < tau < 1.0:
        raise DomainError("frank requires tau in (-1, 1) excluding 0")
    sign = 1.0 if tau > 0.0 else -1.0
    target = abs(tau)
    hi = _FRANK_ALPHA_MAX
    if kendall_tau("frank", hi) < target:
        raise DomainError(f"frank tau {tau} beyond representable range")
    lo = 1e-9
    root = optimize.bisect(lambda a: kendall_tau("frank", a) - target,
                           lo, hi, xtol=1e-13, maxiter=200)
    return sign * root


def link_derivs(link, eta):
    """phi(eta), phi'(eta), phi''(eta) for a dependence link function."""
    eta = np.asarray(eta, dtype=float)
    if link == "identity":
        one = np.ones_like(eta)
        return eta, one, np.zeros_like(eta)
    if link == "log":
        e = np.exp(eta)
        return e, e, e
    if link == "logit_scaled":
        # maps onto (-1, 1): phi = tanh(eta / 2)
        t = np.tanh(0.5 * eta)
        d1 = 0.5 * (1.0 - t * t)
        d2 = -t * d1
        return t, d1, d2
    raise DomainError(f"unknown link {link!r}")


def alpha_from_link(gamma, w, link, family=None):
    """Per-observation dependence parameter alpha = phi(gamma' w).

    Parameters
    ----------
    gamma : (q,) coefficients
    w : (q,) or (n, q) design values
    link : one of {'identity', 'log', 'logit_scaled'}
    family : optional; when given the result is validated against the
        family domain.
    """
    gamma = np.atleast_1d(np.asarray(gamma, dtype=float))
    w = np.asarray(w, dtype=float)
    eta = w @ gamma
    alpha, _, _ = link_derivs(link, eta)
    if family is not None:
        check_alpha(family, alpha)
    return alpha


def _du(family, u1, u2, alpha):
    if family == "gaussian":
        return _gaussian.du(u1, u2, alpha)
    return getattr(_gen, f"{family}_du")(u1, u2, alpha)


def conditional_sample(family, alpha, u1, v):
    """Second coordinate given the first: solve dC/du1(u1, u2) = v for u2.

    With u1 and v independent uniforms the pair (u1, u2) has distribution
    C.  Clayton inverts in closed form; the other families use a bracketed
    bisection on u2 to 1e-12 followed by a residual check.
    """
    check_alpha(family, alpha)
    u1 = _clip_u(_check_u(u1, "u1"))
    v = _clip_u(_check_u(v, "v"))
    if family == "clayton":
        a = alpha
        return (u1 ** (-a) * (v ** (-a / (a + 1.0)) - 1.0) + 1.0) ** (-1.0 / a)
    shape = np.broadcast_shapes(u1.shape, v.shape, np.shape(alpha))
    u1b = np.broadcast_to(u1, shape).ravel()
    vb = np.broadcast_to(v, shape).ravel()
    ab = np.broadcast_to(np.asarray(alpha, dtype=float), shape).ravel()
    lo = np.full_like(u1b, _EPS_U)
    hi = np.full_like(u1b, 1.0 - _EPS_U)
    # dC/du1 is the conditional CDF of u2 given u1: monotone increasing
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        high = _du(family, u1b, mid, ab) > vb
        hi = np.where(high, mid, hi)
        lo = np.where(high, lo, mid)
    out = 0.5 * (lo + hi)
    resid = np.abs(_du(family, u1b, out, ab) - vb)
    # interior solutions must be located precisely; boundary-saturated
    # draws (v beyond the reachable conditional range) are legitimate
    interior = (out > 2.0 * _EPS_U) & (out < 1.0 - 2.0 * _EPS_U)
    if np.any(interior & (resid > 1e-9)):
        raise RuntimeError("conditional sampling root-find failed to converge")
    out = out.reshape(shape)
    return out if shape else float(out)
