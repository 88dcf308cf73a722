"""Gaussian copula: quadrature CDF, analytic partials to order two,
extrapolated central differences for orders three and four.

The CDF uses the identity  C(u,v;rho) = Phi(x1)Phi(x2) + int_0^rho
phi2(x1,x2;r) dr  with a fixed Gauss-Legendre rule, where phi2 is the
bivariate normal density.  Derivatives of order three and four reuse the
analytic order-two partials through the extrapolated differences in
``numdiff``; accuracy degrades for u within ~1e-6 of the boundary.
"""

import numpy as np
from scipy.special import ndtr, ndtri

from . import numdiff

_SQRT2PI = np.sqrt(2.0 * np.pi)
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(160)
_EPS = 1e-12


def _phi(x):
    return np.exp(-0.5 * x * x) / _SQRT2PI


def _clip(u):
    return np.clip(np.asarray(u, dtype=float), _EPS, 1.0 - _EPS)


def cdf(u, v, rho):
    """Bivariate Gaussian copula CDF, vectorized over u, v, rho."""
    u = _clip(u)
    v = _clip(v)
    shape = np.broadcast_shapes(u.shape, v.shape, np.shape(rho))
    x1 = np.broadcast_to(ndtri(u), shape).ravel()
    x2 = np.broadcast_to(ndtri(v), shape).ravel()
    rr = np.broadcast_to(np.asarray(rho, dtype=float), shape).ravel()
    r = 0.5 * rr * (_GL_NODES[:, None] + 1.0)
    w = 0.5 * rr * _GL_WEIGHTS[:, None]
    s2 = 1.0 - r * r
    q = x1 * x1 - 2.0 * r * x1 * x2 + x2 * x2
    dens = np.exp(-0.5 * q / s2) / (2.0 * np.pi * np.sqrt(s2))
    out = ndtr(x1) * ndtr(x2) + np.sum(w * dens, axis=0)
    return out.reshape(shape) if shape else float(out[0])


def _core(u, v, rho):
    u = _clip(u)
    v = _clip(v)
    x1 = ndtri(u)
    x2 = ndtri(v)
    s2 = 1.0 - rho * rho
    s = np.sqrt(s2)
    k1 = (x2 - rho * x1) / s
    k2 = (x1 - rho * x2) / s
    return x1, x2, s, s2, k1, k2


def d100(u, v, rho):
    _, _, _, _, k1, _ = _core(u, v, rho)
    return ndtr(k1)


def d010(u, v, rho):
    _, _, _, _, _, k2 = _core(u, v, rho)
    return ndtr(k2)


def d110(u, v, rho):
    _, x2, s, _, k1, _ = _core(u, v, rho)
    return _phi(k1) / (s * _phi(x2))


def d200(u, v, rho):
    x1, _, s, _, k1, _ = _core(u, v, rho)
    return -(rho / s) * _phi(k1) / _phi(x1)


def d020(u, v, rho):
    _, x2, s, _, _, k2 = _core(u, v, rho)
    return -(rho / s) * _phi(k2) / _phi(x2)


def d001(u, v, rho):
    x1, _, s, _, k1, _ = _core(u, v, rho)
    return _phi(x1) * _phi(k1) / s


def d101(u, v, rho):
    _, _, _, s2, k1, k2 = _core(u, v, rho)
    return -_phi(k1) * k2 / s2


def d011(u, v, rho):
    _, _, _, s2, k1, k2 = _core(u, v, rho)
    return -_phi(k2) * k1 / s2


def d002(u, v, rho):
    x1, x2, s, s2, k1, _ = _core(u, v, rho)
    dens = _phi(x1) * _phi(k1) / s
    q = x1 * x1 - 2.0 * rho * x1 * x2 + x2 * x2
    return dens * (rho * s2 + x1 * x2 * s2 - rho * q) / (s2 * s2)


_ANALYTIC = {
    (0, 0, 0): cdf,
    (1, 0, 0): d100,
    (0, 1, 0): d010,
    (1, 1, 0): d110,
    (2, 0, 0): d200,
    (0, 2, 0): d020,
    (0, 0, 1): d001,
    (1, 0, 1): d101,
    (0, 1, 1): d011,
    (0, 0, 2): d002,
}

# order >= 3: (analytic base index, remaining differentiation)
# ("d", axis): one derivative; ("d2", axis): pure second;
# ("mixed", ax1, ax2): mixed second.  Axes: 0=u, 1=v, 2=rho.
_FALLBACK = {
    (2, 1, 0): ((2, 0, 0), ("d", 1)),
    (1, 2, 0): ((0, 2, 0), ("d", 0)),
    (3, 0, 0): ((2, 0, 0), ("d", 0)),
    (0, 3, 0): ((0, 2, 0), ("d", 1)),
    (2, 0, 1): ((2, 0, 0), ("d", 2)),
    (0, 2, 1): ((0, 2, 0), ("d", 2)),
    (1, 1, 1): ((1, 1, 0), ("d", 2)),
    (1, 0, 2): ((1, 0, 1), ("d", 2)),
    (0, 1, 2): ((0, 1, 1), ("d", 2)),
    (1, 1, 2): ((1, 1, 0), ("d2", 2)),
    (2, 1, 1): ((2, 0, 0), ("mixed", 1, 2)),
    (1, 2, 1): ((0, 2, 0), ("mixed", 0, 2)),
    (3, 1, 0): ((2, 0, 0), ("mixed", 0, 1)),
    (1, 3, 0): ((0, 2, 0), ("mixed", 0, 1)),
    (2, 2, 0): ((2, 0, 0), ("d2", 1)),
}


def partial(index, u, v, rho):
    """Single partial derivative for the Gaussian family (vectorized)."""
    u = _clip(u)
    v = _clip(v)
    if index in _ANALYTIC:
        return _ANALYTIC[index](u, v, rho)
    base_idx, spec = _FALLBACK[index]
    base = _ANALYTIC[base_idx]
    # steps respect the distance to the nearest domain boundary
    h = [min(1e-3, 0.3 * float(np.min(np.minimum(u, 1.0 - u)))),
         min(1e-3, 0.3 * float(np.min(np.minimum(v, 1.0 - v)))),
         min(1e-3, 0.3 * (1.0 - abs(rho)))]

    def shifted(su, sv, r):
        # scalar shifts of the whole array differentiate elementwise
        return base(u + su, v + sv, r)

    kind = spec[0]
    if kind == "d":
        axis = spec[1]
        fns = {0: lambda t: shifted(t, 0.0, rho),
               1: lambda t: shifted(0.0, t, rho),
               2: lambda t: shifted(0.0, 0.0, t)}
        x0 = rho if axis == 2 else 0.0
        val, _ = numdiff.derivative(fns[axis], x0, h[axis])
        return val
    if kind == "d2":
        axis = spec[1]
        fns = {1: lambda t: shifted(0.0, t, rho),
               2: lambda t: shifted(0.0, 0.0, t)}
        x0 = rho if axis == 2 else 0.0
        val, _ = numdiff.second_derivative(fns[axis], x0, h[axis])
        return val
    ax1, ax2 = spec[1], spec[2]
    if (ax1, ax2) == (0, 1):
        f2 = lambda t1, t2: shifted(t1, t2, rho)
        x0, y0 = 0.0, 0.0
    elif (ax1, ax2) == (0, 2):
        f2 = lambda t1, t2: shifted(t1, 0.0, t2)
        x0, y0 = 0.0, rho
    else:  # (1, 2)
        f2 = lambda t1, t2: shifted(0.0, t1, t2)
        x0, y0 = 0.0, rho
    val, _ = numdiff.mixed_derivative(f2, x0, y0, h[ax1], h[ax2])
    return val


def du(u, v, rho):
    return d100(u, v, rho)


def pack(u, v, rho, level):
    """Dict of partials matching the generated families' pack layout."""
    from .copulas import VAL_INDICES, SCORE_INDICES, INFO_INDICES
    idx_list = {"vals": VAL_INDICES, "score": SCORE_INDICES,
                "info": INFO_INDICES}[level]
    return {idx: partial(idx, u, v, rho) for idx in idx_list}
