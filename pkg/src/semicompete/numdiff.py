"""Error-controlled numerical differentiation.

Central differences extrapolated on a Neville tableau with shrinking step
(Ridders' scheme).  Works for scalar- or array-valued functions; the error
estimate is the tableau's internal consistency in the max norm.
"""

import numpy as np

_CON = 1.4
_CON2 = _CON * _CON
_NTAB = 10
_SAFE = 2.0


def _norm(x):
    return float(np.max(np.abs(x)))


def _extrapolate(quotient, h0):
    """Neville tableau over quotient(h) sampled at geometrically shrinking h."""
    tableau = {}
    hh = h0
    tableau[0, 0] = quotient(hh)
    err = np.inf
    best = tableau[0, 0]
    for i in range(1, _NTAB):
        hh /= _CON
        tableau[0, i] = quotient(hh)
        fac = _CON2
        for j in range(1, i + 1):
            tableau[j, i] = (tableau[j - 1, i] * fac - tableau[j - 1, i - 1]) / (fac - 1.0)
            fac *= _CON2
            errt = max(_norm(tableau[j, i] - tableau[j - 1, i]),
                       _norm(tableau[j, i] - tableau[j - 1, i - 1]))
            if errt <= err:
                err = errt
                best = tableau[j, i]
        if _norm(tableau[i, i] - tableau[i - 1, i - 1]) >= _SAFE * err:
            break
    return best, err


def derivative(f, x, h0=None):
    """First derivative of f at x by extrapolated central differences.

    Parameters
    ----------
    f : callable
        Scalar argument; may return a scalar or ndarray.
    x : float
    h0 : float, optional
        Initial step; defaults to a step proportional to max(|x|, 1).

    Returns
    -------
    (deriv, err) : estimate and an internal error estimate (max norm).
    """
    if h0 is None:
        h0 = 1e-2 * max(abs(x), 1.0)

    def quotient(h):
        return (np.asarray(f(x + h), dtype=float) - np.asarray(f(x - h), dtype=float)) / (2.0 * h)

    return _extrapolate(quotient, h0)


def second_derivative(f, x, h0=None):
    """Second derivative of f at x by extrapolated central differences."""
    if h0 is None:
        h0 = 3e-2 * max(abs(x), 1.0)
    f0 = np.asarray(f(x), dtype=float)

    def quotient(h):
        return (np.asarray(f(x + h), dtype=float) - 2.0 * f0
                + np.asarray(f(x - h), dtype=float)) / (h * h)

    return _extrapolate(quotient, h0)


def mixed_derivative(f, x, y, hx0=None, hy0=None):
    """Mixed partial d2 f / dx dy of f(x, y), both steps shrunk jointly."""
    if hx0 is None:
        hx0 = 3e-2 * max(abs(x), 1.0)
    if hy0 is None:
        hy0 = 3e-2 * max(abs(y), 1.0)
    ratio = hy0 / hx0

    def quotient(h):
        k = h * ratio
        return (np.asarray(f(x + h, y + k), dtype=float)
                - np.asarray(f(x + h, y - k), dtype=float)
                - np.asarray(f(x - h, y + k), dtype=float)
                + np.asarray(f(x - h, y - k), dtype=float)) / (4.0 * h * k)

    return _extrapolate(quotient, hx0)


def gradient(f, x, h0=None):
    """Gradient of scalar f at vector x, one extrapolated derivative per axis."""
    x = np.asarray(x, dtype=float)
    out = np.empty(x.size)
    for k in range(x.size):
        def fk(t, k=k):
            xk = x.copy()
            xk[k] = t
            return f(xk)
        step = h0 if h0 is not None else 1e-3 * max(abs(x[k]), 0.1)
        out[k], _ = derivative(fk, x[k], step)
    return out


def jacobian(f, x, h0=None):
    """Jacobian of vector-valued f at vector x (rows: outputs, cols: inputs)."""
    x = np.asarray(x, dtype=float)
    cols = []
    for k in range(x.size):
        def fk(t, k=k):
            xk = x.copy()
            xk[k] = t
            return np.asarray(f(xk), dtype=float)
        step = h0 if h0 is not None else 1e-3 * max(abs(x[k]), 0.1)
        col, _ = derivative(fk, x[k], step)
        cols.append(col)
    return np.column_stack(cols)
