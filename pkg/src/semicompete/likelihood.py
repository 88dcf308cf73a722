"""Log-likelihoods, scores and curvature for semi-competing-risks data.

Data layout: per subject, x = min(nonterminal time, c), c = min(terminal
time, administrative censoring), event indicators delta_t, delta_d, and
covariates z.  The joint model couples two transformation margins through
a copula in the survival scale:

    P(T > t, D > d | z) = C(S_T(t|z), S_D(d|z); alpha)

The full (average) log-likelihood splits per subject into one of four
copula terms selected by (delta_t, delta_d) plus marginal density factors:

    l_i = dt*dd*log C_uv + dt*(1-dd)*log C_u + (1-dt)*dd*log C_v
        + (1-dt)*(1-dd)*log C
        + sum_j d_j*[ -G_j(L_j) + log G_j'(L_j) + log dR_j + beta_j'z ]

with L_j = R_j(time) * exp(beta_j'z).  The stage-1 likelihood for the
terminal margin alone replaces the copula terms by the usual
independent-censoring form (the -G_D term no longer multiplied by the
indicator).

All public quantities are averages over subjects; per-subject score rows
are available for sandwich estimation.  Sums use numpy's pairwise
reduction in subject order, so results are deterministic for a fixed
dataset ordering.
"""

from dataclasses import dataclass

import numpy as np

from . import copulas, margins
from .errors import DomainError


@dataclass
class Dataset:
    """Observed tuples (x, c, delta_t, delta_d, z[, w]).

    Invariants: x <= c; delta flags in {0,1}; delta_t = 0 implies x = c
    (no terminal or censoring event can precede the recorded x).
    w carries optional design values for a covariate-dependent dependence
    parameter.
    """

    x: np.ndarray
    c: np.ndarray
    delta_t: np.ndarray
    delta_d: np.ndarray
    z: np.ndarray
    w: np.ndarray = None

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.c = np.asarray(self.c, dtype=float)
        self.delta_t = np.asarray(self.delta_t, dtype=float)
        self.delta_d = np.asarray(self.delta_d, dtype=float)
        self.z = np.asarray(self.z, dtype=float)
        n = self.x.shape[0]
        if self.z.ndim == 1:
            self.z = self.z.reshape(n, 1)
        for name in ("x", "c", "delta_t", "delta_d"):
            arr = getattr(self, name)
            if arr.shape != (n,) or not np.all(np.isfinite(arr)):
                raise DomainError(f"column {name} must be finite of length {n}")
        if np.any(self.x <= 0.0) or np.any(self.c <= 0.0):
            raise DomainError("times must be positive")
        for name in ("delta_t", "delta_d"):
            arr = getattr(self, name)
            if not np.all((arr == 0.0) | (arr == 1.0)):
                raise DomainError(f"{name} must be 0/1")
        bad = np.nonzero(self.x > self.c)[0]
        if bad.size:
            raise DomainError(f"x > c at row {bad[0]}")
        bad = np.nonzero((self.delta_t == 0.0) & (self.x != self.c))[0]
        if bad.size:
            raise DomainError(f"delta_t=0 requires x=c; violated at row {bad[0]}")
        if self.z.shape[0] != n:
            raise DomainError("z must have one row per subject")
        if self.w is not None:
            self.w = np.asarray(self.w, dtype=float)
            if self.w.ndim == 1:
                self.w = self.w.reshape(n, 1)
            if self.w.shape[0] != n or not np.all(np.isfinite(self.w)):
                raise DomainError("w must be finite with one row per subject")

    @property
    def n(self):
        return self.x.shape[0]

    @property
    def p(self):
        return self.z.shape[1]


def event_grid(times, deltas, cap=None):
    """Sorted unique event times (ties merged), optionally capped."""
    times = np.asarray(times, dtype=float)
    deltas = np.asarray(deltas, dtype=float)
    grid = np.unique(times[deltas == 1.0])
    if cap is not None:
        grid = grid[grid <= cap]
    return grid


@dataclass
class ThetaD:
    """Terminal-margin parameters: regression beta and baseline jumps."""

    beta: np.ndarray
    jumps: np.ndarray

    def __post_init__(self):
        self.beta = np.atleast_1d(np.asarray(self.beta, dtype=float))
        self.jumps = np.atleast_1d(np.asarray(self.jumps, dtype=float))

    def validate(self):
        if np.any(self.jumps <= 0.0):
            raise DomainError("baseline jumps must be positive")

    def stack(self):
        return np.concatenate([self.beta, self.jumps])

    @classmethod
    def unstack(cls, vec, p):
        vec = np.asarray(vec, dtype=float)
        return cls(vec[:p], vec[p:])


@dataclass
class Theta1:
    """Stage-2 parameters: dependence (alpha, or gamma under a link),
    nonterminal regression beta and baseline jumps.  Stacking order:
    (dep, beta, jumps)."""

    dep: np.ndarray
    beta: np.ndarray
    jumps: np.ndarray

    def __post_init__(self):
        self.dep = np.atleast_1d(np.asarray(self.dep, dtype=float))
        self.beta = np.atleast_1d(np.asarray(self.beta, dtype=float))
        self.jumps = np.atleast_1d(np.asarray(self.jumps, dtype=float))

    @property
    def alpha(self):
        if self.dep.size != 1:
            raise DomainError("scalar alpha undefined under a dependence link")
        return float(self.dep[0])

    def validate(self):
        if np.any(self.jumps <= 0.0):
            raise DomainError("baseline jumps must be positive")

    def stack(self):
        return np.concatenate([self.dep, self.beta, self.jumps])

    @classmethod
    def unstack(cls, vec, q, p):
        vec = np.asarray(vec, dtype=float)
        return cls(vec[:q], vec[q:q + p], vec[q + p:])


@dataclass
class ThetaFull:
    """Joint parameter: theta1 followed by theta_d."""

    theta1: Theta1
    theta_d: ThetaD

    def stack(self):
        return np.concatenate([self.theta1.stack(), self.theta_d.stack()])

    @classmethod
    def unstack(cls, vec, q, p, kt):
        vec = np.asarray(vec, dtype=float)
        d1 = q + p + kt
        return cls(Theta1.unstack(vec[:d1], q, p), ThetaD.unstack(vec[d1:], p))


def _masked_log(mask, val, what):
    out = np.zeros(mask.shape)
    sel = val[mask] if val.shape else np.broadcast_to(val, mask.shape)[mask]
    if np.any(sel <= 0.0) or not np.all(np.isfinite(sel)):
        raise DomainError(f"nonpositive {what} (invalid parameter region)")
    out[mask] = np.log(sel)
    return out


def _mratio(mask, num, den):
    out = np.zeros(mask.shape)
    num = np.broadcast_to(num, mask.shape)
    den = np.broadcast_to(den, mask.shape)
    np.divide(num, den, out=out, where=mask)
    return out


def _logcurv(mask, f_xy, f_x, f_y, f):
    """d^2 log f / dx dy = (f_xy * f - f_x * f_y) / f^2, masked."""
    out = np.zeros(mask.shape)
    f_xy = np.broadcast_to(f_xy, mask.shape)
    f_x = np.broadcast_to(f_x, mask.shape)
    f_y = np.broadcast_to(f_y, mask.shape)
    f = np.broadcast_to(f, mask.shape)
    np.divide(f_xy * f - f_x * f_y, f * f, out=out, where=mask)
    return out


class MarginLikelihood:
    """Independent-censoring likelihood for one transformation margin.

    Used for the stage-1 fit of the terminal margin and for starting
    values of the nonterminal margin.
    """

    def __init__(self, time, delta, z, transform=margins.PH, grid=None,
                 epsilon0=0.0):
        self.time = np.asarray(time, dtype=float)
        self.delta = np.asarray(delta, dtype=float)
        self.z = np.asarray(z, dtype=float)
        if self.z.ndim == 1:
            self.z = self.z.reshape(-1, 1)
        self.transform = transform
        self.grid = event_grid(self.time, self.delta) if grid is None else np.asarray(grid, dtype=float)
        if self.grid.size == 0:
            raise DomainError("no events: empty baseline grid")
        self.epsilon0 = float(epsilon0)
        self.Y = (self.time[:, None] >= self.grid[None, :]).astype(float)
        self.I = (self.time[:, None] == self.grid[None, :]).astype(float)
        self.n = self.time.shape[0]
        self.p = self.z.shape[1]
        self.dim = self.p + self.grid.size

    def _parts(self, theta):
        w = np.exp(self.z @ theta.beta)
        r = self.epsilon0 + self.Y @ theta.jumps
        lam = r * w
        g0, g1, g2, g3 = margins.g_pack(self.transform, lam)
        return w, lam, g0, g1, g2, g3

    def loglik(self, theta):
        w, lam, g0, g1, _, _ = self._parts(theta)
        val = self.delta * (self.I @ np.log(theta.jumps) + self.z @ theta.beta
                            + np.log(g1)) - g0
        return float(np.mean(val))

    def score_per_subject(self, theta):
        w, lam, g0, g1, g2, _ = self._parts(theta)
        m1 = self.delta * (g2 / g1) - g1
        rows = np.empty((self.n, self.dim))
        rows[:, :self.p] = (m1 * lam + self.delta)[:, None] * self.z
        rows[:, self.p:] = self.Y * (m1 * w)[:, None] \
            + self.I * self.delta[:, None] / theta.jumps[None, :]
        return rows

    def score(self, theta):
        return self.score_per_subject(theta).mean(axis=0)

    def info(self, theta):
        """Negative average Hessian of the margin log-likelihood."""
        w, lam, g0, g1, g2, g3 = self._parts(theta)
        m1 = self.delta * (g2 / g1) - g1
        m2 = self.delta * (g3 * g1 - g2 * g2) / (g1 * g1) - g2
        p, k = self.p, self.grid.size
        hess = np.empty((self.dim, self.dim))
        hess[:p, :p] = (self.z * (m2 * lam * lam + m1 * lam)[:, None]).T @ self.z
        bj = (self.z * ((m2 * lam + m1) * w)[:, None]).T @ self.Y
        hess[:p, p:] = bj
        hess[p:, :p] = bj.T
        hess[p:, p:] = (self.Y * (m2 * w * w)[:, None]).T @ self.Y
        hess[p:, p:] -= np.diag((self.I * self.delta[:, None]).sum(axis=0)
                                / theta.jumps ** 2)
        return -hess / self.n


class FullLikelihood:
    """Copula-coupled likelihood over both margins.

    Parameters are held as ThetaFull; evaluation is vectorized over
    subjects, with a dict of copula partials shared by the value, score
    and curvature assemblies.
    """

    def __init__(self, data, family, g_t=margins.PH, g_d=margins.PH,
                 t_grid=None, d_grid=None, link=None, epsilon0_t=0.0,
                 epsilon0_d=0.0):
        if family not in copulas.FAMILIES:
            raise DomainError(f"unknown copula family {family!r}")
        self.data = data
        self.family = family
        self.g_t = g_t
        self.g_d = g_d
        xi = float(np.max(data.c))
        self.t_grid = event_grid(data.x, data.delta_t, cap=xi) if t_grid is None \
            else np.asarray(t_grid, dtype=float)
        self.d_grid = event_grid(data.c, data.delta_d, cap=xi) if d_grid is None \
            else np.asarray(d_grid, dtype=float)
        if np.any(self.t_grid > xi) or np.any(self.d_grid > xi):
            raise DomainError("grid times beyond the last followup time")
        self.epsilon0_t = float(epsilon0_t)
        self.epsilon0_d = float(epsilon0_d)
        if link is None:
            self.link = "identity"
            self.W = np.ones((data.n, 1))
        else:
            if link not in copulas.LINKS:
                raise DomainError(f"unknown link {link!r}")
            if data.w is None:
                raise DomainError("dependence link requires w columns")
            self.link = link
            self.W = data.w
        self.q = self.W.shape[1]
        self.p = data.p
        self.kt = self.t_grid.size
        self.kd = self.d_grid.size
        self.dim1 = self.q + self.p + self.kt
        self.dim_d = self.p + self.kd
        self.dim = self.dim1 + self.dim_d
        self.Yt = (data.x[:, None] >= self.t_grid[None, :]).astype(float)
        self.It = (data.x[:, None] == self.t_grid[None, :]).astype(float)
        self.Yd = (data.c[:, None] >= self.d_grid[None, :]).astype(float)
        self.Id = (data.c[:, None] == self.d_grid[None, :]).astype(float)
        dt = data.delta_t.astype(bool)
        dd = data.delta_d.astype(bool)
        self._mb = dt & dd
        self._mt = dt & ~dd
        self._md = ~dt & dd
        self._mn = ~dt & ~dd

    def _margin(self, side, theta_like, u_override=None):
        data = self.data
        if side == "t":
            tr, Y, eps = self.g_t, self.Yt, self.epsilon0_t
        else:
            tr, Y, eps = self.g_d, self.Yd, self.epsilon0_d
        w = np.exp(data.z @ theta_like.beta)
        r = eps + Y @ theta_like.jumps
        lam = r * w
        g0, g1, g2, g3 = margins.g_pack(tr, lam)
        u = np.exp(-g0) if u_override is None else np.asarray(u_override, dtype=float)
        u = np.clip(u, copulas._EPS_U, 1.0 - copulas._EPS_U)
        return {"w": w, "lam": lam, "g0": g0, "g1": g1, "g2": g2, "g3": g3,
                "u": u, "q": -u * g1, "r": u * (g1 * g1 - g2)}

    def _alpha(self, theta1):
        eta = self.W @ theta1.dep
        a, d1, d2 = copulas.link_derivs(self.link, eta)
        copulas.check_alpha(self.family, a)
        return a, d1, d2

    def _pack(self, mt, md, alpha, level):
        return copulas.copula_pack(self.family, mt["u"], md["u"], alpha, level)

    def _value(self, theta, mt, md, P):
        data = self.data
        cop = (_masked_log(self._mb, np.broadcast_to(P[(1, 1, 0)], self._mb.shape), "copula density")
               + _masked_log(self._mt, np.broadcast_to(P[(1, 0, 0)], self._mb.shape), "copula partial")
               + _masked_log(self._md, np.broadcast_to(P[(0, 1, 0)], self._mb.shape), "copula partial")
               + _masked_log(self._mn, np.broadcast_to(P[(0, 0, 0)], self._mb.shape), "copula value"))
        t1, thd = theta.theta1, theta.theta_d
        marg_t = data.delta_t * (-mt["g0"] + np.log(mt["g1"])
                                 + self.It @ np.log(t1.jumps) + data.z @ t1.beta)
        marg_d = data.delta_d * (-md["g0"] + np.log(md["g1"])
                                 + self.Id @ np.log(thd.jumps) + data.z @ thd.beta)
        return float(np.mean(cop + marg_t + marg_d))

    def _score_terms(self, P):
        mb, mt_, md_, mn = self._mb, self._mt, self._md, self._mn
        psi_a = (_mratio(mb, P[(1, 1, 1)], P[(1, 1, 0)])
                 + _mratio(mt_, P[(1, 0, 1)], P[(1, 0, 0)])
                 + _mratio(md_, P[(0, 1, 1)], P[(0, 1, 0)])
                 + _mratio(mn, P[(0, 0, 1)], P[(0, 0, 0)]))
        a_t = (_mratio(mb, P[(2, 1, 0)], P[(1, 1, 0)])
               + _mratio(mt_, P[(2, 0, 0)], P[(1, 0, 0)])
               + _mratio(md_, P[(1, 1, 0)], P[(0, 1, 0)])
               + _mratio(mn, P[(1, 0, 0)], P[(0, 0, 0)]))
        a_d = (_mratio(mb, P[(1, 2, 0)], P[(1, 1, 0)])
               + _mratio(mt_, P[(1, 1, 0)], P[(1, 0, 0)])
               + _mratio(md_, P[(0, 2, 0)], P[(0, 1, 0)])
               + _mratio(mn, P[(0, 1, 0)], P[(0, 0, 0)]))
        return psi_a, a_t, a_d

    def _curv_terms(self, P):
        mb, mt_, md_, mn = self._mb, self._mt, self._md, self._mn
        h_aa = (_logcurv(mb, P[(1, 1, 2)], P[(1, 1, 1)], P[(1, 1, 1)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(1, 0, 2)], P[(1, 0, 1)], P[(1, 0, 1)], P[(1, 0, 0)])
                + _logcurv(md_, P[(0, 1, 2)], P[(0, 1, 1)], P[(0, 1, 1)], P[(0, 1, 0)])
                + _logcurv(mn, P[(0, 0, 2)], P[(0, 0, 1)], P[(0, 0, 1)], P[(0, 0, 0)]))
        h_tt = (_logcurv(mb, P[(3, 1, 0)], P[(2, 1, 0)], P[(2, 1, 0)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(3, 0, 0)], P[(2, 0, 0)], P[(2, 0, 0)], P[(1, 0, 0)])
                + _logcurv(md_, P[(2, 1, 0)], P[(1, 1, 0)], P[(1, 1, 0)], P[(0, 1, 0)])
                + _logcurv(mn, P[(2, 0, 0)], P[(1, 0, 0)], P[(1, 0, 0)], P[(0, 0, 0)]))
        h_dd = (_logcurv(mb, P[(1, 3, 0)], P[(1, 2, 0)], P[(1, 2, 0)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(1, 2, 0)], P[(1, 1, 0)], P[(1, 1, 0)], P[(1, 0, 0)])
                + _logcurv(md_, P[(0, 3, 0)], P[(0, 2, 0)], P[(0, 2, 0)], P[(0, 1, 0)])
                + _logcurv(mn, P[(0, 2, 0)], P[(0, 1, 0)], P[(0, 1, 0)], P[(0, 0, 0)]))
        h_td = (_logcurv(mb, P[(2, 2, 0)], P[(2, 1, 0)], P[(1, 2, 0)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(2, 1, 0)], P[(2, 0, 0)], P[(1, 1, 0)], P[(1, 0, 0)])
                + _logcurv(md_, P[(1, 2, 0)], P[(1, 1, 0)], P[(0, 2, 0)], P[(0, 1, 0)])
                + _logcurv(mn, P[(1, 1, 0)], P[(1, 0, 0)], P[(0, 1, 0)], P[(0, 0, 0)]))
        h_ta = (_logcurv(mb, P[(2, 1, 1)], P[(2, 1, 0)], P[(1, 1, 1)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(2, 0, 1)], P[(2, 0, 0)], P[(1, 0, 1)], P[(1, 0, 0)])
                + _logcurv(md_, P[(1, 1, 1)], P[(1, 1, 0)], P[(0, 1, 1)], P[(0, 1, 0)])
                + _logcurv(mn, P[(1, 0, 1)], P[(1, 0, 0)], P[(0, 0, 1)], P[(0, 0, 0)]))
        h_da = (_logcurv(mb, P[(1, 2, 1)], P[(1, 2, 0)], P[(1, 1, 1)], P[(1, 1, 0)])
                + _logcurv(mt_, P[(1, 1, 1)], P[(1, 1, 0)], P[(1, 0, 1)], P[(1, 0, 0)])
                + _logcurv(md_, P[(0, 2, 1)], P[(0, 2, 0)], P[(0, 1, 1)], P[(0, 1, 0)])
                + _logcurv(mn, P[(0, 1, 1)], P[(0, 1, 0)], P[(0, 0, 1)], P[(0, 0, 0)]))
        return h_aa, h_tt, h_dd, h_td, h_ta, h_da

    # -- public evaluations ------------------------------------------------

    def loglik(self, theta, u_t=None, u_d=None):
        theta.theta1.validate()
        theta.theta_d.validate()
        mt = self._margin("t", theta.theta1, u_t)
        md = self._margin("d", theta.theta_d, u_d)
        alpha, _, _ = self._alpha(theta.theta1)
        P = self._pack(mt, md, alpha, "vals")
        return self._value(theta, mt, md, P)

    def _score_blocks(self, theta, mt, md, P, dphi):
        data = self.data
        psi_a, a_t, a_d = self._score_terms(P)
        s_t = a_t * mt["q"] + data.delta_t * (mt["g2"] / mt["g1"] - mt["g1"])
        s_d = a_d * md["q"] + data.delta_d * (md["g2"] / md["g1"] - md["g1"])
        rows = np.empty((data.n, self.dim))
        i = 0
        rows[:, i:i + self.q] = (psi_a * dphi)[:, None] * self.W
        i += self.q
        rows[:, i:i + self.p] = (s_t * mt["lam"] + data.delta_t)[:, None] * data.z
        i += self.p
        rows[:, i:i + self.kt] = self.Yt * (s_t * mt["w"])[:, None] \
            + self.It * data.delta_t[:, None] / theta.theta1.jumps[None, :]
        i += self.kt
        rows[:, i:i + self.p] = (s_d * md["lam"] + data.delta_d)[:, None] * data.z
        i += self.p
        rows[:, i:] = self.Yd * (s_d * md["w"])[:, None] \
            + self.Id * data.delta_d[:, None] / theta.theta_d.jumps[None, :]
        return rows

    def score_full_per_subject(self, theta, u_t=None, u_d=None):
        theta.theta1.validate()
        theta.theta_d.validate()
        mt = self._margin("t", theta.theta1, u_t)
        md = self._margin("d", theta.theta_d, u_d)
        alpha, dphi, _ = self._alpha(theta.theta1)
        P = self._pack(mt, md, alpha, "score")
        return self._score_blocks(theta, mt, md, P, dphi)

    def score_full(self, theta, u_t=None, u_d=None):
        return self.score_full_per_subject(theta, u_t, u_d).mean(axis=0)

    def score_theta1_per_subject(self, theta, u_t=None, u_d=None):
        return self.score_full_per_subject(theta, u_t, u_d)[:, :self.dim1]

    def score_theta1(self, theta, u_t=None, u_d=None):
        return self.score_theta1_per_subject(theta, u_t, u_d).mean(axis=0)

    def _hessian(self, theta, scope="full"):
        data = self.data
        n = data.n
        mt = self._margin("t", theta.theta1)
        md = self._margin("d", theta.theta_d)
        alpha, dphi, d2phi = self._alpha(theta.theta1)
        P = self._pack(mt, md, alpha, "info")
        psi_a, a_t, a_d = self._score_terms(P)
        h_aa, h_tt, h_dd, h_td, h_ta, h_da = self._curv_terms(P)
        dt, dd = data.delta_t, data.delta_d
        s_t = a_t * mt["q"] + dt * (mt["g2"] / mt["g1"] - mt["g1"])
        s_d = a_d * md["q"] + dd * (md["g2"] / md["g1"] - md["g1"])
        m2_t = dt * ((mt["g3"] * mt["g1"] - mt["g2"] ** 2) / mt["g1"] ** 2 - mt["g2"])
        m2_d = dd * ((md["g3"] * md["g1"] - md["g2"] ** 2) / md["g1"] ** 2 - md["g2"])
        c_t = h_tt * mt["q"] ** 2 + a_t * mt["r"] + m2_t
        c_d = h_dd * md["q"] ** 2 + a_d * md["r"] + m2_d
        e_td = h_td * mt["q"] * md["q"]
        W, Z, Yt, Yd = self.W, data.z, self.Yt, self.Yd
        q, p, kt, kd = self.q, self.p, self.kt, self.kd
        dim = self.dim1 if scope == "theta1" else self.dim
        H = np.zeros((dim, dim))
        sl_a = slice(0, q)
        sl_bt = slice(q, q + p)
        sl_jt = slice(q + p, q + p + kt)

        def put(sa, sb, block):
            H[sa, sb] = block
            if sa != sb:
                H[sb, sa] = block.T

        put(sl_a, sl_a, (W * (h_aa * dphi * dphi + psi_a * d2phi)[:, None]).T @ W)
        put(sl_a, sl_bt, (W * (h_ta * dphi * mt["q"] * mt["lam"])[:, None]).T @ Z)
        put(sl_a, sl_jt, (W * (h_ta * dphi * mt["q"] * mt["w"])[:, None]).T @ Yt)
        put(sl_bt, sl_bt, (Z * (c_t * mt["lam"] ** 2 + s_t * mt["lam"])[:, None]).T @ Z)
        put(sl_bt, sl_jt, (Z * ((c_t * mt["lam"] + s_t) * mt["w"])[:, None]).T @ Yt)
        block = (Yt * (c_t * mt["w"] ** 2)[:, None]).T @ Yt
        block -= np.diag((self.It * dt[:, None]).sum(axis=0) / theta.theta1.jumps ** 2)
        put(sl_jt, sl_jt, block)
        if scope == "full":
            sl_bd = slice(self.dim1, self.dim1 + p)
            sl_jd = slice(self.dim1 + p, dim)
            put(sl_a, sl_bd, (W * (h_da * dphi * md["q"] * md["lam"])[:, None]).T @ Z)
            put(sl_a, sl_jd, (W * (h_da * dphi * md["q"] * md["w"])[:, None]).T @ Yd)
            put(sl_bt, sl_bd, (Z * (e_td * mt["lam"] * md["lam"])[:, None]).T @ Z)
            put(sl_bt, sl_jd, (Z * (e_td * mt["lam"] * md["w"])[:, None]).T @ Yd)
            put(sl_jt, sl_bd, (Yt * (e_td * mt["w"] * md["lam"])[:, None]).T @ Z)
            put(sl_jt, sl_jd, (Yt * (e_td * mt["w"] * md["w"])[:, None]).T @ Yd)
            put(sl_bd, sl_bd, (Z * (c_d * md["lam"] ** 2 + s_d * md["lam"])[:, None]).T @ Z)
            put(sl_bd, sl_jd, (Z * ((c_d * md["lam"] + s_d) * md["w"])[:, None]).T @ Yd)
            block = (Yd * (c_d * md["w"] ** 2)[:, None]).T @ Yd
            block -= np.diag((self.Id * dd[:, None]).sum(axis=0) / theta.theta_d.jumps ** 2)
            put(sl_jd, sl_jd, block)
        return H / n

    def info_full(self, theta):
        """Negative average Hessian over the full parameter stack."""
        theta.theta1.validate()
        theta.theta_d.validate()
        return -self._hessian(theta, scope="full")

    def info_theta1(self, theta):
        """Negative average Hessian over theta1 (theta_d held fixed)."""
        theta.theta1.validate()
        theta.theta_d.validate()
        return -self._hessian(theta, scope="theta1")

    def cross_deriv_theta1_uD(self, theta):
        """Per-subject d(theta1-score)/d(u_D): n x dim1 matrix.

        Row i differentiates subject i's theta1 score contribution with
        respect to that subject's terminal-margin survival value.
        """
        theta.theta1.validate()
        theta.theta_d.validate()
        mt = self._margin("t", theta.theta1)
        md = self._margin("d", theta.theta_d)
        alpha, dphi, _ = self._alpha(theta.theta1)
        P = self._pack(mt, md, alpha, "info")
        _, _, _, h_td, _, h_da = self._curv_terms(P)
        out = np.empty((self.data.n, self.dim1))
        out[:, :self.q] = (h_da * dphi)[:, None] * self.W
        out[:, self.q:self.q + self.p] = (h_td * mt["q"] * mt["lam"])[:, None] * self.data.z
        out[:, self.q + self.p:] = self.Yt * (h_td * mt["q"] * mt["w"])[:, None]
        return out

    def value_score_info(self, theta, scope="full"):
        """(loglik, score, info) in one pass, sharing the partials dict."""
        theta.theta1.validate()
        theta.theta_d.validate()
        mt = self._margin("t", theta.theta1)
        md = self._margin("d", theta.theta_d)
        alpha, dphi, d2phi = self._alpha(theta.theta1)
        P = self._pack(mt, md, alpha, "info")
        val = self._value(theta, mt, md, P)
        rows = self._score_blocks(theta, mt, md, P, dphi)
        if scope == "theta1":
            rows = rows[:, :self.dim1]
        score = rows.mean(axis=0)
        info = -self._hessian(theta, scope=scope)
        return val, score, info


# -- functional wrappers ---------------------------------------------------

def loglik_stage1(theta_d, data, transform=margins.PH, grid=None, epsilon0=0.0):
    """Average stage-1 log-likelihood of the terminal margin."""
    theta_d.validate()
    ml = MarginLikelihood(data.c, data.delta_d, data.z, transform, grid, epsilon0)
    return ml.loglik(theta_d)


def score_stage1(theta_d, data, transform=margins.PH, grid=None, epsilon0=0.0):
    """Average stage-1 score (beta block then jump block)."""
    theta_d.validate()
    ml = MarginLikelihood(data.c, data.delta_d, data.z, transform, grid, epsilon0)
    return ml.score(theta_d)


def _ctx(data, family, **kw):
    return FullLikelihood(data, family, **kw)


def loglik_full(theta, data, family, **kw):
    return _ctx(data, family, **kw).loglik(theta)


def score_full(theta, data, family, **kw):
    return _ctx(data, family, **kw).score_full(theta)


def score_theta1(theta, data, family, **kw):
    return _ctx(data, family, **kw).score_theta1(theta)


def info_full(theta, data, family, **kw):
    return _ctx(data, family, **kw).info_full(theta)


def info_theta1(theta, data, family, **kw):
    return _ctx(data, family, **kw).info_theta1(theta)


def cross_deriv_theta1_uD(theta, data, family, **kw):
    return _ctx(data, family, **kw).cross_deriv_theta1_uD(theta)
