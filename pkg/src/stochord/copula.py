"""Archimedean generators and grid checks of generator shape conditions.

A generator ``psi`` maps [0, inf) onto (0, 1] with ``psi(0) = 1``; its
inverse is ``phi``. The n-dimensional copula is ``psi(sum(phi(v_i)))``.

Internally every family works with ``log psi`` and with ``phi`` as a
function of ``log v``, which keeps compositions exact at the ends of
the unit interval (``v`` within 1e-16 of 1, or below 1e-300).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._numerics import DomainError, as_array, unwrap

__all__ = [
    "Generator",
    "GENERATOR_FAMILIES",
    "LogShapeReport",
    "SuperadditivityReport",
    "LRGeneratorReport",
    "default_t_grid",
    "default_pairs",
    "check_log_shape",
    "check_superadditive_composition",
    "lr_generator_conditions",
    "check_one_minus_psi_ratio_log_convex",
]

GENERATOR_FAMILIES = ("independence", "gumbel", "gumbel_hougaard", "clayton", "amh", "frank")

FD_SLACK = 1e-6
SLACK = 1e-9


def _xlogy(c, y):
    """``c * log(y)`` with the convention ``0 * log(0) = 0``."""
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(c == 0.0, 0.0, c * np.log(y))


# Each family: log_psi(t), phi_log(lv), log_neg_d1(t), d2(t). ----------------

def _indep(theta):
    return (
        lambda t: -t,
        lambda lv: -lv,
        lambda t: -t,
        lambda t: np.exp(-t),
    )


def _gumbel(a):
    inv = 1.0 / a

    def log_psi(t):
        return -(t ** inv)

    def phi_log(lv):
        return (-lv) ** a

    def log_neg_d1(t):
        return -(t ** inv) - math.log(a) + _xlogy(inv - 1.0, t)

    def d2(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            u1 = inv * t ** (inv - 1.0)
            u2 = inv * (inv - 1.0) * t ** (inv - 2.0) if a != 1.0 else 0.0 * t
            return np.exp(-(t ** inv)) * (u1 * u1 - u2)

    return log_psi, phi_log, log_neg_d1, d2


def _gumbel_hougaard(a):
    inv = 1.0 / a

    def log_psi(t):
        return -np.expm1(np.log1p(t) * inv)

    def phi_log(lv):
        return np.expm1(a * np.log1p(-lv))

    def log_neg_d1(t):
        return log_psi(t) - math.log(a) + (inv - 1.0) * np.log1p(t)

    def d2(t):
        u1 = inv * (1.0 + t) ** (inv - 1.0)
        u2 = inv * (inv - 1.0) * (1.0 + t) ** (inv - 2.0)
        return np.exp(log_psi(t)) * (u1 * u1 - u2)

    return log_psi, phi_log, log_neg_d1, d2


def _clayton(theta):
    def log_psi(t):
        return -np.log1p(theta * t) / theta

    def phi_log(lv):
        return np.expm1(-theta * lv) / theta

    def log_neg_d1(t):
        return -(1.0 / theta + 1.0) * np.log1p(theta * t)

    def d2(t):
        return (1.0 + theta) * np.exp(-(1.0 / theta + 2.0) * np.log1p(theta * t))

    return log_psi, phi_log, log_neg_d1, d2


def _amh(theta):
    l1m = math.log1p(-theta)

    def log_psi(t):
        return l1m - t - np.log1p(-theta * np.exp(-t))

    def phi_log(lv):
        with np.errstate(invalid="ignore"):
            return np.log1p(theta * np.expm1(lv)) - lv

    def log_neg_d1(t):
        return l1m - t - 2.0 * np.log1p(-theta * np.exp(-t))

    def d2(t):
        e = np.exp(-t)
        return (1.0 - theta) * e * (1.0 + theta * e) / (1.0 - theta * e) ** 3

    return log_psi, phi_log, log_neg_d1, d2


def _frank(theta):
    c = -math.expm1(-theta)  # 1 - exp(-theta)
    em = math.expm1(-theta)

    ep = math.expm1(theta)

    def log_psi(t):
        w = c * np.exp(-t)
        with np.errstate(divide="ignore", invalid="ignore"):
            far = np.log(-np.log1p(-w) / theta)
            # near psi = 1: theta*(psi - 1) = -log1p(expm1(theta)*(1 - e^-t))
            near = np.log1p(-np.log1p(ep * -np.expm1(-t)) / theta)
        return np.where(t < 0.5, near, far)

    def phi_log(lv):
        v = np.exp(lv)
        with np.errstate(divide="ignore", invalid="ignore"):
            far = -np.log(np.expm1(-theta * v) / em)
            # near v = 1: e^(-theta v) - e^(-theta) = e^(-theta) expm1(theta (1 - v))
            near = -np.log1p(math.exp(-theta) * np.expm1(theta * -np.expm1(lv)) / em)
        return np.where(v > 0.5, near, far)

    def log_neg_d1(t):
        w = c * np.exp(-t)
        with np.errstate(divide="ignore"):
            return np.log(w / theta) - np.log1p(-w)

    def d2(t):
        w = c * np.exp(-t)
        return w / (theta * (1.0 - w) ** 2)

    return log_psi, phi_log, log_neg_d1, d2


_BUILDERS = {
    "independence": _indep,
    "gumbel": _gumbel,
    "gumbel_hougaard": _gumbel_hougaard,
    "clayton": _clayton,
    "amh": _amh,
    "frank": _frank,
}


def _validate(family, theta):
    if family == "independence":
        if theta is not None:
            raise ValueError("the independence generator takes no parameter")
        return None
    if theta is None:
        raise ValueError(f"generator {family!r} requires a parameter")
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError("generator parameter must be finite")
    ok = {
        "gumbel": theta >= 1.0,
        "gumbel_hougaard": theta >= 1.0,
        "clayton": theta > 0.0,
        "amh": -1.0 <= theta < 1.0,
        "frank": theta != 0.0,
    }[family]
    if not ok:
        raise ValueError(f"parameter {theta} outside the domain of the {family} generator")
    return theta


@dataclass(frozen=True)
class Generator:
    """Archimedean generator ``psi`` with inverse ``phi``.

    ``gumbel``: ``exp(-t**(1/a))``; ``gumbel_hougaard``: ``exp(1-(1+t)**(1/a))``;
    ``clayton``: ``(1+theta*t)**(-1/theta)``; ``amh``: ``(1-theta)/(exp(t)-theta)``;
    ``frank``: ``-log(1-(1-exp(-theta))*exp(-t))/theta``; ``independence``: ``exp(-t)``.

    Set ``fd_derivatives=True`` to route ``psi_d1``/``psi_d2`` through
    central differences instead of the closed forms.
    """

    family: str
    theta: float | None = None
    fd_derivatives: bool = False
    _fns: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.family not in _BUILDERS:
            raise ValueError(f"unknown generator family {self.family!r}; expected one of {GENERATOR_FAMILIES}")
        theta = _validate(self.family, self.theta)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "_fns", _BUILDERS[self.family](theta))

    def to_config(self) -> dict:
        cfg = {"family": self.family}
        if self.theta is not None:
            cfg["theta"] = self.theta
        return cfg

    # log-space primitives --------------------------------------------------

    def log_psi(self, t):
        ts, scalar = as_array(t)
        with np.errstate(over="ignore", invalid="ignore"):
            out = np.where(ts == 0.0, 0.0, self._fns[0](np.where(ts == 0.0, 1.0, ts)))
        return unwrap(out, scalar)

    def phi_log(self, log_v):
        """``phi(exp(log_v))``; ``log_v = -inf`` maps to ``+inf``."""
        lv, scalar = as_array(log_v)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = np.where(lv == 0.0, 0.0, self._fns[1](np.where(lv == 0.0, -1.0, lv)))
            out = np.where(np.isneginf(lv), np.inf, out)
        return unwrap(np.maximum(out, 0.0), scalar)

    def log_neg_psi_d1(self, t):
        """``log(-psi'(t))``."""
        ts, scalar = as_array(t)
        if self.fd_derivatives:
            with np.errstate(divide="ignore"):
                return unwrap(np.log(-self._fd_d1(ts)), scalar)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return unwrap(self._fns[2](ts), scalar)

    # plain values ------------------------------------------------------------

    def psi(self, t):
        ts, scalar = as_array(t)
        if np.any(ts < 0.0):
            raise DomainError("generator argument must be nonnegative")
        return unwrap(np.exp(self.log_psi(ts)), scalar)

    def phi(self, v, allow_inf: bool = False):
        vs, scalar = as_array(v)
        if np.any((vs < 0.0) | (vs > 1.0)):
            raise DomainError("generator inverse is defined on [0, 1]")
        if not allow_inf and np.any(vs == 0.0):
            raise DomainError("phi(0) is infinite")
        with np.errstate(divide="ignore"):
            return unwrap(self.phi_log(np.log(vs)), scalar)

    def psi_d1(self, t):
        ts, scalar = as_array(t)
        if self.fd_derivatives:
            return unwrap(self._fd_d1(ts), scalar)
        return unwrap(-np.exp(self.log_neg_psi_d1(ts)), scalar)

    def psi_d2(self, t):
        ts, scalar = as_array(t)
        if self.fd_derivatives:
            return unwrap(self._fd_d2(ts), scalar)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return unwrap(np.asarray(self._fns[3](ts), dtype=float), scalar)

    def phi_d1(self, v):
        """``phi'(v) = 1 / psi'(phi(v))``."""
        return 1.0 / self.psi_d1(self.phi(v))

    # central differences, one-sided near 0 -------------------------------------

    def _fd_d1(self, t):
        h = 1e-6 * np.maximum(1.0, t)
        lo = np.maximum(t - h, 0.0)
        hi = t + h
        return (np.exp(self.log_psi(hi)) - np.exp(self.log_psi(lo))) / (hi - lo)

    def _fd_d2(self, t):
        h = 1e-4 * np.maximum(1.0, t)
        mid = np.maximum(t, h)
        f = lambda s: np.exp(self.log_psi(s))
        return (f(mid + h) - 2.0 * f(mid) + f(mid - h)) / (h * h)


# Grid checks ------------------------------------------------------------------

def default_t_grid(points: int = 400, lo: float = 1e-4, hi: float = 50.0) -> np.ndarray:
    return np.geomspace(lo, hi, points)


def default_pairs(count: int = 2000, seed: int = 20240611, hi: float = 50.0) -> np.ndarray:
    """Seeded (u, v) pairs in (0, hi]: half uniform, half log-uniform."""
    rng = np.random.default_rng(seed)
    half = count // 2
    uni = rng.uniform(0.0, hi, size=(half, 2))
    uni = np.where(uni == 0.0, hi, uni)
    logu = np.exp(rng.uniform(math.log(1e-4), math.log(hi), size=(count - half, 2)))
    return np.vstack([uni, logu])


@dataclass(frozen=True)
class LogShapeReport:
    holds: bool
    shape: str
    worst_triple: tuple[float, float, float] | None
    worst_value: float
    slack: float

    def __bool__(self):
        return self.holds


def _check_grid(t_grid):
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 3:
        raise ValueError("grid must contain at least 3 points")
    if np.any(np.diff(t) <= 0.0):
        raise ValueError("grid must be strictly increasing")
    return t


def _slope_changes(t, f):
    slopes = np.diff(f) / np.diff(t)
    return np.diff(slopes)


def _shape_report(t, values, shape, slack):
    """Concave/convex verdict for sampled ``values`` on grid ``t``."""
    d = _slope_changes(t, values)
    signed = d if shape == "CONCAVE" else -d  # positive entries are violations
    signed = np.where(np.isfinite(signed), signed, np.inf)
    k = int(np.argmax(signed))
    worst = float(signed[k])
    triple = (float(t[k]), float(t[k + 1]), float(t[k + 2]))
    return LogShapeReport(worst <= slack, shape, triple, worst, slack)


def check_log_shape(g: Generator, shape: str, t_grid=None, slack: float = SLACK) -> LogShapeReport:
    """Grid test of log-concavity (``shape='CONCAVE'``) or log-convexity of ``psi``.

    Uses changes of consecutive slopes of ``log psi``; the report carries
    the most violating grid triple.
    """
    shape = shape.upper()
    if shape not in ("CONCAVE", "CONVEX"):
        raise ValueError("shape must be CONCAVE or CONVEX")
    t = _check_grid(default_t_grid() if t_grid is None else t_grid)
    return _shape_report(t, np.asarray(g.log_psi(t)), shape, slack)


@dataclass(frozen=True)
class SuperadditivityReport:
    holds: bool
    worst_pair: tuple[float, float] | None
    worst_gap: float  # min of f(u+v) - f(u) - f(v)
    slack: float

    def __bool__(self):
        return self.holds


def composition(g1: Generator, g2: Generator, t):
    """``phi_2(psi_1(t))``."""
    return g2.phi_log(g1.log_psi(t))


def check_superadditive_composition(
    g1: Generator, g2: Generator, pair_samples=None, slack: float = SLACK
) -> SuperadditivityReport:
    """True iff ``phi_2(psi_1(u+v)) >= phi_2(psi_1(u)) + phi_2(psi_1(v)) - slack`` on every pair."""
    pairs = default_pairs() if pair_samples is None else np.asarray(pair_samples, dtype=float)
    pairs = np.atleast_2d(pairs)
    u, v = pairs[:, 0], pairs[:, 1]
    gap = composition(g1, g2, u + v) - composition(g1, g2, u) - composition(g1, g2, v)
    k = int(np.argmin(gap))
    worst = float(gap[k])
    return SuperadditivityReport(worst >= -slack, (float(u[k]), float(v[k])), worst, slack)


@dataclass(frozen=True)
class LRGeneratorReport:
    ratio_decreasing: bool
    psi_lnpsi_incr_concave: bool
    used_finite_differences: bool
    slack: float
    worst_ratio_increase: float
    worst_psi_lnpsi_decrease: float
    worst_psi_lnpsi_convexity: float

    def __iter__(self):
        yield self.ratio_decreasing
        yield self.psi_lnpsi_incr_concave


def psi_lnpsi_over_d1(g: Generator, t):
    """``psi*log(psi)/psi'`` evaluated stably in log space."""
    lp = np.asarray(g.log_psi(t))
    return -np.exp(lp - np.asarray(g.log_neg_psi_d1(t))) * lp


def lr_generator_conditions(g: Generator, t_grid=None) -> LRGeneratorReport:
    """Grid checks: ``psi''/psi'`` decreasing, ``psi*ln(psi)/psi'`` increasing and concave."""
    t = _check_grid(default_t_grid() if t_grid is None else t_grid)
    slack = FD_SLACK if g.fd_derivatives else SLACK
    ratio = np.asarray(g.psi_d2(t)) / np.asarray(g.psi_d1(t))
    h = psi_lnpsi_over_d1(g, t)
    with np.errstate(invalid="ignore"):
        dr = np.diff(ratio)
        dh = np.diff(h)
        curv = _slope_changes(t, h)
    # relative slack: ratios of order one dominate the shipped families
    scale_r = np.maximum(1.0, np.abs(ratio[1:]))
    scale_h = np.maximum(1.0, np.abs(h[1:]))
    inc = np.nanmax(np.where(np.isfinite(dr), dr / scale_r, np.inf))
    dec = np.nanmax(np.where(np.isfinite(dh), -dh / scale_h, np.inf))
    cvx = np.nanmax(np.where(np.isfinite(curv), curv, np.inf))
    return LRGeneratorReport(
        ratio_decreasing=bool(inc <= slack),
        psi_lnpsi_incr_concave=bool(dec <= slack and cvx <= slack),
        used_finite_differences=g.fd_derivatives,
        slack=slack,
        worst_ratio_increase=float(inc),
        worst_psi_lnpsi_decrease=float(dec),
        worst_psi_lnpsi_convexity=float(cvx),
    )


def check_one_minus_psi_ratio_log_convex(g: Generator, t_grid=None, slack: float = SLACK) -> LogShapeReport:
    """Log-convexity of ``(1 - psi)/psi'`` on a grid (taken in absolute value).

    ``psi' < 0`` so the ratio is negative; its logarithm is taken of the
    magnitude ``(1 - psi)/(-psi')``.
    """
    t = _check_grid(default_t_grid() if t_grid is None else t_grid)
    lp = np.asarray(g.log_psi(t))
    with np.errstate(divide="ignore"):
        values = np.log(-np.expm1(lp)) - np.asarray(g.log_neg_psi_d1(t))
    return _shape_report(t, values, "CONVEX", slack)
