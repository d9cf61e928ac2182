"""Majorization preorders and grid checks of stochastic orders.

Every order check compares two models ``A`` and ``B`` and answers
"is A smaller than B in this order?" on a finite grid. Verdicts are
grid-level evidence, not proofs:

* ``HOLDS``: no violation above the floating-point noise floor;
* ``INCONCLUSIVE``: violations exist but none exceeds the slack;
* ``FAILS``: some violation exceeds the slack (witnesses attached).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from ._numerics import DomainError
from .extremes import ExtremeModel, Side

__all__ = [
    "OrderKind",
    "Verdict",
    "OrderReport",
    "majorize_check",
    "default_x_grid",
    "default_p_grid",
    "st_check",
    "hr_check",
    "rh_check",
    "lr_check",
    "disp_check",
    "check_order",
    "n_ratio_monotone",
    "NRatioReport",
]

SLACK = 1e-9
DISP_SLACK = 1e-8
NOISE = 1e-13
MAX_WITNESSES = 10


class OrderKind(str, Enum):
    ST = "ST"
    HR = "HR"
    RH = "RH"
    LR = "LR"
    DISP = "DISP"
    MAJ_M = "MAJ_M"
    MAJ_WEAK_SUB = "MAJ_WEAK_SUB"
    MAJ_WEAK_SUPER = "MAJ_WEAK_SUPER"


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class OrderReport:
    order_kind: OrderKind
    verdict: Verdict
    witnesses: list = field(default_factory=list)  # (abscissa, lhs, rhs)
    max_violation: float = 0.0
    margin: float = 0.0  # smallest strict improvement seen (ratio checks)
    grid_spec: dict = field(default_factory=dict)
    skipped: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict is Verdict.FAILS

    def to_dict(self) -> dict:
        return {
            "order_kind": self.order_kind.value,
            "verdict": self.verdict.value,
            "witnesses": [[float(v) for v in w] for w in self.witnesses],
            "max_violation": float(self.max_violation),
            "margin": float(self.margin),
            "grid_spec": self.grid_spec,
            "skipped": [float(s) for s in self.skipped],
            "extra": {k: (v.value if isinstance(v, Enum) else v) for k, v in self.extra.items()},
            "evidence": "grid",
        }


def _verdict(violation: float, slack: float, noise: float = NOISE) -> Verdict:
    if not np.isfinite(violation) or violation > slack:
        return Verdict.FAILS
    if violation > noise:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS


# Majorization ---------------------------------------------------------------------

def majorize_check(x, y, kind: str = "M", tol: float = 1e-12) -> bool:
    """Is ``x`` below ``y`` in the majorization preorder ``kind``?

    ``M``: x is majorized by y (bottom partial sums of x dominate, equal totals).
    ``WEAK_SUB``: top partial sums of x are at most those of y.
    ``WEAK_SUPER``: bottom partial sums of x are at least those of y.

    Partial sums are exact rationals; every comparison carries the same
    absolute tolerance ``tol * max(1, sum|x|, sum|y|)`` so that the
    implications between the three preorders survive rounding.
    """
    xs = sorted(Fraction(float(v)) for v in x)
    ys = sorted(Fraction(float(v)) for v in y)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if not xs:
        raise ValueError("vectors must be nonempty")
    kind = kind.upper()
    scale = max(Fraction(1), sum(abs(v) for v in xs), sum(abs(v) for v in ys))
    eps = Fraction(tol) * scale
    n = len(xs)
    bottom_x = bottom_y = Fraction(0)
    bottoms = []
    for a, b in zip(xs, ys):
        bottom_x += a
        bottom_y += b
        bottoms.append((bottom_x, bottom_y))
    total_x, total_y = bottoms[-1]
    if kind == "M":
        if abs(total_x - total_y) > eps:
            return False
        return all(bx >= by - eps for bx, by in bottoms[: n - 1])
    if kind == "WEAK_SUPER":
        return all(bx >= by - eps for bx, by in bottoms)
    if kind == "WEAK_SUB":
        top_x = top_y = Fraction(0)
        for a, b in zip(reversed(xs), reversed(ys)):
            top_x += a
            top_y += b
            if top_x > top_y + eps:
                return False
        return True
    raise ValueError(f"unknown majorization kind {kind!r}")


# Grids -----------------------------------------------------------------------------

X_FLOOR = 1e-290
LR_TAIL_P = 1e-9   # tail quantile levels of the default lr grid


def default_x_grid(a: ExtremeModel, b: ExtremeModel, points: int = 512, lo_p: float = 1e-3, hi_p: float = 0.999):
    """Log-spaced grid spanning both models' lo_p..hi_p quantiles.

    A lower quantile beneath the double range (heavy mass at 0 from tiny
    shape parameters) is replaced by ``X_FLOOR``.
    """
    def lower(m):
        try:
            return float(m.quantile(lo_p))
        except DomainError:
            return X_FLOOR

    lo = min(lower(a), lower(b))
    hi = max(float(a.quantile(hi_p)), float(b.quantile(hi_p)))
    return np.geomspace(lo, hi, points)


def default_p_grid(points: int = 99):
    return np.linspace(0.01, 0.99, points)


def _grid_spec(x, label="x"):
    x = np.asarray(x, dtype=float)
    return {"axis": label, "points": int(x.size), "min": float(x.min()), "max": float(x.max())}


def _witnesses(mask, xs, lhs, rhs):
    idx = np.flatnonzero(mask)
    if idx.size > MAX_WITNESSES:
        idx = idx[np.linspace(0, idx.size - 1, MAX_WITNESSES).astype(int)]
    return [(float(xs[i]), float(lhs[i]), float(rhs[i])) for i in idx]


# Orders on models ---------------------------------------------------------------------

def st_check(a: ExtremeModel, b: ExtremeModel, x_grid=None, slack: float = SLACK) -> OrderReport:
    """``A <=_st B``: survival of A never exceeds survival of B."""
    x = default_x_grid(a, b) if x_grid is None else np.asarray(x_grid, dtype=float)
    sa = np.asarray(a.sf(x))
    sb = np.asarray(b.sf(x))
    diff = sa - sb
    violation = float(max(diff.max(), 0.0))
    verdict = _verdict(violation, slack)
    report = OrderReport(OrderKind.ST, verdict, max_violation=violation,
                         margin=float(-diff.max()), grid_spec=_grid_spec(x))
    if verdict is Verdict.FAILS:
        report.witnesses = _witnesses(diff > slack, x, sa, sb)
    return report


def _ratio_check(kind, x, log_num, log_den, slack, lhs, rhs):
    """Is ``exp(log_num - log_den)`` nondecreasing across consecutive grid points?"""
    ok = np.isfinite(log_num) & np.isfinite(log_den)
    skipped = [float(v) for v in x[~ok]]
    xs = x[ok]
    if xs.size < 2:
        return OrderReport(kind, Verdict.INCONCLUSIVE, grid_spec=_grid_spec(x), skipped=skipped)
    lr = (log_num - log_den)[ok]
    inc = np.diff(lr)
    violation = float(max((-inc).max(), 0.0))
    verdict = _verdict(violation, slack)
    report = OrderReport(kind, verdict, max_violation=violation, margin=float(inc.min()),
                         grid_spec=_grid_spec(x), skipped=skipped)
    if verdict is Verdict.FAILS:
        mask = np.concatenate([[False], -inc > slack])
        report.witnesses = _witnesses(mask, xs, lhs[ok], rhs[ok])
    return report


def hr_check(a: ExtremeModel, b: ExtremeModel, x_grid=None, slack: float = SLACK) -> OrderReport:
    """``A <=_hr B``: ``sf_B / sf_A`` nondecreasing; cross-checked by ``r_A >= r_B``."""
    x = default_x_grid(a, b) if x_grid is None else np.asarray(x_grid, dtype=float)
    la, lb = np.asarray(a.log_sf(x)), np.asarray(b.log_sf(x))
    report = _ratio_check(OrderKind.HR, x, lb, la, slack, np.exp(la), np.exp(lb))
    with np.errstate(invalid="ignore", over="ignore"):
        ra = np.asarray(a.hazard(x))
        rb = np.asarray(b.hazard(x))
        rel = (rb - ra) / np.maximum(np.maximum(ra, rb), 1e-300)
    rel = rel[np.isfinite(rel)]
    hz_violation = float(max(rel.max(), 0.0)) if rel.size else 0.0
    report.extra["hazard_verdict"] = _verdict(hz_violation, slack).value
    report.extra["hazard_max_violation"] = hz_violation
    return report


def rh_check(a: ExtremeModel, b: ExtremeModel, x_grid=None, slack: float = SLACK) -> OrderReport:
    """``A <=_rh B``: ``cdf_B / cdf_A`` nondecreasing."""
    x = default_x_grid(a, b) if x_grid is None else np.asarray(x_grid, dtype=float)
    la, lb = np.asarray(a.log_cdf(x)), np.asarray(b.log_cdf(x))
    return _ratio_check(OrderKind.RH, x, lb, la, slack, np.exp(la), np.exp(lb))


def lr_check(a: ExtremeModel, b: ExtremeModel, x_grid=None, slack: float = SLACK) -> OrderReport:
    """``A <=_lr B``: ``f_B / f_A`` nondecreasing.

    The default grid reaches further into both tails than for the other
    orders: a density ratio that turns in the far lower tail still shows up
    in the cdf ratio near the body, so a body-only grid can pass lr while
    rh fails.
    """
    if x_grid is None:
        x = default_x_grid(a, b, points=1024, lo_p=LR_TAIL_P, hi_p=1.0 - LR_TAIL_P)
    else:
        x = np.asarray(x_grid, dtype=float)
    la, lb = np.asarray(a.log_pdf(x)), np.asarray(b.log_pdf(x))
    return _ratio_check(OrderKind.LR, x, lb, la, slack, np.exp(la), np.exp(lb))


def disp_check(a: ExtremeModel, b: ExtremeModel, p_grid=None, slack: float = DISP_SLACK) -> OrderReport:
    """``A <=_disp B``: ``Q_B(p) - Q_A(p)`` nondecreasing in p."""
    p = default_p_grid() if p_grid is None else np.asarray(p_grid, dtype=float)
    if np.any(np.diff(p) <= 0.0) or p.min() <= 0.0 or p.max() >= 1.0:
        raise ValueError("p grid must be strictly increasing inside (0, 1)")
    qa = np.asarray(a.quantile(p))
    qb = np.asarray(b.quantile(p))
    gap = qb - qa
    inc = np.diff(gap)
    violation = float(max((-inc).max(), 0.0)) if inc.size else 0.0
    verdict = _verdict(violation, slack, noise=NOISE * max(1.0, float(np.abs(gap).max())))
    report = OrderReport(OrderKind.DISP, verdict, max_violation=violation,
                         margin=float(inc.min()) if inc.size else 0.0, grid_spec=_grid_spec(p, "p"))
    if verdict is Verdict.FAILS:
        mask = np.concatenate([[False], -inc > slack])
        report.witnesses = _witnesses(mask, p, qa, qb)
    return report


_CHECKS = {"st": st_check, "hr": hr_check, "rh": rh_check, "lr": lr_check, "disp": disp_check}


def check_order(order: str, a: ExtremeModel, b: ExtremeModel, grid=None) -> OrderReport:
    try:
        fn = _CHECKS[order.lower()]
    except KeyError:
        raise ValueError(f"unknown order {order!r}; expected one of {sorted(_CHECKS)}") from None
    return fn(a, b, grid)


# Sample-size preservation conditions ---------------------------------------------------

@dataclass
class NRatioReport:
    holds: bool
    direction: str
    sizes: tuple
    max_violation: float
    witness: tuple | None  # (x, n, n+1, log ratio at n, log ratio at n+1)

    def __bool__(self):
        return self.holds


def n_ratio_monotone(a: ExtremeModel, b: ExtremeModel, direction: str, x_grid=None,
                     sizes=None, slack: float = SLACK) -> NRatioReport:
    """Monotonicity in n of the fixed-size ratio ``sf_A,n / sf_B,n`` (minima)
    or ``cdf_A,n / cdf_B,n`` (maxima), at every grid point."""
    direction = direction.upper()
    if direction not in ("INC", "DEC"):
        raise ValueError("direction must be INC or DEC")
    if a.side is not b.side:
        raise ValueError("both models must describe the same extreme")
    if sizes is None:
        if a.ndist.support != b.ndist.support:
            raise ValueError("models must share the sample-size support")
        sizes = a.ndist.support
    sizes = tuple(int(s) for s in sizes)
    x = default_x_grid(a, b) if x_grid is None else np.asarray(x_grid, dtype=float)
    la = a.fixed_log_value(sizes, x)
    lb = b.fixed_log_value(sizes, x)
    ratio = la - lb
    step = np.diff(ratio, axis=0)
    if direction == "DEC":
        step = -step
    finite = np.isfinite(step)
    viol = np.where(finite, -step, 0.0)
    if viol.size == 0:
        return NRatioReport(True, direction, sizes, 0.0, None)
    k = np.unravel_index(int(np.argmax(viol)), viol.shape)
    worst = float(max(viol[k], 0.0))
    witness = None
    if worst > slack:
        i, j = k
        witness = (float(x[j]), sizes[i], sizes[i + 1], float(ratio[i, j]), float(ratio[i + 1, j]))
    return NRatioReport(worst <= slack, direction, sizes, worst, witness)
