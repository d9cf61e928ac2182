"""Small numerical helpers shared by the distribution modules."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy.optimize import brentq


class DomainError(ValueError):
    """Evaluation requested at a point where the quantity is undefined."""


TINY = 1e-300
LOG_TINY = math.log(TINY)


def log1mexp(lx):
    """Accurate ``log(1 - exp(lx))`` for ``lx <= 0``."""
    lx = np.asarray(lx, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(
            lx > -math.log(2.0),
            np.log(-np.expm1(lx)),
            np.log1p(-np.exp(lx)),
        )
    return out


def logcumsumexp(a, axis=0):
    """Cumulative ``log(sum(exp(a)))`` along ``axis``."""
    return np.logaddexp.accumulate(np.asarray(a, dtype=float), axis=axis)


def as_array(x):
    """Return ``(array, was_scalar)`` for vectorised evaluation."""
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr), arr.ndim == 0


def unwrap(values, scalar):
    return float(values[0]) if scalar else values


def invert_increasing(
    cdf: Callable[[float], float],
    p: float,
    *,
    lower: float = 1e-12,
    upper: float = 1.0,
    upper_bound: float | None = None,
    max_doublings: int = 200,
) -> float:
    """Solve ``cdf(x) = p`` for a continuous nondecreasing ``cdf`` on (0, inf).

    The bracket starts at ``[lower, upper]``; the upper end doubles until
    ``cdf(upper) >= p`` and the lower end shrinks by 2**-10 until
    ``cdf(lower) <= p`` (heavy left tails from tiny Kw-G shapes).
    The root is then polished with Brent's method in log-x coordinates.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"probability must lie in (0, 1), got {p!r}")
    if upper_bound is not None:
        upper = min(upper, upper_bound)
    doublings = 0
    while cdf(upper) < p:
        if upper_bound is not None and upper >= upper_bound:
            raise DomainError(f"cdf never reaches {p} below the support bound")
        doublings += 1
        if doublings > max_doublings:
            raise DomainError(f"failed to bracket quantile p={p} after {max_doublings} doublings")
        upper = upper * 2.0 if upper_bound is None else min(upper * 2.0, upper_bound)
    while cdf(lower) > p:
        if lower < 1e-290:
            raise DomainError(f"failed to bracket quantile p={p} from below")
        lower *= 2.0 ** -10
    lo, hi = math.log(lower), math.log(upper)
    flo = cdf(lower) - p
    if flo == 0.0:
        return lower
    fhi = cdf(upper) - p
    if fhi == 0.0:
        return upper
    root = brentq(lambda u: cdf(math.exp(u)) - p, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=500)
    return math.exp(root)
