"""Registry of ordering theorems for extremes of Kw-G samples, with
grid-level validation harness and the three counterexample fixtures.

Each theorem id (T1..T15, plus the variant T4b) compiles into a list of
named hypothesis checks and one conclusion order check. A case is

* ``VALIDATED`` when every hypothesis holds and the conclusion does not
  fail by more than ``CONTRADICTION_MARGIN``;
* ``HYPOTHESES_UNMET`` when some hypothesis is false;
* ``CONTRADICTION`` when every hypothesis holds yet the conclusion fails
  by more than the margin.

Two variants are supported.

``literal``
    Hypotheses exactly as stated: majorization relations in the
    orientation of the preorder definitions, sample-size orderings as
    written, no extra conditions.
``corrected`` (default)
    Hypotheses in the orientation the monotonicity argument needs, plus
    auxiliary conditions (flagged ``auxiliary=True``) for proof steps
    that the stated hypotheses do not deliver. The per-theorem notes in
    ``THEOREMS`` list every change. ``scan`` uses ``literal`` to hunt for
    violations of the statements as written.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .baseline import Baseline
from .copula import (
    Generator,
    check_log_shape,
    check_one_minus_psi_ratio_log_convex,
    check_superadditive_composition,
    lr_generator_conditions,
)
from .extremes import ExtremeModel, NDist, Side
from .kwg import ParamVector
from .orders import (
    OrderKind,
    OrderReport,
    Verdict,
    default_x_grid,
    disp_check,
    hr_check,
    lr_check,
    majorize_check,
    n_ratio_monotone,
    rh_check,
    st_check,
)

__all__ = [
    "ConfigurationError",
    "Outcome",
    "Hypothesis",
    "TheoremCase",
    "TheoremSpec",
    "THEOREMS",
    "THEOREM_IDS",
    "check_theorem",
    "sample_pair",
    "random_validation_suite",
    "SuiteSummary",
    "scan",
    "hr_sum_biconditional_suite",
    "counterexample_models",
    "run_counterexample",
    "CounterexampleResult",
    "lemma2_property_check",
]

CONTRADICTION_MARGIN = 1e-6
BASE_TOL = 1e-12     # absolute, on baseline cdf/density comparisons
REL_TOL = 1e-9       # relative, on hazard comparisons and monotonicity
VARIANTS = ("corrected", "literal")


class ConfigurationError(ValueError):
    """Models do not fit the structural setting of the requested theorem."""


class Outcome(str, Enum):
    VALIDATED = "VALIDATED"
    HYPOTHESES_UNMET = "HYPOTHESES_UNMET"
    CONTRADICTION = "CONTRADICTION"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    auxiliary: bool = False
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "holds": bool(self.holds), "auxiliary": self.auxiliary, "detail": self.detail}


@dataclass
class TheoremCase:
    id: str
    variant: str
    model_A: ExtremeModel
    model_B: ExtremeModel
    hypothesis_results: list[Hypothesis]
    conclusion: OrderReport
    conclusion_label: str
    overall: Outcome

    @property
    def hypotheses_hold(self) -> bool:
        return all(h.holds for h in self.hypothesis_results)

    @property
    def failed_hypotheses(self) -> list[str]:
        return [h.name for h in self.hypothesis_results if not h.holds]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "variant": self.variant,
            "overall": self.overall.value,
            "conclusion_label": self.conclusion_label,
            "conclusion": self.conclusion.to_dict(),
            "hypotheses": [h.to_dict() for h in self.hypothesis_results],
            "model_A": self.model_A.digest(),
            "model_B": self.model_B.digest(),
        }


# Small predicates --------------------------------------------------------------------

def _monotone_same_direction(*vectors) -> bool:
    """All vectors in E+ (nondecreasing) or all in D+ (nonincreasing)."""
    arrs = [np.asarray(v, dtype=float) for v in vectors]
    inc = all(np.all(np.diff(a) >= 0.0) for a in arrs)
    dec = all(np.all(np.diff(a) <= 0.0) for a in arrs)
    return bool(inc or dec)


def _vec_equal(x, y) -> bool:
    return len(x) == len(y) and all(a == b for a, b in zip(x, y))


def _all_ge(x, c) -> bool:
    return all(v >= c for v in x)


def _all_le(x, c) -> bool:
    return all(v <= c for v in x)


def _ndist_le_st(n1: NDist, n2: NDist) -> bool:
    """N1 <=_st N2: P(N1 >= k) <= P(N2 >= k) for every k."""
    ks = sorted(set(n1.support) | set(n2.support))
    return all(n1.sf(k) <= n2.sf(k) + 1e-12 for k in ks)


def _cdf_le(g: Baseline, h: Baseline, x) -> tuple[bool, float]:
    diff = np.asarray(g.cdf(x)) - np.asarray(h.cdf(x))
    worst = float(diff.max())
    return worst <= BASE_TOL, worst


def _pdf_le(g: Baseline, h: Baseline, x) -> tuple[bool, float]:
    diff = np.asarray(g.pdf(x)) - np.asarray(h.pdf(x))
    worst = float(diff.max())
    return worst <= BASE_TOL, worst


def _log_hazard(b: Baseline, x):
    return np.asarray(b.log_pdf(x)) - np.asarray(b.log_sf(x))


def _hazard_le(g: Baseline, h: Baseline, x) -> tuple[bool, float]:
    """r_g <= r_h, compared in log space with relative tolerance."""
    d = _log_hazard(g, x) - _log_hazard(h, x)
    d = d[np.isfinite(d)]
    worst = float(d.max()) if d.size else 0.0
    return worst <= REL_TOL, worst


def _hazard_decreasing(b: Baseline, x) -> tuple[bool, float]:
    lh = _log_hazard(b, x)
    step = np.diff(lh[np.isfinite(lh)])
    worst = float(step.max()) if step.size else 0.0
    return worst <= REL_TOL, worst


def _same_baseline(g: Baseline, h: Baseline, x) -> tuple[bool, float]:
    if g == h:
        return True, 0.0
    diff = float(np.abs(np.asarray(g.cdf(x)) - np.asarray(h.cdf(x))).max())
    return diff <= BASE_TOL, diff


def _theorem_grid(a: ExtremeModel, b: ExtremeModel, points: int = 256):
    return default_x_grid(a, b, points=points)


def _two_block(x, y, shared_tail: bool):
    """Find p with x = (x1 1_p, x2 1_q), y = (y1 1_p, y2 1_q); returns p or None.

    With ``shared_tail`` the tails must coincide (x2 = y2).
    """
    n = len(x)
    for p in range(1, n + 1):
        hx, hy, tx, ty = x[:p], y[:p], x[p:], y[p:]
        if len(set(hx)) != 1 or len(set(hy)) != 1:
            break
        if len(set(tx)) > 1 or len(set(ty)) > 1:
            continue
        if shared_tail and tx != ty:
            continue
        return p
    return None


def _gen_hyps(g1: Generator, g2: Generator, shape: str, superadd_order: str):
    """Super-additivity of the named composition and log-shape of psi_1 or psi_2."""
    if superadd_order == "21":
        sa = check_superadditive_composition(g1, g2)
        sa_name = "phi2∘psi1 super-additive"
    else:
        sa = check_superadditive_composition(g2, g1)
        sa_name = "phi1∘psi2 super-additive"
    s1 = check_log_shape(g1, shape)
    s2 = check_log_shape(g2, shape)
    return [
        Hypothesis(sa_name, sa.holds, detail=f"worst gap {sa.worst_gap:.3g}"),
        Hypothesis(f"psi1 or psi2 log-{shape.lower()}", bool(s1.holds or s2.holds),
                   detail=f"worst {min(s1.worst_value, s2.worst_value):.3g}"),
    ]


def _independence(a, b):
    ok = a.generator.family == "independence" and b.generator.family == "independence"
    return Hypothesis("independent components", ok)


def _equal_n(a, b):
    return Hypothesis("N1 =st N2", a.ndist == b.ndist)


def _n_ratio_hyp(a, b, direction, x, quantity="native"):
    """Sample-size preservation condition used by the random-N arguments."""
    if a.ndist != b.ndist:
        return Hypothesis(f"fixed-size ratio {direction.lower()} in n", False, True, "sample sizes differ")
    if quantity == "native":
        rep = n_ratio_monotone(a, b, direction, x_grid=x)
        return Hypothesis(f"fixed-size ratio {direction.lower()} in n", rep.holds, True,
                          f"worst {rep.max_violation:.3g}")
    sizes = a.ndist.support
    ratio = a.fixed_log_density(sizes, x) - b.fixed_log_density(sizes, x)
    step = np.diff(ratio, axis=0)
    if direction == "DEC":
        step = -step
    step = step[np.isfinite(step)]
    worst = float(max((-step).max(), 0.0)) if step.size else 0.0
    return Hypothesis(f"fixed-size density ratio {direction.lower()} in n", worst <= REL_TOL, True,
                      f"worst {worst:.3g}")


def _fixed_lr_chain(m: ExtremeModel, x):
    """X_{1:n1} >=_lr X_{1:n2} for consecutive support sizes n1 < n2."""
    sizes = m.ndist.support
    worst = 0.0
    for n1, n2 in zip(sizes, sizes[1:]):
        rep = lr_check(m.with_ndist(NDist.point(n2)), m.with_ndist(NDist.point(n1)), x_grid=x)
        worst = max(worst, rep.max_violation if rep.verdict is Verdict.FAILS else 0.0)
    return Hypothesis("X_{1:n} lr-decreasing in n", worst <= REL_TOL, True, f"worst {worst:.3g}")


# Theorem registry --------------------------------------------------------------------

@dataclass(frozen=True)
class TheoremSpec:
    id: str
    side: Side
    statement: str
    conclusion_label: str
    notes: tuple[str, ...]
    hypotheses: Callable
    conclusion: Callable
    sampler: Callable


def _require(cond, msg):
    if not cond:
        raise ConfigurationError(msg)


def _structure(spec: TheoremSpec, a: ExtremeModel, b: ExtremeModel):
    _require(a.side is spec.side and b.side is spec.side,
             f"{spec.id} compares {spec.side.value} extremes; got {a.side.value}/{b.side.value}")
    _require(len(a.params) == len(b.params), f"{spec.id} needs equal sample lengths")


# T1 ---------------------------------------------------------------------------------

def _hyp_t1(a, b, x, variant):
    al, be = a.params.alphas, b.params.alphas
    g_le_h, w = _cdf_le(a.baseline, b.baseline, x)
    hyps = [
        Hypothesis("alpha, beta same monotone order", _monotone_same_direction(al, be)),
        Hypothesis("gamma = delta >= 1", _vec_equal(a.params.gammas, b.params.gammas) and _all_ge(a.params.gammas, 1.0)),
        Hypothesis("G <= H", g_le_h, detail=f"worst {w:.3g}"),
        *_gen_hyps(a.generator, b.generator, "CONCAVE", "21"),
    ]
    if variant == "literal":
        hyps.append(Hypothesis("alpha ≽ʷ beta", majorize_check(be, al, "WEAK_SUPER")))
        hyps.append(Hypothesis("N1 <=st N2", _ndist_le_st(a.ndist, b.ndist)))
    else:
        hyps.append(Hypothesis("alpha dominates beta in lower partial sums", majorize_check(al, be, "WEAK_SUPER"),
                               detail="alpha ≼ʷ beta in preorder notation"))
        hyps.append(Hypothesis("N1 >=st N2", _ndist_le_st(b.ndist, a.ndist)))
    return hyps


# T2 ---------------------------------------------------------------------------------

def _hyp_t2(a, b, x, variant):
    al, ga, de = a.params.alphas, a.params.gammas, b.params.gammas
    hyps = [
        Hypothesis("alpha = beta", _vec_equal(al, b.params.alphas)),
        Hypothesis("alpha, gamma, delta same monotone order", _monotone_same_direction(al, ga, de)),
        Hypothesis("delta ≽ʷ gamma", majorize_check(ga, de, "WEAK_SUPER")),
    ]
    if variant == "literal":
        ok, w = _cdf_le(a.baseline, b.baseline, x)
        hyps.append(Hypothesis("G <= H", ok, detail=f"worst {w:.3g}"))
        hyps += _gen_hyps(a.generator, b.generator, "CONCAVE", "21")
        hyps.append(Hypothesis("N1 >=st N2", _ndist_le_st(b.ndist, a.ndist)))
    else:
        ok, w = _cdf_le(b.baseline, a.baseline, x)
        hyps.append(Hypothesis("G >= H", ok, detail=f"worst {w:.3g}"))
        hyps += _gen_hyps(a.generator, b.generator, "CONCAVE", "12")
        hyps.append(Hypothesis("N1 <=st N2", _ndist_le_st(a.ndist, b.ndist)))
    return hyps


# T3 / T4 / T4b ----------------------------------------------------------------------

def _n_min_st(a, b, variant):
    if variant == "literal":
        return Hypothesis("N1 <=st N2", _ndist_le_st(a.ndist, b.ndist))
    return Hypothesis("N1 >=st N2", _ndist_le_st(b.ndist, a.ndist))


def _hyp_t3(a, b, x, variant):
    al, ga, de = a.params.alphas, a.params.gammas, b.params.gammas
    ok, w = _cdf_le(b.baseline, a.baseline, x)
    return [
        Hypothesis("alpha = beta", _vec_equal(al, b.params.alphas)),
        Hypothesis("alpha, gamma, delta same monotone order", _monotone_same_direction(al, ga, de)),
        Hypothesis("G >= H", ok, detail=f"worst {w:.3g}"),
        *_gen_hyps(a.generator, b.generator, "CONVEX", "21"),
        Hypothesis("gamma ≽_w delta", majorize_check(de, ga, "WEAK_SUB")),
        _n_min_st(a, b, variant),
    ]


def _hyp_t4(a, b, x, variant, remark_variant=False):
    al, be, ga = a.params.alphas, b.params.alphas, a.params.gammas
    ok, w = _cdf_le(b.baseline, a.baseline, x)
    hyps = [
        Hypothesis("alpha, beta, delta same monotone order", _monotone_same_direction(al, be, b.params.gammas)),
        Hypothesis("G >= H", ok, detail=f"worst {w:.3g}"),
        Hypothesis("alpha ≽ʷ beta", majorize_check(be, al, "WEAK_SUPER")),
        _n_min_st(a, b, variant),
    ]
    if remark_variant:
        hyps.insert(0, Hypothesis("gamma = delta = 1", _vec_equal(ga, b.params.gammas) and all(g == 1.0 for g in ga)))
        sa = check_superadditive_composition(a.generator, b.generator)
        r1 = check_one_minus_psi_ratio_log_convex(a.generator)
        r2 = check_one_minus_psi_ratio_log_convex(b.generator)
        hyps += [
            Hypothesis("phi2∘psi1 super-additive", sa.holds, detail=f"worst gap {sa.worst_gap:.3g}"),
            Hypothesis("(1-psi)/psi' log-convex for psi1 or psi2", bool(r1.holds or r2.holds)),
        ]
    else:
        hyps.insert(0, Hypothesis("gamma = delta", _vec_equal(ga, b.params.gammas)))
        hyps += _gen_hyps(a.generator, b.generator, "CONVEX", "21")
    return hyps


# T5..T8: hazard rate order of random minima, independent components --------------------

def _partial_sums_le(x, y, sizes):
    cx, cy = np.cumsum(x), np.cumsum(y)
    return all(cx[n - 1] <= cy[n - 1] + 1e-12 * max(1.0, cy[n - 1]) for n in sizes)


def _hyp_t5(a, b, x, variant):
    r_ok, w = _hazard_le(a.baseline, b.baseline, x)
    hyps = [
        _independence(a, b), _equal_n(a, b),
        Hypothesis("alpha = beta = 1", all(v == 1.0 for v in a.params.alphas + b.params.alphas)),
        Hypothesis("r_g <= r_h", r_ok, detail=f"worst {w:.3g}"),
        Hypothesis("sum gamma <= sum delta up to every n in supp N",
                   _partial_sums_le(a.params.gammas, b.params.gammas, a.ndist.support)),
    ]
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "DEC", x))
    return hyps


def _hyp_t6(a, b, x, variant):
    same, w = _same_baseline(a.baseline, b.baseline, x)
    al = a.params.alphas
    hyps = [
        _independence(a, b), _equal_n(a, b),
        Hypothesis("alpha = beta = const", len(set(al)) == 1 and _vec_equal(al, b.params.alphas)),
        Hypothesis("G = H", same, detail=f"worst {w:.3g}"),
        Hypothesis("gamma ≽ᵐ delta", majorize_check(b.params.gammas, a.params.gammas, "M")),
    ]
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "DEC", x))
    return hyps


def _hyp_hr_common(a, b, x):
    return [
        _independence(a, b), _equal_n(a, b),
        Hypothesis("gamma = delta", _vec_equal(a.params.gammas, b.params.gammas)),
        Hypothesis("alpha, beta, gamma same monotone order",
                   _monotone_same_direction(a.params.alphas, b.params.alphas, a.params.gammas)),
    ]


def _hyp_t7(a, b, x, variant):
    same, w = _same_baseline(a.baseline, b.baseline, x)
    al, be = a.params.alphas, b.params.alphas
    hyps = _hyp_hr_common(a, b, x) + [Hypothesis("G = H", same, detail=f"worst {w:.3g}")]
    if variant == "literal":
        hyps.append(Hypothesis("alpha ≽ʷ beta", majorize_check(be, al, "WEAK_SUPER")))
    else:
        hyps.append(Hypothesis("alpha dominates beta in lower partial sums", majorize_check(al, be, "WEAK_SUPER"),
                               detail="alpha ≼ʷ beta in preorder notation"))
        hyps.append(_n_ratio_hyp(a, b, "DEC", x))
    return hyps


def _hyp_t8(a, b, x, variant):
    r_ok, w = _hazard_le(b.baseline, a.baseline, x)
    hyps = _hyp_hr_common(a, b, x) + [
        Hypothesis("r_g >= r_h", r_ok, detail=f"worst {w:.3g}"),
        Hypothesis("alpha ≽ʷ beta", majorize_check(b.params.alphas, a.params.alphas, "WEAK_SUPER")),
    ]
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "INC", x))
    return hyps


# T9: reversed hazard order of random maxima ---------------------------------------------

def _hyp_t9(a, b, x, variant):
    al, be = a.params.alphas, b.params.alphas
    g_le, w1 = _cdf_le(a.baseline, b.baseline, x)
    d_ge, w2 = _pdf_le(b.baseline, a.baseline, x)
    hyps = [
        _independence(a, b), _equal_n(a, b),
        Hypothesis("gamma = delta = const", len(set(a.params.gammas)) == 1 and _vec_equal(a.params.gammas, b.params.gammas)),
        Hypothesis("alpha, beta same monotone order", _monotone_same_direction(al, be)),
        Hypothesis("alpha, beta >= 1", _all_ge(al, 1.0) and _all_ge(be, 1.0)),
        Hypothesis("G <= H", g_le, detail=f"worst {w1:.3g}"),
        Hypothesis("g >= h", d_ge, detail=f"worst {w2:.3g}"),
    ]
    if variant == "literal":
        hyps.append(Hypothesis("alpha ≽ʷ beta", majorize_check(be, al, "WEAK_SUPER")))
    else:
        hyps.append(Hypothesis("alpha dominates beta in lower partial sums", majorize_check(al, be, "WEAK_SUPER"),
                               detail="alpha ≼ʷ beta in preorder notation"))
        hyps.append(_n_ratio_hyp(a, b, "INC", x))
    return hyps


# T10 / T11: dispersive order of random minima -------------------------------------------

def _hyp_t10(a, b, x, variant):
    al, be = a.params.alphas, b.params.alphas
    r_ok, w = _hazard_le(b.baseline, a.baseline, x)
    dg, _ = _hazard_decreasing(a.baseline, x)
    dh, _ = _hazard_decreasing(b.baseline, x)
    hyps = _hyp_hr_common(a, b, x) + [
        Hypothesis("alpha, beta <= 1", _all_le(al, 1.0) and _all_le(be, 1.0)),
        Hypothesis("r_g >= r_h", r_ok, detail=f"worst {w:.3g}"),
        Hypothesis("r_g or r_h decreasing", dg or dh),
        Hypothesis("alpha ≽ʷ beta", majorize_check(be, al, "WEAK_SUPER")),
    ]
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "INC", x))
    return hyps


def _hyp_t11(a, b, x, variant):
    hyps = _hyp_t6(a, b, x, "literal")
    dg, _ = _hazard_decreasing(a.baseline, x)
    hyps.append(Hypothesis("r_g decreasing", dg))
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "INC", x))
    return hyps


# T12..T15: likelihood ratio order of minima ---------------------------------------------

def _hyp_t12(a, b, x, variant):
    al, be = a.params.alphas, b.params.alphas
    p = _two_block(al, be, shared_tail=False)
    n = len(al)
    a1, a2 = al[0], al[-1]
    b1, b2 = be[0], be[-1]
    same, w = _same_baseline(a.baseline, b.baseline, x)
    hyps = [
        _independence(a, b), _equal_n(a, b),
        Hypothesis("gamma = delta = const", len(set(a.params.gammas)) == 1 and _vec_equal(a.params.gammas, b.params.gammas)),
        Hypothesis("alpha1 <= alpha2 <= beta2 <= beta1", a1 <= a2 <= b2 <= b1, detail=f"p={p}, q={n - p}"),
        Hypothesis("alpha ≽ᵐ beta", majorize_check(be, al, "M")),
    ]
    if variant == "corrected":
        hyps.append(Hypothesis("G = H", same, True, f"worst {w:.3g}"))
    return hyps


def _block_params(a, b, which):
    if which == "gamma":
        return a.params.gammas, b.params.gammas, a.params.alphas, b.params.alphas
    return a.params.alphas, b.params.alphas, a.params.gammas, b.params.gammas


def _hyp_block_lr(a, b, x, variant, which, fixed_n):
    xv, yv, other_a, other_b = _block_params(a, b, which)
    p = _two_block(xv, yv, shared_tail=True)
    first_x, first_y, common = xv[0], yv[0], xv[-1]
    same, w = _same_baseline(a.baseline, b.baseline, x)
    other = "alpha = beta = 1" if which == "gamma" else "gamma = delta = 1"
    lead, sym = ("gamma1", "gamma") if which == "gamma" else ("alpha1", "alpha")
    hyps = [
        Hypothesis("G = H", same, detail=f"worst {w:.3g}"),
        Hypothesis(other, all(v == 1.0 for v in other_a + other_b)),
    ]
    if fixed_n:
        hyps.append(Hypothesis("psi1 = psi2", a.generator == b.generator))
        rep = lr_generator_conditions(a.generator)
        hyps.append(Hypothesis("psi''/psi' decreasing", rep.ratio_decreasing,
                               detail=f"worst {rep.worst_ratio_increase:.3g}"))
        hyps.append(Hypothesis("psi ln psi/psi' increasing and concave", rep.psi_lnpsi_incr_concave,
                               detail=f"worst {max(rep.worst_psi_lnpsi_decrease, rep.worst_psi_lnpsi_convexity):.3g}"))
    else:
        hyps += [_independence(a, b), _equal_n(a, b)]
    if which == "alpha" and variant == "corrected":
        hyps.append(Hypothesis(f"{lead} <= {sym} <= beta1", first_x <= common <= first_y, detail=f"p={p}"))
    else:
        lbl = f"{lead} >= {sym} >= " + ("delta1" if which == "gamma" else "beta1")
        hyps.append(Hypothesis(lbl, first_x >= common >= first_y, detail=f"p={p}"))
    return hyps


def _hyp_t13(a, b, x, variant):
    return _hyp_block_lr(a, b, x, variant, "gamma", fixed_n=True)


def _hyp_t14(a, b, x, variant):
    hyps = _hyp_block_lr(a, b, x, variant, "gamma", fixed_n=False)
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "INC", x, quantity="density"))
        hyps.append(_fixed_lr_chain(a, x))
    return hyps


def _hyp_t15(a, b, x, variant):
    hyps = _hyp_block_lr(a, b, x, variant, "alpha", fixed_n=False)
    if variant == "corrected":
        hyps.append(_n_ratio_hyp(a, b, "INC", x, quantity="density"))
        hyps.append(_fixed_lr_chain(a, x))
    return hyps


# Conclusions ------------------------------------------------------------------------

def _fixed_lr_conclusion(a, b, x):
    """A_{1:n} <=_lr B_{1:n} at every n of the shared support; worst report wins."""
    sizes = sorted(set(a.ndist.support) | set(b.ndist.support))
    worst = None
    for n in sizes:
        if n < 2:
            continue
        rep = lr_check(a.with_ndist(NDist.point(n)), b.with_ndist(NDist.point(n)), x_grid=x)
        rep.extra["n"] = n
        if worst is None or rep.max_violation > worst.max_violation:
            worst = rep
    if worst is None:
        raise ConfigurationError("fixed-size lr conclusion needs some n >= 2 in the support")
    return worst


_CONCLUSIONS = {
    "T1": ("Y_{N2:N2} <=st X_{N1:N1}", lambda a, b, x: st_check(b, a, x_grid=x)),
    "T2": ("X_{N1:N1} <=st Y_{N2:N2}", lambda a, b, x: st_check(a, b, x_grid=x)),
    "T3": ("X_{1:N1} <=st Y_{1:N2}", lambda a, b, x: st_check(a, b, x_grid=x)),
    "T4": ("X_{1:N1} <=st Y_{1:N2}", lambda a, b, x: st_check(a, b, x_grid=x)),
    "T4b": ("X_{1:N1} <=st Y_{1:N2}", lambda a, b, x: st_check(a, b, x_grid=x)),
    "T5": ("Y_{1:N} <=hr X_{1:N}", lambda a, b, x: hr_check(b, a, x_grid=x)),
    "T6": ("Y_{1:N} <=hr X_{1:N}", lambda a, b, x: hr_check(b, a, x_grid=x)),
    "T7": ("Y_{1:N} <=hr X_{1:N}", lambda a, b, x: hr_check(b, a, x_grid=x)),
    "T8": ("X_{1:N} <=hr Y_{1:N}", lambda a, b, x: hr_check(a, b, x_grid=x)),
    "T9": ("Y_{N:N} <=rh X_{N:N}", lambda a, b, x: rh_check(b, a, x_grid=x)),
    "T10": ("X_{1:N} <=disp Y_{1:N}", lambda a, b, x: disp_check(a, b)),
    "T11": ("X_{1:N} <=disp Y_{1:N}", lambda a, b, x: disp_check(a, b)),
    "T12": ("Y_{1:N} <=lr X_{1:N}", lambda a, b, x: lr_check(b, a, x_grid=x)),
    "T13": ("X_{1:n} <=lr Y_{1:n} for each n", _fixed_lr_conclusion),
    "T14": ("X_{1:N} <=lr Y_{1:N}", lambda a, b, x: lr_check(a, b, x_grid=x)),
    "T15": ("X_{1:N} <=lr Y_{1:N}", lambda a, b, x: lr_check(a, b, x_grid=x)),
}


# conclusions whose direction the corrected variant reverses
_CORRECTED_CONCLUSIONS = {
    "T11": ("Y_{1:N} <=disp X_{1:N}", lambda a, b, x: disp_check(b, a)),
}


def _conclusion(spec, variant):
    if variant == "corrected" and spec.id in _CORRECTED_CONCLUSIONS:
        return _CORRECTED_CONCLUSIONS[spec.id]
    return spec.conclusion_label, spec.conclusion


def _extra_structure(tid, a, b):
    if tid == "T9":
        _require(len(set(a.params.gammas)) == 1 and _vec_equal(a.params.gammas, b.params.gammas),
                 "T9 requires a common constant gamma vector")
    if tid == "T12":
        _require(_two_block(a.params.alphas, b.params.alphas, shared_tail=False) is not None,
                 "T12 requires the two-block pattern (a1 1_p, a2 1_q) for alpha and beta")
    if tid in ("T13", "T14"):
        _require(len(a.params) >= 2, f"{tid} requires n >= 2")
        _require(_two_block(a.params.gammas, b.params.gammas, shared_tail=True) is not None,
                 f"{tid} requires gamma = (g1 1_p, g 1_q), delta = (d1 1_p, g 1_q)")
    if tid == "T15":
        _require(len(a.params) >= 2, "T15 requires n >= 2")
        _require(_two_block(a.params.alphas, b.params.alphas, shared_tail=True) is not None,
                 "T15 requires alpha = (a1 1_p, a 1_q), beta = (b1 1_p, a 1_q)")


# Samplers -----------------------------------------------------------------------------
# Each sampler builds (A, B) satisfying the stated hypotheses of its variant by
# construction. Auxiliary hypotheses are met by rejection (bounded retries);
# after the retries the last draw is returned and simply reports HYPOTHESES_UNMET.

def _ordered(v, inc):
    v = np.sort(np.asarray(v, dtype=float))
    return v if inc else v[::-1]


def _rand_ndist(rng, n, min_size=1):
    sizes = np.arange(min_size, n + 1)
    k = int(rng.integers(1, sizes.size + 1))
    sup = np.sort(rng.choice(sizes, size=k, replace=False))
    probs = rng.dirichlet(np.ones(k))
    return NDist.from_pmf({int(s): float(p) for s, p in zip(sup, probs)})


def _ndist_pair(rng, n):
    """(larger, smaller) in the usual stochastic order, by shifting mass up."""
    small = _rand_ndist(rng, n)
    pmf = {}
    for s, p in zip(small.support, small.probs):
        t = min(n, s + int(rng.integers(0, 3)))
        pmf[t] = pmf.get(t, 0.0) + p
    return NDist.from_pmf(pmf), small


def _baselines_cdf_le(rng):
    """(G, H) with G <= H analytically."""
    kind = rng.integers(0, 3)
    lo, hi = sorted(rng.uniform(0.3, 3.0, 2))
    if kind == 0:
        return Baseline("exponential", (lo,)), Baseline("exponential", (hi,))
    if kind == 1:
        k = float(rng.uniform(0.5, 3.0))
        return Baseline("weibull", (lo, k)), Baseline("weibull", (hi, k))
    return Baseline("inverse_exponential", (hi,)), Baseline("inverse_exponential", (lo,))


def _baselines_hazard_le(rng, decreasing=False):
    """(G, H) with r_g <= r_h analytically (same Weibull shape, ordered scales)."""
    lo, hi = sorted(rng.uniform(0.3, 3.0, 2))
    if rng.random() < 0.4:
        return Baseline("exponential", (lo,)), Baseline("exponential", (hi,))
    k = float(rng.uniform(0.4, 1.0) if decreasing else rng.uniform(0.5, 3.0))
    return Baseline("weibull", (lo, k)), Baseline("weibull", (hi, k))


def _random_baseline(rng, decreasing_hazard=False):
    g, _ = _baselines_hazard_le(rng, decreasing_hazard)
    return g


def _gen_pair(rng, shape):
    """(psi1, psi2) with phi2∘psi1 super-additive and the required log-shape."""
    if shape == "CONCAVE":
        t1 = float(rng.uniform(-1.0, 0.0))
        t2 = float(rng.uniform(t1, 0.95))
        if rng.random() < 0.2:
            return Generator("independence"), Generator("amh", float(rng.uniform(0.0, 0.95)))
        return Generator("amh", t1), Generator("amh", t2)
    fam = rng.choice(["clayton", "gumbel", "amh", "gumbel_hougaard", "indep_clayton"])
    if fam == "clayton":
        t1, t2 = np.sort(rng.uniform(0.2, 6.0, 2))
        return Generator("clayton", float(t1)), Generator("clayton", float(t2))
    if fam == "gumbel":
        t1, t2 = np.sort(rng.uniform(1.0, 4.0, 2))
        return Generator("gumbel", float(t1)), Generator("gumbel", float(t2))
    if fam == "gumbel_hougaard":
        t1, t2 = np.sort(rng.uniform(1.0, 4.0, 2))
        return Generator("gumbel_hougaard", float(t1)), Generator("gumbel_hougaard", float(t2))
    if fam == "amh":
        t1, t2 = np.sort(rng.uniform(0.0, 0.95, 2))
        return Generator("amh", float(t1)), Generator("amh", float(t2))
    return Generator("independence"), Generator("clayton", float(rng.uniform(0.2, 6.0)))


def _weak_super_above(rng, base, inc):
    """Vector whose ascending lower partial sums dominate those of ``base``."""
    out = np.sort(base) + np.sort(rng.exponential(0.6, base.size))[::-1] * (rng.random(base.size) < 0.8)
    return _ordered(out, inc)


def _weak_super_below(rng, base, inc):
    """Vector whose ascending lower partial sums are dominated by those of ``base``."""
    s = np.sort(base)
    out = np.maximum(s * rng.uniform(0.25, 1.0, s.size), 0.05)
    return _ordered(np.minimum(np.sort(out), s), inc)


def _spread(rng, base, inc):
    """Majorizing vector with the same total: deviations from the mean scaled up."""
    base = np.asarray(base, dtype=float)
    mean = base.mean()
    dev = base - mean
    neg = dev < 0
    cap = np.min((mean - 0.05) / -dev[neg]) if neg.any() else 3.0
    s = 1.0 + rng.uniform(0.0, 1.0) * (min(cap, 3.0) - 1.0)
    return _ordered(mean + s * dev, inc) if cap > 1.0 else _ordered(base, inc)


def _mk(side, baseline, alphas, gammas, gen, nd):
    return ExtremeModel(side, baseline, ParamVector(tuple(map(float, alphas)), tuple(map(float, gammas))), gen, nd)


def _s_t1(rng, variant):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    beta = _ordered(rng.uniform(0.2, 4.0, n), inc)
    alpha = _weak_super_above(rng, beta, inc) if variant == "corrected" else _weak_super_below(rng, beta, inc)
    gam = rng.uniform(1.0, 4.0, n)
    g, h = _baselines_cdf_le(rng)
    p1, p2 = _gen_pair(rng, "CONCAVE")
    big, small = _ndist_pair(rng, n)
    n1, n2 = (big, small) if variant == "corrected" else (small, big)
    return _mk("max", g, alpha, gam, p1, n1), _mk("max", h, beta, gam, p2, n2)


def _s_t2(rng, variant):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    alpha = _ordered(rng.uniform(0.2, 4.0, n), inc)
    delta = _ordered(rng.uniform(0.3, 3.0, n), inc)
    gam = _weak_super_above(rng, delta, inc)
    big, small = _ndist_pair(rng, n)
    p1, p2 = _gen_pair(rng, "CONCAVE")
    if variant == "literal":
        g, h = _baselines_cdf_le(rng)
        return _mk("max", g, alpha, gam, p1, big), _mk("max", h, alpha, delta, p2, small)
    h, g = _baselines_cdf_le(rng)
    return _mk("max", g, alpha, gam, p2, small), _mk("max", h, alpha, delta, p1, big)


def _s_t3(rng, variant):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    alpha = _ordered(rng.uniform(0.2, 4.0, n), inc)
    delta = _ordered(rng.uniform(0.3, 3.0, n), inc)
    gam = _ordered(np.sort(delta) + np.sort(rng.exponential(0.5, n)), inc)
    h, g = _baselines_cdf_le(rng)
    p1, p2 = _gen_pair(rng, "CONVEX")
    big, small = _ndist_pair(rng, n)
    n1, n2 = (big, small) if variant == "corrected" else (small, big)
    return _mk("min", g, alpha, gam, p1, n1), _mk("min", h, alpha, delta, p2, n2)


def _s_t4(rng, variant, remark=False):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    alpha = _ordered(rng.uniform(0.2, 3.0, n), inc)
    beta = _weak_super_above(rng, alpha, inc)
    gam = np.ones(n) if remark else _ordered(rng.uniform(0.3, 4.0, n), inc)
    h, g = _baselines_cdf_le(rng)
    if remark:
        t1, t2 = np.sort(rng.uniform(0.2, 6.0, 2))
        p1, p2 = Generator("clayton", float(t1)), Generator("clayton", float(t2))
    else:
        p1, p2 = _gen_pair(rng, "CONVEX")
    big, small = _ndist_pair(rng, n)
    n1, n2 = (big, small) if variant == "corrected" else (small, big)
    return _mk("min", g, alpha, gam, p1, n1), _mk("min", h, beta, gam, p2, n2)


def _indep():
    return Generator("independence")


def _s_t5(rng, variant):
    n = int(rng.integers(2, 6))
    g, h = _baselines_hazard_le(rng)
    nd = _rand_ndist(rng, n)
    delta = rng.uniform(0.3, 3.0, n)
    if variant == "corrected" and rng.random() < 0.7:
        # later entries of gamma exceed delta (ratio falls in n); the first
        # entry absorbs the slack so that partial sums stay ordered
        scale = _scale_ratio(g, h)
        gam = delta * scale * rng.uniform(1.0, 1.5, n)
        cg, cd = np.cumsum(gam), np.cumsum(delta)
        slack = min(cd[k - 1] - (cg[k - 1] - gam[0]) for k in nd.support)
        if slack <= 0.02:
            delta[0] += 0.05 - slack
            slack = 0.05
        gam[0] = float(rng.uniform(0.01, 1.0) * slack)
    else:
        gam = np.maximum(delta - rng.exponential(0.4, n), 0.05) if rng.random() < 0.5 else delta * rng.uniform(0.2, 1.0, n)
    ones = np.ones(n)
    return _mk("min", g, ones, gam, _indep(), nd), _mk("min", h, ones, delta, _indep(), nd)


def _scale_ratio(g: Baseline, h: Baseline) -> float:
    """Constant R_h/R_g for the proportional-hazard pairs built by the samplers."""
    if g.name == "exponential":
        return h.params[0] / g.params[0]
    return (h.params[0] / g.params[0]) ** g.params[1]


def _s_t6(rng, variant, decreasing=False):
    n = int(rng.integers(2, 6))
    b = _random_baseline(rng, decreasing)
    a = float(rng.uniform(0.3, 3.0))
    delta = np.sort(rng.uniform(0.3, 3.0, n))
    gam = _spread(rng, delta, True)
    if variant == "corrected":
        # cumulative gap sum(gamma - delta) falls until the last below-mean
        # entry; start the support there so the fixed-size ratio falls in n
        start = int(np.flatnonzero(np.cumsum(gam - delta) <= np.minimum.accumulate(np.cumsum(gam - delta)))[-1]) + 1
        nd = _rand_ndist(rng, n, min_size=start)
    else:
        perm = rng.permutation(n)
        gam, delta = gam[perm], delta[perm]
        nd = _rand_ndist(rng, n)
    al = np.full(n, a)
    return _mk("min", b, al, gam, _indep(), nd), _mk("min", b, al, delta, _indep(), nd)


def _s_t7(rng, variant):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    b = _random_baseline(rng)
    beta = _ordered(rng.uniform(0.3, 3.0, n), inc)
    alpha = _weak_super_above(rng, beta, inc) if variant == "corrected" else _weak_super_below(rng, beta, inc)
    gam = _ordered(rng.uniform(0.3, 3.0, n), inc)
    nd = _rand_ndist(rng, n)
    return _mk("min", b, alpha, gam, _indep(), nd), _mk("min", b, beta, gam, _indep(), nd)


def _s_t8(rng, variant, alpha_cap=None, decreasing=False):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    h, g = _baselines_hazard_le(rng, decreasing)
    hi = alpha_cap if alpha_cap is not None else 3.0
    alpha = _ordered(rng.uniform(0.1, hi, n), inc)
    beta = _weak_super_above(rng, alpha, inc)
    if alpha_cap is not None:
        beta = _ordered(np.minimum(np.sort(beta), alpha_cap), inc)
    gam = _ordered(rng.uniform(0.3, 3.0, n), inc)
    nd = _rand_ndist(rng, n)
    return _mk("min", g, alpha, gam, _indep(), nd), _mk("min", h, beta, gam, _indep(), nd)


def _s_t9(rng, variant):
    n = int(rng.integers(2, 6))
    inc = bool(rng.random() < 0.5)
    # G <= H together with g >= h forces G = H
    b = _random_baseline(rng)
    beta = _ordered(1.0 + rng.uniform(0.0, 3.0, n), inc)
    if variant == "corrected":
        alpha = _weak_super_above(rng, beta, inc)
    else:
        alpha = _ordered(np.maximum(_weak_super_below(rng, beta, inc), 1.0), inc)
    gam = np.full(n, float(rng.uniform(0.3, 3.0)))
    nd = _rand_ndist(rng, n)
    return _mk("max", b, alpha, gam, _indep(), nd), _mk("max", b, beta, gam, _indep(), nd)


def _s_t10(rng, variant):
    return _s_t8(rng, variant, alpha_cap=1.0, decreasing=True)


def _s_t11(rng, variant):
    return _s_t6(rng, variant, decreasing=True)


def _s_t12(rng, variant):
    n = int(rng.integers(2, 6))
    p = int(rng.integers(1, n + 1))
    b = _random_baseline(rng)
    if rng.random() < 0.1:
        # the ordering together with equal totals only allows the equal case
        a1 = a2 = b1 = b2 = float(rng.uniform(0.3, 3.0))
    else:
        a1, a2, b2, b1 = np.sort(rng.uniform(0.3, 3.0, 4))
    alpha = [a1] * p + [a2] * (n - p)
    beta = [b1] * p + [b2] * (n - p)
    gam = np.full(n, float(rng.uniform(0.3, 3.0)))
    nd = _rand_ndist(rng, n)
    return _mk("min", b, alpha, gam, _indep(), nd), _mk("min", b, beta, gam, _indep(), nd)


def _lr_generator(rng):
    # among the supported families only independence meets both generator
    # conditions, so it gets half the draws; the rest exercise the checks
    if rng.random() < 0.5:
        return Generator("independence")
    fam = rng.choice(["clayton", "gumbel", "amh", "frank"])
    if fam == "clayton":
        return Generator("clayton", float(rng.uniform(0.1, 5.0)))
    if fam == "gumbel":
        return Generator("gumbel", float(rng.uniform(1.0, 4.0)))
    if fam == "amh":
        return Generator("amh", float(rng.uniform(-1.0, 0.95)))
    return Generator("frank", float(rng.choice([-1, 1]) * rng.uniform(0.5, 8.0)))


def _s_block(rng, variant, which, fixed_n):
    n = int(rng.integers(2, 6))
    p = int(rng.integers(1, n + 1)) if fixed_n else int(rng.integers(1, n))
    b = _random_baseline(rng)
    lo, mid, hi = np.sort(rng.uniform(0.3, 3.0, 3))
    if which == "alpha" and variant == "corrected":
        first_x, first_y = lo, hi
    else:
        first_x, first_y = hi, lo
    xv = [first_x] * p + [mid] * (n - p)
    yv = [first_y] * p + [mid] * (n - p)
    ones = np.ones(n)
    gen = _lr_generator(rng) if fixed_n else _indep()
    nd = _rand_ndist(rng, n, min_size=2) if fixed_n else _rand_ndist(rng, n)
    if which == "gamma":
        return _mk("min", b, ones, xv, gen, nd), _mk("min", b, ones, yv, gen, nd)
    return _mk("min", b, xv, ones, gen, nd), _mk("min", b, yv, ones, gen, nd)


# Registry ---------------------------------------------------------------------------------

_ALPHA_NOTE = ("majorization read with alpha holding the larger lower partial sums; "
               "the preorder-notation reading fails already for n = 1")
_N_NOTE = "sample-size order reversed: the fixed-size extreme is monotone in m in the opposite sense"
_AUX_NOTE = "auxiliary: fixed-size ratio monotone in n (condition of the random-N preservation step)"

THEOREMS: dict[str, TheoremSpec] = {}


def _register(tid, side, statement, notes, hyps, sampler):
    label, concl = _CONCLUSIONS[tid]
    THEOREMS[tid] = TheoremSpec(tid, Side(side), statement, label, tuple(notes), hyps, concl, sampler)


_register("T1", "MAX", "alpha ≽ʷ beta ⇒ X_{N1:N1} >=st Y_{N2:N2}", [_ALPHA_NOTE, _N_NOTE], _hyp_t1, _s_t1)
_register("T2", "MAX", "delta ≽ʷ gamma ⇒ X_{N1:N1} <=st Y_{N2:N2}",
          ["baseline and copula dominance swapped (G >= H, phi1∘psi2 super-additive): the stated "
           "ones push X above Y", _N_NOTE], _hyp_t2, _s_t2)
_register("T3", "MIN", "gamma ≽_w delta ⇒ X_{1:N1} <=st Y_{1:N2}", [_N_NOTE], _hyp_t3, _s_t3)
_register("T4", "MIN", "alpha ≽ʷ beta ⇒ X_{1:N1} <=st Y_{1:N2}", [_N_NOTE], _hyp_t4, _s_t4)
_register("T4b", "MIN", "gamma = delta = 1, (1-psi)/psi' log-convex: alpha ≽ʷ beta ⇒ X_{1:N1} <=st Y_{1:N2}",
          [_N_NOTE], lambda a, b, x, v: _hyp_t4(a, b, x, v, remark_variant=True),
          lambda rng, v: _s_t4(rng, v, remark=True))
_register("T5", "MIN", "alpha = beta = 1, r_g <= r_h: sum gamma <= sum delta ⇔ X_{1:N} >=hr Y_{1:N}",
          [_AUX_NOTE + "; the 'only if' half is exercised separately"], _hyp_t5, _s_t5)
_register("T6", "MIN", "G = H, alpha = beta = const: gamma ≽ᵐ delta ⇒ X_{1:N} >=hr Y_{1:N}", [_AUX_NOTE], _hyp_t6, _s_t6)
_register("T7", "MIN", "G = H, gamma = delta: alpha ≽ʷ beta ⇒ X_{1:N} >=hr Y_{1:N}",
          [_ALPHA_NOTE + " (the preorder reading contradicts T8 at G = H)", _AUX_NOTE], _hyp_t7, _s_t7)
_register("T8", "MIN", "gamma = delta, r_g >= r_h: alpha ≽ʷ beta ⇒ X_{1:N} <=hr Y_{1:N}", [_AUX_NOTE], _hyp_t8, _s_t8)
_register("T9", "MAX", "gamma = delta = const, alpha, beta >= 1, G <= H, g >= h: alpha ≽ʷ beta ⇒ X_{N:N} >=rh Y_{N:N}",
          [_ALPHA_NOTE + " (reversed hazard grows with alpha)", _AUX_NOTE,
           "G <= H with g >= h forces G = H"], _hyp_t9, _s_t9)
_register("T10", "MIN", "alpha, beta <= 1, r_g >= r_h, r_g or r_h decreasing: alpha ≽ʷ beta ⇒ X_{1:N} <=disp Y_{1:N}",
          [_AUX_NOTE + " (the hr step feeding the dispersive argument)"], _hyp_t10, _s_t10)
_register("T11", "MIN", "T6 setting, r_g decreasing: gamma ≽ᵐ delta ⇒ X_{1:N} <=disp Y_{1:N}",
          ["conclusion reversed to Y_{1:N} <=disp X_{1:N}: the hr step gives X >=hr Y, and hr order "
           "with a decreasing hazard carries over to the dispersive order in the same direction", _AUX_NOTE],
          _hyp_t11, _s_t11)
_register("T12", "MIN", "alpha1 <= alpha2 <= beta2 <= beta1: (alpha1 1_p, alpha2 1_q) ≽ᵐ (beta1 1_p, beta2 1_q) ⇒ X_{1:N} >=lr Y_{1:N}",
          ["the ordering and equal totals together force alpha = beta; only the equal case can validate",
           "auxiliary: common baseline (the density argument uses one baseline)"], _hyp_t12, _s_t12)
_register("T13", "MIN", "psi1 = psi2, G = H, alpha = beta = 1: gamma1 >= gamma >= delta1 ⇒ X_{1:n} <=lr Y_{1:n}",
          ["conclusion evaluated at every fixed n >= 2 of the configured support"], _hyp_t13,
          lambda rng, v: _s_block(rng, v, "gamma", fixed_n=True))
_LR_AUX = "auxiliary: fixed-size density ratio increasing in n and X_{1:n} lr-decreasing in n"
_register("T14", "MIN", "independence, G = H, alpha = beta = 1: gamma1 >= gamma >= delta1 ⇒ X_{1:N} <=lr Y_{1:N}",
          [_LR_AUX], _hyp_t14,
          lambda rng, v: _s_block(rng, v, "gamma", fixed_n=False))
_register("T15", "MIN", "independence, gamma = delta = 1: alpha1 >= alpha >= beta1 ⇒ X_{1:N} <=lr Y_{1:N}",
          ["parameter ordering reversed to alpha1 <= alpha <= beta1: a larger alpha1 makes X larger "
           "in the usual order, contradicting the conclusion", _LR_AUX],
          _hyp_t15, lambda rng, v: _s_block(rng, v, "alpha", fixed_n=False))

THEOREM_IDS = tuple(THEOREMS)


# Public API -------------------------------------------------------------------------------

def _spec(tid: str) -> TheoremSpec:
    key = tid.upper().replace("T4B", "T4b")
    if key not in THEOREMS:
        raise ConfigurationError(f"unknown theorem id {tid!r}; expected one of {', '.join(THEOREM_IDS)}")
    return THEOREMS[key]


def check_theorem(tid: str, model_A: ExtremeModel, model_B: ExtremeModel, variant: str = "corrected",
                  x_grid=None) -> TheoremCase:
    """Evaluate every hypothesis of theorem ``tid`` on (A, B), then its conclusion."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    spec = _spec(tid)
    _structure(spec, model_A, model_B)
    _extra_structure(spec.id, model_A, model_B)
    x = _theorem_grid(model_A, model_B) if x_grid is None else np.asarray(x_grid, dtype=float)
    hyps = spec.hypotheses(model_A, model_B, x, variant)
    label, conclude = _conclusion(spec, variant)
    concl = conclude(model_A, model_B, x)
    if not all(h.holds for h in hyps):
        overall = Outcome.HYPOTHESES_UNMET
    elif concl.verdict is Verdict.FAILS and concl.max_violation > CONTRADICTION_MARGIN:
        overall = Outcome.CONTRADICTION
    else:
        overall = Outcome.VALIDATED
    return TheoremCase(spec.id, variant, model_A, model_B, hyps, concl, label, overall)


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))


_AUX_RETRIES = 40


def sample_pair(tid: str, rng: np.random.Generator, variant: str = "corrected"):
    """Draw one (A, B) pair for ``tid``; auxiliary hypotheses met by bounded rejection."""
    spec = _spec(tid)
    a, b = spec.sampler(rng, variant)
    if variant == "literal":
        return a, b
    for _ in range(_AUX_RETRIES):
        x = _theorem_grid(a, b, points=64)
        hyps = spec.hypotheses(a, b, x, variant)
        if all(h.holds for h in hyps if h.auxiliary):
            return a, b
        a, b = spec.sampler(rng, variant)
    return a, b


@dataclass
class SuiteSummary:
    id: str
    variant: str
    trials: int
    seed: int
    validated: int = 0
    hypotheses_unmet: int = 0
    contradictions: int = 0
    unmet_by_hypothesis: dict = field(default_factory=dict)
    contradiction_trials: list = field(default_factory=list)
    worst_violation: float = 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.id, "variant": self.variant, "trials": self.trials, "seed": self.seed,
            "validated": self.validated, "hypotheses_unmet": self.hypotheses_unmet,
            "contradictions": self.contradictions, "unmet_by_hypothesis": dict(self.unmet_by_hypothesis),
            "contradiction_trials": list(self.contradiction_trials), "worst_violation": self.worst_violation,
        }


def _run_trial(tid, seed, index, variant):
    rng = _trial_rng(seed, index)
    a, b = sample_pair(tid, rng, variant)
    return check_theorem(tid, a, b, variant)


def random_validation_suite(tid: str, trials: int = 200, seed: int = 7, variant: str = "corrected",
                            workers: int = 1) -> SuiteSummary:
    """Run ``trials`` seeded random cases; trial i uses seed sequence (seed, i)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    spec = _spec(tid)
    summary = SuiteSummary(spec.id, variant, trials, seed)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(_run_trial, [spec.id] * trials, [seed] * trials, range(trials), [variant] * trials))
    else:
        cases = (_run_trial(spec.id, seed, i, variant) for i in range(trials))
    for i, case in enumerate(cases):
        if case.overall is Outcome.VALIDATED:
            summary.validated += 1
        elif case.overall is Outcome.HYPOTHESES_UNMET:
            summary.hypotheses_unmet += 1
            for name in case.failed_hypotheses:
                summary.unmet_by_hypothesis[name] = summary.unmet_by_hypothesis.get(name, 0) + 1
        else:
            summary.contradictions += 1
            summary.contradiction_trials.append(i)
            summary.worst_violation = max(summary.worst_violation, case.conclusion.max_violation)
    return summary


def scan(tid: str, trials: int = 200, seed: int = 7) -> dict:
    """Search for violations of the statement as written (``literal`` variant).

    Besides contradictions of the full statement, every conclusion failure
    is attributed to the hypotheses that were false for it, which shows
    which conditions the failures hinge on.
    """
    summary = random_validation_suite(tid, trials, seed, variant="literal")
    failing_with = {}
    for i in range(trials):
        case = _run_trial(_spec(tid).id, seed, i, "literal")
        if case.conclusion.verdict is Verdict.FAILS and case.conclusion.max_violation > CONTRADICTION_MARGIN:
            for name in case.failed_hypotheses:
                failing_with[name] = failing_with.get(name, 0) + 1
    out = summary.to_dict()
    out["conclusion_failures_by_false_hypothesis"] = failing_with
    return out


# The two-sided sum condition for hazard-rate ordering of minima ------------------------------

def hr_sum_biconditional_suite(trials: int = 100, seed: int = 11) -> dict:
    """Random (gamma, delta, baselines with r_g <= r_h) draws for the T5 setting.

    For each draw the hr direction between the random minima is read from
    the grid check (a direction counts only with margin > 1e-6) and compared
    with the sign of sum(delta) - sum(gamma): positive must give X >=hr Y,
    negative X <=hr Y. The vectors are componentwise ordered so the sign is
    the same for every n.
    """
    records = []
    mismatches = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        n = int(rng.integers(2, 6))
        g, h = _baselines_hazard_le(rng)
        nd = _rand_ndist(rng, n)
        gam = rng.uniform(0.3, 3.0, n)
        sign = 1 if rng.random() < 0.5 else -1
        delta = gam * (1.0 + sign * rng.uniform(0.05, 0.6, n))
        ones = np.ones(n)
        a = _mk("min", g, ones, gam, _indep(), nd)
        b = _mk("min", h, ones, delta, _indep(), nd)
        x = _theorem_grid(a, b)
        ge = hr_check(b, a, x_grid=x)   # X >=hr Y
        le = hr_check(a, b, x_grid=x)
        if ge.verdict is not Verdict.FAILS and ge.margin > CONTRADICTION_MARGIN:
            direction = "X>=hr Y"
        elif le.verdict is not Verdict.FAILS and le.margin > CONTRADICTION_MARGIN:
            direction = "X<=hr Y"
        elif ge.verdict is not Verdict.FAILS:
            direction = "X>=hr Y (margin below threshold)"
        else:
            direction = "none"
        predicted = "X>=hr Y" if sign > 0 else "X<=hr Y"
        match = direction == predicted
        mismatches += not match
        records.append({"trial": i, "sum_delta_minus_sum_gamma": float(delta.sum() - gam.sum()),
                        "predicted": predicted, "observed": direction, "match": bool(match),
                        "equal_baselines": g == h})
    return {"trials": trials, "seed": seed, "mismatches": mismatches, "records": records}


# Counterexamples --------------------------------------------------------------------------

_CE_PMF_1 = NDist.from_pmf({3: 0.2, 4: 0.4, 5: 0.4})
_CE_PMF_2 = NDist.from_pmf({3: 0.2, 4: 0.6, 5: 0.2})


def counterexample_models(which: str) -> tuple[ExtremeModel, ExtremeModel, str]:
    """(model_A, model_B, theorem id) for ce1 / ce2 / ce3 with the published parameters."""
    which = which.lower()
    inv, expo = Baseline("inverse_exponential", (1.0,)), Baseline("exponential", (1.0,))
    if which == "ce1":
        gam = (1.2, 1.5, 1.9, 2.0, 2.1)
        a = ExtremeModel("max", inv, ParamVector((1.1, 0.001, 0.0001, 0.00001, 0.00001), gam),
                         Generator("gumbel", 2.0), _CE_PMF_1)
        b = ExtremeModel("max", expo, ParamVector((2.1, 3.001, 5.0001, 0.001, 0.0001), gam),
                         Generator("gumbel", 2.1), _CE_PMF_2)
        return a, b, "T1"
    if which == "ce2":
        al = (0.01, 7.0, 9.0, 9.1, 9.12)
        a = ExtremeModel("min", inv, ParamVector(al, (3.9, 3.1, 2.9, 2.8, 2.1)), Generator("gumbel", 1.4), _CE_PMF_1)
        b = ExtremeModel("min", expo, ParamVector(al, (3.2, 2.6, 1.9, 1.2, 1.0)), Generator("gumbel", 2.5), _CE_PMF_2)
        return a, b, "T3"
    if which == "ce3":
        gam = (5.02, 2.05, 1.09, 0.01, 0.001)
        a = ExtremeModel("min", expo, ParamVector((7.1, 2.9, 1.56, 0.03, 0.201), gam),
                         Generator("gumbel_hougaard", 4.0002), _CE_PMF_1)
        b = ExtremeModel("min", inv, ParamVector((8.1, 3.009, 2.6, 1.06, 0.01), gam),
                         Generator("gumbel_hougaard", 4.0001), _CE_PMF_2)
        return a, b, "T4"
    raise ConfigurationError(f"unknown counterexample {which!r}; expected ce1, ce2 or ce3")


def default_ce_grid(points: int = 4000):
    return np.geomspace(1e-3, 20.0, points + 2)[1:-1]


@dataclass
class CounterexampleResult:
    which: str
    theorem: str
    x: np.ndarray
    diff: np.ndarray
    value_A: np.ndarray
    value_B: np.ndarray
    threshold: float
    sign_change: bool
    crossing_locations: list
    raw_crossings: list
    lobes: list

    def report(self) -> dict:
        return {
            "which": self.which, "theorem": self.theorem, "sign_change": self.sign_change,
            "threshold": self.threshold, "crossing_locations": self.crossing_locations,
            "raw_crossings": self.raw_crossings, "lobes": self.lobes,
            "min_diff": float(self.diff.min()), "max_diff": float(self.diff.max()),
            "grid": {"points": int(self.x.size), "min": float(self.x.min()), "max": float(self.x.max())},
        }

    def rows(self):
        return zip(self.x, self.diff, self.value_A, self.value_B)


def run_counterexample(which: str, x_grid=None, threshold: float = CONTRADICTION_MARGIN) -> CounterexampleResult:
    """Survival difference sf_A - sf_B for a counterexample, with its crossings.

    A crossing is significant when the nearest grid points on either side
    with |diff| > ``threshold`` have opposite signs; its abscissa is found by
    Brent's method on the raw sign change between them.
    """
    a, b, tid = counterexample_models(which)
    x = default_ce_grid() if x_grid is None else np.asarray(x_grid, dtype=float)
    sa, sb = np.asarray(a.sf(x)), np.asarray(b.sf(x))
    diff = sa - sb

    def f(t):
        return float(a.sf(t) - b.sf(t))

    raw = []
    sgn = np.sign(diff)
    for i in np.flatnonzero(sgn[:-1] * sgn[1:] < 0):
        raw.append(float(brentq(f, x[i], x[i + 1], xtol=1e-14)))
    big = np.flatnonzero(np.abs(diff) > threshold)
    sig = []
    for i, j in zip(big, big[1:]):
        if np.sign(diff[i]) != np.sign(diff[j]):
            inside = [r for r in raw if x[i] <= r <= x[j]]
            sig.append(inside[0] if inside else float(brentq(f, x[i], x[j], xtol=1e-14)))
    # extreme value of each sign-constant stretch between raw crossings
    edges = [0] + [int(np.searchsorted(x, r)) for r in raw] + [x.size]
    lobes = []
    for lo, hi in zip(edges, edges[1:]):
        if hi > lo:
            seg = diff[lo:hi]
            k = int(np.argmax(np.abs(seg)))
            lobes.append({"x_from": float(x[lo]), "x_to": float(x[hi - 1]),
                          "extreme_x": float(x[lo + k]), "extreme_diff": float(seg[k])})
    return CounterexampleResult(which.lower(), tid, x, diff, sa, sb, threshold, bool(sig), sig, raw, lobes)


# Auxiliary lemma on ratios ----------------------------------------------------------------

class PremiseError(ValueError):
    """Premises of the ratio lemma do not hold on the grid."""


def lemma2_property_check(d1, d2, d, slack: float = REL_TOL) -> bool:
    """(d1 + d)/(d2 + d) nonincreasing, given d1/d2, d/d2, d1/d nonincreasing.

    Inputs are grid evaluations of three positive functions on a common
    increasing grid. Raises ``PremiseError`` when positivity or a premise
    fails; otherwise returns whether the combined ratio is nonincreasing.
    """
    d1, d2, d = (np.asarray(v, dtype=float) for v in (d1, d2, d))
    if not (d1.shape == d2.shape == d.shape) or d1.ndim != 1 or d1.size < 2:
        raise ValueError("inputs must be 1-d arrays of equal length >= 2")
    if np.any(d1 <= 0) or np.any(d2 <= 0) or np.any(d <= 0):
        raise PremiseError("functions must be positive on the grid")

    def nonincreasing(num, den):
        r = np.log(num) - np.log(den)
        return bool(np.all(np.diff(r) <= slack))

    for name, num, den in (("d1/d2", d1, d2), ("d/d2", d, d2), ("d1/d", d1, d)):
        if not nonincreasing(num, den):
            raise PremiseError(f"premise {name} nonincreasing fails")
    return nonincreasing(d1 + d, d2 + d)
