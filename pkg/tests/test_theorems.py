import numpy as np
import pytest

from conftest import model
from stochord import NDist
from stochord.orders import Verdict, hr_check, majorize_check
from stochord.theorems import (
    THEOREM_IDS,
    ConfigurationError,
    Outcome,
    PremiseError,
    check_theorem,
    counterexample_models,
    lemma2_property_check,
    random_validation_suite,
    run_counterexample,
    sample_pair,
    scan,
)
from stochord.extremes import ExtremeModel


def test_registry_covers_all_ids():
    assert THEOREM_IDS == ("T1", "T2", "T3", "T4", "T4b", "T5", "T6", "T7", "T8", "T9", "T10", "T11",
                           "T12", "T13", "T14", "T15")


def test_identical_models_validate():
    m = model("max", alphas=(0.8, 1.2, 2.0), gammas=(1.0, 1.5, 1.2),
              ndist=NDist.from_pmf({2: 0.5, 3: 0.5}))
    case = check_theorem("T1", m, m)
    assert case.overall is Outcome.VALIDATED
    assert case.conclusion.verdict is Verdict.HOLDS
    assert case.hypotheses_hold and case.failed_hypotheses == []
    d = case.to_dict()
    assert d["overall"] == "VALIDATED" and d["id"] == "T1"


def _t5_pair(gammas, deltas):
    nd = NDist.point(len(gammas))
    ones = (1.0,) * len(gammas)
    a = model("min", baseline=("exponential", (1.0,)), alphas=ones, gammas=gammas, ndist=nd)
    b = model("min", baseline=("exponential", (2.0,)), alphas=ones, gammas=deltas, ndist=nd)
    return a, b


def test_constant_hazard_example_both_ways():
    # hazards are 1 * 3 and 2 * 4: X has the smaller hazard
    a, b = _t5_pair((1.0, 2.0), (1.5, 2.5))
    case = check_theorem("T5", a, b)
    assert case.overall is Outcome.VALIDATED
    assert hr_check(b, a).verdict is Verdict.HOLDS
    assert hr_check(a, b).verdict is Verdict.FAILS
    # a gamma total above the delta total can reverse it: hazards 10 vs 8
    a2, b2 = _t5_pair((5.0, 5.0), (1.5, 2.5))
    assert check_theorem("T5", a2, b2).overall is Outcome.HYPOTHESES_UNMET
    assert hr_check(b2, a2).verdict is Verdict.FAILS
    assert hr_check(a2, b2).verdict is Verdict.HOLDS


def test_counterexample_two_with_swapped_baselines():
    a, b, tid = counterexample_models("ce2")
    violating = check_theorem(tid, a, b)
    assert violating.overall is Outcome.HYPOTHESES_UNMET
    assert any("G" in name for name in violating.failed_hypotheses)
    sa = ExtremeModel(a.side, b.baseline, a.params, a.generator, a.ndist)
    sb = ExtremeModel(b.side, a.baseline, b.params, b.generator, b.ndist)
    swapped = check_theorem(tid, sa, sb)
    # the conclusion holds once the baselines are in the right order; the common
    # monotone-order requirement on the parameter vectors is still not met here
    assert swapped.conclusion.verdict is Verdict.HOLDS
    assert swapped.overall is not Outcome.CONTRADICTION
    assert "alpha, gamma, delta same monotone order" in swapped.failed_hypotheses


def test_counterexample_models_structure():
    for which, side in (("ce1", "MAX"), ("ce2", "MIN"), ("ce3", "MIN")):
        a, b, _ = counterexample_models(which)
        assert a.side.value == side and len(a.params) == 5
        assert a.ndist.probs == pytest.approx((0.2, 0.4, 0.4))
        assert b.ndist.probs == pytest.approx((0.2, 0.6, 0.2))
    with pytest.raises(ConfigurationError):
        counterexample_models("ce4")


def test_counterexample_one_crossing():
    res = run_counterexample("ce1")
    assert res.sign_change
    assert res.crossing_locations[0] == pytest.approx(2.03864, abs=1e-4)
    rep = res.report()
    assert rep["grid"]["min"] > 1e-3 and rep["grid"]["max"] < 20
    assert len(list(res.rows())) == res.x.size


def test_counterexample_lobes_are_recorded():
    for which in ("ce2", "ce3"):
        res = run_counterexample(which)
        assert res.lobes
        assert all(abs(l["extreme_diff"]) <= np.abs(res.diff).max() for l in res.lobes)


def test_majorization_claims_of_counterexamples():
    a, b, _ = counterexample_models("ce1")
    assert majorize_check(b.params.alphas, a.params.alphas, "WEAK_SUPER")
    a, b, _ = counterexample_models("ce2")
    assert majorize_check(b.params.gammas, a.params.gammas, "WEAK_SUB")


def test_structural_errors():
    mx = model("max", alphas=(1.0, 2.0), gammas=(1.0, 1.0))
    mn = model("min", alphas=(1.0, 2.0), gammas=(1.0, 1.0))
    with pytest.raises(ConfigurationError):
        check_theorem("T1", mx, mn)
    with pytest.raises(ConfigurationError):
        check_theorem("T99", mx, mx)
    with pytest.raises(ConfigurationError):
        check_theorem("T1", mx, model("max", alphas=(1.0,), gammas=(1.0,)))
    with pytest.raises(ValueError):
        check_theorem("T1", mx, mx, variant="other")
    with pytest.raises(ValueError):
        random_validation_suite("T1", trials=0)


@pytest.mark.parametrize("tid", ["T1", "T3", "T6", "T8", "T11", "T15"])
def test_short_suites_have_no_contradictions(tid):
    s = random_validation_suite(tid, trials=12, seed=3)
    assert s.contradictions == 0
    assert s.validated + s.hypotheses_unmet == 12


def test_suite_is_deterministic():
    a = random_validation_suite("T2", trials=6, seed=5).to_dict()
    b = random_validation_suite("T2", trials=6, seed=5).to_dict()
    assert a == b


def test_sampled_pairs_fit_their_setting():
    rng = np.random.default_rng(0)
    for tid in THEOREM_IDS:
        a, b = sample_pair(tid, rng)
        check_theorem(tid, a, b)   # structurally valid


def test_literal_reading_of_reversed_statement_is_refuted():
    out = scan("T9", trials=10, seed=7)
    assert out["variant"] == "literal"
    assert out["contradictions"] > 0


def test_ratio_lemma():
    x = np.linspace(0.1, 3, 50)
    d2 = np.exp(x)
    d1 = np.ones_like(x)
    d = np.exp(0.5 * x)
    assert lemma2_property_check(d1, d2, d)
    with pytest.raises(PremiseError):
        lemma2_property_check(d2, d1, d)
    with pytest.raises(PremiseError):
        lemma2_property_check(-d1, d2, d)
    with pytest.raises(ValueError):
        lemma2_property_check(d1[:3], d2, d)
