import numpy as np
import pytest

from spcdecl.analysis import (
    EmptyEnsemble,
    Link,
    as_coefficients,
    declination_sweep,
    fit_years,
    median_abs_change,
    pres_vs_leg_fit,
    ranges_similar,
    sensitivity_sweep,
    sweep_rows,
    year_2012_sensitivity_check,
)
from spcdecl.ensemble import SweepCase, central_range, interval_overlap, summarize
from spcdecl.ingest import load_coefficients
from spcdecl.model import District, Incumbency, StateYearRecord
from spcdecl.regress import DegenerateDesign
from spcdecl.spc import Strategy
from spcdecl.synthetic import synthetic_states


@pytest.fixture(scope="module")
def states():
    return synthetic_states(120, seed=11)


@pytest.fixture(scope="module")
def coeffs():
    return load_coefficients()


def test_twelve_district_ensemble_clusters_near_one():
    rep = declination_sweep(synthetic_states(100, seed=1, n_range=(12, 12)))
    assert 0.7 <= rep.summary["rep"].mean <= 1.3
    assert 0.7 <= -rep.summary["dem"].mean <= 1.3


def test_report_bookkeeping(states):
    rep = declination_sweep(states)
    assert rep.count() == sum(rep.count(s) for s in ("OK", "NotEnoughRoom", "ConstraintViolated"))
    for direction in ("rep", "dem"):
        s = rep.summary[direction]
        assert s.count_ok + sum(s.count_failed.values()) == sum(c.direction == direction for c in rep.cases)
        lo, hi = s.central_95_range
        assert lo <= s.median <= hi
        assert s.central_95_range == central_range(rep.deltas(direction))
    keys = [c.key() for c in rep.cases]
    assert keys == sorted(keys)


def test_alternative_settings_are_similar(states):
    base = declination_sweep(states)
    for thresholds, strategies in [((0.40,), (Strategy.EVEN,)), ((0.49,), (Strategy.EVEN,)),
                                   ((0.45,), (Strategy.GREEDY,))]:
        assert ranges_similar(base, declination_sweep(states, thresholds, strategies))


def test_interval_overlap():
    assert interval_overlap((0, 1), (0.5, 2)) == 0.5
    assert interval_overlap((0, 1), (2, 3)) == 0.0
    assert interval_overlap((0, 2), (0.5, 1)) == 1.0


def test_logistic_estimate_moves_less_than_s_declination(states, coeffs):
    decl = declination_sweep(states)
    for link in Link:
        sens = sensitivity_sweep(states, coeffs, link)
        assert [c.key() for c in sens.cases] == [c.key() for c in decl.cases]
        assert median_abs_change(sens) < median_abs_change(decl)
        assert sens.summary["rep"].mean > 0 > sens.summary["dem"].mean


def test_sensitivity_skips_years_without_coefficients(coeffs):
    recs = synthetic_states(10, seed=2, year=2014)
    assert sensitivity_sweep(recs, coeffs).count() == 0


def test_fitted_link_shrinks_change(states, coeffs):
    ident = sensitivity_sweep(states, coeffs, Link.IDENTITY)
    fitted = sensitivity_sweep(states, coeffs, Link.FITTED)
    # gamma1 = 0.85 < 1 flattens the composite curve
    assert median_abs_change(fitted) < median_abs_change(ident)


def test_year_2012_check(states, coeffs):
    value = year_2012_sensitivity_check(states, coeffs)
    assert value == pytest.approx(median_abs_change(sensitivity_sweep(states, coeffs, Link.FITTED)))
    with pytest.raises(EmptyEnsemble):
        year_2012_sensitivity_check([], coeffs)


def test_unchanged_cases_give_zero():
    cases = [SweepCase("AA", 2012, 7, "crack-rep", "rep", 0.45, "even", 0.0, "OK"),
             SweepCase("AA", 2012, 7, "crack-dem", "dem", 0.45, "even", 0.0, "OK"),
             SweepCase("AA", 2012, 7, "pack-dem", "dem", 0.45, "even", None, "NotEnoughRoom")]
    assert median_abs_change(summarize(cases)) == 0.0
    with pytest.raises(EmptyEnsemble):
        median_abs_change(summarize(cases[2:]))


def test_pres_vs_leg_fit_collinear():
    recs = [StateYearRecord("AA", 2012, tuple(
        District(s, 0.1 + 0.8 * s, Incumbency.DEM if s > 0.5 else Incumbency.REP) for s in (0.2, 0.4, 0.6, 0.8)))]
    fit, pts = pres_vs_leg_fit(recs)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.slope == pytest.approx(0.8) and fit.intercept == pytest.approx(0.1)
    assert [p["incumbency"] for p in pts] == ["R", "R", "D", "D"]
    with pytest.raises(DegenerateDesign):
        pres_vs_leg_fit(recs, years=[1980])


def test_fit_years_recovers_link():
    recs = synthetic_states(150, seed=3, pres_noise=0.03)
    (year, (link, logit)), = fit_years(recs).items()
    assert year == 2012
    assert link.slope == pytest.approx(1.0, abs=0.05)
    assert link.intercept == pytest.approx(0.0, abs=0.03)
    assert logit.beta1 > 0
    c = as_coefficients(year, link, logit)
    assert c.gamma1 == link.slope and c.beta1 == logit.beta1


def test_sweep_rows_jitter_is_seeded(states):
    rep = declination_sweep(states[:20])
    a, b = sweep_rows(rep, seed=0), sweep_rows(rep, seed=0)
    assert a == b
    assert a != sweep_rows(rep, seed=1)
    for row in a:
        assert abs(row["n_jittered"] - row["n"]) <= 0.3
