"""Ensemble experiments: how seat estimators respond to SPC."""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .declination import s_declination
from .ensemble import SweepReport, interval_overlap, summarize
from .model import ElectionError, StateYearRecord, YearCoefficients, dem_wins
from .regress import LogisticFit, OlsFit, expected_dem_seats, fit_logistic, link_g, ols
from .spc import SpcRequest, Strategy, all_variants, spc_sweep


class EmptyEnsemble(ElectionError, ValueError):
    pass


class Link(str, enum.Enum):
    IDENTITY = "identity"
    FITTED = "fitted"


def _requests(thresholds: Sequence[float], strategies: Sequence[Strategy],
              min_recipients: int = 3) -> list[SpcRequest]:
    return [req for t in thresholds for s in strategies
            for req in all_variants(t, Strategy(s), min_recipients)]


def declination_sweep(records: Iterable[StateYearRecord], thresholds: Sequence[float] = (0.45,),
                      strategies: Sequence[Strategy] = (Strategy.EVEN,), *,
                      min_districts: int = 5) -> SweepReport:
    """Change in S-declination under every SPC variant."""
    return spc_sweep(records, _requests(thresholds, strategies), s_declination,
                     min_districts=min_districts)


def _coeff_map(coeffs) -> dict[int, YearCoefficients]:
    if isinstance(coeffs, Mapping):
        return dict(coeffs)
    return {c.year: c for c in coeffs}


def expected_rep_change_metric(coeffs: YearCoefficients):
    """Metric whose before/after difference is E(g(before)) - E(g(after))."""
    def metric(d):
        return -expected_dem_seats(link_g(d.as_array(), coeffs), coeffs)
    return metric


def sensitivity_sweep(records: Iterable[StateYearRecord], coeffs, link: Link = Link.IDENTITY,
                      thresholds: Sequence[float] = (0.45,),
                      strategies: Sequence[Strategy] = (Strategy.EVEN,), *,
                      min_districts: int = 5) -> SweepReport:
    """Expected change in republican seats under the logistic model, per SPC case.

    Years without coefficients are skipped.  ``Link.IDENTITY`` sets the
    presidential share equal to the legislative share.
    """
    table = _coeff_map(coeffs)
    link = Link(link)
    by_year: dict[int, list[StateYearRecord]] = {}
    for rec in records:
        by_year.setdefault(rec.year, []).append(rec)
    reqs = _requests(thresholds, strategies)
    cases = []
    for year in sorted(by_year):
        if year not in table:
            continue
        c = table[year] if link is Link.FITTED else table[year].with_identity_link()
        rep = spc_sweep(by_year[year], reqs, expected_rep_change_metric(c),
                        min_districts=min_districts)
        cases.extend(rep.cases)
    return summarize(cases)


def pres_vs_leg_fit(records: Iterable[StateYearRecord], years: Optional[Iterable[int]] = None
                    ) -> tuple[OlsFit, list[dict]]:
    """OLS of presidential share on legislative share, with points labelled by incumbency.

    Districts without a presidential share are ignored.
    """
    keep = None if years is None else set(years)
    pts = []
    for rec in records:
        if keep is not None and rec.year not in keep:
            continue
        for d in rec.districts:
            if d.pres_dem_share is None:
                continue
            pts.append({"state": rec.state, "year": rec.year, "legislative": d.dem_share,
                        "presidential": d.pres_dem_share, "incumbency": d.incumbency.value})
    fit = ols([p["legislative"] for p in pts], [p["presidential"] for p in pts])
    return fit, pts


def fit_year(records: Iterable[StateYearRecord]) -> tuple[OlsFit, LogisticFit]:
    """Link OLS (presidential on legislative) and logistic fit (dem win on presidential)."""
    leg, pres = [], []
    for rec in records:
        for d in rec.districts:
            if d.pres_dem_share is not None:
                leg.append(d.dem_share)
                pres.append(d.pres_dem_share)
    link = ols(leg, pres)
    logit = fit_logistic(pres, dem_wins(leg))
    return link, logit


def fit_years(records: Iterable[StateYearRecord], years: Optional[Iterable[int]] = None
              ) -> dict[int, tuple[OlsFit, LogisticFit]]:
    """Independent per-year fits, keyed by year."""
    keep = None if years is None else set(years)
    by_year: dict[int, list[StateYearRecord]] = {}
    for rec in records:
        if keep is None or rec.year in keep:
            by_year.setdefault(rec.year, []).append(rec)
    return {year: fit_year(by_year[year]) for year in sorted(by_year)}


def as_coefficients(year: int, link: OlsFit, logit: LogisticFit) -> YearCoefficients:
    return YearCoefficients(year, link.intercept, link.slope, logit.beta0, logit.beta1)


def median_abs_change(report: SweepReport) -> float:
    vals = [abs(c.delta_metric) for c in report.ok_cases()]
    if not vals:
        raise EmptyEnsemble("no successful SPC cases")
    return float(np.median(vals))


def year_2012_sensitivity_check(records: Iterable[StateYearRecord], coeffs,
                                link: Link = Link.FITTED, year: int = 2012) -> float:
    """Median absolute change in expected seats over successful SPC cases in one year."""
    recs = [r for r in records if r.year == year]
    return median_abs_change(sensitivity_sweep(recs, coeffs, link))


def ranges_similar(a: SweepReport, b: SweepReport, min_overlap: float = 0.5) -> bool:
    """Central 95% ranges overlap by at least ``min_overlap`` in both directions."""
    for direction in ("rep", "dem"):
        ra = a.summary[direction].central_95_range
        rb = b.summary[direction].central_95_range
        if ra is None or rb is None or interval_overlap(ra, rb) < min_overlap:
            return False
    return True


def sweep_rows(report: SweepReport, seed: int = 0, jitter: float = 0.3) -> list[dict]:
    """Flat rows for export; ``n_jittered`` is for plotting only."""
    rng = np.random.default_rng(seed)
    offsets = rng.uniform(-jitter, jitter, size=len(report.cases))
    rows = []
    for c, off in zip(report.cases, offsets):
        rows.append({
            "state": c.state, "year": c.year, "n": c.n, "variant": c.variant,
            "direction": c.direction, "threshold": c.threshold, "strategy": c.strategy,
            "delta_metric": c.delta_metric, "status": c.status,
            "n_jittered": float(c.n + off),
        })
    return rows
