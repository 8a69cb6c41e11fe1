"""Declination angle and its seat-denominated scaling."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .model import (
    ElectionDistribution,
    ElectionError,
    PlotPoint,
    StateYearRecord,
    abscissae,
    seat_split,
)

#: Seats per unit of declination per district.
S_DECLINATION_SCALE = 5.0 / 12.0
#: Older, slightly larger scaling kept for comparison only.
HALF_SCALE = 0.5


class UndefinedDeclination(ElectionError, ValueError):
    """One party won every seat."""


@dataclass(frozen=True)
class DeclinationResult:
    delta: float
    s_declination: float
    n: int
    k: int
    f_point: PlotPoint
    g_point: PlotPoint
    h_point: PlotPoint


def declination_details(d: ElectionDistribution, scale: float = S_DECLINATION_SCALE) -> DeclinationResult:
    """Compute the declination together with the points F, G and H.

    F is the centroid of the plotted districts the Democrats lose, H the
    centroid of those they win and G = (k/N, 1/2).  The declination is
    2/pi times the counterclockwise angle from FG to GH; positive values
    favour Republicans.
    """
    n = d.n
    dem, k = seat_split(d)
    if k == 0 or dem == 0:
        raise UndefinedDeclination(f"declination undefined with {dem} of {n} seats democratic")
    y = d.as_array()
    x = abscissae(n)
    f = PlotPoint(float(x[:k].mean()), float(y[:k].mean()))
    h = PlotPoint(float(x[k:].mean()), float(y[k:].mean()))
    g = PlotPoint(k / n, 0.5)
    # horizontal runs are k/(2N) and (N-k)/(2N), both strictly positive
    theta_fg = math.atan((0.5 - f.y) / (k / (2 * n)))
    theta_gh = math.atan((h.y - 0.5) / ((n - k) / (2 * n)))
    delta = 2.0 / math.pi * (theta_gh - theta_fg)
    return DeclinationResult(delta, scale * n * delta, n, k, f, g, h)


def declination(d: ElectionDistribution) -> float:
    return declination_details(d).delta


def s_declination(d: ElectionDistribution, scale: float = S_DECLINATION_SCALE) -> float:
    """Estimated seats won through vote-distribution asymmetry, 5*N*delta/12."""
    return declination_details(d, scale).s_declination


def round_half_away(x: float) -> int:
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def state_seat_estimate(d: ElectionDistribution) -> int:
    """Rounded S-declination; a sweep contributes 0."""
    try:
        return round_half_away(s_declination(d))
    except UndefinedDeclination:
        return 0


def net_seats_by_year(records: Iterable[StateYearRecord]) -> dict[int, int]:
    """Sum rounded S-declinations over states for each year.

    Positive totals favour Republicans.
    """
    totals: dict[int, int] = defaultdict(int)
    for rec in records:
        totals[rec.year] += state_seat_estimate(rec.distribution())
    return {year: totals[year] for year in sorted(totals)}


def centroid_abscissae(n: int, k: int) -> tuple[float, float]:
    """Closed forms for the x-coordinates of F and H."""
    return k / (2 * n), (n + k) / (2 * n)

