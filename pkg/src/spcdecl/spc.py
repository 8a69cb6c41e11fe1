"""Simulated packing and cracking (SPC).

A single district is flipped to the beneficiary party and the displaced
votes are moved into other districts, keeping the statewide vote fixed.
All four variants run through one kernel written for a republican
beneficiary; democratic variants reflect the election first
(share i -> 1 - share[N+1-i]) and reflect the result back.

Crack (republican beneficiary):

1. flip the democratic district won by the narrowest margin;
2. its new share is the OLS line through the republican districts'
   plot points, evaluated at the flipped abscissa, capped at the
   threshold (and floored at 0);
3. the displaced democratic share goes to republican districts at or
   below the threshold, evenly, re-spreading any overflow above the
   threshold until nothing is left.

Pack sends the displaced voters to districts the Democrats already win,
capped at 1.0 instead of the threshold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .ensemble import SweepCase, SweepReport, summarize
from .model import (
    TOL,
    ElectionDistribution,
    ElectionError,
    StateYearRecord,
    abscissae,
    seat_split,
)
from .regress import ols


class Beneficiary(str, enum.Enum):
    REP = "rep"
    DEM = "dem"


class Method(str, enum.Enum):
    PACK = "pack"
    CRACK = "crack"


class Strategy(str, enum.Enum):
    EVEN = "even"
    GREEDY = "greedy"


class SpcFailure(ElectionError):
    status = "Failed"


class NotEnoughRoom(SpcFailure):
    status = "NotEnoughRoom"


class ConstraintViolated(SpcFailure):
    status = "ConstraintViolated"


class NoFlippableDistrict(SpcFailure):
    status = "NoFlippableDistrict"


@dataclass(frozen=True)
class SpcRequest:
    beneficiary: Beneficiary = Beneficiary.REP
    method: Method = Method.CRACK
    threshold: float = 0.45
    strategy: Strategy = Strategy.EVEN
    min_recipients: int = 3

    def __post_init__(self):
        object.__setattr__(self, "beneficiary", Beneficiary(self.beneficiary))
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if not 0.0 < self.threshold < 0.5:
            raise ValueError(f"threshold must lie in (0, 0.5), got {self.threshold}")
        if self.min_recipients < 1:
            raise ValueError("min_recipients must be at least 1")

    @property
    def variant(self) -> str:
        return f"{self.method.value}-{self.beneficiary.value}"


def all_variants(threshold: float = 0.45, strategy: Strategy = Strategy.EVEN,
                 min_recipients: int = 3) -> list[SpcRequest]:
    return [SpcRequest(b, m, threshold, strategy, min_recipients)
            for b in Beneficiary for m in (Method.CRACK, Method.PACK)]


@dataclass(frozen=True)
class SpcOutcome:
    result: ElectionDistribution
    flipped_index: int
    regression_line: tuple[float, float]
    iterations: int
    predicted: float = float("nan")
    flipped_from: float = float("nan")
    flipped_to: float = float("nan")
    displaced: float = 0.0
    clamped: bool = False
    steps: tuple[tuple[int, float, int], ...] = field(default=())
    #: new shares aligned with the input districts, before re-sorting
    unsorted: tuple[float, ...] = field(default=())


def _kernel(y: np.ndarray, ids: np.ndarray, req: SpcRequest):
    """Republican-beneficiary SPC on sorted shares ``y``.

    ``ids`` carries each entry's index in the caller's ordering.  Returns
    the unsorted new shares plus trace data.
    """
    n = y.size
    dem = y > 0.5 + TOL
    ndem = int(dem.sum())
    nrep = n - ndem
    if ndem == 0:
        raise NoFlippableDistrict("beneficiary already holds every seat")
    if nrep == 0:
        raise ConstraintViolated("the beneficiary must win a seat before SPC")
    if ndem < 2:
        raise ConstraintViolated("the losing party must keep a seat after SPC")
    if nrep < 2:
        raise ConstraintViolated("regression needs at least two opposing districts")

    dem_idx = np.flatnonzero(dem)
    narrowest = dem_idx[y[dem_idx] == y[dem_idx].min()]
    flip = int(narrowest[np.argmin(ids[narrowest])])

    x = abscissae(n)
    rep_idx = np.flatnonzero(~dem)
    line = ols(x[rep_idx], y[rep_idx])
    predicted = float(line.intercept + line.slope * x[flip])
    new = max(0.0, min(req.threshold, predicted))
    displaced = float(y[flip] - new)

    if req.method is Method.CRACK:
        recipients = rep_idx
        cap = req.threshold
    else:
        recipients = dem_idx[dem_idx != flip]
        cap = 1.0
    if recipients.size < req.min_recipients:
        raise ConstraintViolated(
            f"{recipients.size} recipient districts, need {req.min_recipients}")

    vals = y.copy()
    vals[flip] = new
    # districts already above the cap never receive votes
    pool = recipients[vals[recipients] < cap - TOL]
    if req.strategy is Strategy.EVEN:
        iterations, steps = _spread_even(vals, pool, displaced, cap)
    else:
        iterations, steps = _spread_greedy(vals, pool, displaced, cap, ids)
    return vals, flip, (line.intercept, line.slope), predicted, new, displaced, iterations, steps


def _spread_even(vals, pool, excess, cap):
    iterations = 0
    steps = []
    while excess > TOL:
        pool = pool[vals[pool] < cap - TOL]
        if pool.size == 0:
            raise NotEnoughRoom(f"{excess:.6g} of vote share has nowhere to go")
        iterations += 1
        vals[pool] += excess / pool.size
        over = vals[pool] - cap
        hit = pool[over > 0]
        steps.append((pool.size, float(excess), int(hit.size)))
        excess = float(over[over > 0].sum())
        vals[hit] = cap
    return iterations, tuple(steps)


def _spread_greedy(vals, pool, excess, cap, ids):
    # most lopsided first; ties by caller index
    order = sorted(pool.tolist(), key=lambda i: (-abs(vals[i] - 0.5), ids[i]))
    iterations = 0
    steps = []
    for i in order:
        if excess <= TOL:
            break
        add = min(excess, cap - vals[i])
        if add <= 0:
            continue
        iterations += 1
        vals[i] += add
        steps.append((1, float(excess), int(add < excess)))
        excess -= add
    if excess > TOL:
        raise NotEnoughRoom(f"{excess:.6g} of vote share has nowhere to go")
    return iterations, tuple(steps)


def spc(d: ElectionDistribution, req: SpcRequest | None = None) -> SpcOutcome:
    """Flip one district to ``req.beneficiary`` by packing or cracking.

    ``flipped_index`` indexes ``d.shares``.  Regression line, predicted
    and new flipped values are reported in the original (unreflected)
    coordinates.
    """
    req = req or SpcRequest()
    y = d.as_array()
    n = y.size
    ids = np.arange(n)
    mirror = req.beneficiary is Beneficiary.DEM
    if mirror:
        y = 1.0 - y[::-1]
        ids = ids[::-1].copy()
    vals, flip, (a, b), predicted, new, displaced, iterations, steps = _kernel(y, ids, req)
    flipped_from = float(y[flip])
    clamped = predicted > req.threshold
    if mirror:
        vals = 1.0 - vals[::-1]
        a, b = 1.0 - a - b, b
        predicted, new, flipped_from = 1.0 - predicted, 1.0 - new, 1.0 - flipped_from
    vals = np.clip(vals, 0.0, 1.0)
    result = ElectionDistribution(tuple(float(v) for v in np.sort(vals, kind="stable")))
    return SpcOutcome(
        result=result,
        flipped_index=int(ids[flip]),
        regression_line=(float(a), float(b)),
        iterations=iterations,
        predicted=float(predicted),
        flipped_from=flipped_from,
        flipped_to=float(new),
        displaced=displaced,
        clamped=bool(clamped),
        steps=steps,
        unsorted=tuple(float(v) for v in vals),
    )


def eligible(rec: StateYearRecord, min_districts: int = 5) -> bool:
    """State-years that can enter a sweep: enough districts and a split delegation."""
    if rec.n < min_districts:
        return False
    dem, rep = seat_split(rec.distribution())
    return dem >= 1 and rep >= 1


def spc_sweep(records: Iterable[StateYearRecord], req_set: Sequence[SpcRequest],
              metric: Callable[[ElectionDistribution], float], *,
              min_districts: int = 5) -> SweepReport:
    """Apply every request to every eligible state-year and record metric changes.

    Failures are recorded with their status rather than raised.
    """
    cases = []
    for rec in records:
        if not eligible(rec, min_districts):
            continue
        before = rec.distribution()
        base = metric(before)
        for req in req_set:
            try:
                out = spc(before, req)
            except SpcFailure as exc:
                cases.append(SweepCase(rec.state, rec.year, rec.n, req.variant,
                                       req.beneficiary.value, req.threshold,
                                       req.strategy.value, None, exc.status))
                continue
            cases.append(SweepCase(rec.state, rec.year, rec.n, req.variant,
                                   req.beneficiary.value, req.threshold,
                                   req.strategy.value, metric(out.result) - base, "OK"))
    return summarize(cases)
