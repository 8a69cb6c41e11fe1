"""Containers and summary statistics for SPC sweeps."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from .regress import DegenerateDesign, OlsFit, ols

STATUSES = ("OK", "NotEnoughRoom", "ConstraintViolated", "NoFlippableDistrict")


@dataclass(frozen=True)
class SweepCase:
    state: str
    year: int
    n: int
    variant: str
    direction: str  # beneficiary: "rep" or "dem"
    threshold: float
    strategy: str
    delta_metric: Optional[float]
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "OK"

    def key(self):
        return (self.state, self.year, self.variant, self.strategy, self.threshold)


@dataclass(frozen=True)
class DirectionSummary:
    count_ok: int
    count_failed: dict
    mean: Optional[float]
    median: Optional[float]
    central_95_range: Optional[tuple[float, float]]
    ols_line: Optional[OlsFit]


@dataclass(frozen=True)
class SweepReport:
    cases: tuple[SweepCase, ...]
    summary: dict = field(default_factory=dict)

    def deltas(self, direction: str) -> np.ndarray:
        return np.array([c.delta_metric for c in self.cases
                         if c.ok and c.direction == direction], dtype=float)

    def ok_cases(self, direction: Optional[str] = None) -> list[SweepCase]:
        return [c for c in self.cases if c.ok and (direction is None or c.direction == direction)]

    def count(self, status: Optional[str] = None) -> int:
        return sum(1 for c in self.cases if status is None or c.status == status)

    def merge(self, other: "SweepReport") -> "SweepReport":
        return summarize(self.cases + other.cases)

    def summary_dict(self) -> dict:
        out = {}
        for direction, s in self.summary.items():
            d = asdict(s)
            if s.central_95_range is not None:
                d["central_95_range"] = list(s.central_95_range)
            out[direction] = d
        return out


def central_range(values, coverage: float = 0.95) -> tuple[float, float]:
    """Empirical central interval using linearly interpolated quantiles."""
    tail = (1.0 - coverage) / 2.0
    lo, hi = np.quantile(np.asarray(values, dtype=float), [tail, 1.0 - tail])
    return float(lo), float(hi)


def interval_overlap(a: tuple[float, float], b: tuple[float, float]) -> float:
    """Length of the intersection as a fraction of the shorter interval."""
    inter = min(a[1], b[1]) - max(a[0], b[0])
    shorter = min(a[1] - a[0], b[1] - b[0])
    if shorter <= 0:
        return 1.0 if inter >= 0 else 0.0
    return max(0.0, inter) / shorter


def _direction_summary(cases: list[SweepCase]) -> DirectionSummary:
    ok = [c for c in cases if c.ok]
    failed = {s: sum(1 for c in cases if c.status == s) for s in STATUSES[1:]}
    if not ok:
        return DirectionSummary(0, failed, None, None, None, None)
    delta = np.array([c.delta_metric for c in ok])
    n = np.array([c.n for c in ok], dtype=float)
    try:
        line = ols(n, delta)
    except DegenerateDesign:
        line = None
    return DirectionSummary(len(ok), failed, float(delta.mean()), float(np.median(delta)),
                            central_range(delta), line)


def summarize(cases: Iterable[SweepCase]) -> SweepReport:
    """Sort cases by key and compute per-direction statistics over OK cases."""
    ordered = tuple(sorted(cases, key=SweepCase.key))
    summary = {}
    for direction in ("rep", "dem"):
        summary[direction] = _direction_summary([c for c in ordered if c.direction == direction])
    return SweepReport(ordered, summary)
