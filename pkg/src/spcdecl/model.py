"""Domain types shared across the package.

An election is a weakly increasing sequence of democratic two-party vote
fractions, one per district.  Every district is assumed to cast the same
number of votes, so the statewide democratic share is the plain mean.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

#: Absolute tolerance used for every comparison against 0.5 or a threshold.
TOL = 1e-12


class ElectionError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(ElectionError, ValueError):
    pass


class ValueOutOfRange(ElectionError, ValueError):
    def __init__(self, index: int, value: float, line: Optional[int] = None):
        self.index = index
        self.value = value
        self.line = line
        where = f"line {line}" if line is not None else f"index {index}"
        super().__init__(f"share {value!r} at {where} is outside [0, 1]")


@dataclass(frozen=True)
class ElectionDistribution:
    """Sorted democratic vote shares for one state-year."""

    shares: tuple[float, ...]

    def __post_init__(self):
        if len(self.shares) == 0:
            raise EmptyInput("an election needs at least one district")
        for i, s in enumerate(self.shares):
            if not 0.0 <= s <= 1.0:
                raise ValueOutOfRange(i, s)
        for a, b in zip(self.shares, self.shares[1:]):
            if a > b:
                raise ValueError("shares must be weakly increasing; use validate_distribution")

    def __len__(self) -> int:
        return len(self.shares)

    @property
    def n(self) -> int:
        return len(self.shares)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.shares, dtype=float)

    def mean(self) -> float:
        return float(np.mean(self.shares))

    def reflected(self) -> "ElectionDistribution":
        """Party-swapped election: share i becomes 1 - share[N+1-i]."""
        return ElectionDistribution(tuple(1.0 - s for s in reversed(self.shares)))


@dataclass(frozen=True)
class PlotPoint:
    x: float
    y: float


def plot_points(d: ElectionDistribution) -> list[PlotPoint]:
    """Points (i/N - 1/(2N), share_i) for districts i = 1..N."""
    n = d.n
    return [PlotPoint((i + 0.5) / n, s) for i, s in enumerate(d.shares)]


def abscissae(n: int) -> np.ndarray:
    return (np.arange(n) + 0.5) / n


class Incumbency(str, enum.Enum):
    DEM = "D"
    REP = "R"
    OPEN = "O"  # no incumbent, or incumbents from both parties


@dataclass(frozen=True)
class District:
    dem_share: float
    pres_dem_share: Optional[float] = None
    incumbency: Incumbency = Incumbency.OPEN
    imputed: bool = False
    district: Optional[str] = None


@dataclass(frozen=True)
class StateYearRecord:
    state: str
    year: int
    districts: tuple[District, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.districts) == 0:
            raise EmptyInput(f"{self.state} {self.year} has no districts")
        if self.year % 2:
            raise ValueError(f"House election years are even, got {self.year}")
        for i, dist in enumerate(self.districts):
            if not 0.0 <= dist.dem_share <= 1.0:
                raise ValueOutOfRange(i, dist.dem_share)
            p = dist.pres_dem_share
            if p is not None and not 0.0 <= p <= 1.0:
                raise ValueOutOfRange(i, p)

    @property
    def n(self) -> int:
        return len(self.districts)

    def distribution(self) -> ElectionDistribution:
        return validate_distribution([d.dem_share for d in self.districts])

    def has_presidential(self) -> bool:
        return all(d.pres_dem_share is not None for d in self.districts)


@dataclass(frozen=True)
class YearCoefficients:
    """Per-year linear link (gamma) and logistic (beta) coefficients."""

    year: int
    gamma0: float
    gamma1: float
    beta0: float
    beta1: float

    def __post_init__(self):
        if not (np.isfinite(self.gamma1) and np.isfinite(self.beta1)):
            raise ValueError("coefficient slopes must be finite")

    def with_identity_link(self) -> "YearCoefficients":
        return YearCoefficients(self.year, 0.0, 1.0, self.beta0, self.beta1)


def validate_distribution(raw: Iterable[float]) -> ElectionDistribution:
    """Check bounds and sort ascending.

    >>> validate_distribution([0.6, 0.4]).shares
    (0.4, 0.6)
    """
    values = [float(v) for v in raw]
    if not values:
        raise EmptyInput("an election needs at least one district")
    for i, v in enumerate(values):
        if not 0.0 <= v <= 1.0:
            raise ValueOutOfRange(i, v)
    return ElectionDistribution(tuple(sorted(values)))


def dem_wins(shares: Sequence[float] | np.ndarray) -> np.ndarray:
    # a tie is not a win
    return np.asarray(shares, dtype=float) > 0.5 + TOL


def seat_split(d: ElectionDistribution) -> tuple[int, int]:
    """Return (democratic seats, republican seats)."""
    dem = int(np.count_nonzero(dem_wins(d.shares)))
    return dem, d.n - dem
