"""Seeded synthetic elections for tests, demos and desk-scale sweeps."""

from __future__ import annotations

import numpy as np

from .model import District, Incumbency, StateYearRecord

# two-letter placeholder codes, AA..ZZ
_CODES = [a + b for a in "ABCDEFGHIJKLMNOPQRSTUVWXYZ" for b in "ABCDEFGHIJKLMNOPQRSTUVWXYZ"]


def random_shares(rng: np.random.Generator, n: int, lean: float | None = None,
                  offset: float | None = None, spread: float = 0.09) -> np.ndarray:
    """Sorted district shares drawn from two partisan clusters.

    Each district is democratic-leaning with probability ``lean`` (the
    statewide tilt) and then sits near 0.5 + offset or 0.5 - offset with
    Gaussian scatter ``spread``.  ``offset`` sets how polarized the state
    is; by default it varies by state over [0.08, 0.18].
    """
    if lean is None:
        lean = rng.normal(0.5, 0.05)
    if offset is None:
        offset = rng.uniform(0.08, 0.18)
    dem = rng.random(n) < lean
    raw = np.where(dem, 0.5 + offset, 0.5 - offset) + rng.normal(0.0, spread, size=n)
    return np.sort(np.clip(raw, 0.05, 0.95))


def synthetic_states(count: int, seed: int = 0, n_range: tuple[int, int] = (5, 20),
                     year: int = 2012, pres_noise: float | None = None) -> list[StateYearRecord]:
    """``count`` independent state-years with district counts drawn from ``n_range``.

    With ``pres_noise`` set, each district also gets a presidential share
    equal to its legislative share plus Gaussian noise of that scale.
    """
    rng = np.random.default_rng(seed)
    records = []
    for i in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        shares = random_shares(rng, n)
        if pres_noise is None:
            pres = [None] * n
        else:
            pres = np.clip(shares + rng.normal(0.0, pres_noise, size=n), 0.0, 1.0)
        districts = tuple(
            District(float(s), None if p is None else float(p),
                     Incumbency.DEM if s > 0.5 else Incumbency.REP, False, str(j + 1))
            for j, (s, p) in enumerate(zip(shares, pres)))
        records.append(StateYearRecord(_CODES[i % len(_CODES)], year + 2 * (i // len(_CODES)), districts))
    return records
