"""Least squares, logistic regression and expected-seat models."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.special import expit

from .model import ElectionDistribution, ElectionError, YearCoefficients


class DegenerateDesign(ElectionError, ValueError):
    pass


class SingleClass(ElectionError, ValueError):
    pass


@dataclass(frozen=True)
class OlsFit:
    intercept: float
    slope: float
    r_squared: float
    rmse: float

    def __call__(self, x):
        return self.intercept + self.slope * np.asarray(x, dtype=float)


def ols(x: Sequence[float], y: Sequence[float]) -> OlsFit:
    """Simple linear regression of y on x.

    r^2 is taken to be 1 when y has zero variance; rmse divides by n.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError("x and y differ in length")
    if x.size < 2:
        raise DegenerateDesign("need at least two points")
    xc = x - x.mean()
    sxx = float(xc @ xc)
    if sxx <= 0.0 or np.ptp(x) == 0.0:
        raise DegenerateDesign("all x values are equal")
    yc = y - y.mean()
    slope = float(xc @ yc) / sxx
    intercept = float(y.mean() - slope * x.mean())
    resid = y - (intercept + slope * x)
    ss_res = float(resid @ resid)
    ss_tot = float(yc @ yc)
    r2 = 1.0 if ss_tot == 0.0 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return OlsFit(intercept, slope, r2, math.sqrt(ss_res / x.size))


def ols_points(points: Iterable[tuple[float, float]]) -> OlsFit:
    pts = list(points)
    if not pts:
        raise DegenerateDesign("need at least two points")
    x, y = zip(*pts)
    return ols(x, y)


@dataclass(frozen=True)
class LogisticFit:
    beta0: float
    beta1: float
    converged: bool
    iterations: int
    separable: bool = False


def log_likelihood(beta, p, won) -> float:
    p = np.asarray(p, dtype=float)
    y = np.asarray(won, dtype=float)
    eta = beta[0] + beta[1] * p
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


def score(beta, p, won) -> np.ndarray:
    """Gradient of the log-likelihood with respect to (beta0, beta1)."""
    p = np.asarray(p, dtype=float)
    r = np.asarray(won, dtype=float) - expit(beta[0] + beta[1] * p)
    return np.array([r.sum(), r @ p])


def fit_logistic(p, won, *, max_iter: int = 100, tol: float = 1e-8,
                 slope_guard: float = 100.0) -> LogisticFit:
    """Maximum-likelihood fit of P(dem win) = F(beta0 + beta1 * p).

    Newton-Raphson (equivalently IRLS) with step halving.  Iteration stops
    when the largest score component is below ``tol``.  If the slope
    magnitude passes ``slope_guard`` the data are treated as separable and
    the current iterate is returned with ``converged=False``.
    """
    p = np.asarray(p, dtype=float)
    y = np.asarray(won, dtype=float)
    if p.size == 0 or p.shape != y.shape:
        raise ValueError("p and won must be nonempty and equal length")
    if y.min() == y.max():
        raise SingleClass("all outcomes are identical")
    X = np.column_stack([np.ones_like(p), p])
    beta = np.zeros(2)
    ll = log_likelihood(beta, p, y)
    for it in range(1, max_iter + 1):
        mu = expit(X @ beta)
        grad = X.T @ (y - mu)
        if np.max(np.abs(grad)) <= tol:
            return LogisticFit(float(beta[0]), float(beta[1]), True, it - 1)
        w = mu * (1.0 - mu)
        hess = X.T @ (X * w[:, None])
        try:
            step = np.linalg.solve(hess, grad)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(hess, grad, rcond=None)[0]
        t = 1.0
        while True:
            cand = beta + t * step
            new_ll = log_likelihood(cand, p, y)
            if new_ll >= ll - 1e-12 or t < 1e-10:
                break
            t *= 0.5
        beta, ll = cand, new_ll
        if abs(beta[1]) > slope_guard:
            return LogisticFit(float(beta[0]), float(beta[1]), False, it, separable=True)
    grad = score(beta, p, y)
    return LogisticFit(float(beta[0]), float(beta[1]), bool(np.max(np.abs(grad)) <= tol), max_iter)


def logistic(x):
    return expit(x)


def expected_dem_seats(p, coeffs: YearCoefficients) -> float:
    """Sum over districts of F(beta0 + beta1 * p_i)."""
    p = np.asarray(p, dtype=float)
    return float(np.sum(expit(coeffs.beta0 + coeffs.beta1 * p)))


def link_g(share, coeffs: YearCoefficients):
    """Presidential share predicted from legislative share, gamma0 + gamma1 * l."""
    out = coeffs.gamma0 + coeffs.gamma1 * np.asarray(share, dtype=float)
    return float(out) if np.ndim(out) == 0 else out


def spc_sensitivity(before: ElectionDistribution, after: ElectionDistribution,
                    coeffs: YearCoefficients) -> float:
    """Expected change in republican seats, E(g(before)) - E(g(after)).

    Use ``coeffs.with_identity_link()`` for the p = l model.
    """
    if before.n != after.n:
        raise ValueError("before and after must have the same number of districts")
    return (expected_dem_seats(link_g(before.as_array(), coeffs), coeffs)
            - expected_dem_seats(link_g(after.as_array(), coeffs), coeffs))
