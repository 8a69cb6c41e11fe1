"""Declination, S-declination and simulated packing and cracking for district-level election returns."""

__version__ = "0.1.0"

from .model import (
    ElectionDistribution,
    StateYearRecord,
    District,
    Incumbency,
    YearCoefficients,
    validate_distribution,
    seat_split,
)
from .declination import (
    declination,
    declination_details,
    s_declination,
    state_seat_estimate,
    net_seats_by_year,
    UndefinedDeclination,
)
from .spc import SpcRequest, SpcOutcome, Beneficiary, Method, Strategy, spc, spc_sweep
from .regress import ols, fit_logistic, expected_dem_seats, link_g, spc_sensitivity
from .ingest import load_elections, read_elections, load_coefficients, excluded_small_states
from .analysis import Link, declination_sweep, sensitivity_sweep, pres_vs_leg_fit

__all__ = [
    "ElectionDistribution", "StateYearRecord", "District", "Incumbency", "YearCoefficients",
    "validate_distribution", "seat_split",
    "declination", "declination_details", "s_declination", "state_seat_estimate",
    "net_seats_by_year", "UndefinedDeclination",
    "SpcRequest", "SpcOutcome", "Beneficiary", "Method", "Strategy", "spc", "spc_sweep",
    "ols", "fit_logistic", "expected_dem_seats", "link_g", "spc_sensitivity",
    "load_elections", "read_elections", "load_coefficients", "excluded_small_states",
    "Link", "declination_sweep", "sensitivity_sweep", "pres_vs_leg_fit",
]
