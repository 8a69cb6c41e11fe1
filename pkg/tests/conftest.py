import os

import pytest

from spcdecl.model import validate_distribution

EXAMPLE_1 = (0.37, 0.40, 0.43, 0.46, 0.60, 0.63, 0.66, 0.69, 0.72, 0.75)

# Historical House returns in the package CSV schema, if available.
HISTORICAL_ENV = "SPCDECL_HISTORICAL_CSV"

_criteria = []


def record_criterion(number, passed, detail=""):
    _criteria.append((number, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(_criteria, key=lambda c: (c[0], c[2])):
        status = {True: "PASS", False: "FAIL", None: "SKIPPED-dataset"}[passed]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {detail}")


@pytest.fixture
def example1():
    return validate_distribution(EXAMPLE_1)


@pytest.fixture(scope="session")
def historical_path():
    path = os.environ.get(HISTORICAL_ENV)
    if not path or not os.path.exists(path):
        return None
    return path


def write_csv(path, rows):
    """rows: (state, year, district, dem, pres, incumbency, imputed)"""
    with open(path, "w") as fp:
        fp.write("state,year,district,dem_share,pres_dem_share,incumbency,imputed\n")
        for r in rows:
            fp.write(",".join("" if v is None else str(v) for v in r) + "\n")
    return path
