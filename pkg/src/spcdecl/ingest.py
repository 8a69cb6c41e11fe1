"""Reading and writing election data, coefficient tables and reports.

Election CSV (UTF-8, header required)::

    state,year,district,dem_share,pres_dem_share,incumbency,imputed

``pres_dem_share`` may be empty, ``incumbency`` is one of D, R, O and
``imputed`` is 0 or 1.  Coefficient CSV::

    year,gamma0,gamma1,beta0,beta1
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional, Sequence

from .model import (
    District,
    ElectionError,
    Incumbency,
    StateYearRecord,
    ValueOutOfRange,
    YearCoefficients,
)

ELECTION_COLUMNS = ("state", "year", "district", "dem_share", "pres_dem_share",
                    "incumbency", "imputed")
COEFFICIENT_COLUMNS = ("year", "gamma0", "gamma1", "beta0", "beta1")


class ParseError(ElectionError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class SchemaError(ElectionError, ValueError):
    pass


class InconsistentGroup(ElectionError, ValueError):
    pass


@dataclass(frozen=True)
class DatasetManifest:
    source: str
    row_count: int
    years: tuple[int, ...]
    states: tuple[str, ...]
    imputed: int
    uncontested_dropped: int
    missing_presidential_dropped: int = 0

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "row_count": self.row_count,
            "years": list(self.years),
            "states": list(self.states),
            "imputed": self.imputed,
            "uncontested_dropped": self.uncontested_dropped,
            "missing_presidential_dropped": self.missing_presidential_dropped,
        }


def _read_rows(fp, columns: Sequence[str]):
    reader = csv.reader(fp)
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(1, "no header") from None
    header = [h.strip() for h in header]
    missing = [c for c in columns if c not in header]
    if missing:
        raise SchemaError(f"missing column(s): {', '.join(missing)}")
    pos = {c: header.index(c) for c in columns}
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(line, f"expected {len(header)} fields, got {len(row)}")
        yield line, {c: row[pos[c]].strip() for c in columns}


def _share(text: str, line: int, column: str, index: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(line, f"{column} is not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise ValueOutOfRange(index, value, line=line)
    return value


def read_elections(path, *, contested_only: bool = False,
                   require_presidential: bool = False
                   ) -> tuple[list[StateYearRecord], DatasetManifest]:
    """Load an election CSV into per-state-year records plus a manifest.

    ``contested_only`` drops imputed rows and rows at exactly 0 or 1;
    ``require_presidential`` drops rows with no presidential share.
    State-years left without districts are omitted.
    """
    groups: dict[tuple[str, int], list[District]] = defaultdict(list)
    seen: set[tuple[str, int, str]] = set()
    imputed = dropped = no_pres = 0
    with open(path, newline="", encoding="utf-8") as fp:
        for line, row in _read_rows(fp, ELECTION_COLUMNS):
            state = row["state"].upper()
            if len(state) != 2 or not state.isalpha():
                raise ParseError(line, f"bad state code {row['state']!r}")
            try:
                year = int(row["year"])
            except ValueError:
                raise ParseError(line, f"bad year {row['year']!r}") from None
            if year % 2:
                raise ParseError(line, f"year {year} is odd")
            key = (state, year, row["district"])
            if key in seen:
                raise InconsistentGroup(f"line {line}: duplicate district {state} {year} {row['district']}")
            seen.add(key)
            index = len(groups[(state, year)])
            dem = _share(row["dem_share"], line, "dem_share", index)
            pres = (_share(row["pres_dem_share"], line, "pres_dem_share", index)
                    if row["pres_dem_share"] else None)
            try:
                inc = Incumbency(row["incumbency"].upper() or "O")
            except ValueError:
                raise ParseError(line, f"incumbency must be D, R or O, got {row['incumbency']!r}") from None
            if row["imputed"] not in ("0", "1"):
                raise ParseError(line, f"imputed must be 0 or 1, got {row['imputed']!r}")
            was_imputed = row["imputed"] == "1"
            imputed += was_imputed
            if contested_only and (was_imputed or dem in (0.0, 1.0)):
                dropped += 1
                continue
            if require_presidential and pres is None:
                no_pres += 1
                continue
            groups[(state, year)].append(District(dem, pres, inc, was_imputed, row["district"]))

    records = []
    for (state, year) in sorted(groups, key=lambda k: (k[1], k[0])):
        districts = sorted(groups[(state, year)], key=lambda d: d.dem_share)
        if districts:
            records.append(StateYearRecord(state, year, tuple(districts)))
    manifest = DatasetManifest(
        source=os.fspath(path),
        row_count=sum(r.n for r in records),
        years=tuple(sorted({r.year for r in records})),
        states=tuple(sorted({r.state for r in records})),
        imputed=imputed,
        uncontested_dropped=dropped,
        missing_presidential_dropped=no_pres,
    )
    return records, manifest


def load_elections(path, *, contested_only: bool = False,
                   require_presidential: bool = False) -> list[StateYearRecord]:
    return read_elections(path, contested_only=contested_only,
                          require_presidential=require_presidential)[0]


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else repr(float(x))


def write_elections(records: Iterable[StateYearRecord], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fp:
        w = csv.writer(fp, lineterminator="\n")
        w.writerow(ELECTION_COLUMNS)
        for rec in records:
            for i, d in enumerate(rec.districts, start=1):
                w.writerow([rec.state, rec.year, d.district if d.district is not None else i,
                            _fmt(d.dem_share), _fmt(d.pres_dem_share),
                            d.incumbency.value, int(d.imputed)])


def excluded_small_states(records: Iterable[StateYearRecord], max_districts: int = 4) -> list[str]:
    """States whose largest delegation in ``records`` has at most ``max_districts`` seats."""
    size: dict[str, int] = {}
    for rec in records:
        size[rec.state] = max(size.get(rec.state, 0), rec.n)
    return sorted(s for s, n in size.items() if n <= max_districts)


def load_coefficients(path=None) -> dict[int, YearCoefficients]:
    """Per-year coefficients; the bundled 1972-2012 table when ``path`` is None."""
    if path is None:
        text = resources.files("spcdecl").joinpath("data/table2.csv").read_text(encoding="utf-8")
        fp = io.StringIO(text)
    else:
        fp = open(path, newline="", encoding="utf-8")
    out = {}
    with fp:
        for line, row in _read_rows(fp, COEFFICIENT_COLUMNS):
            try:
                year = int(row["year"])
                vals = [float(row[c]) for c in COEFFICIENT_COLUMNS[1:]]
            except ValueError as exc:
                raise ParseError(line, str(exc)) from None
            if year in out:
                raise InconsistentGroup(f"line {line}: duplicate year {year}")
            out[year] = YearCoefficients(year, *vals)
    return out


def write_coefficients(coeffs: Iterable[YearCoefficients], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fp:
        w = csv.writer(fp, lineterminator="\n")
        w.writerow(COEFFICIENT_COLUMNS)
        for c in sorted(coeffs, key=lambda c: c.year):
            w.writerow([c.year, repr(c.gamma0), repr(c.gamma1), repr(c.beta0), repr(c.beta1)])


def report_json(command: str, options: dict, manifest: Optional[DatasetManifest],
                rows: list[dict], **extra) -> str:
    """Serialize a report as ``{"meta": ..., "rows": [...]}`` with stable key order."""
    meta = {"command": command, "options": options,
            "dataset": manifest.as_dict() if manifest is not None else None}
    meta.update(extra)
    return json.dumps({"meta": meta, "rows": rows}, indent=2, allow_nan=False) + "\n"


def rows_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
