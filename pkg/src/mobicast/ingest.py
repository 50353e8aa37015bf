"""CSV ingestion: trip records, hospitalization reports, and regional aggregation.

File formats (all UTF-8, RFC 4180 quoting, ISO 8601 dates):

* trips:              ``date,origin_zip,dest_zip,count``
* zip map:            ``zip,county``
* hospitalizations:   ``date,region,acute,icu``      (region I..V)
* aggregated mobility:``date,region,mobility``       (region I..V)
* population:         ``region,population``          (one row per region I..V)

Aggregation is strict: a date inside the requested range with no record is an
error, never a silent zero-fill.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from datetime import date
from pathlib import Path
from typing import Iterable, Mapping, Optional, TextIO

import numpy as np

from .errors import (
    DuplicateDayError,
    MalformedRowError,
    MissingDayError,
    UnmappedZipError,
)
from .regions import (
    FIVE_REGIONS,
    County,
    Region,
    lookup_county,
    normalize_county_name,
    region_sort_key,
)
from .series import DailySeries, DateRange, SeriesKind, statewide_sum

_ZIP_RE = re.compile(r"^[0-9]{5}$")


@dataclass(frozen=True)
class TripRecord:
    """One observed origin-destination trip volume for a single day."""

    date: date
    origin_zip: str
    dest_zip: str
    count: int


@dataclass(frozen=True)
class HospitalizationRecord:
    """One region's daily acute and ICU census."""

    date: date
    region: Region
    acute: int
    icu: int

    @property
    def total(self) -> int:
        return self.acute + self.icu


ZipCountyMap = Mapping[str, str]


def _open_reader(stream: TextIO, expected_header: list[str]):
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRowError(1, f"missing header {','.join(expected_header)}") from None
    if [h.strip() for h in header] != expected_header:
        raise MalformedRowError(
            1, f"expected header {','.join(expected_header)!r}, got {','.join(header)!r}"
        )
    return reader


def _parse_date(text: str, line: int) -> date:
    try:
        return date.fromisoformat(text.strip())
    except ValueError:
        raise MalformedRowError(line, f"bad date {text!r}") from None


def _parse_zip(text: str, line: int) -> str:
    token = text.strip()
    if not _ZIP_RE.match(token):
        raise MalformedRowError(line, f"zip must be 5 ASCII digits, got {text!r}")
    return token


def _parse_nonneg_int(text: str, line: int, field: str) -> int:
    try:
        value = int(text.strip())
    except ValueError:
        raise MalformedRowError(line, f"bad {field} {text!r}") from None
    if value < 0:
        raise MalformedRowError(line, f"{field} must be >= 0, got {value}")
    return value


def parse_trips(stream: TextIO) -> list[TripRecord]:
    """Parse a trips CSV; malformed rows report their 1-based line number."""
    reader = _open_reader(stream, ["date", "origin_zip", "dest_zip", "count"])
    records = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != 4:
            raise MalformedRowError(line, f"expected 4 fields, got {len(row)}")
        records.append(
            TripRecord(
                date=_parse_date(row[0], line),
                origin_zip=_parse_zip(row[1], line),
                dest_zip=_parse_zip(row[2], line),
                count=_parse_nonneg_int(row[3], line, "count"),
            )
        )
    return records


def parse_zip_map(stream: TextIO) -> dict[str, str]:
    """Parse the zip-to-county map. Each zip may appear only once."""
    reader = _open_reader(stream, ["zip", "county"])
    mapping: dict[str, str] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != 2:
            raise MalformedRowError(line, f"expected 2 fields, got {len(row)}")
        zip_code = _parse_zip(row[0], line)
        county = row[1].strip()
        if not county:
            raise MalformedRowError(line, "empty county name")
        if zip_code in mapping:
            raise MalformedRowError(line, f"duplicate zip {zip_code}")
        mapping[zip_code] = county
    return mapping


def parse_hospitalizations(stream: TextIO) -> list[HospitalizationRecord]:
    reader = _open_reader(stream, ["date", "region", "acute", "icu"])
    records = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != 4:
            raise MalformedRowError(line, f"expected 4 fields, got {len(row)}")
        try:
            region = Region.parse(row[1])
        except ValueError as err:
            raise MalformedRowError(line, str(err)) from None
        if not region.is_regional:
            raise MalformedRowError(line, "region must be one of I..V")
        records.append(
            HospitalizationRecord(
                date=_parse_date(row[0], line),
                region=region,
                acute=_parse_nonneg_int(row[2], line, "acute"),
                icu=_parse_nonneg_int(row[3], line, "icu"),
            )
        )
    return records


def parse_population(stream: TextIO) -> dict[Region, int]:
    """Parse the population file; all five regions required, positive counts."""
    reader = _open_reader(stream, ["region", "population"])
    populations: dict[Region, int] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != 2:
            raise MalformedRowError(line, f"expected 2 fields, got {len(row)}")
        try:
            region = Region.parse(row[0])
        except ValueError as err:
            raise MalformedRowError(line, str(err)) from None
        if not region.is_regional:
            raise MalformedRowError(line, "region must be one of I..V")
        if region in populations:
            raise MalformedRowError(line, f"duplicate region {region.value}")
        value = _parse_nonneg_int(row[1], line, "population")
        if value == 0:
            raise MalformedRowError(line, "population must be positive")
        populations[region] = value
    missing = [r.value for r in FIVE_REGIONS if r not in populations]
    if missing:
        raise MalformedRowError(1, "missing population for region(s): " + ", ".join(missing))
    return populations


def classify_inflow(trip: TripRecord, zip_map: ZipCountyMap) -> Optional[County]:
    """Destination county when a trip crosses county lines, else None.

    Trips staying inside one county are not inflow. Destinations outside the
    24 Maryland jurisdictions belong to no region and also yield None; their
    zips must still be present in the map.
    """
    missing = [z for z in (trip.origin_zip, trip.dest_zip) if z not in zip_map]
    if missing:
        raise UnmappedZipError(missing)
    origin = normalize_county_name(zip_map[trip.origin_zip])
    dest = normalize_county_name(zip_map[trip.dest_zip])
    if origin == dest:
        return None
    try:
        return lookup_county(dest)
    except Exception:
        return None


def _empty_frames(span: DateRange) -> dict[Region, np.ndarray]:
    return {region: np.zeros(span.n_days) for region in FIVE_REGIONS}


def _to_series(
    frames: dict[Region, np.ndarray], span: DateRange, kind: SeriesKind
) -> dict[Region, DailySeries]:
    out = {
        region: DailySeries(region, kind, span.start, values)
        for region, values in frames.items()
    }
    out[Region.STATEWIDE] = statewide_sum(out)
    return out


def aggregate_mobility(
    trips: Iterable[TripRecord], zip_map: ZipCountyMap, span: DateRange
) -> dict[Region, DailySeries]:
    """Sum cross-county inflow per region per day over ``span``.

    Days without trips are zero. Trips dated outside the range are ignored.
    Raises UnmappedZipError listing every zip the map lacks.
    """
    frames = _empty_frames(span)
    unmapped: set[str] = set()
    for trip in trips:
        if trip.date not in span:
            continue
        try:
            county = classify_inflow(trip, zip_map)
        except UnmappedZipError as err:
            unmapped.update(err.zips)
            continue
        if county is None:
            continue
        frames[county.region][(trip.date - span.start).days] += trip.count
    if unmapped:
        raise UnmappedZipError(unmapped)
    return _to_series(frames, span, SeriesKind.MOBILITY)


def aggregate_hospitalizations(
    records: Iterable[HospitalizationRecord], span: DateRange
) -> dict[Region, DailySeries]:
    """Daily acute+ICU totals per region; every (region, day) in range required."""
    frames = _empty_frames(span)
    seen: set[tuple[Region, date]] = set()
    for record in records:
        if record.date not in span:
            continue
        key = (record.region, record.date)
        if key in seen:
            raise DuplicateDayError(
                f"duplicate record for region {record.region.value} on {record.date}"
            )
        seen.add(key)
        frames[record.region][(record.date - span.start).days] = record.total
    for region in FIVE_REGIONS:
        for day in span.dates():
            if (region, day) not in seen:
                raise MissingDayError(region, day)
    return _to_series(frames, span, SeriesKind.HOSPITALIZATIONS)


def read_mobility_csv(stream: TextIO, span: DateRange) -> dict[Region, DailySeries]:
    """Read pre-aggregated per-region mobility.

    Coverage must be complete over ``span`` for every region that appears in
    the file; the statewide series sums whichever regions are present.
    """
    reader = _open_reader(stream, ["date", "region", "mobility"])
    cells: dict[tuple[Region, date], float] = {}
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != 3:
            raise MalformedRowError(line, f"expected 3 fields, got {len(row)}")
        day = _parse_date(row[0], line)
        try:
            region = Region.parse(row[1])
        except ValueError as err:
            raise MalformedRowError(line, str(err)) from None
        if not region.is_regional:
            raise MalformedRowError(line, "region must be one of I..V")
        try:
            value = float(row[2])
        except ValueError:
            raise MalformedRowError(line, f"bad mobility value {row[2]!r}") from None
        if value < 0:
            raise MalformedRowError(line, f"mobility must be >= 0, got {value}")
        if day not in span:
            continue
        key = (region, day)
        if key in cells:
            raise DuplicateDayError(f"duplicate mobility for region {region.value} on {day}")
        cells[key] = value
    present = sorted({region for region, _ in cells}, key=region_sort_key)
    if not present:
        raise MalformedRowError(1, "no mobility rows inside the requested range")
    frames: dict[Region, np.ndarray] = {}
    for region in present:
        values = np.zeros(span.n_days)
        for offset, day in enumerate(span.dates()):
            if (region, day) not in cells:
                raise MissingDayError(region, day)
            values[offset] = cells[(region, day)]
        frames[region] = values
    return _to_series(frames, span, SeriesKind.MOBILITY)


def _open_out(path: Path):
    return open(path, "w", newline="", encoding="utf-8")


def write_mobility_csv(by_region: Mapping[Region, DailySeries], path: Path) -> None:
    """Write the aggregated-mobility form; the statewide series is derived, not stored."""
    with _open_out(path) as handle:
        writer = csv.writer(handle)
        writer.writerow(["date", "region", "mobility"])
        for region in sorted(by_region, key=region_sort_key):
            if not region.is_regional:
                continue
            series = by_region[region]
            for offset, value in enumerate(series.values):
                writer.writerow([series.date_at(offset).isoformat(), region.value, repr(float(value))])


def write_hospitalizations_csv(records: Iterable[HospitalizationRecord], path: Path) -> None:
    ordered = sorted(records, key=lambda r: (region_sort_key(r.region), r.date))
    with _open_out(path) as handle:
        writer = csv.writer(handle)
        writer.writerow(["date", "region", "acute", "icu"])
        for record in ordered:
            writer.writerow(
                [record.date.isoformat(), record.region.value, record.acute, record.icu]
            )


def write_population_csv(populations: Mapping[Region, int], path: Path) -> None:
    with _open_out(path) as handle:
        writer = csv.writer(handle)
        writer.writerow(["region", "population"])
        for region in sorted(populations, key=region_sort_key):
            writer.writerow([region.value, populations[region]])


def read_text(path: Path) -> io.StringIO:
    """Load a file for the parse_* helpers; newline handling left to csv."""
    return io.StringIO(Path(path).read_text(encoding="utf-8"))
