"""Calendar-aligned daily series and the operations shared by every stage.

A :class:`DailySeries` is one region's gap-free run of non-negative daily
values. Dates are plain ``datetime.date``; day ``i`` of a series falls on
``start + i`` days. All types here are immutable and safe to share.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import date, timedelta

import numpy as np

from .errors import EmptyOverlapError, NonPositivePopulationError
from .regions import Region, region_sort_key

ONE_DAY = timedelta(days=1)


class SeriesKind(enum.Enum):
    MOBILITY = "mobility"
    HOSPITALIZATIONS = "hospitalizations"


@dataclass(frozen=True)
class DateRange:
    """Inclusive calendar interval."""

    start: date
    end: date

    def __post_init__(self):
        if self.end < self.start:
            raise ValueError(f"range end {self.end} precedes start {self.start}")

    @property
    def n_days(self) -> int:
        return (self.end - self.start).days + 1

    def __contains__(self, day: date) -> bool:
        return self.start <= day <= self.end

    def dates(self):
        for offset in range(self.n_days):
            yield self.start + offset * ONE_DAY


@dataclass(frozen=True, eq=False)
class DailySeries:
    """One region's daily values over a contiguous date range."""

    region: Region
    kind: SeriesKind
    start: date
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("series needs a one-dimensional, non-empty value vector")
        if not np.all(np.isfinite(values)):
            raise ValueError("series values must be finite")
        if np.any(values < 0):
            raise ValueError("series values must be non-negative")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DailySeries):
            return NotImplemented
        return (
            self.region is other.region
            and self.kind is other.kind
            and self.start == other.start
            and np.array_equal(self.values, other.values)
        )

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def end(self) -> date:
        return self.start + (len(self) - 1) * ONE_DAY

    @property
    def range(self) -> DateRange:
        return DateRange(self.start, self.end)

    def date_at(self, index: int) -> date:
        return self.start + index * ONE_DAY

    def index_of(self, day: date) -> int:
        offset = (day - self.start).days
        if not 0 <= offset < len(self):
            raise KeyError(f"{day.isoformat()} outside series range")
        return offset

    def value_on(self, day: date) -> float:
        return float(self.values[self.index_of(day)])

    def slice(self, span: DateRange) -> "DailySeries":
        lo = self.index_of(span.start)
        hi = self.index_of(span.end)
        return DailySeries(self.region, self.kind, span.start, self.values[lo : hi + 1])


def align(a: DailySeries, b: DailySeries) -> tuple[DailySeries, DailySeries]:
    """Trim both series to their maximal shared date range.

    Raises EmptyOverlapError when the ranges are disjoint. Aligning
    already-aligned series returns equal series (idempotent).
    """
    start = max(a.start, b.start)
    end = min(a.end, b.end)
    if end < start:
        raise EmptyOverlapError(
            f"no shared dates: {a.start}..{a.end} vs {b.start}..{b.end}"
        )
    shared = DateRange(start, end)
    return a.slice(shared), b.slice(shared)


def monthly_prevalence(cases: DailySeries, population: float) -> list[tuple[date, float]]:
    """Per-calendar-month case counts divided by a fixed population.

    Months only partially covered by the series contribute the days they do
    cover. Each month is keyed by its first day. Output is ordered by month.
    """
    if population <= 0:
        raise NonPositivePopulationError(f"population must be > 0, got {population}")
    totals: dict[date, float] = {}
    day = cases.start
    for value in cases.values:
        month = day.replace(day=1)
        totals[month] = totals.get(month, 0.0) + float(value)
        day += ONE_DAY
    return [(month, totals[month] / population) for month in sorted(totals)]


def statewide_sum(by_region: dict[Region, DailySeries]) -> DailySeries:
    """Element-wise sum of identically-ranged regional series, as STATEWIDE."""
    regional = [by_region[r] for r in sorted(by_region, key=region_sort_key) if r.is_regional]
    if not regional:
        raise ValueError("no regional series to aggregate")
    first = regional[0]
    for series in regional[1:]:
        if series.start != first.start or len(series) != len(first):
            raise ValueError("regional series must cover the same date range")
    total = np.sum([s.values for s in regional], axis=0)
    return DailySeries(Region.STATEWIDE, first.kind, first.start, total)
