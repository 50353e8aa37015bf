"""Exception hierarchy shared across the package.

Every domain failure derives from :class:`MobicastError` so callers (and the
CLI) can catch one type and still report the precise failure class.
"""

from __future__ import annotations


class MobicastError(Exception):
    """Base class for all domain errors raised by this package."""


class UnknownCountyError(MobicastError):
    """County name does not match any Maryland jurisdiction."""


class EmptyOverlapError(MobicastError):
    """Two daily series share no dates."""


class NonPositivePopulationError(MobicastError):
    """Population must be strictly positive."""


class MalformedRowError(MobicastError):
    """A CSV row failed to parse; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnmappedZipError(MobicastError):
    """One or more zip codes are absent from the zip-to-county map."""

    def __init__(self, zips):
        zips = sorted(set(zips))
        super().__init__("unmapped zip(s): " + ", ".join(zips))
        self.zips = zips


class DuplicateDayError(MobicastError):
    """More than one record for the same (region, date)."""


class MissingDayError(MobicastError):
    """A (region, date) inside the requested range has no record."""

    def __init__(self, region, day):
        super().__init__(f"missing value for region {region.value} on {day.isoformat()}")
        self.region = region
        self.day = day


class DegenerateSeriesError(MobicastError):
    """Series too short or with zero variance for correlation."""


class InsufficientOverlapError(MobicastError):
    """Aligned series are too short for the requested lag."""


class EmptySideError(MobicastError):
    """A temporal split left one side with no rows."""


class DegenerateDenominatorError(MobicastError):
    """A regularized denominator is not strictly positive."""


class EmptyInputError(MobicastError):
    """An operation that needs at least one row received none."""


class DimensionMismatchError(MobicastError):
    """Feature vectors do not match the model's feature schema."""


class LengthMismatchError(MobicastError):
    """Paired lists have different lengths."""


class AllObservedZeroError(MobicastError):
    """Every observed value is zero, so MAPE is undefined."""


class TooFewRowsError(MobicastError):
    """Not enough rows to form the requested folds."""


class MissingMobilityFeatureError(MobicastError):
    """The design matrix has no mobility column to scale."""


class ZeroBaselineError(MobicastError):
    """Scenario baseline total is zero; percentage change undefined."""


class InvalidConfigError(MobicastError):
    """A configuration value is out of its documented range."""


class PipelineError(MobicastError):
    """A pipeline stage failed; message carries stage name and cause."""

    def __init__(self, stage: str, cause: BaseException):
        super().__init__(f"{stage}: {type(cause).__name__}: {cause}")
        self.stage = stage
        self.cause = cause
