"""Maryland emergency-services regions and the county-to-region table.

The five regions partition all 24 Maryland jurisdictions (23 counties plus
Baltimore City). The table is compiled in: it is authoritative for the study
period and never read from input files.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import UnknownCountyError


class Region(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    STATEWIDE = "statewide"

    @property
    def is_regional(self) -> bool:
        return self is not Region.STATEWIDE

    @classmethod
    def parse(cls, text: str) -> "Region":
        token = text.strip()
        for member in cls:
            if token == member.value or token.lower() == member.value.lower():
                return member
        raise ValueError(f"unknown region {text!r}; expected I..V or statewide")


#: The five true regions, in reporting order (statewide excluded).
FIVE_REGIONS: tuple[Region, ...] = (Region.I, Region.II, Region.III, Region.IV, Region.V)

_REGION_ORDER = {region: index for index, region in enumerate(Region)}


def region_sort_key(region: Region) -> int:
    """Total order over regions: I < II < III < IV < V < statewide."""
    return _REGION_ORDER[region]


@dataclass(frozen=True)
class County:
    """A Maryland jurisdiction and the region it reports under."""

    name: str
    region: Region


_TABLE: dict[Region, tuple[str, ...]] = {
    Region.I: (
        "Garrett County",
        "Allegany County",
    ),
    Region.II: (
        "Frederick County",
        "Washington County",
    ),
    Region.III: (
        "Anne Arundel County",
        "Baltimore County",
        "Baltimore City",
        "Carroll County",
        "Harford County",
        "Howard County",
    ),
    Region.IV: (
        "Worcester County",
        "Kent County",
        "Dorchester County",
        "Talbot County",
        "Somerset County",
        "Queen Anne's County",
        "Cecil County",
        "Caroline County",
        "Wicomico County",
    ),
    Region.V: (
        "Prince George's County",
        "Charles County",
        "St. Mary's County",
        "Calvert County",
        "Montgomery County",
    ),
}


def normalize_county_name(name: str) -> str:
    """Case-insensitive, whitespace-collapsed key. No other fuzzing."""
    return re.sub(r"\s+", " ", name.strip()).casefold()


COUNTIES: tuple[County, ...] = tuple(
    County(name, region) for region in FIVE_REGIONS for name in _TABLE[region]
)

_BY_KEY: dict[str, County] = {normalize_county_name(c.name): c for c in COUNTIES}

assert len(COUNTIES) == 24, "Maryland has exactly 24 jurisdictions"


def lookup_county(name: str) -> County:
    """Resolve a county name to its :class:`County`, or raise UnknownCountyError."""
    try:
        return _BY_KEY[normalize_county_name(name)]
    except KeyError:
        raise UnknownCountyError(f"not a Maryland jurisdiction: {name!r}") from None


def region_of_county(name: str) -> Region:
    """The region a county reports under (case/whitespace-insensitive match)."""
    return lookup_county(name).region
