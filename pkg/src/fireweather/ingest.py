"""Montesinho forest-fires CSV parsing and mapping to sensor-network RDF."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import vocab
from .rdf import Graph, Triple, decimal, format_decimal, integer, iri, string

EXPECTED_HEADER = ["X", "Y", "month", "day", "FFMC", "DMC", "DC", "ISI",
                   "temp", "RH", "wind", "rain", "area"]

MONTHS = ["jan", "feb", "mar", "apr", "may", "jun",
          "jul", "aug", "sep", "oct", "nov", "dec"]
DAYS = ["mon", "tue", "wed", "thu", "fri", "sat", "sun"]

#: quantity name -> unit label, in emission order
QUANTITY_UNITS = {
    "ffmc": "unitless",
    "dmc": "unitless",
    "dc": "unitless",
    "isi": "unitless",
    "temp": "celsius",
    "rh": "percent",
    "wind": "km/h",
    "rain": "mm",
    "area": "hectare",
}

#: type + 2 location + month + day + 3 per quantity
TRIPLES_PER_ROW = 5 + 3 * len(QUANTITY_UNITS)


class IngestError(Exception):
    """CSV structure or value-range failure, with row context."""


@dataclass(frozen=True)
class WeatherObservation:
    """One dataset row: park-grid coordinates, date, weather, fuel codes."""

    x_coord: int
    y_coord: int
    month: str
    day: str
    ffmc: float
    dmc: float
    dc: float
    isi: float
    temp: float
    rh: float
    wind: float
    rain: float
    area: float

    def __post_init__(self):
        if self.month not in MONTHS:
            raise IngestError(f"invalid month {self.month!r}")
        if self.day not in DAYS:
            raise IngestError(f"invalid day {self.day!r}")
        if not 0.0 <= self.ffmc <= 101.0:
            raise IngestError(f"ffmc out of range [0, 101]: {self.ffmc}")
        if not 0.0 <= self.rh <= 100.0:
            raise IngestError(f"rh out of range [0, 100]: {self.rh}")
        for name in ("dmc", "dc", "isi", "wind", "rain", "area"):
            if getattr(self, name) < 0.0:
                raise IngestError(f"{name} must be >= 0: {getattr(self, name)}")

    def quantities(self) -> dict[str, float]:
        return {q: float(getattr(self, q)) for q in QUANTITY_UNITS}


@dataclass(frozen=True)
class SensorId:
    """Deterministic sensor identity minted from the row ordinal (1-based)."""

    ordinal: int

    @property
    def iri(self) -> str:
        return vocab.sensor_iri(self.ordinal)


def parse_csv(text: str) -> list[WeatherObservation]:
    """Parse the dataset CSV into observations, preserving file order."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("empty input: missing header row") from None
    if [h.strip() for h in header] != EXPECTED_HEADER:
        raise IngestError(f"unexpected header {header!r}, want {EXPECTED_HEADER!r}")
    observations = []
    for rownum, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != len(EXPECTED_HEADER):
            raise IngestError(f"row {rownum}: expected {len(EXPECTED_HEADER)} columns, got {len(row)}")
        try:
            obs = WeatherObservation(
                x_coord=int(row[0]),
                y_coord=int(row[1]),
                month=row[2].strip().lower(),
                day=row[3].strip().lower(),
                ffmc=float(row[4]),
                dmc=float(row[5]),
                dc=float(row[6]),
                isi=float(row[7]),
                temp=float(row[8]),
                rh=float(row[9]),
                wind=float(row[10]),
                rain=float(row[11]),
                area=float(row[12]),
            )
        except ValueError as exc:
            raise IngestError(f"row {rownum}: unparseable field ({exc})") from None
        except IngestError as exc:
            raise IngestError(f"row {rownum}: {exc}") from None
        observations.append(obs)
    return observations


def to_triples(obs: WeatherObservation, sensor: SensorId) -> list[Triple]:
    """Map one observation to its fixed per-row triple schema."""
    s = iri(sensor.iri)
    triples = [
        Triple(s, iri(vocab.RDF_TYPE), iri(vocab.SENSOR_CLASS)),
        Triple(s, iri(vocab.HAS_DEPLOYMENT_X), integer(obs.x_coord)),
        Triple(s, iri(vocab.HAS_DEPLOYMENT_Y), integer(obs.y_coord)),
        Triple(s, iri(vocab.HAS_MONTH), string(obs.month)),
        Triple(s, iri(vocab.HAS_DAY), string(obs.day)),
    ]
    for quantity, value in obs.quantities().items():
        node = iri(vocab.obs_iri(sensor.ordinal, quantity))
        triples.append(Triple(node, iri(vocab.HAS_VALUE), decimal(value)))
        triples.append(Triple(node, iri(vocab.HAS_UNIT), string(QUANTITY_UNITS[quantity])))
        triples.append(Triple(node, iri(vocab.OBSERVED_BY), s))
    return triples


def ingest_observations(observations: Iterable[WeatherObservation], graph: Graph | None = None) -> Graph:
    """Load observations into a graph, minting sensor ordinals from 1."""
    g = graph if graph is not None else Graph()
    for ordinal, obs in enumerate(observations, start=1):
        g.update(to_triples(obs, SensorId(ordinal)))
    return g


def ingest_csv(text: str) -> Graph:
    return ingest_observations(parse_csv(text))


def canonical_value(value: float) -> str:
    """The lexical form ingestion stores for a numeric measurement."""
    return format_decimal(value)
