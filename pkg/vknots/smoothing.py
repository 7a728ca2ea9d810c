"""Alternating configurations and their smoothings.

A configuration is a set C of chords. It is alternating when the endpoints of
its chords, read around the circle, switch between over and under every time.
Smoothing all crossings of an alternating C cuts the circle at the 2|C|
endpoints and rejoins the pieces into descending components (each segment runs
from an over endpoint to the next C endpoint) and ascending components (from an
under endpoint to the next C endpoint).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from vknots.errors import EmptyConfigurationError, NonAlternatingError
from vknots.gauss import GaussDiagram


class PairType(str, enum.Enum):
    NON_ALTERNATING = "NonAlternating"
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Configuration:
    diagram: GaussDiagram
    chords: frozenset[int]

    @classmethod
    def of(cls, d: GaussDiagram, chords: Iterable[int]) -> "Configuration":
        ids = frozenset(chords)
        for chord_id in ids:
            d.chord(chord_id)
        return cls(d, ids)

    @property
    def m(self) -> int:
        return len(self.chords)

    @property
    def positive(self) -> int:
        return sum(1 for c in self.chords if self.diagram.chord(c).sign > 0)

    @property
    def negative(self) -> int:
        return self.m - self.positive


@dataclass(frozen=True)
class SmoothedLink:
    ascending_components: tuple[tuple[int, ...], ...]
    descending_components: tuple[tuple[int, ...], ...]
    u_count: int
    o_count: int

    @property
    def component_count(self) -> int:
        return len(self.ascending_components) + len(self.descending_components)


def _configuration(d: GaussDiagram, chords) -> Configuration:
    if isinstance(chords, Configuration):
        return chords
    return Configuration.of(d, chords)


def _c_endpoints(d: GaussDiagram, ids: frozenset[int]) -> list[int]:
    return [p for p, e in enumerate(d.endpoints) if e.chord in ids]


def is_alternating(d: GaussDiagram, chords) -> bool:
    config = _configuration(d, chords)
    if not config.chords:
        raise EmptyConfigurationError("alternation is undefined for the empty set")
    roles = [d.endpoints[p].is_over for p in _c_endpoints(d, config.chords)]
    return all(roles[i] != roles[i - 1] for i in range(len(roles)))


def _cycles(mapping: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    seen: set[int] = set()
    out = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = []
        current = start
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            current = mapping[current]
        out.append(tuple(cycle))
    return tuple(out)


def smooth(d: GaussDiagram, chords) -> SmoothedLink:
    """Smooth every crossing of an alternating configuration.

    Components are reported as cycles of chord ids: a descending component
    lists the chords whose over endpoints start its segments, an ascending
    component the chords whose under endpoints start its segments.
    """
    config = _configuration(d, chords)
    if not is_alternating(d, config):
        raise NonAlternatingError(f"configuration {sorted(config.chords)} is not alternating")

    positions = _c_endpoints(d, config.chords)
    following = {
        positions[i]: positions[(i + 1) % len(positions)] for i in range(len(positions))
    }
    descending: dict[int, int] = {}
    ascending: dict[int, int] = {}
    u_count = o_count = 0
    for chord_id in config.chords:
        c = d.chord(chord_id)
        descending[chord_id] = d.endpoints[following[c.over_pos]].chord
        ascending[chord_id] = d.endpoints[following[c.under_pos]].chord
        for raw in d.arc(c.under_pos, following[c.under_pos]):
            e = d.endpoints[raw % d.size]
            sign = d.chord(e.chord).sign
            if e.is_over:
                o_count += sign
            else:
                u_count += sign
    return SmoothedLink(
        ascending_components=_cycles(ascending),
        descending_components=_cycles(descending),
        u_count=u_count,
        o_count=o_count,
    )


def classify_pair(d: GaussDiagram, c1: int, c2: int) -> PairType:
    if c1 == c2:
        raise ValueError("a pair needs two distinct chords")
    pair = Configuration.of(d, (c1, c2))
    if not is_alternating(d, pair):
        return PairType.NON_ALTERNATING
    if len(smooth(d, pair).descending_components) == 2:
        return PairType.A
    return PairType.B


def alternating_pairs(d: GaussDiagram) -> list[tuple[int, int, PairType]]:
    """Every alternating pair ``(c1, c2, type)`` with ``c1 < c2``."""
    ids = d.ids
    out = []
    for i, c1 in enumerate(ids):
        for c2 in ids[i + 1 :]:
            kind = classify_pair(d, c1, c2)
            if kind is not PairType.NON_ALTERNATING:
                out.append((c1, c2, kind))
    return out
