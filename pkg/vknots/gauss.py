"""Gauss diagrams of virtual knots.

A diagram is a set of signed chords on an oriented circle with endpoint
positions 0..2n-1. Each chord runs from its over endpoint P to its under
endpoint Q. Arc alpha of a chord is the open arc from P forward to Q, arc beta
the open arc from Q forward to P.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

from vknots.errors import (
    CrossingCountError,
    DiagramError,
    MalformedTokenError,
    PositionError,
    RoleError,
    SignMismatchError,
    UnknownChordError,
)

logger = logging.getLogger("vknots.gauss")

_TOKEN = re.compile(r"\s*([OU])(\d+)([+-])")

TransformKind = Literal["switch_all", "mirror", "reverse"]


@dataclass(frozen=True)
class Chord:
    id: int
    over_pos: int
    under_pos: int
    sign: int

    def __post_init__(self):
        if self.over_pos == self.under_pos:
            raise DiagramError(f"chord {self.id} has both endpoints at {self.over_pos}")
        if self.sign not in (1, -1):
            raise DiagramError(f"chord {self.id} has sign {self.sign}")


@dataclass(frozen=True)
class IndexRecord:
    ro: int
    ru: int
    lo: int
    lu: int
    ind: int

    def __post_init__(self):
        if self.ind != self.ro + self.ru or self.ind != -(self.lo + self.lu):
            raise DiagramError(f"inconsistent index record {self}")


@dataclass(frozen=True)
class Endpoint:
    chord: int
    is_over: bool


@dataclass(frozen=True)
class GaussDiagram:
    chords: tuple[Chord, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.chords, key=lambda c: c.id))
        object.__setattr__(self, "chords", ordered)
        ids = [c.id for c in ordered]
        if len(set(ids)) != len(ids):
            raise DiagramError(f"duplicate chord ids in {ids}")
        positions = sorted(p for c in ordered for p in (c.over_pos, c.under_pos))
        if positions != list(range(2 * len(ordered))):
            raise DiagramError("endpoint positions must be exactly 0..2n-1")

    @classmethod
    def from_sequence(
        cls, sequence: Iterable[tuple[int, str, int]]
    ) -> "GaussDiagram":
        """Build a diagram from ``(chord id, "O" | "U", sign)`` in circle order.

        Chord ids are kept as given.
        """
        over: dict[int, int] = {}
        under: dict[int, int] = {}
        signs: dict[int, int] = {}
        for pos, (label, role, sign) in enumerate(sequence):
            target = over if role == "O" else under
            if label in target:
                raise RoleError(f"label {label} has two {role} endpoints")
            target[label] = pos
            if signs.setdefault(label, sign) != sign:
                raise SignMismatchError(f"label {label} carries both signs")
        if set(over) != set(under):
            raise CrossingCountError("every label needs one O and one U endpoint")
        return cls(
            tuple(Chord(label, over[label], under[label], signs[label]) for label in over)
        )

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def size(self) -> int:
        return 2 * len(self.chords)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.chords)

    @cached_property
    def _by_id(self) -> dict[int, Chord]:
        return {c.id: c for c in self.chords}

    @cached_property
    def endpoints(self) -> tuple[Endpoint, ...]:
        slots: list[Endpoint | None] = [None] * self.size
        for c in self.chords:
            slots[c.over_pos] = Endpoint(c.id, True)
            slots[c.under_pos] = Endpoint(c.id, False)
        return tuple(slots)

    def chord(self, chord_id: int) -> Chord:
        try:
            return self._by_id[chord_id]
        except KeyError:
            raise UnknownChordError(f"no chord with id {chord_id}") from None

    def sequence(self) -> list[tuple[int, str, int]]:
        """Circle-order ``(chord id, role, sign)`` triples, inverse of from_sequence."""
        return [
            (e.chord, "O" if e.is_over else "U", self._by_id[e.chord].sign)
            for e in self.endpoints
        ]

    def endpoint_sign(self, pos: int) -> int:
        if not 0 <= pos < self.size:
            raise PositionError(f"position {pos} outside 0..{self.size - 1}")
        endpoint = self.endpoints[pos]
        sign = self._by_id[endpoint.chord].sign
        return -sign if endpoint.is_over else sign

    def arc(self, start: int, stop: int) -> range:
        """Positions strictly between ``start`` and ``stop`` going forward."""
        if stop > start:
            return range(start + 1, stop)
        return range(start + 1, stop + self.size)

    @cached_property
    def index_table(self) -> dict[int, IndexRecord]:
        size = self.size
        signs = [self.endpoint_sign(p) for p in range(size)]
        overs = [e.is_over for e in self.endpoints]
        table = {}
        for c in self.chords:
            sums = []
            for start, stop in (
                (c.over_pos, c.under_pos),
                (c.under_pos, c.over_pos),
            ):
                o = u = 0
                for raw in self.arc(start, stop):
                    p = raw % size
                    if overs[p]:
                        o += signs[p]
                    else:
                        u += signs[p]
                sums.append((o, u))
            (ro, ru), (lo, lu) = sums
            table[c.id] = IndexRecord(ro=ro, ru=ru, lo=lo, lu=lu, ind=ro + ru)
        return table


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code such as ``U1-O2+U3+O1-O3+U2+``.

    Labels are renumbered 1..n in order of first appearance.
    """
    normalized = text.replace("−", "-")
    tokens: list[tuple[str, int, int]] = []
    offset = 0
    while offset < len(normalized):
        if not normalized[offset:].strip():
            break
        match = _TOKEN.match(normalized, offset)
        if match is None:
            raise MalformedTokenError(
                f"malformed token at offset {offset} in {text!r}", offset=offset
            )
        role, label, sign = match.groups()
        if int(label) < 1:
            raise MalformedTokenError(
                f"labels must be positive integers, got {label}", offset=offset
            )
        tokens.append((role, int(label), 1 if sign == "+" else -1))
        offset = match.end()

    seen: dict[int, list[tuple[str, int]]] = {}
    for role, label, sign in tokens:
        seen.setdefault(label, []).append((role, sign))
    for label, occurrences in seen.items():
        if len(occurrences) != 2:
            raise CrossingCountError(
                f"label {label} appears {len(occurrences)} times, expected 2"
            )
        (r1, s1), (r2, s2) = occurrences
        if r1 == r2:
            raise RoleError(f"label {label} has two {r1} tokens")
        if s1 != s2:
            raise SignMismatchError(f"label {label} carries both signs")

    renumber = {label: i + 1 for i, label in enumerate(seen)}
    diagram = GaussDiagram.from_sequence(
        (renumber[label], role, sign) for role, label, sign in tokens
    )
    logger.debug("parsed %d chords from %r", diagram.n, text)
    return diagram


def canonical(d: GaussDiagram) -> GaussDiagram:
    """Relabel chords 1..n in order of first appearance from position 0."""
    renumber: dict[int, int] = {}
    for e in d.endpoints:
        renumber.setdefault(e.chord, len(renumber) + 1)
    return GaussDiagram.from_sequence(
        (renumber[label], role, sign) for label, role, sign in d.sequence()
    )


def format_gauss_code(d: GaussDiagram) -> str:
    return "".join(
        f"{role}{label}{'+' if sign > 0 else '-'}"
        for label, role, sign in canonical(d).sequence()
    )


def endpoint_sign(d: GaussDiagram, pos: int) -> int:
    """-sign at an over endpoint, +sign at an under endpoint."""
    return d.endpoint_sign(pos)


def indices(d: GaussDiagram, chord_id: int) -> IndexRecord:
    d.chord(chord_id)
    return d.index_table[chord_id]


def writhe(d: GaussDiagram) -> int:
    return sum(c.sign for c in d.chords)


def n_writhe(d: GaussDiagram, n: int) -> int:
    table = d.index_table
    return sum(c.sign for c in d.chords if table[c.id].ind == n)


def n_writhes(d: GaussDiagram) -> dict[int, int]:
    """All nonzero diagram-level n-writhes keyed by index."""
    out: dict[int, int] = {}
    for c in d.chords:
        ind = d.index_table[c.id].ind
        out[ind] = out.get(ind, 0) + c.sign
    return {k: v for k, v in sorted(out.items()) if v}


def transform(d: GaussDiagram, kind: TransformKind) -> GaussDiagram:
    """Apply one of the symmetry operations.

    switch_all: every chord reversed and its sign negated (all crossings switched).
    mirror: every sign negated, positions and directions kept (planar reflection).
    reverse: circle order reversed, directions and signs kept.
    """
    if kind == "switch_all":
        chords = (Chord(c.id, c.under_pos, c.over_pos, -c.sign) for c in d.chords)
    elif kind == "mirror":
        chords = (Chord(c.id, c.over_pos, c.under_pos, -c.sign) for c in d.chords)
    elif kind == "reverse":
        last = d.size - 1
        chords = (
            Chord(c.id, last - c.over_pos, last - c.under_pos, c.sign) for c in d.chords
        )
    else:
        raise ValueError(f"unknown transform {kind!r}")
    return GaussDiagram(tuple(chords))


SYMMETRY_IMAGES: dict[str, tuple[TransformKind, ...]] = {
    "identity": (),
    "switch_all": ("switch_all",),
    "mirror": ("mirror",),
    "reverse": ("reverse",),
    "mirror+reverse": ("mirror", "reverse"),
    "switch_all+reverse": ("switch_all", "reverse"),
    "switch_all+mirror": ("switch_all", "mirror"),
    "switch_all+mirror+reverse": ("switch_all", "mirror", "reverse"),
}


def symmetry_images(d: GaussDiagram) -> dict[str, GaussDiagram]:
    out = {}
    for name, kinds in SYMMETRY_IMAGES.items():
        image = d
        for kind in kinds:
            image = transform(image, kind)
        out[name] = image
    return out


def random_diagram(n: int, seed: int) -> GaussDiagram:
    """Uniform random pairing of 2n positions with random directions and signs."""
    if n < 0:
        raise ValueError("chord count must be non-negative")
    rng = random.Random(seed)
    positions = list(range(2 * n))
    rng.shuffle(positions)
    chords = []
    for i in range(n):
        a, b = positions[2 * i], positions[2 * i + 1]
        if rng.random() < 0.5:
            a, b = b, a
        chords.append(Chord(i + 1, a, b, rng.choice((1, -1))))
    return canonical(GaussDiagram(tuple(chords)))
