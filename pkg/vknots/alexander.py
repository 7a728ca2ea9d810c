"""Generalized Alexander polynomial of a Gauss diagram.

Crossing i is the chord of rank i (chords sorted by id). The two arcs entering
crossing i carry labels 2i-1 and 2i: at a positive crossing 2i-1 enters the
under endpoint and 2i the over endpoint, at a negative crossing the other way
round. Arc labels double as 1-based row/column numbers of the matrix M - P.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from vknots.gauss import GaussDiagram, transform
from vknots.laurent import (
    ALEXANDER_FACTOR,
    ONE,
    ONE_MINUS_UV,
    ONE_MINUS_UV_INV,
    U,
    V,
    BiLaurent,
    divide_exact,
)
from vknots.metrics import observe_computation
from vknots.writhe import writhe_invariants

logger = logging.getLogger("vknots.alexander")

_MINUS_ONE = BiLaurent.constant(-1)


@dataclass(frozen=True)
class ArcLabeling:
    """Incoming arc labels per endpoint position and the induced permutation."""

    crossings: tuple[int, ...]
    labels: tuple[int, ...]
    pi: dict[int, int]

    def incoming(self, chord_id: int) -> tuple[int, int]:
        rank = self.crossings.index(chord_id) + 1
        return (2 * rank - 1, 2 * rank)

    def arc_at(self, pos: int) -> int:
        return self.labels[pos]

    def crossing_of(self, label: int) -> int:
        return self.crossings[(label - 1) // 2]

    def cycle(self) -> tuple[int, ...]:
        if not self.pi:
            return ()
        out = [1]
        while self.pi[out[-1]] != 1:
            out.append(self.pi[out[-1]])
        return tuple(out)


class MatrixPart(NamedTuple):
    value: BiLaurent
    # chord id when the part is the off-diagonal entry of that crossing's block
    crossing: int | None


@dataclass(frozen=True)
class PolyMatrix:
    size: int
    entries: dict[tuple[int, int], BiLaurent]

    def entry(self, row: int, col: int) -> BiLaurent:
        return self.entries.get((row, col), BiLaurent())

    def row_support(self, row: int) -> list[int]:
        return sorted(c for (r, c) in self.entries if r == row)


@dataclass(frozen=True)
class AlexanderResult:
    delta0: BiLaurent
    delta0_raw: BiLaurent
    delta0_prime: BiLaurent
    delta0_prime_raw: BiLaurent
    delta0_bar: BiLaurent
    phi: BiLaurent


def arc_labeling(d: GaussDiagram) -> ArcLabeling:
    crossings = d.ids
    rank = {chord_id: i + 1 for i, chord_id in enumerate(crossings)}
    labels = []
    for e in d.endpoints:
        i = rank[e.chord]
        first = d.chord(e.chord).sign > 0
        # positive: 2i-1 enters Q, negative: 2i-1 enters P
        if first != e.is_over:
            labels.append(2 * i - 1)
        else:
            labels.append(2 * i)
    pi = {labels[p]: labels[(p + 1) % d.size] for p in range(d.size)}
    return ArcLabeling(crossings=crossings, labels=tuple(labels), pi=pi)


def matrix_parts(
    lab: ArcLabeling, d: GaussDiagram
) -> dict[tuple[int, int], list[MatrixPart]]:
    """Entries of M - P before merging, zero-based (row, col) keys."""
    parts: dict[tuple[int, int], list[MatrixPart]] = {}

    def put(row: int, col: int, value: BiLaurent, crossing: int | None = None):
        parts.setdefault((row, col), []).append(MatrixPart(value, crossing))

    for chord_id in lab.crossings:
        first, second = lab.incoming(chord_id)
        a, b = first - 1, second - 1
        if d.chord(chord_id).sign > 0:
            put(a, a, U**-1)
            put(a, b, ONE_MINUS_UV_INV, chord_id)
            put(b, b, V**-1)
        else:
            put(a, a, V)
            put(b, a, ONE_MINUS_UV, chord_id)
            put(b, b, U)
    for source, target in lab.pi.items():
        put(source - 1, target - 1, _MINUS_ONE)
    return parts


def build_matrix(lab: ArcLabeling, d: GaussDiagram) -> PolyMatrix:
    entries = {}
    for key, pieces in matrix_parts(lab, d).items():
        total = BiLaurent()
        for piece in pieces:
            total = total + piece.value
        if not total.is_zero():
            entries[key] = total
    return PolyMatrix(size=d.size, entries=entries)


def determinant(m: PolyMatrix) -> BiLaurent:
    """Laplace expansion along rows, memoized on the set of used columns."""
    support = [m.row_support(r) for r in range(m.size)]

    @lru_cache(maxsize=None)
    def expand(used: int) -> BiLaurent:
        row = used.bit_count()
        if row == m.size:
            return ONE
        total = BiLaurent()
        for col in support[row]:
            bit = 1 << col
            if used & bit:
                continue
            minor = expand(used | bit)
            if minor.is_zero():
                continue
            term = m.entries[(row, col)] * minor
            # position of col among the columns still free
            if (col - (used & (bit - 1)).bit_count()) % 2:
                total = total - term
            else:
                total = total + term
        return total

    result = expand(0)
    logger.debug(
        "determinant size=%d memo_entries=%d", m.size, expand.cache_info().currsize
    )
    return result


@observe_computation("alexander_suite")
def alexander_suite(d: GaussDiagram) -> AlexanderResult:
    if d.n == 0:
        zero = BiLaurent()
        return AlexanderResult(zero, zero, zero, zero, zero, zero)
    raw = determinant(build_matrix(arc_labeling(d), d))
    delta0 = raw.normalized()
    prime_raw = divide_exact(raw, ONE_MINUS_UV)
    w = writhe_invariants(d).w
    return AlexanderResult(
        delta0=delta0,
        delta0_raw=raw,
        delta0_prime=divide_exact(delta0, ONE_MINUS_UV),
        delta0_prime_raw=prime_raw,
        delta0_bar=divide_exact(delta0, ALEXANDER_FACTOR),
        phi=divide_exact(prime_raw + BiLaurent.from_u(w), ONE_MINUS_UV),
    )


def equal_up_to_uv_power(p: BiLaurent, q: BiLaurent) -> int | None:
    """Return k with p = (uv)^k * q, or None when no such k exists."""
    if p.is_zero() or q.is_zero():
        return 0 if p == q else None
    k = p.min_exponents()[0] - q.min_exponents()[0]
    return k if p == q.shift(k, k) else None


_EXPECTED_IMAGE = {
    "switch_all": lambda raw: -raw.swap_variables(),
    "mirror": lambda raw: raw.invert_variables(),
    "reverse": lambda raw: -raw.invert_variables(),
}


def symmetry_relations(d: GaussDiagram) -> dict[str, int | None]:
    """Check how the raw determinant transforms under each basic symmetry.

    For each kind the value is the k with Delta(image) = (uv)^k * expected, or
    None when the relation fails.
    """
    raw = alexander_suite(d).delta0_raw
    out = {}
    for kind, expected in _EXPECTED_IMAGE.items():
        image_raw = alexander_suite(transform(d, kind)).delta0_raw
        out[kind] = equal_up_to_uv_power(image_raw, expected(raw))
    return out
