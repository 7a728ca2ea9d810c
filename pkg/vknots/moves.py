"""Reidemeister and forbidden moves on Gauss diagrams.

Insertions take a gap index 0..2n (the new endpoints go in front of the
endpoint currently at that position, or at the end for 2n). Inserted chords get
fresh ids above the current maximum so existing ids survive every move.
"""

from __future__ import annotations

import logging
from typing import Iterable, Literal, Sequence

from vknots.errors import (
    MixedEndpointsError,
    MoveError,
    PatternNotFoundError,
    PatternViolationError,
    PositionError,
)
from vknots.gauss import Chord, GaussDiagram
from vknots.laurent import T, UniLaurent
from vknots.schemas.moves import MoveSpec
from vknots.smoothing import classify_pair
from vknots.writhe import chord_terms

logger = logging.getLogger("vknots.moves")

Block = list[tuple[int, str, int]]


def _next_id(d: GaussDiagram) -> int:
    return max(d.ids, default=0) + 1


def _check_gap(d: GaussDiagram, pos: int):
    if not 0 <= pos <= d.size:
        raise PositionError(f"gap {pos} outside 0..{d.size}")


def _insert_blocks(d: GaussDiagram, blocks: Sequence[tuple[int, Block]]) -> GaussDiagram:
    """Insert blocks at gaps; blocks sharing a gap keep their given order."""
    seq = d.sequence()
    out: Block = []
    for p in range(len(seq) + 1):
        for gap, block in blocks:
            if gap == p:
                out.extend(block)
        if p < len(seq):
            out.append(seq[p])
    return GaussDiagram.from_sequence(out)


def insert_r1(d: GaussDiagram, pos: int, variant: Literal["Ia", "Ib"]) -> GaussDiagram:
    """Insert a positive kink: ``Ia`` reads O then U, ``Ib`` reads U then O."""
    _check_gap(d, pos)
    c = _next_id(d)
    if variant == "Ia":
        block = [(c, "O", 1), (c, "U", 1)]
    elif variant == "Ib":
        block = [(c, "U", 1), (c, "O", 1)]
    else:
        raise MoveError(f"unknown first move variant {variant!r}")
    return _insert_blocks(d, [(pos, block)])


def _r2_conditions_hold(d: GaussDiagram, c1: int, c2: int) -> bool:
    r1, r2 = d.index_table[c1], d.index_table[c2]
    if r1.ind != r2.ind or r2.lo != r1.lo - 1:
        return False
    return all(
        classify_pair(d, other, c1) == classify_pair(d, other, c2)
        for other in d.ids
        if other not in (c1, c2)
    )


def insert_r2(d: GaussDiagram, pos_a: int, pos_b: int) -> GaussDiagram:
    """Insert a positive chord c1 and a negative chord c2 forming a bigon.

    Both tails go in at ``pos_a`` and both heads at ``pos_b``.
    """
    _check_gap(d, pos_a)
    _check_gap(d, pos_b)
    c1 = _next_id(d)
    c2 = c1 + 1
    tails = [(c1, "O", 1), (c2, "O", -1)]
    layouts = {
        "nested": [(c2, "U", -1), (c1, "U", 1)],
        "interleaved": [(c1, "U", 1), (c2, "U", -1)],
    }
    for name, heads in layouts.items():
        candidate = _insert_blocks(d, [(pos_a, tails), (pos_b, heads)])
        if _r2_conditions_hold(candidate, c1, c2):
            logger.debug("second move at (%d, %d) uses %s layout", pos_a, pos_b, name)
            return candidate
    raise PatternViolationError(
        f"no bigon layout at gaps ({pos_a}, {pos_b}) keeps equal indices"
    )


def _swap_positions(d: GaussDiagram, pairs: Iterable[tuple[int, int]]) -> GaussDiagram:
    mapping = {p: p for p in range(d.size)}
    for p, q in pairs:
        mapping[p], mapping[q] = q, p
    return GaussDiagram(
        tuple(
            Chord(c.id, mapping[c.over_pos], mapping[c.under_pos], c.sign)
            for c in d.chords
        )
    )


def _r3_pairs(d: GaussDiagram, c1: int, c2: int, c3: int):
    """The three adjacent endpoint pairs swapped by the move, or None."""
    a, b, c = d.chord(c1), d.chord(c2), d.chord(c3)
    if not (a.sign > 0 and b.sign > 0 and c.sign < 0):
        return None

    def nxt(p: int) -> int:
        return (p + 1) % d.size

    before = (
        nxt(c.over_pos) == a.over_pos
        and nxt(a.under_pos) == b.over_pos
        and nxt(b.under_pos) == c.under_pos
    )
    after = (
        nxt(a.over_pos) == c.over_pos
        and nxt(b.over_pos) == a.under_pos
        and nxt(c.under_pos) == b.under_pos
    )
    if not (before or after):
        return None
    return [
        (a.over_pos, c.over_pos),
        (a.under_pos, b.over_pos),
        (b.under_pos, c.under_pos),
    ]


def apply_r3(d: GaussDiagram, chords: tuple[int, int, int]) -> GaussDiagram:
    """Slide a strand across a crossing.

    ``chords`` is (c1, c2, c3) with c1, c2 positive and c3 negative. The
    three strands read, before the move, top = [P3, P1], middle = [Q1, P2] and
    bottom = [Q2, Q3]; the move reverses each strand's pair. The reversed
    arrangement is accepted too and moved back.
    """
    c1, c2, c3 = chords
    if len({c1, c2, c3}) != 3:
        raise PatternNotFoundError("third move needs three distinct chords")
    pairs = _r3_pairs(d, c1, c2, c3)
    if pairs is None:
        raise PatternNotFoundError(f"chords {chords} do not form a third-move pattern")
    return _swap_positions(d, pairs)


def find_r3_triples(d: GaussDiagram) -> list[tuple[int, int, int]]:
    out = []
    for c3 in d.ids:
        for c1 in d.ids:
            for c2 in d.ids:
                if len({c1, c2, c3}) == 3 and _r3_pairs(d, c1, c2, c3):
                    out.append((c1, c2, c3))
    return out


def insert_r3_pattern(
    d: GaussDiagram, pos_t: int, pos_m: int, pos_b: int
) -> tuple[GaussDiagram, tuple[int, int, int]]:
    """Add three chords arranged as a third-move pattern at three gaps."""
    for gap in (pos_t, pos_m, pos_b):
        _check_gap(d, gap)
    c1 = _next_id(d)
    c2, c3 = c1 + 1, c1 + 2
    blocks = [
        (pos_t, [(c3, "O", -1), (c1, "O", 1)]),
        (pos_m, [(c1, "U", 1), (c2, "O", 1)]),
        (pos_b, [(c2, "U", 1), (c3, "U", -1)]),
    ]
    return _insert_blocks(d, blocks), (c1, c2, c3)


def _forbidden_pair(d: GaussDiagram, pos: int):
    if not 0 <= pos < d.size:
        raise PositionError(f"position {pos} outside 0..{d.size - 1}")
    q = (pos + 1) % d.size
    first, second = d.endpoints[pos], d.endpoints[q]
    if first.chord == second.chord:
        raise MoveError(f"positions {pos} and {q} belong to the same chord")
    if first.is_over != second.is_over:
        raise MixedEndpointsError(f"positions {pos} and {q} hold a head and a tail")
    return q, first, second


def classify_forbidden(d: GaussDiagram, pos: int) -> Literal["FO", "FU"]:
    _, first, _ = _forbidden_pair(d, pos)
    return "FO" if first.is_over else "FU"


def apply_forbidden(d: GaussDiagram, pos: int) -> GaussDiagram:
    """Swap the two tails (FO) or two heads (FU) at ``pos`` and ``pos + 1``."""
    q, _, _ = _forbidden_pair(d, pos)
    return _swap_positions(d, [(pos, q)])


def forbidden_w_delta(d: GaussDiagram, pos: int) -> UniLaurent:
    """Exact change of W under ``apply_forbidden(d, pos)``.

    The chord at ``pos`` gains the sign of its neighbour in its index and the
    neighbour loses the sign of the first; no other index moves.
    """
    _, first, second = _forbidden_pair(d, pos)
    a, b = d.chord(first.chord), d.chord(second.chord)
    ind_a = d.index_table[a.id].ind
    ind_b = d.index_table[b.id].ind
    return (
        UniLaurent.monomial(ind_a, a.sign) * (T ** b.sign - 1)
        + UniLaurent.monomial(ind_b, b.sign) * (T ** -a.sign - 1)
    )


def forbidden_v_delta(d: GaussDiagram, pos: int) -> UniLaurent:
    """Exact change of V_D under ``apply_forbidden(d, pos)``."""
    _, first, second = _forbidden_pair(d, pos)
    moved = (first.chord, second.chord)
    after = apply_forbidden(d, pos)
    return chord_terms(after, moved) - chord_terms(d, moved)


def apply_move(d: GaussDiagram, spec: MoveSpec) -> GaussDiagram:
    if spec.kind in ("Ia", "Ib"):
        return insert_r1(d, spec.pos, spec.kind)
    if spec.kind == "IIa":
        return insert_r2(d, spec.pos, spec.pos_b)
    if spec.kind == "IIIa":
        return apply_r3(d, spec.chords)
    kind = classify_forbidden(d, spec.pos)
    if kind != spec.kind:
        raise MoveError(f"position {spec.pos} calls for {kind}, not {spec.kind}")
    return apply_forbidden(d, spec.pos)


def apply_moves(d: GaussDiagram, script: Iterable[MoveSpec]) -> list[GaussDiagram]:
    """Apply moves in order and return every intermediate diagram, final last."""
    steps = [d]
    for spec in script:
        steps.append(apply_move(steps[-1], spec))
        logger.debug("applied %s, now %d chords", spec.kind, steps[-1].n)
    return steps
