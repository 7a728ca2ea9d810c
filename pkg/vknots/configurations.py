"""Independent reconstructions of Delta_0 used to cross-check the determinant.

Three routes lead to the same polynomial: summing contributions of alternating
configurations, the closed-form f-polynomials of the (1 - uv)-expansion, and a
plain permutation sum over the matrix entries.
"""

from __future__ import annotations

import logging
import os
from itertools import combinations
from typing import Iterator

from vknots.alexander import PolyMatrix, arc_labeling, matrix_parts
from vknots.errors import SizeLimitError
from vknots.gauss import GaussDiagram, writhe
from vknots.laurent import ONE, ONE_MINUS_UV, ONE_MINUS_UV_INV, BiLaurent
from vknots.metrics import observe_computation
from vknots.smoothing import (
    Configuration,
    PairType,
    alternating_pairs,
    is_alternating,
    smooth,
)

logger = logging.getLogger("vknots.configurations")


def oracle_max_chords() -> int:
    return int(os.getenv("VKNOTS_ORACLE_MAX_CHORDS", "12") or 12)


def brute_force_max_size() -> int:
    return int(os.getenv("VKNOTS_BRUTE_FORCE_MAX_SIZE", "12") or 12)


def _uv_power(k: int) -> BiLaurent:
    return BiLaurent.monomial(k, k)


def contribution(d: GaussDiagram, chords) -> BiLaurent:
    config = chords if isinstance(chords, Configuration) else Configuration.of(d, chords)
    link = smooth(d, config)
    sign = -1 if (config.m + len(link.descending_components)) % 2 else 1
    return (
        ONE_MINUS_UV ** config.negative
        * ONE_MINUS_UV_INV ** config.positive
        * BiLaurent.monomial(-link.u_count, -link.o_count, sign)
    )


def f0(d: GaussDiagram) -> BiLaurent:
    return _uv_power(-writhe(d)) - ONE


def alternating_configurations(d: GaussDiagram) -> Iterator[Configuration]:
    ids = d.ids
    for m in range(1, len(ids) + 1):
        for subset in combinations(ids, m):
            config = Configuration.of(d, subset)
            if is_alternating(d, config):
                yield config


@observe_computation("delta0_via_configurations")
def delta0_via_configurations(d: GaussDiagram) -> BiLaurent:
    if d.n > oracle_max_chords():
        raise SizeLimitError(
            f"{d.n} chords exceed the configuration limit of {oracle_max_chords()}"
        )
    if d.n == 0:
        return BiLaurent()
    total = f0(d)
    count = 0
    for config in alternating_configurations(d):
        total = total + contribution(d, config)
        count += 1
    logger.debug("summed %d alternating configurations over %d chords", count, d.n)
    return total


def f_polynomials(d: GaussDiagram) -> tuple[BiLaurent, BiLaurent, BiLaurent]:
    table = d.index_table

    def eps(c: int) -> int:
        return d.chord(c).sign

    def half(c: int) -> int:
        return (1 + eps(c)) // 2

    f1 = BiLaurent()
    for c in d.ids:
        rec = table[c]
        f1 = f1 + BiLaurent.monomial(-half(c) - rec.lu, -half(c) + rec.lo, -eps(c))

    f2 = BiLaurent()
    for c1, c2, kind in alternating_pairs(d):
        r1, r2 = table[c1], table[c2]
        shift = -half(c1) - half(c2)
        coeff = eps(c1) * eps(c2)
        if kind is PairType.A:
            f2 = f2 + BiLaurent.monomial(
                shift - r1.lu + r2.ru + eps(c2),
                shift + r1.lo - r2.ro + eps(c2),
                coeff,
            )
        else:
            f2 = f2 + BiLaurent.monomial(
                shift - r1.lu - r2.lu, shift + r1.lo + r2.lo, -coeff
            )
    return f0(d), f1, f2


def _structural_rows(m: PolyMatrix) -> list[list[int]]:
    return [m.row_support(r) for r in range(m.size)]


def _permutation_parity(perm: list[int]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2


@observe_computation("brute_force_det")
def brute_force_det(m: PolyMatrix) -> BiLaurent:
    """Signed sum over permutations through structurally nonzero entries."""
    if m.size > brute_force_max_size():
        raise SizeLimitError(
            f"matrix size {m.size} exceeds the permutation-sum limit "
            f"of {brute_force_max_size()}"
        )
    rows = _structural_rows(m)
    total = BiLaurent()
    perm: list[int] = []
    used: set[int] = set()

    def walk(row: int, product: BiLaurent):
        nonlocal total
        if row == m.size:
            total = total - product if _permutation_parity(perm) else total + product
            return
        for col in rows[row]:
            if col in used:
                continue
            used.add(col)
            perm.append(col)
            walk(row + 1, product * m.entries[(row, col)])
            perm.pop()
            used.discard(col)

    walk(0, ONE)
    return total


def grouped_expansion(d: GaussDiagram) -> dict[frozenset[int], BiLaurent]:
    """Permutation terms of det(M - P) grouped by the crossings whose
    off-diagonal block entry they use.

    Merged entries at special curls are split back into their block part and
    their permutation part before grouping.
    """
    if d.size > brute_force_max_size():
        raise SizeLimitError(
            f"matrix size {d.size} exceeds the permutation-sum limit "
            f"of {brute_force_max_size()}"
        )
    parts = matrix_parts(arc_labeling(d), d)
    rows: list[list[int]] = [[] for _ in range(d.size)]
    for row, col in sorted(parts):
        rows[row].append(col)
    groups: dict[frozenset[int], BiLaurent] = {}
    perm: list[int] = []
    used: set[int] = set()

    def walk(row: int, product: BiLaurent, crossings: frozenset[int]):
        if row == d.size:
            term = -product if _permutation_parity(perm) else product
            groups[crossings] = groups.get(crossings, BiLaurent()) + term
            return
        for col in rows[row]:
            if col in used:
                continue
            used.add(col)
            perm.append(col)
            for part in parts[(row, col)]:
                tagged = crossings if part.crossing is None else crossings | {part.crossing}
                walk(row + 1, product * part.value, tagged)
            perm.pop()
            used.discard(col)

    walk(0, ONE, frozenset())
    return groups
