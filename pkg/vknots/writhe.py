"""Writhe polynomial W_K(t) and the second-order polynomial V_D(t)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from vknots.errors import ModulusMismatchError
from vknots.gauss import GaussDiagram, n_writhes, writhe
from vknots.laurent import UniLaurent
from vknots.metrics import observe_computation
from vknots.smoothing import PairType, alternating_pairs

logger = logging.getLogger("vknots.writhe")


@dataclass(frozen=True)
class WritheInvariants:
    w: UniLaurent
    wn: dict[int, int]
    odd_writhe: int


@dataclass(frozen=True)
class VResidue:
    """A representative of V_K together with the modulus W_K."""

    v_rep: UniLaurent
    modulus: UniLaurent


@dataclass(frozen=True)
class BridgeCheck:
    w_ok: bool
    v_ok: bool


@observe_computation("writhe_invariants")
def writhe_invariants(d: GaussDiagram) -> WritheInvariants:
    wn = dict(n_writhes(d))
    w0 = wn.get(0, 0) - writhe(d)
    if w0:
        wn[0] = w0
    else:
        wn.pop(0, None)
    wn = dict(sorted(wn.items()))
    return WritheInvariants(
        w=UniLaurent(wn),
        wn=wn,
        odd_writhe=sum(v for n, v in wn.items() if n % 2),
    )


def _single_term(d: GaussDiagram, chord_id: int) -> UniLaurent:
    eps = d.chord(chord_id).sign
    rec = d.index_table[chord_id]
    return UniLaurent.monomial(rec.ind, eps * (rec.lo - (1 + eps) // 2))


def _pair_term(d: GaussDiagram, c1: int, c2: int, kind: PairType) -> UniLaurent:
    table = d.index_table
    coeff = d.chord(c1).sign * d.chord(c2).sign
    if kind is PairType.B:
        coeff = -coeff
    return UniLaurent.monomial(table[c1].ind + table[c2].ind, coeff)


def chord_terms(d: GaussDiagram, chords: Iterable[int]) -> UniLaurent:
    """The part of V_D made of single terms of ``chords`` and every pair touching them."""
    ids = set(chords)
    total = UniLaurent()
    for chord_id in sorted(ids):
        total = total + _single_term(d, chord_id)
    for c1, c2, kind in alternating_pairs(d):
        if c1 in ids or c2 in ids:
            total = total + _pair_term(d, c1, c2, kind)
    return total


@observe_computation("v_polynomial")
def v_polynomial(d: GaussDiagram) -> VResidue:
    wr = writhe(d)
    total = UniLaurent.constant(wr * (wr + 1) // 2)
    for chord_id in d.ids:
        total = total + _single_term(d, chord_id)
    for c1, c2, kind in alternating_pairs(d):
        total = total + _pair_term(d, c1, c2, kind)
    return VResidue(v_rep=total, modulus=writhe_invariants(d).w)


def v_multiple(a: VResidue, b: VResidue) -> int | None:
    """The integer n with a.v_rep - b.v_rep = n * W, or None."""
    if a.modulus != b.modulus:
        raise ModulusMismatchError(
            f"moduli differ: {a.modulus.render()} vs {b.modulus.render()}"
        )
    diff = a.v_rep - b.v_rep
    if diff.is_zero():
        return 0
    if a.modulus.is_zero():
        return None
    exponent, coeff = next(iter(a.modulus.items()))
    n, rest = divmod(diff.coefficient(exponent), coeff)
    if rest or diff != a.modulus.scale(n):
        return None
    return n


def v_equivalent(a: VResidue, b: VResidue) -> bool:
    return v_multiple(a, b) is not None


def bridge_check(d: GaussDiagram) -> BridgeCheck:
    from vknots.alexander import alexander_suite

    suite = alexander_suite(d)
    w = writhe_invariants(d).w
    v = v_polynomial(d).v_rep
    result = BridgeCheck(
        w_ok=suite.delta0_prime_raw.substitute_diag() == -w,
        v_ok=suite.phi.substitute_diag() == v,
    )
    logger.debug("bridge check %s for %d chords", result, d.n)
    return result
