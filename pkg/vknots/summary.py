"""Assemble invariant reports shared by the CLI, the HTTP API and table output."""

from __future__ import annotations

from dataclasses import asdict

from vknots.alexander import alexander_suite
from vknots.bounds import bounds_report, mutant_family
from vknots.gauss import GaussDiagram, format_gauss_code, writhe
from vknots.laurent import BiLaurent, UniLaurent
from vknots.schemas.invariants import (
    AlexanderOut,
    BoundsOut,
    IndexRow,
    InvariantsResponse,
    MutantResponse,
    Polynomial,
    VOut,
    WritheOut,
)
from vknots.smoothing import classify_pair
from vknots.writhe import VResidue, v_equivalent, v_polynomial, writhe_invariants


def polynomial(p: BiLaurent | UniLaurent) -> Polynomial:
    return Polynomial(text=p.render(), terms=p.to_json())


def index_rows(d: GaussDiagram) -> list[IndexRow]:
    return [
        IndexRow(chord=c.id, sign=c.sign, **asdict(d.index_table[c.id]))
        for c in d.chords
    ]


def alexander_out(d: GaussDiagram) -> AlexanderOut:
    suite = alexander_suite(d)
    return AlexanderOut(
        delta0=polynomial(suite.delta0),
        delta0_raw=polynomial(suite.delta0_raw),
        delta0_prime=polynomial(suite.delta0_prime),
        delta0_bar=polynomial(suite.delta0_bar),
        phi=polynomial(suite.phi),
    )


def writhe_out(d: GaussDiagram) -> WritheOut:
    inv = writhe_invariants(d)
    return WritheOut(
        w=polynomial(inv.w), wn=inv.wn, odd_writhe=inv.odd_writhe, writhe=writhe(d)
    )


def v_out(d: GaussDiagram) -> VOut:
    v = v_polynomial(d)
    return VOut(v_rep=polynomial(v.v_rep), modulus=polynomial(v.modulus))


def bounds_out(d: GaussDiagram) -> BoundsOut:
    return BoundsOut(**asdict(bounds_report(d)))


def summarize(d: GaussDiagram) -> InvariantsResponse:
    return InvariantsResponse(
        code=format_gauss_code(d),
        chords=d.n,
        indices=index_rows(d),
        alexander=alexander_out(d),
        writhe=writhe_out(d),
        v=v_out(d),
        bounds=bounds_out(d),
    )


def mutant_summary(k: int) -> MutantResponse:
    knot, mutant = mutant_family(k)
    v_knot, v_mutant = v_polynomial(knot), v_polynomial(mutant)
    difference = v_knot.v_rep - v_mutant.v_rep
    return MutantResponse(
        k=k,
        knot=format_gauss_code(knot),
        mutant=format_gauss_code(mutant),
        w=polynomial(v_knot.modulus),
        v_knot=polynomial(v_knot.v_rep),
        v_mutant=polynomial(v_mutant.v_rep),
        difference=polynomial(difference),
        difference_is_multiple=v_equivalent(
            VResidue(v_knot.v_rep, v_knot.modulus),
            VResidue(v_mutant.v_rep, v_knot.modulus),
        ),
        pair_type_knot=classify_pair(knot, k + 1, k + 3).value,
        pair_type_mutant=classify_pair(mutant, k + 1, k + 3).value,
    )
