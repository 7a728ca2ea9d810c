"""Lower bounds read off the writhe polynomials, and the mutant pair family."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from vknots.gauss import GaussDiagram
from vknots.laurent import T_MINUS_ONE, UniLaurent, divide_exact
from vknots.metrics import observe_computation
from vknots.writhe import VResidue, v_polynomial, writhe_invariants

Obstruction = Literal["yes", "no", "inconclusive"]


@dataclass(frozen=True)
class BoundsReport:
    vc_lower: int
    forbidden_lower_w: int
    forbidden_one_excluded: Obstruction


def vc_lower_bound(w: UniLaurent) -> int:
    """Half the width of W, rounded up, bounds the virtual crossing number."""
    return math.ceil(w.shape().width / 2)


def w_prime(w: UniLaurent) -> UniLaurent:
    return divide_exact(w, T_MINUS_ONE)


def forbidden_lower_bound(w: UniLaurent) -> int:
    if w.is_zero():
        return 0
    return math.ceil(w_prime(w).shape().coeff_abs_sum / 2)


def forbidden_one_obstruction(v: VResidue) -> Obstruction:
    """Whether V rules out unknotting with a single forbidden move.

    One forbidden move leaves at most four terms in V, at most two with even
    and at most two with odd exponents. Only meaningful while W vanishes.
    """
    if not v.modulus.is_zero():
        return "inconclusive"
    exponents = [i for i, _ in v.v_rep.items()]
    even = sum(1 for i in exponents if i % 2 == 0)
    odd = len(exponents) - even
    if len(exponents) > 4 or even > 2 or odd > 2:
        return "yes"
    return "no"


@observe_computation("bounds_report")
def bounds_report(d: GaussDiagram) -> BoundsReport:
    w = writhe_invariants(d).w
    return BoundsReport(
        vc_lower=vc_lower_bound(w),
        forbidden_lower_w=forbidden_lower_bound(w),
        forbidden_one_excluded=forbidden_one_obstruction(v_polynomial(d)),
    )


def mutant_family(k: int) -> tuple[GaussDiagram, GaussDiagram]:
    """The all-positive knot K_k and its positive reflection mutant MK_k.

    Both have k + 3 chords; chords k+1 and k+3 form a pair of type B in K and
    of type A in MK, which separates the two by V while W agrees.
    """
    if k < 1:
        raise ValueError(f"mutant family needs k >= 1, got {k}")
    low = list(range(1, k + 1))
    a, b, c = k + 1, k + 2, k + 3
    knot = (
        [(a, "O")]
        + [(i, "U") for i in low]
        + [(c, "U"), (b, "U"), (c, "O"), (a, "U"), (b, "O")]
        + [(i, "O") for i in reversed(low)]
    )
    mutant = (
        [(a, "O"), (b, "U")]
        + [(i, "U") for i in low]
        + [(a, "U")]
        + [(i, "O") for i in reversed(low)]
        + [(c, "O"), (b, "O"), (c, "U")]
    )
    return (
        GaussDiagram.from_sequence((i, role, 1) for i, role in knot),
        GaussDiagram.from_sequence((i, role, 1) for i, role in mutant),
    )
