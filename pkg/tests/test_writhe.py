import pytest

from vknots.errors import ModulusMismatchError
from vknots.gauss import parse_gauss_code, transform
from vknots.laurent import UniLaurent
from vknots.writhe import (
    VResidue,
    bridge_check,
    chord_terms,
    v_equivalent,
    v_multiple,
    v_polynomial,
    writhe_invariants,
)

FIG3 = "U1-O2+U3+O1-O3+U2+"
KNOT_42 = "O1-O2-U1-U2-O3+O4+U3+U4+"
KNOT_31 = "O1-O2-U1-O3+U2-U3+"
FIG14 = "O1-U2+O3-U1-O4+U5-O6+U3-O2+U6+O5-U4+"

P = UniLaurent.parse


def test_writhe_polynomial_small_code():
    inv = writhe_invariants(parse_gauss_code(FIG3))
    assert inv.w == P("-2 + t^-1 + t")
    assert inv.wn == {-1: 1, 0: -2, 1: 1}
    assert inv.odd_writhe == 2
    assert inv.w.eval(1) == 0


def test_v_polynomial_small_code():
    v = v_polynomial(parse_gauss_code(FIG3))
    assert v.v_rep == P("1 - t")
    assert v.modulus == P("-2 + t^-1 + t")


def test_four_crossing_knot():
    d = parse_gauss_code(KNOT_42)
    assert writhe_invariants(d).w.is_zero()
    printed = P("2+t^-2-2*t^-1-2*t+t^2")
    assert v_polynomial(d).v_rep == -printed
    assert v_polynomial(transform(d, "switch_all")).v_rep == printed
    assert v_polynomial(transform(d, "reverse")).v_rep == printed
    assert v_polynomial(transform(d, "mirror")).v_rep == -printed


def test_three_crossing_knot():
    d = parse_gauss_code(KNOT_31)
    w = writhe_invariants(d).w
    assert w == P("1 - t^-2 + t^-1 - t")
    v = v_polynomial(d)
    assert v.v_rep == P("-1 + t^-1 + t - t^-2")
    tabulated = VResidue(P("2 - 2*t"), w)
    assert not v_equivalent(tabulated, v)
    assert v_equivalent(tabulated, VResidue(-v.v_rep, w))
    assert v_multiple(tabulated, VResidue(-v.v_rep, w)) == 1


def test_twelve_crossing_writhe_polynomial():
    d = parse_gauss_code(FIG14)
    printed = P("t^-4-2*t^-2+2*t^2-t^4")
    assert writhe_invariants(d).w == -printed
    assert writhe_invariants(transform(d, "reverse")).w == printed
    assert writhe_invariants(transform(d, "mirror")).w == -printed


def test_empty_diagram():
    d = parse_gauss_code("")
    assert writhe_invariants(d).w.is_zero()
    assert v_polynomial(d).v_rep.is_zero()


def test_kink_is_trivial():
    d = parse_gauss_code("O1+U1+")
    assert writhe_invariants(d).w.is_zero()
    assert writhe_invariants(d).wn == {}
    assert v_polynomial(d).v_rep.is_zero()


def test_v_multiple():
    w = P("-2 + t^-1 + t")
    base = VResidue(P("1 - t"), w)
    shifted = VResidue(P("1 - t") - w.scale(3), w)
    assert v_multiple(base, shifted) == 3
    assert v_multiple(base, base) == 0
    assert v_multiple(base, VResidue(P("1"), w)) is None
    assert not v_equivalent(base, VResidue(P("1"), w))
    zero = UniLaurent()
    assert v_multiple(VResidue(P("t"), zero), VResidue(P("t^2"), zero)) is None


def test_v_multiple_needs_equal_moduli():
    with pytest.raises(ModulusMismatchError):
        v_multiple(VResidue(P("1"), P("t - 1")), VResidue(P("1"), UniLaurent()))


def test_chord_terms_include_touching_pairs():
    d = parse_gauss_code(FIG3)
    # single term of chord 2 is -t, the type B pair (2, 3) adds -1
    assert chord_terms(d, [2]) == P("-1 - t")
    assert chord_terms(d, [1]) == P("1")


def test_bridge_checks_on_known_knots():
    for code in (FIG3, KNOT_42, KNOT_31, FIG14):
        check = bridge_check(parse_gauss_code(code))
        assert check.w_ok
        assert check.v_ok
