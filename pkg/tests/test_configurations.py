import pytest

from vknots.alexander import alexander_suite, arc_labeling, build_matrix, determinant
from vknots.configurations import (
    alternating_configurations,
    brute_force_det,
    contribution,
    delta0_via_configurations,
    f0,
    f_polynomials,
    grouped_expansion,
)
from vknots.errors import NonAlternatingError, SizeLimitError
from vknots.gauss import parse_gauss_code
from vknots.laurent import ONE_MINUS_UV, BiLaurent

FIG3 = "U1-O2+U3+O1-O3+U2+"
FIG4 = "O1+O2-U2-U1+O3-O4+U3-U5-U4+O5-"
KNOT_31 = "O1-O2-U1-O3+U2-U3+"


def test_kink_contribution_cancels_f0():
    d = parse_gauss_code("O1+U1+")
    assert contribution(d, [1]) == BiLaurent({(0, 0): 1, (-1, -1): -1})
    assert f0(d) == BiLaurent({(-1, -1): 1, (0, 0): -1})
    assert delta0_via_configurations(d).is_zero()


def test_contributions_three_crossings():
    d = parse_gauss_code(KNOT_31)
    assert contribution(d, [2]) == BiLaurent({(-1, 1): 1, (0, 2): -1})
    assert contribution(d, [1, 3]) == BiLaurent({(0, 0): 2, (1, 1): -1, (-1, -1): -1})


def test_contribution_of_non_alternating_set_fails():
    with pytest.raises(NonAlternatingError):
        contribution(parse_gauss_code(FIG3), [1, 2])


def test_configuration_sum_matches_determinant():
    for code in (FIG3, FIG4, KNOT_31, "O1-O2-U1-U2-O3+O4+U3+U4+"):
        d = parse_gauss_code(code)
        assert delta0_via_configurations(d) == alexander_suite(d).delta0_raw


def test_alternating_configurations_small_code():
    d = parse_gauss_code(FIG3)
    found = {config.chords for config in alternating_configurations(d)}
    assert found == {
        frozenset({1}),
        frozenset({2}),
        frozenset({3}),
        frozenset({2, 3}),
    }


def test_f_polynomials_small_code():
    d = parse_gauss_code(FIG3)
    p0, p1, p2 = f_polynomials(d)
    assert p0 == BiLaurent({(-1, -1): 1, (0, 0): -1})
    assert p1 == BiLaurent({(-1, -1): 1, (0, -1): -1, (-1, 0): -1})
    assert p2 == BiLaurent({(-1, -1): -1})
    raw = alexander_suite(d).delta0_raw
    assert p0 + ONE_MINUS_UV * p1 + ONE_MINUS_UV**2 * p2 == raw


def test_brute_force_matches_laplace_expansion():
    d = parse_gauss_code(FIG4)
    m = build_matrix(arc_labeling(d), d)
    assert brute_force_det(m) == determinant(m)


def test_grouped_expansion_groups():
    d = parse_gauss_code(FIG3)
    groups = grouped_expansion(d)
    assert groups[frozenset()] == f0(d)
    assert groups[frozenset({2, 3})] == contribution(d, [2, 3])
    assert groups.get(frozenset({1, 2}), BiLaurent()).is_zero()
    total = BiLaurent()
    for part in groups.values():
        total = total + part
    assert total == alexander_suite(d).delta0_raw


def test_size_guards(monkeypatch):
    d = parse_gauss_code(FIG4)
    monkeypatch.setenv("VKNOTS_ORACLE_MAX_CHORDS", "3")
    monkeypatch.setenv("VKNOTS_BRUTE_FORCE_MAX_SIZE", "6")
    with pytest.raises(SizeLimitError):
        delta0_via_configurations(d)
    with pytest.raises(SizeLimitError):
        brute_force_det(build_matrix(arc_labeling(d), d))
    with pytest.raises(SizeLimitError):
        grouped_expansion(d)
