import time
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from nilbalanced.forms import Form, e
from nilbalanced.lie import (PRESET_TEXT, LieAlgebra6, StructureParseError, ascending_series,
                             from_json, jacobi_closure_check, parse_structure_equations, preset,
                             reframe, serialize, to_json)


def test_presets_satisfy_d_squared_zero():
    start = time.perf_counter()
    for name in PRESET_TEXT:
        g = preset(name)
        assert jacobi_closure_check(g).ok, name
        for k in range(1, 7):
            assert not g.d(g.d(e(k))).coeffs
    assert len(PRESET_TEXT) == 8
    assert time.perf_counter() - start < 1.0


def test_jacobi_failure_reports_witness():
    g = parse_structure_equations("de5 = e12\nde6 = e35")
    res = jacobi_closure_check(g)
    assert not res.ok
    assert res.k == 6
    assert res.witness == -e(1, 2, 3)


def test_salamon_tuple_normalizes_reversed_pairs():
    g = parse_structure_equations("(0,0,0,0,13+42,14+23)")
    assert g.de[4] == e(1, 3) - e(2, 4)
    assert g.de[5] == e(1, 4) + e(2, 3)


def test_equation_lines_with_rational_coefficients():
    g = parse_structure_equations("de5 = 1/2 e12 - 3*e34\n# comment\n\nde6 = e13")
    assert g.de[4] == e(1, 2) * Q(1, 2) - e(3, 4) * 3
    assert g.de[5] == e(1, 3)


@pytest.mark.parametrize("text,line,col", [
    ("de5 = e12\nxx = 3", 2, 1),
    ("de9 = e12", 1, 3),
    ("(0,0,0,0,12)", 1, 2),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(StructureParseError) as info:
        parse_structure_equations(text)
    assert info.value.line == line
    assert info.value.column == col


def test_serialize_and_json_round_trip():
    for name in PRESET_TEXT:
        g = preset(name)
        assert parse_structure_equations(serialize(g)) == g
        assert from_json(to_json(g)) == g


def test_bracket_sign_convention():
    # de^5 = e^{12} means [e_1, e_2] = -e_5
    g = parse_structure_equations("de5 = e12")
    assert g.bracket_vector(1, 2) == [0, 0, 0, 0, -1, 0]


def test_ascending_series_dimensions():
    assert ascending_series(preset("h5")).dims == [0, 2, 6]
    assert ascending_series(preset("h19-")).dims == [0, 1, 3, 6]
    assert not ascending_series(preset("solvable49")).reaches_all


coef = st.integers(-3, 3).filter(bool)


@settings(max_examples=25, deadline=None)
@given(coef, coef, st.integers(-2, 2))
def test_reframe_preserves_jacobi(a, b, c):
    g = preset("h4")
    A = [[Q(int(i == j)) for j in range(6)] for i in range(6)]
    A[0][0], A[4][4], A[5][1] = Q(a), Q(b), Q(c)
    h = reframe(g, A)
    assert jacobi_closure_check(h).ok
    # reframing back recovers the original equations
    from nilbalanced.linalg import inverse
    assert reframe(h, inverse(A)) == g


def test_wrong_equation_count():
    with pytest.raises(ValueError):
        LieAlgebra6([Form.zero(2)] * 5)
