import json
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from nilbalanced.complex_structure import ComplexStructure
from nilbalanced.connection import bismut_connection, nabla_psi_zero
from nilbalanced.hermitian import (DomainError, FamilyDescriptor, NotHermitian, PositivityError,
                                   adapted_hermitian, balanced_check, build_family, build_hermitian,
                                   check_positivity, classify_underlying_algebra,
                                   coframe_map_from_theta, h3_minus_diagonalizing,
                                   h3_minus_equations, hermitian_from_metric, i_lambda,
                                   i_lambda_adapted, i_lambda_printed_metric, identify_algebra,
                                   identify_two_step, nilpotent_balanced_residual_formula,
                                   nilpotent_equations, nilpotent_structure, verify_equivalence)
from nilbalanced.forms import wedge
from nilbalanced.lie import PRESET_TEXT, preset, reframe
from nilbalanced.linalg import identity
from nilbalanced.scalars import float_backend, gauss, to_float

J0 = ComplexStructure.adapted()
q = st.fractions(-3, 3, max_denominator=4)


@pytest.mark.parametrize("coeffs,cond", [
    ({"r2": -1}, "r^2 > 0"),
    ({"s2": 0}, "s^2 > 0"),
    ({"u": gauss(1, 1)}, "r^2 s^2 > |u|^2"),
    ({"v": Q(2)}, "s^2 t^2 > |v|^2"),
    ({"z": gauss(0, 3)}, "r^2 t^2 > |z|^2"),
])
def test_positivity_names_condition(coeffs, cond):
    with pytest.raises(PositivityError) as info:
        build_hermitian(coeffs, J0)
    assert info.value.condition == cond


def test_positivity_determinant_condition():
    with pytest.raises(PositivityError) as info:
        check_positivity(1, 1, 1, Q(3, 4), Q(3, 4), Q(3, 4))
    assert "r^2 s^2 t^2" in info.value.condition


@settings(max_examples=30, deadline=None)
@given(st.fractions(-Q(2, 3), Q(2, 3), max_denominator=6),
       st.fractions(-Q(2, 3), Q(2, 3), max_denominator=6), st.fractions(1, 4, max_denominator=3))
def test_fundamental_form_compatible(u1, u2, t2):
    H = build_hermitian({"r2": 1, "s2": 1, "t2": t2, "u": gauss(u1, u2)}, J0)
    back = hermitian_from_metric(J0, H.metric)
    assert back.F == H.F


def test_non_invariant_metric_rejected():
    m = identity(6)
    m[0][0] = Q(2)
    with pytest.raises(NotHermitian):
        hermitian_from_metric(J0, m)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 1]), st.fractions(0, 3, max_denominator=3), q, q,
       st.fractions(1, 3, max_denominator=3), st.fractions(1, 3, max_denominator=3),
       st.fractions(Q(-2, 3), Q(2, 3), max_denominator=3), st.fractions(Q(-2, 3), Q(2, 3), max_denominator=3))
def test_balanced_residual_formula(rho, b2, x, y, s2, t2, u1, u2):
    # |u|^2 <= 8/9 < 1 <= s^2 by construction
    u = gauss(u1, u2)
    g, H = nilpotent_structure(rho, b2, x, y, s2, t2, u)
    res = balanced_check(g, H).residual
    expected = H.J.from_theta(nilpotent_balanced_residual_formula(rho, b2, x, y, s2, t2, u))
    assert res * 4 == expected


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([0, 1]), st.fractions(0, 3, max_denominator=3), q, q)
def test_underlying_algebra_table(rho, b2, x, y):
    if b2 == rho and rho == 0 and x == 0 and y == 0:
        return
    g = nilpotent_equations(rho, b2, x, y)
    assert classify_underlying_algebra(rho, b2, x, y) == identify_two_step(g)


def test_presets_identified():
    for name in ("h2", "h3", "h4", "h5", "h6", "h8", "h19-"):
        assert identify_algebra(preset(name)) == name
    assert identify_algebra(preset("solvable49")) == "unidentified"


@pytest.mark.parametrize("desc,name", [
    (FamilyDescriptor("F214", t=Q(1)), "h5"),
    (FamilyDescriptor("F215", rho=0, b2=Q(0), s=Q(1), t=Q(1)), "h3"),
    (FamilyDescriptor("F215", rho=0, b2=Q(1), s=Q(1), t=Q(1)), "h5"),
    (FamilyDescriptor("F217", s=Q(1), r=Q(1)), "h19-"),
    (FamilyDescriptor("F218", s=Q(1), t=Q(5, 4), r=Q(1)), "h19-"),
])
def test_family_algebras(desc, name):
    assert identify_algebra(build_family(desc).algebra) == name


def test_families_balanced_in_adapted_frame():
    for desc in (FamilyDescriptor("F214", t=Q(3)),
                 FamilyDescriptor("F215", rho=1, b2=Q(2), s=Q(3), t=Q(1, 2)),
                 FamilyDescriptor("F216", rho=0, b2=Q(1), s=Q(5), t=Q(2), u1=Q(9, 5), u2=Q(12, 5)),
                 FamilyDescriptor("F217", s=Q(1, 2), r=Q(3), sign=-1),
                 FamilyDescriptor("F218", s=Q(5, 4), t=Q(1), r=Q(1))):
        fs = build_family(desc)
        assert balanced_check(fs.algebra, fs.H).balanced


@pytest.mark.parametrize("kw,msg", [
    (dict(family="F214", t=0), "t != 0"),
    (dict(family="F216", s=Q(1), u1=Q(1), u2=Q(1)), "s^2 > |u|^2"),
    (dict(family="F216", s=Q(1)), "|u|^2 > 0"),
    (dict(family="F218", s=Q(1), t=Q(1)), "s^2 t^2 > 1"),
    (dict(family="F215", b2=Q(-1)), "b^2 >= 0"),
    (dict(family="F219"), "unknown family"),
])
def test_descriptor_domain(kw, msg):
    with pytest.raises(DomainError, match=msg.replace("^", r"\^").replace("|", r"\|")):
        FamilyDescriptor(**kw)


def test_descriptor_json_round_trip():
    d = FamilyDescriptor("F216", rho=1, b2=Q(2), s=Q(5), t=Q(1, 3), u1=Q(9, 5), u2=Q(12, 5))
    text = json.dumps(d.to_json())
    assert FamilyDescriptor.from_json(json.loads(text)) == d
    alt = FamilyDescriptor.from_json({"family": "F215", "delta": "1", "s": "2", "t": "1"})
    assert alt.b2 == 1


def test_balanced_iff_psi_parallel():
    # positive examples: every adapted family
    for desc in (FamilyDescriptor("F214", t=Q(1)),
                 FamilyDescriptor("F215", rho=1, b2=Q(1), s=Q(1), t=Q(1)),
                 FamilyDescriptor("F217", s=Q(1), r=Q(1))):
        fs = build_family(desc)
        b, _ = bismut_connection(fs.algebra, fs.H)
        assert balanced_check(fs.algebra, fs.H).balanced
        assert nabla_psi_zero(b, fs.H)
    # negative: reduced equations with s^2 + x != 0 violate the balanced condition
    g = reframe(nilpotent_equations(1, Q(0), Q(0), Q(0)), identity(6))
    H = adapted_hermitian()
    assert not balanced_check(g, H).balanced
    b, _ = bismut_connection(g, H)
    assert not nabla_psi_zero(b, H)


def test_diagonalizing_equivalence_on_h3_minus():
    with float_backend():
        g = h3_minus_equations()
        H = build_hermitian({"r2": 1, "s2": 1, "t2": Q(2), "u": Q(3, 5)}, J0)
        assert balanced_check(g, H).balanced
        rows, a33 = h3_minus_diagonalizing(to_float(Q(3, 5)))
        assert abs(a33 - to_float(Q(4, 5))) < 1e-40
        A = coframe_map_from_theta(J0, rows)
        H2 = build_hermitian({"r2": 1, "s2": 1, "t2": to_float(Q(2)) / abs(a33) ** 2}, J0)
        assert verify_equivalence(g, H, g, H2, A).equivalent
        wrong = build_hermitian({"r2": 1, "s2": 1, "t2": to_float(Q(2))}, J0)
        res = verify_equivalence(g, H, g, wrong, A)
        assert res.lie_isomorphism and res.intertwines_J and not res.pulls_back_F


def test_singular_equivalence_rejected():
    g = preset("h5")
    H = adapted_hermitian()
    A = identity(6)
    A[5][5] = Q(0)
    with pytest.raises(ValueError):
        verify_equivalence(g, H, g, H, A)


def test_i_lambda_structure():
    for lam in (Q(0), Q(1, 4), Q(1, 2)):
        g, H = i_lambda_adapted(lam)
        assert balanced_check(g, H).balanced
        assert identify_algebra(g) == "h5"
    with pytest.raises(DomainError):
        i_lambda(Q(1))


def test_printed_i_lambda_metric_needs_c4_equal_k2_c3():
    with float_backend():
        lam = to_float(Q(0))
        g, J = i_lambda(lam)
        assert balanced_check(g, hermitian_from_metric(J, i_lambda_printed_metric(lam))).balanced
    for lam in (Q(1, 4), Q(1, 2)):
        g, J = i_lambda(lam)
        k = (lam + 1) / (lam - 1)
        m = identity(6)
        m[3][3] = k * k
        m[4][4] = m[5][5] = (lam + 1) ** 2
        assert balanced_check(g, hermitian_from_metric(J, m)).balanced


def test_wedge_of_F_squared_closed_for_balanced():
    fs = build_family(FamilyDescriptor("F215", rho=1, b2=Q(1), s=Q(2), t=Q(3)))
    F2 = wedge(fs.H.F, fs.H.F)
    assert not fs.algebra.d(F2).coeffs
