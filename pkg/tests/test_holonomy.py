import contextlib
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from grid_points import GRID, descriptor, label
from nilbalanced.complex_structure import classify_complex_type
from nilbalanced.connection import bismut_connection, curvature
from nilbalanced.forms import GAMMA, Form, e, gamma
from nilbalanced.hermitian import adapted_hermitian, build_family, i_lambda_adapted
from nilbalanced.holonomy import (SkewSubalgebra, ambrose_singer_closure, bracket,
                                  gamma_coordinates, holonomy_json, identify_subalgebra,
                                  to_endo)
from nilbalanced.lie import preset
from nilbalanced.linalg import span_basis
from nilbalanced.scalars import float_backend

ALL_POINTS = [p for pts in GRID.values() for p in pts]


def gsum(**kw):
    out = Form.zero(2)
    for k, c in kw.items():
        out = out + gamma(int(k[1:])) * c
    return out


def test_bracket_table():
    assert bracket(gamma(2), gamma(3)) == gsum(g1=2)
    assert bracket(gamma(1), gamma(2)) == gsum(g3=2)
    assert bracket(gamma(5), gamma(6)) == gsum(g1=2, g4=2)
    # su(3) is closed under the bracket
    for a in GAMMA:
        for b in GAMMA:
            assert gamma_coordinates(bracket(a, b)) is not None


def test_endomorphism_convention():
    # γ(X, Y) = g(X, A Y): A[p][q] = γ(e_p, e_q)
    m = to_endo(e(1, 2))
    assert m[0][1] == 1 and m[1][0] == -1


two_forms = st.builds(lambda cs: Form(2, {(i, j): c for (i, j), c in zip(
    [(i, j) for i in range(1, 7) for j in range(i + 1, 7)], cs)}),
    st.lists(st.integers(-2, 2), min_size=15, max_size=15))


@settings(max_examples=30, deadline=None)
@given(two_forms, two_forms, two_forms)
def test_bracket_is_a_lie_bracket(a, b, c):
    assert bracket(a, b) == -bracket(b, a)
    jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    assert not jac.coeffs


@pytest.mark.parametrize("point", ALL_POINTS, ids=label)
def test_holonomy_dichotomy(point):
    ctx = float_backend() if point[0] == "float" else contextlib.nullcontext()
    with ctx:
        desc = descriptor(point)
        fs = build_family(desc)
        jtype = classify_complex_type(fs.algebra, fs.H.J)
        assert jtype == desc.complex_type_claim
        b, _ = bismut_connection(fs.algebra, fs.H)
        S = ambrose_singer_closure(fs.algebra, b)
        assert S.is_bracket_closed()
        assert S.in_su3()
        if jtype != "abelian":
            assert S.dim == 8 and identify_subalgebra(S) == "su3"
        elif desc.b2 == 0:
            assert S.dim == 1 and identify_subalgebra(S) == "gamma1"
        else:
            assert S.dim == 3 and identify_subalgebra(S) == "su2"


def test_grid_sizes():
    for family, pts in GRID.items():
        assert len(pts) >= 10, family
    f216 = [kw for _, f, kw in GRID["F216"]]
    assert any(kw["u1"] == 0 for kw in f216)
    assert any(kw["b2"] * kw["u2"] == 2 * kw["s"] ** 2 for kw in f216)


def test_solvable_example_holonomy():
    g = preset("solvable49")
    b, _ = bismut_connection(g, adapted_hermitian())
    S = ambrose_singer_closure(g, b)
    assert S.dim == 8
    assert holonomy_json(S)["label"] == "su3"


@pytest.mark.parametrize("lam,dim", [(Q(0), 3), (Q(1, 4), 8), (Q(1, 2), 8)])
def test_holonomy_jump_along_deformation(lam, dim):
    g, H = i_lambda_adapted(lam)
    b, _ = bismut_connection(g, H)
    assert ambrose_singer_closure(g, b).dim == dim


def test_holonomy_json_shape():
    fs = build_family(descriptor(GRID["F215"][0]))
    b, _ = bismut_connection(fs.algebra, fs.H)
    out = holonomy_json(ambrose_singer_closure(fs.algebra, b))
    assert out == {"dim": 1, "label": "gamma1", "basis": [["gamma1"]]}


def test_identify_other():
    S = SkewSubalgebra(span_basis([gamma(4).to_vector()]))
    assert identify_subalgebra(S) == "other"
    assert identify_subalgebra(SkewSubalgebra([])) == "trivial"
