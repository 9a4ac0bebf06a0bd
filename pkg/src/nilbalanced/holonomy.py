"""Holonomy algebras of invariant metric connections.

Skew endomorphisms are handled as 2-forms through ``γ(X, Y) = g(X, A Y)``, so
the matrix of ``A`` in the orthonormal frame is ``A[p][q] = γ(e_p, e_q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .connection import ConnectionForms, covariant_derivative_form, curvature
from .forms import DIM, GAMMA, INDICES, Form
from .lie import LieAlgebra6
from .scalars import fmt, is_float, is_zero

LABELS = ("trivial", "gamma1", "su2", "su3", "other")


def to_endo(a: Form):
    return [[a[(p, q)] if p != q else Fraction(0) for q in INDICES] for p in INDICES]


def from_endo(m) -> Form:
    for p in range(DIM):
        for q in range(DIM):
            if not is_zero(m[p][q] + m[q][p]):
                raise ValueError("endomorphism is not skew")
    return Form(2, {(p + 1, q + 1): m[p][q] for p in range(DIM) for q in range(p + 1, DIM)})


def bracket(a: Form, b: Form) -> Form:
    x, y = to_endo(a), to_endo(b)
    xy, yx = linalg.matmul(x, y), linalg.matmul(y, x)
    return from_endo([[xy[i][j] - yx[i][j] for j in range(DIM)] for i in range(DIM)])


_GAMMA_VECS = [gm.to_vector() for gm in GAMMA]


def gamma_coordinates(a: Form):
    """Coordinates of ``a`` on ``γ_1..γ_8``, or ``None`` if outside their span."""
    return linalg.solve_in_span(_GAMMA_VECS, a.to_vector())


@dataclass
class SkewSubalgebra:
    basis: list  # row-reduced coordinate vectors on the e^{ij} basis
    rounds: int = 0
    pivot_gap: object = None  # smallest kept pivot on the float backend

    @property
    def dim(self) -> int:
        return len(self.basis)

    def forms(self):
        return [Form.from_vector(2, v) for v in self.basis]

    def contains(self, a: Form) -> bool:
        return linalg.in_span(self.basis, a.to_vector())

    def is_bracket_closed(self) -> bool:
        fs = self.forms()
        return all(self.contains(bracket(a, b)) for i, a in enumerate(fs) for b in fs[i + 1:])

    def in_su3(self) -> bool:
        return all(gamma_coordinates(a) is not None for a in self.forms())

    def gamma_basis(self):
        """Row-reduced basis in γ-coordinates (``None`` when outside su(3))."""
        coords = [gamma_coordinates(a) for a in self.forms()]
        if any(c is None for c in coords):
            return None
        return linalg.span_basis(coords)


def _span(vectors):
    red, piv = linalg.rref(vectors)
    gap = None
    if red and any(is_float(x) for row in vectors for x in row):
        # rows are normalized, so the gap is read from the unnormalized rank profile
        gap = min(abs(x) for row in vectors for x in row if not is_zero(x))
    return red, gap


def ambrose_singer_closure(g: LieAlgebra6, conn: ConnectionForms, max_rounds=20) -> SkewSubalgebra:
    """Span of curvature endomorphisms closed under ``∇_{e_j}`` and brackets."""
    C = curvature(g, conn)
    vecs = [C.R(p, q).to_vector() for p in INDICES for q in INDICES if p < q]
    basis, gap = _span(vecs)
    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        fs = [Form.from_vector(2, v) for v in basis]
        new = list(basis)
        for a in fs:
            for j in INDICES:
                new.append(covariant_derivative_form(conn, a, j).to_vector())
        for i, a in enumerate(fs):
            for b in fs[i + 1:]:
                new.append(bracket(a, b).to_vector())
        grown, gap = _span(new)
        if len(grown) == len(basis):
            basis = grown
            break
        basis = grown
    return SkewSubalgebra(basis, rounds, gap)


def _named_span(indices):
    return [GAMMA[i - 1].to_vector() for i in indices]


def identify_subalgebra(S: SkewSubalgebra) -> str:
    if S.dim == 0:
        return "trivial"
    if S.dim == 1 and linalg.subspace_eq(S.basis, _named_span([1])):
        return "gamma1"
    if S.dim == 3 and linalg.subspace_eq(S.basis, _named_span([1, 2, 3])):
        return "su2"
    if S.dim == 8 and linalg.subspace_eq(S.basis, _named_span(range(1, 9))):
        return "su3"
    return "other"


def _basis_terms(S: SkewSubalgebra):
    gb = S.gamma_basis()
    if gb is None:
        return [[f"{fmt(c)}*e{i}{j}" for (i, j), c in sorted(f.coeffs.items())] for f in S.forms()]
    out = []
    for row in gb:
        terms = []
        for k, c in enumerate(row):
            if is_zero(c):
                continue
            name = f"gamma{k + 1}"
            terms.append(name if c == 1 else f"{fmt(c)}*{name}")
        out.append(terms)
    return out


def holonomy_json(S: SkewSubalgebra) -> dict:
    label = identify_subalgebra(S)
    d = {"dim": S.dim, "label": label, "basis": _basis_terms(S)}
    if S.pivot_gap is not None:
        d["pivot_gap"] = fmt(S.pivot_gap)
    return d
