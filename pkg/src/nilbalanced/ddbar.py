"""The (2,3)-th weak ∂∂̄-lemma on a six-dimensional Lie algebra.

Work happens in the θ-coframe of ``J``.  Complex subspaces are spans of
coefficient vectors over ``Q(i)``; the real (2,2)-forms are handled by
splitting every condition into real and imaginary parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .complex_structure import ComplexStructure, Dolbeault, conjugate_theta
from .forms import Form, monomials
from .lie import LieAlgebra6
from .scalars import I, im_part, is_zero, re_part


def bidegree_basis(p, q):
    """θ-monomials of bidegree ``(p, q)``."""
    return [Form(p + q, {h + tuple(a + 3 for a in b): Fraction(1)})
            for h in combinations((1, 2, 3), p) for b in combinations((1, 2, 3), q)]


def real_basis(p):
    """A basis over the reals of the real forms in ``Λ^{p,p}``."""
    raw = []
    for m in bidegree_basis(p, p):
        c = conjugate_theta(m)
        raw.append(m + c)
        raw.append((m - c) * I)
    deg = 2 * p
    # reduce over R using real coordinates
    vecs = [_realify(f.to_vector()) for f in raw]
    red = linalg.span_basis(vecs)
    return [Form.from_vector(deg, _complexify(v)) for v in red]


def _realify(v):
    return [re_part(x) for x in v] + [im_part(x) for x in v]


def _complexify(v):
    n = len(v) // 2
    return [v[k] + v[n + k] * I if not is_zero(v[n + k]) else v[k] for k in range(n)]


@dataclass
class WeakLemmaReport:
    holds: bool
    strong_holds: bool
    dim_partial_13: int  # dim ∂(Λ^{1,3})
    dim_ddbar_12: int    # dim ∂∂̄(Λ^{1,2})
    dim_V: int
    witness: Form = None       # real (2,2)-form, θ-coframe
    witness_dbar: Form = None
    certificates: list = field(default_factory=list)  # (φ, ψ) with ∂̄φ = i∂∂̄ψ

    @property
    def verdict(self):
        return "holds" if self.holds else "fails"


def weak_ddbar_check(g: LieAlgebra6, J: ComplexStructure, certify=False) -> WeakLemmaReport:
    D = Dolbeault(g, J)
    im13 = [D.partial(b).to_vector() for b in bidegree_basis(1, 3)]
    U = linalg.span_basis(im13)
    src12 = bidegree_basis(1, 2)
    ddb = [D.partial(D.dbar(b)).to_vector() for b in src12]
    W = linalg.span_basis(ddb)

    # V = {real φ in Λ^{2,2} : ∂̄φ ∈ U}, cut out by complex functionals vanishing on U
    phis = real_basis(2)
    dbars = [D.dbar(f).to_vector() for f in phis]
    n = len(dbars[0]) if dbars else 0
    ann = linalg.annihilator(U, n)
    rows = []
    for ell in ann:
        vals = [sum((ell[k] * v[k] for k in range(n)), Fraction(0)) for v in dbars]
        rows.append([re_part(x) for x in vals])
        rows.append([im_part(x) for x in vals])
    coeffs = linalg.nullspace(rows, len(phis)) if rows else \
        [[Fraction(int(i == j)) for j in range(len(phis))] for i in range(len(phis))]
    V = []
    for c in coeffs:
        f = Form.zero(4)
        for x, p in zip(c, phis):
            if not is_zero(x):
                f = f + p * x
        V.append(f)

    witness = None
    certs = []
    for phi in V:
        db = D.dbar(phi)
        sol = linalg.solve_in_span(ddb, db.to_vector()) if ddb else None
        if sol is None and db.coeffs:
            witness = phi
            break
        if certify:
            psi = Form.zero(3)
            for x, b in zip(sol or [], src12):
                if not is_zero(x):
                    psi = psi + b * (x / I)
            certs.append((phi, psi))
    strong = linalg.subspace_le(U, W) if U else True
    return WeakLemmaReport(witness is None, strong, len(U), len(W), len(V), witness,
                           D.dbar(witness) if witness is not None else None, certs)


def verify_witness(g: LieAlgebra6, J: ComplexStructure, phi: Form) -> bool:
    """``φ`` real of type (2,2), ``∂̄φ`` is ∂-exact, and ``∂̄φ ∉ ∂∂̄(Λ^{1,2})``."""
    D = Dolbeault(g, J)
    if conjugate_theta(phi) != phi:
        return False
    if any(sum(1 for i in key if i <= 3) != 2 for key in phi.coeffs):
        return False
    db = D.dbar(phi).to_vector()
    U = [D.partial(b).to_vector() for b in bidegree_basis(1, 3)]
    W = [D.partial(D.dbar(b)).to_vector() for b in bidegree_basis(1, 2)]
    return linalg.in_span(linalg.span_basis(U), db) and not linalg.in_span(linalg.span_basis(W), db)
