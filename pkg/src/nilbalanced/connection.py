"""Invariant metric connections in an orthonormal adapted frame.

Connection 1-forms follow ``σ^i_j(e_k) = g(∇_{e_k} e_j, e_i)``; curvature is
``Ω^i_j = dσ^i_j + Σ_k σ^i_k ∧ σ^k_j``.  The curvature endomorphism satisfies
``g(R(e_p,e_q)e_i, e_j) = -Ω^i_j(e_p,e_q)``; it is stored as a 2-form through
``γ(X, Y) = g(X, A Y)``, which makes it ``Σ_{i<j} Ω^i_j(e_p, e_q) e^{ij}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex_structure import j_pullback
from .forms import DIM, INDICES, Form, e, evaluate, wedge
from .hermitian import HermitianData
from .lie import LieAlgebra6
from .scalars import fmt, is_zero, parse_rational

TAGS = ("levi-civita", "bismut", "chern", "custom-instanton")


class NotOrthonormal(ValueError):
    pass


@dataclass
class ConnectionForms:
    tag: str
    sigma: list  # sigma[i-1][j-1] is the 1-form σ^i_j

    def __call__(self, i, j) -> Form:
        return self.sigma[i - 1][j - 1]

    def value(self, i, j, k):
        """``σ^i_j(e_k)``."""
        return self.sigma[i - 1][j - 1][(k,)]

    def is_skew(self) -> bool:
        return all(self.sigma[a][b] == -self.sigma[b][a] for a in range(DIM) for b in range(DIM))

    def is_flat_forms(self) -> bool:
        return all(not f.coeffs for row in self.sigma for f in row)

    def to_json(self) -> dict:
        entries = []
        for i in INDICES:
            for j in INDICES:
                for (k,), c in sorted(self(i, j).coeffs.items()):
                    entries.append([i, j, k, fmt(c)])
        return {"tag": self.tag, "entries": entries}

    @classmethod
    def from_json(cls, obj) -> "ConnectionForms":
        sig = [[dict() for _ in INDICES] for _ in INDICES]
        for i, j, k, c in obj["entries"]:
            sig[i - 1][j - 1][(k,)] = parse_rational(c)
        return cls(obj.get("tag", "custom-instanton"), [[Form(1, d) for d in row] for row in sig])


def from_values(tag, fn) -> ConnectionForms:
    """Build σ from ``fn(i, j, k) = σ^i_j(e_k)``."""
    return ConnectionForms(tag, [[Form(1, {(k,): fn(i, j, k) for k in INDICES})
                                  for j in INDICES] for i in INDICES])


def _require_orthonormal(H: HermitianData):
    for a in range(DIM):
        for b in range(DIM):
            if not is_zero(H.metric[a][b] - (1 if a == b else 0)):
                raise NotOrthonormal("connection formulas need an orthonormal adapted frame")


# ---- Levi-Civita, Bismut, Chern ------------------------------------------------

def levi_civita_forms(g: LieAlgebra6) -> ConnectionForms:
    c = g.c
    return from_values("levi-civita",
                       lambda i, j, k: (c(i, j, k) - c(k, i, j) + c(j, k, i)) / 2)


def torsion_form(g: LieAlgebra6, H: HermitianData) -> Form:
    """Bismut torsion ``T = J dF``."""
    return j_pullback(H.J, g.d(H.F))


def bismut_connection(g: LieAlgebra6, H: HermitianData):
    _require_orthonormal(H)
    lc = levi_civita_forms(g)
    T = torsion_form(g, H)
    conn = from_values("bismut", lambda i, j, k: lc.value(i, j, k) - evaluate(T, (i, j, k)) / 2)
    return conn, T


def chern_connection(g: LieAlgebra6, H: HermitianData) -> ConnectionForms:
    """``g(∇_X Y, Z) = g(∇^g_X Y, Z) + ½ dF(JX, Y, Z)``."""
    _require_orthonormal(H)
    lc = levi_civita_forms(g)
    dF = g.d(H.F)
    jv = H.J.vector_matrix
    jcols = [[jv[r][k] for r in range(DIM)] for k in range(DIM)]
    unit = [[Fraction(int(r == k)) for r in range(DIM)] for k in range(DIM)]
    return from_values("chern", lambda i, j, k: lc.value(i, j, k)
                       + evaluate(dF, [jcols[k - 1], unit[j - 1], unit[i - 1]]) / 2)


# ---- properties -------------------------------------------------------------------

def torsion_of(g: LieAlgebra6, conn: ConnectionForms, x, y):
    """``T(e_x, e_y) = ∇_x e_y - ∇_y e_x - [e_x, e_y]`` as a coordinate vector."""
    br = g.bracket_vector(x, y)
    return [conn.value(i, y, x) - conn.value(i, x, y) - br[i - 1] for i in INDICES]


def is_torsion_free(g, conn) -> bool:
    return all(is_zero(v) for x in INDICES for y in INDICES for v in torsion_of(g, conn, x, y))


def preserves_metric(conn: ConnectionForms) -> bool:
    return conn.is_skew()


J_RELATIONS = ((1, 3, 2, 4, 1), (1, 4, 2, 3, -1), (1, 5, 2, 6, 1),
               (1, 6, 2, 5, -1), (3, 5, 4, 6, 1), (3, 6, 4, 5, -1))


def preserves_J(conn: ConnectionForms, H: HermitianData) -> bool:
    """Connection matrices commute with ``J`` in every direction."""
    jv = H.J.vector_matrix
    for k in INDICES:
        m = [[conn.value(i, j, k) for j in INDICES] for i in INDICES]
        for a in range(DIM):
            for b in range(DIM):
                mj = sum((m[a][r] * jv[r][b] for r in range(DIM)), Fraction(0))
                jm = sum((jv[a][r] * m[r][b] for r in range(DIM)), Fraction(0))
                if not is_zero(mj - jm):
                    return False
    return True


def j_relations_hold(conn: ConnectionForms) -> bool:
    """The six relations ``σ¹₃ = σ²₄, σ¹₄ = -σ²₃, ...`` of the adapted frame."""
    return all(conn(a, b) == conn(c, d) * s for a, b, c, d, s in J_RELATIONS)


# ---- curvature --------------------------------------------------------------------

@dataclass
class CurvatureData:
    omega: list  # omega[i-1][j-1] = Ω^i_j

    def __call__(self, i, j) -> Form:
        return self.omega[i - 1][j - 1]

    def R(self, p, q) -> Form:
        """``R(e_p, e_q)`` as a 2-form."""
        out = {}
        for i in INDICES:
            for j in INDICES:
                if i < j:
                    out[(i, j)] = self(i, j)[(p, q)]
        return Form(2, out)

    def endomorphisms(self) -> dict:
        return {(p, q): self.R(p, q) for p in INDICES for q in INDICES if p < q}

    def is_flat(self) -> bool:
        return all(not f.coeffs for row in self.omega for f in row)

    @property
    def trace(self) -> Form:
        return pontrjagin_trace(self)


def curvature(g: LieAlgebra6, conn: ConnectionForms) -> CurvatureData:
    om = []
    for i in INDICES:
        row = []
        for j in INDICES:
            w = g.d(conn(i, j))
            for k in INDICES:
                w = w + wedge(conn(i, k), conn(k, j))
            row.append(w)
        om.append(row)
    return CurvatureData(om)


def pontrjagin_trace(C: CurvatureData) -> Form:
    """``tr Ω∧Ω = Σ_{i<j} Ω^i_j ∧ Ω^i_j``; ``p_1`` is this divided by ``8π²``."""
    out = Form.zero(4)
    for i in INDICES:
        for j in INDICES:
            if i < j:
                out = out + wedge(C(i, j), C(i, j))
    return out


# ---- covariant derivatives of forms ----------------------------------------------

def _nabla_coframe(conn: ConnectionForms, x, k) -> Form:
    """``∇_{e_x} e^k = -Σ_j σ^k_j(e_x) e^j``."""
    return Form(1, {(j,): -conn.value(k, j, x) for j in INDICES})


def covariant_derivative_form(conn: ConnectionForms, a: Form, x: int) -> Form:
    """``∇_{e_x} a`` via the Leibniz rule on the coframe."""
    if a.degree == 0:
        return Form.zero(0)
    images = [_nabla_coframe(conn, x, k) for k in INDICES]
    out = Form.zero(a.degree)
    for key, c in a.coeffs.items():
        for m, k in enumerate(key):
            term = Form.scalar(c)
            for n, idx in enumerate(key):
                term = wedge(term, images[k - 1] if n == m else e(idx))
            out = out + term
    return out


def is_parallel(conn: ConnectionForms, a: Form) -> bool:
    return all(not covariant_derivative_form(conn, a, x).coeffs for x in INDICES)


def nabla_psi_zero(conn: ConnectionForms, H: HermitianData) -> bool:
    return is_parallel(conn, H.psi)


def difference_is_half_torsion(g, H) -> bool:
    """``g(∇_X Y - ∇^g_X Y, Z) = ½ T(X, Y, Z)`` on every frame triple."""
    b, T = bismut_connection(g, H)
    lc = levi_civita_forms(g)
    return all(is_zero(b.value(z, y, x) - lc.value(z, y, x) - evaluate(T, (x, y, z)) / 2)
               for x in INDICES for y in INDICES for z in INDICES)
