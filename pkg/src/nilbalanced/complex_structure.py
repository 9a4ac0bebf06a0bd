"""Almost-complex structures on a six-dimensional Lie algebra.

``J`` is stored by its action on 1-forms, ``J e^k = sum_l M[k][l] e^l``, with
the convention ``(J a)(X) = -a(J X)``.  On vectors this gives
``e^k(J e_i) = -M[k][i]``.  The adapted structure has ``J e^1 = -e^2``,
``J e^3 = -e^4``, ``J e^5 = -e^6``.

Complex computations happen in the coframe
``θ = (ω^1, ω^2, ω^3, ω̄^1, ω̄^2, ω̄^3)``: a θ-monomial's bidegree is read off
from how many of its indices are ``<= 3``.  Conjugation in that coframe
conjugates coefficients and swaps ``ω^j <-> ω̄^j``, re-sorting with the usual
sign, so for instance ``conj(ω^{1 2̄}) = ω̄^1 ∧ ω^2 = -ω^{2 1̄}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .forms import DIM, INDICES, Form, pullback
from .lie import LieAlgebra6, ascending_series, reframe
from .scalars import I, conj, im_part, is_zero, re_part

N = 3


class NotIntegrable(ValueError):
    pass


class NotComplexStructure(ValueError):
    pass


def adapted_matrix():
    m = [[Fraction(0)] * DIM for _ in range(DIM)]
    for a in (0, 2, 4):
        m[a][a + 1] = Fraction(-1)  # J e^{2k-1} = -e^{2k}
        m[a + 1][a] = Fraction(1)   # J e^{2k} = e^{2k-1}
    return m


class ComplexStructure:
    """``J`` together with a (1,0)-coframe and the induced θ-coframe."""

    def __init__(self, matrix, coframe=None):
        self.matrix = [list(r) for r in matrix]
        sq = linalg.matmul(self.matrix, self.matrix)
        for i in range(DIM):
            for j in range(DIM):
                if not is_zero(sq[i][j] + (1 if i == j else 0)):
                    raise NotComplexStructure("J^2 != -Id")
        if coframe is None:
            coframe = self._kernel_coframe()
        else:
            coframe = [list(r) for r in coframe]
            for row in coframe:
                image = [sum((row[k] * self.matrix[k][l] for k in range(DIM)), Fraction(0))
                         for l in range(DIM)]
                if any(not is_zero(a - I * b) for a, b in zip(image, row)):
                    raise ValueError("supplied coframe is not of type (1,0)")
        self.coframe = coframe
        self.P = [list(r) for r in coframe] + [[conj(x) for x in r] for r in coframe]
        self.Pinv = linalg.inverse(self.P)
        self._to_theta = [Form(1, {(a + 1,): self.Pinv[k][a] for a in range(DIM)})
                          for k in range(DIM)]
        self._to_e = [Form(1, {(k + 1,): self.P[a][k] for k in range(DIM)}) for a in range(DIM)]

    @classmethod
    def adapted(cls):
        return cls(adapted_matrix(), coframe=[
            [1, I, 0, 0, 0, 0], [0, 0, 1, I, 0, 0], [0, 0, 0, 0, 1, I]])

    @classmethod
    def from_one_form_images(cls, images, coframe=None):
        """Build from ``{k: Form}`` giving ``J e^k``."""
        m = [[Fraction(0)] * DIM for _ in range(DIM)]
        for k, f in images.items():
            for (l,), c in f.coeffs.items():
                m[k - 1][l - 1] = c
        return cls(m, coframe)

    def _kernel_coframe(self):
        # a with sum_k a_k M[k][l] = i a_l
        rows = [[self.matrix[k][l] - (I if k == l else 0) for k in range(DIM)] for l in range(DIM)]
        basis = linalg.span_basis(linalg.nullspace(rows, DIM))
        if len(basis) != N:
            raise NotComplexStructure("i-eigenspace is not 3-dimensional")
        return basis

    @property
    def vector_matrix(self):
        """Matrix of ``J`` on vectors: column ``i`` holds ``J e_i``."""
        return [[-self.matrix[k][i] for i in range(DIM)] for k in range(DIM)]

    def apply_vector(self, x):
        jv = self.vector_matrix
        return [sum((jv[k][i] * x[i] for i in range(DIM)), Fraction(0)) for k in range(DIM)]

    def to_theta(self, a: Form) -> Form:
        return pullback(a, self._to_theta)

    def from_theta(self, b: Form) -> Form:
        return pullback(b, self._to_e)

    def complex_algebra(self, g: LieAlgebra6) -> LieAlgebra6:
        """Structure equations of ``g`` in the θ-coframe."""
        return reframe(g, self.P, name=(g.name or "") + "[theta]")

    def omega(self, j: int) -> Form:
        """``ω^j`` (j = 1..3) as a θ-coframe monomial; ``omega(-j)`` is ``ω̄^j``."""
        idx = j if j > 0 else N - j
        return Form(1, {(idx,): Fraction(1)})


# ---- bidegrees and conjugation in the θ-coframe ----------------------------

def bidegree(key) -> tuple[int, int]:
    p = sum(1 for i in key if i <= N)
    return p, len(key) - p


def split_theta(b: Form) -> dict:
    out = {}
    for key, c in b.coeffs.items():
        out.setdefault(bidegree(key), {})[key] = c
    return {bd: Form(b.degree, d) for bd, d in out.items()}


def conjugate_theta(b: Form) -> Form:
    swap = {i: (i + N if i <= N else i - N) for i in INDICES}
    return Form(b.degree, {tuple(swap[i] for i in key): conj(c) for key, c in b.coeffs.items()})


def theta_monomial(holo, anti) -> Form:
    """``ω^{holo} ∧ ω̄^{anti}``; ``theta_monomial((2, 3), (2, 3))`` is ``ω^{23 2̄3̄}``."""
    key = tuple(holo) + tuple(i + N for i in anti)
    return Form(len(key), {key: Fraction(1)})


def conjugate_split(a: Form, J: ComplexStructure) -> dict:
    """Split a real-coframe form into bidegree components (each in the e-coframe)."""
    return {bd: J.from_theta(part) for bd, part in split_theta(J.to_theta(a)).items()}


def conjugate(a: Form) -> Form:
    """Complex conjugate of a form on the real coframe."""
    return a.conjugate()


def real_part(a: Form) -> Form:
    return a.map_coeffs(re_part)


def imag_part(a: Form) -> Form:
    return a.map_coeffs(im_part)


# ---- J acting on forms ------------------------------------------------------

def j_pullback(J: ComplexStructure, a: Form) -> Form:
    """``(J a)(X_1..X_k) = (-1)^k a(J X_1, ..., J X_k)``.

    Degree 1 is ``(J a)(X) = -a(J X)``; degree 3 gives ``J dF(X,Y,Z) = -dF(JX,JY,JZ)``;
    degree 2 gives ``γ(J., J.)``.
    """
    jv = J.vector_matrix
    images = [Form(1, {(i + 1,): jv[k][i] for i in range(DIM)}) for k in range(DIM)]
    out = pullback(a, images)
    return -out if a.degree % 2 else out


# ---- integrability ----------------------------------------------------------

@dataclass
class IntegrabilityResult:
    ok: bool
    nijenhuis_ok: bool
    bidegree_ok: bool
    witness: tuple | None = None  # (i, j, N(e_i, e_j))
    residue: dict = field(default_factory=dict)  # j -> (0,2)-part of dω^j


def nijenhuis(g: LieAlgebra6, J: ComplexStructure, x, y):
    """``[JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]``."""
    jx, jy = J.apply_vector(x), J.apply_vector(y)
    a = g.bracket(jx, jy)
    b = J.apply_vector(g.bracket(jx, y))
    c = J.apply_vector(g.bracket(x, jy))
    d = g.bracket(x, y)
    return [a[k] - b[k] - c[k] - d[k] for k in range(DIM)]


def _unit(i):
    return [Fraction(int(k == i)) for k in INDICES]


def integrability_check(g: LieAlgebra6, J: ComplexStructure) -> IntegrabilityResult:
    witness = None
    for i in INDICES:
        for j in INDICES:
            if j <= i:
                continue
            n = nijenhuis(g, J, _unit(i), _unit(j))
            if any(not is_zero(x) for x in n):
                witness = (i, j, n)
                break
        if witness:
            break
    gc = J.complex_algebra(g)
    residue = {}
    for j in range(1, N + 1):
        part = split_theta(gc.de[j - 1]).get((0, 2))
        if part is not None and part.coeffs:
            residue[j] = part
    nij_ok, bd_ok = witness is None, not residue
    if nij_ok != bd_ok:
        raise AssertionError("Nijenhuis and bidegree integrability verdicts disagree")
    return IntegrabilityResult(nij_ok and bd_ok, nij_ok, bd_ok, witness, residue)


class Dolbeault:
    """``∂`` and ``∂̄`` on the θ-coframe of an integrable ``(g, J)``."""

    def __init__(self, g: LieAlgebra6, J: ComplexStructure, check=True):
        if check and not integrability_check(g, J).ok:
            raise NotIntegrable("J is not integrable")
        self.g = g
        self.J = J
        self.gc = J.complex_algebra(g)

    def d(self, b: Form) -> Form:
        return self.gc.d(b)

    def split(self, b: Form):
        """``(∂b, ∂̄b)`` for ``b`` of pure bidegree ``(p, q)``."""
        parts = split_theta(b)
        if len(parts) > 1:
            raise ValueError(f"mixed bidegree input: {sorted(parts)}")
        if not parts:
            z = Form.zero(min(b.degree + 1, DIM))
            return z, z
        (p, q), = parts
        db = split_theta(self.d(b))
        extra = set(db) - {(p + 1, q), (p, q + 1)}
        if extra:
            raise NotIntegrable(f"d produced bidegrees {sorted(extra)}")
        z = Form.zero(b.degree + 1)
        return db.get((p + 1, q), z), db.get((p, q + 1), z)

    def partial(self, b: Form) -> Form:
        return self._apply(b, 0)

    def dbar(self, b: Form) -> Form:
        return self._apply(b, 1)

    def _apply(self, b, which):
        out = Form.zero(min(b.degree + 1, DIM))
        for part in split_theta(b).values():
            out = out + self.split(part)[which]
        return out


def dolbeault_split(g: LieAlgebra6, J: ComplexStructure, b: Form):
    """``(∂b, ∂̄b)`` for a pure-bidegree θ-coframe form ``b``."""
    return Dolbeault(g, J).split(b)


# ---- series and type ------------------------------------------------------

def j_ascending_series(g: LieAlgebra6, J: ComplexStructure):
    """``g_l^J = {X : [X, g] ⊆ g_{l-1}^J and [JX, g] ⊆ g_{l-1}^J}``."""
    return ascending_series(g, extra_maps=[J.vector_matrix])


COMPLEX_TYPES = ("complex-parallelizable", "abelian", "nilpotent-non-abelian",
                 "non-nilpotent", "non-integrable")


def _all_pairs_vanish(fn):
    for i in INDICES:
        for j in INDICES:
            if any(not is_zero(x) for x in fn(_unit(i), _unit(j))):
                return False
    return True


def is_complex_parallelizable(g, J) -> bool:
    """``[JX, Y] = J[X, Y]`` on all frame pairs."""
    return _all_pairs_vanish(lambda x, y: [a - b for a, b in zip(
        g.bracket(J.apply_vector(x), y), J.apply_vector(g.bracket(x, y)))])


def is_abelian_structure(g, J) -> bool:
    """``[JX, JY] = [X, Y]`` on all frame pairs."""
    return _all_pairs_vanish(lambda x, y: [a - b for a, b in zip(
        g.bracket(J.apply_vector(x), J.apply_vector(y)), g.bracket(x, y))])


def classify_complex_type(g: LieAlgebra6, J: ComplexStructure) -> str:
    if not integrability_check(g, J).ok:
        return "non-integrable"
    if is_complex_parallelizable(g, J):
        return "complex-parallelizable"
    if is_abelian_structure(g, J):
        return "abelian"
    if j_ascending_series(g, J).reaches_all:
        return "nilpotent-non-abelian"
    return "non-nilpotent"


def from_complex_equations(domega, name=None) -> LieAlgebra6:
    """Real algebra whose adapted frame has ``e^{2j-1} + i e^{2j} = ω^j``.

    ``domega`` lists ``dω^1, dω^2, dω^3`` as θ-coframe 2-forms.
    """
    J = ComplexStructure.adapted()
    de = []
    for w in domega:
        w_e = J.from_theta(w)
        de.append(w_e.map_coeffs(re_part))
        de.append(w_e.map_coeffs(im_part))
    return LieAlgebra6(de, name)
