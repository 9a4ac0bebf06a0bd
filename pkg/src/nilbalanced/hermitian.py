"""Hermitian data, the balanced condition, and the canonical balanced families.

Every family constructor returns structure equations in a coframe adapted to
``(J, F)``: ``J e^1 = -e^2``, ``J e^3 = -e^4``, ``J e^5 = -e^6`` and
``F = e^{12} + e^{34} + e^{56}``, so the metric is the identity matrix there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .complex_structure import (ComplexStructure, classify_complex_type, conjugate_theta,
                                from_complex_equations, j_pullback, theta_monomial)
from .forms import DIM, INDICES, Form, e, evaluate, one_form, pullback, wedge, wedge_all
from .lie import LieAlgebra6, jacobi_closure_check
from .scalars import (I, QI, abs2, conj, fmt, gauss, im_part, is_float, is_positive, is_zero,
                      parse_rational, re_part, sqrt)


class PositivityError(ValueError):
    """A metric coefficient violates positive-definiteness; ``condition`` names it."""

    def __init__(self, condition):
        super().__init__(f"positivity violated: {condition}")
        self.condition = condition


class NotHermitian(ValueError):
    pass


class DomainError(ValueError):
    """Family parameters outside their validity domain."""


# ---- Hermitian data --------------------------------------------------------

@dataclass
class HermitianData:
    J: ComplexStructure
    F: Form
    metric: list  # 6x6 symmetric, metric[i][j] = g(e_i, e_j)
    coeffs: dict = field(default_factory=dict)
    adapted: bool = False

    @property
    def psi(self):
        return adapted_psi() if self.adapted else None


def adapted_F() -> Form:
    return e(1, 2) + e(3, 4) + e(5, 6)


def adapted_psi() -> Form:
    return wedge_all(one_form([1, I, 0, 0, 0, 0]), one_form([0, 0, 1, I, 0, 0]),
                     one_form([0, 0, 0, 0, 1, I]))


def adapted_hermitian() -> HermitianData:
    return HermitianData(ComplexStructure.adapted(), adapted_F(), linalg.identity(DIM),
                         {"r2": 1, "s2": 1, "t2": 1, "u": 0, "v": 0, "z": 0}, adapted=True)


def check_positivity(r2, s2, t2, u=0, v=0, z=0):
    """Raise :class:`PositivityError` naming the first failing condition."""
    conds = [
        ("r^2 > 0", r2),
        ("s^2 > 0", s2),
        ("t^2 > 0", t2),
        ("r^2 s^2 > |u|^2", r2 * s2 - abs2(u)),
        ("s^2 t^2 > |v|^2", s2 * t2 - abs2(v)),
        ("r^2 t^2 > |z|^2", r2 * t2 - abs2(z)),
        ("r^2 s^2 t^2 + 2 Re(i conj(u) conj(v) z) > t^2|u|^2 + r^2|v|^2 + s^2|z|^2",
         r2 * s2 * t2 + 2 * re_part(I * conj(u) * conj(v) * z)
         - t2 * abs2(u) - r2 * abs2(v) - s2 * abs2(z)),
    ]
    for name, val in conds:
        if not is_positive(val):
            raise PositivityError(name)


def _fundamental_theta(r2, s2, t2, u, v, z) -> Form:
    """``2F`` in the θ-coframe."""
    m = theta_monomial
    two_f = (m((1,), (1,)) * (I * r2) + m((2,), (2,)) * (I * s2) + m((3,), (3,)) * (I * t2)
             + m((1,), (2,)) * u - m((2,), (1,)) * conj(u)
             + m((2,), (3,)) * v - m((3,), (2,)) * conj(v)
             + m((1,), (3,)) * z - m((3,), (1,)) * conj(z))
    return two_f


def _metric_theta(J: ComplexStructure, r2, s2, t2, u, v, z):
    """Metric matrix from its symmetric-product expression in ``ω, ω̄``."""
    # g = sum_{jk} h[j][k] ω^j ω̄^k, with ω^j ω̄^k = (ω^j⊗ω̄^k + ω̄^k⊗ω^j)/2
    # h is read off 2F = i sum h_jk ω^{j k̄}
    h = [[r2, -I * u, -I * z],
         [I * conj(u), s2, -I * v],
         [I * conj(z), I * conj(v), t2]]
    w = J.coframe
    wb = [[conj(x) for x in row] for row in w]
    g = [[Fraction(0)] * DIM for _ in range(DIM)]
    for a in range(DIM):
        for b in range(DIM):
            tot = Fraction(0)
            for j in range(3):
                for k in range(3):
                    if is_zero(h[j][k]):
                        continue
                    tot = tot + h[j][k] * (w[j][a] * wb[k][b] + wb[k][a] * w[j][b]) / 2
            g[a][b] = tot
    return g


def _as_real(x, what):
    if not is_zero(im_part(x)):
        raise NotHermitian(f"{what} has imaginary part {fmt(im_part(x))}")
    return re_part(x)


def _real_param(x):
    return x if is_float(x) else parse_rational(x)


def build_hermitian(coeffs, J: ComplexStructure) -> HermitianData:
    """Hermitian structure with ``2F = i(r²ω^{11̄} + s²ω^{22̄} + t²ω^{33̄}) + uω^{12̄} - ...``.

    ``coeffs`` holds ``r2, s2, t2`` (squares) and complex ``u, v, z``; the
    (1,0)-basis is ``J.coframe``.
    """
    r2, s2, t2 = (_real_param(coeffs.get(k, 1)) for k in ("r2", "s2", "t2"))
    u, v, z = (coeffs.get(k, 0) for k in ("u", "v", "z"))
    check_positivity(r2, s2, t2, u, v, z)
    two_f = J.from_theta(_fundamental_theta(r2, s2, t2, u, v, z))
    F = Form(2, {k: _as_real(c, "F") / 2 for k, c in two_f.coeffs.items()})
    g = [[_as_real(x, "g") for x in row] for row in _metric_theta(J, r2, s2, t2, u, v, z)]
    H = HermitianData(J, F, g, {"r2": r2, "s2": s2, "t2": t2, "u": u, "v": v, "z": z})
    check_compatibility(H)
    return H


def hermitian_from_metric(J: ComplexStructure, metric) -> HermitianData:
    """Hermitian data from a metric matrix; ``F(X, Y) = g(X, JY)``."""
    H = HermitianData(J, Form.zero(2), [list(r) for r in metric])
    jv = J.vector_matrix
    for a in range(DIM):
        for b in range(DIM):
            if not is_zero(H.metric[a][b] - H.metric[b][a]):
                raise NotHermitian("metric is not symmetric")
    for a in range(DIM):
        for b in range(DIM):
            gjj = sum((jv[k][a] * jv[l][b] * H.metric[k][l]
                       for k in range(DIM) for l in range(DIM)), Fraction(0))
            if not is_zero(gjj - H.metric[a][b]):
                raise NotHermitian(f"g(Je_{a+1}, Je_{b+1}) != g(e_{a+1}, e_{b+1})")
    F = {}
    for a in range(DIM):
        for b in range(a + 1, DIM):
            F[(a + 1, b + 1)] = sum((H.metric[a][k] * jv[k][b] for k in range(DIM)), Fraction(0))
    H.F = Form(2, F)
    _check_positive_definite(H.metric)
    return H


def _check_positive_definite(m):
    n = len(m)
    for k in range(1, n + 1):
        det = _det([row[:k] for row in m[:k]])
        if not is_positive(det):
            raise PositivityError(f"leading minor {k} of the metric is not positive")


def _det(m):
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if not is_zero(m[r][c])), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det = det * m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def check_compatibility(H: HermitianData):
    """``F(X, Y) = g(X, JY)`` on all frame pairs, and ``g`` is J-invariant."""
    jv = H.J.vector_matrix
    for a in range(DIM):
        for b in range(DIM):
            gxjy = sum((H.metric[a][k] * jv[k][b] for k in range(DIM)), Fraction(0))
            if not is_zero(evaluate(H.F, (a + 1, b + 1)) - gxjy):
                raise NotHermitian(f"F(e_{a+1}, e_{b+1}) != g(e_{a+1}, J e_{b+1})")


# ---- balanced condition ------------------------------------------------------

@dataclass
class BalancedResult:
    balanced: bool
    residual: Form  # F ∧ dF


def balanced_check(g: LieAlgebra6, H: HermitianData) -> BalancedResult:
    res = wedge(H.F, g.d(H.F))
    return BalancedResult(not res.coeffs, res)


# ---- nilpotent normal forms ------------------------------------------------

def nilpotent_equations(rho, b2, x, y) -> LieAlgebra6:
    """``dω^1 = dω^2 = 0``, ``dω^3 = ρω^{12} + ω^{11̄} + b²ω^{12̄} + (x+iy)ω^{22̄}``."""
    m = theta_monomial
    dw3 = (m((1, 2), ()) * rho + m((1,), (1,)) + m((1,), (2,)) * b2
           + m((2,), (2,)) * gauss(x, y))
    return from_complex_equations([Form.zero(2), Form.zero(2), dw3], "nilpotent-reduced")


def nilpotent_structure(rho, b2, x, y, s2, t2, u):
    """Algebra plus Hermitian data with ``2F = i(ω^{11̄} + s²ω^{22̄} + t²ω^{33̄}) + uω^{12̄} - ūω^{21̄}``."""
    g = nilpotent_equations(rho, b2, x, y)
    J = ComplexStructure.adapted()
    H = build_hermitian({"r2": 1, "s2": s2, "t2": t2, "u": u}, J)
    return g, H


def nilpotent_balanced_residual_formula(rho, b2, x, y, s2, t2, u) -> Form:
    """``4F∧dF`` as printed: ``t²(s²+x+yi-ūb²i)ω^{12 1̄2̄3̄} + t²(s²+x-yi+ub²i)ω^{123 1̄2̄}``."""
    c1 = t2 * (s2 + gauss(x, y) - conj(u) * b2 * I)
    c2 = t2 * (s2 + gauss(x, -y) + u * b2 * I)
    return theta_monomial((1, 2), (1, 2, 3)) * c1 + theta_monomial((1, 2, 3), (1, 2)) * c2


def classify_underlying_algebra(rho, b2, x, y) -> str:
    """Lie algebra of the structure equations with parameters ``(ρ, b², x, y)``."""
    rho, b2, x, y = (Fraction(v) if not is_float(v) else v for v in (rho, b2, x, y))
    if is_zero(b2 - rho):
        if not is_zero(y):
            return "h2"
        if is_zero(rho):
            if is_zero(x):
                return "h8"  # no balanced structure
            return "h3"
        return "h4" if not is_zero(x) else "h6"
    lhs = 4 * y * y
    rhs = (rho - b2 * b2) * (4 * x + rho - b2 * b2)
    diff = lhs - rhs
    if is_zero(diff):
        return "h4"
    return "h2" if diff > 0 else "h5"


def identify_two_step(g: LieAlgebra6) -> str:
    """Name a 2-step nilpotent algebra among h2..h8 from bracket invariants."""
    if g.is_abelian():
        return "abelian"
    image = linalg.span_basis([f.to_vector() for f in g.de if f.coeffs])
    forms = [Form.from_vector(2, v) for v in image]
    derived = linalg.span_basis([g.bracket_vector(i, j) for i in INDICES for j in INDICES if i < j])
    for v in derived:
        for j in INDICES:
            if any(not is_zero(c) for c in g.bracket(v, [Fraction(int(k == j)) for k in INDICES])):
                return "not-2-step"
    center_dim = _center_dim(g)
    if len(forms) == 1:
        sq = wedge(forms[0], forms[0])
        return "h3" if sq.coeffs else "h8"
    if len(forms) == 2:
        if center_dim == 3:
            return "h6"
        a, b = forms
        A, B, C = wedge(a, a), wedge(a, b) * 2, wedge(b, b)
        key = next(iter((A + B + C).coeffs or B.coeffs or A.coeffs or C.coeffs))
        Ac, Bc, Cc = A[key], B[key], C[key]
        disc = Bc * Bc - 4 * Ac * Cc
        if is_zero(disc):
            return "h4"
        return "h2" if disc > 0 else "h5"
    return f"other(derived={len(forms)})"


def _center_dim(g):
    rows = []
    for j in INDICES:
        for k in INDICES:
            rows.append([-g.c(k, i, j) for i in INDICES])
    return len(linalg.nullspace(rows, DIM))


# ---- canonical families ------------------------------------------------------

FAMILIES = ("F214", "F215", "F216", "F217", "F218")


@dataclass
class FamilyDescriptor:
    family: str
    rho: int = 0
    b2: object = Fraction(0)
    s: object = Fraction(1)
    t: object = Fraction(1)
    u1: object = Fraction(0)
    u2: object = Fraction(0)
    r: object = Fraction(1)
    sign: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        for name in ("b2", "s", "t", "u1", "u2", "r"):
            v = getattr(self, name)
            if not is_float(v):
                setattr(self, name, parse_rational(v))
        if self.rho not in (0, 1):
            raise DomainError("rho must be 0 or 1")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        self.validate()

    def validate(self):
        f = self.family
        if f in ("F214", "F215", "F216", "F218") and is_zero(self.t):
            raise DomainError("t != 0 required")
        if f in ("F215", "F216", "F217", "F218") and is_zero(self.s):
            raise DomainError("s != 0 required")
        if f in ("F217", "F218") and is_zero(self.r):
            raise DomainError("r != 0 required")
        if f in ("F215", "F216") and not is_float(self.b2) and self.b2 < 0:
            raise DomainError("b^2 >= 0 required")
        if f == "F216":
            u_sq = self.u1 ** 2 + self.u2 ** 2
            if not is_positive(u_sq):
                raise DomainError("|u|^2 > 0 required")
            if not is_positive(self.s ** 2 - u_sq):
                raise DomainError("s^2 > |u|^2 required")
        if f == "F218" and not is_positive(self.s ** 2 * self.t ** 2 - 1):
            raise DomainError("s^2 t^2 > 1 required")

    @property
    def u(self):
        return gauss(self.u1, self.u2) if not is_float(self.u1) else self.u1 + 1j * self.u2

    @property
    def u_abs(self):
        return sqrt(self.u1 ** 2 + self.u2 ** 2)

    @property
    def Y(self):
        """``2 sqrt(s² - |u|²) / (|u| t)``."""
        return 2 * sqrt(self.s ** 2 - self.u1 ** 2 - self.u2 ** 2) / (self.u_abs * self.t)

    @property
    def Z(self):
        """``sqrt(s² t² - 1)``."""
        return sqrt(self.s ** 2 * self.t ** 2 - 1)

    @property
    def complex_type_claim(self) -> str:
        if self.family == "F214":
            return "complex-parallelizable"
        if self.family in ("F217", "F218"):
            return "non-nilpotent"
        return "abelian" if self.rho == 0 else "nilpotent-non-abelian"

    def to_json(self) -> dict:
        d = {"family": self.family}
        if self.family in ("F215", "F216"):
            d.update(rho=self.rho, b2=fmt(self.b2))
        if self.family == "F216":
            d["u"] = [fmt(self.u1), fmt(self.u2)]
        if self.family in ("F215", "F216", "F217", "F218"):
            d["s"] = fmt(self.s)
        if self.family in ("F214", "F215", "F216", "F218"):
            d["t"] = fmt(self.t)
        if self.family in ("F217", "F218"):
            d.update(r=fmt(self.r), sign=self.sign)
        return d

    @classmethod
    def from_json(cls, obj) -> "FamilyDescriptor":
        kw = {"family": obj["family"]}
        if "rho" in obj:
            kw["rho"] = int(obj["rho"])
        for src in ("b2", "delta"):
            if src in obj:
                kw["b2"] = parse_rational(obj[src])
        if "b" in obj:
            kw["b2"] = parse_rational(obj["b"]) ** 2
        for k in ("s", "t", "r"):
            if k in obj:
                kw[k] = parse_rational(obj[k])
        if "u" in obj:
            kw["u1"], kw["u2"] = (parse_rational(x) for x in obj["u"])
        if "sign" in obj:
            sg = obj["sign"]
            kw["sign"] = -1 if sg in (-1, "-", "-1") else 1
        return cls(**kw)


@dataclass
class FamilyStructure:
    desc: FamilyDescriptor
    algebra: LieAlgebra6
    H: HermitianData

    @property
    def J(self):
        return self.H.J

    @property
    def F(self):
        return self.H.F

    @property
    def psi(self):
        return self.H.psi


def _E(*pairs):
    """Sum of signed basis 2-forms from ``(coeff, "ij")`` pairs."""
    out = Form.zero(2)
    for c, ij in pairs:
        out = out + e(ij) * c
    return out


def family_equations(desc: FamilyDescriptor) -> list:
    f = desc.family
    z = Form.zero(2)
    if f == "F214":
        t = desc.t
        return [z, z, z, z, _E((t, "13"), (-t, "24")), _E((t, "14"), (t, "23"))]
    if f == "F215":
        rho, b2, s, t = desc.rho, desc.b2, desc.s, desc.t
        q = t / s
        de5 = _E((q * (rho + b2), "13"), (-q * (rho - b2), "24"))
        de6 = _E((-2 * t, "12"), (2 * t, "34"), (q * (rho - b2), "14"), (q * (rho + b2), "23"))
        return [z, z, z, z, de5, de6]
    if f == "F216":
        rho, b2, s, t = desc.rho, desc.b2, desc.s, desc.t
        u1, u2, ua, Y = desc.u1, desc.u2, desc.u_abs, desc.Y
        de5 = (_E((2 * b2 * u1 * ua, "12"), (-2 * b2 * u1 * ua, "34"))
               - _E((1, "13"), (1, "24")) * (b2 * t * u1 * ua * Y)
               + _E((1, "13"), (-1, "24")) * (2 * rho * s * u1)
               + _E((rho - b2, "14"), (rho + b2, "23")) * (2 * s * u2)) * (s * Y)
        de6 = (_E((1, "12"), (-1, "34")) * (2 * (2 * s * s - b2 * u2) * ua)
               + _E((1, "13"), (1, "24")) * (b2 * t * u2 * ua * Y)
               - _E((1, "13"), (-1, "24")) * (2 * rho * s * u2)
               + _E((rho - b2, "14"), (rho + b2, "23")) * (2 * s * u1)) * (s * Y)
        return [z, z, z, z, de5, de6]
    if f == "F217":
        r, s, sg = desc.r, desc.s, desc.sign
        return [z, z, e("15") * (2 * s / r), e("25") * (2 * s / r), z,
                _E((1, "13"), (1, "24")) * (sg * 2 / (r * s))]
    if f == "F218":
        r, s, t, sg = desc.r, desc.s, desc.t, desc.sign
        Z = desc.Z
        W = s * t + Z
        k = s / (r * t * Z)
        tt = t * t / (s * s)
        de3 = (_E((1, "13"), (1, "24")) * (sg * tt) + _E((1, "25"), (-1, "16")) * (sg * tt * W)
               + e("14") + e("15") * (1 / W)) * k
        de4 = (e("24") + e("25") * (1 / W)) * k
        de5 = (e("24") * W + e("25")) * (-k)
        de6 = (_E((1, "13"), (1, "24")) * (sg * tt / W) + _E((1, "25"), (-1, "16")) * (sg * tt)
               + e("14") * W + e("15")) * k
        return [z, z, de3, de4, de5, de6]
    raise DomainError(f"unknown family {f!r}")


def build_family(desc: FamilyDescriptor, check=True) -> FamilyStructure:
    g = LieAlgebra6(family_equations(desc), desc.family)
    H = adapted_hermitian()
    if check:
        jac = jacobi_closure_check(g)
        if not jac.ok:
            raise DomainError(f"{desc.family}: d^2 != 0 on e^{jac.k}: {jac.witness}")
    return FamilyStructure(desc, g, H)


# ---- equivalence ------------------------------------------------------------

@dataclass
class EquivalenceResult:
    equivalent: bool
    lie_isomorphism: bool
    intertwines_J: bool
    pulls_back_F: bool


def verify_equivalence(g1: LieAlgebra6, H1: HermitianData, g2: LieAlgebra6,
                       H2: HermitianData, A) -> EquivalenceResult:
    """Check that ``A: g1 -> g2`` is an equivalence ``(J1, F1) -> (J2, F2)``.

    ``A`` is given dually: ``A^* e'^k = sum_l A[k][l] e^l`` pulls the coframe of
    ``g2`` back to forms on ``g1``.
    """
    try:
        linalg.inverse(A)
    except ZeroDivisionError:
        raise ValueError("equivalence map is singular") from None
    images = [Form(1, {(l + 1,): A[k][l] for l in range(DIM)}) for k in range(DIM)]
    iso = all(pullback(g2.de[k], images) == g1.d(images[k]) for k in range(DIM))
    ij = True
    for k in range(DIM):
        lhs = pullback(j_pullback(H2.J, e(k + 1)), images)
        rhs = j_pullback(H1.J, images[k])
        if lhs != rhs:
            ij = False
            break
    pf = pullback(H2.F, images) == H1.F
    return EquivalenceResult(iso and ij and pf, iso, ij, pf)


def coframe_map_from_theta(J1: ComplexStructure, sigma_in_omega):
    """Real matrix ``A`` with ``A^*(e'^{2j-1} + i e'^{2j}) = σ^j``.

    ``sigma_in_omega[j]`` lists the coefficients of ``σ^j`` on ``ω^1, ω^2, ω^3``
    (the (1,0)-coframe of ``J1``).
    """
    A = []
    for row in sigma_in_omega:
        vec = [sum((row[a] * J1.coframe[a][k] for a in range(3)), Fraction(0)) for k in range(DIM)]
        A.append([re_part(x) for x in vec])
        A.append([im_part(x) for x in vec])
    return A


def h3_minus_equations() -> LieAlgebra6:
    """``dω^3 = ω^{11̄} - ω^{22̄}``."""
    m = theta_monomial
    z = Form.zero(2)
    return from_complex_equations([z, z, m((1,), (1,)) - m((2,), (2,))], "h3[J-]")


def h3_minus_diagonalizing(u):
    """Basis change ``σ^1 = a11 ω^1 + a12 ω^2``, ``σ^2 = ā12 ω^1 + ā11 ω^2``, ``σ^3 = a33 ω^3``.

    Returns ``(rows, a33)`` where ``rows`` are the σ-coefficients on ``ω``.
    Needs ``|u| < 1``; irrational in general, so pass mpmath scalars.
    """
    import mpmath
    from .scalars import to_float
    uu = mpmath.mpc(to_float(u))
    c = mpmath.sqrt(1 - abs(uu) ** 2)
    a11 = mpmath.sqrt((1 + c) / 2)
    a12 = 1j * mpmath.conj(uu) / 2 / a11
    a33 = (1 - abs(uu) ** 2 + c) / (1 + c)
    zero = mpmath.mpf(0)
    rows = [[a11, a12, zero], [mpmath.conj(a12), mpmath.conj(a11), zero], [zero, zero, a33]]
    return rows, a33


# ---- deformation I_λ of an abelian structure on h5 ----------------------------

H5_TEXT = "de5 = e13 - e24\nde6 = e14 + e23"


def i_lambda(lam):
    """``(g, I_λ)`` on h5 with ``I e^1 = -e^2``, ``I e^3 = -k e^4``, ``I e^5 = -e^6``.

    Here ``k = (λ+1)/(λ-1)``; the (1,0)-coframe is ``μ^1 = e^1 + ie^2``,
    ``μ^2 = e^3 + ik e^4``, ``μ^3 = (λ+1)(e^5 + ie^6)``.
    """
    from .lie import parse_structure_equations
    lam = lam if is_float(lam) else parse_rational(lam)
    if not (0 <= lam < 1):
        raise DomainError("lambda must lie in [0, 1)")
    k = (lam + 1) / (lam - 1)
    m = [[Fraction(0)] * DIM for _ in range(DIM)]
    m[0][1], m[1][0] = Fraction(-1), Fraction(1)
    m[2][3], m[3][2] = -k, 1 / k
    m[4][5], m[5][4] = Fraction(-1), Fraction(1)
    zero = Fraction(0)
    mu = [[1, I, 0, 0, 0, 0], [0, 0, 1, I * k, 0, 0],
          [0, 0, 0, 0, lam + 1, (lam + 1) * I]]
    J = ComplexStructure(m, [[x if x != 0 else zero for x in row] for row in mu])
    return parse_structure_equations(H5_TEXT, f"h5[I_{fmt(lam)}]"), J


def i_lambda_adapted(lam):
    """The same structure in the orthonormal coframe ``f`` with ``f^{2j-1} + i f^{2j} = μ^j``.

    Returns ``(g_f, H)`` where ``H`` is the adapted Hermitian data, so
    ``2F = i(μ^{11̄} + μ^{22̄} + μ^{33̄})``.
    """
    from .lie import reframe
    lam = lam if is_float(lam) else parse_rational(lam)
    g, J = i_lambda(lam)
    k = (lam + 1) / (lam - 1)
    A = linalg.identity(DIM)
    A[3][3] = k
    A[4][4] = A[5][5] = lam + 1
    return reframe(g, A, f"h5[I_{fmt(lam)}, adapted]"), adapted_hermitian()


def i_lambda_printed_metric(lam):
    """Diagonal metric ``(1, 1, c, c, 1+λ, 1+λ)`` with ``c = sqrt((1+λ)/(1-λ))``."""
    c = sqrt((1 + lam) / (1 - lam))
    m = linalg.identity(DIM)
    m[2][2] = m[3][3] = c
    m[4][4] = m[5][5] = 1 + lam
    return m


def _fingerprint(g: LieAlgebra6):
    from .lie import ascending_series
    lower = [linalg.identity(DIM)]
    while True:
        cur = lower[-1]
        nxt = linalg.span_basis([g.bracket(x, [Fraction(int(k == j)) for k in INDICES])
                                 for x in cur for j in INDICES])
        if len(nxt) == len(cur):
            break
        lower.append(nxt)
    derived = [linalg.identity(DIM)]
    while True:
        cur = derived[-1]
        nxt = linalg.span_basis([g.bracket(x, y) for x in cur for y in cur])
        if len(nxt) == len(cur):
            break
        derived.append(nxt)
    return (tuple(len(b) for b in lower), tuple(len(b) for b in derived),
            tuple(ascending_series(g).dims), _center_dim(g))


def identify_algebra(g: LieAlgebra6) -> str:
    """Name of ``g`` among the nilpotent algebras carrying balanced structures, else ``unidentified``."""
    from .lie import preset
    name = identify_two_step(g)
    if name != "not-2-step" and not name.startswith("other"):
        return name
    if _fingerprint(g) == _fingerprint(preset("h19-")):
        return "h19-"
    return "unidentified"
