"""Instantons, anomaly cancellation, and the four Strominger conditions.

The anomaly equation ``dT = 2π²α'(p_1(∇) - p_1(A))`` with ``p_1 = tr Ω∧Ω / 8π²``
is solved in the π-free form ``4 dT = α'(tr Ω∧Ω - tr Ω^A∧Ω^A)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .connection import (ConnectionForms, CurvatureData, bismut_connection, chern_connection,
                         curvature, pontrjagin_trace)
from .forms import INDICES, Form, e
from .hermitian import FamilyStructure, balanced_check
from .holonomy import ambrose_singer_closure, gamma_coordinates, holonomy_json
from .scalars import fmt, is_positive, is_zero

STATUSES = ("solved", "not-proportional", "nonpositive-alpha", "degenerate")


class InstantonError(ValueError):
    pass


@dataclass
class Instanton:
    tag: str  # "A_lambda", "A_tau" or "external"
    param: object
    conn: ConnectionForms = None
    curv: CurvatureData = None
    external_trace: Form = None

    @property
    def trace(self) -> Form:
        if self.external_trace is not None:
            return self.external_trace
        return pontrjagin_trace(self.curv)

    @property
    def is_flat(self) -> bool:
        if self.external_trace is not None:
            return False
        return self.curv.is_flat()


def _skew_from_upper(tag, upper) -> ConnectionForms:
    """Skew matrix of 1-forms from ``{(i, j): σ^i_j}`` with ``i < j``."""
    zero = Form.zero(1)
    sig = [[zero for _ in INDICES] for _ in INDICES]
    for (i, j), f in upper.items():
        sig[i - 1][j - 1] = f
        sig[j - 1][i - 1] = -f
    return ConnectionForms(tag, sig)


def build_instanton_A_lambda(fs: FamilyStructure, lam) -> Instanton:
    """``σ¹₂ = -σ³₄ = λ(e⁵ + e⁶)``, all others zero apart from skew partners."""
    if fs.desc.family not in ("F215", "F216"):
        raise InstantonError("A_lambda is defined on families F215 and F216")
    if fs.desc.rho != 0:
        raise InstantonError("A_lambda needs an abelian structure (rho = 0)")
    w = (e(5) + e(6)) * lam
    conn = _skew_from_upper("custom-instanton", {(1, 2): w, (3, 4): -w})
    return Instanton("A_lambda", lam, conn, curvature(fs.algebra, conn))


_A_TAU_NEGATIVE = {(2, 3): 1, (2, 5): 1, (4, 5): 1, (5, 6): 2}


def build_instanton_A_tau(fs: FamilyStructure, tau) -> Instanton:
    """``σ²₃ = σ²₅ = σ⁴₅ = ½σ⁵₆ = -τe⁶`` and ``σ^i_j = τe⁶`` for the other ``i < j``."""
    if fs.desc.family != "F217":
        raise InstantonError("A_tau is defined on family F217")
    upper = {}
    for i in INDICES:
        for j in INDICES:
            if i < j:
                m = _A_TAU_NEGATIVE.get((i, j))
                upper[(i, j)] = e(6) * (-m * tau if m else tau)
    conn = _skew_from_upper("custom-instanton", upper)
    return Instanton("A_tau", tau, conn, curvature(fs.algebra, conn))


def external_instanton(trace: Form) -> Instanton:
    """An instanton known only through its trace; its curvature is not checked."""
    return Instanton("external", None, external_trace=trace)


@dataclass
class InstantonVerdict:
    ok: bool
    flat: bool
    verified: bool = True  # False for external instantons
    failures: list = field(default_factory=list)  # (i, j) with Ω^i_j outside su(3)


def instanton_check(curv: CurvatureData) -> InstantonVerdict:
    """Every ``Ω^i_j`` is J-invariant with vanishing F-trace, i.e. lies in span(γ)."""
    fails = [(i, j) for i in INDICES for j in INDICES
             if i < j and gamma_coordinates(curv(i, j)) is None]
    return InstantonVerdict(not fails, curv.is_flat(), True, fails)


def check_instanton(A: Instanton) -> InstantonVerdict:
    if A.external_trace is not None:
        return InstantonVerdict(True, False, verified=False)
    return instanton_check(A.curv)


# ---- anomaly cancellation ------------------------------------------------------

@dataclass
class AnomalySolution:
    status: str
    alpha: object = None
    lhs: Form = None  # 4 dT
    rhs: Form = None  # tr∇ - trA

    @property
    def solved(self):
        return self.status == "solved"


def anomaly_solve(dT: Form, tr_nabla: Form, tr_A: Form) -> AnomalySolution:
    """Solve ``4 dT = α'(tr_nabla - tr_A)`` for a scalar ``α' > 0``."""
    lhs = dT * 4
    rhs = tr_nabla - tr_A
    if not lhs.coeffs and not rhs.coeffs:
        return AnomalySolution("degenerate", None, lhs, rhs)
    if not lhs.coeffs or not rhs.coeffs:
        return AnomalySolution("not-proportional", None, lhs, rhs)
    key = next(iter(sorted(rhs.coeffs)))
    alpha = lhs[key] / rhs[key]
    if lhs != rhs * alpha:
        return AnomalySolution("not-proportional", None, lhs, rhs)
    if not is_positive(alpha):
        return AnomalySolution("nonpositive-alpha", alpha, lhs, rhs)
    return AnomalySolution("solved", alpha, lhs, rhs)


@dataclass
class TauSolution:
    status: str
    alpha: object = None
    tau2: object = None


def solve_tau(dT: Form, tr_nabla: Form, tr_unit: Form) -> TauSolution:
    """Find ``α' > 0`` and ``τ² >= 0`` with ``4 dT = α' tr_nabla - α'τ² tr_unit``.

    ``tr_unit`` is the instanton trace at ``τ = 1``; the instanton trace scales
    as ``τ²``.  The system is linear in ``(α', β = α'τ²)``.
    """
    from . import linalg
    lhs = dT * 4
    keys = sorted(set(lhs.coeffs) | set(tr_nabla.coeffs) | set(tr_unit.coeffs))
    rows = [[tr_nabla[k], -tr_unit[k], lhs[k]] for k in keys]
    if not rows:
        return TauSolution("degenerate")
    red, piv = linalg.rref(rows)
    if 2 in piv or piv != [0, 1]:
        return TauSolution("not-proportional" if 2 in piv else "degenerate")
    alpha, beta = red[0][2], red[1][2]
    if not is_positive(alpha):
        return TauSolution("nonpositive-alpha", alpha)
    tau2 = beta / alpha
    if not is_zero(tau2) and not is_positive(tau2):
        return TauSolution("negative-tau2", alpha, tau2)
    return TauSolution("solved", alpha, tau2)


def a_tau_unit_trace(fs: FamilyStructure) -> Form:
    return build_instanton_A_tau(fs, Fraction(1)).trace


def required_tau2(fs: FamilyStructure, which="bismut") -> TauSolution:
    """``τ²`` and ``α'`` making ``A_τ`` solve the anomaly equation for the given connection."""
    g, H = fs.algebra, fs.H
    conn, T = bismut_connection(g, H)
    if which == "chern":
        conn = chern_connection(g, H)
    tr = pontrjagin_trace(curvature(g, conn))
    return solve_tau(g.d(T), tr, a_tau_unit_trace(fs))


# ---- full report --------------------------------------------------------------

@dataclass
class StromingerReport:
    holonomy_in_su3: bool
    balanced: bool
    instanton_ok: bool
    instanton_nonflat: bool
    instanton_verified: bool
    anomaly: AnomalySolution
    heterotic: bool
    holonomy: dict = field(default_factory=dict)
    connection: str = "bismut"

    @property
    def all_hold(self) -> bool:
        return (self.holonomy_in_su3 and self.balanced and self.instanton_ok
                and self.instanton_nonflat and self.anomaly.solved)

    def to_json(self) -> dict:
        return {
            "connection": self.connection,
            "a_holonomy_su3": self.holonomy_in_su3,
            "b_balanced": self.balanced,
            "c_instanton": self.instanton_ok and self.instanton_nonflat,
            "c_instanton_verified": self.instanton_verified,
            "d_anomaly": self.anomaly.status,
            "alpha_prime": None if self.anomaly.alpha is None else fmt(self.anomaly.alpha),
            "heterotic": self.heterotic,
            "all": self.all_hold,
            "holonomy": self.holonomy,
        }


def strominger_report(fs: FamilyStructure, A: Instanton, connection="bismut") -> StromingerReport:
    g, H = fs.algebra, fs.H
    bis, T = bismut_connection(g, H)
    conn = bis if connection == "bismut" else chern_connection(g, H)
    S = ambrose_singer_closure(g, bis)  # gravitino condition is about the Bismut holonomy
    C = curvature(g, conn)
    iv = check_instanton(A)
    sol = anomaly_solve(g.d(T), pontrjagin_trace(C), A.trace)
    return StromingerReport(
        holonomy_in_su3=S.in_su3(),
        balanced=balanced_check(g, H).balanced,
        instanton_ok=iv.ok,
        instanton_nonflat=not iv.flat,
        instanton_verified=iv.verified,
        anomaly=sol,
        heterotic=instanton_check(C).ok,
        holonomy=holonomy_json(S),
        connection=connection,
    )


def h5_sign_polynomial(s, u1, u2):
    """``1 + 4s² + 8s⁴ + 4u₁² - 4u₂ - 16s²u₂ + 8u₂²`` (positive on abelian h5 points)."""
    s2 = s * s
    return 1 + 4 * s2 + 8 * s2 * s2 + 4 * u1 * u1 - 4 * u2 - 16 * s2 * u2 + 8 * u2 * u2
