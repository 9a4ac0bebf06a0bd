"""Printed closed forms, transcribed term by term, as γ-coordinate vectors.

Each table maps (p, q) to the 8 coordinates of R(e_p, e_q) on γ1..γ8.
Pairs that are absent are zero.
"""

from fractions import Fraction as Q


def _g(**kw):
    v = [Q(0)] * 8
    for k, c in kw.items():
        v[int(k[1:]) - 1] += c
    return v


def _scale(c, v):
    return [c * x for x in v]


def bismut_215(rho, b, s, t):
    """Curvature endomorphisms for the family with equations (ρ, b, s, t)."""
    b2, b4 = b * b, b ** 4
    k = t * t / (s * s)
    raw = {
        (1, 2): _g(g1=-4 * s * s, g3=-2 * b2 * s, g4=2 * rho),
        (1, 3): _g(g2=-(b4 + rho * b2 + rho)),
        (1, 4): _g(g1=-2 * (b2 - rho) * s, g3=-(b4 - rho * b2 + rho)),
        (1, 5): _g(g5=rho * b2),
        (1, 6): _g(g6=-rho * b2, g8=2 * rho * s),
        (2, 3): _g(g1=2 * (b2 + rho) * s, g3=b4 + rho * b2 + rho),
        (2, 4): _g(g2=-(b4 - rho * b2 + rho)),
        (2, 5): _g(g6=rho * b2),
        (2, 6): _g(g5=rho * b2, g7=-2 * rho * s),
        (3, 4): _g(g1=2 * (rho + 2 * s * s), g3=2 * b2 * s, g4=2 * rho),
        (3, 5): _g(g7=rho * b2),
        (3, 6): _g(g6=2 * rho * s, g8=rho * b2),
        (4, 5): _g(g8=rho * b2),
        (4, 6): _g(g5=-2 * rho * s, g7=-rho * b2),
        (5, 6): _g(g1=-2 * b4, g3=4 * b2 * s),
    }
    return {pq: _scale(k, v) for pq, v in raw.items()}


def bismut_216(rho, b2, s, u1, u2, t, ua, Y):
    """Curvature endomorphisms for the family with equations (ρ, b², s, u, t).

    ``ua`` is |u| and ``Y = 2√(s²-|u|²)/(|u| t)``; both are passed in so that the
    table stays rational at Pythagorean points.
    """
    b4 = b2 * b2
    u = ua
    uu = u * u
    Y2 = Y * Y
    w = b2 * uu - 2 * s * s * u2
    raw = {}
    raw[(1, 2)] = _scale(2 * uu * s * s * Y2, _g(
        g1=-2 * (4 * s ** 4 + b4 * uu - 4 * b2 * s * s * u2),
        g2=b2 * t * w * Y, g3=4 * b2 * s ** 3 * u1 / u, g4=4 * rho * s * s))
    raw[(1, 3)] = _scale(uu * s * s * Y2, _g(
        g1=2 * w * (b2 * t * u * Y - 2 * rho * s) / u,
        g2=-(b4 * t * t * uu * Y2 - 2 * rho * b2 * s * t * u * Y + 4 * rho * s * s)))
    raw[(1, 4)] = _scale(4 * uu * s ** 4 * Y2, _g(
        g1=2 * (b2 - rho) * s * u1 / u, g3=-(b4 - rho * b2 + rho)))
    k = 2 * s ** 3 * Y2
    raw[(1, 5)] = _scale(-rho * b2 * k, _g(
        g5=2 * s * u2 * u2 + t * u1 * u1 * u * Y, g6=u1 * u2 * (2 * s - t * u * Y),
        g7=2 * u1 * u * u2, g8=2 * u1 * u * u1))
    raw[(1, 6)] = _scale(-rho * k, _g(
        g5=b2 * u1 * u2 * (2 * s - t * u * Y), g6=b2 * (2 * s * u1 * u1 + t * u2 * u2 * u * Y),
        g7=-2 * u * (b2 * u2 - 2 * s * s) * u2, g8=-2 * u * (b2 * u2 - 2 * s * s) * u1))
    raw[(2, 3)] = _scale(4 * uu * s ** 4 * Y2, _g(
        g1=-2 * (b2 + rho) * s * u1 / u, g3=b4 + rho * b2 + rho))
    raw[(2, 4)] = _scale(uu * s * s * Y2, _g(
        g1=2 * w * (b2 * t * u * Y + 2 * rho * s) / u,
        g2=-(b4 * t * t * uu * Y2 + 2 * rho * b2 * s * t * u * Y + 4 * rho * s * s)))
    raw[(2, 5)] = _scale(rho * b2 * k, _g(
        g5=u1 * u2 * (2 * s - t * u * Y), g6=-(2 * s * u2 * u2 + t * u1 * u1 * u * Y),
        g7=2 * u1 * u * u1, g8=-2 * u1 * u * u2))
    raw[(2, 6)] = _scale(rho * k, _g(
        g5=b2 * (2 * s * u1 * u1 + t * u2 * u2 * u * Y), g6=-b2 * u1 * u2 * (2 * s - t * u * Y),
        g7=-2 * (b2 * u2 - 2 * s * s) * u * u1, g8=2 * (b2 * u2 - 2 * s * s) * u * u2))
    raw[(3, 4)] = _scale(2 * uu * s * s * Y2, _g(
        g1=2 * (2 * rho * s * s + 4 * s ** 4 + b4 * uu - 4 * b2 * s * s * u2),
        g2=-b2 * t * w * Y, g3=-4 * b2 * s ** 3 * u1 / u, g4=4 * rho * s * s))
    raw[(3, 5)] = _scale(-rho * b2 * k, _g(
        g5=2 * u1 * u * u2, g6=2 * u1 * u * u1,
        g7=-(2 * s * u2 * u2 - t * u1 * u1 * u * Y), g8=-u1 * u2 * (2 * s + t * u * Y)))
    raw[(3, 6)] = _scale(rho * k, _g(
        g5=2 * u * (b2 * u2 - 2 * s * s) * u2, g6=2 * u * (b2 * u2 - 2 * s * s) * u1,
        g7=b2 * u1 * u2 * (2 * s + t * u * Y), g8=b2 * (2 * s * u1 * u1 - t * u2 * u2 * u * Y)))
    raw[(4, 5)] = _scale(rho * b2 * k, _g(
        g5=2 * u1 * u * u1, g6=-2 * u1 * u * u2,
        g7=-u1 * u2 * (2 * s + t * u * Y), g8=2 * s * u2 * u2 - t * u1 * u1 * u * Y))
    raw[(4, 6)] = _scale(-rho * k, _g(
        g5=2 * u * (b2 * u2 - 2 * s * s) * u1, g6=-2 * u * (b2 * u2 - 2 * s * s) * u2,
        g7=b2 * (2 * s * u1 * u1 - t * u2 * u2 * u * Y), g8=-b2 * u1 * u2 * (2 * s + t * u * Y)))
    raw[(5, 6)] = _scale(4 * uu * s ** 3 * Y2, _g(
        g1=b4 * t * u * Y, g2=2 * b2 * w / u, g3=2 * b2 * s * t * u1 * Y))
    return raw


def trace_215(rho, b, s, t):
    """e^{1234}-coefficient of tr Ω∧Ω for the first nilpotent family."""
    b4 = b ** 4
    return -8 * t ** 4 / s ** 4 * (b4 * b4 + rho * b4 + 4 * b4 * s * s + 2 * rho * s * s + 8 * s ** 4)


def trace_216_abelian(s, u1, u2, t):
    """e^{1234}-coefficient of tr Ω∧Ω for ρ = 0, b² = 1 in the second family."""
    uu = u1 * u1 + u2 * u2
    return (-2048 * s ** 8 * (s * s - uu) ** 2 / t ** 4
            * (1 + 4 * s * s + 8 * s ** 4 + 4 * u1 * u1 - 4 * u2 - 16 * s * s * u2 + 8 * u2 * u2))


def dT_216_abelian(s, u1, u2, t):
    uu = u1 * u1 + u2 * u2
    return (-32 * s * s * (s * s - uu) / t ** 2
            * (s * s + u1 * u1 + (2 * s * s - u2) ** 2 + (s * s - uu)))


def a_lambda_trace(family, s, t, lam, delta=1, u1=0, u2=0):
    if family == "F215":
        return -8 * t * t / (s * s) * (delta + 2 * s * s) * lam * lam
    uu = u1 * u1 + u2 * u2
    return (-128 * s ** 4 * (s * s - uu) / (t * t)
            * (delta + 2 * delta * (u1 - u2) + 2 * s * s) * lam * lam)
