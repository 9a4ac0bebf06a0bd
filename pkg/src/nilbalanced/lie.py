"""Six-dimensional Lie algebras given by their structure equations.

An algebra is the list ``de^1, ..., de^6`` of 2-forms.  With
``de^k = sum_{i<j} c^k_{ij} e^{ij}`` the bracket on the dual frame is
``[e_i, e_j] = -sum_k c^k_{ij} e_k`` (from ``de^k(e_i, e_j) = -e^k([e_i, e_j])``).

The same class also carries structure equations written in a complex coframe
(coefficients may be Gaussian rationals); only :meth:`bracket` and the
ascending series assume a real frame.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .forms import DIM, INDICES, Form, e, monomials, pullback, wedge
from .scalars import fmt, is_zero, parse_rational


class StructureParseError(ValueError):
    def __init__(self, msg, line=1, column=1):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class LieAlgebra6:
    __slots__ = ("de", "name", "_dcache")

    def __init__(self, de, name=None):
        de = list(de)
        if len(de) != DIM:
            raise ValueError(f"need {DIM} structure equations, got {len(de)}")
        for k, f in enumerate(de, 1):
            if f.coeffs and f.degree != 2:
                raise ValueError(f"de^{k} is not a 2-form")
        self.de = [f if f.degree == 2 else Form.zero(2) for f in de]
        self.name = name
        self._dcache = {}

    @classmethod
    def from_constants(cls, c, name=None):
        """``c[(k, i, j)] = c^k_{ij}`` with ``i < j``."""
        de = [dict() for _ in INDICES]
        for (k, i, j), v in c.items():
            de[k - 1][(i, j)] = v
        return cls([Form(2, d) for d in de], name)

    def c(self, k, i, j):
        """Structure constant ``c^k_{ij}`` (antisymmetric in ``i, j``)."""
        return self.de[k - 1][(i, j)] if i != j else Fraction(0)

    def bracket_vector(self, i, j):
        """Coordinates of ``[e_i, e_j]``."""
        return [-self.c(k, i, j) for k in INDICES]

    def bracket(self, x, y):
        out = [Fraction(0)] * DIM
        for i in INDICES:
            if is_zero(x[i - 1]):
                continue
            for j in INDICES:
                if i == j or is_zero(y[j - 1]):
                    continue
                f = x[i - 1] * y[j - 1]
                for k in INDICES:
                    ck = self.c(k, i, j)
                    if not is_zero(ck):
                        out[k - 1] = out[k - 1] - f * ck
        return out

    def d(self, a: Form) -> Form:
        return chevalley_differential(self, a)

    def is_abelian(self) -> bool:
        return all(not f.coeffs for f in self.de)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra6) and all(a == b for a, b in zip(self.de, other.de))

    def __repr__(self):
        return f"LieAlgebra6({serialize(self)!r})"


def chevalley_differential(g: LieAlgebra6, a: Form) -> Form:
    """Chevalley–Eilenberg differential, extended by the graded Leibniz rule."""
    if a.degree == 0 or not a.coeffs:
        return Form.zero(min(a.degree + 1, DIM))
    out = Form.zero(a.degree + 1)
    for key, c in a.coeffs.items():
        dk = g._dcache.get(key)
        if dk is None:
            dk = Form.zero(len(key) + 1)
            for pos, i in enumerate(key):
                left = e(*key[:pos]) if pos else Form.scalar(Fraction(1))
                right = e(*key[pos + 1:]) if pos + 1 < len(key) else Form.scalar(Fraction(1))
                term = wedge(wedge(left, g.de[i - 1]), right)
                dk = dk + (term if pos % 2 == 0 else -term)
            g._dcache[key] = dk
        out = out + dk * c
    return out


@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    k: int | None = None
    witness: Form | None = None


def jacobi_closure_check(g: LieAlgebra6) -> JacobiResult:
    for k, f in enumerate(g.de, 1):
        ddf = g.d(f)
        if ddf.coeffs:
            return JacobiResult(False, k, ddf)
    return JacobiResult(True)


# ---- structure-equation text format -------------------------------------

# Salamon slot term: optional sign, optional "p/q*" multiplier, glued index pair
_SLOT_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*\s*)?(\d)(\d)(?!\d)\s*")
# equation term: optional sign, optional multiplier, "eIJ"
_EQ_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?e\s*(\d)(\d)(?!\d)\s*")


def _parse_terms(text, pattern, line, col0):
    if text.strip() in ("", "0"):
        return Form.zero(2)
    out = Form.zero(2)
    pos = 0
    first = True
    while pos < len(text) and text[pos:].strip():
        m = pattern.match(text, pos)
        if not m or (not first and m.group(1) is None):
            col = col0 + pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise StructureParseError(f"unexpected {text[pos:].strip()[:10]!r}", line, col)
        i, j = int(m.group(3)), int(m.group(4))
        for idx, grp in ((i, 3), (j, 4)):
            if idx not in INDICES:
                raise StructureParseError(f"index {idx} out of range 1..6", line, col0 + m.start(grp))
        if i == j:
            raise StructureParseError(f"repeated index {i}{j}", line, col0 + m.start(3))
        coeff = parse_rational(m.group(2).replace(" ", "")) if m.group(2) else Fraction(1)
        sign = -1 if m.group(1) == "-" else 1
        out = out + Form(2, {(i, j): sign * coeff})
        pos = m.end()
        first = False
    return out


def parse_structure_equations(text: str, name=None) -> LieAlgebra6:
    """Parse a Salamon tuple ``(0,0,0,0,12,34)`` or ``deK = ...`` lines.

    A JSON object ``{"de": [[[i, j, "p/q"], ...], ...]}`` is accepted too.
    Reversed pairs are normalized by sign, so ``13+42`` is ``e13 - e24``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return from_json(json.loads(stripped), name)
    if stripped.startswith("("):
        if not stripped.endswith(")"):
            raise StructureParseError("missing ')'", 1, len(text))
        body_start = text.index("(") + 1
        body = text[body_start:text.rindex(")")]
        slots = body.split(",")
        if len(slots) != DIM:
            raise StructureParseError(f"expected {DIM} slots, found {len(slots)}", 1, body_start + 1)
        de = []
        col = body_start + 1
        for slot in slots:
            de.append(_parse_terms(slot, _SLOT_TERM, 1, col))
            col += len(slot) + 1
        return LieAlgebra6(de, name)
    de = [None] * DIM
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.strip().startswith("#"):
            continue
        m = re.match(r"\s*d\s*e\s*(\d+)\s*=", line)
        if not m:
            raise StructureParseError("expected 'deK = ...'", lineno, 1)
        k = int(m.group(1))
        if not 1 <= k <= DIM:
            raise StructureParseError(f"index out of range: de{k}", lineno, m.start(1) + 1)
        if de[k - 1] is not None:
            raise StructureParseError(f"duplicate de{k}", lineno, 1)
        de[k - 1] = _parse_terms(line[m.end():], _EQ_TERM, lineno, m.end() + 1)
    return LieAlgebra6([f if f is not None else Form.zero(2) for f in de], name)


def serialize(g: LieAlgebra6) -> str:
    """Canonical equation-list text: one ``deK = ...`` line per nonzero equation."""
    lines = []
    for k, f in enumerate(g.de, 1):
        if not f.coeffs:
            continue
        terms = []
        for key in sorted(f.coeffs):
            c = f.coeffs[key]
            s = fmt(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            body = f"e{key[0]}{key[1]}" if mag == "1" else f"{mag} e{key[0]}{key[1]}"
            if not terms:
                terms.append(("-" if neg else "") + body)
            else:
                terms.append(("- " if neg else "+ ") + body)
        lines.append(f"de{k} = " + " ".join(terms))
    return "\n".join(lines)


def to_json(g: LieAlgebra6) -> dict:
    return {"de": [[[i, j, fmt(c)] for (i, j), c in sorted(f.coeffs.items())] for f in g.de]}


def from_json(obj, name=None) -> LieAlgebra6:
    rows = obj["de"]
    if len(rows) != DIM:
        raise ValueError(f"need {DIM} rows in 'de'")
    return LieAlgebra6([Form(2, {(int(i), int(j)): parse_rational(c) for i, j, c in row})
                        for row in rows], name)


# ---- presets -------------------------------------------------------------

PRESET_TEXT = {
    "h2": "(0,0,0,0,12,34)",
    "h3": "(0,0,0,0,0,12+34)",
    "h4": "(0,0,0,0,12,14+23)",
    "h5": "(0,0,0,0,13+42,14+23)",
    "h6": "(0,0,0,0,12,13)",
    "h8": "(0,0,0,0,0,12)",
    # six-slot form of h19^-
    "h19-": "(0,0,0,12,23,14-35)",
    "solvable49": "de3 = -e13 - e24\nde4 = -e14 + e23\nde5 = e15 + e26\nde6 = e16 - e25",
}


def preset(name: str) -> LieAlgebra6:
    try:
        text = PRESET_TEXT[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {sorted(PRESET_TEXT)}") from None
    return parse_structure_equations(text, name)


def abelian() -> LieAlgebra6:
    return LieAlgebra6([Form.zero(2)] * DIM, "abelian")


# ---- subspaces and series -----------------------------------------------

def centralizer_step(g: LieAlgebra6, prev, extra_maps=()):
    """``{X : [M X, e_j] ∈ prev for all j and all M in (Id,) + extra_maps}``."""
    ann = linalg.annihilator(prev, DIM)
    rows = []
    maps = [None] + list(extra_maps)
    for j in INDICES:
        for m in maps:
            # X -> Q [M X, e_j] is linear; assemble its matrix column by column
            cols = []
            for i in INDICES:
                x = [Fraction(int(t == i)) for t in INDICES]
                if m is not None:
                    x = [sum((m[r][s] * x[s] for s in range(DIM)), Fraction(0)) for r in range(DIM)]
                br = g.bracket(x, [Fraction(int(t == j)) for t in INDICES])
                cols.append([sum((q[s] * br[s] for s in range(DIM)), Fraction(0)) for q in ann])
            for r in range(len(ann)):
                rows.append([cols[i][r] for i in range(DIM)])
    if not rows:
        return linalg.identity(DIM)
    return linalg.span_basis(linalg.nullspace(rows, DIM))


@dataclass
class SeriesResult:
    terms: list
    reaches_all: bool
    steps: int | None

    @property
    def dims(self):
        return [len(t) for t in self.terms]


def ascending_series(g: LieAlgebra6, extra_maps=()) -> SeriesResult:
    """Ascending central series ``g_0 = 0 ⊂ g_1 ⊂ ...`` until it stabilizes."""
    terms = [[]]
    while True:
        nxt = centralizer_step(g, terms[-1], extra_maps)
        if len(nxt) == len(terms[-1]):
            break
        terms.append(nxt)
        if len(nxt) == DIM:
            break
    reaches = len(terms[-1]) == DIM
    return SeriesResult(terms, reaches, len(terms) - 1 if reaches else None)


# ---- frame changes -------------------------------------------------------

def reframe(g: LieAlgebra6, new_coframe, name=None) -> LieAlgebra6:
    """Structure equations in the coframe ``f^a = sum_k A[a][k] e^k``.

    ``new_coframe`` is the square matrix ``A``; the result expresses each
    ``df^a`` in terms of ``f^{bc}``.
    """
    A = [list(r) for r in new_coframe]
    Ainv = linalg.inverse(A)
    # e^k = sum_a Ainv[k][a] f^a
    e_in_f = [Form(1, {(a + 1,): Ainv[k][a] for a in range(DIM)}) for k in range(DIM)]
    de = []
    for a in range(DIM):
        df_e = Form.zero(2)
        for k in range(DIM):
            if not is_zero(A[a][k]):
                df_e = df_e + g.de[k] * A[a][k]
        de.append(pullback(df_e, e_in_f))
    return LieAlgebra6(de, name or g.name)
