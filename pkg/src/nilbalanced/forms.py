"""Sparse exterior forms on a fixed 6-dimensional coframe.

A :class:`Form` is a homogeneous k-form stored as ``{(i1, ..., ik): coeff}``
with strictly increasing 1-based indices.  The same type serves the real
coframe ``e^1..e^6`` and complex coframes such as
``(ω^1, ω^2, ω^3, ω̄^1, ω̄^2, ω̄^3)``; which coframe a form lives in is a
matter of context, not of the type.

Sign conventions: ``e^{i1...ik}(e_{i1}, ..., e_{ik}) = 1`` and evaluation is
the full determinant (no 1/k! factors).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .scalars import conj, fmt, is_zero

DIM = 6
INDICES = tuple(range(1, DIM + 1))


def _merge_sign(a, b):
    """Sign of sorting ``a + b`` (both increasing), or 0 if they overlap."""
    if set(a) & set(b):
        return 0
    # count inversions between the two blocks
    inv = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inv += j
    return -1 if inv & 1 else 1


def _sort_sign(idx):
    """Sign of the permutation sorting ``idx``; 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


def monomials(k):
    return list(combinations(INDICES, k))


class Form:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        self.degree = degree
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index {key} does not match degree {degree}")
            if any(i not in INDICES for i in key):
                raise ValueError(f"index out of range in {key}")
            sign, skey = _sort_sign(key)
            if sign == 0 or is_zero(c):
                continue
            c = sign * c
            if skey in clean:
                c = clean[skey] + c
                if is_zero(c):
                    del clean[skey]
                    continue
            clean[skey] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, degree: int):
        return cls(degree)

    @classmethod
    def scalar(cls, c):
        return cls(0, {(): c})

    # ---- linear structure -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Form):
            return NotImplemented
        if other.degree != self.degree:
            if not other.coeffs:
                return self
            if not self.coeffs:
                return other
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return Form(self.degree, out)

    __radd__ = __add__

    def __neg__(self):
        return Form(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Form):
            return NotImplemented
        return Form(self.degree, {k: v * c for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.__mul__(c)

    def __truediv__(self, c):
        return self * (1 / c) if not isinstance(c, int) else self * Fraction(1, c)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, Form):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and (self - other).is_zero()

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, key):
        sign, skey = _sort_sign(key)
        if sign == 0:
            return Fraction(0)
        return sign * self.coeffs.get(skey, Fraction(0))

    def map_coeffs(self, fn):
        return Form(self.degree, {k: fn(c) for k, c in self.coeffs.items()})

    def conjugate(self):
        """Coefficient-wise complex conjugate (correct on the real coframe)."""
        return self.map_coeffs(conj)

    def to_vector(self):
        return [self[m] for m in monomials(self.degree)]

    @classmethod
    def from_vector(cls, degree, vec):
        return cls(degree, dict(zip(monomials(degree), vec)))

    def __repr__(self):
        return f"Form({self.degree}, {self})"

    def __str__(self):
        return format_form(self)


def format_form(a: Form, symbol="e", labels=None) -> str:
    if not a.coeffs:
        return "0"
    parts = []
    for key in sorted(a.coeffs):
        c = a.coeffs[key]
        name = symbol + "".join(labels[i] if labels else str(i) for i in key) if key else ""
        s = fmt(c)
        if not name:
            parts.append(s)
        elif s == "1":
            parts.append(name)
        elif s == "-1":
            parts.append("-" + name)
        elif any(ch in s[1:] for ch in "+-") or "i" in s:
            parts.append(f"({s})*{name}")
        else:
            parts.append(f"{s}*{name}")
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def e(*idx) -> Form:
    """Basis monomial ``e^{i1...ik}``; ``e(1, 3)`` is ``e^{13}``."""
    if len(idx) == 1 and isinstance(idx[0], str):
        idx = tuple(int(ch) for ch in idx[0])
    return Form(len(idx), {tuple(idx): Fraction(1)})


def one_form(coeffs) -> Form:
    """1-form from a length-6 coefficient list."""
    return Form(1, {(i + 1,): c for i, c in enumerate(coeffs)})


def wedge(a: Form, b: Form) -> Form:
    deg = a.degree + b.degree
    if deg > DIM:
        return Form.zero(min(deg, DIM))
    out = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            s = _merge_sign(ka, kb)
            if s == 0:
                continue
            key = tuple(sorted(ka + kb))
            val = ca * cb if s > 0 else -(ca * cb)
            out[key] = out[key] + val if key in out else val
    return Form(deg, out)


def wedge_all(*forms) -> Form:
    out = Form.scalar(Fraction(1))
    for f in forms:
        out = wedge(out, f)
    return out


def _as_coords(v):
    if isinstance(v, int):
        return [Fraction(int(i == v)) for i in INDICES]
    return list(v)


def evaluate(a: Form, vectors):
    """Evaluate ``a`` on ``len(vectors)`` vectors (frame indices or coordinates)."""
    vectors = list(vectors)
    if len(vectors) != a.degree:
        raise ValueError(f"arity mismatch: {a.degree}-form on {len(vectors)} vectors")
    if a.degree == 0:
        return a[()]
    if all(isinstance(v, int) for v in vectors):
        return a[tuple(vectors)]
    coords = [_as_coords(v) for v in vectors]
    total = Fraction(0)
    for key, c in a.coeffs.items():
        m = [[coords[j][i - 1] for j in range(len(coords))] for i in key]
        total = total + c * _det(m)
    return total


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Fraction(0)
    for j in range(n):
        if is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def pullback(a: Form, images) -> Form:
    """Substitute each basis 1-form: ``e^k -> images[k-1]`` (1-forms)."""
    out = Form.zero(a.degree)
    for key, c in a.coeffs.items():
        term = Form.scalar(c)
        for i in key:
            term = wedge(term, images[i - 1])
            if not term.coeffs:
                break
        out = out + term
    if a.degree == 0:
        return a
    return out


def contract(a: Form, i: int) -> Form:
    """Interior product with the frame vector ``e_i`` (first slot)."""
    if a.degree == 0:
        return Form.zero(0)
    out = {}
    for key, c in a.coeffs.items():
        if i in key:
            pos = key.index(i)
            rest = key[:pos] + key[pos + 1:]
            out[rest] = -c if pos % 2 else c
    return Form(a.degree - 1, out)


# su(3) generators on the adapted coframe
GAMMA = (
    e(1, 2) - e(3, 4),
    e(1, 3) + e(2, 4),
    e(1, 4) - e(2, 3),
    e(3, 4) - e(5, 6),
    e(1, 5) + e(2, 6),
    e(1, 6) - e(2, 5),
    e(3, 5) + e(4, 6),
    e(3, 6) - e(4, 5),
)


def gamma(i: int) -> Form:
    """``γ_i`` for ``i = 1..8``."""
    return GAMMA[i - 1]
