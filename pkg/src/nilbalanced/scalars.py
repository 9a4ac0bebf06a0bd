"""Scalar backends.

The exact backend uses :class:`fractions.Fraction` for real numbers and
:class:`QI` (Gaussian rationals) for complex ones.  Arithmetic between the two
mixes freely; a :class:`QI` with zero imaginary part collapses back to a
``Fraction`` so real computations never pay for the complex wrapper.

The float backend is mpmath (``mpf``/``mpc``) at a configurable working
precision; every zero decision goes through :func:`is_zero`, which compares
against a module-wide threshold.
"""

from __future__ import annotations

import contextlib
import math
import re
from fractions import Fraction
from numbers import Rational

import mpmath

_FLOAT_EPS = mpmath.mpf("1e-25")


def _fraction_mpmath(self, prec, rounding):
    return mpmath.mpf(self.numerator) / self.denominator


# mpmath looks for this hook when coercing unknown operands; without it
# `Fraction - mpf` and `Fraction < mpf` raise TypeError.
Fraction._mpmath_ = _fraction_mpmath


class NotExact(ValueError):
    """An exact computation needed an irrational value."""


class QI:
    """Gaussian rational ``re + im*i`` with Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # numbers-style accessors so Fraction and QI share an interface
    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return gauss(self.re, -self.im)

    def __repr__(self):
        return f"QI({self.re}, {self.im})"

    def __str__(self):
        return fmt(self)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__add__')(other)
        if isinstance(other, QI):
            return gauss(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__sub__')(other)
        if isinstance(other, QI):
            return gauss(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__rsub__')(other)
        if isinstance(other, (int, Fraction)):
            return gauss(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__mul__')(other)
        if isinstance(other, QI):
            return gauss(self.re * other.re - self.im * other.im,
                         self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__truediv__')(other)
        if isinstance(other, (int, Fraction)):
            return gauss(self.re / other, self.im / other)
        if isinstance(other, QI):
            n = other.re * other.re + other.im * other.im
            return self * QI(other.re / n, -other.im / n)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_float(other):
            return getattr(to_float(self), '__rtruediv__')(other)
        if isinstance(other, (int, Fraction)):
            n = self.re * self.re + self.im * self.im
            return gauss(other * self.re / n, -other * self.im / n)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** -k)
        out = Fraction(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def abs2(self):
        return self.re * self.re + self.im * self.im


I = QI(0, 1)


def gauss(re, im=0):
    """Build a Gaussian rational, collapsing to Fraction when ``im == 0``."""
    if im == 0:
        return Fraction(re)
    return QI(re, im)


def is_float(x) -> bool:
    return isinstance(x, (mpmath.mpf, mpmath.mpc))


def is_zero(x) -> bool:
    if is_float(x):
        return abs(x) < _FLOAT_EPS
    return x == 0


def float_eps():
    return _FLOAT_EPS


@contextlib.contextmanager
def float_backend(dps: int = 60, eps="1e-25"):
    """Temporarily switch mpmath to ``dps`` digits with zero threshold ``eps``."""
    global _FLOAT_EPS
    if dps < 50:
        raise ValueError("float backend needs at least 50 significant digits")
    old_dps, old_eps = mpmath.mp.dps, _FLOAT_EPS
    mpmath.mp.dps = dps
    _FLOAT_EPS = mpmath.mpf(eps)
    try:
        yield
    finally:
        mpmath.mp.dps = old_dps
        _FLOAT_EPS = old_eps


def conj(x):
    if isinstance(x, QI):
        return x.conjugate()
    if isinstance(x, mpmath.mpc):
        return mpmath.conj(x)
    return x


def re_part(x):
    if isinstance(x, QI):
        return x.re
    if isinstance(x, mpmath.mpc):
        return x.real
    return x


def im_part(x):
    if isinstance(x, QI):
        return x.im
    if isinstance(x, mpmath.mpc):
        return x.imag
    if is_float(x):
        return mpmath.mpf(0)
    return Fraction(0)


def abs2(x):
    """Squared modulus ``|x|^2`` (exact for Gaussian rationals)."""
    if isinstance(x, QI):
        return x.abs2()
    if isinstance(x, mpmath.mpc):
        return x.real ** 2 + x.imag ** 2
    return x * x


def imag_unit(like=None):
    """The imaginary unit in the backend of ``like``."""
    if like is not None and is_float(like):
        return mpmath.mpc(0, 1)
    return I


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt(x):
    """Square root; exact on perfect-square rationals, mpmath on floats.

    Raises :class:`NotExact` when an exact rational has an irrational root.
    """
    if is_float(x):
        return mpmath.sqrt(x)
    x = Fraction(x)
    if x < 0:
        raise NotExact(f"negative radicand {x}")
    p, q = _isqrt_exact(x.numerator), _isqrt_exact(x.denominator)
    if p is None or q is None:
        raise NotExact(f"sqrt({x}) is irrational; use the float backend")
    return Fraction(p, q)


def to_float(x):
    """Lift an exact scalar into the current mpmath context."""
    if is_float(x):
        return x
    if isinstance(x, QI):
        return mpmath.mpc(mpmath.mpf(x.re.numerator) / x.re.denominator,
                          mpmath.mpf(x.im.numerator) / x.im.denominator)
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def is_positive(x) -> bool:
    if is_float(x):
        return x > _FLOAT_EPS
    return x > 0


_RAT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, an integer literal, or pass through ints/Fractions."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, Rational):
        return Fraction(text.numerator, text.denominator)
    m = _RAT.match(str(text))
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def fmt(x) -> str:
    """Canonical string for a scalar: ``"3/2"``, ``"1+2i"``, or a float repr."""
    if isinstance(x, QI):
        if x.im == 0:
            return fmt(x.re)
        im = x.im
        tail = "i" if abs(im) == 1 else f"{fmt(abs(im))}i"
        if x.re == 0:
            return ("-" if im < 0 else "") + tail
        return f"{fmt(x.re)}{'-' if im < 0 else '+'}{tail}"
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, mpmath.mpc):
        return mpmath.nstr(x, 20)
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, 20)
    return str(x)
