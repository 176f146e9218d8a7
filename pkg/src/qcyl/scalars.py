"""Exact and floating scalars.

Algebraic identities in this package are asserted as equalities, never as
tolerance checks, so the algebra layer works over complex numbers whose real
and imaginary parts are rationals (:class:`QC`).  Solver and certification
code works with ordinary ``complex``/``float``.  Converting an exact scalar
to a float is always allowed (``complex(x)``); the reverse conversion is
never performed implicitly: building a :class:`QC` from a float raises.
"""

from __future__ import annotations

from fractions import Fraction

_EXACT_PARTS = (int, Fraction)


class QC:
    """Complex number with rational real and imaginary parts.

    Arithmetic with ``int``/``Fraction`` stays exact; arithmetic with
    ``float``/``complex`` promotes the result to ``complex``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if not isinstance(re, _EXACT_PARTS) or not isinstance(im, _EXACT_PARTS):
            raise TypeError(f"exact scalar parts must be int or Fraction, got {re!r}, {im!r}")
        self.re = re
        self.im = im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, QC):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _EXACT_PARTS):
            return self.re == other and self.im == 0
        if isinstance(other, (complex, float)):
            # Fraction == float compares exact values, no rounding.
            return self.re == getattr(other, "real", other) and self.im == getattr(other, "imag", 0.0)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"QC({self.re}, {self.im})"

    def __neg__(self):
        return QC(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, QC):
            return QC(self.re + other.re, self.im + other.im)
        if isinstance(other, _EXACT_PARTS):
            return QC(self.re + other, self.im)
        if isinstance(other, (complex, float)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QC):
            return QC(self.re - other.re, self.im - other.im)
        if isinstance(other, _EXACT_PARTS):
            return QC(self.re - other, self.im)
        if isinstance(other, (complex, float)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, QC):
            return QC(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)
        if isinstance(other, _EXACT_PARTS):
            return QC(self.re * other, self.im * other)
        if isinstance(other, (complex, float)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _EXACT_PARTS):
            return QC(Fraction(self.re, other), Fraction(self.im, other))
        if isinstance(other, QC):
            d = other.re * other.re + other.im * other.im
            if d == 0:
                raise ZeroDivisionError("division by exact zero")
            return QC(Fraction(self.re * other.re + self.im * other.im, d),
                      Fraction(self.im * other.re - self.re * other.im, d))
        if isinstance(other, (complex, float)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (QC, *_EXACT_PARTS)):
            d = self.re * self.re + self.im * self.im
            if d == 0:
                raise ZeroDivisionError("division by exact zero")
            inv = QC(Fraction(self.re, d), Fraction(-self.im, d))
            return inv if other == 1 else inv * other
        if isinstance(other, (complex, float)):
            return other / complex(self)
        return NotImplemented

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return QC(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return Fraction(self.re * self.re + self.im * self.im)


ZERO = QC(0)
ONE = QC(1)
I = QC(0, 1)


def as_scalar(x):
    """Coerce to a scalar: ints/Fractions become exact, floats become complex."""
    if isinstance(x, (QC, complex)):
        return x
    if isinstance(x, _EXACT_PARTS):
        return QC(x)
    if isinstance(x, float):
        return complex(x)
    raise TypeError(f"not a scalar: {x!r}")


def conj(x):
    """Complex conjugate for either scalar mode."""
    return x.conjugate() if isinstance(x, (QC, complex)) else as_scalar(x).conjugate()


def abs_sq(x):
    """|x|^2; exact for :class:`QC`, float otherwise."""
    if isinstance(x, QC):
        return QC(x.abs2())
    x = complex(x)
    return x.real * x.real + x.imag * x.imag


def is_exact(x) -> bool:
    return isinstance(x, (QC, *_EXACT_PARTS))
