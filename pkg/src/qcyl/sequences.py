"""Sequences on the integer lattice with controlled tails.

Two kinds of sequence appear as operator symbols on the cylinder:

* :class:`DiagSeq` -- eventually constant.  Explicit values on a finite
  window, constant tails beyond it.  These are the symbols of diagonal
  operators in the algebra.
* :class:`IncSeq` -- eventually affine.  Explicit values on a non-empty
  window, affine tails anchored at the window endpoints.  These generate
  derivations; their tail slopes are exactly the data surviving in the
  boundary symbol.

Both kinds are normalized on construction (minimal window, canonical anchor)
so structural equality is semantic equality.  Values are immutable; every
operation returns a fresh sequence.  Evaluation is total on Z.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QC, as_scalar, conj

_SCALAR_TYPES = (QC, complex, int, float, Fraction)


class DiagSeq:
    """Eventually constant sequence: values on ``lo..lo+len-1``, tails beyond.

    An empty window with distinct tails encodes a step located at ``lo``
    (left tail for k < lo, right tail for k >= lo).
    """

    __slots__ = ("lo", "values", "left", "right")

    def __init__(self, values=(), lo=0, left=0, right=0):
        vals = [as_scalar(v) for v in values]
        left = as_scalar(left)
        right = as_scalar(right)
        while vals and vals[-1] == right:
            vals.pop()
        while vals and vals[0] == left:
            vals.pop(0)
            lo += 1
        if not vals and left == right:
            lo = 0
        self.lo = lo
        self.values = tuple(vals)
        self.left = left
        self.right = right

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @classmethod
    def constant(cls, c):
        return cls((), 0, c, c)

    @classmethod
    def unit(cls, k=0):
        """Indicator of the single site k."""
        return cls((1,), k)

    @classmethod
    def box(cls, n):
        """Indicator of |k| <= n."""
        if n < 0:
            return cls.constant(0)
        return cls((1,) * (2 * n + 1), -n)

    @classmethod
    def step_ge(cls, k0=0):
        """Indicator of k >= k0."""
        return cls((), k0, 0, 1)

    def __call__(self, k: int):
        if k < self.lo:
            return self.left
        if k > self.hi:
            return self.right
        return self.values[k - self.lo]

    def shift(self, m: int) -> "DiagSeq":
        """Sequence k -> self(k + m)."""
        return DiagSeq(self.values, self.lo - m, self.left, self.right)

    def reflect(self) -> "DiagSeq":
        """Sequence k -> self(-k); tails swap sides."""
        return DiagSeq(tuple(reversed(self.values)), -self.hi, self.right, self.left)

    def conjugate(self) -> "DiagSeq":
        return DiagSeq([conj(v) for v in self.values], self.lo,
                       conj(self.left), conj(self.right))

    def is_zero(self) -> bool:
        return not self.values and not self.left and not self.right

    def embed(self) -> "IncSeq":
        """The same sequence as an eventually affine one (zero slopes)."""
        lo = self.lo - 1
        return IncSeq([self(k) for k in range(lo, self.hi + 2)], lo, 0, 0)

    def __eq__(self, other):
        if isinstance(other, DiagSeq):
            return (self.lo == other.lo and self.values == other.values
                    and self.left == other.left and self.right == other.right)
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return DiagSeq([-v for v in self.values], self.lo, -self.left, -self.right)

    def __add__(self, other):
        if isinstance(other, DiagSeq):
            return _diag_binary(self, other, lambda a, b: a + b)
        if isinstance(other, IncSeq):
            return _inc_binary(self, other, lambda a, b: a + b,
                               other.dleft, other.dright)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, DiagSeq):
            return _diag_binary(self, other, lambda a, b: a - b)
        if isinstance(other, IncSeq):
            return _inc_binary(self, other, lambda a, b: a - b,
                               -other.dleft, -other.dright)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, DiagSeq):
            return _diag_binary(self, other, lambda a, b: a * b)
        if isinstance(other, IncSeq):
            return _inc_binary(self, other, lambda a, b: a * b,
                               self.left * other.dleft, self.right * other.dright)
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = as_scalar(c)
        return DiagSeq([c * v for v in self.values], self.lo, c * self.left, c * self.right)

    def __repr__(self):
        return f"DiagSeq({list(self.values)!r}, lo={self.lo}, left={self.left!r}, right={self.right!r})"


class IncSeq:
    """Eventually affine sequence.

    ``values`` live on ``lo..lo+len-1`` (at least one value); for k below the
    window eval(k) = values[0] + dleft*(k-lo), symmetrically on the right.
    Increments self(k)-self(k-1) equal dleft / dright far enough out.
    """

    __slots__ = ("lo", "values", "dleft", "dright")

    def __init__(self, values, lo=0, dleft=0, dright=0):
        vals = [as_scalar(v) for v in values]
        if not vals:
            raise ValueError("IncSeq needs at least one anchor value")
        dleft = as_scalar(dleft)
        dright = as_scalar(dright)
        while len(vals) >= 2 and vals[-1] == vals[-2] + dright:
            vals.pop()
        while len(vals) >= 2 and vals[0] == vals[1] - dleft:
            vals.pop(0)
            lo += 1
        if len(vals) == 1 and dleft == dright and lo != 0:
            # globally affine: anchor at 0 so equal sequences compare equal
            vals = [vals[0] - dleft * lo]
            lo = 0
        self.lo = lo
        self.values = tuple(vals)
        self.dleft = dleft
        self.dright = dright

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @classmethod
    def constant(cls, c):
        return cls((c,), 0)

    @classmethod
    def affine(cls, value_at_0, slope):
        """k -> value_at_0 + slope*k."""
        return cls((value_at_0,), 0, slope, slope)

    def __call__(self, k: int):
        if k < self.lo:
            return self.values[0] + self.dleft * (k - self.lo)
        if k > self.hi:
            return self.values[-1] + self.dright * (k - self.hi)
        return self.values[k - self.lo]

    def shift(self, m: int) -> "IncSeq":
        """Sequence k -> self(k + m)."""
        return IncSeq(self.values, self.lo - m, self.dleft, self.dright)

    def reflect(self) -> "IncSeq":
        """Sequence k -> self(-k); slopes negate and swap sides."""
        return IncSeq(tuple(reversed(self.values)), -self.hi, -self.dright, -self.dleft)

    def conjugate(self) -> "IncSeq":
        return IncSeq([conj(v) for v in self.values], self.lo,
                      conj(self.dleft), conj(self.dright))

    def is_zero(self) -> bool:
        return (len(self.values) == 1 and not self.values[0]
                and not self.dleft and not self.dright)

    def is_diagonal(self) -> bool:
        """True when both tail slopes vanish (eventually constant)."""
        return not self.dleft and not self.dright

    def to_diag(self) -> DiagSeq:
        if not self.is_diagonal():
            raise ValueError(f"sequence has affine growth (slopes {self.dleft!r}, {self.dright!r})")
        return DiagSeq(self.values, self.lo, self.values[0], self.values[-1])

    def __eq__(self, other):
        if isinstance(other, IncSeq):
            return (self.lo == other.lo and self.values == other.values
                    and self.dleft == other.dleft and self.dright == other.dright)
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return IncSeq([-v for v in self.values], self.lo, -self.dleft, -self.dright)

    def __add__(self, other):
        if isinstance(other, (DiagSeq, IncSeq)):
            dl, dr = _slopes(other)
            return _inc_binary(self, other, lambda a, b: a + b,
                               self.dleft + dl, self.dright + dr)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, (DiagSeq, IncSeq)):
            dl, dr = _slopes(other)
            return _inc_binary(self, other, lambda a, b: a - b,
                               self.dleft - dl, self.dright - dr)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, IncSeq):
            raise TypeError("product of two affinely growing sequences leaves the class")
        if isinstance(other, DiagSeq):
            return _inc_binary(self, other, lambda a, b: a * b,
                               self.dleft * other.left, self.dright * other.right)
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = as_scalar(c)
        return IncSeq([c * v for v in self.values], self.lo, c * self.dleft, c * self.dright)

    def __repr__(self):
        return (f"IncSeq({list(self.values)!r}, lo={self.lo}, "
                f"dleft={self.dleft!r}, dright={self.dright!r})")


def _slopes(s):
    return (s.dleft, s.dright) if isinstance(s, IncSeq) else (as_scalar(0), as_scalar(0))


def _diag_binary(a: DiagSeq, b: DiagSeq, op) -> DiagSeq:
    lo = min(a.lo, b.lo) - 1
    hi = max(a.hi, b.hi) + 1
    vals = [op(a(k), b(k)) for k in range(lo, hi + 1)]
    return DiagSeq(vals, lo, op(a.left, b.left), op(a.right, b.right))


def _inc_binary(a, b, op, dleft, dright) -> IncSeq:
    # Outside [min lo - 1, max hi + 1] both operands are in pure tail mode,
    # so the result is exactly affine there and the anchors are valid.
    lo = min(a.lo, b.lo) - 1
    hi = max(a.hi, b.hi) + 1
    vals = [op(a(k), b(k)) for k in range(lo, hi + 1)]
    return IncSeq(vals, lo, dleft, dright)
