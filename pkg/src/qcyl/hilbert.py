"""Finitely supported vectors on the grade/site lattice.

The GNS space of the cylinder algebra (with respect to the trace weight) is
square-summable functions on Z^2, indexed by (grade n, site k).  The dense
domain used for all unbounded operators is the finitely supported part,
modelled here as a sparse immutable map.  The inner product is the plain
l^2 pairing, which exactly matches the trace form tr(f* g).
"""

from __future__ import annotations

from .scalars import QC, as_scalar, conj

_ZERO = QC(0)


class LatticeVector:
    """Finitely supported f: Z^2 -> C, written f[n, k] for grade n, site k."""

    __slots__ = ("data",)

    def __init__(self, data=None):
        store = {}
        if data:
            for (n, k), v in data.items():
                v = as_scalar(v)
                if v:
                    store[(int(n), int(k))] = v
        self.data = store

    @classmethod
    def unit(cls, n: int, k: int, value=1) -> "LatticeVector":
        return cls({(n, k): value})

    @classmethod
    def zero(cls) -> "LatticeVector":
        return cls()

    def __getitem__(self, nk):
        return self.data.get(nk, _ZERO)

    def items(self):
        """Entries in deterministic (grade, site) order."""
        return sorted(self.data.items(), key=lambda e: e[0])

    def support(self):
        return sorted(self.data)

    def grades(self):
        return sorted({n for n, _ in self.data})

    def grade_slice(self, n: int) -> dict:
        """Map site -> value of the grade-n component."""
        return {k: v for (m, k), v in self.data.items() if m == n}

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        if isinstance(other, LatticeVector):
            return self.data == other.data
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return LatticeVector({nk: -v for nk, v in self.data.items()})

    def __add__(self, other):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        out = dict(self.data)
        for nk, v in other.data.items():
            out[nk] = out.get(nk, _ZERO) + v
        return LatticeVector(out)

    def __sub__(self, other):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        out = dict(self.data)
        for nk, v in other.data.items():
            out[nk] = out.get(nk, _ZERO) - v
        return LatticeVector(out)

    def scale(self, c) -> "LatticeVector":
        c = as_scalar(c)
        return LatticeVector({nk: c * v for nk, v in self.data.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def inner(self, other: "LatticeVector"):
        """<self, other> = sum conj(self[n,k]) * other[n,k] (linear in other)."""
        total = _ZERO
        other_data = other.data
        for nk, v in self.data.items():
            w = other_data.get(nk)
            if w is not None:
                total = total + conj(v) * w
        return total

    def norm_sq(self):
        return sum((conj(v) * v for v in self.data.values()), _ZERO)

    def __repr__(self):
        body = ", ".join(f"({n},{k}): {v!r}" for (n, k), v in self.items())
        return f"LatticeVector({{{body}}})"


def max_abs_diff(f: LatticeVector, g: LatticeVector) -> float:
    """sup-norm distance, for float-mode comparisons in tests."""
    keys = set(f.data) | set(g.data)
    return max((abs(complex(f[nk]) - complex(g[nk])) for nk in keys), default=0.0)
