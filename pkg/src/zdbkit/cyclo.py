"""Exact arithmetic in Z[zeta_p] for a prime p.

Values are stored on the power basis 1, zeta, ..., zeta^(p-2) using the
relation 1 + zeta + ... + zeta^(p-1) = 0.  Character sums and their
norms stay exact integers end to end; no floating point is involved, so
these values are safe to put into design certificates.
"""

from __future__ import annotations


class CycInt:
    """An element of Z[zeta_p] with integer coordinates."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        self.p = p
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p: int, value: int) -> "CycInt":
        return cls(p, (value,) + (0,) * (p - 2))

    @classmethod
    def from_counts(cls, p: int, counts) -> "CycInt":
        """Build sum_j counts[j] * zeta^j from p exponent counts."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"need {p} counts, got {len(counts)}")
        top = counts[p - 1]
        return cls(p, tuple(counts[i] - top for i in range(p - 1)))

    def __add__(self, other: "CycInt") -> "CycInt":
        other = self._coerce(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        other = self._coerce(other)
        return CycInt(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        acc = [0] * self.p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        acc[(i + j) % self.p] += a * b
        return CycInt.from_counts(self.p, acc)

    __rmul__ = __mul__

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt) or other.p != self.p:
            raise TypeError(f"cannot combine CycInt(p={self.p}) with {other!r}")
        return other

    def conj(self) -> "CycInt":
        """Complex conjugate: zeta^j -> zeta^(p-j)."""
        counts = [0] * self.p
        for j, a in enumerate(self.coeffs):
            counts[(self.p - j) % self.p] += a
        return CycInt.from_counts(self.p, counts)

    def norm(self) -> "CycInt":
        """self * conj(self); rational for the sums used here."""
        return self * self.conj()

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational and self.coeffs[0] == other
        return isinstance(other, CycInt) and self.p == other.p \
            and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if self.is_rational:
            return str(self.coeffs[0])
        terms = " + ".join(f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c)
        return f"({terms})"
