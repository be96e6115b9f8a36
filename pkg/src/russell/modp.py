"""Residue arithmetic modulo a fixed prime.

This mode exists solely to accelerate the randomized equality oracle:
polynomials keep exact rational coefficients, and only point evaluation is
pushed into Z/pZ.  The default prime is the Mersenne prime 2^31 - 1.
"""

from __future__ import annotations

from fractions import Fraction

ORACLE_PRIME = 2**31 - 1


class ModP:
    """Value in Z/pZ for a prime p fixed per computation."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int = ORACLE_PRIME):
        self.val = val % p
        self.p = p

    @classmethod
    def from_fraction(cls, q: Fraction, p: int = ORACLE_PRIME) -> "ModP":
        den = q.denominator % p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes mod {p}")
        return cls(q.numerator * pow(den, -1, p), p)

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        if isinstance(other, Fraction):
            return ModP.from_fraction(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.val + o.val, self.p)

    __radd__ = __add__

    def __neg__(self):
        return ModP(-self.val, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ModP(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.val == 0:
                raise ZeroDivisionError("0 is not invertible")
            return ModP(pow(pow(self.val, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.val, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.val == o.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"{self.val} (mod {self.p})"
