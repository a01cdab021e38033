"""Exact arithmetic in the field Q(sqrt(2)).

Every value is p + q*sqrt(2) with p, q arbitrary-precision rationals
(gmpy2.mpq, always in lowest terms with positive denominator).  Since
sqrt(2) is irrational the representation is unique, so equality is
structural and hashing is safe.  No floating point is used anywhere in
the core arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

RatLike = Union[int, Fraction, "mpq"]


class NonIntegralError(ValueError):
    """A value expected to be a plain integer was not.  In the freeness
    checks this signals an implementation bug, never a valid outcome."""


class QSqrt2:
    """p + q*sqrt(2) with exact rational p (``rat``) and q (``irr``)."""

    __slots__ = ("rat", "irr")

    def __init__(self, rat: RatLike = 0, irr: RatLike = 0):
        self.rat = mpq(rat)
        self.irr = mpq(irr)

    # -- field operations -------------------------------------------------

    def __add__(self, other: "QSqrt2") -> "QSqrt2":
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return QSqrt2(self.rat + other.rat, self.irr + other.irr)

    def __sub__(self, other: "QSqrt2") -> "QSqrt2":
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return QSqrt2(self.rat - other.rat, self.irr - other.irr)

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.rat, -self.irr)

    def __mul__(self, other: "QSqrt2") -> "QSqrt2":
        if not isinstance(other, QSqrt2):
            return NotImplemented
        # (p1 + q1 s)(p2 + q2 s) with s^2 = 2
        return QSqrt2(
            self.rat * other.rat + 2 * self.irr * other.irr,
            self.rat * other.irr + self.irr * other.rat,
        )

    def inverse(self) -> "QSqrt2":
        """Multiplicative inverse via the conjugate:
        1 / (p + q s) = (p - q s) / (p^2 - 2 q^2)."""
        norm = self.rat * self.rat - 2 * self.irr * self.irr
        if norm == 0:
            # p^2 = 2 q^2 has no nonzero rational solution, so norm == 0
            # only for the zero element.
            raise ZeroDivisionError("inverse of zero in Q(sqrt(2))")
        return QSqrt2(self.rat / norm, -self.irr / norm)

    def __truediv__(self, other: "QSqrt2") -> "QSqrt2":
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return self * other.inverse()

    # -- the 3^n / sqrt(2) scaling helpers --------------------------------

    def div_sqrt2(self) -> "QSqrt2":
        """Exact division by sqrt(2): (p + q s)/s = q + (p/2) s."""
        return QSqrt2(self.irr, self.rat / 2)

    def scale_pow3(self, k: int) -> "QSqrt2":
        """Multiply by 3^k (k may be negative)."""
        factor = mpq(3**k) if k >= 0 else mpq(1, 3**-k)
        return QSqrt2(self.rat * factor, self.irr * factor)

    def as_integer(self) -> int:
        """The value as a plain integer; raises NonIntegralError if the
        sqrt(2) component is nonzero or the rational part is not integral."""
        if self.irr != 0:
            raise NonIntegralError(f"{self} has a sqrt(2) component")
        if self.rat.denominator != 1:
            raise NonIntegralError(f"{self} is not an integer")
        return int(self.rat)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.rat == 0 and self.irr == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSqrt2):
            return NotImplemented
        return self.rat == other.rat and self.irr == other.irr

    def __hash__(self) -> int:
        return hash((self.rat, self.irr))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSqrt2({str(self.rat)!r}, {str(self.irr)!r})"

    def __str__(self) -> str:
        """``p/q + r/s*sqrt2`` with zero terms elided; ``0`` if zero."""
        if self.is_zero():
            return "0"
        parts = []
        if self.rat != 0:
            parts.append(str(self.rat))
        if self.irr != 0:
            if self.irr == 1:
                term = "sqrt2"
            elif self.irr == -1:
                term = "-sqrt2"
            else:
                term = f"{self.irr}*sqrt2"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)

    def to_json(self) -> list:
        """[[p_num, p_den], [q_num, q_den]] with decimal-string entries so
        arbitrary-width integers survive any JSON reader."""
        return [
            [str(self.rat.numerator), str(self.rat.denominator)],
            [str(self.irr.numerator), str(self.irr.denominator)],
        ]

    @classmethod
    def from_json(cls, data: list) -> "QSqrt2":
        (pn, pd), (qn, qd) = data
        return cls(mpq(int(pn), int(pd)), mpq(int(qn), int(qd)))

    def __float__(self) -> float:
        # Display helper only; never used by the exact checks.
        return float(self.rat) + float(self.irr) * math.sqrt(2)


ZERO = QSqrt2(0)
ONE = QSqrt2(1)
SQRT2 = QSqrt2(0, 1)


def rational(p: RatLike, q: RatLike = 1) -> QSqrt2:
    """The rational p/q as an element of Q(sqrt(2))."""
    return QSqrt2(mpq(p) / mpq(q))
