"""Exact 3x3 matrix and 3-vector algebra over Q(sqrt(2)).

All comparisons are structural equality of canonical scalars; there is no
numerical tolerance anywhere.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Tuple

from .scalar import ONE, QSqrt2, ZERO

Vec3 = Tuple[QSqrt2, QSqrt2, QSqrt2]


class SingularMatrixError(ZeroDivisionError):
    """Inverse of a matrix with zero determinant."""


class Mat3:
    """3x3 matrix over Q(sqrt(2)), row-major, immutable by convention."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[QSqrt2]]):
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("Mat3 requires a 3x3 grid of entries")
        self.rows = rows

    def __getitem__(self, ij: tuple) -> QSqrt2:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        a, b = self.rows, other.rows
        return Mat3(
            tuple(
                a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                for j in range(3)
            )
            for i in range(3)
        )

    def apply(self, v: Vec3) -> Vec3:
        """Matrix-vector product."""
        return tuple(
            row[0] * v[0] + row[1] * v[1] + row[2] * v[2] for row in self.rows
        )

    def transpose(self) -> "Mat3":
        a = self.rows
        return Mat3(tuple(a[i][j] for i in range(3)) for j in range(3))

    def det(self) -> QSqrt2:
        """Cofactor expansion along the first row."""
        a = self.rows
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )

    def adjugate(self) -> "Mat3":
        """Transpose of the cofactor matrix."""
        a = self.rows

        def cof(i: int, j: int) -> QSqrt2:
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]]
            return minor if (i + j) % 2 == 0 else -minor

        return Mat3(tuple(cof(j, i) for j in range(3)) for i in range(3))

    def inverse(self) -> "Mat3":
        """Adjugate over determinant; exact, no pivoting."""
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix has zero determinant")
        dinv = d.inverse()
        adj = self.adjugate()
        return Mat3(tuple(e * dinv for e in row) for row in adj.rows)

    def is_rotation(self) -> bool:
        """det(M) = 1 and M^T M = I.  Equivalent to the inverse-equals-
        transpose formulation whenever det is nonzero."""
        return self.det() == ONE and self.transpose() @ self == identity()

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"Mat3({self.rows!r})"

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(3)) for j in range(3)]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(3)) + " ]"
            for i in range(3)
        )

    def to_json(self) -> list:
        """Row-major list of the 9 scalar renderings."""
        return [e.to_json() for row in self.rows for e in row]

    @classmethod
    def from_json(cls, data: list) -> "Mat3":
        entries = [QSqrt2.from_json(e) for e in data]
        return cls(entries[i : i + 3] for i in (0, 3, 6))


_IDENTITY = Mat3(
    (
        (ONE, ZERO, ZERO),
        (ZERO, ONE, ZERO),
        (ZERO, ZERO, ONE),
    )
)


def identity() -> Mat3:
    return _IDENTITY


def norm_sq(v: Vec3) -> QSqrt2:
    """Exact squared Euclidean norm x^2 + y^2 + z^2."""
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
