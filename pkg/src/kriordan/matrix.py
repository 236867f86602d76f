"""Finite lower-triangular matrices with rational entries."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PrecisionError
from .series import Series


class TriangularMatrix:
    """Leading ``size x size`` block of an infinite lower-triangular matrix.

    Only the lower triangle is stored: ``rows[n]`` holds entries ``(n, 0..n)``.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence]):
        built = []
        for n, row in enumerate(rows):
            row = [Fraction(x) for x in row]
            if any(row[n + 1:]):
                raise ValueError(f"row {n} has entries above the diagonal")
            row = row[: n + 1]
            row.extend([Fraction(0)] * (n + 1 - len(row)))
            built.append(tuple(row))
        self._rows = tuple(built)

    @classmethod
    def from_columns(cls, columns: Sequence[Series], size: int) -> "TriangularMatrix":
        """Matrix whose column ``j`` holds the coefficients of ``columns[j]``."""
        for col in columns[:size]:
            if col.trunc < size - 1:
                raise PrecisionError(f"column known up to z^{col.trunc}, need z^{size - 1}")
        rows = [[columns[j].coeffs[n] for j in range(n + 1)] for n in range(size)]
        return cls(rows)

    @classmethod
    def identity(cls, size: int) -> "TriangularMatrix":
        return cls([[0] * n + [1] for n in range(size)])

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        n, k = idx
        if not (0 <= n < self.size and 0 <= k < self.size):
            raise IndexError(idx)
        return self._rows[n][k] if k <= n else Fraction(0)

    def column(self, k: int) -> list[Fraction]:
        return [self[n, k] for n in range(self.size)]

    def diagonal(self) -> list[Fraction]:
        return [row[-1] for row in self._rows]

    def dense(self) -> list[list[Fraction]]:
        return [[self[n, k] for k in range(self.size)] for n in range(self.size)]

    def __eq__(self, other):
        if not isinstance(other, TriangularMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"TriangularMatrix(size={self.size})"

    def __matmul__(self, other):
        if isinstance(other, TriangularMatrix):
            return self.matmul(other)
        return NotImplemented

    def matmul(self, other: "TriangularMatrix") -> "TriangularMatrix":
        if other.size != self.size:
            raise PrecisionError(f"size mismatch: {self.size} vs {other.size}")
        a, b = self._rows, other._rows
        out = []
        for n in range(self.size):
            row = []
            for k in range(n + 1):
                acc = Fraction(0)
                for j in range(k, n + 1):
                    x = a[n][j]
                    if x:
                        y = b[j][k]
                        if y:
                            acc += x * y
                row.append(acc)
            out.append(row)
        return TriangularMatrix(out)

    def matvec(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.size:
            raise PrecisionError(f"vector of length {len(vec)} for a matrix of size {self.size}")
        return [sum((x * vec[j] for j, x in enumerate(row) if x), Fraction(0)) for row in self._rows]

    def apply(self, s: Series) -> Series:
        """Matrix-vector product on the coefficient vector of *s*."""
        if s.trunc != self.size - 1:
            raise PrecisionError(f"series truncated at {s.trunc} for a matrix of size {self.size}")
        return Series(self.matvec(s.coeffs))
