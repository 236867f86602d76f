"""The ordinary Riordan group.

A Riordan array ``(g, f)`` is the lower-triangular matrix whose column ``k``
has generating function ``g * f**k``.  Arrays multiply by
``(g, f) * (G, F) = (g * G(f), F(f))`` and act on a column vector ``A`` by
``A -> g * A(f)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArrayError, PrecisionError
from .matrix import TriangularMatrix
from .series import (
    Series,
    SeriesClass,
    classify,
    comp_inverse,
    compose,
    mul,
    reciprocal,
    support_is,
)


@dataclass(frozen=True, eq=True)
class RiordanArray:
    g: Series
    f: Series

    def __post_init__(self):
        if classify(self.g) is not SeriesClass.UNIT:
            raise InvalidArrayError("g", "needs a nonzero constant term")
        if classify(self.f) is not SeriesClass.DELTA:
            raise InvalidArrayError("f", "needs zero constant term and nonzero linear term")
        if self.g.trunc != self.f.trunc:
            raise PrecisionError(f"g truncated at {self.g.trunc}, f at {self.f.trunc}")

    @property
    def trunc(self) -> int:
        return self.g.trunc

    def __mul__(self, other):
        if isinstance(other, RiordanArray):
            return multiply(self, other)
        return NotImplemented

    def inverse(self) -> "RiordanArray":
        return inverse(self)

    def to_matrix(self, size: int | None = None) -> TriangularMatrix:
        return to_matrix(self, size)

    def apply(self, a: Series) -> Series:
        return ftra_apply(self, a)


def make_riordan(g: Series, f: Series) -> RiordanArray:
    return RiordanArray(g, f)


def identity(trunc: int) -> RiordanArray:
    return RiordanArray(Series.one(trunc), Series.z(trunc))


def pascal(trunc: int) -> RiordanArray:
    """``(1/(1-z), z/(1-z))``, whose entries are the binomial coefficients."""
    geo = reciprocal(Series([1, -1], trunc))
    return RiordanArray(geo, mul(Series.z(trunc), geo))


def to_matrix(r: RiordanArray, size: int | None = None) -> TriangularMatrix:
    """Leading ``size x size`` block; ``size`` defaults to ``trunc + 1``."""
    if size is None:
        size = r.trunc + 1
    if size > r.trunc + 1:
        raise PrecisionError(f"array known up to z^{r.trunc}, asked for {size} rows")
    cols = [r.g]
    for _ in range(1, size):
        cols.append(mul(cols[-1], r.f))
    return TriangularMatrix.from_columns(cols, size)


def ftra_apply(r: RiordanArray, a: Series) -> Series:
    """Image of the column vector *a*: ``g * a(f)``."""
    return mul(r.g, compose(a, r.f))


def multiply(r1: RiordanArray, r2: RiordanArray) -> RiordanArray:
    return RiordanArray(mul(r1.g, compose(r2.g, r1.f)), compose(r2.f, r1.f))


def inverse(r: RiordanArray) -> RiordanArray:
    fbar = comp_inverse(r.f)
    return RiordanArray(reciprocal(compose(r.g, fbar)), fbar)


def is_checkerboard(r: RiordanArray) -> bool:
    return support_is(r.g, 2, 0) and support_is(r.f, 2, 1)
