"""Truncated formal power series over the rationals.

A :class:`Series` holds the coefficients of ``z**0 .. z**N`` exactly, where
``N`` is its truncation.  Binary operations insist on equal truncation; use
:func:`retruncate` to shorten a series explicitly.

Products and compositions run on integer numerators over a common
denominator and only rebuild :class:`~fractions.Fraction` objects at the end,
which is several times faster than summing ``Fraction`` terms.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import (
    CompositionDomainError,
    InvalidStepError,
    IrrationalRootError,
    NotAUnitError,
    NotInvertibleError,
    PrecisionError,
    SupportError,
)

Coefficient = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesClass(enum.Enum):
    ZERO = "zero"
    UNIT = "unit"  # nonzero constant term
    DELTA = "delta"  # order exactly one
    OTHER = "other"


class Series:
    """Immutable truncated power series ``c[0] + c[1] z + ... + c[N] z^N``.

    Coefficients past ``trunc`` in *coeffs* are dropped; missing ones are zero.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), trunc: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if trunc is None:
            trunc = len(cs) - 1
        if trunc < 0:
            raise PrecisionError("a series needs truncation >= 0")
        del cs[trunc + 1:]
        cs.extend([_ZERO] * (trunc + 1 - len(cs)))
        self._c = tuple(cs)

    @classmethod
    def _wrap(cls, coeffs: Sequence[Fraction]) -> "Series":
        s = object.__new__(cls)
        s._c = tuple(coeffs)
        return s

    @classmethod
    def constant(cls, c, trunc: int) -> "Series":
        return cls([c], trunc)

    @classmethod
    def zero(cls, trunc: int) -> "Series":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> "Series":
        return cls([1], trunc)

    @classmethod
    def z(cls, trunc: int) -> "Series":
        """The series ``z`` (the identity for composition)."""
        return cls([0, 1], trunc)

    @classmethod
    def monomial(cls, c, n: int, trunc: int) -> "Series":
        if n > trunc:
            return cls.zero(trunc)
        return cls([0] * n + [c], trunc)

    @property
    def trunc(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def order(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` for the zero series."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def __getitem__(self, k: int) -> Fraction:
        return coefficient(self, k)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        _same_trunc(self, other)
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Series({to_expression(self)!r}, trunc={self.trunc})"

    def __str__(self):
        return f"{to_expression(self)} + O(z^{self.trunc + 1})"

    def __neg__(self):
        return Series._wrap([-c for c in self._c])

    def __add__(self, other):
        if isinstance(other, Series):
            return add(self, other)
        if isinstance(other, Rational):
            return Series._wrap((self._c[0] + other,) + self._c[1:])
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Series):
            return sub(self, other)
        if isinstance(other, Rational):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, Rational):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return mul(self, reciprocal(other))
        if isinstance(other, Rational):
            if not other:
                raise ZeroDivisionError("division of a series by zero")
            return scale(self, Fraction(1) / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return scale(reciprocal(self), other)
        return NotImplemented

    def __pow__(self, n: int):
        return power(self, n)

    def __call__(self, inner: "Series") -> "Series":
        return compose(self, inner)


def _same_trunc(a: Series, b: Series) -> None:
    if a.trunc != b.trunc:
        raise PrecisionError(f"truncation mismatch: {a.trunc} vs {b.trunc}")


def coefficient(s: Series, k: int) -> Fraction:
    """``[z^k] s``."""
    if not 0 <= k <= s.trunc:
        raise PrecisionError(f"coefficient {k} requested, series is known up to z^{s.trunc}")
    return s._c[k]


def retruncate(s: Series, trunc: int) -> Series:
    if trunc > s.trunc:
        raise PrecisionError(f"cannot extend a series truncated at {s.trunc} to {trunc}")
    if trunc < 0:
        raise PrecisionError("a series needs truncation >= 0")
    return Series._wrap(s._c[: trunc + 1])


def classify(s: Series) -> SeriesClass:
    if s.is_zero():
        return SeriesClass.ZERO
    if s._c[0]:
        return SeriesClass.UNIT
    if s.trunc >= 1 and s._c[1]:
        return SeriesClass.DELTA
    return SeriesClass.OTHER


def first_difference(a: Series, b: Series) -> int | None:
    """Lowest exponent where *a* and *b* differ, or ``None`` if they agree."""
    _same_trunc(a, b)
    for i, (x, y) in enumerate(zip(a._c, b._c)):
        if x != y:
            return i
    return None


# integer kernels ----------------------------------------------------------

def _scaled(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in cs:
        d = c.denominator
        if d != 1:
            den = den // math.gcd(den, d) * d
    return [c.numerator * (den // c.denominator) for c in cs], den


def _unscale(nums: Sequence[int], den: int) -> list[Fraction]:
    return [Fraction(n, den) if n else _ZERO for n in nums]


def _cauchy(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Coefficients ``0..n-1`` of the product of two integer polynomials."""
    out = [0] * n
    lb = min(len(b), n)
    for i in range(min(len(a), n)):
        x = a[i]
        if not x:
            continue
        for j in range(min(lb, n - i)):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


# ring operations ----------------------------------------------------------

def add(a: Series, b: Series) -> Series:
    _same_trunc(a, b)
    return Series._wrap([x + y for x, y in zip(a._c, b._c)])


def sub(a: Series, b: Series) -> Series:
    _same_trunc(a, b)
    return Series._wrap([x - y for x, y in zip(a._c, b._c)])


def scale(s: Series, c) -> Series:
    c = Fraction(c)
    return Series._wrap([c * x for x in s._c])


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common truncation."""
    _same_trunc(a, b)
    an, ad = _scaled(a._c)
    bn, bd = _scaled(b._c)
    return Series._wrap(_unscale(_cauchy(an, bn, len(an)), ad * bd))


def power(s: Series, n: int) -> Series:
    if n < 0:
        raise ValueError("negative powers need reciprocal()")
    result = Series.one(s.trunc)
    base = s
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def reciprocal(s: Series) -> Series:
    """Multiplicative inverse of a series with nonzero constant term."""
    c = s._c
    if not c[0]:
        raise NotAUnitError("reciprocal needs a nonzero constant term")
    inv0 = 1 / c[0]
    r = [inv0]
    for n in range(1, len(c)):
        acc = _ZERO
        for j in range(1, n + 1):
            if c[j]:
                acc += c[j] * r[n - j]
        r.append(-acc * inv0)
    return Series._wrap(r)


def compose(a: Series, f: Series) -> Series:
    """``a(f(z))`` by Horner's rule; *f* must have zero constant term.

    The Horner accumulator that is later multiplied by ``f**i`` is only
    carried to ``z^(N-i)``, since ``f**i`` has order at least ``i``.
    """
    _same_trunc(a, f)
    if f._c[0]:
        raise CompositionDomainError("inner series of a composition must have zero constant term")
    n = a.trunc
    fn, fd = _scaled(f._c)
    top = a._c[n]
    acc, den = [top.numerator], top.denominator
    for i in range(n - 1, -1, -1):
        length = n - i + 1
        acc = _cauchy(acc, fn, length)
        den *= fd
        ai = a._c[i]
        q = ai.denominator
        if q != 1:
            acc = [x * q for x in acc]
        acc[0] += ai.numerator * den
        den *= q
        g = math.gcd(den, *acc)
        if g > 1:
            acc = [x // g for x in acc]
            den //= g
    return Series._wrap(_unscale(acc, den))


def comp_inverse(f: Series) -> Series:
    """Compositional inverse of a series of order exactly one.

    Solves ``sum_j b_j f^j = z`` one coefficient at a time; the equation for
    ``b_n`` has pivot ``f_1^n``.
    """
    if classify(f) is not SeriesClass.DELTA:
        raise NotInvertibleError("compositional inverse needs f0 = 0 and f1 != 0")
    n = f.trunc
    f1 = f._c[1]
    # powers[j] = coefficients of f^j
    powers = [None, f._c]
    cur = f
    for _ in range(2, n + 1):
        cur = mul(cur, f)
        powers.append(cur._c)
    b = [_ZERO, 1 / f1]
    pivot = f1
    for m in range(2, n + 1):
        pivot *= f1
        acc = _ZERO
        for j in range(1, m):
            if b[j]:
                acc += b[j] * powers[j][m]
        b.append(-acc / pivot)
    return Series._wrap(b[: n + 1])


# support manipulation ----------------------------------------------------

def shift(s: Series, n: int) -> Series:
    """Multiply by ``z**n``; a negative *n* divides and needs that many leading zeros.

    The truncation moves with the shift.
    """
    if n >= 0:
        return Series._wrap((_ZERO,) * n + s._c)
    n = -n
    if n > s.trunc or any(s._c[:n]):
        raise NotAUnitError(f"series is not divisible by z^{n}")
    return Series._wrap(s._c[n:])


def support_is(s: Series, k: int, r: int) -> bool:
    """True iff every nonzero coefficient sits at an exponent congruent to *r* mod *k*."""
    if k < 1:
        raise InvalidStepError("modulus must be >= 1")
    r %= k
    return all(not c for i, c in enumerate(s._c) if i % k != r)


def aerate(s: Series, k: int, trunc: int | None = None) -> Series:
    """Substitute ``z -> z**k``.

    The result keeps ``s.trunc`` unless *trunc* asks for something else; it
    may go up to ``k*s.trunc + k - 1``, the last exponent still determined.
    """
    if k < 1:
        raise InvalidStepError("aeration step must be >= 1")
    if trunc is None:
        trunc = s.trunc
    if trunc > k * s.trunc + k - 1:
        raise PrecisionError(f"aeration by {k} of a series truncated at {s.trunc} "
                             f"is known only up to z^{k * s.trunc + k - 1}")
    out = [_ZERO] * (trunc + 1)
    for i, c in enumerate(s._c):
        if k * i > trunc:
            break
        out[k * i] = c
    return Series._wrap(out)


def section(s: Series, k: int, r: int = 0) -> Series:
    """Coefficients at exponents ``k*i + r``, whatever the rest of *s* holds."""
    if k < 1:
        raise InvalidStepError("aeration step must be >= 1")
    if not 0 <= r < k:
        raise InvalidStepError(f"residue must satisfy 0 <= r < {k}")
    if r > s.trunc:
        raise PrecisionError(f"no coefficients at residue {r} below z^{s.trunc}")
    return Series._wrap(s._c[r::k])


def deaerate(s: Series, k: int, r: int = 0) -> Series:
    """Inverse of aeration on the residue class *r* mod *k*.

    ``[z^i] result = [z^(k*i + r)] s``; the result is truncated at
    ``(s.trunc - r) // k``.
    """
    out = section(s, k, r)
    if not support_is(s, k, r):
        raise SupportError(f"series has terms outside exponents = {r} (mod {k})")
    return out


# roots --------------------------------------------------------------------

def _int_root(n: int, k: int) -> int | None:
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_root(-n, k)
        return None if r is None else -r
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def rational_root(c: Fraction, k: int) -> Fraction:
    c = Fraction(c)
    p = _int_root(c.numerator, k)
    q = _int_root(c.denominator, k)
    if p is None or q is None:
        raise IrrationalRootError(f"{c} has no rational {k}-th root")
    return Fraction(p, q)


def kth_root(s: Series, k: int) -> Series:
    """A series ``r`` with ``r**k == s``, when the leading coefficient allows it.

    For ``s`` of order ``k*d`` the result has order ``d`` and truncation
    ``s.trunc - (k-1)*d``; higher coefficients of the root depend on terms
    of ``s`` beyond its truncation.  The root with the rational leading
    coefficient returned by :func:`rational_root` is chosen.
    """
    if k < 1:
        raise InvalidStepError("root degree must be >= 1")
    order = s.order
    if order is None:
        raise IrrationalRootError("the zero series has no distinguished root")
    if order % k:
        raise IrrationalRootError(f"order {order} is not divisible by {k}")
    d = order // k
    lead = s._c[order]
    c0 = rational_root(lead, k)
    u = [c / lead for c in s._c[order:]]
    # Miller's recurrence for u**alpha with u[0] == 1
    alpha = Fraction(1, k)
    r = [_ONE]
    for n in range(1, len(u)):
        acc = _ZERO
        for j in range(1, n + 1):
            if u[j]:
                acc += ((alpha + 1) * j - n) * u[j] * r[n - j]
        r.append(acc / n)
    return Series._wrap([_ZERO] * d + [c0 * x for x in r])


# printing -----------------------------------------------------------------

def _format_term(c: Fraction, i: int) -> str:
    mag = abs(c)
    if i == 0:
        return str(mag)
    zpart = "z" if i == 1 else f"z^{i}"
    if mag == 1:
        return zpart
    return f"{mag}*{zpart}"


def to_expression(s: Series) -> str:
    """Polynomial part of *s* in the syntax accepted by :mod:`kriordan.expr`."""
    parts = []
    for i, c in enumerate(s._c):
        if not c:
            continue
        term = _format_term(c, i)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts) if parts else "0"
