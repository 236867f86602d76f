"""Double Riordan and k-Riordan arrays.

A k-Riordan array ``(g, m_1, ..., m_k)`` has column 0 equal to ``g`` and
obtains column ``j`` from column ``j-1`` by multiplying with the multipliers
in cyclic order.  ``g`` lives on exponents ``0 mod k`` and every ``m_i`` on
exponents ``1 mod k`` with a nonzero linear term; ``k = 2`` gives the Double
Riordan group and ``k = 1`` the ordinary Riordan group.

Such an array is determined by its *hat data*

    g = ghat(z**k),        m_i = z * mhat_i(z**k),

and with ``Phat(w) = w * mhat_1(w) ... mhat_k(w)`` (so that the product of
the multipliers is ``Phat(z**k)``) the group law becomes

    ghat' = ghat * Ghat(Phat),        mhat_i' = mhat_i * Mhat_i(Phat).

This is the textbook product ``(g G(h), (m_i/h) M_i(h))`` with
``h**k = m_1 ... m_k`` after every occurrence of ``h`` has been folded into
``h**k``, so no k-th root is ever taken and the group stays closed over the
rationals.  The literal root-based formulas are kept below (``*_rooted``) as
an independent check for arrays whose roots happen to be rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, InvalidArrayError, ParityError, PrecisionError
from .matrix import TriangularMatrix
from .riordan import RiordanArray
from .series import (
    Series,
    aerate,
    comp_inverse,
    compose,
    deaerate,
    kth_root,
    mul,
    reciprocal,
    retruncate,
    section,
    shift,
    support_is,
)


@dataclass(frozen=True)
class KRiordanArray:
    g: Series
    multipliers: tuple[Series, ...]

    def __post_init__(self):
        ms = tuple(self.multipliers)
        object.__setattr__(self, "multipliers", ms)
        k = len(ms)
        if k < 1:
            raise ArityError("a k-Riordan array needs at least one multiplier")
        n = self.g.trunc
        if n < 1:
            raise PrecisionError("k-Riordan arrays need truncation >= 1")
        if not support_is(self.g, k, 0):
            raise InvalidArrayError("g", f"must only have terms at exponents = 0 (mod {k})")
        if not self.g.coeffs[0]:
            raise InvalidArrayError("g", "needs a nonzero constant term")
        for i, m in enumerate(ms, 1):
            if m.trunc != n:
                raise PrecisionError(f"m{i} truncated at {m.trunc}, g at {n}")
            if not support_is(m, k, 1 % k) or m.coeffs[0]:
                raise InvalidArrayError(f"m{i}", f"must only have terms at exponents = 1 (mod {k})")
            if not m.coeffs[1]:
                raise InvalidArrayError(f"m{i}", "needs a nonzero linear term")

    @property
    def k(self) -> int:
        return len(self.multipliers)

    @property
    def trunc(self) -> int:
        return self.g.trunc

    def __mul__(self, other):
        if isinstance(other, KRiordanArray):
            return multiply_k(self, other)
        return NotImplemented

    def inverse(self) -> "KRiordanArray":
        return inverse_k(self)

    def to_matrix(self, size: int | None = None) -> TriangularMatrix:
        return to_matrix_k(self, size)

    def hats(self) -> tuple[Series, tuple[Series, ...]]:
        """``(ghat, (mhat_1, ..., mhat_k))``, truncated at ``N//k`` and ``(N-1)//k``."""
        k = self.k
        return (deaerate(self.g, k, 0),
                tuple(deaerate(shift(m, -1), k, 0) for m in self.multipliers))

    @classmethod
    def from_hats(cls, ghat: Series, mhats: Sequence[Series], trunc: int) -> "KRiordanArray":
        k = len(mhats)
        g = aerate(ghat, k, trunc)
        ms = tuple(shift(aerate(mh, k, trunc - 1), 1) for mh in mhats)
        return cls(g, ms)

    def profile(self) -> "AeratedProfile":
        return profile(self)


@dataclass(frozen=True)
class AeratedProfile:
    """The multiplier product ``P = m_1 ... m_k`` and its de-aeration ``Phat``."""

    P: Series
    Phat: Series


def make_kriordan(k: int, g: Series, multipliers: Sequence[Series]) -> KRiordanArray:
    if len(multipliers) != k:
        raise ArityError(f"expected {k} multipliers, got {len(multipliers)}")
    return KRiordanArray(g, tuple(multipliers))


def identity_k(k: int, trunc: int) -> KRiordanArray:
    return KRiordanArray(Series.one(trunc), (Series.z(trunc),) * k)


def from_riordan(r: RiordanArray) -> KRiordanArray:
    return KRiordanArray(r.g, (r.f,))


def to_riordan(d: KRiordanArray) -> RiordanArray:
    if d.k != 1:
        raise ArityError(f"only 1-Riordan arrays are ordinary Riordan arrays, got k={d.k}")
    return RiordanArray(d.g, d.multipliers[0])


def _phat(mhats: Sequence[Series], trunc: int) -> Series:
    prod = mhats[0]
    for mh in mhats[1:]:
        prod = mul(prod, mh)
    return retruncate(shift(prod, 1), trunc)


def profile(d: KRiordanArray) -> AeratedProfile:
    _, mhats = d.hats()
    phat = _phat(mhats, d.trunc // d.k)
    return AeratedProfile(aerate(phat, d.k, d.trunc), phat)


def _inverse_series(f: Series) -> Series:
    # at truncation 0 every order-one series is 0 + O(z)
    return f if f.trunc == 0 else comp_inverse(f)


def to_matrix_k(d: KRiordanArray, size: int | None = None) -> TriangularMatrix:
    if size is None:
        size = d.trunc + 1
    if size > d.trunc + 1:
        raise PrecisionError(f"array known up to z^{d.trunc}, asked for {size} rows")
    cols = [d.g]
    for j in range(1, size):
        cols.append(mul(cols[-1], d.multipliers[(j - 1) % d.k]))
    return TriangularMatrix.from_columns(cols, size)


def fundamental_apply(d: KRiordanArray, a: Series) -> Series:
    """Action of *d* on the column vector *a*, for any *a*.

    The part of *a* on exponents ``r mod k`` is sent to
    ``g * m_1 ... m_r * A_r(P)`` where ``A_r`` is its de-aeration.
    """
    n, k = d.trunc, d.k
    if a.trunc != n:
        raise PrecisionError(f"vector truncated at {a.trunc}, array at {n}")
    ghat, mhats = d.hats()
    phat = _phat(mhats, n // k)
    total = Series.zero(n)
    for r in range(min(k, n + 1)):
        t = (n - r) // k
        inner = compose(section(a, k, r), retruncate(phat, t))
        for mh in mhats[:r]:
            inner = mul(retruncate(mh, t), inner)
        total = total + shift(aerate(inner, k, n - r), r)
    return mul(d.g, total)


def ftdra_apply_even(d: KRiordanArray, a: Series) -> Series:
    """``g(z) A(sqrt(f1 f2))`` for an even vector *a*, computed without roots."""
    if d.k != 2:
        raise ArityError(f"Double Riordan action needs k=2, got k={d.k}")
    if not support_is(a, 2, 0):
        raise ParityError("vector is not even")
    return fundamental_apply(d, a)


def ftdra_apply_odd(d: KRiordanArray, a: Series) -> Series:
    """``g(z) sqrt(f1/f2) A(sqrt(f1 f2))`` for an odd vector *a*, computed without roots."""
    if d.k != 2:
        raise ArityError(f"Double Riordan action needs k=2, got k={d.k}")
    if not support_is(a, 2, 1):
        raise ParityError("vector is not odd")
    return fundamental_apply(d, a)


def multiply_k(d1: KRiordanArray, d2: KRiordanArray) -> KRiordanArray:
    if d1.k != d2.k:
        raise ArityError(f"cannot multiply a {d1.k}-Riordan and a {d2.k}-Riordan array")
    if d1.trunc != d2.trunc:
        raise PrecisionError(f"truncation mismatch: {d1.trunc} vs {d2.trunc}")
    n, k = d1.trunc, d1.k
    g1, m1 = d1.hats()
    g2, m2 = d2.hats()
    phat = _phat(m1, n // k)
    phat_m = retruncate(phat, (n - 1) // k)
    ghat = mul(g1, compose(g2, phat))
    mhats = [mul(a, compose(b, phat_m)) for a, b in zip(m1, m2)]
    return KRiordanArray.from_hats(ghat, mhats, n)


def inverse_k(d: KRiordanArray) -> KRiordanArray:
    n, k = d.trunc, d.k
    ghat, mhats = d.hats()
    pinv = _inverse_series(_phat(mhats, n // k))
    pinv_m = retruncate(pinv, (n - 1) // k)
    new_g = compose(reciprocal(ghat), pinv)
    new_m = [compose(reciprocal(mh), pinv_m) for mh in mhats]
    return KRiordanArray.from_hats(new_g, new_m, n)


def is_aerated_checkerboard(d: KRiordanArray) -> bool:
    """Double Riordan array with equal multipliers, i.e. a checkerboard Riordan array."""
    return d.k == 2 and d.multipliers[0] == d.multipliers[1]


# root-based formulas, used as an independent check -------------------------
#
# These follow the textbook expressions literally and therefore lose
# precision: h = (m_1...m_k)**(1/k) is only known up to z^(N-k+1), so
# every result below is truncated there.

def root_h(d: KRiordanArray) -> Series:
    """``h`` with ``h**k = m_1 ... m_k``; needs a rational k-th root."""
    prod = d.multipliers[0]
    for m in d.multipliers[1:]:
        prod = mul(prod, m)
    return kth_root(prod, d.k)


def _div_order_one(num: Series, den: Series) -> Series:
    """``num / den`` for two series of order one (result at truncation - 1)."""
    return mul(shift(num, -1), reciprocal(shift(den, -1)))


def multiply_k_rooted(d1: KRiordanArray, d2: KRiordanArray) -> KRiordanArray:
    """``(g G(h), (m_1/h) M_1(h), ..., (m_k/h) M_k(h))``."""
    if d1.k != d2.k:
        raise ArityError(f"cannot multiply a {d1.k}-Riordan and a {d2.k}-Riordan array")
    h = root_h(d1)
    t = h.trunc
    g = mul(retruncate(d1.g, t), compose(retruncate(d2.g, t), h))
    ms = []
    for a, b in zip(d1.multipliers, d2.multipliers):
        m_over_h = _div_order_one(retruncate(a, t), h)  # at t-1
        mh = compose(retruncate(b, t), h)
        ms.append(shift(mul(m_over_h, shift(mh, -1)), 1))
    return KRiordanArray(g, tuple(ms))


def inverse_k_rooted(d: KRiordanArray) -> KRiordanArray:
    """``(1/g(hbar), z hbar/m_1(hbar), ..., z hbar/m_k(hbar))``."""
    h = root_h(d)
    t = h.trunc
    hbar = comp_inverse(h)
    g = reciprocal(compose(retruncate(d.g, t), hbar))
    ms = tuple(shift(_div_order_one(hbar, compose(retruncate(m, t), hbar)), 1)
               for m in d.multipliers)
    return KRiordanArray(g, ms)


def ftdra_apply_rooted(d: KRiordanArray, a: Series) -> Series:
    """Double Riordan action via ``h = sqrt(f1 f2)`` for a vector of one parity."""
    if d.k != 2:
        raise ArityError(f"Double Riordan action needs k=2, got k={d.k}")
    h = root_h(d)
    t = h.trunc
    ah = compose(retruncate(a, t), h)
    if support_is(a, 2, 0):
        return mul(retruncate(d.g, t), ah)
    if support_is(a, 2, 1):
        f1, f2 = d.multipliers
        ratio = kth_root(_div_order_one(f1, f2), 2)  # sqrt(f1/f2), at N-1
        odd = shift(mul(retruncate(ratio, t - 1), shift(ah, -1)), 1)
        return mul(retruncate(d.g, t), odd)
    raise ParityError("vector must be even or odd")
