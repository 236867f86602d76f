"""Random arrays with small rational coefficients.

Numerators are drawn from ``[-5, 5]`` and denominators from ``{1, 2, 3}``,
which keeps coefficient growth under composition manageable at the
truncations used for verification.  Every generator takes a
:class:`random.Random` so results are reproducible from a seed.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .multi_riordan import KRiordanArray
from .riordan import RiordanArray
from .series import Series, aerate, shift

NUMERATORS = range(-5, 6)
DENOMINATORS = (1, 2, 3)


def random_coeff(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.choice(NUMERATORS), rng.choice(DENOMINATORS))
        if c or not nonzero:
            return c


def random_series(rng: random.Random, trunc: int, unit: bool = False) -> Series:
    """Dense random series; ``unit=True`` forces a nonzero constant term."""
    cs = [random_coeff(rng, nonzero=unit)]
    cs += [random_coeff(rng) for _ in range(trunc)]
    return Series(cs, trunc)


def random_unit(rng: random.Random, trunc: int, monic: bool = False) -> Series:
    s = random_series(rng, trunc, unit=True)
    if monic:
        s = Series((1,) + s.coeffs[1:])
    return s


def random_delta(rng: random.Random, trunc: int, monic: bool = False) -> Series:
    """Random series of order exactly one."""
    return shift(random_unit(rng, trunc - 1, monic=monic), 1)


def random_riordan(rng: random.Random, trunc: int) -> RiordanArray:
    return RiordanArray(random_unit(rng, trunc), random_delta(rng, trunc))


def random_checkerboard(rng: random.Random, trunc: int) -> RiordanArray:
    g = aerate(random_unit(rng, trunc // 2), 2, trunc)
    f = shift(aerate(random_unit(rng, (trunc - 1) // 2), 2, trunc - 1), 1)
    return RiordanArray(g, f)


def random_kriordan(rng: random.Random, k: int, trunc: int, monic: bool = False,
                    fixed: tuple[int, ...] = ()) -> KRiordanArray:
    """Random k-Riordan array.

    ``monic`` makes every multiplier's linear coefficient 1.  Multiplier
    positions listed in ``fixed`` (1-based) are set to ``z``.
    """
    tm = (trunc - 1) // k
    ghat = random_unit(rng, trunc // k)
    mhats = [Series.one(tm) if i in fixed else random_unit(rng, tm, monic=monic)
             for i in range(1, k + 1)]
    return KRiordanArray.from_hats(ghat, mhats, trunc)
