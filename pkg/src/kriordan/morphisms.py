"""Embeddings between Riordan groups of different arity.

All maps act on hat data (see :mod:`kriordan.multi_riordan`): an array of
arity ``k`` is re-aerated at modulus ``k+1`` (or ``k``) and ``z`` is inserted
as an extra multiplier.  Nothing is substituted symbolically, so every map
has a mechanical left inverse, used for the injectivity checks.

==================  ==============================================  ==========
map                 action                                          kind
==================  ==============================================  ==========
psi_checkerboard    (g, f) -> (g, f, f), checkerboard (g, f) only   R_C -> DR
phi                 (g, f) -> (g(z^2), z, f(z^2)/z)                 R -> DR
psi_type2           (g, f) -> (g(z^2), f(z^2)/z, z)                 R -> DR
phi_k               (g, f) -> (g(z^k), z, ..., f(z^k)/z^(k-1), ..)  R -> kR
chi_i               inserts z as multiplier i, rebasing k -> k+1    kR -> (k+1)R
==================  ==============================================  ==========
"""
from __future__ import annotations

import dataclasses
import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import ArityError, MapDomainError, PositionError
from .multi_riordan import KRiordanArray, identity_k, inverse_k, multiply_k
from .riordan import RiordanArray, identity, inverse, is_checkerboard, multiply
from .sampling import random_checkerboard, random_kriordan, random_riordan
from .series import Series, first_difference, retruncate, shift

Array = Union[RiordanArray, KRiordanArray]


# the maps ------------------------------------------------------------------

def _lossless_trunc(k: int, ghat: Series, mhat_trunc: int) -> int:
    """Largest truncation at which hat data of arity *k* determines the array."""
    return min(k * ghat.trunc + k - 1, k * mhat_trunc + k)


def psi_checkerboard(r: RiordanArray) -> KRiordanArray:
    if not is_checkerboard(r):
        raise MapDomainError("psi is only defined on checkerboard arrays (even g, odd f)")
    return KRiordanArray(r.g, (r.f, r.f))


def phi_k(r: RiordanArray, k: int, position: int | None = None,
          trunc: int | None = None) -> KRiordanArray:
    """``(g(z^k), z, ..., z, f(z^k)/z^(k-1))`` with the non-trivial multiplier at *position*.

    *position* defaults to ``k``.  *trunc* defaults to the input truncation
    and may go up to ``k * N``.
    """
    if k < 1:
        raise ArityError("k must be >= 1")
    if position is None:
        position = k
    if not 1 <= position <= k:
        raise PositionError(f"position must be in 1..{k}, got {position}")
    fhat = shift(r.f, -1)
    mhats = [Series.one(fhat.trunc)] * k
    mhats[position - 1] = fhat
    if trunc is None:
        trunc = r.trunc
    return KRiordanArray.from_hats(r.g, mhats, trunc)


def phi(r: RiordanArray, trunc: int | None = None) -> KRiordanArray:
    """``(g(z^2), z, f(z^2)/z)``, onto the type-1 almost Appell subgroup."""
    return phi_k(r, 2, 2, trunc)


def psi_type2(r: RiordanArray, trunc: int | None = None) -> KRiordanArray:
    """``(g(z^2), f(z^2)/z, z)``, onto the type-2 almost Appell subgroup."""
    return phi_k(r, 2, 1, trunc)


def chi_i(d: KRiordanArray, i: int, trunc: int | None = None) -> KRiordanArray:
    """Rebase a k-Riordan array to arity ``k+1`` with ``z`` as multiplier *i*."""
    k = d.k
    if not 1 <= i <= k + 1:
        raise PositionError(f"position must be in 1..{k + 1}, got {i}")
    ghat, mhats = d.hats()
    mhats = list(mhats)
    mhats.insert(i - 1, Series.one(mhats[0].trunc))
    if trunc is None:
        trunc = d.trunc
    return KRiordanArray.from_hats(ghat, mhats, trunc)


def chi(d: KRiordanArray, trunc: int | None = None) -> KRiordanArray:
    """Double Riordan -> Triple Riordan, ``z`` in the first multiplier slot."""
    if d.k != 2:
        raise ArityError(f"chi is defined on Double Riordan arrays, got k={d.k}")
    return chi_i(d, 1, trunc)


def is_type_almost_appell(d: KRiordanArray, i: int) -> bool:
    if not 1 <= i <= d.k:
        raise PositionError(f"position must be in 1..{d.k}, got {i}")
    return d.multipliers[i - 1] == Series.z(d.trunc)


# left inverses -------------------------------------------------------------

def _drop_fixed(d: KRiordanArray, position: int) -> tuple[Series, list[Series]]:
    if not is_type_almost_appell(d, position):
        raise MapDomainError(f"multiplier {position} is not z")
    ghat, mhats = d.hats()
    mhats = list(mhats)
    del mhats[position - 1]
    return ghat, mhats


def phi_k_preimage(d: KRiordanArray, position: int | None = None) -> RiordanArray:
    k = d.k
    if position is None:
        position = k
    for j in range(1, k + 1):
        if j != position and not is_type_almost_appell(d, j):
            raise MapDomainError(f"multiplier {j} is not z")
    ghat, mhats = d.hats()
    f = shift(mhats[position - 1], 1)
    t = min(ghat.trunc, f.trunc)
    return RiordanArray(retruncate(ghat, t), retruncate(f, t))


def chi_i_preimage(d: KRiordanArray, i: int) -> KRiordanArray:
    if d.k < 2:
        raise ArityError("chi_i images have at least two multipliers")
    ghat, mhats = _drop_fixed(d, i)
    k = d.k - 1
    return KRiordanArray.from_hats(ghat, mhats, _lossless_trunc(k, ghat, mhats[0].trunc))


def psi_checkerboard_preimage(d: KRiordanArray) -> RiordanArray:
    if d.k != 2 or d.multipliers[0] != d.multipliers[1]:
        raise MapDomainError("not an array with equal multipliers")
    return RiordanArray(d.g, d.multipliers[0])


# morphism descriptors ------------------------------------------------------

class MapKind(enum.Enum):
    PSI_CHECKERBOARD = "psi"
    PHI = "phi"
    PSI_TYPE2 = "psi2"
    PHI_K = "phik"
    CHI = "chi"
    CHI_I = "chii"


@dataclass(frozen=True)
class MorphismId:
    """Names one map; ``k`` and ``position`` are used by ``PHI_K`` and ``CHI_I``.

    For ``PHI_K`` the position is the slot of ``f(z^k)/z^(k-1)``; for
    ``CHI_I`` it is the slot where ``z`` is inserted (``1 <= i <= k+1``).
    """

    kind: MapKind
    k: int | None = None
    position: int | None = None

    def __post_init__(self):
        if self.kind is MapKind.PHI_K:
            if self.k is None or self.k < 1:
                raise ArityError("phi_k needs k >= 1")
            if self.position is None:
                object.__setattr__(self, "position", self.k)
            if not 1 <= self.position <= self.k:
                raise PositionError(f"position must be in 1..{self.k}")
        elif self.kind is MapKind.CHI_I:
            if self.k is None or self.k < 1:
                raise ArityError("chi_i needs k >= 1")
            if self.position is None or not 1 <= self.position <= self.k + 1:
                raise PositionError(f"position must be in 1..{self.k + 1}")
        elif self.k is not None or self.position is not None:
            raise ValueError(f"{self.kind.value} takes no parameters")

    @property
    def name(self) -> str:
        if self.kind is MapKind.PHI_K:
            return f"phik({self.k},{self.position})"
        if self.kind is MapKind.CHI_I:
            return f"chii({self.k},{self.position})"
        return self.kind.value

    @classmethod
    def parse(cls, text: str) -> "MorphismId":
        """Parse ``psi``, ``phi``, ``psi2``, ``chi``, ``phik:K[:POS]`` or ``chii:K:I``."""
        name, *params = text.strip().lower().split(":")
        try:
            kind = MapKind(name)
            nums = [int(p) for p in params]
        except ValueError:
            raise ValueError(f"unknown map {text!r}") from None
        if kind in (MapKind.PHI_K, MapKind.CHI_I):
            if not 1 <= len(nums) <= 2:
                raise ValueError(f"{name} needs parameters, e.g. {name}:3:2")
            return cls(kind, *nums)
        if nums:
            raise ValueError(f"{name} takes no parameters")
        return cls(kind)


@dataclass(frozen=True)
class Morphism:
    """Everything the verifier needs to know about one map."""

    ident: MorphismId
    forward: Callable[..., KRiordanArray]  # (array, trunc=None) -> image
    preimage: Callable[[KRiordanArray], Array]
    in_image: Callable[[KRiordanArray], bool]
    sample: Callable[[random.Random, int], Array]
    lossless_trunc: Callable[[Array], int]
    domain_identity: Callable[[int], Array]


def _riordan_ops():
    return dict(sample=random_riordan, domain_identity=identity)


def morphism(ident: MorphismId) -> Morphism:
    kind = ident.kind
    if kind is MapKind.PSI_CHECKERBOARD:
        return Morphism(
            ident,
            forward=lambda r, trunc=None: psi_checkerboard(r),
            preimage=psi_checkerboard_preimage,
            in_image=lambda d: d.k == 2 and d.multipliers[0] == d.multipliers[1],
            sample=random_checkerboard,
            lossless_trunc=lambda r: r.trunc,
            domain_identity=identity,
        )
    if kind in (MapKind.PHI, MapKind.PSI_TYPE2, MapKind.PHI_K):
        k, pos = {MapKind.PHI: (2, 2), MapKind.PSI_TYPE2: (2, 1)}.get(kind, (ident.k, ident.position))
        return Morphism(
            ident,
            forward=lambda r, trunc=None: phi_k(r, k, pos, trunc),
            preimage=lambda d: phi_k_preimage(d, pos),
            in_image=lambda d: d.k == k and all(
                is_type_almost_appell(d, j) for j in range(1, k + 1) if j != pos),
            sample=random_riordan,
            lossless_trunc=lambda r: k * r.trunc,
            domain_identity=identity,
        )
    k, pos = (2, 1) if kind is MapKind.CHI else (ident.k, ident.position)

    def lossless(d):
        ghat, mhats = d.hats()
        return _lossless_trunc(k + 1, ghat, mhats[0].trunc)

    return Morphism(
        ident,
        forward=lambda d, trunc=None: chi_i(d, pos, trunc),
        preimage=lambda d: chi_i_preimage(d, pos),
        in_image=lambda d: d.k == k + 1 and is_type_almost_appell(d, pos),
        sample=lambda rng, n: random_kriordan(rng, k, n),
        lossless_trunc=lossless,
        domain_identity=lambda n: identity_k(k, n),
    )


# verification --------------------------------------------------------------

def _mul(a: Array, b: Array) -> Array:
    return multiply(a, b) if isinstance(a, RiordanArray) else multiply_k(a, b)


def _inv(a: Array) -> Array:
    return inverse(a) if isinstance(a, RiordanArray) else inverse_k(a)


def _components(a: Array) -> list[tuple[str, Series]]:
    if isinstance(a, RiordanArray):
        return [("g", a.g), ("f", a.f)]
    return [("g", a.g)] + [(f"m{i}", m) for i, m in enumerate(a.multipliers, 1)]


def array_difference(a: Array, b: Array) -> tuple[str, int] | None:
    """First ``(component, exponent)`` where two arrays differ, or ``None``."""
    ca, cb = _components(a), _components(b)
    if len(ca) != len(cb):
        return ("arity", 0)
    if a.trunc != b.trunc:
        return ("trunc", min(a.trunc, b.trunc) + 1)
    for (name, x), (_, y) in zip(ca, cb):
        pos = first_difference(x, y)
        if pos is not None:
            return (name, pos)
    return None


def array_to_text(a: Array) -> dict:
    return {name: [str(c) for c in s.coeffs] for name, s in _components(a)}


@dataclass(frozen=True)
class Failure:
    trial: int
    check: str
    component: str
    position: int
    inputs: tuple[dict, ...]

    def to_dict(self) -> dict:
        return dataclasses.asdict(self) | {"inputs": list(self.inputs)}


@dataclass
class HomomorphismReport:
    map: MorphismId
    trials: int
    truncation: int
    seed: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "map": self.map.name,
            "trials": self.trials,
            "truncation": self.truncation,
            "seed": self.seed,
            "verified": self.verified,
            "failures": [f.to_dict() for f in self.failures],
        }


def _run_trial(m: Morphism, trial: int, n: int, seed: int) -> list[Failure]:
    rng = random.Random(seed * 1_000_003 + trial)
    a = m.sample(rng, n)
    b = m.sample(rng, n)
    fails = []

    def check(name, x, y, inputs):
        diff = array_difference(x, y)
        if diff is not None:
            fails.append(Failure(trial, name, diff[0], diff[1],
                                 tuple(array_to_text(v) for v in inputs)))

    fa, fb = m.forward(a), m.forward(b)
    check("product", m.forward(_mul(a, b)), _mul(fa, fb), (a, b))
    check("inverse", m.forward(_inv(a)), _inv(fa), (a,))
    if not m.in_image(fa):
        fails.append(Failure(trial, "image", "array", 0, (array_to_text(a),)))
    # injectivity: the image at full precision determines the input
    full_a = m.forward(a, m.lossless_trunc(a))
    back = m.preimage(full_a)
    check("preimage", _retrunc(back, a.trunc), a, (a,))
    if array_difference(a, b) is not None:
        full_b = m.forward(b, m.lossless_trunc(b))
        if array_difference(full_a, full_b) is None:
            fails.append(Failure(trial, "injective", "array", 0,
                                 (array_to_text(a), array_to_text(b))))
    return fails


def _retrunc(a: Array, n: int) -> Array:
    if isinstance(a, RiordanArray):
        return RiordanArray(retruncate(a.g, n), retruncate(a.f, n))
    return KRiordanArray(retruncate(a.g, n), tuple(retruncate(m, n) for m in a.multipliers))


def verify_homomorphism(ident: MorphismId | Morphism, trials: int = 100, trunc: int = 16,
                        seed: int = 0) -> HomomorphismReport:
    """Check the homomorphism, inverse, image and injectivity laws on random inputs.

    Trial ``t`` draws its inputs from a generator seeded by ``(seed, t)``, so the
    report does not depend on the order in which trials run.
    """
    m = ident if isinstance(ident, Morphism) else morphism(ident)
    report = HomomorphismReport(m.ident, trials, trunc, seed)
    e = m.domain_identity(trunc)
    fe = m.forward(e)
    target = KRiordanArray(Series.one(trunc), (Series.z(trunc),) * fe.k)
    diff = array_difference(fe, target)
    if diff is not None:
        report.failures.append(Failure(-1, "identity", diff[0], diff[1], (array_to_text(e),)))
    for t in range(trials):
        report.failures.extend(_run_trial(m, t, trunc, seed))
    return report


def find_conjugation_witness(trunc: int = 8, seed: int = 0, tries: int = 20):
    """Search for ``X D X^-1`` leaving the type-1 almost Appell subgroup.

    Returns ``(X, D, conjugate)`` for the first hit or ``None``.  A hit shows
    the subgroup is not normal in the Double Riordan group.
    """
    rng = random.Random(seed)
    for _ in range(tries):
        d = random_kriordan(rng, 2, trunc, fixed=(1,))
        x = random_kriordan(rng, 2, trunc)
        conj = multiply_k(multiply_k(x, d), inverse_k(x))
        if not is_type_almost_appell(conj, 1):
            return x, d, conj
    return None
