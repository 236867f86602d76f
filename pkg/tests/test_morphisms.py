import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import S
from kriordan.errors import MapDomainError, PositionError
from kriordan.morphisms import (
    MapKind,
    MorphismId,
    chi,
    chi_i,
    chi_i_preimage,
    find_conjugation_witness,
    is_type_almost_appell,
    morphism,
    phi,
    phi_k,
    phi_k_preimage,
    psi_checkerboard,
    psi_type2,
    verify_homomorphism,
)
from kriordan.multi_riordan import KRiordanArray, identity_k, inverse_k, make_kriordan, multiply_k
from kriordan.riordan import RiordanArray, identity, pascal
from kriordan.sampling import random_kriordan, random_riordan
from kriordan.series import Series, retruncate

seeds = st.randoms(use_true_random=False)
N = 12


def D(g, *ms, n=N):
    return make_kriordan(len(ms), S(g, n), [S(m, n) for m in ms])


class TestPsi:
    def test_identity(self):
        assert psi_checkerboard(identity(N)) == identity_k(2, N)

    def test_substitution(self):
        r = RiordanArray(S("1/(1-z^2)", N), S("z/(1-z^2)", N))
        assert psi_checkerboard(r) == D("1/(1-z^2)", "z/(1-z^2)", "z/(1-z^2)")

    def test_rejects_non_checkerboard(self):
        with pytest.raises(MapDomainError):
            psi_checkerboard(pascal(N))


class TestPhi:
    def test_identity(self):
        assert phi(identity(N)) == identity_k(2, N)

    def test_pascal(self):
        assert phi(pascal(N)) == D("1/(1-z^2)", "z", "z/(1-z^2)")

    def test_scaling(self):
        r = RiordanArray(Series.one(N), S("2*z", N))
        assert phi(r) == D("1", "z", "2*z")

    def test_psi_type2(self):
        assert psi_type2(identity(N)) == identity_k(2, N)
        img = psi_type2(pascal(N))
        assert img == D("1/(1-z^2)", "z/(1-z^2)", "z")
        assert is_type_almost_appell(img, 2)
        assert not is_type_almost_appell(img, 1)

    def test_phi_k(self):
        r = random_riordan(random.Random(3), N)
        assert phi_k(r, 1) == KRiordanArray(r.g, (r.f,))
        assert phi_k(identity(N), 3) == identity_k(3, N)
        assert phi_k(pascal(N), 3) == D("1/(1-z^3)", "z", "z", "z/(1-z^3)")
        assert phi_k(pascal(N), 3, position=1) == D("1/(1-z^3)", "z/(1-z^3)", "z", "z")

    def test_phi_k_position_range(self):
        with pytest.raises(PositionError):
            phi_k(pascal(N), 3, position=4)

    def test_full_precision_image(self):
        img = phi(pascal(6), trunc=12)
        assert img == D("1/(1-z^2)", "z", "z/(1-z^2)", n=12)
        assert phi_k_preimage(img, 2) == pascal(6)

    @given(seeds)
    def test_image_is_type1(self, rng):
        """Every phi image is type-1, every type-1 array is a phi image."""
        assert is_type_almost_appell(phi(random_riordan(rng, N)), 1)
        d = random_kriordan(rng, 2, N, fixed=(1,))
        assert phi(phi_k_preimage(d, 2), trunc=N) == d


class TestChi:
    def test_identity(self):
        assert chi(identity_k(2, N)) == identity_k(3, N)
        for k in range(1, 5):
            for i in range(1, k + 2):
                assert chi_i(identity_k(k, N), i) == identity_k(k + 1, N)

    def test_rebase(self):
        assert chi(D("1/(1-z^2)", "z", "z/(1-z^2)")) == D("1/(1-z^3)", "z", "z", "z/(1-z^3)")

    def test_chi_is_chi_1(self):
        d = D("1/(1-z^2)", "z/(1-z^2)", "z+z^3")
        assert chi(d) == chi_i(d, 1)
        assert is_type_almost_appell(chi(d), 1)

    def test_position_range(self):
        with pytest.raises(PositionError):
            chi_i(identity_k(2, N), 4)
        with pytest.raises(PositionError):
            chi_i(identity_k(2, N), 0)

    @given(seeds, st.integers(1, 4), st.data())
    def test_preimage_recovers_input(self, rng, k, data):
        i = data.draw(st.integers(1, k + 1))
        d = random_kriordan(rng, k, N)
        img = chi_i(d, i, trunc=morphism(MorphismId(MapKind.CHI_I, k, i)).lossless_trunc(d))
        back = chi_i_preimage(img, i)
        assert back.trunc >= N
        assert KRiordanArray(retruncate(back.g, N),
                             tuple(retruncate(m, N) for m in back.multipliers)) == d

    def test_chi_after_phi_is_phi3(self):
        r = random_riordan(random.Random(5), N)
        assert chi(phi(r)) == phi_k(r, 3)
        assert is_type_almost_appell(chi(phi(r)), 1)
        assert is_type_almost_appell(chi(phi(r)), 2)

    def test_chi_of_checkerboard_image(self):
        r = RiordanArray(S("1/(1-z^2)", N), S("z/(1-z^2)", N))
        assert is_type_almost_appell(chi(psi_checkerboard(r)), 1)


class TestAlmostAppell:
    def test_examples(self):
        assert is_type_almost_appell(identity_k(2, N), 1)
        assert is_type_almost_appell(phi(pascal(N)), 1)
        assert not is_type_almost_appell(psi_type2(pascal(N)), 1)

    @settings(max_examples=20)
    @given(seeds, st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]))
    def test_subgroup_closure(self, rng, ki):
        k, i = ki
        a = random_kriordan(rng, k, N, fixed=(i,))
        b = random_kriordan(rng, k, N, fixed=(i,))
        assert is_type_almost_appell(multiply_k(a, b), i)
        assert is_type_almost_appell(inverse_k(a), i)

    def test_not_normal(self):
        hit = find_conjugation_witness(trunc=8, seed=1)
        assert hit is not None
        x, d, conj = hit
        assert is_type_almost_appell(d, 1)
        assert not is_type_almost_appell(conj, 1)


class TestMorphismId:
    @pytest.mark.parametrize("text, ident", [
        ("phi", MorphismId(MapKind.PHI)),
        ("psi", MorphismId(MapKind.PSI_CHECKERBOARD)),
        ("psi2", MorphismId(MapKind.PSI_TYPE2)),
        ("chi", MorphismId(MapKind.CHI)),
        ("phik:3", MorphismId(MapKind.PHI_K, 3, 3)),
        ("phik:4:2", MorphismId(MapKind.PHI_K, 4, 2)),
        ("chii:3:4", MorphismId(MapKind.CHI_I, 3, 4)),
    ])
    def test_parse(self, text, ident):
        assert MorphismId.parse(text) == ident

    @pytest.mark.parametrize("text", ["nope", "chii:3", "phi:2", "phik:x"])
    def test_parse_errors(self, text):
        with pytest.raises(ValueError):
            MorphismId.parse(text)

    def test_range_validation(self):
        with pytest.raises(PositionError):
            MorphismId(MapKind.CHI_I, 2, 4)
        with pytest.raises(PositionError):
            MorphismId(MapKind.PHI_K, 2, 3)


class TestVerify:
    @pytest.mark.parametrize("name", ["psi", "phi", "psi2", "phik:3:2", "chi", "chii:3:2"])
    def test_zero_failures(self, name):
        report = verify_homomorphism(MorphismId.parse(name), trials=10, trunc=12, seed=1)
        assert report.verified, report.failures[:3]

    def test_deterministic(self):
        a = verify_homomorphism(MorphismId.parse("phi"), 5, 10, seed=3).to_dict()
        b = verify_homomorphism(MorphismId.parse("phi"), 5, 10, seed=3).to_dict()
        assert a == b

    def test_corrupted_map_is_caught(self):
        m = morphism(MorphismId.parse("phi"))

        def corrupted(r, trunc=None):
            img = m.forward(r, trunc)
            g = list(img.g.coeffs)
            g[2] += 1
            return KRiordanArray(Series(g), img.multipliers)

        report = verify_homomorphism(dataclasses.replace(m, forward=corrupted), 5, 10, seed=0)
        assert not report.verified
        checks = {f.check for f in report.failures}
        assert "identity" in checks and "product" in checks
        first = next(f for f in report.failures if f.check == "product")
        assert first.component == "g" and first.position == 2
