import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_signature
from tameprod.errors import EmptyProduct, RankTooSmall
from tameprod.lr_oracle import schur_product_decompose
from tameprod.signatures import SignedSpectrum, sig
from tameprod.weyl_calculus import (
    compound_multiplier,
    multiplicity,
    simple_multiplier,
    stabilization_index,
    stable_decompose,
    tensor_decompose,
)


class TestSimpleMultiplier:
    def test_order_zero_is_identity(self):
        assert simple_multiplier(0, sig(3, 1), 4) == SignedSpectrum({sig(3, 1): 1})

    def test_negative_order_vanishes(self):
        assert simple_multiplier(-1, sig(3, 1), 4) == SignedSpectrum()

    def test_one_box_on_row(self):
        assert simple_multiplier(1, sig(1), 2) == SignedSpectrum({sig(2): 1, sig(1, 1): 1})

    def test_row_caps(self):
        # two boxes onto (1) at k=3: (0,1,1) blocked by the cap nu_3 <= 0
        assert simple_multiplier(2, sig(1), 3) == SignedSpectrum({sig(3): 1, sig(2, 1): 1})

    def test_first_row_uncapped(self):
        assert simple_multiplier(5, sig(), 1) == SignedSpectrum({sig(5): 1})

    def test_rank_too_small(self):
        with pytest.raises(RankTooSmall):
            simple_multiplier(1, sig(2, 1), 1)

    def test_outputs_are_interleaving_extensions(self):
        # the row caps say exactly: beta interleaves every output
        from tameprod.signatures import interleaves

        beta = sig(3, 1)
        spec = simple_multiplier(3, beta, 3)
        assert spec
        for h in spec:
            assert interleaves(beta, h)
            assert h.degree == beta.degree + 3


class TestCompoundMultiplier:
    def test_single_row_reduces_to_simple(self):
        assert compound_multiplier(sig(2), sig(1), 3) == simple_multiplier(2, sig(1), 3)

    def test_two_row_example(self):
        expected = SignedSpectrum({sig(2, 1): 1, sig(1, 1, 1): 1})
        assert compound_multiplier(sig(1, 1), sig(1), 3) == expected

    def test_truncation_drops_long_rows(self):
        assert compound_multiplier(sig(1, 1), sig(1), 2) == SignedSpectrum({sig(2, 1): 1})

    def test_empty_alpha_is_identity(self):
        assert compound_multiplier(sig(), sig(3, 2), 3) == SignedSpectrum({sig(3, 2): 1})

    def test_symmetry(self):
        a, b = sig(2, 1), sig(3)
        assert compound_multiplier(a, b, 3) == compound_multiplier(b, a, 3)


class TestTensorDecompose:
    def test_rank_two_spectrum(self):
        factors = [sig(1), sig(2), sig(2), sig(3)]
        expected = SignedSpectrum(
            {sig(8): 1, sig(7, 1): 3, sig(6, 2): 5, sig(5, 3): 5, sig(4, 4): 2}
        )
        assert tensor_decompose(factors, 2) == expected

    def test_rank_four_spectrum(self):
        factors = [sig(1), sig(2), sig(2), sig(3)]
        expected = SignedSpectrum(
            {
                sig(8): 1,
                sig(7, 1): 3,
                sig(6, 2): 5,
                sig(6, 1, 1): 3,
                sig(5, 3): 5,
                sig(5, 2, 1): 6,
                sig(5, 1, 1, 1): 1,
                sig(4, 4): 2,
                sig(4, 3, 1): 5,
                sig(4, 2, 2): 3,
                sig(4, 2, 1, 1): 2,
                sig(3, 3, 2): 2,
                sig(3, 3, 1, 1): 1,
                sig(3, 2, 2, 1): 1,
            }
        )
        assert tensor_decompose(factors, 4) == expected

    def test_single_factor(self):
        assert tensor_decompose([sig(3, 1)], 2) == SignedSpectrum({sig(3, 1): 1})

    def test_empty_product_rejected(self):
        with pytest.raises(EmptyProduct):
            tensor_decompose([], 2)

    def test_rank_too_small(self):
        with pytest.raises(RankTooSmall):
            tensor_decompose([sig(2, 1)], 1)

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_degree_conserved_and_nonnegative(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        factors = [random_signature(rng) for _ in range(rng.randint(1, 3))]
        k = rng.randint(2, 4)
        spec = tensor_decompose(factors, k)
        assert spec.is_nonnegative()
        total = sum(f.degree for f in factors)
        assert all(s.degree == total for s in spec)

    @given(st.data())
    @settings(max_examples=25, deadline=None)
    def test_commutative(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        factors = [random_signature(rng) for _ in range(rng.randint(2, 3))]
        k = rng.randint(2, 4)
        shuffled = factors[:]
        rng.shuffle(shuffled)
        assert tensor_decompose(factors, k) == tensor_decompose(shuffled, k)


class TestStabilization:
    def test_worked_example_index(self):
        assert stabilization_index([sig(1), sig(2), sig(2), sig(3)]) == 4

    def test_spectra_frozen_above_index(self):
        factors = [sig(1), sig(2), sig(2), sig(3)]
        s4 = tensor_decompose(factors, 4)
        for k in (5, 6, 7):
            assert tensor_decompose(factors, k) == s4

    def test_monotone_embedding(self):
        factors = [sig(2, 1), sig(2)]
        lo = tensor_decompose(factors, 2)
        hi = tensor_decompose(factors, 3)
        assert all(hi[s] >= lo[s] for s in lo)

    def test_stable_decompose(self):
        expected = SignedSpectrum({sig(3, 1): 1, sig(2, 2): 1, sig(2, 1, 1): 1})
        assert stable_decompose([sig(2, 1), sig(1)]) == expected

    def test_index_bounded_by_sum_of_lengths(self):
        rng = random.Random(11)
        for _ in range(20):
            factors = [random_signature(rng, max_entry=3) for _ in range(rng.randint(1, 3))]
            assert stabilization_index(factors) <= sum(f.length for f in factors)

    def test_single_factor_index(self):
        assert stabilization_index([sig(3, 1)]) == 2


class TestMultiplicity:
    def test_worked_example(self):
        factors = [sig(1), sig(2), sig(2), sig(3)]
        assert multiplicity(factors, sig(7, 1)) == 3
        assert multiplicity(factors, sig(4, 3, 1)) == 5
        assert multiplicity(factors, sig(9)) == 0

    def test_absent_target(self):
        assert multiplicity([sig(1), sig(1)], sig(3)) == 0


class TestOracleAgreement:
    def test_quick_sweep(self):
        rng = random.Random(20260823)
        for _ in range(60):
            factors = [random_signature(rng) for _ in range(rng.randint(1, 3))]
            k = rng.randint(2, 5)
            assert tensor_decompose(factors, k) == schur_product_decompose(factors, k)
