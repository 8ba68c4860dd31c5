"""Enumerator constructors, the MacWilliams transform, and invariantization."""

import random
from fractions import Fraction

import pytest

from helpers import expand_binomial_pair, weight_distribution_from_generator

from codezeta.algebra import QuadExt, half_power
from codezeta.enumerators import (
    CodeParams,
    WeightEnumerator,
    enumerator_from_json,
    enumerator_to_json,
    golay_enumerator,
    golay_pair,
    hamming_enumerator,
    invariantize,
    is_invariant,
    macwilliams_transform,
    mds_enumerator,
    simplex_enumerator,
)

# constructor pairs exercised by the shared dual-pair properties
PAIR_CASES = [
    ("mds", (6, 3, 2)),
    ("mds", (9, 4, 3)),
    ("mds", (10, 2, 5)),
    ("hamming", (3, 2)),
    ("hamming", (3, 3)),
    ("hamming", (4, 2)),
    ("golay", ("g23",)),
    ("golay", ("g11",)),
]


def build_pair(kind, args):
    if kind == "mds":
        n, d, q = args
        W, params = mds_enumerator(n, d, q)
        W_dual, _ = mds_enumerator(n, n + 2 - d, q)
        return W, W_dual, params
    if kind == "hamming":
        W, params = hamming_enumerator(*args)
        W_dual, _ = simplex_enumerator(*args)
        return W, W_dual, params
    return golay_pair(args[0])


class TestMdsEnumerator:
    def test_tetracode_by_enumeration(self):
        # ternary [4,2,3]: nine codewords, eight of weight 3
        counts = weight_distribution_from_generator([[1, 0, 1, 1], [0, 1, 1, 2]], 3)
        assert counts == [1, 0, 0, 8, 0]
        W, params = mds_enumerator(4, 3, 3)
        assert [c for c in W.A] == [QuadExt(3, v) for v in counts]
        assert (params.k, params.d_perp) == (2, 3)

    def test_binary_even_weight_code(self):
        counts = weight_distribution_from_generator([[1, 1, 0], [1, 0, 1]], 2)
        assert counts == [1, 0, 3, 0]
        W, _ = mds_enumerator(3, 2, 2)
        assert list(W.A) == [QuadExt(2, v) for v in counts]

    def test_reed_solomon_weights(self):
        # [6,3,4] over GF(7), generated by evaluations of 1, x, x^2
        points = [1, 2, 3, 4, 5, 6]
        gen = [[pow(p, e, 7) for p in points] for e in range(3)]
        counts = weight_distribution_from_generator(gen, 7)
        W, _ = mds_enumerator(6, 4, 7)
        assert list(W.A) == [QuadExt(7, v) for v in counts]

    def test_head_coefficient_formula(self):
        from codezeta.algebra import binomial

        for n, d, q in [(8, 3, 2), (12, 5, 4), (9, 4, 6)]:
            W, _ = mds_enumerator(n, d, q)
            assert W.A[d] == binomial(n, d) * (q - 1)

    def test_min_distance(self):
        W, _ = mds_enumerator(9, 4, 3)
        assert W.min_distance == 4

    def test_parameter_range(self):
        with pytest.raises(ValueError):
            mds_enumerator(5, 1, 2)
        with pytest.raises(ValueError):
            mds_enumerator(5, 6, 2)
        with pytest.raises(ValueError):
            mds_enumerator(5, 2, 1)


class TestSimplexAndHamming:
    def test_simplex_fixture(self):
        W, params = simplex_enumerator(3, 2)
        assert list(W.A) == [QuadExt(2, v) for v in [1, 0, 0, 0, 7, 0, 0, 0]]
        assert (params.n, params.k, params.d, params.d_perp) == (7, 3, 4, 3)

    def test_simplex_small_cases(self):
        W, params = simplex_enumerator(2, 3)
        assert W.n == 4 and W.A[3] == 8 and params.d == 3
        W, params = simplex_enumerator(3, 3)
        assert W.n == 13 and W.A[9] == 26

    def test_hamming_by_enumeration(self):
        gen = [
            [1, 0, 0, 0, 0, 1, 1],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 1, 0],
            [0, 0, 0, 1, 1, 1, 1],
        ]
        counts = weight_distribution_from_generator(gen, 2)
        assert counts == [1, 0, 0, 7, 7, 0, 0, 1]
        W, _ = hamming_enumerator(3, 2)
        assert list(W.A) == [QuadExt(2, v) for v in counts]

    def test_hamming_r2_is_mds(self):
        for q in (2, 3, 4, 5):
            W, params = hamming_enumerator(2, q)
            W_mds, _ = mds_enumerator(q + 1, 3, q)
            assert W == W_mds
            assert params.d == 3

    def test_hamming_distance_three(self):
        for r, q in [(3, 2), (3, 3), (4, 2), (3, 4)]:
            W, _ = hamming_enumerator(r, q)
            assert W.A[1] == 0 and W.A[2] == 0
            assert W.min_distance == 3


class TestGolay:
    def test_g23(self):
        W, params = golay_enumerator("g23")
        expected = {7: 253, 8: 506, 11: 1288, 12: 1288, 15: 506, 16: 253, 23: 1}
        for i in range(1, 24):
            assert W.A[i] == expected.get(i, 0)
        assert (params.n, params.k, params.d, params.d_perp, params.q) == (23, 12, 7, 8, 2)

    def test_g11(self):
        W, params = golay_enumerator("g11")
        expected = {5: 132, 6: 132, 8: 330, 9: 110, 11: 24}
        for i in range(1, 12):
            assert W.A[i] == expected.get(i, 0)
        assert (params.n, params.k, params.d, params.d_perp, params.q) == (11, 6, 5, 6, 3)

    def test_duals(self):
        W, params = golay_enumerator("g23_dual")
        assert W.A[8] == 506 and W.A[12] == 1288 and W.A[16] == 253
        assert W.min_distance == 8 and params.k == 11
        W, params = golay_enumerator("g11_dual")
        assert W.A[6] == 132 and W.A[9] == 110
        assert W.min_distance == 6 and params.k == 5

    def test_codeword_counts(self):
        for which, k in [("g23", 12), ("g23_dual", 11), ("g11", 6), ("g11_dual", 5)]:
            W, params = golay_enumerator(which)
            assert W.evaluate(1, 1) == params.q**k

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            golay_enumerator("g24")


class TestMacWilliams:
    def test_self_dual_toy(self):
        W = WeightEnumerator(2, [1, 0, 1])  # x^2 + y^2
        assert macwilliams_transform(W) == W.A
        assert is_invariant(W)

    def test_simplex_hand_expansion(self):
        # transform(simplex(3,2)) must equal 2^{-7/2} [ (x+y)^7 + 7 (x+y)^3 (x-y)^4 ]
        W, _ = simplex_enumerator(3, 2)
        got = macwilliams_transform(W)
        raw = [
            a + 7 * b
            for a, b in zip(
                expand_binomial_pair(7, 1, 0, 1), expand_binomial_pair(3, 1, 4, -1)
            )
        ]
        scale = half_power(2, Fraction(-7, 2))
        assert list(got) == [scale * v for v in raw]

    def test_involution(self):
        for kind, args in PAIR_CASES:
            W, _, _ = build_pair(kind, args)
            once = macwilliams_transform(W)
            # renormalize the raw vector so it can be transformed again
            lead = once[0]
            back = macwilliams_transform(WeightEnumerator(W.q, [c / lead for c in once]))
            assert tuple(c * lead for c in back) == W.A

    def test_dual_pairing_identity(self):
        for kind, args in PAIR_CASES:
            W, W_dual, params = build_pair(kind, args)
            factor = half_power(params.q, Fraction(2 * params.k - params.n, 2))
            assert macwilliams_transform(W) == tuple(factor * c for c in W_dual.A)

    def test_g23_alone_not_invariant(self):
        W, _ = golay_enumerator("g23")
        assert not is_invariant(W)


class TestInvariantize:
    def test_hamming_32_fixture(self):
        W, W_dual, params = build_pair("hamming", (3, 2))
        W_tilde = invariantize(W, W_dual, params)
        s2 = QuadExt.sqrt_base(2)
        seven_over = QuadExt(2, 7) / (1 + s2)
        assert W_tilde.A[3] == seven_over
        assert W_tilde.A[4] == 7
        assert W_tilde.A[7] == QuadExt(2, 1) / (1 + s2)
        assert W_tilde.min_distance == 3

    def test_invariance_of_all_pairs(self):
        for kind, args in PAIR_CASES:
            W, W_dual, params = build_pair(kind, args)
            W_tilde = invariantize(W, W_dual, params)
            assert is_invariant(W_tilde)
            assert W_tilde.min_distance == min(params.d, params.d_perp)

    def test_g11_invariant_distance(self):
        W, W_dual, params = golay_pair("g11")
        W_tilde = invariantize(W, W_dual, params)
        assert W_tilde.min_distance == 5
        assert is_invariant(W_tilde)

    def test_symmetric_in_the_pair(self):
        W, W_dual, params = golay_pair("g23")
        a = invariantize(W, W_dual, params)
        b = invariantize(W_dual, W, params.dual())
        assert a == b

    def test_self_dual_input_is_identity(self):
        # the invariantized [8,4,4] extended Hamming enumerator is itself
        gen = [
            [1, 0, 0, 0, 0, 1, 1, 1],
            [0, 1, 0, 0, 1, 0, 1, 1],
            [0, 0, 1, 0, 1, 1, 0, 1],
            [0, 0, 0, 1, 1, 1, 1, 0],
        ]
        counts = weight_distribution_from_generator(gen, 2)
        W = WeightEnumerator(2, counts)
        params = CodeParams(n=8, k=4, d=4, d_perp=4, q=2)
        assert invariantize(W, W, params) == W

    def test_rejects_non_dual_pair(self):
        W, _ = golay_enumerator("g23")
        W_bad, _ = golay_enumerator("g23")
        params = CodeParams(n=23, k=12, d=7, d_perp=7, q=2)
        with pytest.raises(ValueError):
            invariantize(W, W_bad, params)


class TestCodeCounts:
    def test_sum_check_q_to_k(self):
        cases = [
            ("mds", (6, 3, 2)),
            ("mds", (9, 4, 3)),
            ("mds", (6, 4, 7)),
            ("hamming", (3, 2)),
            ("hamming", (3, 3)),
            ("hamming", (4, 2)),
        ]
        for kind, args in cases:
            if kind == "mds":
                W, params = mds_enumerator(*args)
            else:
                W, params = hamming_enumerator(*args)
            assert W.evaluate(1, 1) == params.q**params.k

    def test_mds_dual_closure(self):
        for n, d, q in [(8, 3, 2), (9, 4, 3), (10, 2, 4)]:
            W, params = mds_enumerator(n, d, q)
            raw = macwilliams_transform(W)
            lead = raw[0]
            dual = WeightEnumerator(q, [c / lead for c in raw])
            assert dual.min_distance == n + 2 - d


class TestJsonForms:
    def test_round_trip(self):
        W, params = hamming_enumerator(3, 2)
        data = enumerator_to_json(W, params)
        W2, k = enumerator_from_json(data)
        assert W2 == W and k == params.k

    def test_integer_coefficients_accepted(self):
        W, _ = enumerator_from_json({"q": 2, "n": 2, "A": [1, 0, 1]})
        assert W == WeightEnumerator(2, [1, 0, 1])

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            enumerator_from_json({"q": 2, "n": 3, "A": [1, 0, 1]})
        with pytest.raises(ValueError):
            enumerator_from_json({"q": 2, "A": [1, 0, 1]})
        with pytest.raises(ValueError):
            enumerator_from_json({"q": 2, "n": 2, "A": [1, 0, 1.5]})


class TestCodeParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            CodeParams(n=5, k=5, d=2, d_perp=2, q=2)
        with pytest.raises(ValueError):
            CodeParams(n=5, k=2, d=1, d_perp=2, q=2)
        with pytest.raises(ValueError):
            CodeParams(n=5, k=2, d=5, d_perp=2, q=2)  # negative genus

    def test_genus_values(self):
        p = CodeParams(n=23, k=12, d=7, d_perp=8, q=2)
        assert (p.genus, p.genus_dual) == (5, 5)
        assert p.dual() == CodeParams(n=23, k=11, d=8, d_perp=7, q=2)
