"""Exact arithmetic layer: Q(sqrt(q)) elements, polynomials, truncated series."""

import math
import random
from fractions import Fraction

import pytest

from codezeta.algebra import (
    QuadExt,
    TruncatedSeries,
    UniPoly,
    half_power,
    is_self_reciprocal,
    reciprocal_transform,
    series_expand,
    sign_exact,
)


class TestQuadExt:
    def test_product_of_conjugates(self):
        assert QuadExt(2, 1, 1) * QuadExt(2, 1, -1) == QuadExt(2, -1)

    def test_division_rationalizes(self):
        x = QuadExt(2, 1) / QuadExt(2, 1, 2)
        assert x == QuadExt(2, Fraction(-1, 7), Fraction(2, 7))
        assert x * QuadExt(2, 1, 2) == 1

    def test_sqrt_cubed(self):
        assert QuadExt.sqrt_base(2) ** 3 == QuadExt(2, 0, 2)

    def test_negative_power(self):
        s = QuadExt(3, 1, 1)
        assert s**-2 == (s * s).inverse()

    def test_perfect_square_base_canonicalizes(self):
        assert QuadExt(4, 3, 2) == QuadExt(4, 7)
        assert QuadExt(9, 0, 1) == QuadExt(9, 3)

    def test_mismatched_bases_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(2, 1) + QuadExt(3, 1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QuadExt(5, 1) / QuadExt(5, 0)

    def test_text_round_trip(self):
        for value in (
            QuadExt(2, 130, 156),
            QuadExt(2, Fraction(-1, 7), Fraction(2, 7)),
            QuadExt(3, Fraction(5, 3)),
            QuadExt(2, 0, -3),
        ):
            assert QuadExt.parse(str(value), value.q) == value
        assert str(QuadExt(2, 130, 156)) == "130+156*sqrt(2)"
        assert str(QuadExt(2, Fraction(-1, 7), Fraction(2, 7))) == "-1/7+2/7*sqrt(2)"
        assert str(QuadExt(3, Fraction(5, 3))) == "5/3"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            QuadExt.parse("1+sqrt(2)", 2)
        with pytest.raises(ValueError):
            QuadExt.parse("1+2*sqrt(3)", 2)

    def test_field_axioms_random(self):
        rng = random.Random(20240917)
        from helpers import random_quadext

        for _ in range(1000):
            q = rng.choice([2, 3, 5, 6, 7, 10])
            x = random_quadext(rng, q)
            y = random_quadext(rng, q)
            z = random_quadext(rng, q)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            if x:
                assert x * x.inverse() == 1

    def test_half_power_examples(self):
        assert half_power(2, Fraction(3, 2)) == QuadExt(2, 0, 2)
        assert half_power(3, Fraction(-1, 2)) == QuadExt(3, 0, Fraction(1, 3))
        assert half_power(4, Fraction(5, 2)) == QuadExt(4, 32)
        assert half_power(2, -3) == QuadExt(2, Fraction(1, 8))

    def test_half_power_rejects_thirds(self):
        with pytest.raises(ValueError):
            half_power(2, Fraction(1, 3))


class TestSignExact:
    def test_examples(self):
        assert sign_exact(QuadExt(2, 1, -1)) == -1  # 1 < sqrt(2)
        assert sign_exact(QuadExt(2, 3, -2)) == 1  # 9 > 8
        assert sign_exact(QuadExt(5, 0, 0)) == 0
        assert sign_exact(QuadExt(2, -3, 2)) == -1
        assert sign_exact(QuadExt(2, -1, 1)) == 1

    def test_agrees_with_float_outside_guard_band(self):
        rng = random.Random(7)
        from helpers import random_quadext

        for _ in range(2000):
            q = rng.choice([2, 3, 5, 7])
            x = random_quadext(rng, q)
            approx = float(x)
            if abs(approx) > 1e-6:
                assert sign_exact(x) == (1 if approx > 0 else -1)

    def test_comparisons_follow_sign(self):
        assert QuadExt(2, 1, 1) > 2
        assert QuadExt(2, 1, 1) < Fraction(5, 2)
        assert QuadExt(3, 0, 1) > QuadExt(3, Fraction(17, 10))


class TestUniPoly:
    def test_mul(self):
        one_plus_t = UniPoly(2, [1, 1])
        one_minus_t = UniPoly(2, [1, -1])
        assert one_plus_t * one_minus_t == UniPoly(2, [1, 0, -1])

    def test_compose_linear(self):
        # 2*sqrt(2) * (1/sqrt(2))^3 = 1
        f = UniPoly(2, [QuadExt(2, 1), QuadExt(2, 0), QuadExt(2, 0), QuadExt(2, 0, 2)])
        g = f.compose_linear(half_power(2, Fraction(-1, 2)))
        assert g == UniPoly(2, [1, 0, 0, 1])
        # and with c = sqrt(2): 2*sqrt(2) * sqrt(2)^3 = 8
        h = f.compose_linear(QuadExt.sqrt_base(2))
        assert h == UniPoly(2, [1, 0, 0, 8])

    def test_compose_linear_round_trip(self):
        rng = random.Random(11)
        from helpers import random_quadext

        for _ in range(50):
            q = rng.choice([2, 3, 5])
            f = UniPoly(q, [random_quadext(rng, q) for _ in range(rng.randint(1, 8))])
            c = QuadExt(q, 0)
            while not c:
                c = random_quadext(rng, q, span=4)
            assert f.compose_linear(c).compose_linear(c.inverse()) == f

    def test_scale(self):
        s3 = QuadExt.sqrt_base(3)
        f = UniPoly(3, [1, 3, 3]).scale((s3 - 1) * Fraction(1, 14))
        assert f[0] == (s3 - 1) * Fraction(1, 14)
        assert f[2] == (s3 - 1) * Fraction(3, 14)

    def test_trailing_zeros_trimmed(self):
        assert UniPoly(2, [1, 2, 0, 0]).degree == 1
        assert UniPoly(2, [0, 0]).is_zero()

    def test_exact_evaluation(self):
        f = UniPoly(2, [1, -2, 1])
        assert f(Fraction(1, 2)) == Fraction(1, 4)


class TestReciprocal:
    def test_basic(self):
        f = UniPoly(2, [1, 2])
        assert reciprocal_transform(f, 1) == UniPoly(2, [2, 1])
        assert reciprocal_transform(f, 3) == UniPoly(2, [0, 0, 2, 1])

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            reciprocal_transform(UniPoly(2, [1, 2, 3]), 1)

    def test_involution(self):
        rng = random.Random(13)
        from helpers import random_quadext

        for _ in range(50):
            q = rng.choice([2, 3, 7])
            f = UniPoly(q, [random_quadext(rng, q) for _ in range(rng.randint(1, 9))])
            if f.is_zero():
                continue
            m = f.degree + rng.randint(0, 3)
            g = reciprocal_transform(f, m)
            assert reciprocal_transform(g, m) == UniPoly(q, f.coeffs)

    def test_is_self_reciprocal(self):
        assert is_self_reciprocal(UniPoly(2, [1, 3, 1]))
        assert not is_self_reciprocal(UniPoly(2, [1, 2]))
        with pytest.raises(ValueError):
            is_self_reciprocal(UniPoly.zero(2))


class TestSeries:
    def test_binomial_series(self):
        s = series_expand(UniPoly.one(2), UniPoly(2, [1, -2, 1]), 3)
        assert s.to_poly() == UniPoly(2, [1, 2, 3, 4])

    def test_geometric_series(self):
        s = series_expand(UniPoly.one(2), UniPoly(2, [1, -2]), 2)
        assert s.to_poly() == UniPoly(2, [1, 2, 4])

    def test_simplex_like_quotient(self):
        # (1-2T)/(1-T)^4 through T^2; cross-checked by multiplying back below
        num = UniPoly(2, [1, -2])
        den = UniPoly(2, [1, -4, 6, -4, 1])
        s = series_expand(num, den, 2)
        assert s.to_poly() == UniPoly(2, [1, 2, 2])

    def test_multiply_back(self):
        rng = random.Random(17)
        from helpers import random_quadext

        for _ in range(40):
            q = rng.choice([2, 3, 5])
            order = rng.randint(0, 8)
            num = UniPoly(q, [random_quadext(rng, q) for _ in range(rng.randint(1, 6))])
            den_coeffs = [random_quadext(rng, q) for _ in range(rng.randint(1, 6))]
            while not den_coeffs[0]:
                den_coeffs[0] = random_quadext(rng, q)
            den = UniPoly(q, den_coeffs)
            s = series_expand(num, den, order)
            back = s * TruncatedSeries.from_poly(den, order)
            assert back == TruncatedSeries.from_poly(num, order)

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            series_expand(UniPoly.one(2), UniPoly(2, [0, 1]), 3)
