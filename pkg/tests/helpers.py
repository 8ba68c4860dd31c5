"""Shared test helpers: brute-force oracles kept independent of the package internals."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product

from codezeta.algebra import QuadExt, UniPoly
from codezeta.enumerators import WeightEnumerator


def weight_distribution_from_generator(gen_rows: list[list[int]], q: int) -> list[int]:
    """Enumerate all q^k codewords of the row span and count Hamming weights."""
    k = len(gen_rows)
    n = len(gen_rows[0])
    counts = [0] * (n + 1)
    for message in product(range(q), repeat=k):
        word = [0] * n
        for coeff, row in zip(message, gen_rows):
            if coeff:
                for j in range(n):
                    word[j] = (word[j] + coeff * row[j]) % q
        counts[sum(1 for v in word if v)] += 1
    return counts


def expand_binomial_pair(n_left: int, c_left: int, n_right: int, c_right: int) -> list[int]:
    """Integer coefficient vector (by y-degree) of (x + c_left*y)^n_left * (x + c_right*y)^n_right."""
    left = [math.comb(n_left, a) * c_left**a for a in range(n_left + 1)]
    right = [math.comb(n_right, b) * c_right**b for b in range(n_right + 1)]
    out = [0] * (n_left + n_right + 1)
    for a, la in enumerate(left):
        for b, rb in enumerate(right):
            out[a + b] += la * rb
    return out


def random_quadext(rng: random.Random, q: int, span: int = 9) -> QuadExt:
    num_a = rng.randint(-span, span)
    num_b = rng.randint(-span, span)
    den_a = rng.randint(1, 4)
    den_b = rng.randint(1, 4)
    return QuadExt(q, Fraction(num_a, den_a), Fraction(num_b, den_b))


def random_enumerator(rng: random.Random) -> WeightEnumerator:
    """A synthetic enumerator: random small integers, A_0 = 1, A_d != 0."""
    n = rng.randint(2, 12)
    d = rng.randint(1, n)
    q = rng.randint(2, 9)
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    coeffs[d] = rng.choice([v for v in range(-9, 10) if v])
    for i in range(d + 1, n + 1):
        coeffs[i] = rng.randint(-9, 9)
    return WeightEnumerator(q, coeffs)


def kernel_column(q: int, n: int, m: int, u: int) -> Fraction:
    """Independent recomputation of the x^u y^{n-u} part of [T^m] of the zeta kernel.

    Expands 1/((1-T)(1-qT)) and (y(1-T)+xT)^n from scratch, sharing no code
    with the package's linear-system route.
    """
    total = Fraction(0)
    for j in range(u, min(m, n) + 1):
        geo = sum(q**t for t in range(m - j + 1))
        total += geo * math.comb(n, j) * math.comb(j, u) * Fraction(-1) ** (j - u)
    return total


def enumerator_from_zeta(
    poly: UniPoly, n: int, d: int, q: int
) -> WeightEnumerator:
    """Forward construction: the unique enumerator whose zeta polynomial is `poly`.

    Multiplies the candidate polynomial into the generating kernel and reads
    the T^{n-d} coefficient as (W - x^n)/(q-1).
    """
    if poly.degree > n - d:
        raise ValueError("degree exceeds n - d")
    coeffs: list[QuadExt] = [QuadExt(q, 1)] + [QuadExt(q, 0)] * n
    for u in range(0, n - d + 1):
        acc = QuadExt(q, 0)
        for i in range(0, n - d + 1):
            a_i = poly[i]
            if a_i:
                acc = acc + a_i * kernel_column(q, n, n - d - i, u)
        coeffs[n - u] = acc * (q - 1)
    return WeightEnumerator(q, coeffs)
