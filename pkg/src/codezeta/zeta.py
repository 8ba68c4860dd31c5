"""Zeta polynomials of weight enumerators.

Two independent routes compute the same unique polynomial P(T) of degree at
most n-d attached to an enumerator:

* ``zeta_from_enumerator`` expands the normalized enumerator a(t) at
  t = T/(1-T) and multiplies by (1-qT)/(1-T)^d as a truncated series.
* ``zeta_by_linear_system`` expands the bivariate generating kernel
  (y(1-T)+xT)^n / ((1-T)(1-qT)) and solves the triangular linear system that
  matches the T^{n-d} coefficient to (W - x^n)/(q-1).

Their agreement is the package's main self-check.  On top of P(T) sit the
dual transform, the invariantization of dual pairs, and closed forms for the
MDS and simplex/Hamming families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    QuadExt,
    TruncatedSeries,
    UniPoly,
    binomial,
    half_power,
)
from .enumerators import CodeParams, WeightEnumerator


@dataclass(frozen=True)
class ZetaPolynomial:
    """A zeta polynomial P(T) over Q(sqrt(q)) with provenance genus data.

    ``genus_data`` is (g, g_perp) for a zeta built against explicit code
    parameters, a single Fraction g-tilde for an invariantized zeta, or None
    when only the enumerator was known.
    """

    q: int
    poly: UniPoly
    genus_data: tuple[int, int] | Fraction | None = None

    def __post_init__(self) -> None:
        if self.poly.q != self.q:
            raise ValueError("polynomial base does not match q")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def genus(self) -> Fraction:
        """The functional-equation exponent: half the degree (may be a half-integer)."""
        return Fraction(self.degree, 2)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "coeffs": [str(c) for c in self.poly.coeffs],
            "genus": str(self.genus),
        }


@dataclass(frozen=True)
class NormalizedEnumerator:
    """The normalized enumerator a(t): alpha[j] = A_{d+j} / ((q-1) C(n, d+j))."""

    q: int
    d: int
    alpha: tuple[QuadExt, ...]


def normalized_enumerator(W: WeightEnumerator) -> NormalizedEnumerator:
    d = W.min_distance
    qm1 = W.q - 1
    alpha = tuple(
        W.A[i] / (qm1 * binomial(W.n, i)) for i in range(d, W.n + 1)
    )
    return NormalizedEnumerator(q=W.q, d=d, alpha=alpha)


def zeta_from_enumerator(
    W: WeightEnumerator, params: CodeParams | None = None
) -> ZetaPolynomial:
    """P(T) via the series congruence P = a(T/(1-T)) (1-qT)/(1-T)^d mod T^{n-d+1}.

    a(T/(1-T)) is accumulated Horner-style over the alpha coefficients, and
    (1-T)^{-d} enters through its binomial series, all truncated at order n-d.
    """
    q, n = W.q, W.n
    norm = normalized_enumerator(W)
    d = norm.d
    order = n - d
    t = TruncatedSeries(q, order, (0, 1) + (1,) * max(0, order - 1))  # T/(1-T)
    acc = TruncatedSeries.constant(q, norm.alpha[-1], order)
    for j in range(len(norm.alpha) - 2, -1, -1):
        acc = acc * t + norm.alpha[j]
    inv_pow = TruncatedSeries(
        q, order, (binomial(j + d - 1, d - 1) for j in range(order + 1))
    )  # (1-T)^{-d}
    one_minus_qt = TruncatedSeries(q, order, (1, -q))
    series = acc * one_minus_qt * inv_pow
    poly = series.to_poly()
    genus: tuple[int, int] | None = None
    if params is not None:
        genus = (params.genus, params.genus_dual)
    return ZetaPolynomial(q=q, poly=poly, genus_data=genus)


def _kernel_coefficient_table(q: int, n: int, rows: int) -> list[list[int]]:
    """v[m][u]: the x^u y^{n-u} coefficient of [T^m] (y(1-T)+xT)^n / ((1-T)(1-qT)).

    With c_l = 1 + q + ... + q^l, the kernel expands to
    sum_m T^m sum_{j<=min(m,n)} c_{m-j} C(n,j) (x-y)^j y^{n-j}, from which
    v[m][u] = sum_{j>=u} c_{m-j} C(n,j) C(j,u) (-1)^{j-u}.
    """
    c = [1]
    for _ in range(rows - 1):
        c.append(c[-1] * q + 1)
    table = []
    for m in range(rows):
        row = []
        for u in range(m + 1):
            acc = 0
            for j in range(u, min(m, n) + 1):
                acc += c[m - j] * binomial(n, j) * binomial(j, u) * (-1) ** (j - u)
            row.append(acc)
        table.append(row)
    return table


def zeta_by_linear_system(
    W: WeightEnumerator, params: CodeParams | None = None
) -> ZetaPolynomial:
    """P(T) as the unique solution of the bivariate matching system.

    Matching the x^u y^{n-u} parts of the T^{n-d} coefficient of
    (a_0 + ... + a_{n-d} T^{n-d}) * kernel against (W - x^n)/(q-1) gives a
    triangular system with diagonal C(n,u); it is solved by forward
    substitution.  This route shares nothing with zeta_from_enumerator.
    """
    q, n = W.q, W.n
    d = W.min_distance
    N = n - d
    table = _kernel_coefficient_table(q, n, N + 1)
    qm1 = QuadExt(q, W.q - 1)
    solution: list[QuadExt] = []
    for u in range(N, -1, -1):
        i = N - u  # index of the unknown picked up at this column
        rhs = W.A[n - u] / qm1
        for j in range(i):
            coeff = table[N - j][u] if u <= N - j else 0
            if coeff:
                rhs = rhs - solution[j] * coeff
        diag = table[u][u]
        if diag == 0:
            raise ArithmeticError("singular matching system; implementation bug")
        solution.append(rhs / diag)
    poly = UniPoly(q, solution)
    genus: tuple[int, int] | None = None
    if params is not None:
        genus = (params.genus, params.genus_dual)
    return ZetaPolynomial(q=q, poly=poly, genus_data=genus)


def _laurent_to_poly(q: int, terms: dict[int, QuadExt]) -> UniPoly:
    if any(e < 0 and terms[e] for e in terms):
        bad = sorted(e for e in terms if e < 0 and terms[e])
        raise ValueError(f"negative powers survive (exponents {bad}); inconsistent parameters")
    top = max((e for e in terms if terms[e]), default=0)
    coeffs = [QuadExt(q, 0)] * (top + 1)
    for e, c in terms.items():
        if c:
            coeffs[e] = coeffs[e] + c
    return UniPoly(q, coeffs)


def dual_zeta(Z: ZetaPolynomial, params: CodeParams) -> ZetaPolynomial:
    """The dual's zeta polynomial: P(1/(qT)) q^g T^{g+g_perp}."""
    if Z.q != params.q:
        raise ValueError("zeta base does not match parameters")
    g, gp = params.genus, params.genus_dual
    P = Z.poly
    if P.degree > g + gp:
        raise ValueError(f"deg P = {P.degree} exceeds g + g_perp = {g + gp}")
    terms: dict[int, QuadExt] = {}
    for i, c in enumerate(P.coeffs):
        if c:
            e = g + gp - i
            terms[e] = terms.get(e, QuadExt(params.q, 0)) + c * Fraction(1, params.q) ** (i - g)
    poly = _laurent_to_poly(params.q, terms)
    dp = params.dual()
    return ZetaPolynomial(q=params.q, poly=poly, genus_data=(dp.genus, dp.genus_dual))


def invariant_zeta(Z: ZetaPolynomial, params: CodeParams) -> ZetaPolynomial:
    """Zeta polynomial of the invariantized enumerator:

        T^{max(0, d-d_perp)} / (1 + q^{k-n/2})
            * { P(T) + q^{n/2+1-d} P(1/(qT)) T^{n+2-2d} }.

    The result has degree n + 2 - 2*min(d, d_perp) and satisfies the
    functional equation with g-tilde = n/2 + 1 - min(d, d_perp).
    """
    if Z.q != params.q:
        raise ValueError("zeta base does not match parameters")
    q, n, d, dp = params.q, params.n, params.d, params.d_perp
    P = Z.poly
    if P.degree != params.genus + params.genus_dual:
        raise ValueError(
            f"deg P = {P.degree}, expected g + g_perp = "
            f"{params.genus + params.genus_dual}"
        )
    shift = max(0, d - dp)
    terms: dict[int, QuadExt] = {}
    for i, c in enumerate(P.coeffs):
        if not c:
            continue
        e1 = i + shift
        terms[e1] = terms.get(e1, QuadExt(q, 0)) + c
        # q^{n/2+1-d} * p_i q^{-i} T^{n+2-2d-i}, shifted
        e2 = n + 2 - 2 * d - i + shift
        factor = half_power(q, Fraction(n, 2) + 1 - d - i)
        terms[e2] = terms.get(e2, QuadExt(q, 0)) + c * factor
    denom = QuadExt(q, 1) + half_power(q, Fraction(2 * params.k - n, 2))
    poly = _laurent_to_poly(q, terms).scale(denom.inverse())
    g_tilde = Fraction(n, 2) + 1 - min(d, dp)
    if poly.degree != 2 * g_tilde:
        raise ArithmeticError("invariant zeta degree law violated; implementation bug")
    return ZetaPolynomial(q=q, poly=poly, genus_data=g_tilde)


def mds_invariant_zeta(n: int, d: int, q: int) -> ZetaPolynomial:
    """Closed form (1 + q^{n/2+1-d} T^{n+2-2d}) / (1 + q^{k-n/2}) with k = n+1-d.

    Valid for 2 <= d <= (n+1)/2; at d = n/2 + 1 the polynomial degenerates
    to a constant and is rejected.  All roots lie on |T| = q^{-1/2}.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 2 <= d <= (n + 1) // 2:
        raise ValueError(f"need 2 <= d <= (n+1)/2, got d={d}, n={n}")
    k = n + 1 - d
    denom = QuadExt(q, 1) + half_power(q, Fraction(2 * k - n, 2))
    lead = half_power(q, Fraction(n, 2) + 1 - d)
    coeffs = [QuadExt(q, 0)] * (n + 3 - 2 * d)
    coeffs[0] = QuadExt(q, 1)
    coeffs[n + 2 - 2 * d] = lead
    poly = UniPoly(q, coeffs).scale(denom.inverse())
    g_tilde = Fraction(n, 2) + 1 - d
    return ZetaPolynomial(q=q, poly=poly, genus_data=g_tilde)


def _simplex_nd(r: int, q: int) -> tuple[int, int]:
    if r < 3 or q < 2:
        raise ValueError(f"need r >= 3 and q >= 2, got r={r}, q={q}")
    return (q**r - 1) // (q - 1), q ** (r - 1)


def simplex_scale(r: int, q: int) -> Fraction:
    """The normalizing constant n / C(n, q^{r-1}) of the simplex zeta."""
    n, d = _simplex_nd(r, q)
    return Fraction(n, binomial(n, d))


def simplex_zeta_closed(r: int, q: int) -> ZetaPolynomial:
    """Closed form of the simplex zeta:

        N * [1 + sum_{j=1}^{n-d-1} (C(j+d-1, d-1) - q C(j+d-2, d-1)) T^j]

    with N = n / C(n, q^{r-1}).  The bracket is the series expansion of
    (1-qT)/(1-T)^d, whose T^{n-d} coefficient vanishes identically, so the
    degree is n - d - 1.
    """
    n, d = _simplex_nd(r, q)
    scale = simplex_scale(r, q)
    coeffs: list[Fraction] = [Fraction(1)]
    for j in range(1, n - d):
        coeffs.append(
            Fraction(binomial(j + d - 1, d - 1) - q * binomial(j + d - 2, d - 1))
        )
    poly = UniPoly(q, coeffs).scale(scale)
    params = CodeParams(n=n, k=r, d=d, d_perp=3, q=q)
    return ZetaPolynomial(q=q, poly=poly, genus_data=(params.genus, params.genus_dual))


def hamming_invariant_zeta_closed(r: int, q: int) -> ZetaPolynomial:
    """Invariant zeta of the simplex/Hamming pair, assembled from two explicit sums.

    The positive part F1 and negative part F2 are

        F1 = sum_{i=0}^{n-d-1} C(n-i-2, d-1) q^{i+2-n/2} T^i
           + sum_{i=d-3}^{n-4} C(i+2, d-1) T^i,
        F2 = sum_{i=0}^{n-d-2} C(n-i-3, d-1) q^{i+2-n/2} T^i
           + sum_{i=d-2}^{n-4} C(i+1, d-1) T^i,

    and the result is N/(1 + q^{r-n/2}) * (F1 - q F2), with n, d the simplex
    length and distance.
    """
    F1, F2 = hamming_bracket_parts(r, q)
    n, _ = _simplex_nd(r, q)
    scale = simplex_scale(r, q)
    denom = QuadExt(q, 1) + half_power(q, Fraction(2 * r - n, 2))
    poly = (F1 - F2.scale(q)).scale(denom.inverse() * scale)
    g_tilde = Fraction(n, 2) + 1 - 3
    return ZetaPolynomial(q=q, poly=poly, genus_data=g_tilde)


def hamming_bracket_parts(r: int, q: int) -> tuple[UniPoly, UniPoly]:
    """The two sums F1, F2 whose combination F1 - q*F2 gives the invariant zeta."""
    n, d = _simplex_nd(r, q)
    zero = QuadExt(q, 0)
    f1 = [zero] * (n - 3)
    f2 = [zero] * (n - 3)
    for i in range(n - d):
        f1[i] = f1[i] + binomial(n - i - 2, d - 1) * half_power(q, Fraction(2 * i + 4 - n, 2))
    for i in range(d - 3, n - 3):
        f1[i] = f1[i] + binomial(i + 2, d - 1)
    for i in range(n - d - 1):
        f2[i] = f2[i] + binomial(n - i - 3, d - 1) * half_power(q, Fraction(2 * i + 4 - n, 2))
    for i in range(d - 2, n - 3):
        f2[i] = f2[i] + binomial(i + 1, d - 1)
    return UniPoly(q, f1), UniPoly(q, f2)


def functional_equation_check(Z: ZetaPolynomial, genus: Fraction | int) -> bool:
    """Exact check that P(T) - q^g T^{2g} P(1/(qT)) is the zero polynomial.

    Requires 2g = deg P; g may be a half-integer, in which case q^{g-i} is
    taken through half_power so the comparison stays exact.
    """
    g = Fraction(genus)
    P = Z.poly
    if 2 * g != P.degree:
        raise ValueError(f"2g = {2 * g} does not match deg P = {P.degree}")
    m = P.degree
    return all(P[m - i] == P[i] * half_power(Z.q, g - i) for i in range(m + 1))
