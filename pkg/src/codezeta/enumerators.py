"""Weight enumerators: constructors, the MacWilliams transform and invariantization.

A weight enumerator is the homogeneous polynomial W(x, y) = x^n + sum_{i>=d}
A_i x^{n-i} y^i, stored as its coefficient vector A_0..A_n over Q(sqrt(q)).
Three code families are built in (MDS, simplex/Hamming, Golay); arbitrary
enumerators can be loaded from JSON fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import QuadExt, binomial, half_power


@dataclass(frozen=True)
class CodeParams:
    """The (n, k, d, d_perp, q) bundle tying an enumerator to its dual."""

    n: int
    k: int
    d: int
    d_perp: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if not (1 <= self.k <= self.n - 1):
            raise ValueError(f"need 1 <= k <= n-1, got k={self.k}, n={self.n}")
        if self.d < 2 or self.d_perp < 2:
            raise ValueError("both minimum distances must be >= 2")
        if self.genus < 0 or self.genus_dual < 0:
            raise ValueError(
                f"negative genus: g={self.genus}, g_perp={self.genus_dual}"
            )

    @property
    def genus(self) -> int:
        return self.n + 1 - self.k - self.d

    @property
    def genus_dual(self) -> int:
        return self.k + 1 - self.d_perp

    def dual(self) -> "CodeParams":
        return CodeParams(self.n, self.n - self.k, self.d_perp, self.d, self.q)


class WeightEnumerator:
    """Coefficient vector of a homogeneous enumerator with leading term x^n."""

    __slots__ = ("q", "n", "A")

    def __init__(self, q: int, coeffs: Iterable[QuadExt | int | Fraction]) -> None:
        A = tuple(c if isinstance(c, QuadExt) else QuadExt(q, c) for c in coeffs)
        if len(A) < 2:
            raise ValueError("an enumerator needs degree n >= 1")
        for c in A:
            if c.q != q:
                raise ValueError("coefficient base mismatch")
        if A[0] != 1:
            raise ValueError(f"leading coefficient must be 1, got {A[0]}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", len(A) - 1)
        object.__setattr__(self, "A", A)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("WeightEnumerator is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return self.q == other.q and self.A == other.A

    def __hash__(self) -> int:
        return hash((self.q, self.A))

    @property
    def min_distance(self) -> int:
        """Smallest i >= 1 with A_i != 0."""
        for i in range(1, self.n + 1):
            if self.A[i]:
                return i
        raise ValueError("enumerator is x^n alone; no minimum distance")

    def evaluate(self, x: QuadExt | int, y: QuadExt | int) -> QuadExt:
        xq = x if isinstance(x, QuadExt) else QuadExt(self.q, x)
        yq = y if isinstance(y, QuadExt) else QuadExt(self.q, y)
        total = QuadExt(self.q, 0)
        for i, c in enumerate(self.A):
            if c:
                total = total + c * xq ** (self.n - i) * yq**i
        return total

    def __repr__(self) -> str:
        return f"WeightEnumerator(q={self.q}, A={[str(c) for c in self.A]})"


def min_distance(W: WeightEnumerator) -> int:
    return W.min_distance


def macwilliams_transform(W: WeightEnumerator) -> tuple[QuadExt, ...]:
    """Coefficient vector of W((x+(q-1)y)/sqrt(q), (x-y)/sqrt(q)).

    The result is a raw vector: its leading entry is generally not 1 (for a
    code it equals q^{k-n/2}), so it is not wrapped as a WeightEnumerator.
    """
    q, n = W.q, W.n
    scale = half_power(q, Fraction(-n, 2))
    qm1 = q - 1
    out = [QuadExt(q, 0)] * (n + 1)
    for i, coeff in enumerate(W.A):
        if not coeff:
            continue
        # (x + (q-1)y)^(n-i) * (x - y)^i, coefficient of x^(n-j) y^j
        for j in range(n + 1):
            acc = 0
            for b in range(max(0, j - (n - i)), min(i, j) + 1):
                acc += (
                    binomial(n - i, j - b)
                    * qm1 ** (j - b)
                    * binomial(i, b)
                    * (-1) ** b
                )
            if acc:
                out[j] = out[j] + coeff * acc
    return tuple(c * scale for c in out)


def is_invariant(W: WeightEnumerator) -> bool:
    """True iff W is fixed exactly by the MacWilliams transform."""
    return macwilliams_transform(W) == W.A


def invariantize(
    W: WeightEnumerator, W_dual: WeightEnumerator, params: CodeParams
) -> WeightEnumerator:
    """The invariant combination (W + q^{k-n/2} W_dual) / (1 + q^{k-n/2}).

    The pair is validated first: the MacWilliams identity
    transform(W) = q^{k-n/2} W_dual must hold exactly, otherwise the
    combination is meaningless.
    """
    q, n = params.q, params.n
    if W.q != q or W_dual.q != q or W.n != n or W_dual.n != n:
        raise ValueError("enumerators do not match the given parameters")
    if W.min_distance != params.d or W_dual.min_distance != params.d_perp:
        raise ValueError("minimum distances do not match the given parameters")
    factor = half_power(q, Fraction(2 * params.k - n, 2))
    transformed = macwilliams_transform(W)
    expected = tuple(c * factor for c in W_dual.A)
    if transformed != expected:
        raise ValueError("MacWilliams identity violated: not a dual pair")
    denom = QuadExt(q, 1) + factor
    combined = [(a + factor * b) / denom for a, b in zip(W.A, W_dual.A)]
    if combined[0] != 1:
        raise ValueError("leading coefficient cancelled")
    dmin = min(params.d, params.d_perp)
    if not combined[dmin]:
        raise ValueError("minimum-distance coefficient cancelled")
    return WeightEnumerator(q, combined)


def mds_enumerator(n: int, d: int, q: int) -> tuple[WeightEnumerator, CodeParams]:
    """MDS enumerator with A_i = C(n,i) * sum_j (-1)^j C(i,j) (q^{i-d+1-j} - 1).

    Negative A_i are allowed for q that is not a prime power ("virtual"
    enumerators).  Any 2 <= d <= n is accepted; the pairing bound
    d <= n/2 + 1 matters only when an invariant zeta is formed and is
    enforced there (the dual of a small-d enumerator legitimately has
    d_perp = n + 2 - d beyond that bound).
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 2 <= d <= n:
        raise ValueError(f"need 2 <= d <= n, got d={d}, n={n}")
    coeffs: list[int | Fraction] = [1] + [0] * n
    for i in range(d, n + 1):
        acc = 0
        for j in range(i - d + 1):
            acc += (-1) ** j * binomial(i, j) * (q ** (i - d + 1 - j) - 1)
        coeffs[i] = binomial(n, i) * acc
    params = CodeParams(n=n, k=n + 1 - d, d=d, d_perp=n + 2 - d, q=q)
    return WeightEnumerator(q, coeffs), params


def simplex_enumerator(r: int, q: int) -> tuple[WeightEnumerator, CodeParams]:
    """The one-weight enumerator x^n + (q^r - 1) x^{n - q^{r-1}} y^{q^{r-1}}."""
    if r < 2 or q < 2:
        raise ValueError(f"need r >= 2 and q >= 2, got r={r}, q={q}")
    n = (q**r - 1) // (q - 1)
    d = q ** (r - 1)
    coeffs: list[int] = [0] * (n + 1)
    coeffs[0] = 1
    coeffs[d] = q**r - 1
    params = CodeParams(n=n, k=r, d=d, d_perp=3, q=q)
    return WeightEnumerator(q, coeffs), params


def hamming_enumerator(r: int, q: int) -> tuple[WeightEnumerator, CodeParams]:
    """Dual of the simplex enumerator, via the MacWilliams identity.

    Computed exactly as q^{n/2-r} * transform(simplex); the result has
    leading coefficient 1 and minimum distance 3 for every q >= 2.
    """
    W, sp = simplex_enumerator(r, q)
    scale = half_power(q, Fraction(sp.n - 2 * r, 2))
    coeffs = tuple(c * scale for c in macwilliams_transform(W))
    params = sp.dual()
    return WeightEnumerator(q, coeffs), params


# Exact Golay weight distributions (binary [23,12,7] and ternary [11,6,5])
# and their duals, as {weight: count} tables.
_GOLAY_TABLES: dict[str, tuple[int, int, dict[int, int], CodeParams]] = {
    "g23": (
        2,
        23,
        {7: 253, 8: 506, 11: 1288, 12: 1288, 15: 506, 16: 253, 23: 1},
        CodeParams(n=23, k=12, d=7, d_perp=8, q=2),
    ),
    "g23_dual": (
        2,
        23,
        {8: 506, 12: 1288, 16: 253},
        CodeParams(n=23, k=11, d=8, d_perp=7, q=2),
    ),
    "g11": (
        3,
        11,
        {5: 132, 6: 132, 8: 330, 9: 110, 11: 24},
        CodeParams(n=11, k=6, d=5, d_perp=6, q=3),
    ),
    "g11_dual": (
        3,
        11,
        {6: 132, 9: 110},
        CodeParams(n=11, k=5, d=6, d_perp=5, q=3),
    ),
}

GOLAY_NAMES = tuple(_GOLAY_TABLES)


def golay_enumerator(which: str) -> tuple[WeightEnumerator, CodeParams]:
    """One of the Golay enumerators: g23, g11, g23_dual, g11_dual."""
    key = which.lower().replace("-", "_")
    if key not in _GOLAY_TABLES:
        raise ValueError(f"unknown Golay variant {which!r}; choose from {GOLAY_NAMES}")
    q, n, table, params = _GOLAY_TABLES[key]
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for weight, count in table.items():
        coeffs[weight] = count
    return WeightEnumerator(q, coeffs), params


def golay_pair(which: str) -> tuple[WeightEnumerator, WeightEnumerator, CodeParams]:
    """An enumerator together with its dual, parameters from the first."""
    key = which.lower().replace("-", "_")
    dual_key = key[: -len("_dual")] if key.endswith("_dual") else key + "_dual"
    W, params = golay_enumerator(key)
    W_dual, _ = golay_enumerator(dual_key)
    return W, W_dual, params


def enumerator_from_json(data: dict) -> tuple[WeightEnumerator, int | None]:
    """Load the fixture format {"q": int, "n": int, "A": [...], "k": int optional}.

    Coefficients may be canonical QuadExt strings or plain integers.
    Returns the enumerator and the optional dimension k.
    """
    try:
        q = data["q"]
        n = data["n"]
        raw = data["A"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"fixture is missing required field: {exc}") from exc
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"fixture q must be an integer >= 2, got {q!r}")
    if not isinstance(raw, Sequence) or isinstance(raw, (str, bytes)):
        raise ValueError("fixture A must be a list of coefficients")
    if len(raw) != n + 1:
        raise ValueError(f"fixture A has {len(raw)} entries, expected n+1 = {n + 1}")
    coeffs = []
    for item in raw:
        if isinstance(item, str):
            coeffs.append(QuadExt.parse(item, q))
        elif isinstance(item, int):
            coeffs.append(QuadExt(q, item))
        else:
            raise ValueError(f"coefficient {item!r} is not exact")
    k = data.get("k")
    if k is not None and not isinstance(k, int):
        raise ValueError(f"fixture k must be an integer, got {k!r}")
    return WeightEnumerator(q, coeffs), k


def enumerator_to_json(
    W: WeightEnumerator, params: CodeParams | None = None, k: int | None = None
) -> dict:
    """JSON form of an enumerator, compatible with the fixture format."""
    out: dict = {"q": W.q, "n": W.n}
    if params is not None:
        out["k"] = params.k
        out["d"] = params.d
        out["d_perp"] = params.d_perp
    else:
        if k is not None:
            out["k"] = k
        try:
            out["d"] = W.min_distance
        except ValueError:
            pass
    out["A"] = [str(c) for c in W.A]
    return out
