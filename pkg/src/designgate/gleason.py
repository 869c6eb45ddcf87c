"""Extremal weight enumerators of binary doubly even self-dual codes.

Every weight enumerator of a doubly even self-dual code of length n (n a
multiple of 8) is an integer combination of the products

    g1^((n - 24j)/8) * g2^j,   0 <= j <= floor(n/24),

where g1 = x^8 + 14 x^4 y^4 + y^8 and g2 = x^4 y^4 (x^4 - y^4)^4.  The
*extremal* enumerator is the unique combination with A_0 = 1 and
A_4 = A_8 = ... = A_{4 floor(n/24)} = 0; its minimum nonzero weight is
4*floor(n/24) + 4.

Because every exponent involved is a multiple of 4 and the polynomials are
homogeneous of degree n, a polynomial is fully described by the sequence of
coefficients of y^{4i} x^{n-4i}.  Internally we therefore work with plain
coefficient lists over the variable z = y^4/x^4:

    g1 / x^8  -> 1 + 14 z + z^2        (PHI)
    g2 / x^24 -> z (1 - z)^4           (PSI)

Each basis element j has leading z-term z^j, so forcing A_0, A_4, ...,
A_{4 floor(n/24)} makes the linear system for the combination unit
triangular: the combination is found by one pass of forward elimination.
The block counts needed by the code-family scans only require the prefix
of the series up to z^{floor(n/24)+2}, so the elimination is run on
truncated series; full enumerators use the same routine untruncated.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

# Largest family length the scans ever request: 24*163 + 16.
LENGTH_CAP = 24 * 163 + 16

_PHI = (1, 14, 1)
_PSI = (0, 1, -4, 6, -4, 1)

# Truncation used by the shared power table; covers the prefix
# floor(n/24) + 2 for every n up to LENGTH_CAP, with slack.
_TABLE_TRUNC = 172


def _mul(a: list[int], b, trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    for i, ai in enumerate(a):
        if i > trunc:
            break
        if ai:
            for j, bj in enumerate(b):
                if i + j > trunc:
                    break
                if bj:
                    out[i + j] += ai * bj
    return out


def _div(a: list[int], b, trunc: int) -> list[int]:
    """Truncated power-series division a/b; requires b[0] == 1 (exact)."""
    assert b[0] == 1
    out = [0] * (trunc + 1)
    rem = list(a) + [0] * (trunc + 1 - len(a))
    for i in range(trunc + 1):
        c = rem[i]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                if j and bj and i + j <= trunc:
                    rem[i + j] -= c * bj
    return out


_PHI3 = _mul(_mul(list(_PHI), _PHI, 6), _PHI, 6)

_phi_table: list[list[int]] = [[1]]
_phi_lock = threading.Lock()


def _phi_power(a: int, trunc: int) -> list[int]:
    """PHI^a truncated to z^trunc.  Small truncations come from a shared
    table grown incrementally; larger requests use binary powering."""
    if trunc <= _TABLE_TRUNC:
        with _phi_lock:
            while len(_phi_table) <= a:
                _phi_table.append(_mul(_phi_table[-1], _PHI, _TABLE_TRUNC))
            row = _phi_table[a]
        return row[: trunc + 1] + [0] * max(0, trunc + 1 - len(row))
    result = [1]
    base = list(_PHI)
    e = a
    while e:
        if e & 1:
            result = _mul(result, base, trunc)
        e >>= 1
        if e:
            base = _mul(base, base, trunc)
    return result + [0] * (trunc + 1 - len(result))


def _validate_length(n: int) -> None:
    if n % 8 != 0 or n < 8:
        raise ValueError(f"length must be a positive multiple of 8, got {n}")
    if n > LENGTH_CAP:
        raise ValueError(f"length {n} exceeds the supported cap {LENGTH_CAP}")


_prefix_cache: dict[int, list[int]] = {}
_prefix_lock = threading.Lock()


def _extremal_prefix(n: int, trunc: int) -> list[int]:
    """Coefficients [A_0, A_4, A_8, ...] of the extremal enumerator of
    length n, up to weight 4*trunc.  The unit-triangular elimination: start
    from basis element 0 (coefficient forced to 1 by A_0 = 1) and cancel
    each A_{4j} in turn with basis element j."""
    _validate_length(n)
    with _prefix_lock:
        got = _prefix_cache.get(n)
    if got is not None and len(got) >= trunc + 1:
        return got[: trunc + 1]
    nz = n // 24  # number of forced-zero low coefficients; min weight 4*nz + 4
    w = _phi_power(n // 8, trunc)
    basis = list(w)
    for j in range(1, min(nz, trunc) + 1):
        basis = _div(_mul(basis, _PSI, trunc), _PHI3, trunc)
        c = -w[j]
        if c:
            for i in range(j, trunc + 1):
                w[i] += c * basis[i]
    if trunc <= _TABLE_TRUNC:
        with _prefix_lock:
            kept = _prefix_cache.get(n)
            if kept is None or len(kept) < len(w):
                _prefix_cache[n] = w
    return w


@dataclass(frozen=True)
class HomogeneousPoly:
    """Homogeneous polynomial in x, y of the given degree, stored sparsely
    as a map from y-exponent to coefficient (x-exponent is degree - y-exp)."""

    degree: int
    coeffs: dict[int, int]

    def __post_init__(self):
        for e, c in self.coeffs.items():
            if not 0 <= e <= self.degree:
                raise ValueError(f"y-exponent {e} outside [0, {self.degree}]")
            if isinstance(c, float):
                raise TypeError("floating point coefficient")

    def coefficient(self, y_exp: int) -> int:
        return self.coeffs.get(y_exp, 0)

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return HomogeneousPoly(self.degree + other.degree, {e: c for e, c in out.items() if c})

    def __pow__(self, k: int) -> "HomogeneousPoly":
        out = HomogeneousPoly(0, {0: 1})
        for _ in range(k):
            out = out * self
        return out


GLEASON_G1 = HomogeneousPoly(8, {0: 1, 4: 14, 8: 1})
GLEASON_G2 = HomogeneousPoly(24, {4: 1, 8: -4, 12: 6, 16: -4, 20: 1})


def gleason_basis(n: int) -> list[HomogeneousPoly]:
    """Basis g1^((n-24j)/8) * g2^j for 0 <= j <= floor(n/24), in order of j."""
    _validate_length(n)
    out = []
    g1p = HomogeneousPoly(0, {0: 1})
    g1_powers = [g1p]
    for _ in range(n // 8):
        g1_powers.append(g1_powers[-1] * GLEASON_G1)
    g2p = HomogeneousPoly(0, {0: 1})
    for j in range(n // 24 + 1):
        out.append(g1_powers[(n - 24 * j) // 8] * g2p)
        g2p = g2p * GLEASON_G2
    return out


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact coefficient list A_0..A_n of a length-n weight enumerator."""

    n: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.n + 1:
            raise ValueError("coefficient list must have n + 1 entries")

    def coefficient(self, w: int) -> int:
        return self.coefficients[w]

    def min_nonzero_weight(self) -> int:
        for w in range(1, self.n + 1):
            if self.coefficients[w]:
                return w
        raise ValueError("no nonzero weight")

    def negative_weights(self) -> list[int]:
        """Weights with negative coefficients (a nonempty list means no code
        of this length attains the enumerator)."""
        return [w for w, a in enumerate(self.coefficients) if a < 0]


def extremal_weight_enumerator(n: int) -> WeightEnumerator:
    """The extremal enumerator of length n: the unique basis combination with
    A_0 = 1 and A_4 = ... = A_{4 floor(n/24)} = 0, solved exactly."""
    prefix = _extremal_prefix(n, n // 4)
    coeffs = [0] * (n + 1)
    for i, a in enumerate(prefix):
        coeffs[4 * i] = a
    return WeightEnumerator(n, tuple(coeffs))


def min_weight_count(n: int) -> int:
    """Block count of the minimum-weight support design: the coefficient
    A_{4 floor(n/24) + 4} of the extremal enumerator."""
    nz = n // 24
    b = _extremal_prefix(n, nz + 2)[nz + 1]
    if b <= 0:
        raise ValueError(
            f"extremal enumerator of length {n} has nonpositive minimum-weight "
            f"count {b}; the family degenerates here"
        )
    return b


def next_weight_count(n: int) -> int:
    """Coefficient at the next weight above the minimum (weight 4*floor(n/24) + 8)."""
    nz = n // 24
    return _extremal_prefix(n, nz + 2)[nz + 2]


def solve_basis_combination(n: int) -> list[Fraction]:
    """Coefficients c_j of the extremal combination in the Gleason basis,
    solved over the rationals against the explicit basis polynomials.

    Slower than the series route (it materializes the basis); used to
    cross-check the two implementations on moderate lengths.
    """
    basis = gleason_basis(n)
    targets = [1] + [0] * (n // 24)
    cs: list[Fraction] = []
    for i, t in enumerate(targets):
        acc = Fraction(t)
        for j, c in enumerate(cs):
            acc -= c * basis[j].coefficient(4 * i)
        lead = basis[i].coefficient(4 * i)
        cs.append(acc / lead)
    return cs
