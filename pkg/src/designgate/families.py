"""Code families and hypothetical design parameters.

Three families of extremal binary doubly even self-dual codes are modeled,
indexed by r in {0, 1, 2}:

    r = 0:  [24m,      12m,     4m+4]   Assmus-Mattson strength 5, m <= 153
    r = 1:  [24m + 8,  12m + 4, 4m+4]   strength 3,               m <= 158
    r = 2:  [24m + 16, 12m + 8, 4m+4]   strength 1,               m <= 163

The support design of the minimum weight has the code length as point count,
4m + 4 as block size, and as many blocks as minimum-weight codewords.  Its
level-i block counts lambda_i = b * C(k, i) / C(v, i) are exact rationals;
a hypothesis "this design is a t-design" forces lambda_i to be a nonnegative
integer for every i <= t, which is what :func:`admissible_scan` checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binom
from . import gleason

AM_STRENGTHS = (5, 3, 1)
M_MAXES = (153, 158, 163)
FAMILY_LABELS = ("24m", "24m+8", "24m+16")

# Offset lengths above this are refused by the gates; nothing of interest
# lives beyond strength 12 and symmetric-polynomial growth is steep.
T_CAP = 12


class NonIntegralLambdaError(ValueError):
    """A design hypothesis already fails at the lambda level."""

    def __init__(self, family: "CodeFamily", levels: list[tuple[int, Fraction]]):
        self.family = family
        self.levels = levels
        detail = ", ".join(f"lambda_{i} = {v}" for i, v in levels)
        super().__init__(f"non-integral block counts for {family}: {detail}")


@dataclass(frozen=True)
class CodeFamily:
    """One member of the three extremal-code families: family index r and
    parameter m.  m = 0 is accepted for r >= 1 (length 8 and 16 base cases);
    scans run over 1 <= m <= m_max."""

    m: int
    r: int

    def __post_init__(self):
        if self.r not in (0, 1, 2):
            raise ValueError(f"family index must be 0, 1 or 2, got {self.r}")
        if not 0 <= self.m <= self.m_max:
            raise ValueError(f"m = {self.m} outside [0, {self.m_max}] for family {self.label}")
        if self.n < 8:
            raise ValueError("length below 8")

    @property
    def n(self) -> int:
        return 24 * self.m + 8 * self.r

    @property
    def k(self) -> int:
        return 4 * self.m + 4

    @property
    def am_strength(self) -> int:
        return AM_STRENGTHS[self.r]

    @property
    def m_max(self) -> int:
        return M_MAXES[self.r]

    @property
    def label(self) -> str:
        return FAMILY_LABELS[self.r]

    def __str__(self) -> str:
        return f"[{self.n}, {self.n // 2}, {self.k}] (family {self.label}, m={self.m})"


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a hypothesized t-(v, k, lambda_t) design."""

    v: int
    k: int
    t: int
    lambda_t: Fraction
    self_orthogonal: bool = False

    def __post_init__(self):
        if not 0 <= self.t <= self.k <= self.v:
            raise ValueError(f"need 0 <= t <= k <= v, got t={self.t} k={self.k} v={self.v}")
        if self.lambda_t < 0:
            raise ValueError("lambda_t must be nonnegative")
        if self.self_orthogonal and self.k % 2:
            raise ValueError("self-orthogonal design needs even block size")

    def is_realizable_level(self) -> bool:
        return Fraction(self.lambda_t).denominator == 1


def block_count(f: CodeFamily) -> int:
    """Number of blocks b of the minimum-weight support design.

    For r = 0 this follows from the closed form lambda_5 = C(5m-2, m-1);
    for r = 1, 2 it is the minimum-weight coefficient of the extremal
    enumerator (there is no closed form).
    """
    if f.r == 0:
        lam5 = binom(5 * f.m - 2, f.m - 1)
        b = Fraction(lam5 * binom(f.n, 5), binom(f.k, 5))
        if b.denominator != 1 or b <= 0:
            raise ValueError(f"degenerate block count for {f}")
        return int(b)
    return gleason.min_weight_count(f.n)


def lambda_at(f: CodeFamily, i: int) -> Fraction:
    """lambda_i = b * C(k, i) / C(v, i) of the minimum-weight support design."""
    if not 0 <= i <= f.k:
        raise ValueError(f"level {i} outside [0, {f.k}]")
    return Fraction(block_count(f) * binom(f.k, i), binom(f.n, i))


def lambda_base(f: CodeFamily) -> Fraction:
    """lambda at the family's Assmus-Mattson strength: C(5m-2, m-1) for
    r = 0, enumerator-derived b * C(k, s) / C(v, s) for r = 1, 2."""
    if f.r == 0:
        return Fraction(binom(5 * f.m - 2, f.m - 1))
    return lambda_at(f, f.am_strength)


def extend_lambda(f: CodeFamily, t: int) -> Fraction:
    """lambda_t of the hypothesized t-design extending the base design:
    lambda_base * C(k-s, t-s) / C(v-s, t-s) with s the base strength."""
    s = f.am_strength
    if not s <= t <= f.k:
        raise ValueError(f"need {s} <= t <= {f.k}, got t={t}")
    return lambda_base(f) * Fraction(binom(f.k - s, t - s), binom(f.n - s, t - s))


def lambda_vector(d: DesignParams) -> list[Fraction]:
    """[lambda_0, ..., lambda_t] of a t-(v, k, lambda_t) design, via
    lambda_i = lambda_t * C(v-i, t-i) / C(k-i, t-i)."""
    lam_t = Fraction(d.lambda_t)
    return [
        lam_t * Fraction(binom(d.v - i, d.t - i), binom(d.k - i, d.t - i))
        for i in range(d.t + 1)
    ]


def design_params(f: CodeFamily, t: int, self_orthogonal: bool = True) -> DesignParams:
    """The t-design hypothesis on the minimum-weight support design of f.

    Minimum-weight supports of a doubly even self-dual code pairwise meet in
    an even number of points, hence self_orthogonal defaults to True.
    """
    return DesignParams(v=f.n, k=f.k, t=t, lambda_t=extend_lambda(f, t),
                        self_orthogonal=self_orthogonal)


def apply_strengthening(f: CodeFamily, t: int) -> int:
    """Effective strength of a t-design hypothesis on f's support design.

    The families' base strengths are odd.  A design one level above the base
    strength (even t = s + 1) is automatically a (t + 1)-design, so the
    hypothesis strengthens to t + 1 exactly there; other strengths are
    returned unchanged.
    """
    if t < f.am_strength:
        raise ValueError(f"t = {t} below base strength {f.am_strength}")
    return t + 1 if t == f.am_strength + 1 else t


def check_lambda_levels(f: CodeFamily, levels) -> list[tuple[int, Fraction]]:
    """Return the (level, value) pairs among ``levels`` whose lambda is not a
    nonnegative integer (empty list means all pass)."""
    bad = []
    for i in levels:
        v = lambda_at(f, i)
        if v.denominator != 1 or v < 0:
            bad.append((i, v))
    return bad


def scan_levels(f: CodeFamily, t: int) -> range:
    """The lambda levels a strength-t scan must check: everything above the
    base strength up to the effective (strengthened) strength."""
    return range(f.am_strength + 1, apply_strengthening(f, t) + 1)


def _scan_one(args) -> tuple[int, bool]:
    r, t, m = args
    f = CodeFamily(m, r)
    return m, not check_lambda_levels(f, scan_levels(f, t))


def admissible_scan(r: int, t: int, m_lo: int | None = None, m_hi: int | None = None,
                    jobs: int = 1) -> list[int]:
    """All m in [m_lo, m_hi] for which every lambda level required by a
    strength-t hypothesis is a nonnegative integer, ascending.

    Defaults to the family's full range [1, m_max].  ``jobs`` > 1 fans the
    range out over worker processes; the result is merged in ascending m
    order and does not depend on the schedule.
    """
    m_max = M_MAXES[r]
    if m_lo is None:
        m_lo = 1
    if m_hi is None:
        m_hi = m_max
    if not 1 <= m_lo <= m_hi <= m_max:
        raise ValueError(f"need 1 <= m_lo <= m_hi <= {m_max}, got [{m_lo}, {m_hi}]")
    tasks = [(r, t, m) for m in range(m_lo, m_hi + 1)]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_scan_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_scan_one(task) for task in tasks]
    return [m for m, ok in sorted(results) if ok]
