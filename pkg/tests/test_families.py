from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from designgate.combinat import binom
from designgate.families import (
    CodeFamily,
    DesignParams,
    admissible_scan,
    apply_strengthening,
    block_count,
    check_lambda_levels,
    design_params,
    extend_lambda,
    lambda_at,
    lambda_base,
    lambda_vector,
)

M_LEMMA1 = [5, 8, 15, 19, 35, 40, 41, 42, 50, 51, 52, 55, 57, 59, 60, 63, 65,
            74, 75, 76, 80, 86, 90, 93, 100, 101, 104, 105, 107, 118, 125, 127,
            129, 130, 135, 143, 144, 150, 151]


def test_family_parameters():
    f = CodeFamily(2, 0)
    assert (f.n, f.k, f.am_strength, f.m_max) == (48, 12, 5, 153)
    g = CodeFamily(3, 2)
    assert (g.n, g.k, g.am_strength, g.m_max) == (88, 16, 1, 163)
    assert g.n % 8 == 0 and g.k % 4 == 0


def test_family_validation():
    with pytest.raises(ValueError):
        CodeFamily(1, 3)
    with pytest.raises(ValueError):
        CodeFamily(154, 0)
    with pytest.raises(ValueError):
        CodeFamily(0, 0)  # length 0
    CodeFamily(0, 1)  # length 8 base case is fine


def test_lambda_base_closed_form():
    assert lambda_base(CodeFamily(1, 0)) == 1
    assert lambda_base(CodeFamily(2, 0)) == binom(8, 1) == 8
    # length-8 base case: b = 14 minimum-weight words, lambda_3 = 1
    assert lambda_base(CodeFamily(0, 1)) == 1


def test_extend_lambda_values():
    f8 = CodeFamily(8, 0)
    assert extend_lambda(f8, 6) == 2092128
    assert extend_lambda(f8, 5) == binom(38, 7)
    f1 = CodeFamily(1, 0)
    assert extend_lambda(f1, 8) == Fraction(1, 969)
    # any m: level-5 value is the closed form
    for m in (3, 17, 90):
        assert extend_lambda(CodeFamily(m, 0), 5) == binom(5 * m - 2, m - 1)


def test_extend_lambda_matches_lambda_at():
    for m, r in [(4, 0), (9, 1), (12, 2)]:
        f = CodeFamily(m, r)
        for t in range(f.am_strength, f.am_strength + 4):
            assert extend_lambda(f, t) == lambda_at(f, t)


def test_lambda_vector_golay():
    d = DesignParams(v=24, k=8, t=5, lambda_t=Fraction(1), self_orthogonal=True)
    vec = lambda_vector(d)
    assert vec == [759, 253, 77, 21, 5, 1]


def test_lambda_vector_degenerate_t0():
    d = DesignParams(v=10, k=4, t=0, lambda_t=Fraction(7))
    assert lambda_vector(d) == [7]


def test_lambda_vector_m5_family():
    d = design_params(CodeFamily(5, 0), 5)
    vec = lambda_vector(d)
    assert vec[-1] == binom(23, 4) == 8855


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=2))
def test_lambda_counting_identity(m, r):
    # lambda_i * C(v, i) == b * C(k, i) for every level of the design
    f = CodeFamily(m, r)
    d = design_params(f, f.am_strength)
    vec = lambda_vector(d)
    b = vec[0]
    assert b == block_count(f)
    for i, lam in enumerate(vec):
        assert lam * binom(f.n, i) == b * binom(f.k, i)


@given(st.integers(min_value=1, max_value=25), st.integers(min_value=0, max_value=2))
def test_lambda_vector_nonincreasing(m, r):
    f = CodeFamily(m, r)
    vec = lambda_vector(design_params(f, f.am_strength + 2))
    assert all(a >= b for a, b in zip(vec, vec[1:]))


def test_design_params_validation():
    with pytest.raises(ValueError):
        DesignParams(v=10, k=11, t=2, lambda_t=Fraction(1))
    with pytest.raises(ValueError):
        DesignParams(v=10, k=5, t=2, lambda_t=Fraction(1), self_orthogonal=True)


def test_apply_strengthening():
    f0 = CodeFamily(8, 0)
    assert apply_strengthening(f0, 6) == 7
    assert apply_strengthening(f0, 7) == 7
    assert apply_strengthening(f0, 8) == 8
    f1 = CodeFamily(8, 1)
    assert apply_strengthening(f1, 4) == 5
    f2 = CodeFamily(8, 2)
    assert apply_strengthening(f2, 2) == 3
    assert apply_strengthening(f2, 4) == 4
    with pytest.raises(ValueError):
        apply_strengthening(f0, 4)


@given(st.integers(min_value=5, max_value=12))
def test_apply_strengthening_idempotent(t):
    f = CodeFamily(8, 0)
    assert apply_strengthening(f, apply_strengthening(f, t)) == apply_strengthening(f, t)


def test_admissible_scan_lemma1():
    assert admissible_scan(0, 6) == M_LEMMA1


def test_admissible_scan_restricted_to_lambda8():
    got = [m for m in M_LEMMA1
           if not check_lambda_levels(CodeFamily(m, 0), range(6, 9))]
    assert got == [8, 42, 63, 75, 130]


def test_admissible_scan_low_range_empty():
    assert admissible_scan(0, 6, 1, 4) == []


def test_admissible_scan_jobs_deterministic():
    assert admissible_scan(0, 6, 1, 60, jobs=3) == admissible_scan(0, 6, 1, 60)


def test_admissible_scan_range_validation():
    with pytest.raises(ValueError):
        admissible_scan(0, 6, 10, 5)
    with pytest.raises(ValueError):
        admissible_scan(0, 6, 1, 200)
