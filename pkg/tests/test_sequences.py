import math
from functools import lru_cache

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bhconst.sequences import (
    D_COMPLEX,
    D_REAL,
    ROUNDED,
    Family,
    ScalarField,
    SequenceSpec,
    block_of,
    c_complex,
    c_complex_t,
    c_real,
    c_real_t,
    closed_bound,
    closed_bound_coefficients,
    constant_table,
    d_complex_t,
    d_real_t,
    diff_bound,
    diff_coefficients,
    diff_coefficients_classical,
    exponent_E,
    littlewood_bilinear_constant,
    littlewood_t0,
    lower_bound,
    m_seq,
    partial_sum_bound,
    partial_sum_bounds,
    r_seq,
    r_array,
    r_seq_t,
    r_step,
    s_seq,
    verify_fundamental_lemma,
    verify_monotonicity,
    verify_reduction,
    verify_sandwich,
    x_term,
)
from bhconst.special_fn import DomainError, find_p0

mpmath.mp.dps = 40
REAL, COMPLEX = ScalarField.REAL, ScalarField.COMPLEX
SQRT2 = math.sqrt(2)


# Independent high-precision oracle for the Khinchine-product recursion.
def _a_real(p):
    p = mpmath.mpf(p)
    if p <= find_p0():
        return 2 ** (mpmath.mpf(1) / 2 - 1 / p)
    return mpmath.sqrt(2) * (mpmath.gamma((p + 1) / 2) / mpmath.sqrt(mpmath.pi)) ** (1 / p)


def _a_complex(p):
    p = mpmath.mpf(p)
    return mpmath.gamma((p + 2) / 2) ** (1 / p)


@lru_cache(maxsize=None)
def oracle_c(n, field, t=1):
    a = _a_real if field == "real" else _a_complex
    t = mpmath.mpf(t)
    if n == 1:
        return mpmath.mpf(1)
    if n % 2 == 0:
        p = 2 * n * t / ((n - 2) * t + 4)
        return a(p) ** (-mpmath.mpf(n) / 2) * oracle_c(n // 2, field, t)
    p_lo = 2 * (n - 1) * t / ((n - 3) * t + 4)
    p_hi = 2 * (n + 1) * t / ((n - 1) * t + 4)
    lo = a(p_lo) ** (-mpmath.mpf(n + 1) / 2) * oracle_c((n - 1) // 2, field, t)
    hi = a(p_hi) ** (-mpmath.mpf(n - 1) / 2) * oracle_c((n + 1) // 2, field, t)
    return lo ** (mpmath.mpf(n - 1) / (2 * n)) * hi ** (mpmath.mpf(n + 1) / (2 * n))


def test_ratio_constants():
    assert D_REAL == pytest.approx(float(mpmath.e ** (1 - mpmath.euler / 2) / mpmath.sqrt(2)), rel=1e-15)
    assert D_COMPLEX == pytest.approx(float(mpmath.e ** ((1 - mpmath.euler) / 2)), rel=1e-15)
    assert abs(D_REAL - 1.4403) < 5e-5


@pytest.mark.parametrize("n, k, j", [(2, 1, 1), (3, 2, 1), (4, 2, 2), (5, 3, 1), (8, 3, 4), (9, 4, 1)])
def test_block_of(n, k, j):
    pos = block_of(n)
    assert (pos.k, pos.j) == (k, j)


@given(st.integers(min_value=2, max_value=10**12))
def test_block_of_reconstructs_n(n):
    pos = block_of(n)
    assert 1 <= pos.j <= 2 ** (pos.k - 1)
    assert 2 ** (pos.k - 1) + pos.j == n


def test_c_real_hand_values():
    assert c_real(1) == 1.0
    assert c_real(2) == pytest.approx(SQRT2, rel=1e-15)
    assert c_real(4) == pytest.approx(2.0, rel=1e-15)


def test_c_complex_hand_values():
    assert c_complex(1) == 1.0
    assert c_complex(2) == pytest.approx(2 / math.sqrt(math.pi), rel=1e-15)
    assert c_complex(4) == pytest.approx(1.3155, abs=1e-4)


@pytest.mark.parametrize("field", ["real", "complex"])
def test_c_matches_mpmath_oracle(field):
    fn = c_real if field == "real" else c_complex
    for n in list(range(1, 80)) + [127, 128, 129, 1000, 1001]:
        assert fn(n) == pytest.approx(float(oracle_c(n, field)), rel=1e-12)


@given(st.integers(min_value=1, max_value=200), st.floats(min_value=1.0, max_value=1.99))
@settings(max_examples=60, deadline=None)
def test_c_t_matches_mpmath_oracle(n, t):
    assert c_real_t(n, t) == pytest.approx(float(oracle_c(n, "real", t)), rel=1e-11)
    assert c_complex_t(n, t) == pytest.approx(float(oracle_c(n, "complex", t)), rel=1e-11)


def test_c_t_hand_values():
    assert c_real_t(1, 1.5) == 1.0
    assert c_complex_t(1, 1.7) == 1.0
    assert c_real_t(2, 1.5) == pytest.approx(2 ** (1 / 6), rel=1e-14)
    assert c_complex_t(2, 1.5) == pytest.approx(float(mpmath.gamma(1.75) ** (-mpmath.mpf(2) / 3)), rel=1e-14)


def test_s_and_m_hand_values():
    e = math.exp(1 - 0.5772156649015329 / 2)
    assert s_seq(2, REAL) == pytest.approx(SQRT2)
    assert s_seq(4, REAL) == pytest.approx(e, rel=1e-14)
    assert s_seq(2, COMPLEX) == pytest.approx(2 / math.sqrt(math.pi))
    assert m_seq(2, REAL) == pytest.approx(SQRT2)
    assert m_seq(4, REAL) == pytest.approx(SQRT2 * D_REAL, rel=1e-15)
    assert m_seq(5, REAL) == pytest.approx(SQRT2 * D_REAL**2, rel=1e-15)
    assert m_seq(5, REAL) == pytest.approx(2.9336, abs=1e-4)


def test_r_hand_values():
    assert r_seq(2, REAL) == pytest.approx(SQRT2)
    assert r_seq(3, REAL) == pytest.approx(SQRT2 * D_REAL, rel=1e-15)
    assert r_seq(4, REAL) == pytest.approx(SQRT2 * (D_REAL + (D_REAL**2 - D_REAL) / 2), rel=1e-15)
    assert r_seq(4, REAL) == pytest.approx(2.4853, abs=2e-4)  # reference value uses D rounded to 1.4403
    for t in (1.0, 1.3, 1.9):
        assert r_seq_t(2, t, REAL) == pytest.approx(SQRT2)
    assert r_seq_t(3, 1.5, REAL) == pytest.approx(SQRT2 * d_real_t(1.5), rel=1e-15)


def test_r_undefined_at_one():
    with pytest.raises(DomainError):
        r_seq(1)


@given(st.integers(min_value=2, max_value=2**40), st.sampled_from([REAL, COMPLEX]))
def test_r_interpolates_m_at_block_ends(n, field):
    pos = block_of(n)
    left = 2 ** (pos.k - 1) + 1
    right = 2**pos.k
    assert r_seq(left, field) == m_seq(left, field)
    assert m_seq(left, field) <= r_seq(n, field) <= m_seq(right + 1, field) * (1 + 1e-15)


@given(st.integers(min_value=2, max_value=2**30), st.sampled_from([REAL, COMPLEX]))
def test_r_step_matches_subtraction(n, field):
    hi = r_seq(n + 1, field)
    diff = hi - r_seq(n, field)
    assert abs(diff - r_step(n, field)) <= 1e-12 * r_step(n, field) + 8 * math.ulp(hi)


@given(st.integers(min_value=2, max_value=2**30), st.sampled_from([REAL, COMPLEX]))
def test_r_step_below_rounded_bound(n, field):
    c, e = ROUNDED[f"{field.value}_diff"]
    assert r_step(n, field) < c * n**e
    assert r_step(n, field) <= diff_bound(n, 1.0, field) * (1 + 1e-15)


@given(st.integers(min_value=3, max_value=5000), st.sampled_from([REAL, COMPLEX]))
@settings(deadline=None)
def test_sandwich_property(n, field):
    cfn = c_real if field is REAL else c_complex
    assert cfn(n) <= s_seq(n, field) <= m_seq(n, field) <= r_seq(n, field)


def test_x_terms():
    assert all(abs(x_term(m) - SQRT2) < 1e-14 for m in range(2, 25))
    xs = [x_term(m) for m in range(25, 2000)]
    assert all(b > a for a, b in zip(xs, xs[1:]))
    assert xs[-1] < D_REAL
    xc = [x_term(m, COMPLEX) for m in range(2, 2000)]
    assert all(b > a for a, b in zip(xc, xc[1:])) and xc[-1] < D_COMPLEX


def test_continuum_ratios_reduce():
    assert d_real_t(1.0) == pytest.approx(D_REAL, rel=1e-15)
    assert d_complex_t(1.0) == pytest.approx(D_COMPLEX, rel=1e-15)


@given(st.floats(min_value=1.0, max_value=1.999))
def test_continuum_ratios_bounded(t):
    assert 1.0 <= d_real_t(t) <= D_REAL * (1 + 1e-15)
    assert 1.0 <= d_complex_t(t) <= D_COMPLEX * (1 + 1e-15)


def test_diff_bound_values():
    assert diff_bound(1, 1.0, REAL) == pytest.approx(float(2 * mpmath.sqrt(2) - 4 * mpmath.e ** (mpmath.euler / 2 - 1)), rel=1e-14)
    assert diff_bound(1, 1.0, REAL) < 0.87
    assert diff_bound(1, 1.0, COMPLEX) == pytest.approx(0.43001, abs=1e-5)
    assert diff_bound(1, 1.0, COMPLEX) < 0.44
    assert diff_coefficients_classical(REAL)[1] == pytest.approx(-0.473678, abs=1e-6)
    assert diff_coefficients_classical(COMPLEX)[1] == pytest.approx(-0.695025, abs=1e-6)


@pytest.mark.parametrize("field", [REAL, COMPLEX])
def test_diff_coefficients_reduce(field):
    a, b = diff_coefficients(1.0, field), diff_coefficients_classical(field)
    assert a == pytest.approx(b, rel=1e-13)


def test_partial_sum_bound_values():
    assert partial_sum_bound(2, REAL) == pytest.approx(1 + diff_bound(1, 1.0, REAL), rel=1e-15)
    assert partial_sum_bound(2, COMPLEX) == pytest.approx(1 + diff_bound(1, 1.0, COMPLEX), rel=1e-15)
    sums = partial_sum_bounds(10_000, REAL)
    j = np.arange(1, 10_000, dtype=float)
    rounded = 1 + 0.87 * np.cumsum(j**-0.473678)
    assert np.all(sums[2:] <= rounded)


def test_closed_bound_coefficients_classical():
    c, r, p = closed_bound_coefficients(1.0, REAL)
    g = float(mpmath.euler)
    assert c == pytest.approx((2**2.5 - 8 * math.exp(-1 + g / 2)) / (2 * math.log2(math.exp(1 - g / 2)) - 1), rel=1e-14)
    assert 1.64 < c < 1.65
    assert r == pytest.approx(0.526322, abs=1e-6)
    assert 0.115 < p < 0.130
    c2, r2, p2 = closed_bound_coefficients(1.0, COMPLEX)
    assert r2 == pytest.approx(0.304975, abs=1e-6)
    assert c2 == pytest.approx(1.41, abs=5e-3)
    assert p2 == pytest.approx(-0.04, abs=1e-2)


@given(st.integers(min_value=2, max_value=10**4), st.sampled_from([REAL, COMPLEX]))
def test_r_below_closed_bound(n, field):
    assert r_seq(n, field) <= closed_bound(n, 1.0, field) + 1e-9


@given(st.floats(min_value=1.0, max_value=1.99), st.integers(min_value=3, max_value=2000),
       st.sampled_from([REAL, COMPLEX]))
@settings(deadline=None)
def test_partial_sums_below_continuum_closed_bound(t, n, field):
    sums = partial_sum_bounds(n, field, t)
    assert sums[n] <= closed_bound(n, t, field) + 1e-9


@given(st.floats(min_value=1.0, max_value=1.99), st.integers(min_value=2, max_value=2**30),
       st.sampled_from([REAL, COMPLEX]))
def test_continuum_step_below_diff_bound(t, n, field):
    assert r_step(n, field, t) <= diff_bound(n, t, field) * (1 + 1e-13)


@pytest.mark.parametrize("field", [REAL, COMPLEX])
def test_continuum_closed_coefficients_continuous_at_one(field):
    a = closed_bound_coefficients(1.0, field)
    b = closed_bound_coefficients(1.0 + 1e-9, field)
    assert a == pytest.approx(b, rel=1e-6, abs=1e-6)


def test_lower_bound_values():
    assert lower_bound(1, 1.0) == 1.0
    assert lower_bound(2, 1.0) == pytest.approx(SQRT2)
    assert lower_bound(3, 1.0) == pytest.approx(2 ** (2 / 3))


@given(st.integers(min_value=1, max_value=500))
def test_lower_below_upper(n):
    assert lower_bound(n, 1.0) <= c_real(n) * (1 + 1e-14)


def test_littlewood_bilinear():
    lo, hi = littlewood_bilinear_constant(4 / 3)
    assert lo == pytest.approx(SQRT2) and hi == pytest.approx(SQRT2)
    assert littlewood_bilinear_constant(2.0) == (1.0, 1.0)
    lo, hi = littlewood_bilinear_constant(1.95)
    assert lo == pytest.approx(2 ** (0.05 / 1.95), rel=1e-14)
    assert lo <= hi
    assert littlewood_t0() == pytest.approx(4 * find_p0() / (find_p0() + 2), rel=1e-15)


@given(st.floats(min_value=4 / 3, max_value=3.0))
def test_littlewood_bounds_ordered(r):
    lo, hi = littlewood_bilinear_constant(r)
    assert 1.0 <= lo <= hi * (1 + 1e-14)


def test_exponent_E():
    assert exponent_E(1, 1.7) == pytest.approx(1.7)
    assert exponent_E(2, 1.5) == pytest.approx(6 / 3.5)
    for n in range(1, 30):
        assert exponent_E(n, 1.0) == pytest.approx(2 * n / (n + 1))


@pytest.mark.parametrize("t", [0.99, 2.0, float("nan")])
def test_t_domain(t):
    with pytest.raises(DomainError):
        r_seq_t(3, t)


def test_sequence_spec_validation():
    with pytest.raises(DomainError):
        SequenceSpec(REAL, Family.S, 1.5)
    with pytest.raises(DomainError):
        SequenceSpec(COMPLEX, Family.LOWER_BOUND, 1.0)
    with pytest.raises(DomainError):
        SequenceSpec(REAL, "Nope", 1.0)


def test_constant_table_rows():
    table = constant_table(SequenceSpec(REAL, Family.C), 4)
    assert [n for n, _ in table.values] == [1, 2, 3, 4]
    assert table.values[3][1] == pytest.approx(2.0)
    r_table = constant_table(SequenceSpec(REAL, Family.R), 2)
    assert len(r_table.values) == 1 and r_table.values[0][1] == pytest.approx(SQRT2)
    psb = constant_table(SequenceSpec(REAL, Family.PARTIAL_SUM_BOUND), 50)
    assert psb.values[-1][1] == pytest.approx(partial_sum_bound(50), rel=1e-15)


def test_suites_pass():
    assert verify_monotonicity(1000).passed
    assert verify_sandwich(2000).passed
    assert verify_reduction(64).passed
    assert verify_fundamental_lemma(5000).passed


@given(st.integers(min_value=2, max_value=3000), st.sampled_from([REAL, COMPLEX]),
       st.one_of(st.none(), st.floats(min_value=1.0, max_value=1.99)))
@settings(max_examples=30, deadline=None)
def test_r_array_bit_identical(n_max, field, t):
    arr = r_array(n_max, field, t)
    ref = [r_seq(n, field) if t is None else r_seq_t(n, t, field) for n in range(2, n_max + 1)]
    assert np.array_equal(arr[2:], np.array(ref))
