"""Constant sequences for the multilinear Bohnenblust-Hille inequality.

Families, for real and complex scalars:

* ``C``  recursive constants built from Khinchine constants,
* ``S``  the same recursion with every Khinchine factor replaced by its limit D,
* ``M``  the blockwise-constant majorant ``base * D**(k-1)`` on B_k,
* ``R``  the linear interpolation of ``M`` across each dyadic block, whose
  consecutive differences decrease to zero,

plus the bounds derived from ``R`` (difference bound, partial sums, closed
power-law bound) and the lower bound ``2**((n-1)(2-t)/(nt))``. The continuum
parameter ``t`` in [1, 2) replaces the exponent 2n/(n+1) by
``2nt/((n-1)t + 2)``; ``t = 1`` is the classical case.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .special_fn import (
    EULER_GAMMA,
    SQRT_PI,
    DomainError,
    log_gamma,
    log_khinchine_complex,
    log_khinchine_real,
)
from .report import Check, ExperimentReport

G = EULER_GAMMA
SQRT2 = math.sqrt(2.0)
LN2 = math.log(2.0)

D_REAL = math.exp(1.0 - G / 2.0) / SQRT2
D_COMPLEX = math.exp((1.0 - G) / 2.0)
BASE_REAL = SQRT2
BASE_COMPLEX = 2.0 / SQRT_PI

# Published rounded forms of the exact coefficients and exponents.
ROUNDED = {
    "real_diff": (0.87, -0.473678),
    "complex_diff": (0.44, -0.695025),
    "real_closed": (1.65, 0.526322, 0.13),
    "complex_closed": (1.41, 0.304975, -0.04),
}


class ScalarField(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"


class Family(str, enum.Enum):
    C = "C"
    S = "S"
    M = "M"
    R = "R"
    CLOSED_BOUND = "ClosedBound"
    PARTIAL_SUM_BOUND = "PartialSumBound"
    DIFF_BOUND = "DiffBound"
    LOWER_BOUND = "LowerBound"


def _field(field) -> ScalarField:
    try:
        return ScalarField(field)
    except ValueError:
        raise DomainError(f"unknown scalar field {field!r}") from None


def _check_n(n, lo: int = 1) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < lo:
        raise DomainError(f"n must be >= {lo}, got {n}")
    return n


def _check_t(t) -> float:
    t = float(t)
    if not (1.0 <= t < 2.0):
        raise DomainError(f"t must lie in [1, 2), got {t!r}")
    return t


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockPosition:
    """n lies in B_k = {2**(k-1)+1, ..., 2**k} at position j (1-based)."""

    k: int
    j: int


def block_of(n: int) -> BlockPosition:
    n = _check_n(n, 2)
    k = (n - 1).bit_length()
    return BlockPosition(k, n - (1 << (k - 1)))


# ---------------------------------------------------------------------------
# Limiting ratios
# ---------------------------------------------------------------------------


def d_real_t(t: float) -> float:
    """Continuum analogue of D; equals D_REAL at t = 1."""
    t = _check_t(t)
    return 2.0 ** ((t - 2.0) / (2.0 * t)) * math.exp((2.0 - t) * (2.0 - G) / (2.0 * t))


def d_complex_t(t: float) -> float:
    t = _check_t(t)
    return math.exp((G - 1.0) * (2.0 * t - 4.0) / (4.0 * t))


def _ratio(field: ScalarField, t: float | None) -> float:
    if t is None:
        return D_REAL if field is ScalarField.REAL else D_COMPLEX
    return d_real_t(t) if field is ScalarField.REAL else d_complex_t(t)


def _base(field: ScalarField, t: float | None) -> float:
    if field is ScalarField.REAL:
        return BASE_REAL
    if t is None:
        return BASE_COMPLEX
    # C_{2,t} for complex scalars; 2/sqrt(pi) at t = 1.
    return math.exp(-log_khinchine_complex(t))


# ---------------------------------------------------------------------------
# C family (Khinchine recursion)
# ---------------------------------------------------------------------------


def _log_khinchine(field: ScalarField):
    return log_khinchine_real if field is ScalarField.REAL else log_khinchine_complex


@functools.lru_cache(maxsize=None)
def _log_c(field: ScalarField, n: int) -> float:
    if n == 1:
        return 0.0
    log_a = _log_khinchine(field)
    if n % 2 == 0:
        return -(n / 2) * log_a(2 * n / (n + 2)) + _log_c(field, n // 2)
    lo = -((n + 1) / 2) * log_a((2 * n - 2) / (n + 1)) + _log_c(field, (n - 1) // 2)
    hi = -((n - 1) / 2) * log_a((2 * n + 2) / (n + 3)) + _log_c(field, (n + 1) // 2)
    return (n - 1) / (2 * n) * lo + (n + 1) / (2 * n) * hi


def c_real(n: int) -> float:
    """Recursive real constants C_n (best previously known, real scalars)."""
    return math.exp(_log_c(ScalarField.REAL, _check_n(n)))


def c_complex(n: int) -> float:
    """Complex constants: the C_n recursion with Gamma((p+2)/2)**(1/p)."""
    return math.exp(_log_c(ScalarField.COMPLEX, _check_n(n)))


@functools.lru_cache(maxsize=None)
def _log_c_t(field: ScalarField, t: float, n: int) -> float:
    if n == 1:
        return 0.0
    log_a = _log_khinchine(field)
    if n % 2 == 0:
        p = 2 * n * t / ((n - 2) * t + 4)
        return -(n / 2) * log_a(p) + _log_c_t(field, t, n // 2)
    p_lo = 2 * (n - 1) * t / ((n - 3) * t + 4)
    p_hi = 2 * (n + 1) * t / ((n - 1) * t + 4)
    lo = -((n + 1) / 2) * log_a(p_lo) + _log_c_t(field, t, (n - 1) // 2)
    hi = -((n - 1) / 2) * log_a(p_hi) + _log_c_t(field, t, (n + 1) // 2)
    return (n - 1) / (2 * n) * lo + (n + 1) / (2 * n) * hi


def c_real_t(n: int, t: float) -> float:
    """Real constants for the exponent 2nt/((n-1)t+2)."""
    return math.exp(_log_c_t(ScalarField.REAL, _check_t(t), _check_n(n)))


def c_complex_t(n: int, t: float) -> float:
    return math.exp(_log_c_t(ScalarField.COMPLEX, _check_t(t), _check_n(n)))


def x_term(m: int, field=ScalarField.REAL) -> float:
    """Even-step factor A_{2m/(m+2)}**(-m/2); increases to D (m >= 2)."""
    m = _check_n(m, 2)
    return math.exp(-(m / 2) * _log_khinchine(_field(field))(2 * m / (m + 2)))


# ---------------------------------------------------------------------------
# S and M families
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _s(field: ScalarField, n: int) -> float:
    base, d = _base(field, None), _ratio(field, None)
    if n == 1:
        return 1.0
    if n == 2:
        return base
    if n % 2 == 0:
        return d * _s(field, n // 2)
    return d * (_s(field, (n - 1) // 2) ** ((n - 1) / (2 * n)) * _s(field, (n + 1) // 2) ** ((n + 1) / (2 * n)))


def s_seq(n: int, field=ScalarField.REAL) -> float:
    """C-recursion with each Khinchine factor replaced by D (resp. D~)."""
    return _s(_field(field), _check_n(n))


@functools.lru_cache(maxsize=None)
def _level(field: ScalarField, t: float | None, k: int) -> float:
    # base * D**(k-1), by repeated multiplication so that S and M agree
    # bit-for-bit at powers of two.
    if k == 1:
        return _base(field, t)
    return _ratio(field, t) * _level(field, t, k - 1)


def m_seq(n: int, field=ScalarField.REAL) -> float:
    """Blockwise-constant majorant: 1 at n = 1, base * D**(k-1) on B_k."""
    n = _check_n(n)
    if n == 1:
        return 1.0
    return _level(_field(field), None, block_of(n).k)


# ---------------------------------------------------------------------------
# R family (block interpolation)
# ---------------------------------------------------------------------------


def _r(field: ScalarField, t: float | None, n: int) -> float:
    pos = block_of(n)
    lo = _level(field, t, pos.k)
    hi = _level(field, t, pos.k + 1)
    return lo + (pos.j - 1) * ((hi - lo) / (1 << (pos.k - 1)))


def r_seq(n: int, field=ScalarField.REAL) -> float:
    """Linear interpolation of M across each block B_k (defined for n >= 2)."""
    return _r(_field(field), None, _check_n(n, 2))


def r_seq_t(n: int, t: float, field=ScalarField.REAL) -> float:
    """Continuum R sequence with D_t (real) or D~_t (complex) as block ratio."""
    return _r(_field(field), _check_t(t), _check_n(n, 2))


def r_array(n_max: int, field=ScalarField.REAL, t: float | None = None) -> np.ndarray:
    """Entries 2..n_max equal r_seq (or r_seq_t) bit-for-bit; entries 0 and 1 are NaN."""
    n_max = _check_n(n_max, 2)
    field = _field(field)
    t = None if t is None else _check_t(t)
    n = np.arange(2, n_max + 1, dtype=np.int64)
    k = np.ceil(np.log2(n)).astype(np.int64)
    # Guard the float log against off-by-one at exact powers of two.
    k[(1 << (k - 1)) >= n] -= 1
    k[(1 << k) < n] += 1
    levels = np.array([_level(field, t, i) if i else np.nan for i in range(int(k.max()) + 2)])
    lo, hi = levels[k], levels[k + 1]
    j = n - (1 << (k - 1))
    out = np.full(n_max + 1, np.nan)
    out[2:] = lo + (j - 1) * ((hi - lo) / (1 << (k - 1)).astype(float))
    return out


def r_step(n: int, field=ScalarField.REAL, t: float | None = None) -> float:
    """Exact value of R_{n+1} - R_n: the constant slope of the block holding n."""
    field = _field(field)
    t = None if t is None else _check_t(t)
    k = block_of(n).k
    return (_level(field, t, k + 1) - _level(field, t, k)) / (1 << (k - 1))


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------


def diff_coefficients_classical(field=ScalarField.REAL) -> tuple[float, float]:
    """(coefficient, exponent) of the t = 1 difference bound coef * n**exp."""
    if _field(field) is ScalarField.REAL:
        coef = 2.0 * SQRT2 - 4.0 * math.exp(G / 2.0 - 1.0)
        expo = math.log2(2.0**-1.5 * math.exp(1.0 - G / 2.0))
    else:
        e = math.exp(0.5 - G / 2.0)
        coef = 4.0 / SQRT_PI - 4.0 / (e * SQRT_PI)
        expo = math.log2(e / 2.0)
    return coef, expo


def diff_coefficients(t: float, field=ScalarField.REAL) -> tuple[float, float]:
    """(coefficient, exponent) of the continuum difference bound."""
    t = _check_t(t)
    if _field(field) is ScalarField.REAL:
        coef = 2.0**1.5 - 2.0 ** ((t + 1.0) / t) * math.exp((t - 2.0) / t + (2.0 - t) * G / (2.0 * t))
        expo = math.log2(2.0 ** ((-t - 2.0) / (2.0 * t)) * math.exp((2.0 - t) / t - (2.0 - t) * G / (2.0 * t)))
    else:
        e = math.exp((G - 1.0) * (2.0 * t - 4.0) / (4.0 * t))
        coef = 2.0 * math.exp(-log_gamma((t + 2.0) / 2.0) / t) * (e - 1.0) / e
        expo = math.log2(e / 2.0)
    return coef, expo


def _diff_pair(t: float, field: ScalarField) -> tuple[float, float]:
    t = _check_t(t)
    return diff_coefficients_classical(field) if t == 1.0 else diff_coefficients(t, field)


def diff_bound(n: int, t: float = 1.0, field=ScalarField.REAL) -> float:
    """Upper bound coef * n**exp on R_{n+1} - R_n."""
    n = _check_n(n)
    coef, expo = _diff_pair(t, _field(field))
    return coef * n**expo


def partial_sum_bounds(n_max: int, field=ScalarField.REAL, t: float = 1.0) -> np.ndarray:
    """Array whose entry n (2 <= n <= n_max) is 1 + coef * sum_{j<n} j**exp.

    Entries 0 and 1 are NaN.
    """
    n_max = _check_n(n_max, 2)
    coef, expo = _diff_pair(t, _field(field))
    j = np.arange(1, n_max, dtype=float)
    out = np.full(n_max + 1, np.nan)
    out[2:] = 1.0 + coef * np.cumsum(j**expo)
    return out


def partial_sum_bound(n: int, field=ScalarField.REAL, t: float = 1.0) -> float:
    n = _check_n(n, 2)
    return float(partial_sum_bounds(n, field, t)[n])


def closed_bound_coefficients(t: float = 1.0, field=ScalarField.REAL) -> tuple[float, float, float]:
    """(c, r, p) of the closed bound c * (n-1)**r + p.

    t = 1 uses the classical expressions; other t the continuum ones. Both
    agree at t = 1.
    """
    t = _check_t(t)
    field = _field(field)
    if t == 1.0:
        return _closed_classical(field)
    return _closed_continuum(t, field)


def _closed_classical(field: ScalarField) -> tuple[float, float, float]:
    if field is ScalarField.REAL:
        e = math.exp(1.0 - G / 2.0)
        coef = 2.0**1.5 - 4.0 * math.exp(G / 2.0 - 1.0)
        c = (2.0**2.5 - 8.0 * math.exp(-1.0 + G / 2.0)) / (2.0 * math.log2(e) - 1.0)
        r = math.log2(e / SQRT2)
        p = 1.0 + coef * (2.0**-0.5 * e / (0.5 - math.log2(e)) + (1.0 + 2.0**-1.5 * e))
        return c, r, p
    e = math.exp(0.5 - G / 2.0)
    coef = 4.0 / SQRT_PI - 4.0 / (e * SQRT_PI)
    c = coef / (1.0 + math.log2(e / 2.0))
    r = math.log2(e)
    eh, egh = math.exp(0.5), math.exp(G / 2.0)
    p = ((2.0 * eh - 2.0 * egh) / SQRT_PI) * (
        (-4.0 * eh * LN2 + (1.0 - G) * (eh + 2.0 * egh)) / (math.exp(G / 2.0 + 0.5) * (1.0 - G))
    ) + 1.0
    return c, r, p


def _closed_continuum(t: float, field: ScalarField) -> tuple[float, float, float]:
    if field is ScalarField.REAL:
        e_pos = math.exp((2.0 - t) / t - (2.0 - t) * G / (2.0 * t))
        e_neg = math.exp((t - 2.0) / t + (2.0 - t) * G / (2.0 * t))
        denom = t - 2.0 + 2.0 * t * math.log2(e_pos)
        coef = 2.0**1.5 - 2.0 ** ((t + 1.0) / t) * e_neg
        p = 1.0 - coef * (
            2.0 ** ((3.0 * t - 2.0) / (2.0 * t)) * t * e_pos / denom - 1.0 - 2.0 ** ((-t - 2.0) / (2.0 * t)) * e_pos
        )
        c = 4.0 * t * (SQRT2 - 2.0 ** (1.0 / t) * e_neg) / denom
        r = (t - 2.0) / (2.0 * t) + math.log2(e_pos)
        return c, r, p
    e = math.exp((G - 1.0) * (2.0 * t - 4.0) / (4.0 * t))
    gam = math.exp(log_gamma((t + 2.0) / 2.0) / t)
    log2e = math.log2(e)
    p = 1.0 + (-2.0 / log2e + 2.0 / e + 1.0) / (gam * (e - 1.0) ** -1)
    c = 2.0 / gam * (e - 1.0) / (log2e * e)
    r = log2e
    return c, r, p


def closed_bound(n: int, t: float = 1.0, field=ScalarField.REAL) -> float:
    """Closed power-law upper bound c(t) * (n-1)**r(t) + p(t), n >= 2."""
    n = _check_n(n, 2)
    c, r, p = closed_bound_coefficients(t, field)
    return c * (n - 1) ** r + p


def lower_bound(n: int, t: float = 1.0) -> float:
    """Lower bound 2**((n-1)(2-t)/(nt)) for the optimal real constants."""
    n, t = _check_n(n), _check_t(t)
    return 2.0 ** ((n - 1) * (2.0 - t) / (n * t))


def littlewood_t0() -> float:
    """Exponent r at which the bilinear Khinchine index 2r/(4-r) reaches p0."""
    from .special_fn import find_p0

    p0 = find_p0()
    return 4.0 * p0 / (p0 + 2.0)


def littlewood_bilinear_constant(r: float) -> tuple[float, float]:
    """(lower, upper) estimates of the real bilinear constant for exponent r."""
    r = float(r)
    if not r >= 4.0 / 3.0:
        raise DomainError(f"r must be >= 4/3, got {r!r}")
    if r >= 2.0:
        return 1.0, 1.0
    lower = 2.0 ** ((2.0 - r) / r)
    if r <= littlewood_t0():
        return lower, lower
    upper = (1.0 / SQRT2) * (SQRT_PI / math.exp(log_gamma((4.0 + r) / (2.0 * (4.0 - r))))) ** ((4.0 - r) / (2.0 * r))
    return lower, upper


def exponent_E(n: int, t: float) -> float:
    """Continuum exponent 2nt/((n-1)t + 2); 2n/(n+1) at t = 1."""
    n, t = _check_n(n), _check_t(t)
    return 2.0 * n * t / ((n - 1) * t + 2.0)


# ---------------------------------------------------------------------------
# Specs and tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceSpec:
    scalar_field: ScalarField = ScalarField.REAL
    family: Family = Family.C
    t: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "scalar_field", _field(self.scalar_field))
        try:
            object.__setattr__(self, "family", Family(self.family))
        except ValueError:
            raise DomainError(f"unknown family {self.family!r}") from None
        object.__setattr__(self, "t", _check_t(self.t))
        if self.family in (Family.S, Family.M) and self.t != 1.0:
            raise DomainError(f"family {self.family.value} is only defined at t = 1")
        if self.family is Family.LOWER_BOUND and self.scalar_field is ScalarField.COMPLEX:
            raise DomainError("the lower bound is stated for real scalars only")

    @property
    def n_min(self) -> int:
        if self.family in (Family.R, Family.CLOSED_BOUND, Family.PARTIAL_SUM_BOUND):
            return 2
        return 1

    def evaluate(self, n: int) -> float:
        f, t, fam = self.scalar_field, self.t, self.family
        if fam is Family.C:
            if t == 1.0:
                return c_real(n) if f is ScalarField.REAL else c_complex(n)
            return c_real_t(n, t) if f is ScalarField.REAL else c_complex_t(n, t)
        if fam is Family.S:
            return s_seq(n, f)
        if fam is Family.M:
            return m_seq(n, f)
        if fam is Family.R:
            return r_seq(n, f) if t == 1.0 else r_seq_t(n, t, f)
        if fam is Family.CLOSED_BOUND:
            return closed_bound(n, t, f)
        if fam is Family.PARTIAL_SUM_BOUND:
            return partial_sum_bound(n, f, t)
        if fam is Family.DIFF_BOUND:
            return diff_bound(n, t, f)
        return lower_bound(n, t)


@dataclass(frozen=True)
class ConstantTable:
    spec: SequenceSpec
    values: tuple[tuple[int, float], ...]


def constant_table(spec: SequenceSpec, n_max: int) -> ConstantTable:
    n_max = _check_n(n_max, spec.n_min)
    if spec.family is Family.PARTIAL_SUM_BOUND:
        sums = partial_sum_bounds(n_max, spec.scalar_field, spec.t)
        rows = tuple((n, float(sums[n])) for n in range(2, n_max + 1))
    else:
        rows = tuple((n, spec.evaluate(n)) for n in range(spec.n_min, n_max + 1))
    return ConstantTable(spec, rows)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def leq_ulps(a: float, b: float, ulps: int = 4) -> bool:
    """a <= b allowing ``ulps`` units in the last place of b.

    Used only where the two sides are mathematically equal for some n (the
    difference bound is attained at n = 2**k).
    """
    return a <= b + ulps * math.ulp(b)


def _first(mask) -> int | None:
    idx = np.flatnonzero(~np.asarray(mask, dtype=bool))
    return None if idx.size == 0 else int(idx[0])


def _check(name: str, ok, offset: int, detail: str = "") -> Check:
    bad = _first(ok)
    return Check(name, bad is None, None if bad is None else bad + offset, detail)


def check_x_terms(n_max: int, field=ScalarField.REAL) -> list[Check]:
    """X_m = A_{2m/(m+2)}**(-m/2) increases and stays below D.

    For real scalars X_m = sqrt(2) exactly while 2m/(m+2) <= p0 (m <= 24),
    so there the check is non-decreasing up to rounding, and strict from the
    first Gamma-branch index on.
    """
    field = _field(field)
    d = _ratio(field, None)
    x = np.array([x_term(m, field) for m in range(2, n_max + 1)])
    tag = field.value
    checks = [
        _check(f"{tag}: X_m non-decreasing (16-ulp slack)",
               [leq_ulps(float(a), float(b), 16) for a, b in zip(x[:-1], x[1:])], 3),
    ]
    start = 25 if field is ScalarField.REAL else 2
    tail = x[start - 2:]
    checks.append(_check(f"{tag}: X_m strictly increasing for m >= {start}", tail[1:] > tail[:-1], start + 1))
    checks.append(_check(f"{tag}: X_m < D", x < d, 2, f"D - X_max = {d - x[-1]:.3e}"))
    return checks


def check_c_increasing(n_max: int, field=ScalarField.REAL) -> Check:
    field = _field(field)
    fn = c_real if field is ScalarField.REAL else c_complex
    c = np.array([fn(n) for n in range(1, n_max + 1)])
    return _check(f"{field.value}: C_n increasing", c[1:] > c[:-1], 2)


def check_fundamental_lemma(n_max: int, field=ScalarField.REAL) -> list[Check]:
    """Differences of R: shape, agreement with subtraction, and the bounds."""
    field = _field(field)
    tag = field.value
    ns = np.arange(2, n_max + 1)
    steps = np.array([r_step(int(n), field) for n in ns])
    r = r_array(n_max + 1, field)[2:]
    sub = r[1:] - r[:-1]
    ks = np.array([block_of(int(n)).k for n in ns])
    first_of_block = np.r_[True, ks[1:] != ks[:-1]]
    block_steps = steps[first_of_block]
    coef, expo = diff_coefficients_classical(field)
    rc, re = ROUNDED[f"{tag}_diff"]
    bound = np.array([diff_bound(int(n), 1.0, field) for n in ns])
    return [
        _check(f"{tag}: R_(n+1)-R_n non-increasing", steps[1:] <= steps[:-1], 3),
        _check(f"{tag}: R step strictly decreasing across blocks", block_steps[1:] < block_steps[:-1], 2,
               "index reported is the block k"),
        _check(f"{tag}: subtraction matches block step", np.abs(sub - steps) <= 1e-9 * steps + 64 * np.spacing(r[1:]), 2),
        _check(f"{tag}: R step <= diff_bound (4-ulp slack at n=2^k)",
               [leq_ulps(float(s), float(b)) for s, b in zip(steps, bound)], 2),
        _check(f"{tag}: R step < {rc}*n^{re}", steps < rc * ns.astype(float) ** re, 2),
    ]


def check_doubling_ratio(n_max: int, field=ScalarField.REAL) -> list[Check]:
    field = _field(field)
    tag = field.value
    d = _ratio(field, None)
    r = r_array(2 * n_max, field)
    ratio = r[4:2 * n_max + 1:2] / r[2:n_max + 1]
    gap = np.abs(ratio - d)
    return [
        _check(f"{tag}: R_2n/R_n strictly decreasing", ratio[1:] < ratio[:-1], 3),
        _check(f"{tag}: |R_2n/R_n - D| strictly decreasing", gap[1:] < gap[:-1], 3),
    ]


def verify_monotonicity(n_max: int = 1000) -> ExperimentReport:
    """Run the monotonicity / boundedness / Fundamental Lemma checks on 1..n_max."""
    n_max = _check_n(n_max, 8)
    rep = ExperimentReport("monotonicity", {"n_max": n_max}, seed=None)
    for field in ScalarField:
        rep.checks.extend(check_x_terms(n_max, field))
        rep.checks.append(check_c_increasing(n_max, field))
        rep.checks.extend(check_fundamental_lemma(n_max, field))
        rep.checks.extend(check_doubling_ratio(n_max, field))
    return rep.finalize()


def verify_sandwich(n_max: int = 10_000) -> ExperimentReport:
    """C_n <= S_n <= M_n <= R_n for 3 <= n <= n_max, zero tolerance."""
    n_max = _check_n(n_max, 3)
    rep = ExperimentReport("sandwich", {"n_max": n_max}, seed=None)
    for field in ScalarField:
        cfn = c_real if field is ScalarField.REAL else c_complex
        ns = range(3, n_max + 1)
        c = np.array([cfn(n) for n in ns])
        s = np.array([s_seq(n, field) for n in ns])
        m = np.array([m_seq(n, field) for n in ns])
        r = r_array(n_max, field)[3:]
        tag = field.value
        rep.checks += [
            _check(f"{tag}: C_n <= S_n", c <= s, 3),
            _check(f"{tag}: S_n <= M_n", s <= m, 3),
            _check(f"{tag}: M_n <= R_n", m <= r, 3),
        ]
    return rep.finalize()


def verify_reduction(n_max: int = 64) -> ExperimentReport:
    """t = 1 specialisations of the continuum families, tolerance 1e-12."""
    n_max = _check_n(n_max, 2)
    tol = 1e-12
    rep = ExperimentReport("reduction", {"n_max": n_max, "tol": tol}, seed=None)

    def add(name, errs, offset):
        errs = np.asarray(errs)
        rep.checks.append(_check(name, errs <= tol, offset, f"max error {errs.max():.3e}"))

    add("C real t=1", [abs(c_real_t(n, 1.0) - c_real(n)) for n in range(1, n_max + 1)], 1)
    add("C complex t=1", [abs(c_complex_t(n, 1.0) - c_complex(n)) for n in range(1, n_max + 1)], 1)
    for field in ScalarField:
        add(f"R {field.value} t=1",
            [abs(r_seq_t(n, 1.0, field) - r_seq(n, field)) for n in range(2, n_max + 1)], 2)
        a, b = diff_coefficients(1.0, field), diff_coefficients_classical(field)
        add(f"diff bound {field.value} coefficients t=1", [abs(a[0] - b[0]), abs(a[1] - b[1])], 0)
        x, y = _closed_continuum(1.0, field), _closed_classical(field)
        add(f"closed bound {field.value} coefficients t=1", [abs(u - v) for u, v in zip(x, y)], 0)
    return rep.finalize()


def verify_fundamental_lemma(n_max: int = 100_000) -> ExperimentReport:
    n_max = _check_n(n_max, 3)
    rep = ExperimentReport("fundamental-lemma", {"n_max": n_max}, seed=None)
    for field in ScalarField:
        rep.checks.extend(check_fundamental_lemma(n_max, field))
        sums = partial_sum_bounds(n_max, field)
        r = r_array(n_max, field)[2:]
        rep.checks.append(_check(f"{field.value}: R_n <= partial-sum bound", r <= sums[2:], 2))
    return rep.finalize()
