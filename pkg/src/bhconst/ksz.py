"""Kahane-Salem-Zygmund experiments with Bernoulli (+/-1 coefficient) polynomials.

Random signs come from numpy's Philox4x64 counter-based generator seeded
through ``SeedSequence``; per-trial streams are spawned, never shared.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .forms import (
    CapacityError,
    HomogeneousPolynomial,
    MultilinearForm,
    coeff_lq_norm,
    multi_indices,
    norm_p2_complex,
    sup_norm_complex_estimate,
    sup_norm_real_exact,
)
from .report import Check, ExperimentReport
from .special_fn import DomainError

INT64_MAX = 2**63 - 1
MAX_MONOMIALS = 1 << 22

# Reference values for m = n = 2 and the polynomial constant K_2.
KSZ_M2N2_LOWER = 0.9495
POL_CHAIN_M2 = 0.9680
K2_POL_UPPER = 1.7432
KSZ_CHAIN_LOWER = 0.5553


def _generator(seed) -> np.random.Generator:
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return np.random.Generator(np.random.Philox(ss))


def monomial_count(m: int, n: int) -> int:
    """Number of m-homogeneous monomials in n variables, binom(n+m-1, m)."""
    if m < 1 or n < 1:
        raise DomainError("monomial_count needs m, n >= 1")
    count = math.comb(n + m - 1, m)
    if count > INT64_MAX:
        raise OverflowError(f"binom({n + m - 1}, {m}) exceeds 64-bit range")
    return count


@dataclass
class BernoulliPolynomial:
    underlying: HomogeneousPolynomial
    seed: int | str

    @property
    def m(self) -> int:
        return self.underlying.m

    @property
    def n(self) -> int:
        return self.underlying.n


def random_bernoulli(m: int, n: int, seed) -> BernoulliPolynomial:
    """Every monomial of degree m in n variables with an independent uniform sign."""
    count = monomial_count(m, n)
    if count > MAX_MONOMIALS:
        raise CapacityError(f"{count} monomials exceeds cap {MAX_MONOMIALS}")
    signs = 2 * _generator(seed).integers(0, 2, size=count) - 1
    terms = {alpha: float(s) for alpha, s in zip(multi_indices(m, n), signs)}
    return BernoulliPolynomial(HomogeneousPolynomial(m, n, terms), seed)


def random_bernoulli_form(m: int, n: int, seed) -> MultilinearForm:
    """m-linear form on (R^n)^m with independent uniform +/-1 coefficients."""
    signs = 2.0 * _generator(seed).integers(0, 2, size=(n,) * m) - 1.0
    return MultilinearForm(signs)


def ksz_ratio(p: BernoulliPolynomial, norm: float) -> float:
    """norm / (n**((m+1)/2) * sqrt(log m)).

    A lower bound for the optimal KSZ constant C_{m,n} when ``norm`` is (a lower
    bound on) the minimum norm over all sign patterns.
    """
    if p.m < 2:
        raise DomainError("ksz_ratio needs m >= 2 (log m > 0)")
    if not norm > 0:
        raise DomainError("norm must be positive")
    return norm / (p.n ** ((p.m + 1) / 2) * math.sqrt(math.log(p.m)))


def pol_bound_chain(m: int) -> float:
    """Lower bound on K_m^pol * C from the m = n choice, in log space."""
    if m < 2:
        raise DomainError("pol_bound_chain needs m >= 2")
    log_count = math.lgamma(2 * m) - math.lgamma(m + 1) - math.lgamma(m)
    log_val = (m + 1) / (2 * m) * log_count - (m + 1) / 2 * math.log(m) - 0.5 * math.log(math.log(m))
    return math.exp(log_val)


def exhaustive_m2n2() -> ExperimentReport:
    """All eight sign patterns of a z1^2 + b z2^2 + c z1 z2 with exact complex norms."""
    rows = []
    for a, b, c in itertools.product((-1, 1), repeat=3):
        rows.append({"a": a, "b": b, "c": c, "norm": norm_p2_complex(a, b, c)})
    norms = [r["norm"] for r in rows]
    witness = min(rows, key=lambda r: r["norm"])
    sqrt5 = math.sqrt(5.0)
    n_three = sum(1 for v in norms if v == 3.0)
    n_sqrt5 = sum(1 for v in norms if v == sqrt5)
    poly = BernoulliPolynomial(
        HomogeneousPolynomial(2, 2, {(2, 0): witness["a"], (0, 2): witness["b"], (1, 1): witness["c"]}),
        "exhaustive",
    )
    ratio = ksz_ratio(poly, witness["norm"])
    rep = ExperimentReport(
        "ksz-exhaustive",
        {"m": 2, "n": 2},
        seed="exhaustive",
        per_n=[{"n": 2, "stat_max": max(norms), "stat_mean": sum(norms) / len(norms),
                "witness": witness}],
        extras={"patterns": rows, "norm_values": sorted(set(norms)), "min_norm": witness["norm"],
                "ksz_ratio_min": ratio},
    )
    rep.checks += [
        Check("norm values are {3, sqrt(5)}", set(norms) == {3.0, sqrt5}),
        Check("four patterns of each norm", n_three == 4 and n_sqrt5 == 4, detail=f"3:{n_three} sqrt5:{n_sqrt5}"),
        Check("min norm is sqrt(5), attained with ab < 0", witness["norm"] == sqrt5 and witness["a"] * witness["b"] < 0),
        Check(f"ksz ratio at min norm > {KSZ_M2N2_LOWER}", ratio > KSZ_M2N2_LOWER, detail=f"{ratio:.6f}"),
    ]
    return rep.finalize()


def divergence_experiment(m: int, q: float, n_list, seed: int = 0, trials: int = 64,
                          mode: str = "multilinear", restarts: int = 8) -> ExperimentReport:
    """Max over random Bernoulli instances of coeff l_q norm / sup norm, per n.

    ``mode="multilinear"`` uses real m-linear forms on (R^n)^m and the exact
    vertex oracle. ``mode="polynomial"`` uses complex m-homogeneous
    polynomials with the coordinate-ascent estimate; the sup is then under-
    estimated, so the statistic is an over-estimate and is labelled as such.
    Growth like n**(m/q - (m+1)/2) is expected; positive exponents mean
    divergence, i.e. no inequality with exponent q.
    """
    if m < 2:
        raise DomainError("divergence_experiment needs m >= 2")
    if not q >= 1.0:
        raise DomainError("q must be >= 1")
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if mode not in ("multilinear", "polynomial"):
        raise DomainError(f"unknown mode {mode!r}")
    n_list = [int(n) for n in n_list]
    if any(n < 1 for n in n_list):
        raise DomainError("every n must be >= 1")
    if mode == "multilinear" and any((m - 1) * n > 26 for n in n_list):
        raise CapacityError("sign space exceeds 2**26 for some n")
    growth = m / q - (m + 1) / 2
    rep = ExperimentReport(
        "divergence",
        {"m": m, "q": q, "n_list": n_list, "trials": trials, "mode": mode},
        seed=seed,
        extras={"theoretical_exponent": growth,
                "norm": "exact" if mode == "multilinear" else "estimate (lower bound on sup norm)"},
    )
    children = np.random.SeedSequence(seed).spawn(len(n_list))
    for n, child in zip(n_list, children):
        stats = []
        for trial, ss in enumerate(child.spawn(trials)):
            if mode == "multilinear":
                obj = random_bernoulli_form(m, n, ss)
                sup = sup_norm_real_exact(obj)
            else:
                obj = random_bernoulli(m, n, ss).underlying
                sup = sup_norm_complex_estimate(obj, restarts=restarts, seed=int(ss.generate_state(1)[0]))
            stats.append((coeff_lq_norm(obj, q) / sup, trial, sup))
        best = max(stats)
        rep.per_n.append({
            "n": n,
            "stat_max": best[0],
            "stat_mean": float(np.mean([s[0] for s in stats])),
            "witness": {"trial": best[1], "sup_norm": best[2]},
        })
    maxima = [row["stat_max"] for row in rep.per_n]
    increasing = all(b > a for a, b in zip(maxima, maxima[1:]))
    rep.extras["strictly_increasing"] = increasing
    if len(maxima) > 1:
        rep.extras["growth_factor"] = maxima[-1] / maxima[0]
    rep.verdict = "increasing" if increasing else "not increasing"
    return rep


def ksz_search(m: int, n: int, restarts: int = 8, max_patterns: int = 1 << 12) -> ExperimentReport:
    """Minimum estimated complex sup norm over all sign patterns of degree m in n variables.

    P and -P share a norm, so the first sign is fixed. Every estimate is a lower
    bound on the true norm, hence the minimum ratio is a lower bound on the
    optimal constant C_{m,n}.
    """
    if m == 2 and n == 2:
        return exhaustive_m2n2()
    count = monomial_count(m, n)
    if 2 ** (count - 1) > max_patterns:
        raise CapacityError(f"2**{count - 1} sign patterns exceeds cap {max_patterns}")
    alphas = list(multi_indices(m, n))
    best = None
    for bits in range(2 ** (count - 1)):
        signs = [1.0] + [1.0 - 2.0 * ((bits >> i) & 1) for i in range(count - 1)]
        poly = HomogeneousPolynomial(m, n, dict(zip(alphas, signs)))
        est = sup_norm_complex_estimate(poly, restarts=restarts, seed=bits)
        if best is None or est < best[0]:
            best = (est, signs)
    ratio = ksz_ratio(BernoulliPolynomial(HomogeneousPolynomial(m, n, dict(zip(alphas, best[1]))), "exhaustive"),
                      best[0])
    rep = ExperimentReport(
        "ksz-search", {"m": m, "n": n, "restarts": restarts}, seed="exhaustive",
        per_n=[{"n": n, "stat_max": best[0], "stat_mean": best[0],
                "witness": {"signs": best[1]}}],
        extras={"norm": "estimate (lower bound on sup norm)", "min_norm": best[0], "ksz_ratio_min": ratio},
    )
    rep.verdict = "lower bound on C_{m,n}"
    return rep
