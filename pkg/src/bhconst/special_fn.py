"""Gamma-function helpers and the best Khinchine constants (real and complex).

The real constants follow Haagerup's piecewise formula, split at the branch
point ``p0`` where Gamma((p0 + 1)/2) = sqrt(pi)/2.
"""

from __future__ import annotations

import functools
import math

from scipy.optimize import brentq

# Euler-Mascheroni constant, 26 digits.
EULER_GAMMA = 0.57721566490153286060651209

SQRT_PI = math.sqrt(math.pi)
_HALF_LOG_PI = 0.5 * math.log(math.pi)


class DomainError(ValueError):
    """Argument outside the domain of a function."""


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for finite x > 0."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


def _p0_residual(p: float) -> float:
    return math.exp(log_gamma((p + 1.0) / 2.0)) - SQRT_PI / 2.0


# Gamma attains its minimum on (0, inf) at x = 1.4616321449683623; the matching p.
P_GAMMA_MIN = 2.0 * 1.4616321449683623 - 1.0


@functools.lru_cache(maxsize=None)
def find_p0() -> float:
    """Root in (1, 2) of Gamma((p + 1)/2) = sqrt(pi)/2, approximately 1.847.

    p = 2 is a second, trivial root (Gamma(3/2) = sqrt(pi)/2), so the bracket
    stops at the minimum of Gamma where the residual is strictly negative.
    """
    lo, hi = 1.0, P_GAMMA_MIN
    flo, fhi = _p0_residual(lo), _p0_residual(hi)
    if flo * fhi >= 0.0:
        raise RuntimeError("p0 bracket lost its sign change")
    return brentq(_p0_residual, lo, hi, xtol=1e-15, rtol=4 * 2.0**-52, maxiter=200)


def _check_p(p: float) -> float:
    p = float(p)
    if not math.isfinite(p) or p < 1.0:
        raise DomainError(f"Khinchine constants need p >= 1, got {p!r}")
    return p


def log_khinchine_real(p: float) -> float:
    p = _check_p(p)
    if p <= find_p0():
        return (0.5 - 1.0 / p) * math.log(2.0)
    return 0.5 * math.log(2.0) + (log_gamma((p + 1.0) / 2.0) - _HALF_LOG_PI) / p


def khinchine_real(p: float) -> float:
    """Best constant A_p in the real Khinchine inequality, p >= 1."""
    return math.exp(log_khinchine_real(p))


def log_khinchine_complex(p: float) -> float:
    p = _check_p(p)
    return log_gamma((p + 2.0) / 2.0) / p


def khinchine_complex(p: float) -> float:
    """Steinhaus-variable constant Gamma((p + 2)/2)**(1/p), p >= 1."""
    return math.exp(log_khinchine_complex(p))


def qi_ratio(r: float, s: float) -> float:
    """(Gamma(s)/Gamma(r))**(1/(s - r)); nondecreasing in both r and s.

    The removable singularity at r == s is left undefined.
    """
    r, s = float(r), float(s)
    if r <= 0.0 or s <= 0.0:
        raise DomainError("qi_ratio needs r, s > 0")
    if r == s:
        raise DomainError("qi_ratio is undefined at r == s")
    return math.exp((log_gamma(s) - log_gamma(r)) / (s - r))
