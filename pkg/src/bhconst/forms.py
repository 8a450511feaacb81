"""Sup norms of multilinear forms and homogeneous polynomials.

Real multilinear forms get an exact sup norm over the product of unit cubes
(the maximum sits at a vertex because the form is affine in each argument).
Complex polynomials get a lower estimate by phase coordinate ascent on the
torus, plus the closed form for 2-homogeneous polynomials in two variables.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .special_fn import DomainError

DEFAULT_SIGN_CAP = 26


class CapacityError(RuntimeError):
    """Requested enumeration exceeds the configured size cap."""


class DegenerateError(ValueError):
    """Operation undefined for the zero form."""


@dataclass
class MultilinearForm:
    """Dense coefficient tensor a[i1, ..., im] = U(e_i1, ..., e_im)."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.coeffs)
        if not np.iscomplexobj(a):
            a = a.astype(float)
        if a.ndim < 1 or 0 in a.shape:
            raise DomainError("a multilinear form needs m >= 1 and every dim >= 1")
        if not np.all(np.isfinite(a)):
            raise DomainError("coefficients must be finite")
        self.coeffs = a

    @property
    def m(self) -> int:
        return self.coeffs.ndim

    @property
    def dims(self) -> tuple[int, ...]:
        return self.coeffs.shape

    @property
    def is_real(self) -> bool:
        return not np.iscomplexobj(self.coeffs)

    def __call__(self, *xs) -> complex | float:
        out = self.coeffs
        for x in reversed(xs):
            out = out @ np.asarray(x)
        return out.item() if np.ndim(out) == 0 else out

    def coefficient_list(self) -> np.ndarray:
        return self.coeffs.ravel()


@dataclass
class HomogeneousPolynomial:
    """Sparse m-homogeneous polynomial in n variables, keyed by exponent tuples."""

    m: int
    n: int
    coeffs: dict[tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DomainError("need degree m >= 1 and n >= 1 variables")
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n or min(alpha) < 0 or sum(alpha) != self.m:
                raise DomainError(f"bad multi-index {alpha} for m={self.m}, n={self.n}")
            clean[alpha] = c
        self.coeffs = clean

    @classmethod
    def from_terms(cls, m: int, n: int, terms) -> "HomogeneousPolynomial":
        return cls(m, n, dict(terms))

    def exponent_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        keys = list(self.coeffs)
        e = np.array(keys, dtype=float).reshape(len(keys), self.n)
        c = np.array([self.coeffs[k] for k in keys], dtype=complex)
        return e, c

    def __call__(self, z) -> complex:
        z = np.asarray(z, dtype=complex)
        return complex(sum(c * np.prod(z ** np.array(a)) for a, c in self.coeffs.items()))

    def coefficient_list(self) -> np.ndarray:
        return np.array(list(self.coeffs.values()))


def multi_indices(m: int, n: int):
    """All exponent tuples of length n summing to m, in lexicographic-descending order."""
    for combo in itertools.combinations_with_replacement(range(n), m):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        yield tuple(alpha)


# ---------------------------------------------------------------------------
# Real multilinear sup norm
# ---------------------------------------------------------------------------


def _sign_matrix(d: int) -> np.ndarray:
    """All 2**(d-1) sign vectors with first entry +1, as columns (d, 2**(d-1))."""
    if d == 1:
        return np.ones((1, 1))
    bits = (np.arange(1 << (d - 1))[None, :] >> np.arange(d - 1)[:, None]) & 1
    return np.vstack([np.ones((1, bits.shape[1])), 1.0 - 2.0 * bits])


def sup_norm_real_exact(form: MultilinearForm, cap: int = DEFAULT_SIGN_CAP, chunk: int = 1 << 14) -> float:
    """Exact sup of |U| over the product of real unit cubes.

    Enumerates signs of arguments 2..m (first coordinate of each fixed to +1,
    since flipping a whole argument only flips the sign of U) and eliminates
    argument 1 via the sum of absolute values.
    """
    if not form.is_real:
        raise DomainError("sup_norm_real_exact needs real coefficients")
    dims = form.dims
    bits = sum(dims[1:])
    if bits > cap:
        raise CapacityError(f"sign space 2**{bits} exceeds cap 2**{cap}")
    a = form.coeffs.reshape(dims[0], -1)
    if form.m == 1:
        return float(np.abs(a).sum())
    signs = [_sign_matrix(d) for d in dims[1:]]
    # Arguments 2..m-1 are enumerated in an outer loop; argument m in chunks.
    outer = signs[:-1]
    last = signs[-1]
    best = 0.0
    for cols in itertools.product(*[range(s.shape[1]) for s in outer]):
        v = a.reshape(dims[0], *dims[1:])
        for s, c in zip(outer, cols):
            v = np.tensordot(v, s[:, c], axes=([1], [0]))
        # v has shape (d1, dm)
        for start in range(0, last.shape[1], chunk):
            block = v @ last[:, start:start + chunk]
            best = max(best, float(np.abs(block).sum(axis=0).max()))
    return best


def coeff_lq_norm(obj, q: float) -> float:
    """l_q norm of the coefficient list of a form or polynomial (q >= 1)."""
    q = float(q)
    if not q >= 1.0:
        raise DomainError(f"q must be >= 1, got {q!r}")
    c = np.abs(obj.coefficient_list())
    if c.size == 0:
        return 0.0
    top = c.max()
    if top == 0.0:
        return 0.0
    return float(top * np.sum((c / top) ** q) ** (1.0 / q))


def bh_ratio(form: MultilinearForm, q: float) -> float:
    """coeff_lq_norm / sup norm; a lower bound for the optimal BH constant."""
    sup = sup_norm_real_exact(form)
    if sup == 0.0:
        raise DegenerateError("bh_ratio is undefined for the zero form")
    return coeff_lq_norm(form, q) / sup


def littlewood_form() -> MultilinearForm:
    """x1 y1 + x1 y2 + x2 y1 - x2 y2."""
    return MultilinearForm(np.array([[1.0, 1.0], [1.0, -1.0]]))


# ---------------------------------------------------------------------------
# 2-homogeneous polynomials in two variables
# ---------------------------------------------------------------------------


def norm_p2_complex(a: float, b: float, c: float) -> float:
    """Sup of |a z1^2 + b z2^2 + c z1 z2| over the closed bidisc, a, b, c real."""
    a, b, c = float(a), float(b), float(c)
    if a * b >= 0 or abs(c * (a + b)) > 4 * abs(a * b):
        return abs(a + b) + abs(c)
    return (abs(a) + abs(b)) * math.sqrt(1.0 + c * c / (4.0 * abs(a * b)))


def _edge_max(a0: float, a1: float, a2: float) -> float:
    """max over s in [-1, 1] of |a0 + a1 s + a2 s^2|."""
    cands = [-1.0, 1.0]
    if a2 != 0.0:
        s = -a1 / (2.0 * a2)
        if -1.0 < s < 1.0:
            cands.append(s)
    return max(abs(a0 + a1 * s + a2 * s * s) for s in cands)


def norm_p2_real(a: float, b: float, c: float) -> float:
    """Sup of |a x^2 + b y^2 + c x y| over [-1, 1]^2.

    Interior critical points of a homogeneous quadratic have value 0 (Euler's
    identity), so the maximum lies on the boundary; each edge is a quadratic
    in one variable. Edges x = -1 and y = -1 mirror x = 1 and y = 1.
    """
    a, b, c = float(a), float(b), float(c)
    return max(
        _edge_max(a, c, b),  # x = 1, y = s
        _edge_max(b, c, a),  # y = 1, x = s
    )


# ---------------------------------------------------------------------------
# Complex polynomial sup norm (lower estimate)
# ---------------------------------------------------------------------------


def _ascent(e: np.ndarray, c: np.ndarray, theta: np.ndarray, grid: np.ndarray, xtol: float,
            max_sweeps: int) -> tuple[float, np.ndarray]:
    n = e.shape[1]
    phase = e @ theta
    val = abs(np.sum(c * np.exp(1j * phase)))
    for _ in range(max_sweeps):
        before = val
        # Coordinate 0 is fixed: a common rotation of all phases leaves |P| unchanged.
        for j in range(1, n) if n > 1 else ():
            rest = c * np.exp(1j * (phase - e[:, j] * theta[j]))
            ej = e[:, j]

            def f(x):
                return -abs(np.sum(rest * np.exp(1j * ej * x)))

            scan = np.abs(rest @ np.exp(1j * np.outer(ej, grid)))
            i = int(np.argmax(scan))
            step = grid[1] - grid[0]
            res = minimize_scalar(f, bounds=(grid[i] - step, grid[i] + step), method="bounded",
                                  options={"xatol": xtol})
            cand, cand_val = float(res.x), -float(res.fun)
            if cand_val < scan[i]:
                cand, cand_val = float(grid[i]), float(scan[i])
            if cand_val > val:
                theta[j] = cand
                phase = e @ theta
                val = abs(np.sum(c * np.exp(1j * phase)))
        if val - before <= 1e-15 * max(1.0, val):
            break
    return val, theta


def sup_norm_complex_estimate(poly: HomogeneousPolynomial, restarts: int = 32, seed: int = 0,
                              grid_size: int = 64, xtol: float = 1e-9, max_sweeps: int = 200) -> float:
    """Lower estimate of sup |P| on the unit polydisc.

    By the maximum modulus principle the sup is attained on the torus, so the
    search runs over phase vectors. Each restart starts from random phases and
    cycles through coordinates, maximizing over one phase at a time (grid scan
    then bounded golden-section/Brent refinement to ``xtol``). Restart 0 uses
    all-zero phases. Deterministic for a given seed.
    """
    if restarts < 1:
        raise DomainError("restarts must be >= 1")
    if not poly.coeffs:
        return 0.0
    e, c = poly.exponent_matrix()
    n = poly.n
    grid = np.linspace(0.0, 2.0 * math.pi, grid_size, endpoint=False)
    streams = np.random.SeedSequence(seed).spawn(restarts)
    best = 0.0
    for r, ss in enumerate(streams):
        rng = np.random.Generator(np.random.Philox(ss))
        theta = np.zeros(n) if r == 0 else rng.uniform(0.0, 2.0 * math.pi, n)
        theta[0] = 0.0
        val, _ = _ascent(e, c, theta, grid, xtol, max_sweeps)
        best = max(best, val)
    return float(best)


def p2_polynomial(a: float, b: float, c: float) -> HomogeneousPolynomial:
    """a z1^2 + b z2^2 + c z1 z2."""
    return HomogeneousPolynomial(2, 2, {(2, 0): a, (0, 2): b, (1, 1): c})


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------


def _entry(index, value) -> list:
    value = complex(value)
    row = [int(i) for i in index] + [value.real]
    if value.imag != 0.0:
        row.append(value.imag)
    return row


def to_json_obj(obj) -> dict:
    """{kind, m, dims|n, entries: [[index..., re, im?], ...]}; zero entries omitted."""
    if isinstance(obj, MultilinearForm):
        entries = [_entry(idx, v) for idx, v in np.ndenumerate(obj.coeffs) if v != 0]
        return {"kind": "multilinear", "m": obj.m, "dims": list(obj.dims), "entries": entries}
    if isinstance(obj, HomogeneousPolynomial):
        entries = [_entry(alpha, v) for alpha, v in obj.coeffs.items()]
        return {"kind": "polynomial", "m": obj.m, "n": obj.n, "entries": entries}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_json_obj(data: dict):
    kind, m = data.get("kind"), int(data["m"])
    if kind == "multilinear":
        dims = tuple(int(d) for d in data["dims"])
        if len(dims) != m:
            raise DomainError("len(dims) must equal m")
        entries = data["entries"]
        cplx = any(len(row) == m + 2 for row in entries)
        a = np.zeros(dims, dtype=complex if cplx else float)
        for row in entries:
            idx = tuple(int(i) for i in row[:m])
            a[idx] = complex(row[m], row[m + 1]) if len(row) == m + 2 else row[m]
        return MultilinearForm(a)
    if kind == "polynomial":
        n = int(data["n"])
        terms = {}
        for row in data["entries"]:
            alpha = tuple(int(i) for i in row[:n])
            val = complex(row[n], row[n + 1]) if len(row) == n + 2 else float(row[n])
            terms[alpha] = val
        return HomogeneousPolynomial(m, n, terms)
    raise DomainError(f"unknown kind {kind!r}")
