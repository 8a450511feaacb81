"""Data (and optional PNG renderings) for the closed-bound coefficient curves.

``pcr`` is the real case, ``pcrx`` the complex one. Each figure has two
panels: the coefficient curves p(t), c(t), r(t) on a uniform grid over [1, 2),
and the closed upper bound c(t) (n-1)**r(t) + p(t) for 2 <= n <= n_max.
"""

from __future__ import annotations

import numpy as np

from .sequences import ScalarField, closed_bound, closed_bound_coefficients

FIGURE_FIELDS = {"pcr": ScalarField.REAL, "pcrx": ScalarField.COMPLEX}


def t_grid(t_steps: int) -> np.ndarray:
    if t_steps < 2:
        raise ValueError("t_steps must be >= 2")
    return 1.0 + np.arange(t_steps) / t_steps


def coefficient_rows(name: str, t_steps: int) -> list[tuple[float, float, float, float]]:
    field = FIGURE_FIELDS[name]
    rows = []
    for t in t_grid(t_steps):
        c, r, p = closed_bound_coefficients(float(t), field)
        rows.append((float(t), p, c, r))
    return rows


def surface_rows(name: str, t_steps: int, n_max: int = 50) -> list[tuple[int, float, float]]:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    field = FIGURE_FIELDS[name]
    return [(n, float(t), closed_bound(n, float(t), field))
            for n in range(2, n_max + 1) for t in t_grid(t_steps)]


def render(name: str, coeffs, surface, path: str) -> None:
    """Two-panel PNG (or any matplotlib-supported extension) of the figure data."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    prime = "'" if name == "pcrx" else ""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    t, p, c, r = (np.array(col) for col in zip(*coeffs))
    ax1.plot(t, p, label=f"p{prime}(t)")
    ax1.plot(t, c, label=f"c{prime}(t)")
    ax1.plot(t, r, label=f"r{prime}(t)")
    ax1.set_xlabel("t")
    ax1.legend(frameon=False)

    n, ts, ub = (np.array(col) for col in zip(*surface))
    grid_t = np.unique(ts)
    grid_n = np.unique(n)
    z = ub.reshape(len(grid_n), len(grid_t))
    mesh = ax2.pcolormesh(grid_t, grid_n, z, shading="auto")
    fig.colorbar(mesh, ax=ax2, label="upper bound")
    ax2.set_xlabel("t")
    ax2.set_ylabel("n")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
