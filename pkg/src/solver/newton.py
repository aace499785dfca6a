"""
Floating-point cross-check: multi-start damped Newton on the Ricci differences.

Used only to confirm the certified solution counts and locations; nothing
here feeds back into the certified pipeline.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import sympy as sp

from ..exactmath.multivariate import symbols_for
from ..flagmodel.ricci import ricci_formula
from ..flagmodel.space import FlagSpace, make_flag_space
from ..utils.config import get_config
from ..utils.logger import get_logger

logger = get_logger("solver.newton")

UNKNOWNS = ("x2", "x3", "x4")


@dataclass
class NewtonCluster:
    """Converged Newton limits within cluster_radius of each other."""
    center: tuple[float, float, float, float]
    size: int

    @property
    def x3(self) -> float:
        return self.center[2]


class RicciResidual:
    """r1 - r3, r1 - r2, r3 - r4 at x1 = 1, with the exact Jacobian, compiled to numpy."""

    def __init__(self, space: FlagSpace):
        unknowns = symbols_for(UNKNOWNS)
        r1, r2, r3, r4 = ricci_formula(space, sp.Integer(1), *unknowns)
        differences = [r1 - r3, r1 - r2, r3 - r4]
        self.values = sp.lambdify(unknowns, differences, "numpy")
        self.jacobian = sp.lambdify(unknowns, sp.Matrix(differences).jacobian(unknowns).tolist(), "numpy")

    @staticmethod
    def _stack(rows, count: int) -> np.ndarray:
        # constant entries come back as scalars
        return np.stack([np.broadcast_to(np.asarray(r, dtype=float), (count,)) for r in rows], axis=-1)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        # points: (N, 3) -> (N, 3)
        return self._stack(self.values(*points.T), len(points))

    def jac(self, points: np.ndarray) -> np.ndarray:
        rows = self.jacobian(*points.T)
        return np.stack([self._stack(row, len(points)) for row in rows], axis=1)


def _starting_grid(density: int, upper: float) -> np.ndarray:
    axis = upper * np.arange(1, density + 1) / density
    grid = np.meshgrid(axis, axis, axis, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def damped_newton(
    residual: RicciResidual,
    starts: np.ndarray,
    max_iterations: int,
    tolerance: float,
) -> np.ndarray:
    """Iterate every start at once; returns the converged positive limits."""
    x = starts.astype(float).copy()
    active = np.ones(len(x), dtype=bool)
    converged = np.zeros(len(x), dtype=bool)

    with np.errstate(all="ignore"):
        for _ in range(max_iterations):
            if not active.any():
                break
            idx = np.flatnonzero(active)
            fx = residual(x[idx])
            norm = np.linalg.norm(fx, axis=1)
            done = norm < tolerance
            converged[idx[done]] = True
            active[idx[done]] = False

            idx = idx[~done]
            if idx.size == 0:
                break
            fx, norm = fx[~done], norm[~done]
            step = -np.einsum("nij,nj->ni", np.linalg.pinv(residual.jac(x[idx])), fx)

            accepted = np.zeros(idx.size, dtype=bool)
            damping = 1.0
            for _ in range(30):
                trial = x[idx] + damping * step
                positive = np.all(trial > 0, axis=1)
                trial_norm = np.full(idx.size, np.inf)
                if positive.any():
                    trial_norm[positive] = np.linalg.norm(residual(trial[positive]), axis=1)
                better = ~accepted & positive & (trial_norm < norm)
                x[idx[better]] = trial[better]
                accepted |= better
                if accepted.all():
                    break
                damping /= 2
            stalled = ~accepted | ~np.all(np.isfinite(x[idx]), axis=1)
            active[idx[stalled]] = False

    return x[converged & np.all(x > 0, axis=1)]


def cluster_limits(points: np.ndarray, radius: float) -> list[NewtonCluster]:
    """Group converged limits with DBSCAN; clusters sorted by x3."""
    from sklearn.cluster import DBSCAN

    if len(points) == 0:
        return []
    labels = DBSCAN(eps=radius, min_samples=1).fit(points).labels_
    clusters = []
    for label in np.unique(labels):
        members = points[labels == label]
        x2, x3, x4 = members.mean(axis=0)
        clusters.append(NewtonCluster((1.0, float(x2), float(x3), float(x4)), int(len(members))))
    return sorted(clusters, key=lambda c: (c.x3, c.center[1]))


def newton_oracle(
    n: int,
    p: int,
    grid_density: Optional[int] = None,
    upper: Optional[float] = None,
) -> list[NewtonCluster]:
    """Approximate Einstein metrics (x1 = 1) from a positive grid of starts."""
    config = get_config()
    grid_density = grid_density or config.newton_grid_density
    upper = upper or config.newton_upper
    space = make_flag_space(n, p)

    residual = RicciResidual(space)
    limits = damped_newton(
        residual,
        _starting_grid(grid_density, upper),
        config.newton_max_iterations,
        config.newton_tolerance,
    )
    clusters = cluster_limits(limits, config.newton_cluster_radius)
    logger.info(f"{space}: {len(limits)} Newton starts converged into {len(clusters)} clusters")
    return clusters
