"""Maximisation of angle objectives over [0, pi/2]^d: grid search then refinement."""

from __future__ import annotations

import math
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .. import config

Objective = Callable[..., np.ndarray]

UPPER = math.pi / 2


def theta_grid(points: Optional[int] = None) -> np.ndarray:
    """Closed grid over [0, pi/2]; the default 721 points include pi/4 and pi/2."""
    count = config.THETA_GRID_POINTS if points is None else points
    return np.linspace(0.0, UPPER, count)


def maximize_angles(
    objective: Objective,
    dims: int = 1,
    points: Optional[int] = None,
) -> Tuple[float, Tuple[float, ...]]:
    """Maximise ``objective(theta_1, ..., theta_dims)``.

    The objective must broadcast over numpy arrays. The best grid point is
    refined locally (bounded scalar search in one dimension, L-BFGS-B
    otherwise) and the better of grid and refined point is returned.

    Returns:
        (maximum value, maximising angles)
    """
    grid = theta_grid(points)
    step = grid[1] - grid[0]
    tolerance = config.THETA_TOLERANCE

    if dims == 1:
        values = objective(grid)
        best = int(np.argmax(values))
        low = max(grid[best] - step, 0.0)
        high = min(grid[best] + step, UPPER)
        refined = minimize_scalar(
            lambda t: -float(objective(t)),
            bounds=(low, high),
            method="bounded",
            options={"xatol": tolerance},
        )
        candidates = [(float(values[best]), (float(grid[best]),))]
        if refined.success:
            theta = float(refined.x)
            candidates.append((float(objective(theta)), (theta,)))
        return max(candidates, key=lambda item: item[0])

    mesh = np.meshgrid(*([grid] * dims), indexing="ij")
    values = objective(*mesh)
    index = np.unravel_index(int(np.argmax(values)), values.shape)
    start = np.array([grid[k] for k in index])
    refined = minimize(
        lambda x: -float(objective(*x)),
        start,
        method="L-BFGS-B",
        bounds=[(0.0, UPPER)] * dims,
        options={"ftol": 1e-15, "gtol": 1e-12},
    )
    candidates = [(float(values[index]), tuple(float(t) for t in start))]
    angles = tuple(float(t) for t in np.clip(refined.x, 0.0, UPPER))
    candidates.append((float(objective(*angles)), angles))
    return max(candidates, key=lambda item: item[0])
