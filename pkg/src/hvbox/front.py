"""Validated Pareto fronts with per-objective sorted coordinate grids.

A front stores, for every objective m, the sorted multiset of the m-th
coordinates of its points bracketed by two sentinel values: one unit below
the smallest coordinate and one unit above the largest.  The decomposition
walks index windows over these grids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geometry import Point, as_point

Grid = tuple[float, ...]


def _sentinel_grids(points: Sequence[Point], dim: int) -> tuple[Grid, ...]:
    grids = []
    for m in range(dim):
        vals = sorted(p[m] for p in points)
        grids.append((vals[0] - 1.0, *vals, vals[-1] + 1.0))
    return tuple(grids)


def _dominated_mask(arr: np.ndarray) -> np.ndarray:
    """Boolean mask of rows that some other row strictly dominates."""
    weak = (arr[:, None, :] <= arr[None, :, :]).all(axis=-1)
    differs = (arr[:, None, :] != arr[None, :, :]).any(axis=-1)
    return (weak & differs).any(axis=0)


@dataclass(frozen=True)
class ParetoFront:
    """Immutable anti-chain of objective vectors plus sentinel grids."""

    points: tuple[Point, ...]
    dim: int = field(init=False)
    grids: tuple[Grid, ...] = field(init=False)

    def __post_init__(self) -> None:
        points = tuple(as_point(p) for p in self.points)
        if not points:
            raise ValueError("empty front")
        dim = len(points[0])
        for p in points[1:]:
            if len(p) != dim:
                raise ValueError(f"dimension mismatch: {len(p)} vs {dim}")
        arr = np.asarray(points, dtype=float)
        if _dominated_mask(arr).any():
            raise ValueError("front points must be mutually non-dominated")
        if len(set(points)) != len(points):
            raise ValueError("front points must be distinct")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "grids", _sentinel_grids(points, dim))

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)


def pareto_filter(points: Iterable[Sequence[float]]) -> ParetoFront:
    """Reduce raw observations to their maximal anti-chain.

    Strictly dominated points are dropped and exact duplicates collapse to
    the first occurrence; survivor order follows input order.
    """
    rows = [as_point(p) for p in points]
    if not rows:
        raise ValueError("empty front")
    dim = len(rows[0])
    for p in rows[1:]:
        if len(p) != dim:
            raise ValueError(f"dimension mismatch: {len(p)} vs {dim}")
    dominated = _dominated_mask(np.asarray(rows, dtype=float))
    keep: list[Point] = []
    seen: set[Point] = set()
    for idx, p in enumerate(rows):
        if dominated[idx] or p in seen:
            continue
        seen.add(p)
        keep.append(p)
    return ParetoFront(points=tuple(keep))


def build_grids(front: ParetoFront) -> tuple[Grid, ...]:
    """Recompute the sentinel grids from the front's point multiset."""
    return _sentinel_grids(front.points, front.dim)
