"""Brute-force hypervolume ground truth and seeded random front generation.

The inclusion-exclusion computation here is the independent reference used
by the test suite; it deliberately shares no code with the decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .front import ParetoFront, pareto_filter
from .geometry import Point, as_point

ORACLE_POINT_LIMIT = 20

_SHAPES = ("sphere_like", "linear", "random_antichain")


def hv_inclusion_exclusion(points: Iterable[Sequence[float]], r: Sequence[float]) -> float:
    """Exact hypervolume dominated by `points` and bounded above by `r`.

    Sums signed volumes over every non-empty subset: the subset's joint
    worst corner against r, clipped at zero per coordinate.  Cost is
    2^len(points), so the input size is capped at ORACLE_POINT_LIMIT.
    """
    ref = as_point(r)
    rows = [as_point(p) for p in points]
    for p in rows:
        if len(p) != len(ref):
            raise ValueError(f"dimension mismatch: {len(p)} vs {len(ref)}")
        if any(pm > rm for pm, rm in zip(p, ref)):
            raise ValueError(f"point {p} does not weakly dominate the reference point {ref}")
    n = len(rows)
    if n == 0:
        return 0.0
    if n > ORACLE_POINT_LIMIT:
        raise ValueError(
            f"oracle limit: inclusion-exclusion supports at most {ORACLE_POINT_LIMIT} points, got {n}"
        )

    arr = np.asarray(rows, dtype=float)
    ref_arr = np.asarray(ref, dtype=float)
    bit = np.arange(n)
    total = 0.0
    chunk = 1 << 14
    for start in range(1, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n))
        member = ((masks[:, None] >> bit[None, :]) & 1).astype(bool)
        worst = np.where(member[:, :, None], arr[None, :, :], -np.inf).max(axis=1)
        sides = np.clip(ref_arr[None, :] - worst, 0.0, None)
        signs = np.where(member.sum(axis=1) % 2 == 1, 1.0, -1.0)
        total += float(np.sum(signs * sides.prod(axis=1)))
    return total


def hvi_oracle(
    front: Iterable[Sequence[float]], y_new: Sequence[float], r: Sequence[float]
) -> float:
    """Hypervolume gained when y_new joins the point set, bounded by r."""
    rows = [as_point(p) for p in front]
    y = as_point(y_new)
    base = hv_inclusion_exclusion(rows, r)
    augmented = hv_inclusion_exclusion([*rows, y], r)
    return max(0.0, augmented - base)


@dataclass(frozen=True)
class RandomFrontSpec:
    """Seeded recipe for a random mutually non-dominated point set."""

    n_points: int
    dim: int
    seed: int
    shape: str = "sphere_like"

    def __post_init__(self) -> None:
        if self.n_points < 1:
            raise ValueError("n_points must be at least 1")
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.shape not in _SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; choose one of {_SHAPES}")


def _assemble_antichain(
    n: int,
    sampler: Callable[[], np.ndarray],
    budget_factor: int = 1000,
) -> list[Point]:
    picked: list[Point] = []
    rows: list[np.ndarray] = []
    attempts = 0
    max_attempts = budget_factor * n
    while len(picked) < n:
        if attempts >= max_attempts:
            raise ValueError(
                f"could not assemble an anti-chain of {n} points within "
                f"{max_attempts} resampling attempts"
            )
        attempts += 1
        cand = sampler()
        if rows:
            existing = np.asarray(rows)
            comparable = (existing <= cand).all(axis=1) | (existing >= cand).all(axis=1)
            if comparable.any():
                continue
        rows.append(cand)
        picked.append(tuple(float(v) for v in cand))
    return picked


def generate_front(spec: RandomFrontSpec) -> ParetoFront:
    """Deterministically generate a front of exactly spec.n_points points."""
    rng = np.random.default_rng(spec.seed)
    m = spec.dim
    if spec.shape == "sphere_like":
        def sampler() -> np.ndarray:
            raw = np.abs(rng.standard_normal(m))
            norm = float(np.linalg.norm(raw))
            return 10.0 * raw / norm if norm > 0.0 else np.full(m, 10.0 / np.sqrt(m))
    elif spec.shape == "linear":
        def sampler() -> np.ndarray:
            return 10.0 * rng.dirichlet(np.ones(m))
    else:
        def sampler() -> np.ndarray:
            return 10.0 * rng.random(m)
    points = _assemble_antichain(spec.n_points, sampler)
    return pareto_filter(points)
