"""Stack-driven bisection of the non-dominated region into axis-aligned boxes.

Index windows over the per-objective sorted grids are explored with an
explicit LIFO stack.  A popped window is accepted outright when no front
point lies strictly below its upper corner (its interior then cannot touch
dominated space).  Otherwise it is discarded when its lower corner is
weakly dominated (its interior is entirely dominated), when no index range
can be split further, or when its volume is at most the pruning threshold
alpha * H_all; surviving windows are bisected along their widest index
range and both halves are pushed back.

Point-versus-corner tests run on precomputed per-grid-value bitmasks, one
bit per front point, so each test is a handful of integer ANDs regardless
of front size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .front import ParetoFront
from .geometry import HyperRectangle, Point, as_point

MODE_SENTINEL = "sentinel"
MODE_CLIPPED = "clipped"


@dataclass(frozen=True)
class DecomposeConfig:
    """Pruning tolerance and bounding-box overrides for one decomposition run.

    alpha is the relative volume tolerance in [0, 1); 0 disables pruning and
    yields the exact decomposition.  When `reference` is given the upper
    grid sentinels are clipped to it instead of padding one unit above the
    largest coordinates; `ideal`, when given, replaces the lower sentinels.
    """

    alpha: float = 1e-3
    reference: Point | None = None
    ideal: Point | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError("alpha must be in [0,1)")
        if self.reference is not None:
            object.__setattr__(self, "reference", as_point(self.reference))
        if self.ideal is not None:
            object.__setattr__(self, "ideal", as_point(self.ideal))

    @property
    def mode(self) -> str:
        return MODE_CLIPPED if self.reference is not None else MODE_SENTINEL


@dataclass(frozen=True)
class Diagnostics:
    """Counters recorded while the stack is drained."""

    iterations: int
    accepted: int
    pruned_dominated: int
    pruned_resolution: int
    pruned_volume: int
    max_depth: int

    @property
    def splits(self) -> int:
        return (
            self.iterations
            - self.accepted
            - self.pruned_dominated
            - self.pruned_resolution
            - self.pruned_volume
        )


@dataclass(frozen=True)
class Decomposition:
    """Accepted box set plus bounding volumes and run diagnostics."""

    boxes: tuple[HyperRectangle, ...]
    h_all: float
    h_tol: float
    bounds: HyperRectangle
    front: ParetoFront
    config: DecomposeConfig
    diagnostics: Diagnostics

    @property
    def dim(self) -> int:
        return self.front.dim

    @cached_property
    def box_lowers(self) -> np.ndarray:
        return np.asarray([b.lower for b in self.boxes], dtype=float).reshape(
            len(self.boxes), self.dim
        )

    @cached_property
    def box_uppers(self) -> np.ndarray:
        return np.asarray([b.upper for b in self.boxes], dtype=float).reshape(
            len(self.boxes), self.dim
        )


def box_count_bound(alpha: float) -> int:
    """Guaranteed cap ceil(2 / alpha) on the number of accepted boxes."""
    if alpha == 0:
        raise ValueError("unbounded (exact mode)")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must be in [0,1)")
    return math.ceil(2.0 / alpha)


def effective_grids(front: ParetoFront, config: DecomposeConfig) -> tuple[tuple[float, ...], ...]:
    """Sentinel grids with the config's reference/ideal overrides applied."""
    grids = [list(g) for g in front.grids]
    if config.reference is not None:
        if len(config.reference) != front.dim:
            raise ValueError(
                f"dimension mismatch: reference has {len(config.reference)} "
                f"coordinates, front is {front.dim}-dimensional"
            )
        for m, r in enumerate(config.reference):
            largest = grids[m][-2]
            if r < largest:
                raise ValueError(
                    f"reference[{m}] = {r} is below the largest front coordinate {largest}"
                )
            grids[m][-1] = r
    if config.ideal is not None:
        if len(config.ideal) != front.dim:
            raise ValueError(
                f"dimension mismatch: ideal has {len(config.ideal)} "
                f"coordinates, front is {front.dim}-dimensional"
            )
        for m, v in enumerate(config.ideal):
            smallest = grids[m][1]
            if v > smallest:
                raise ValueError(
                    f"ideal[{m}] = {v} exceeds the smallest front coordinate {smallest}"
                )
            grids[m][0] = v
    return tuple(tuple(g) for g in grids)


def _corner_masks(
    points: tuple[Point, ...], grids: tuple[tuple[float, ...], ...]
) -> tuple[list[list[int]], list[list[int]]]:
    """Per grid value, bitmasks of points strictly below / at-or-below it."""
    n = len(points)
    strict: list[list[int]] = []
    weak: list[list[int]] = []
    for m, grid in enumerate(grids):
        order = sorted(range(n), key=lambda i: points[i][m])
        vals = [points[i][m] for i in order]
        srow: list[int] = []
        wrow: list[int] = []
        acc_s = acc_w = 0
        ps = pw = 0
        for g in grid:
            while ps < n and vals[ps] < g:
                acc_s |= 1 << order[ps]
                ps += 1
            while pw < n and vals[pw] <= g:
                acc_w |= 1 << order[pw]
                pw += 1
            srow.append(acc_s)
            wrow.append(acc_w)
        strict.append(srow)
        weak.append(wrow)
    return strict, weak


def decompose(front: ParetoFront, config: DecomposeConfig | None = None) -> Decomposition:
    """Decompose the space not dominated by `front` into disjoint boxes.

    Split dimension is the widest index range, lowest dimension on ties;
    the low half is pushed before the high half, so the high half is
    processed first.  Output box order is therefore deterministic.
    """
    if config is None:
        config = DecomposeConfig()
    grids = effective_grids(front, config)
    dim = front.dim
    top = len(front.points) + 1

    lower_corner = tuple(g[0] for g in grids)
    upper_corner = tuple(g[-1] for g in grids)
    h_all = 1.0
    for lo, up in zip(lower_corner, upper_corner):
        h_all *= up - lo
    h_tol = config.alpha * h_all

    strict_below, weak_below = _corner_masks(front.points, grids)

    boxes: list[HyperRectangle] = []
    iterations = accepted = pruned_dominated = pruned_resolution = pruned_volume = 0
    max_depth = 0
    stack: list[tuple[tuple[int, ...], tuple[int, ...], int]] = [
        ((0,) * dim, (top,) * dim, 0)
    ]
    while stack:
        los, his, depth = stack.pop()
        iterations += 1
        if depth > max_depth:
            max_depth = depth

        hits = strict_below[0][his[0]]
        for m in range(1, dim):
            hits &= strict_below[m][his[m]]
        if not hits:
            boxes.append(
                HyperRectangle(
                    tuple(grids[m][los[m]] for m in range(dim)),
                    tuple(grids[m][his[m]] for m in range(dim)),
                )
            )
            accepted += 1
            continue

        mstar = 0
        widest = his[0] - los[0]
        for m in range(1, dim):
            width = his[m] - los[m]
            if width > widest:
                mstar, widest = m, width

        covered = weak_below[0][los[0]]
        for m in range(1, dim):
            covered &= weak_below[m][los[m]]
        if covered:
            pruned_dominated += 1
            continue
        if widest <= 1:
            pruned_resolution += 1
            continue
        volume = 1.0
        for m in range(dim):
            volume *= grids[m][his[m]] - grids[m][los[m]]
        if volume <= h_tol:
            pruned_volume += 1
            continue

        mid = (los[mstar] + his[mstar]) // 2
        stack.append((los, his[:mstar] + (mid,) + his[mstar + 1 :], depth + 1))
        stack.append((los[:mstar] + (mid,) + los[mstar + 1 :], his, depth + 1))

    diagnostics = Diagnostics(
        iterations=iterations,
        accepted=accepted,
        pruned_dominated=pruned_dominated,
        pruned_resolution=pruned_resolution,
        pruned_volume=pruned_volume,
        max_depth=max_depth,
    )
    return Decomposition(
        boxes=tuple(boxes),
        h_all=h_all,
        h_tol=h_tol,
        bounds=HyperRectangle(lower_corner, upper_corner),
        front=front,
        config=config,
        diagnostics=diagnostics,
    )
