"""Points, axis-aligned boxes, and the comparison predicates everything else builds on.

Minimization convention throughout: smaller objective values are better.
Comparisons are exact; no epsilon is applied anywhere, because the
decomposition is combinatorial over sorted coordinate grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple[float, ...]


def as_point(values: Iterable[float]) -> Point:
    """Coerce a coordinate sequence to an immutable point.

    Rejects empty input and non-finite coordinates.
    """
    coords = tuple(float(v) for v in values)
    if not coords:
        raise ValueError("point needs at least one coordinate")
    for c in coords:
        if not math.isfinite(c):
            raise ValueError(f"point coordinates must be finite, got {c!r}")
    return coords


def _require_same_dim(a: Sequence[float], b: Sequence[float]) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def strictly_dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff a <= b in every coordinate and a != b."""
    _require_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b)) and any(x != y for x, y in zip(a, b))


def weakly_dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff a <= b in every coordinate."""
    _require_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def strictly_below(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff a < b in every coordinate."""
    _require_same_dim(a, b)
    return all(x < y for x, y in zip(a, b))


@dataclass(frozen=True)
class HyperRectangle:
    """Axis-aligned box [lower, upper] in objective space."""

    lower: Point
    upper: Point

    def __post_init__(self) -> None:
        lower = as_point(self.lower)
        upper = as_point(self.upper)
        _require_same_dim(lower, upper)
        if any(lo > up for lo, up in zip(lower, upper)):
            raise ValueError(
                f"box lower corner must not exceed upper corner: {lower} vs {upper}"
            )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return len(self.lower)


def box_volume(box: HyperRectangle) -> float:
    # Fixed ascending-dimension accumulation keeps volume comparisons
    # deterministic across runs and platforms.
    volume = 1.0
    for lo, up in zip(box.lower, box.upper):
        volume *= up - lo
    return volume
