"""Hypervolume-improvement and volume queries over a finished decomposition."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .decompose import Decomposition
from .geometry import Point, as_point


def hvi_over_boxes(lowers: np.ndarray, uppers: np.ndarray, y: Sequence[float]) -> float:
    """Sum over boxes of the clipped product prod_m [u_m - max(l_m, y_m)]_+.

    Accumulation is strictly sequential in box order: a pruned decomposition's
    box sequence is a subsequence of the exact one, and inserting non-negative
    terms into a sequential float sum can only keep or raise the result, so
    approximate values never exceed exact ones even at the last bit.
    """
    if lowers.size == 0:
        return 0.0
    clipped = uppers - np.maximum(lowers, np.asarray(y, dtype=float))
    np.clip(clipped, 0.0, None, out=clipped)
    return float(np.cumsum(np.prod(clipped, axis=1))[-1])


def _checked_candidate(decomp: Decomposition, y_new: Sequence[float]) -> Point:
    y = as_point(y_new)
    if len(y) != decomp.dim:
        raise ValueError(
            f"dimension mismatch: candidate has {len(y)} coordinates, "
            f"decomposition is {decomp.dim}-dimensional"
        )
    return y


def hvi(decomp: Decomposition, y_new: Sequence[float]) -> float:
    """Hypervolume improvement of a candidate against the decomposed front."""
    y = _checked_candidate(decomp, y_new)
    return hvi_over_boxes(decomp.box_lowers, decomp.box_uppers, y)


def hvi_batch(decomp: Decomposition, candidates: Iterable[Sequence[float]]) -> list[float]:
    """Improvement per candidate, in input order."""
    lowers, uppers = decomp.box_lowers, decomp.box_uppers
    out: list[float] = []
    for idx, cand in enumerate(candidates):
        try:
            y = _checked_candidate(decomp, cand)
        except ValueError as exc:
            raise ValueError(f"candidate {idx}: {exc}") from None
        out.append(hvi_over_boxes(lowers, uppers, y))
    return out


def is_below_bound(decomp: Decomposition, y_new: Sequence[float]) -> bool:
    """Whether a candidate falls below the decomposition's lower bound corner.

    Improvement accrued below that corner is not covered by any box, so the
    returned value undercounts the true gain for such candidates.
    """
    y = _checked_candidate(decomp, y_new)
    return any(v < lo for v, lo in zip(y, decomp.bounds.lower))


def below_bound_flags(
    decomp: Decomposition, candidates: Iterable[Sequence[float]]
) -> list[bool]:
    return [is_below_bound(decomp, cand) for cand in candidates]


def nondominated_volume(decomp: Decomposition) -> float:
    """Total volume of the accepted boxes, summed sequentially in box order."""
    if not decomp.boxes:
        return 0.0
    sides = decomp.box_uppers - decomp.box_lowers
    return float(np.cumsum(np.prod(sides, axis=1))[-1])


def dominated_hv(decomp: Decomposition) -> float:
    """Hypervolume dominated by the front, w.r.t. the upper bound corner.

    Only meaningful for exact decompositions: with alpha > 0 the box set
    undercounts the non-dominated volume, so the complement overcounts.
    """
    if decomp.config.alpha != 0.0:
        raise ValueError(
            "approximate decomposition underestimates the non-dominated volume; "
            "dominated HV unavailable"
        )
    return decomp.h_all - nondominated_volume(decomp)
