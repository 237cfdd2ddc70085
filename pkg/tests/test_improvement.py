import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hvbox import (
    DecomposeConfig,
    RandomFrontSpec,
    below_bound_flags,
    decompose,
    dominated_hv,
    generate_front,
    hvi,
    hvi_batch,
    hvi_oracle,
    is_below_bound,
    nondominated_volume,
    pareto_filter,
)

from conftest import upper_margin_reference


@pytest.fixture
def clipped_exact(three_point_front):
    front = pareto_filter(three_point_front)
    return decompose(front, DecomposeConfig(alpha=0.0, reference=(10, 10)))


def test_single_box_formula():
    # two corner points make the whole bounding box non-dominated
    front = pareto_filter([(0, 2), (2, 0)])
    decomp = decompose(
        front, DecomposeConfig(alpha=0.0, reference=(2, 2), ideal=(0, 0))
    )
    assert [(b.lower, b.upper) for b in decomp.boxes] == [((0.0, 0.0), (2.0, 2.0))]
    assert hvi(decomp, (1, 1)) == 1.0


def test_worked_example_values(clipped_exact):
    assert hvi(clipped_exact, (1, 1)) == 45.0
    assert hvi(clipped_exact, (9, 9)) == 0.0
    assert hvi(clipped_exact, (6, 4)) == 0.0


def test_dominated_candidates_get_zero(clipped_exact):
    rng = np.random.default_rng(2)
    points = clipped_exact.front.points
    for _ in range(50):
        base = points[rng.integers(len(points))]
        bump = rng.uniform(0, 2, size=2)
        assert hvi(clipped_exact, (base[0] + bump[0], base[1] + bump[1])) == 0.0


def test_hvi_dimension_mismatch(clipped_exact):
    with pytest.raises(ValueError, match="dimension mismatch"):
        hvi(clipped_exact, (1, 1, 1))


def test_batch_matches_scalar_and_order(clipped_exact):
    candidates = [(9.0, 9.0), (1.0, 1.0)]
    assert hvi_batch(clipped_exact, candidates) == [0.0, 45.0]
    assert hvi_batch(clipped_exact, []) == []
    repeated = hvi_batch(clipped_exact, [(3, 3), (3, 3)])
    assert repeated[0] == repeated[1]


def test_batch_error_names_offending_index(clipped_exact):
    with pytest.raises(ValueError, match="candidate 1: dimension mismatch"):
        hvi_batch(clipped_exact, [(1, 1), (1, 1, 1)])


def test_nondominated_volume_values(three_point_front, clipped_exact):
    front = pareto_filter(three_point_front)
    assert nondominated_volume(decompose(front, DecomposeConfig(alpha=0.0))) == 43.0
    assert nondominated_volume(clipped_exact) == 45.0
    for alpha in (0.5, 0.1, 0.01):
        approx = decompose(front, DecomposeConfig(alpha=alpha, reference=(10, 10)))
        assert nondominated_volume(approx) <= 45.0


def test_dominated_hv_values(three_point_front, clipped_exact):
    front = pareto_filter(three_point_front)
    assert dominated_hv(clipped_exact) == 36.0
    assert dominated_hv(decompose(front, DecomposeConfig(alpha=0.0))) == 21.0
    assert dominated_hv(decompose(pareto_filter([(5,)]), DecomposeConfig(alpha=0.0))) == 1.0
    approx = decompose(front, DecomposeConfig(alpha=0.1))
    with pytest.raises(ValueError, match="dominated HV unavailable"):
        dominated_hv(approx)


def test_approximation_never_overshoots_exact():
    rng = np.random.default_rng(12)
    for _ in range(8):
        front = generate_front(
            RandomFrontSpec(int(rng.integers(2, 10)), 3, int(rng.integers(0, 10**6)))
        )
        ref = upper_margin_reference(front)
        exact = decompose(front, DecomposeConfig(alpha=0.0, reference=ref))
        candidates = [
            tuple(rng.uniform(exact.bounds.lower, ref)) for _ in range(10)
        ]
        for alpha in (0.5, 0.1, 0.01):
            approx = decompose(front, DecomposeConfig(alpha=alpha, reference=ref))
            for y in candidates:
                assert 0.0 <= hvi(approx, y) <= hvi(exact, y)


def test_oracle_agreement_exact_clipped():
    rng = np.random.default_rng(21)
    for _ in range(10):
        front = generate_front(
            RandomFrontSpec(
                int(rng.integers(1, 11)),
                int(rng.integers(2, 5)),
                int(rng.integers(0, 10**6)),
                "random_antichain",
            )
        )
        ref = upper_margin_reference(front, rng)
        decomp = decompose(front, DecomposeConfig(alpha=0.0, reference=ref))
        for _ in range(5):
            y = tuple(rng.uniform(decomp.bounds.lower, ref))
            expected = hvi_oracle(front.points, y, ref)
            assert math.isclose(
                hvi(decomp, y), expected, rel_tol=1e-9, abs_tol=1e-9
            )


def test_clipping_identity(clipped_exact):
    corner = clipped_exact.bounds.lower
    assert hvi(clipped_exact, corner) == nondominated_volume(clipped_exact)


@given(
    st.tuples(
        st.floats(min_value=0, max_value=11, allow_nan=False),
        st.floats(min_value=0, max_value=11, allow_nan=False),
    ),
    st.integers(min_value=0, max_value=1),
    st.floats(min_value=0, max_value=5, allow_nan=False),
)
def test_hvi_monotone_in_each_coordinate(y, axis, bump):
    front = pareto_filter([(2.0, 8.0), (6.0, 4.0), (8.0, 2.0)])
    decomp = decompose(front, DecomposeConfig(alpha=0.0, reference=(10, 10)))
    worse = list(y)
    worse[axis] += bump
    assert hvi(decomp, tuple(worse)) <= hvi(decomp, y)


def test_below_bound_candidates_flagged_but_evaluated(clipped_exact):
    below = (-5.0, -5.0)
    assert is_below_bound(clipped_exact, below)
    assert not is_below_bound(clipped_exact, clipped_exact.bounds.lower)
    # the clip makes the value saturate at the full non-dominated volume
    assert hvi(clipped_exact, below) == nondominated_volume(clipped_exact)
    flags = below_bound_flags(clipped_exact, [below, (5.0, 5.0)])
    assert flags == [True, False]
