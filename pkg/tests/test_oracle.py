import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hvbox import (
    RandomFrontSpec,
    generate_front,
    hv_inclusion_exclusion,
    hvi_oracle,
    strictly_dominates,
)

from conftest import THREE_POINT_FRONT, upper_margin_reference


def test_worked_example_hypervolume():
    assert hv_inclusion_exclusion(THREE_POINT_FRONT, (10, 10)) == 36.0
    assert hv_inclusion_exclusion(THREE_POINT_FRONT, (9, 9)) == 21.0


def test_single_point_is_plain_product():
    assert hv_inclusion_exclusion([(2, 3, 4)], (10, 10, 10)) == 8 * 7 * 6


def test_empty_collection_is_zero():
    assert hv_inclusion_exclusion([], (1.0, 1.0)) == 0.0


def test_oracle_point_limit():
    points = [(float(i), float(20 - i)) for i in range(21)]
    with pytest.raises(ValueError, match="oracle limit"):
        hv_inclusion_exclusion(points, (30, 30))


def test_reference_must_be_weakly_dominated():
    with pytest.raises(ValueError, match="does not weakly dominate"):
        hv_inclusion_exclusion([(5, 5)], (4, 10))


def test_hvi_oracle_worked_example():
    assert hvi_oracle(THREE_POINT_FRONT, (1, 1), (10, 10)) == 45.0


def test_hvi_oracle_duplicate_and_reference_candidates():
    assert hvi_oracle(THREE_POINT_FRONT, (6, 4), (10, 10)) == 0.0
    assert hvi_oracle(THREE_POINT_FRONT, (10, 10), (10, 10)) == 0.0


@given(
    st.floats(min_value=-100, max_value=100, allow_nan=False),
    st.floats(min_value=0, max_value=100, allow_nan=False),
)
def test_one_dimensional_self_consistency(y, gap):
    r = y + gap
    assert hv_inclusion_exclusion([(y,)], (r,)) == r - y


def test_permutation_invariance():
    rng = np.random.default_rng(5)
    points = [tuple(row) for row in rng.uniform(0, 10, size=(7, 3))]
    r = (11.0, 11.0, 11.0)
    base = hv_inclusion_exclusion(points, r)
    for _ in range(5):
        shuffled = list(points)
        rng.shuffle(shuffled)
        assert math.isclose(
            hv_inclusion_exclusion(shuffled, r), base, rel_tol=1e-12, abs_tol=1e-12
        )


@pytest.mark.parametrize("seed,shape", [(3, "random_antichain"), (8, "sphere_like")])
def test_monte_carlo_cross_check(seed, shape):
    rng = np.random.default_rng(seed)
    front = generate_front(RandomFrontSpec(6, 3, seed, shape))
    r = np.asarray(upper_margin_reference(front, rng))
    pts = front.as_array()
    lo = pts.min(axis=0)
    box_volume = float(np.prod(r - lo))

    samples = 1_000_000
    draws = rng.uniform(lo, r, size=(samples, len(r)))
    dominated = (pts[None, :, :] <= draws[:, None, :]).all(axis=-1).any(axis=-1)
    frac = dominated.mean()
    estimate = frac * box_volume
    stderr = box_volume * math.sqrt(frac * (1 - frac) / samples)

    exact = hv_inclusion_exclusion(front.points, tuple(r))
    assert abs(estimate - exact) <= 3 * stderr + 1e-9


def test_generate_front_deterministic():
    spec = RandomFrontSpec(9, 3, 42, "linear")
    assert generate_front(spec).points == generate_front(spec).points


@pytest.mark.parametrize("shape", ["sphere_like", "linear", "random_antichain"])
def test_generate_front_is_antichain_of_requested_size(shape):
    for seed in range(4):
        front = generate_front(RandomFrontSpec(12, 3, seed, shape))
        assert len(front.points) == 12
        for a in front.points:
            for b in front.points:
                if a is not b:
                    assert not strictly_dominates(a, b)


def test_generate_front_single_point():
    front = generate_front(RandomFrontSpec(1, 4, 0, "random_antichain"))
    assert len(front.points) == 1


def test_sphere_like_points_sit_on_concave_arc():
    front = generate_front(RandomFrontSpec(5, 2, 17, "sphere_like"))
    for p in front.points:
        assert math.isclose(math.hypot(*p), 10.0, rel_tol=1e-9)


def test_resample_budget_error():
    # one-dimensional anti-chains cannot exceed a single point
    with pytest.raises(ValueError, match="resampling attempts"):
        generate_front(RandomFrontSpec(2, 1, 0, "random_antichain"))


def test_spec_validation():
    with pytest.raises(ValueError):
        RandomFrontSpec(0, 2, 0)
    with pytest.raises(ValueError):
        RandomFrontSpec(1, 0, 0)
    with pytest.raises(ValueError, match="unknown shape"):
        RandomFrontSpec(1, 2, 0, "spiral")
