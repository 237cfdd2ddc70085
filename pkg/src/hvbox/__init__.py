"""Box decomposition of non-dominated objective space with volume pruning.

Decomposes the region not dominated by a Pareto front (minimization) into
disjoint axis-aligned boxes over per-objective coordinate grids.  Boxes
whose volume is at most an `alpha` fraction of the bounding volume are
pruned, which caps the box count at ceil(2 / alpha); `alpha = 0` keeps
everything and the box set is exact.  Hypervolume improvement of a
candidate point is then a clipped product-sum over the boxes.
"""

from .decompose import (
    Decomposition,
    DecomposeConfig,
    Diagnostics,
    box_count_bound,
    decompose,
    effective_grids,
)
from .front import ParetoFront, build_grids, pareto_filter
from .geometry import (
    HyperRectangle,
    Point,
    as_point,
    box_volume,
    strictly_below,
    strictly_dominates,
    weakly_dominates,
)
from .improvement import (
    below_bound_flags,
    dominated_hv,
    hvi,
    hvi_batch,
    hvi_over_boxes,
    is_below_bound,
    nondominated_volume,
)
from .oracle import (
    ORACLE_POINT_LIMIT,
    RandomFrontSpec,
    generate_front,
    hv_inclusion_exclusion,
    hvi_oracle,
)

__all__ = [
    "Decomposition",
    "DecomposeConfig",
    "Diagnostics",
    "HyperRectangle",
    "ORACLE_POINT_LIMIT",
    "ParetoFront",
    "Point",
    "RandomFrontSpec",
    "as_point",
    "below_bound_flags",
    "box_count_bound",
    "box_volume",
    "build_grids",
    "decompose",
    "dominated_hv",
    "effective_grids",
    "generate_front",
    "hv_inclusion_exclusion",
    "hvi",
    "hvi_batch",
    "hvi_oracle",
    "hvi_over_boxes",
    "is_below_bound",
    "nondominated_volume",
    "pareto_filter",
    "strictly_below",
    "strictly_dominates",
    "weakly_dominates",
]

__version__ = "0.1.0"
