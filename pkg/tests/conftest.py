import io
from contextlib import redirect_stderr, redirect_stdout

import numpy as np
import pytest

from hvbox import RandomFrontSpec, generate_front
from hvbox.cli import main

# Three mutually non-dominated points used as the worked example throughout.
THREE_POINT_FRONT = ((2.0, 8.0), (6.0, 4.0), (8.0, 2.0))


@pytest.fixture
def three_point_front():
    return list(THREE_POINT_FRONT)


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in-process, returning (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cli():
    return run_cli


def write_points(path, rows, header: str | None = None) -> str:
    lines = [header] if header else []
    lines += [",".join(repr(float(c)) for c in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


def upper_margin_reference(front, rng=None, margin: float = 1.0):
    """Reference point at or above the front's per-coordinate maxima."""
    if rng is None:
        offsets = [margin] * front.dim
    else:
        offsets = rng.uniform(0.5, 2.0, size=front.dim).tolist()
    return tuple(
        max(p[m] for p in front.points) + offsets[m] for m in range(front.dim)
    )


@pytest.fixture(scope="session")
def front_pool():
    """200 seeded random fronts (N in 1..12, M in 2..5, mixed shapes) with references."""
    rng = np.random.default_rng(20240405)
    shapes = ("sphere_like", "linear", "random_antichain")
    pool = []
    for i in range(200):
        n = int(rng.integers(1, 13))
        m = int(rng.integers(2, 6))
        spec = RandomFrontSpec(n, m, int(rng.integers(0, 2**31)), shapes[i % 3])
        front = generate_front(spec)
        ref = upper_margin_reference(front, rng)
        pool.append((front, ref))
    return pool
