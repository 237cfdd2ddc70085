"""Command-line surface: decompose fronts, evaluate improvement, benchmark.

Documents and tables go to stdout, human-oriented notes to stderr.
Exit codes: 0 success, 2 usage or validation error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .decompose import (
    Decomposition,
    DecomposeConfig,
    Diagnostics,
    box_count_bound,
    decompose,
)
from .front import pareto_filter
from .geometry import HyperRectangle, Point, as_point
from .improvement import hvi_over_boxes, nondominated_volume
from .oracle import (
    ORACLE_POINT_LIMIT,
    RandomFrontSpec,
    generate_front,
    hv_inclusion_exclusion,
    hvi_oracle,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def read_point_file(path: str) -> list[Point]:
    """Parse a CSV of points, one row per point; '#' lines are comments."""
    rows: list[Point] = []
    arity: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                values = as_point(line.split(","))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            if arity is None:
                arity = len(values)
            elif len(values) != arity:
                raise ValueError(
                    f"{path}:{lineno}: expected {arity} values, got {len(values)}"
                )
            rows.append(values)
    return rows


@dataclass(frozen=True)
class DecompositionDocument:
    """Serializable snapshot of a decomposition run.

    Serialization is canonical: parsing a document and re-serializing it
    reproduces the input byte for byte.
    """

    alpha: float
    mode: str
    reference: Point | None
    ideal: Point | None
    dim: int
    front_size: int
    h_all: float
    h_tol: float
    sum_volume: float
    bounds: HyperRectangle
    boxes: tuple[HyperRectangle, ...]
    diagnostics: Diagnostics

    @classmethod
    def from_decomposition(cls, decomp: Decomposition) -> "DecompositionDocument":
        return cls(
            alpha=decomp.config.alpha,
            mode=decomp.config.mode,
            reference=decomp.config.reference,
            ideal=decomp.config.ideal,
            dim=decomp.dim,
            front_size=len(decomp.front),
            h_all=decomp.h_all,
            h_tol=decomp.h_tol,
            sum_volume=nondominated_volume(decomp),
            bounds=decomp.bounds,
            boxes=decomp.boxes,
            diagnostics=decomp.diagnostics,
        )

    def to_json_text(self) -> str:
        meta: dict = {"alpha": self.alpha, "mode": self.mode}
        if self.reference is not None:
            meta["reference"] = list(self.reference)
        if self.ideal is not None:
            meta["ideal"] = list(self.ideal)
        meta["m"] = self.dim
        meta["n"] = self.front_size
        payload = {
            "meta": meta,
            "h_all": self.h_all,
            "h_tol": self.h_tol,
            "sum_volume": self.sum_volume,
            "bounds": {"lower": list(self.bounds.lower), "upper": list(self.bounds.upper)},
            "boxes": [
                {"lower": list(b.lower), "upper": list(b.upper)} for b in self.boxes
            ],
            "diagnostics": {
                "iterations": self.diagnostics.iterations,
                "accepted": self.diagnostics.accepted,
                "pruned_dominated": self.diagnostics.pruned_dominated,
                "pruned_resolution": self.diagnostics.pruned_resolution,
                "pruned_volume": self.diagnostics.pruned_volume,
                "max_depth": self.diagnostics.max_depth,
            },
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json_text(cls, text: str) -> "DecompositionDocument":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid decomposition document: {exc}") from None
        try:
            meta = payload["meta"]
            diagnostics = Diagnostics(**payload["diagnostics"])
            boxes = tuple(
                HyperRectangle(tuple(b["lower"]), tuple(b["upper"]))
                for b in payload["boxes"]
            )
            doc = cls(
                alpha=float(meta["alpha"]),
                mode=str(meta["mode"]),
                reference=as_point(meta["reference"]) if "reference" in meta else None,
                ideal=as_point(meta["ideal"]) if "ideal" in meta else None,
                dim=int(meta["m"]),
                front_size=int(meta["n"]),
                h_all=float(payload["h_all"]),
                h_tol=float(payload["h_tol"]),
                sum_volume=float(payload["sum_volume"]),
                bounds=HyperRectangle(
                    tuple(payload["bounds"]["lower"]), tuple(payload["bounds"]["upper"])
                ),
                boxes=boxes,
                diagnostics=diagnostics,
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"invalid decomposition document: {exc}") from None
        if len(doc.boxes) != doc.diagnostics.accepted:
            raise ValueError(
                "invalid decomposition document: box count "
                f"{len(doc.boxes)} != accepted {doc.diagnostics.accepted}"
            )
        return doc


def _point_arg(text: str) -> Point:
    try:
        return as_point(text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _float_list_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _config_from_args(args: argparse.Namespace) -> DecomposeConfig:
    alpha = 0.0 if args.exact else (1e-3 if args.alpha is None else args.alpha)
    return DecomposeConfig(alpha=alpha, reference=args.ref, ideal=args.ideal)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--alpha", type=float, default=None,
        help="relative volume tolerance in [0,1), default 0.001",
    )
    group.add_argument(
        "--exact", action="store_true", help="exact decomposition (same as --alpha 0)"
    )
    parser.add_argument(
        "--ref",
        type=_point_arg,
        default=None,
        metavar="R1,...,RM",
        help="clip the upper bounds to this reference point",
    )
    parser.add_argument(
        "--ideal",
        type=_point_arg,
        default=None,
        metavar="I1,...,IM",
        help="replace the lower sentinel bounds with this point",
    )


def _cmd_decompose(args: argparse.Namespace) -> int:
    points = read_point_file(args.points)
    if not points:
        raise ValueError(f"{args.points}: empty front")
    front = pareto_filter(points)
    decomp = decompose(front, _config_from_args(args))
    doc = DecompositionDocument.from_decomposition(decomp)
    sys.stdout.write(doc.to_json_text())
    d = decomp.diagnostics
    print(
        f"n={len(front)} m={front.dim} alpha={decomp.config.alpha} mode={decomp.config.mode} "
        f"boxes={d.accepted} h_all={decomp.h_all} sum_volume={doc.sum_volume} "
        f"iterations={d.iterations} max_depth={d.max_depth}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_hvi(args: argparse.Namespace) -> int:
    if args.doc is not None:
        if args.alpha is not None or args.exact or args.ref or args.ideal:
            raise ValueError(
                "--alpha/--exact/--ref/--ideal configure a fresh decomposition "
                "and apply only with --front"
            )
        with open(args.doc, encoding="utf-8") as fh:
            doc = DecompositionDocument.from_json_text(fh.read())
        dim = doc.dim
        lowers = np.asarray([b.lower for b in doc.boxes], dtype=float).reshape(
            len(doc.boxes), dim
        )
        uppers = np.asarray([b.upper for b in doc.boxes], dtype=float).reshape(
            len(doc.boxes), dim
        )
        lower_corner = doc.bounds.lower
    else:
        points = read_point_file(args.front)
        if not points:
            raise ValueError(f"{args.front}: empty front")
        decomp = decompose(pareto_filter(points), _config_from_args(args))
        dim = decomp.dim
        lowers, uppers = decomp.box_lowers, decomp.box_uppers
        lower_corner = decomp.bounds.lower

    candidates = read_point_file(args.candidates)
    print("# candidate\thvi\tnote")
    for idx, cand in enumerate(candidates):
        if len(cand) != dim:
            raise ValueError(
                f"candidate {idx}: dimension mismatch: {len(cand)} vs {dim}"
            )
        value = hvi_over_boxes(lowers, uppers, cand)
        row = f"{','.join(repr(c) for c in cand)}\t{value:.12g}"
        if any(c < lo for c, lo in zip(cand, lower_corner)):
            row += "\tbelow-bound"
        print(row)
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    points = read_point_file(args.points)
    if args.new is not None:
        value = hvi_oracle(points, args.new, args.ref)
    else:
        value = hv_inclusion_exclusion(points, args.ref)
    print(repr(value))
    return EXIT_OK


def _depth_bound(n: int, m: int) -> int:
    return m * (math.ceil(math.log2(n + 1)) + 1)


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.verify and max(args.n) > ORACLE_POINT_LIMIT:
        raise ValueError(
            f"--verify needs the brute-force oracle, which supports at most "
            f"{ORACLE_POINT_LIMIT} points; got n={max(args.n)}"
        )
    columns = [
        "n", "m", "alpha", "seed", "shape", "accepted", "k_bound", "iterations",
        "pruned_dominated", "pruned_resolution", "pruned_volume", "max_depth",
        "depth_bound", "h_all", "sum_volume",
    ]
    if args.verify:
        columns.append("missed_volume")
    columns.append("wall_time_s")
    print("\t".join(columns))

    for n in args.n:
        for m in args.m:
            for alpha in args.alpha:
                for seed in range(args.seeds):
                    front = generate_front(RandomFrontSpec(n, m, seed, args.shape))
                    started = time.perf_counter()
                    decomp = decompose(front, DecomposeConfig(alpha=alpha))
                    elapsed = time.perf_counter() - started
                    d = decomp.diagnostics
                    k_bound = box_count_bound(alpha) if alpha > 0 else math.inf
                    volume = nondominated_volume(decomp)
                    row = [
                        str(n), str(m), repr(alpha), str(seed), args.shape,
                        str(d.accepted), repr(float(k_bound)), str(d.iterations),
                        str(d.pruned_dominated), str(d.pruned_resolution),
                        str(d.pruned_volume), str(d.max_depth),
                        str(_depth_bound(len(front), m)), repr(decomp.h_all),
                        repr(volume),
                    ]
                    if args.verify:
                        exact = decomp.h_all - hv_inclusion_exclusion(
                            front.points, decomp.bounds.upper
                        )
                        row.append(repr(exact - volume))
                    row.append(f"{elapsed:.6f}")
                    print("\t".join(row))

                    if d.accepted > k_bound:
                        print(
                            f"invariant violation: accepted {d.accepted} boxes, "
                            f"bound is {k_bound} (n={n} m={m} alpha={alpha} seed={seed})",
                            file=sys.stderr,
                        )
                        return EXIT_INVARIANT
                    if d.accepted > d.iterations or d.max_depth > _depth_bound(len(front), m):
                        print(
                            f"invariant violation: diagnostics out of range "
                            f"(n={n} m={m} alpha={alpha} seed={seed}): {d}",
                            file=sys.stderr,
                        )
                        return EXIT_INVARIANT
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hvbox",
        description="Box decomposition of non-dominated objective space "
        "(minimization) and hypervolume-improvement queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose a front read from a CSV file")
    p_dec.add_argument("points", help="CSV point file, one comma-separated row per point")
    _add_config_flags(p_dec)
    p_dec.set_defaults(func=_cmd_decompose)

    p_hvi = sub.add_parser("hvi", help="hypervolume improvement of candidate points")
    src = p_hvi.add_mutually_exclusive_group(required=True)
    src.add_argument("--doc", help="decomposition document produced by `hvbox decompose`")
    src.add_argument("--front", help="front CSV to decompose on the fly")
    _add_config_flags(p_hvi)
    p_hvi.add_argument("candidates", help="CSV file of candidate points")
    p_hvi.set_defaults(func=_cmd_hvi)

    p_ora = sub.add_parser(
        "oracle", help="brute-force hypervolume (or improvement) of a point set"
    )
    p_ora.add_argument("points", help="CSV point file")
    p_ora.add_argument("--ref", type=_point_arg, required=True, metavar="R1,...,RM")
    p_ora.add_argument(
        "--new", type=_point_arg, default=None, metavar="Y1,...,YM",
        help="report the improvement of this candidate instead of the total",
    )
    p_ora.set_defaults(func=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="sweep random fronts and report diagnostics")
    p_bench.add_argument("--n", type=_int_list_arg, default=(50,), metavar="N1,N2,...")
    p_bench.add_argument("--m", type=_int_list_arg, default=(2,), metavar="M1,M2,...")
    p_bench.add_argument(
        "--alpha", type=_float_list_arg, default=(1e-3,), metavar="A1,A2,..."
    )
    p_bench.add_argument("--seeds", type=int, default=1, help="seeds 0..COUNT-1 per cell")
    p_bench.add_argument(
        "--shape", choices=("sphere_like", "linear", "random_antichain"),
        default="sphere_like",
    )
    p_bench.add_argument(
        "--verify", action="store_true",
        help="also report exact-versus-approximate missed volume (needs n <= 20)",
    )
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
