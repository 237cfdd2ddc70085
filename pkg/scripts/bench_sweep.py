#!/usr/bin/env python3
"""Sweep the box-count bound and timing diagnostics over random fronts.

Thin wrapper over `hvbox bench` that runs the default verification sweep:
box counts against ceil(2/alpha), recursion depth against its analytic cap,
and wall time per decomposition so the near-linear growth in front size can
be eyeballed from the table.
"""

import sys

from hvbox.cli import main as hvbox_main

DEFAULT_ARGS = [
    "bench",
    "--n", "10,50,200",
    "--m", "2,4,6,8",
    "--alpha", "0.5,0.1,0.01",
    "--seeds", "10",
]


if __name__ == "__main__":
    argv = DEFAULT_ARGS + sys.argv[1:]
    sys.exit(hvbox_main(argv))
