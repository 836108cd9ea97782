"""Maximum weight t-matchings without forbidden complete partite subgraphs."""

from ._tmatch import (
    BoundError,
    MalformedError,
    NotVertexInducedError,
    TmatchError,
    TooLargeError,
    brute_force_optimum,
    detect,
    generate,
    parse_instance,
    solve,
)

__all__ = [
    "BoundError",
    "MalformedError",
    "NotVertexInducedError",
    "TmatchError",
    "TooLargeError",
    "brute_force_optimum",
    "detect",
    "generate",
    "parse_instance",
    "solve",
    "solve_file",
]


def solve_file(path, weighted=None):
    """Parse an instance file and solve it; unweighted files solve by size."""
    with open(path) as f:
        inst = parse_instance(f.read())
    if weighted is None:
        weighted = inst["weighted"]
    return solve(inst["n"], inst["t"], inst["edges"], inst["variant"], inst["p"], inst["q"], weighted)
