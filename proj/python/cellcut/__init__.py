"""Cut-based genetic algorithm for manufacturing cell formation."""

from ._cellcut import (
    Instance,
    InstanceError,
    ParseError,
    Problem,
    bench_csv,
    compute_k,
    solve,
    sort_chromosome,
)

__all__ = [
    "Instance",
    "InstanceError",
    "ParseError",
    "Problem",
    "bench_csv",
    "compute_k",
    "solve",
    "sort_chromosome",
]
