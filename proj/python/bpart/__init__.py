"""b-ary partitions: enumeration, counting, and lattice structure.

A b-ary partition of n is a tuple of nonnegative parts (p0, p1, ...) with
sum(p[i] * b**i) == n and a nonzero last part; partitions are passed to and
returned from this package as plain lists of ints, little-endian.
"""

from ._core import (
    brute_enumerate,
    brute_leq,
    canonical,
    carry,
    children,
    count,
    count_exact_parts,
    decompose,
    enumerate_partitions,
    fire,
    hasse,
    inc,
    join,
    leading,
    leq,
    levels,
    meet,
    partition_from_shots,
    predecessors,
    rightmost_branch,
    shots,
    subtree_level_count,
    subtree_order,
    successors,
    unfire,
    value,
    verify,
)

__all__ = [
    "brute_enumerate",
    "brute_leq",
    "canonical",
    "carry",
    "children",
    "count",
    "count_exact_parts",
    "decompose",
    "enumerate_partitions",
    "fire",
    "hasse",
    "inc",
    "join",
    "leading",
    "leq",
    "levels",
    "meet",
    "partition_from_shots",
    "predecessors",
    "rightmost_branch",
    "shots",
    "subtree_level_count",
    "subtree_order",
    "successors",
    "unfire",
    "value",
    "verify",
]
