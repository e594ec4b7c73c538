"""Randomized graph-automorphism solver."""

try:
    from ._autgrp import (
        Graph,
        Permutation,
        SolveResult,
        brute_force_order,
        is_automorphism,
        load_dimacs,
        parse_dimacs,
        solve,
    )
except ImportError:  # extension built out-of-tree (ctest runs it from build/)
    from _autgrp import (
        Graph,
        Permutation,
        SolveResult,
        brute_force_order,
        is_automorphism,
        load_dimacs,
        parse_dimacs,
        solve,
    )

__all__ = [
    "Graph",
    "Permutation",
    "SolveResult",
    "brute_force_order",
    "is_automorphism",
    "load_dimacs",
    "parse_dimacs",
    "solve",
]
