"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .branch_and_bound import (
    BranchAndBoundLimits,
    max_independent_set_size,
    max_weight_independent_set,
    solve_mwis_bnb,
)
from .brute_force import BruteForceLimits, cavity_exact, conditional_optima, solve_brute
from .exact_solution import ExactSolution
from .tree_solver import TreeSolution, solve_tree

__all__ = [
    'BranchAndBoundLimits',
    'BruteForceLimits',
    'ExactSolution',
    'TreeSolution',
    'cavity_exact',
    'conditional_optima',
    'max_independent_set_size',
    'max_weight_independent_set',
    'solve_brute',
    'solve_mwis_bnb',
    'solve_tree',
]
