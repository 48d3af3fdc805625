"""Exact graph pebbling: solvers, weight-function certificates, LP bounds,
and structural Class 0 audits."""

from .graphs import (
    Graph, GraphError,
    path, cycle, complete, hypercube, petersen_generalized,
    lemke, bruhat, family_f, family_g, clone_vertex,
)
from .engine import (
    Configuration, PebblingMove, SolverBudget, IllegalMove,
    apply_move, replay, is_solvable, max_unsolvable,
    pebbling_number_rooted, pebbling_number, is_class0,
    kernel_name, SOLVABLE, UNSOLVABLE, BUDGET,
)
from .errors import BudgetExceeded

__version__ = "0.1.0"
