"""Linear-programming bounds from tree strategies.

The integer program maximizes the size of a configuration subject to
w.p <= w.1 for every enumerated tree strategy w; its optimum z (and the
rational relaxation optimum z-hat) bound the rooted pebbling number by
z + 1 <= floor(z-hat) + 1, because every root-unsolvable configuration is
feasible.  Everything is solved in exact rational arithmetic: the simplex
uses Fractions with Bland's rule (instances here are tiny, and the point
of the exercise is certificates, so floating point is banned).

Tree-strategy enumeration is necessarily partial (the full family is
exponential); results are deterministic and truncation is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .engine import SolverBudget, DEFAULT_BUDGET
from .errors import BudgetExceeded
from .graphs import Graph
from .strategies import (Certificate, CertificateError, Strategy,
                         WeightFunction, combine, covering_bound,
                         path_strategy, rat_str, tree_strategy,
                         validate_tree_strategy)

OPTIMAL = "optimal"
NO_BOUND = "no_bound"


class LpError(RuntimeError):
    pass


# -- exact simplex ------------------------------------------------------------


def simplex_max(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                c: Sequence[Fraction]
                ) -> Tuple[Fraction, List[Fraction], List[Fraction]]:
    """max c.x  s.t.  A.x <= b, x >= 0, with b >= 0.

    Returns (optimum, x, y) with y the dual values of the constraints.
    Bland's rule makes cycling impossible; unboundedness raises (callers
    exclude it by checking column coverage first).
    """
    m, d = len(A), len(c)
    if any(bi < 0 for bi in b):
        raise LpError("standard form requires b >= 0")
    # tableau rows: [A | I | b]; reduced-cost row r = c - z
    T = [[Fraction(x) for x in row] + [Fraction(0)] * m + [Fraction(bi)]
         for row, bi in zip(A, b)]
    for i in range(m):
        T[i][d + i] = Fraction(1)
    r = [Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(d, d + m))
    while True:
        enter = next((j for j in range(d + m) if r[j] > 0), None)
        if enter is None:
            break
        ratio = None
        leave = None
        for i in range(m):
            if T[i][enter] > 0:
                q = T[i][-1] / T[i][enter]
                if (ratio is None or q < ratio
                        or (q == ratio and basis[i] < basis[leave])):
                    ratio = q
                    leave = i
        if leave is None:
            raise LpError("LP is unbounded")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        if r[enter]:
            f = r[enter]
            for j in range(d + m + 1):
                r[j] -= f * T[leave][j]
        basis[leave] = enter
    x = [Fraction(0)] * d
    for i, j in enumerate(basis):
        if j < d:
            x[j] = T[i][-1]
    y = [-r[d + i] for i in range(m)]
    opt = -r[-1]
    return opt, x, y


def certify_lp(A, b, c, opt, x, y) -> None:
    """Zero-duality-gap certificate check; raises on any violation."""
    m, d = len(A), len(c)
    for j in range(d):
        if x[j] < 0:
            raise LpError(f"primal variable {j} negative")
    for i in range(m):
        if sum(A[i][j] * x[j] for j in range(d)) > b[i]:
            raise LpError(f"primal constraint {i} violated")
        if y[i] < 0:
            raise LpError(f"dual variable {i} negative")
    for j in range(d):
        if sum(y[i] * A[i][j] for i in range(m)) < c[j]:
            raise LpError(f"dual constraint {j} violated")
    primal = sum(c[j] * x[j] for j in range(d))
    dual = sum(y[i] * b[i] for i in range(m))
    if not (primal == dual == opt):
        raise LpError("duality gap is nonzero")


# -- strategy enumeration ------------------------------------------------------


@dataclass
class StrategySet:
    root: int
    strategies: List[Strategy]
    truncated: bool = False

    def __post_init__(self):
        for s in self.strategies:
            if s.weight.root != self.root:
                raise CertificateError("strategy set mixes roots")


def enumerate_tree_strategies(g: Graph, root: int, max_trees: int = 200,
                              max_depth: Optional[int] = None) -> StrategySet:
    """Deterministic, deduplicated basic tree strategies for one root:
    every simple path from the root up to max_depth, then shortest-path
    trees over all BFS parent choices, until max_trees is hit."""
    g._check_vertex(root)
    if max_trees <= 0:
        raise ValueError("max_trees must be positive")
    depth_cap = max_depth if max_depth is not None else g.n - 1
    out: List[Strategy] = []
    seen = set()
    truncated = False

    def add(s: Strategy) -> bool:
        # returns False when the budget is full
        nonlocal truncated
        key = frozenset(s.weight.weights.items())
        if key not in seen:
            if len(out) >= max_trees:
                truncated = True
                return False
            seen.add(key)
            out.append(s)
        return True

    # simple paths from the root, DFS in ascending neighbor order
    path_stack = [root]
    on_path = {root}

    def walk() -> bool:
        if len(path_stack) > 1:
            if not add(path_strategy(g, root, list(path_stack))):
                return False
        if len(path_stack) > depth_cap:
            return True
        for w in g.neighbors(path_stack[-1]):
            if w not in on_path:
                path_stack.append(w)
                on_path.add(w)
                ok = walk()
                on_path.discard(w)
                path_stack.pop()
                if not ok:
                    return False
        return True

    exhausted = walk()

    # shortest-path trees: one parent choice per non-root vertex
    if exhausted:
        dist = g.distances(root)
        others = [v for v in range(g.n) if v != root]
        choices = [[u for u in g.neighbors(v) if dist[u] == dist[v] - 1]
                   for v in others]
        maxdepth = max(dist)

        def build(i: int, parent_of: Dict[int, int]) -> bool:
            if i == len(others):
                edges = [(v, parent_of[v]) for v in others]
                weights = {v: Fraction(1 << (maxdepth - dist[v]))
                           for v in others}
                return add(tree_strategy(g, root, edges, weights))
            for u in choices[i]:
                parent_of[others[i]] = u
                if not build(i + 1, parent_of):
                    return False
            return True

        build(0, {})
    return StrategySet(root, out, truncated)


# -- LP relaxation bound -------------------------------------------------------


@dataclass
class LpResult:
    status: str                      # optimal | no_bound
    optimum: Optional[Fraction] = None
    bound: Optional[int] = None      # floor(optimum) + 1
    primal: Dict[int, Fraction] = field(default_factory=dict)
    dual_weights: Dict[int, Fraction] = field(default_factory=dict)
    uncovered: Optional[int] = None

    def to_dict(self) -> dict:
        d = {"status": self.status}
        if self.status == OPTIMAL:
            d["optimum"] = rat_str(self.optimum)
            d["bound"] = self.bound
            d["primal"] = {str(v): rat_str(x)
                           for v, x in sorted(self.primal.items()) if x}
            d["dual_weights"] = {str(i): rat_str(y)
                                 for i, y in sorted(self.dual_weights.items())
                                 if y}
        else:
            d["uncovered_vertex"] = self.uncovered
        return d


def lp_relaxation_bound(g: Graph, root: int, sset: StrategySet) -> LpResult:
    """Exact optimum of the relaxation over the given strategies.

    The LP is bounded iff every non-root vertex carries positive weight in
    some strategy (matrix entries are nonnegative, so an uncovered vertex
    is a free direction); that case reports no-bound with the vertex."""
    if not sset.strategies:
        raise CertificateError("strategy set is empty")
    if sset.root != root:
        raise CertificateError("strategy set rooted elsewhere")
    variables = [v for v in range(g.n) if v != root]
    for v in variables:
        if all(s.weight.weight(v) == 0 for s in sset.strategies):
            return LpResult(NO_BOUND, uncovered=v)
    A = [[s.weight.weight(v) for v in variables] for s in sset.strategies]
    b = [s.weight.total() for s in sset.strategies]
    c = [Fraction(1)] * len(variables)
    opt, x, y = simplex_max(A, b, c)
    certify_lp(A, b, c, opt, x, y)
    bound = opt.__floor__() + 1
    return LpResult(OPTIMAL, opt, bound,
                    {v: xv for v, xv in zip(variables, x)},
                    {i: yi for i, yi in enumerate(y)})


def dual_certificate(g: Graph, root: int, sset: StrategySet,
                     result: LpResult) -> Certificate:
    """Repackage the positive dual weights as a covering certificate."""
    if result.status != OPTIMAL:
        raise CertificateError("no dual available without an optimum")
    entries = [(sset.strategies[i], y)
               for i, y in sorted(result.dual_weights.items()) if y > 0]
    if not entries:
        raise CertificateError("dual solution has empty support")
    combined = combine([(s.weight, c) for s, c in entries])
    bound = covering_bound(g, root, combined)
    return Certificate(g, root, entries, bound)


# -- exact ILP by branch and bound ---------------------------------------------


@dataclass
class IlpResult:
    status: str                      # optimal | no_bound | budget_exceeded
    value: Optional[int] = None
    witness: Dict[int, int] = field(default_factory=dict)
    lower: Optional[int] = None      # incumbent when cut off
    upper: Optional[int] = None      # floor of best open relaxation
    uncovered: Optional[int] = None
    nodes: int = 0


def ilp_bound(g: Graph, root: int, sset: StrategySet,
              budget: SolverBudget = DEFAULT_BUDGET,
              max_vertices: int = 12) -> IlpResult:
    """Exact integer optimum by depth-first branch and bound on the
    relaxation, branching on the first fractional vertex."""
    if g.n > max_vertices:
        raise CertificateError(f"ilp_bound is guarded to n <= {max_vertices}")
    relax = lp_relaxation_bound(g, root, sset)
    if relax.status != OPTIMAL:
        return IlpResult(NO_BOUND, uncovered=relax.uncovered)
    variables = [v for v in range(g.n) if v != root]
    d = len(variables)
    A = [[s.weight.weight(v) for v in variables] for s in sset.strategies]
    b = [s.weight.total() for s in sset.strategies]
    # natural caps keep every node LP bounded even after branching
    caps = []
    for j in range(d):
        caps.append(min(b[i] / A[i][j] for i in range(len(A))
                        if A[i][j] > 0).__floor__())

    best_val = -1
    best_x: List[int] = []
    nodes = 0
    deadline = budget.deadline()

    def node_lp(lo: List[int], hi: List[int]):
        # shift x by lo; rows: strategies with shifted rhs, then x_j <= hi_j
        b2 = []
        for i in range(len(A)):
            shift = sum(A[i][j] * lo[j] for j in range(d))
            b2.append(b[i] - shift)
            if b2[-1] < 0:
                return None
        rows = [list(row) for row in A]
        rhs = list(b2)
        for j in range(d):
            row = [Fraction(0)] * d
            row[j] = Fraction(1)
            rows.append(row)
            rhs.append(Fraction(hi[j] - lo[j]))
        c = [Fraction(1)] * d
        opt, x, y = simplex_max(rows, rhs, c)
        certify_lp(rows, rhs, c, opt, x, y)
        base = sum(lo)
        return opt + base, [xj + lo[j] for j, xj in enumerate(x)]

    def dive(lo: List[int], hi: List[int]) -> None:
        nonlocal best_val, best_x, nodes
        nodes += 1
        if nodes > budget.max_states:
            raise BudgetExceeded("ilp node budget exhausted")
        import time as _time
        if deadline is not None and _time.monotonic() > deadline:
            raise BudgetExceeded("ilp time budget exhausted")
        res = node_lp(lo, hi)
        if res is None:
            return
        opt, x = res
        if opt.__floor__() <= best_val:
            return
        frac = next((j for j in range(d)
                     if x[j] != x[j].__floor__()), None)
        if frac is None:
            val = int(sum(x))
            if val > best_val:
                best_val = val
                best_x = [int(xj) for xj in x]
            return
        lo2 = list(lo)
        lo2[frac] = int(x[frac].__floor__()) + 1
        if lo2[frac] <= hi[frac]:
            dive(lo2, hi)
        hi2 = list(hi)
        hi2[frac] = int(x[frac].__floor__())
        if hi2[frac] >= lo[frac]:
            dive(lo, hi2)

    try:
        dive([0] * d, caps)
    except BudgetExceeded:
        return IlpResult("budget_exceeded", lower=best_val,
                         upper=relax.optimum.__floor__(), nodes=nodes)
    witness = {v: xv for v, xv in zip(variables, best_x) if xv}
    if best_val > relax.optimum.__floor__():
        raise LpError("integer optimum exceeds the relaxation")  # impossible
    return IlpResult(OPTIMAL, best_val, witness, lower=best_val,
                     upper=best_val, nodes=nodes)
