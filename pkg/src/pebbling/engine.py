"""Exact pebbling decisions: solvability, rooted and global pebbling
numbers, Class 0 testing, and maximum-unsolvable search.

All verdicts are tri-state: `solvable`/`unsolvable` (or `value`/`yes`/`no`)
are only ever reported after an exhausted search; running out of budget is
the distinct `budget_exceeded` outcome.  Results are deterministic given a
fixed vertex order; independent solver runs (e.g. across roots) may execute
concurrently.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded
from .graphs import Graph, GraphError

if os.environ.get("PEBBLE_PURE"):
    from . import _pycore as _core
    KERNEL = "pure-python (forced)"
else:
    try:
        from . import _fastcore as _core  # type: ignore[attr-defined]
        KERNEL = "compiled"
    except ImportError:
        from . import _pycore as _core
        KERNEL = "pure-python"

Move = Tuple[int, int]

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"
BUDGET = "budget_exceeded"


def kernel_name() -> str:
    """Which solver kernel is active ("compiled" or "pure-python")."""
    return KERNEL


@dataclass(frozen=True)
class SolverBudget:
    """Search budget: a state cap and an optional wall-clock limit."""
    max_states: int = 50_000_000
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.max_states <= 0:
            raise ValueError("max_states must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    def deadline(self) -> Optional[float]:
        if self.time_limit is None:
            return None
        return time.monotonic() + self.time_limit


DEFAULT_BUDGET = SolverBudget()


@dataclass(frozen=True)
class Configuration:
    """Pebble counts over the vertices of a fixed graph, as a dense tuple."""
    counts: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError("pebble counts must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.counts)

    def count(self, v: int) -> int:
        return self.counts[v]

    @classmethod
    def from_mapping(cls, g: Graph, counts: Dict[int, int]) -> "Configuration":
        dense = [0] * g.n
        for v, c in counts.items():
            if not (0 <= int(v) < g.n):
                raise GraphError(f"configuration refers to unknown vertex {v}")
            dense[int(v)] = int(c)
        return cls(tuple(dense))

    def to_dict(self) -> dict:
        return {"counts": {str(v): c for v, c in enumerate(self.counts) if c}}

    @classmethod
    def from_dict(cls, g: Graph, d: dict) -> "Configuration":
        return cls.from_mapping(g, {int(v): int(c)
                                    for v, c in d.get("counts", {}).items()})


@dataclass(frozen=True)
class PebblingMove:
    """Remove two pebbles from `source`, place one on adjacent `target`."""
    source: int
    target: int


class IllegalMove(ValueError):
    pass


def apply_move(g: Graph, p: Configuration, m: PebblingMove) -> Configuration:
    """Apply one pebbling move; total pebble count drops by exactly one."""
    if not g.has_edge(m.source, m.target):
        raise IllegalMove(f"{m.source}-{m.target} is not an edge")
    if p.counts[m.source] < 2:
        raise IllegalMove(f"vertex {m.source} has {p.counts[m.source]} < 2 pebbles")
    counts = list(p.counts)
    counts[m.source] -= 2
    counts[m.target] += 1
    return Configuration(tuple(counts))


def replay(g: Graph, p: Configuration, moves: Sequence[Move]) -> Configuration:
    """Replay a witness move sequence, validating each move."""
    cur = p
    for s, t in moves:
        cur = apply_move(g, cur, PebblingMove(s, t))
    return cur


def solver_caps(g: Graph, root: int) -> List[int]:
    """Per-vertex cap 2^dist(v, root) - 1 for unsolvable enumeration.

    Sound because a vertex at distance d holding 2^d pebbles reaches the
    root by halving along a shortest path, so no unsolvable configuration
    can exceed the cap anywhere.
    """
    caps = [(1 << d) - 1 for d in g.distances(root)]
    if max(caps) > 0xFFFF:
        raise GraphError("graph eccentricity too large for exact search")
    return caps


def _new_core(g: Graph, root: int, budget: SolverBudget):
    g._check_vertex(root)
    return _core.SolverCore(g._adj, root, budget.max_states, budget.deadline())


@dataclass
class SolveOutcome:
    status: str                      # solvable | unsolvable | budget_exceeded
    moves: Optional[List[Move]] = None
    states: int = 0

    def to_dict(self) -> dict:
        d = {"status": self.status, "states": self.states}
        if self.moves is not None:
            d["moves"] = [list(m) for m in self.moves]
        return d


def is_solvable(g: Graph, root: int, p: Configuration,
                budget: SolverBudget = DEFAULT_BUDGET) -> SolveOutcome:
    """Exact solvability of configuration `p` for root `root`."""
    if len(p.counts) != g.n:
        raise GraphError("configuration does not match the graph's vertex set")
    core = _new_core(g, root, budget)
    try:
        ok, moves = core.solve(p.counts)
    except BudgetExceeded:
        return SolveOutcome(BUDGET, None, core.states)
    return SolveOutcome(SOLVABLE if ok else UNSOLVABLE,
                        moves if ok else None, core.states)


@dataclass
class MaxUnsolvable:
    status: str                      # value | budget_exceeded
    size: Optional[int] = None
    witness: Optional[Configuration] = None
    lower: int = 0                   # best certified unsolvable size found
    upper: Optional[int] = None      # box bound when the search was cut off
    states: int = 0


def max_unsolvable(g: Graph, root: int,
                   budget: SolverBudget = DEFAULT_BUDGET) -> MaxUnsolvable:
    """Largest unsolvable configuration size for (g, root), with witness."""
    core = _new_core(g, root, budget)
    caps = solver_caps(g, root)
    try:
        val, cfg = core.best_unsolvable(caps)
    except BudgetExceeded:
        witness = Configuration(core.best_cfg) if core.best_cfg else None
        return MaxUnsolvable(BUDGET, None, witness,
                             lower=max(core.best_val, g.n - 1),
                             upper=sum(caps), states=core.states)
    return MaxUnsolvable("value", val, Configuration(cfg), lower=val,
                         upper=val, states=core.states)


@dataclass
class RootedNumber:
    status: str                      # value | budget_exceeded
    value: Optional[int] = None
    witness: Optional[Configuration] = None  # unsolvable of size value-1
    lower: int = 0                   # bounds on pi(G, r) when cut off
    upper: Optional[int] = None
    states: int = 0

    def to_dict(self) -> dict:
        d = {"status": self.status, "states": self.states}
        if self.value is not None:
            d["value"] = self.value
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.status == BUDGET:
            d["lower"] = self.lower
            d["upper"] = self.upper
        return d


def pebbling_number_rooted(g: Graph, root: int,
                           budget: SolverBudget = DEFAULT_BUDGET) -> RootedNumber:
    """pi(G, root): every configuration of this size is solvable, and the
    returned witness of size value-1 is not."""
    mu = max_unsolvable(g, root, budget)
    if mu.status == BUDGET:
        return RootedNumber(BUDGET, witness=mu.witness,
                            lower=mu.lower + 1,
                            upper=(mu.upper or 0) + 1, states=mu.states)
    return RootedNumber("value", mu.size + 1, mu.witness,
                        lower=mu.size + 1, upper=mu.size + 1, states=mu.states)


@dataclass
class GlobalNumber:
    status: str                      # value | budget_exceeded
    value: Optional[int] = None
    worst_root: Optional[int] = None
    witness: Optional[Configuration] = None
    per_root: Dict[int, int] = field(default_factory=dict)
    states: int = 0


def pebbling_number(g: Graph, budget: SolverBudget = DEFAULT_BUDGET,
                    assume_vertex_transitive: bool = False) -> GlobalNumber:
    """pi(G) = max over roots of pi(G, root).

    `assume_vertex_transitive=True` is a caller assertion that all roots
    are equivalent; only root 0 is then solved.
    """
    roots = [0] if assume_vertex_transitive else list(range(g.n))
    best: Optional[RootedNumber] = None
    worst_root = 0
    per_root: Dict[int, int] = {}
    states = 0
    for r in roots:
        res = pebbling_number_rooted(g, r, budget)
        states += res.states
        if res.status == BUDGET:
            return GlobalNumber(BUDGET, per_root=per_root, states=states)
        per_root[r] = res.value
        if best is None or res.value > best.value:
            best, worst_root = res, r
    if assume_vertex_transitive:
        per_root = {r: best.value for r in range(g.n)}
    return GlobalNumber("value", best.value, worst_root, best.witness,
                        per_root, states)


@dataclass
class Class0Outcome:
    status: str                      # yes | no | budget_exceeded
    root: Optional[int] = None
    witness: Optional[Configuration] = None
    states: int = 0


def is_class0(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> Class0Outcome:
    """Is pi(G) = |V(G)|?  A `no` carries an unsolvable configuration of
    size >= n for some root."""
    n = g.n
    states = 0
    for root in range(n):
        core = _new_core(g, root, budget)
        caps = solver_caps(g, root)
        try:
            # only configurations of size >= n matter; stop at the first
            val, cfg = core.best_unsolvable(caps, prune_at=n - 1,
                                            stop_above=n - 1)
        except BudgetExceeded:
            return Class0Outcome(BUDGET, root, states=states + core.states)
        states += core.states
        if cfg is not None:
            return Class0Outcome("no", root, Configuration(cfg), states)
    return Class0Outcome("yes", states=states)
