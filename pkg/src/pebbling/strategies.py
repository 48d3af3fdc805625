"""Weight functions and certificates for pebbling upper bounds.

A weight function w (root weight 0, all weights nonnegative rationals) is
*valid* for a rooted graph when every root-unsolvable configuration p
satisfies w.p <= w.1.  Valid weight functions come from three places here:

* tree strategies: supported on a subtree containing the root, with
  w(parent) = 2*w(child) for every vertex not adjacent to the root
  (nonbasic strategies relax = to >=).  While the dot product exceeds w.1
  some supported vertex holds two pebbles, and moving it rootward keeps
  the dot product, so the configuration is solvable.
* cycle-with-tail templates: an even cycle C_{2t} carrying weights
  2^1..2^{t-1} up each side, a special rational weight alpha on the far
  cycle vertex, and a geometric tail 2^t..2^s leading to the root (or the
  root placed directly on the cycle).  Validity of the template transfers
  to any embedding as a subgraph: a configuration solvable inside the
  subgraph is solvable in the host, so host-unsolvable configurations
  restrict to template-unsolvable ones and inherit the inequality.
* single-vertex/tree attachments: a new vertex u hanging off a supported
  vertex u+ with w(u) <= w(u+)/2 preserves validity (move pairs from u
  to u+ without losing weight).

Everything is exact: Fractions throughout, no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .engine import (BUDGET, Configuration, SolverBudget, DEFAULT_BUDGET,
                     _new_core, solver_caps)
from .errors import BudgetExceeded
from .graphs import Graph, GraphError

Rational = Fraction

TREE_BASIC = "tree_basic"
TREE_NONBASIC = "tree_nonbasic"
CYCLE_TAIL = "cycle_tail"
EXPLICIT = "explicit"
KINDS = (TREE_BASIC, TREE_NONBASIC, CYCLE_TAIL, EXPLICIT)


class CertificateError(ValueError):
    pass


def rat(x) -> Fraction:
    """Exact rational from int, str "num/den", or Fraction.  Floats are
    rejected: certificates are proofs and never touch floating point."""
    if isinstance(x, float):
        raise TypeError("floats are not allowed in certificate arithmetic")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Canonical "num/den" form, lowest terms, positive denominator."""
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightFunction:
    """Sparse vertex weights with a designated zero-weight root."""
    root: int
    weights: Dict[int, Fraction]

    def __post_init__(self):
        clean = {}
        for v, w in self.weights.items():
            w = rat(w)
            if w < 0:
                raise CertificateError(f"negative weight at vertex {v}")
            if w:
                clean[int(v)] = w
        if clean.get(self.root):
            raise CertificateError("root must have weight 0")
        object.__setattr__(self, "weights", clean)

    def weight(self, v: int) -> Fraction:
        return self.weights.get(v, Fraction(0))

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.weights))

    def dot(self, counts: Sequence[int]) -> Fraction:
        return sum((w * counts[v] for v, w in self.weights.items()),
                   Fraction(0))

    def total(self) -> Fraction:
        """w . 1: the sum of all weights (root contributes 0)."""
        return sum(self.weights.values(), Fraction(0))

    def min_nonroot(self, g: Graph) -> Fraction:
        return min(self.weight(v) for v in range(g.n) if v != self.root)

    def scaled(self, c) -> "WeightFunction":
        c = rat(c)
        if c < 0:
            raise CertificateError("scale must be nonnegative")
        return WeightFunction(self.root,
                              {v: c * w for v, w in self.weights.items()})

    def to_dict(self) -> dict:
        return {str(v): rat_str(w) for v, w in sorted(self.weights.items())}

    @classmethod
    def from_dict(cls, root: int, d: dict) -> "WeightFunction":
        return cls(root, {int(v): rat(w) for v, w in d.items()})


@dataclass(frozen=True)
class Strategy:
    """A weight function plus the provenance needed to re-validate it."""
    kind: str
    weight: WeightFunction
    support: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CertificateError(f"unknown strategy kind {self.kind!r}")

    @property
    def trusted_by_paper(self) -> bool:
        return bool(self.support.get("trusted_by_paper"))

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "weights": self.weight.to_dict(),
                "support": self.support}

    @classmethod
    def from_dict(cls, root: int, d: dict) -> "Strategy":
        return cls(d["kind"], WeightFunction.from_dict(root, d["weights"]),
                   dict(d.get("support", {})))


@dataclass
class Certificate:
    """Strategies with conic coefficients certifying a pebbling bound."""
    graph: Graph
    root: int
    entries: List[Tuple[Strategy, Fraction]]
    claimed_bound: int

    def __post_init__(self):
        self.graph._check_vertex(self.root)
        for s, c in self.entries:
            if s.weight.root != self.root:
                raise CertificateError("strategy root differs from certificate root")
            if rat(c) <= 0:
                raise CertificateError("coefficients must be positive")

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "root": self.root,
            "entries": [dict(s.to_dict(), coefficient=rat_str(rat(c)))
                        for s, c in self.entries],
            "claimed_bound": self.claimed_bound,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        g = Graph.from_dict(d["graph"])
        root = int(d["root"])
        entries = [(Strategy.from_dict(root, e), rat(e["coefficient"]))
                   for e in d["entries"]]
        return cls(g, root, entries, int(d["claimed_bound"]))


# -- tree strategies ---------------------------------------------------------


def tree_strategy(g: Graph, root: int, parent_edges: Sequence[Tuple[int, int]],
                  weights: Dict[int, Fraction], kind: str = TREE_BASIC,
                  ) -> Strategy:
    """Build a tree strategy from (child, parent) edges oriented rootward."""
    s = Strategy(kind, WeightFunction(root, weights),
                 {"tree": [[int(c), int(p)] for c, p in parent_edges]})
    err = validate_tree_strategy(g, s)
    if err is not None:
        raise CertificateError(err)
    return s


def path_strategy(g: Graph, root: int, vertices: Sequence[int]) -> Strategy:
    """Canonical strategy on a simple path from the root: the far end gets
    weight 1 and weights double toward the root."""
    if not vertices or vertices[0] != root:
        raise CertificateError("path must start at the root")
    weights = {}
    edges = []
    k = len(vertices) - 1
    for i, v in enumerate(vertices[1:], start=1):
        weights[v] = Fraction(1 << (k - i))
        edges.append((v, vertices[i - 1]))
    return tree_strategy(g, root, edges, weights)


def validate_tree_strategy(g: Graph, s: Strategy) -> Optional[str]:
    """None when valid, else a description of the first violated condition.

    Checks: the support is a subtree of g containing the root, weights
    vanish off the tree, and along each parent edge w(parent) = 2*w(child)
    (>= for nonbasic) for every child not adjacent to the root in g.
    """
    if s.kind not in (TREE_BASIC, TREE_NONBASIC):
        return f"not a tree strategy kind: {s.kind}"
    w = s.weight
    root = w.root
    tree = [(int(c), int(p)) for c, p in s.support.get("tree", [])]
    parent = {}
    for c, p in tree:
        if not (0 <= c < g.n and 0 <= p < g.n):
            return f"tree edge ({c},{p}) out of range"
        if not g.has_edge(c, p):
            return f"tree edge ({c},{p}) is not an edge of the graph"
        if c in parent:
            return f"vertex {c} has two parents"
        if c == root:
            return "root cannot have a parent"
        parent[c] = p
    # connectivity to the root (also rules out cycles)
    members = set(parent) | {root}
    for c in sorted(parent):
        seen = set()
        cur = c
        while cur != root:
            if cur in seen:
                return f"tree contains a cycle through vertex {cur}"
            seen.add(cur)
            if cur not in parent:
                return f"vertex {cur} is disconnected from the root"
            cur = parent[cur]
    attached = _attachment_children(s)
    for v in range(g.n):
        if w.weight(v) and v not in members and v not in attached:
            return f"vertex {v} has weight off the tree"
    for c in sorted(parent):
        if g.has_edge(c, root):
            continue  # vertices adjacent to the root carry no constraint
        wc, wp = w.weight(c), w.weight(parent[c])
        if s.kind == TREE_BASIC and wp != 2 * wc:
            return (f"vertex {c}: parent weight {wp} != twice child "
                    f"weight {wc}")
        if s.kind == TREE_NONBASIC and wp < 2 * wc:
            return (f"vertex {c}: parent weight {wp} < twice child "
                    f"weight {wc}")
    return _validate_attachments(g, s, members)


# -- cycle-with-tail templates ------------------------------------------------


def cycle_tail_alpha(t: int, s: int) -> Fraction:
    """The far-cycle-vertex weight (2^s + 2^(t-1) - 2) / (2^s - 1)."""
    if s < 1:
        raise CertificateError("alpha undefined: denominator 2^s - 1 is zero")
    return Fraction((1 << s) + (1 << (t - 1)) - 2, (1 << s) - 1)


def _cycle_tail_roles(t: int, tail: Optional[int]) -> dict:
    """Template vertex numbering shared by the constructors and validator.

    Pendant variant (tail >= 0): ids are x0=0, side1 1..t-1, side2
    t..2t-2, junction 2t-1, tail internals 2t..2t+tail-1, root 2t+tail.
    Cycle-root variant (tail is None): the root replaces the junction.
    """
    side1 = list(range(1, t))
    side2 = list(range(t, 2 * t - 1))
    junction = 2 * t - 1
    if tail is None:
        return {"x0": 0, "side1": side1, "side2": side2,
                "junction": None, "tail_path": [], "root": junction}
    tail_path = list(range(2 * t, 2 * t + tail))
    return {"x0": 0, "side1": side1, "side2": side2, "junction": junction,
            "tail_path": tail_path, "root": 2 * t + tail}


def cycle_tail_graph(t: int, tail: Optional[int] = 0) -> Tuple[Graph, int]:
    """The template graph: C_{2t} plus a pendant path to the root (tail
    internal vertices between the cycle and the root), or, with
    tail=None, just C_{2t} with the root on the cycle."""
    if t < 2:
        raise CertificateError("cycle_tail needs t >= 2")
    if tail is not None and tail < 0:
        raise CertificateError("tail length must be >= 0 (or None)")
    roles = _cycle_tail_roles(t, tail)
    anchor = roles["junction"] if tail is not None else roles["root"]
    edges = []
    for side in (roles["side1"], roles["side2"]):
        chain = [roles["x0"]] + side + [anchor]
        edges += list(zip(chain, chain[1:]))
    if tail is not None:
        chain = [anchor] + roles["tail_path"] + [roles["root"]]
        edges += list(zip(chain, chain[1:]))
    return Graph(2 * t + (tail + 1 if tail is not None else 0), edges), \
        roles["root"]


def _cycle_tail_weights_map(t: int, tail: Optional[int],
                            scale: Fraction) -> Dict[int, Fraction]:
    roles = _cycle_tail_roles(t, tail)
    s_exp = t + tail if tail is not None else t
    weights: Dict[int, Fraction] = {roles["x0"]: scale * cycle_tail_alpha(t, s_exp)}
    for i, v in enumerate(roles["side1"], start=1):
        weights[v] = scale * (1 << i)
    for i, v in enumerate(roles["side2"], start=1):
        weights[v] = scale * (1 << i)
    if tail is not None:
        weights[roles["junction"]] = scale * (1 << t)
        for j, v in enumerate(roles["tail_path"], start=1):
            weights[v] = scale * (1 << (t + j))
    return weights


def cycle_tail_weights(t: int, tail: int = 0, scale=1) -> Strategy:
    """The cycle-with-tail strategy on its template graph.

    `tail` counts the internal vertices strictly between the cycle's
    junction and the root, so tail=0 already hangs the root off the cycle;
    the exponent in alpha is s = t + tail.  The weight total is
    alpha + 2^(s+1) + 2^t - 4 (times scale).
    """
    if t < 2 or tail < 0:
        raise CertificateError("cycle_tail_weights needs t >= 2 and tail >= 0")
    scale = rat(scale)
    roles = _cycle_tail_roles(t, tail)
    w = WeightFunction(roles["root"], _cycle_tail_weights_map(t, tail, scale))
    support = {"t": t, "tail": tail, "variant": "pendant",
               "roles": roles, "scale": rat_str(scale)}
    return Strategy(CYCLE_TAIL, w, support)


def cycle_root_weights(t: int, scale=1) -> Strategy:
    """The no-tail variant with the root placed on the cycle itself
    (alpha evaluated at s = t); used by certificates whose cycles pass
    through the root."""
    if t < 2:
        raise CertificateError("cycle_root_weights needs t >= 2")
    scale = rat(scale)
    roles = _cycle_tail_roles(t, None)
    w = WeightFunction(roles["root"], _cycle_tail_weights_map(t, None, scale))
    support = {"t": t, "tail": None, "variant": "cycle_root",
               "roles": roles, "scale": rat_str(scale)}
    return Strategy(CYCLE_TAIL, w, support)


def embed_strategy(s: Strategy, mapping: Dict[int, int], g: Graph,
                   root: int) -> Strategy:
    """Transport a template strategy into g along an injective vertex map;
    the mapped support must exist edge-for-edge in g (checked by the
    validator, which is invoked here)."""
    w = s.weight
    if mapping[w.root] != root:
        raise CertificateError("mapping must send the template root to root")
    if len(set(mapping.values())) != len(mapping):
        raise CertificateError("embedding must be injective")
    new_w = WeightFunction(root, {mapping[v]: wt
                                  for v, wt in w.weights.items()})
    support = dict(s.support)
    if "roles" in support:
        support = dict(support)
        support["roles"] = _map_roles(support["roles"], mapping)
    if "tree" in support:
        support["tree"] = [[mapping[c], mapping[p]]
                           for c, p in support["tree"]]
    out = Strategy(s.kind, new_w, support)
    err = validate_strategy_structurally(g, out)
    if err is not None:
        raise CertificateError(f"embedding is not structure-preserving: {err}")
    return out


def _map_roles(roles: dict, mapping: Dict[int, int]) -> dict:
    def m(x):
        if x is None:
            return None
        if isinstance(x, list):
            return [m(y) for y in x]
        return mapping[x]
    return {k: m(v) for k, v in roles.items()}


def validate_cycle_tail_strategy(g: Graph, s: Strategy) -> Optional[str]:
    """Check a cycle_tail strategy against its template: role vertices
    distinct, template edges present in g, weights equal to scale times
    the template, zero elsewhere (attachments aside)."""
    if s.kind != CYCLE_TAIL:
        return f"not a cycle_tail strategy: {s.kind}"
    sup = s.support
    try:
        t = int(sup["t"])
        tail = sup["tail"]
        tail = None if tail is None else int(tail)
        roles = sup["roles"]
        scale = rat(sup["scale"])
    except (KeyError, TypeError, ValueError) as exc:
        return f"malformed cycle_tail support: {exc}"
    if t < 2 or (tail is not None and tail < 0) or scale <= 0:
        return "cycle_tail parameters out of range"
    side1, side2 = list(roles["side1"]), list(roles["side2"])
    if len(side1) != t - 1 or len(side2) != t - 1:
        return "side lengths do not match t"
    tail_path = list(roles["tail_path"])
    if tail is not None and len(tail_path) != tail:
        return "tail path length does not match tail"
    anchor = roles["junction"] if tail is not None else roles["root"]
    ids = [roles["x0"], *side1, *side2, *tail_path, roles["root"]]
    if tail is not None:
        ids.append(roles["junction"])
    if len(set(ids)) != len(ids):
        return "role vertices are not distinct"
    for v in ids:
        if not (0 <= int(v) < g.n):
            return f"role vertex {v} out of range"
    chains = [[roles["x0"], *side1, anchor], [roles["x0"], *side2, anchor]]
    if tail is not None:
        chains.append([anchor, *tail_path, roles["root"]])
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            if not g.has_edge(int(a), int(b)):
                return f"required edge ({a},{b}) missing in graph"
    if s.weight.root != roles["root"]:
        return "weight root differs from template root role"
    template = _cycle_tail_weights_map(t, tail, scale)
    ident = _cycle_tail_roles(t, tail)
    mapping = {}
    mapping[ident["x0"]] = roles["x0"]
    for a, b in zip(ident["side1"], side1):
        mapping[a] = b
    for a, b in zip(ident["side2"], side2):
        mapping[a] = b
    if tail is not None:
        mapping[ident["junction"]] = roles["junction"]
        for a, b in zip(ident["tail_path"], tail_path):
            mapping[a] = b
    expected = {mapping[v]: wt for v, wt in template.items()}
    attached = _attachment_children(s)
    for v in range(g.n):
        want = expected.get(v, Fraction(0))
        if v in attached:
            continue
        if s.weight.weight(v) != want:
            return (f"vertex {v}: weight {s.weight.weight(v)} differs from "
                    f"template value {want}")
    return _validate_attachments(g, s, set(int(v) for v in ids))


# -- attachments (new vertices hanging off a valid support) ------------------


def attach_tree(g: Graph, s: Strategy, attach_at: int,
                tree_edges: Sequence[Tuple[int, int]],
                tree_weights: Dict[int, Fraction]) -> Strategy:
    """Extend a strategy with a tree hanging off `attach_at`.

    Each attached edge (parent, child) must satisfy
    w(child) <= w(parent)/2, with parents already in the (growing)
    support; validity is preserved.  The root cannot be the attach point.
    """
    w = s.weight
    if attach_at == w.root:
        raise CertificateError("cannot attach at the root")
    new_weights = dict(w.weights)
    attachments = list(s.support.get("attachments", []))
    in_support = set(v for v in range(g.n) if w.weight(v) or v == attach_at)
    in_support.add(w.root)
    for parent, child in tree_edges:
        parent, child = int(parent), int(child)
        if parent not in in_support and parent != attach_at:
            raise CertificateError(
                f"attachment parent {parent} not in the support")
        if child in in_support:
            raise CertificateError(
                f"attachment child {child} already in the support")
        if not g.has_edge(parent, child):
            raise CertificateError(f"({parent},{child}) is not an edge")
        cw = rat(tree_weights.get(child, 0))
        pw = new_weights.get(parent, Fraction(0))
        if cw > pw / 2:
            raise CertificateError(
                f"edge ({parent},{child}): child weight {cw} exceeds half "
                f"the parent weight {pw}")
        new_weights[child] = cw
        attachments.append({"parent": parent, "child": child,
                            "weight": rat_str(cw)})
        in_support.add(child)
    support = dict(s.support)
    support["attachments"] = attachments
    return Strategy(s.kind, WeightFunction(w.root, new_weights), support)


def _attachment_children(s: Strategy) -> set:
    return {int(a["child"]) for a in s.support.get("attachments", [])}


def _validate_attachments(g: Graph, s: Strategy, base_support: set
                          ) -> Optional[str]:
    grown = set(base_support)
    for a in s.support.get("attachments", []):
        parent, child = int(a["parent"]), int(a["child"])
        if parent not in grown:
            return f"attachment parent {parent} outside the support"
        if child in grown:
            return f"attachment child {child} duplicated"
        if not g.has_edge(parent, child):
            return f"attachment edge ({parent},{child}) missing"
        if s.weight.weight(child) != rat(a["weight"]):
            return f"attachment child {child} weight mismatch"
        if s.weight.weight(child) > s.weight.weight(parent) / 2:
            return (f"attachment child {child}: weight exceeds half of "
                    f"parent {parent}")
        grown.add(child)
    return None


def validate_strategy_structurally(g: Graph, s: Strategy) -> Optional[str]:
    if s.kind in (TREE_BASIC, TREE_NONBASIC):
        return validate_tree_strategy(g, s)
    if s.kind == CYCLE_TAIL:
        return validate_cycle_tail_strategy(g, s)
    return "explicit strategies have no structural validation"


# -- combination and the covering bound --------------------------------------


def combine(entries: Sequence[Tuple[WeightFunction, Fraction]]
            ) -> WeightFunction:
    """Pointwise conic combination; valid whenever the parts are, because
    each constraint w.p <= w.1 is homogeneous and sums."""
    if not entries:
        raise CertificateError("nothing to combine")
    root = entries[0][0].root
    total: Dict[int, Fraction] = {}
    any_positive = False
    for w, c in entries:
        c = rat(c)
        if c < 0:
            raise CertificateError("combination coefficients must be >= 0")
        if c > 0:
            any_positive = True
        if w.root != root:
            raise CertificateError("cannot combine strategies with "
                                   "different roots")
        for v, wt in w.weights.items():
            total[v] = total.get(v, Fraction(0)) + c * wt
    if not any_positive:
        raise CertificateError("at least one coefficient must be positive")
    return WeightFunction(root, total)


def covering_bound(g: Graph, root: int, w: WeightFunction) -> int:
    """floor(S/C) + 1 where C = min and S = sum of w over non-root
    vertices: an unsolvable p has |p| <= w.p/C <= S/C, so every
    configuration of size floor(S/C)+1 is solvable."""
    if w.root != root:
        raise CertificateError("weight function rooted elsewhere")
    if g.n == 1:
        return 1
    c = w.min_nonroot(g)
    if c <= 0:
        missing = min(v for v in range(g.n)
                      if v != root and w.weight(v) == 0)
        raise CertificateError(
            f"covering bound undefined: vertex {missing} has weight 0")
    s = w.total()
    return (s / c).__floor__() + 1


# -- brute-force validity oracle ----------------------------------------------


@dataclass
class ValidityOutcome:
    status: str                      # valid | invalid | budget_exceeded
    witness: Optional[Configuration] = None
    states: int = 0


def verify_validity_bruteforce(g: Graph, root: int, w: WeightFunction,
                               budget: SolverBudget = DEFAULT_BUDGET,
                               max_vertices: int = 10) -> ValidityOutcome:
    """Decide validity by enumerating unsolvable configurations.

    Searches the capped box (2^dist - 1 per vertex, which contains every
    unsolvable configuration) for one with w.p > w.1, sharing the
    engine's branch-and-bound with the integer objective obtained by
    scaling w to least common denominator."""
    if g.n > max_vertices:
        raise CertificateError(
            f"brute-force validity is guarded to n <= {max_vertices}")
    if w.root != root:
        raise CertificateError("weight function rooted elsewhere")
    denom = lcm(*(wt.denominator for wt in w.weights.values())) \
        if w.weights else 1
    scaled = [int(w.weight(v) * denom) for v in range(g.n)]
    w_dot_1 = sum(scaled)
    core = _new_core(g, root, budget)
    caps = solver_caps(g, root)
    try:
        val, cfg = core.best_unsolvable(caps, weights=scaled,
                                        prune_at=w_dot_1,
                                        stop_above=w_dot_1)
    except BudgetExceeded:
        return ValidityOutcome(BUDGET, states=core.states)
    if cfg is None:
        return ValidityOutcome("valid", states=core.states)
    return ValidityOutcome("invalid", Configuration(cfg), core.states)


# -- certificate verification --------------------------------------------------


@dataclass
class StrategyVerdict:
    index: int
    kind: str
    verdict: str                     # ok | trusted_by_paper | failed | budget
    detail: str = ""

    def to_dict(self) -> dict:
        return {"index": self.index, "kind": self.kind,
                "verdict": self.verdict, "detail": self.detail}


@dataclass
class CertificateReport:
    ok: bool
    mode: str
    strategy_verdicts: List[StrategyVerdict]
    recomputed_bound: Optional[int]
    claimed_bound: int
    combined_min: Optional[Fraction] = None
    combined_total: Optional[Fraction] = None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mode": self.mode,
            "strategies": [v.to_dict() for v in self.strategy_verdicts],
            "recomputed_bound": self.recomputed_bound,
            "claimed_bound": self.claimed_bound,
            "combined_min": (rat_str(self.combined_min)
                             if self.combined_min is not None else None),
            "combined_total": (rat_str(self.combined_total)
                               if self.combined_total is not None else None),
        }


def verify_certificate(cert: Certificate, mode: str = "structural",
                       budget: SolverBudget = DEFAULT_BUDGET,
                       max_vertices: int = 10) -> CertificateReport:
    """Re-validate every strategy (structurally by kind, or by the
    brute-force oracle), recombine, recompute the covering bound, and
    compare with the claimed bound."""
    if mode not in ("structural", "bruteforce"):
        raise CertificateError(f"unknown verification mode {mode!r}")
    g = cert.graph
    verdicts: List[StrategyVerdict] = []
    all_ok = True
    for i, (s, _c) in enumerate(cert.entries):
        if s.trusted_by_paper:
            verdicts.append(StrategyVerdict(
                i, s.kind, "trusted_by_paper",
                "verification skipped: recorded as trusted"))
            continue
        if mode == "structural":
            if s.kind == EXPLICIT:
                all_ok = False
                verdicts.append(StrategyVerdict(
                    i, s.kind, "failed",
                    "explicit strategies require bruteforce mode"))
                continue
            err = validate_strategy_structurally(g, s)
            if err is None:
                verdicts.append(StrategyVerdict(i, s.kind, "ok"))
            else:
                all_ok = False
                verdicts.append(StrategyVerdict(i, s.kind, "failed", err))
        else:
            out = verify_validity_bruteforce(g, cert.root, s.weight, budget,
                                             max_vertices)
            if out.status == "valid":
                verdicts.append(StrategyVerdict(i, s.kind, "ok",
                                                "bruteforce oracle"))
            elif out.status == "invalid":
                all_ok = False
                verdicts.append(StrategyVerdict(
                    i, s.kind, "failed",
                    f"unsolvable witness violates the inequality: "
                    f"{out.witness.to_dict()}"))
            else:
                all_ok = False
                verdicts.append(StrategyVerdict(i, s.kind, "budget",
                                                "oracle budget exhausted"))
    recomputed = None
    combined_min = combined_total = None
    try:
        combined = combine([(s.weight, c) for s, c in cert.entries])
        combined_min = combined.min_nonroot(g)
        combined_total = combined.total()
        recomputed = covering_bound(g, cert.root, combined)
    except CertificateError as exc:
        all_ok = False
        verdicts.append(StrategyVerdict(-1, "combined", "failed", str(exc)))
    if recomputed is not None and recomputed != cert.claimed_bound:
        all_ok = False
    return CertificateReport(all_ok, mode, verdicts, recomputed,
                             cert.claimed_bound, combined_min, combined_total)
