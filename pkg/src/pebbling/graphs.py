"""Simple undirected graphs: representation, metrics, and the generator zoo.

Vertices are dense integers 0..n-1.  Labels are optional per-vertex text and
never influence any algorithm.  Every graph handled here is connected; the
constructor enforces it, so downstream solvers never need to re-check.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

Edge = Tuple[int, int]

BRUHAT_CAP = 6  # m! vertices; override via bruhat(m, cap=...)

# The Lemke graph: the standard 8-vertex graph of the pebbling literature,
# the smallest graph lacking the 2-pebbling property.  Printed sources give
# it only as a figure, so THIS EDGE LIST IS THE SINGLE SOURCE OF TRUTH for
# the library; review it against your favorite drawing.  It was derived by
# exhaustive search (scripts/find_lemke.py) over all 8-vertex graphs with
# maximum degree 4, minimum degree 2, and 12..15 edges: exactly one graph
# up to isomorphism is Class 0 with diameter 3 and no cut vertex *and*
# fails the 2-pebbling property, witnessed by the configuration
# (0,0,0,1,1,1,1,8) of 12 = 2*pi - 5 + 1 pebbles on 5 vertices, from which
# two pebbles cannot reach vertex 0.
# Labeling: 0 = the marked root r (degree 2); {1,2} at distance 1,
# {3,4,5,6} at distance 2, 7 at distance 3; vertex 7 is the degree-4
# vertex dominating the far side {3,4,5,6}.
LEMKE_EDGES: Tuple[Edge, ...] = (
    (0, 1), (0, 2),
    (1, 3), (1, 4), (1, 5),
    (2, 6),
    (3, 4), (3, 5), (3, 7),
    (4, 6), (4, 7),
    (5, 6), (5, 7),
    (6, 7),
)


class GraphError(ValueError):
    """Raised for malformed graph data or out-of-range parameters."""


class Graph:
    """Immutable connected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_edges", "labels")

    def __init__(self, n: int, edges: Iterable[Edge],
                 labels: Optional[Dict[int, str]] = None):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        seen: Set[Edge] = set()
        adj: List[List[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self._adj: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj)
        if labels:
            bad = [v for v in labels if not (0 <= v < n)]
            if bad:
                raise GraphError(f"label for unknown vertex {bad[0]}")
            self.labels: Dict[int, str] = {v: str(t) for v, t in labels.items()}
        else:
            self.labels = {}
        if not self._is_connected():
            raise GraphError("graph is not connected")

    # -- basic accessors ------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"unknown vertex id {v}")

    def __eq__(self, other: object) -> bool:
        # structural equality; labels are metadata
        return (isinstance(other, Graph)
                and self.n == other.n and self._edges == other._edges)

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"

    # -- metrics ---------------------------------------------------------

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    queue.append(w)
        return count == self.n

    def distances(self, v: int) -> List[int]:
        """BFS distances from v; every vertex is reached (connectivity)."""
        self._check_vertex(v)
        dist = [-1] * self.n
        dist[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def eccentricity(self, v: int) -> int:
        return max(self.distances(v))

    def diameter(self) -> int:
        return max(self.eccentricity(v) for v in range(self.n))

    def cut_vertices(self) -> Set[int]:
        """Vertices whose removal disconnects the graph (removal test)."""
        cuts: Set[int] = set()
        if self.n <= 2:
            return cuts
        for v in range(self.n):
            start = 0 if v != 0 else 1
            seen = bytearray(self.n)
            seen[v] = 1  # excluded
            seen[start] = 1
            queue = deque([start])
            count = 1
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = 1
                        count += 1
                        queue.append(w)
            if count != self.n - 1:
                cuts.add(v)
        return cuts

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"n": self.n, "edges": [list(e) for e in self._edges]}
        if self.labels:
            d["labels"] = {str(v): t for v, t in sorted(self.labels.items())}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Graph":
        try:
            n = int(d["n"])
            edges = [(int(u), int(v)) for u, v in d["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph object: {exc}") from exc
        labels = {int(v): str(t) for v, t in d.get("labels", {}).items()}
        return cls(n, edges, labels or None)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_edgelist_text(self) -> str:
        lines = [f"# n={self.n}"]
        lines += [f"{u} {v}" for u, v in self._edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist_text(cls, text: str) -> "Graph":
        edges: List[Edge] = []
        n = 0
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line: {raw!r}")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            n = max(n, u + 1, v + 1)
        return cls(n, edges)


# -- generators ------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise GraphError("hypercube needs d >= 0")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d)
             if v < v ^ (1 << b)]
    labels = {v: format(v, f"0{max(d, 1)}b") for v in range(n)}
    return Graph(n, edges, labels)


def petersen_generalized(n: int, k: int) -> Graph:
    """Outer cycle u_0..u_{n-1} (ids 0..n-1), inner w_i = n+i with w_i~w_{i+k}."""
    if n < 3 or not (1 <= k < n / 2):
        raise GraphError("petersen_generalized needs n >= 3 and 1 <= k < n/2")
    edges: List[Edge] = []
    for i in range(n):
        edges.append((i, (i + 1) % n))          # outer cycle
        edges.append((i, n + i))                # spoke
        edges.append((n + i, n + (i + k) % n))  # inner step
    labels = {i: f"u{i}" for i in range(n)}
    labels.update({n + i: f"w{i}" for i in range(n)})
    return Graph(2 * n, edges, labels)


def lemke() -> Graph:
    """The Lemke graph; vertex 0 is the literature's marked root."""
    labels = {0: "r", 7: "dominating"}
    return Graph(8, LEMKE_EDGES, labels)


def bruhat(m: int, cap: int = BRUHAT_CAP) -> Graph:
    """Permutations of 1..m, adjacent iff they differ by an adjacent transposition."""
    if m < 2:
        raise GraphError("bruhat needs m >= 2")
    if m > cap:
        raise GraphError(f"bruhat({m}) exceeds safety cap {cap}; "
                         f"pass cap={m} to override")
    perms = sorted(permutations(range(1, m + 1)))
    index = {p: i for i, p in enumerate(perms)}
    edges: List[Edge] = []
    for p, i in index.items():
        for pos in range(m - 1):
            q = list(p)
            q[pos], q[pos + 1] = q[pos + 1], q[pos]
            j = index[tuple(q)]
            if i < j:
                edges.append((i, j))
    labels = {i: "".join(map(str, p)) for p, i in index.items()}
    return Graph(len(perms), edges, labels)


def family_f(p: int, q: int) -> Graph:
    """Triangle vertex 0 with its two incident edges replaced by p and q
    subdivided parallel edges.  Vertices: 0=apex, 1, 2, then p middles on
    the 0-1 side, then q middles on the 0-2 side.  Always 2n-5 edges."""
    if p < 1 or q < 1:
        raise GraphError("family_f needs p, q >= 1")
    edges: List[Edge] = [(1, 2)]
    nxt = 3
    for _ in range(p):
        edges += [(0, nxt), (nxt, 1)]
        nxt += 1
    for _ in range(q):
        edges += [(0, nxt), (nxt, 2)]
        nxt += 1
    return Graph(nxt, edges)


def family_g(p: int, q: int, r: int) -> Graph:
    """K4 analogue of family_f: apex 0 joined to 1, 2, 3 through p, q, r
    subdivided parallel edges; triangle on 1, 2, 3 kept.  2n-5 edges."""
    if p < 1 or q < 1 or r < 1:
        raise GraphError("family_g needs p, q, r >= 1")
    edges: List[Edge] = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for target, count in ((1, p), (2, q), (3, r)):
        for _ in range(count):
            edges += [(0, nxt), (nxt, target)]
            nxt += 1
    return Graph(nxt, edges)


def clone_vertex(g: Graph, v: int) -> Graph:
    """Add a new vertex with the same neighborhood as v (not adjacent to v)."""
    g._check_vertex(v)
    new = g.n
    edges = list(g.edges()) + [(w, new) for w in g.neighbors(v)]
    labels = dict(g.labels) if g.labels else None
    return Graph(g.n + 1, edges, labels)


GENERATORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "petersen": (petersen_generalized, 2),
    "lemke": (lemke, 0),
    "bruhat": (bruhat, 1),
    "familyF": (family_f, 2),
    "familyG": (family_g, 3),
}
