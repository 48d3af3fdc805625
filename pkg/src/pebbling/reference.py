"""Naive reference solver used as an independent oracle in tests.

No move ordering, no dominance pruning, no per-vertex caps, no shortcuts:
just exhaustive depth-first search over all legal moves with a visited set
(every move removes a pebble, so the search space is finite either way).
Keep this module dumb; the optimized kernels are tested against it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Tuple

from .graphs import Graph


def solvable_reference(g: Graph, root: int, counts: Tuple[int, ...]) -> bool:
    arcs = [(u, v) for u in range(g.n) for v in g.neighbors(u)]
    seen = set()

    def dfs(cfg: Tuple[int, ...]) -> bool:
        if cfg[root] >= 1:
            return True
        if cfg in seen:
            return False
        seen.add(cfg)
        for u, v in arcs:
            if cfg[u] >= 2:
                nxt = list(cfg)
                nxt[u] -= 2
                nxt[v] += 1
                if dfs(tuple(nxt)):
                    return True
        return False

    return dfs(tuple(counts))


def configurations_of_size(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All ways to place k pebbles on n vertices (stars and bars)."""
    for bars in combinations(range(k + n - 1), n - 1):
        prev = -1
        counts = []
        for b in bars:
            counts.append(b - prev - 1)
            prev = b
        counts.append(k + n - 2 - prev)
        yield tuple(counts)


def pebbling_number_rooted_reference(g: Graph, root: int, k_max: int = 4096) -> int:
    """Smallest k such that every size-k configuration is solvable.

    Unsolvability is monotone downward (removing pebbles keeps a
    configuration unsolvable), so the first all-solvable size is pi(G, root).
    """
    k = 0
    while k <= k_max:
        if all(solvable_reference(g, root, cfg)
               for cfg in configurations_of_size(g.n, k)):
            return k
        k += 1
    raise RuntimeError(f"reference search exceeded k_max={k_max}")


def pebbling_number_reference(g: Graph) -> int:
    return max(pebbling_number_rooted_reference(g, r) for r in range(g.n))
