#!/usr/bin/env python3
"""Re-derive the Lemke graph adjacency adopted in pebbling/graphs.py.

The literature specifies the Lemke graph only through drawings, so this
script pins it down from first principles: among all 8-vertex graphs with
maximum degree 4, minimum degree 2, and 12 or 13 edges (12 is the fewest
any 8-vertex Class 0 graph can have), enumerate every degree sequence,
filter to diameter 3 and no cut vertex, deduplicate up to isomorphism,
and keep the graphs that are Class 0 *and* lack the 2-pebbling property.

A graph has the 2-pebbling property when every configuration p with
|p| > 2*pi(G) - q(p) (q = number of occupied vertices) can move two
pebbles to any target.  Failures, if any exist, occur already at
|p| = 2*pi(G) - q(p) + 1: while some vertex holds two or more pebbles,
one can be removed keeping both the premise and the failure, and a
failing all-0/1 configuration would need q > n.

Run:  python scripts/find_lemke.py
"""

from __future__ import annotations

import sys
from itertools import combinations, permutations

sys.setrecursionlimit(10000)

from pebbling.graphs import Graph, GraphError
from pebbling.engine import SolverBudget, is_class0, _new_core
from pebbling.errors import BudgetExceeded

BUDGET = SolverBudget(max_states=200_000_000)

# all degree sequences on 8 vertices with degrees in {2,3,4}, at least one
# degree-4 vertex, and 12 or 13 edges
SEQUENCES = []
for n4 in range(1, 9):
    for n3 in range(0, 9 - n4):
        n2 = 8 - n4 - n3
        total = 4 * n4 + 3 * n3 + 2 * n2
        if total in (24, 26):
            SEQUENCES.append(tuple([4] * n4 + [3] * n3 + [2] * n2))


def candidate_graphs(target):
    pairs = list(combinations(range(8), 2))

    def backtrack(idx, deg, edges):
        if idx == len(pairs):
            if all(d == t for d, t in zip(deg, target)):
                yield list(edges)
            return
        remaining = len(pairs) - idx
        deficit = sum(t - d for d, t in zip(deg, target))
        if deficit < 0 or deficit > 2 * remaining:
            return
        u, v = pairs[idx]
        yield from backtrack(idx + 1, deg, edges)
        if deg[u] < target[u] and deg[v] < target[v]:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
            yield from backtrack(idx + 1, deg, edges)
            edges.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from backtrack(0, [0] * 8, [])


def canonical(edges, target):
    """Smallest edge set over relabelings preserving the degree classes."""
    classes = {}
    for v, d in enumerate(target):
        classes.setdefault(d, []).append(v)
    groups = list(classes.values())

    best = None

    def perms_product(i, mapping):
        nonlocal best
        if i == len(groups):
            relabeled = tuple(sorted(tuple(sorted((mapping[u], mapping[v])))
                                     for u, v in edges))
            if best is None or relabeled < best:
                best = relabeled
            return
        group = groups[i]
        for perm in permutations(group):
            mapping.update(dict(zip(group, perm)))
            perms_product(i + 1, mapping)

    perms_product(0, {})
    return best


def compositions(total: int, parts: int):
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(total - prev)
        yield out


def two_pebbling_failures(g: Graph):
    """Yield (root, config) boundary failures of the 2-pebbling property."""
    two_pi = 2 * g.n  # Class 0 was verified: pi = n
    for root in range(g.n):
        core = _new_core(g, root, BUDGET)
        for q in range(1, g.n + 1):
            size = two_pi - q + 1
            for support in combinations(range(g.n), q):
                for parts in compositions(size, q):
                    counts = [0] * g.n
                    for pos, part in zip(support, parts):
                        counts[pos] = part
                    ok, _ = core.solve(counts, need=2)
                    if not ok:
                        yield root, tuple(counts)


def main():
    all_final = []
    for target in SEQUENCES:
        seen = set()
        total = structural = class0 = 0
        for edges in candidate_graphs(target):
            total += 1
            try:
                g = Graph(8, edges)
            except GraphError:
                continue  # disconnected
            if g.diameter() != 3 or g.cut_vertices():
                continue
            structural += 1
            try:
                if is_class0(g, BUDGET).status != "yes":
                    continue
            except BudgetExceeded:
                continue
            class0 += 1
            key = canonical(edges, target)
            if key in seen:
                continue
            seen.add(key)
            fail = next(two_pebbling_failures(g), None)
            if fail is None:
                print(f"  Class 0 but has 2PP: {key}")
                continue
            all_final.append((target, key, fail))
            print(f"  FAILS 2PP: {key}")
            print(f"    witness: root {fail[0]}, config {fail[1]}")
        print(f"degseq {target}: {total} labeled, {structural} structural, "
              f"{class0} Class 0 labeled, {len(seen)} Class 0 classes")
    print(f"\n{len(all_final)} graph(s) satisfy every Lemke graph property")
    for target, key, fail in all_final:
        print("degseq", target, "edges", key)


if __name__ == "__main__":
    main()
