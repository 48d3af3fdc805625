"""Pure-Python solver kernel.

Implements the exact same search as the compiled kernel in ``_fastcore``:
depth-first solvability search with memoization of certified-unsolvable
configurations, bounded dominance stores, and the branch-and-bound
enumeration of maximum-objective unsolvable configurations.  The compiled
kernel is preferred at import time; this module is the fallback and the
readable reference for what the C code does.

Determinism contract: with a fixed vertex order the two kernels visit
states in the same order and return identical verdicts and witnesses.
"""

from __future__ import annotations

import time
from typing import List, Optional, Sequence, Tuple

from .errors import BudgetExceeded

Move = Tuple[int, int]

DOM_CAP = 256          # max entries per dominance store
TIME_CHECK_MASK = 0x1FFF  # check the wall clock every 8192 states


def _bfs_dist(neighbors: Sequence[Sequence[int]], root: int) -> List[int]:
    dist = [-1] * len(neighbors)
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


class SolverCore:
    """Exact solvability and max-unsolvable search for one rooted graph.

    Memo and dominance stores persist for the lifetime of the instance, so
    repeated queries against the same root share work.  A single instance
    is single-threaded; instances are independent.
    """

    def __init__(self, neighbors: Sequence[Sequence[int]], root: int,
                 max_states: int, deadline: Optional[float] = None):
        self.n = len(neighbors)
        self.root = root
        self.dist = _bfs_dist(neighbors, root)
        # Moves ordered root-ward first (strictly distance-decreasing, then
        # lateral, then distance-increasing), ties by (from, to) ids.
        arcs = [(f, t) for f in range(self.n) for t in neighbors[f]]
        arcs.sort(key=lambda a: ((self.dist[a[1]] > self.dist[a[0]])
                                 - (self.dist[a[1]] < self.dist[a[0]]),
                                 a[0], a[1]))
        self.arcs = arcs
        self.max_states = max_states
        self.deadline = deadline
        self.states = 0
        self._unsolv = set()            # exact memo of certified-unsolvable
        self._solv_suffix = {}          # config -> winning move suffix
        # bounded dominance stores: (size, nonzero-mask, config, [witness])
        self._dom_unsolv: List[Tuple[int, int, Tuple[int, ...]]] = []
        self._dom_solv: List[Tuple[int, int, Tuple[int, ...], List[Move]]] = []
        # branch-and-bound incumbent (readable after BudgetExceeded)
        self.best_val = -1
        self.best_cfg: Optional[Tuple[int, ...]] = None
        self._need: Optional[int] = None

    # -- bookkeeping ------------------------------------------------------

    def _tick(self) -> None:
        self.states += 1
        if self.states > self.max_states:
            raise BudgetExceeded(f"state budget {self.max_states} exhausted")
        if self.deadline is not None and not (self.states & TIME_CHECK_MASK):
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exhausted")

    @staticmethod
    def _mask(cfg: Sequence[int]) -> int:
        m = 0
        for i, c in enumerate(cfg):
            if c:
                m |= 1 << i
        return m

    def _dominated_by_unsolvable(self, cfg, size, mask) -> bool:
        # cfg <= stored componentwise for some certified-unsolvable stored
        for s_size, s_mask, s_cfg in self._dom_unsolv:
            if s_size > size and mask & ~s_mask == 0:
                if all(c <= s for c, s in zip(cfg, s_cfg)):
                    return True
        return False

    def _dominating_solvable(self, cfg, size, mask) -> Optional[List[Move]]:
        # cfg >= stored componentwise for some solvable stored; the stored
        # witness is replayable from cfg because counts only grow.
        for s_size, s_mask, s_cfg, s_moves in self._dom_solv:
            if s_size <= size and s_mask & ~mask == 0:
                if all(c >= s for c, s in zip(cfg, s_cfg)):
                    return s_moves
        return None

    def _store_unsolvable(self, cfg: Tuple[int, ...]) -> None:
        if len(self._dom_unsolv) < DOM_CAP:
            self._dom_unsolv.append((sum(cfg), self._mask(cfg), cfg))

    def _store_solvable(self, cfg: Tuple[int, ...], moves: List[Move]) -> None:
        if len(self._dom_solv) < DOM_CAP:
            self._dom_solv.append((sum(cfg), self._mask(cfg), cfg, moves))

    # -- solvability -------------------------------------------------------

    def _shortcut(self, cfg, need: int) -> Optional[List[Move]]:
        # A vertex at distance d holding need*2^d pebbles solves alone by
        # halving along any shortest path; checking this up front avoids
        # deep searches on heavily loaded configurations.
        for v in range(self.n):
            if v != self.root and cfg[v] >= need << self.dist[v]:
                moves: List[Move] = []
                cur, k = v, need << self.dist[v]
                while cur != self.root:
                    nxt = min(w for w in self._nbr_of(cur)
                              if self.dist[w] == self.dist[cur] - 1)
                    moves.extend([(cur, nxt)] * (k // 2))
                    k //= 2
                    cur = nxt
                return moves
        return None

    def _nbr_of(self, v: int):
        return [t for f, t in self.arcs if f == v]

    def solve(self, counts: Sequence[int], need: int = 1
              ) -> Tuple[bool, Optional[List[Move]]]:
        """Decide whether `counts` can place `need` pebbles on the root.

        Returns (True, moves) with a replayable witness, or (False, None)
        after exhausting every reachable configuration.  Raises
        BudgetExceeded when the budget runs out first.
        """
        cfg = tuple(counts)
        if self._need is None:
            self._need = need
        elif need != self._need:
            raise ValueError("memo stores are specific to `need`; "
                             "use a fresh SolverCore per target count")
        if cfg[self.root] >= need:
            return True, []
        result = self._dfs(cfg, need)
        if result is not None:
            self._store_solvable(cfg, result)
            return True, result
        self._store_unsolvable(cfg)
        return False, None

    def _dfs(self, top: Tuple[int, ...], need: int) -> Optional[List[Move]]:
        arcs = self.arcs
        root = self.root
        # Explicit stack; each frame is [cfg, arc_index, entry_move].
        # Depth is bounded by the pebble count (every move removes one).
        stack: List[list] = [[top, 0, None]]
        unsolv = self._unsolv
        suffix = self._solv_suffix

        while stack:
            frame = stack[-1]
            cfg, idx, _entry = frame
            if idx == 0:
                self._tick()
                if cfg in unsolv:
                    stack.pop()
                    continue
                known = suffix.get(cfg)
                if known is not None:
                    return self._splice(stack, known)
                short = self._shortcut(cfg, need)
                if short is not None:
                    return self._splice(stack, short)
                size = sum(cfg)
                mask = self._mask(cfg)
                if self._dominated_by_unsolvable(cfg, size, mask):
                    stack.pop()
                    continue
                dom = self._dominating_solvable(cfg, size, mask)
                if dom is not None:
                    return self._splice(stack, dom)
            advanced = False
            while frame[1] < len(arcs):
                i = frame[1]
                frame[1] += 1
                f, t = arcs[i]
                if cfg[f] >= 2:
                    nxt = list(cfg)
                    nxt[f] -= 2
                    nxt[t] += 1
                    if nxt[root] >= need:
                        return self._splice(stack, [(f, t)])
                    stack.append([tuple(nxt), 0, (f, t)])
                    advanced = True
                    break
            if not advanced:
                unsolv.add(cfg)
                stack.pop()
        return None

    def _splice(self, stack: List[list], tail: List[Move]) -> List[Move]:
        """Build the full witness from stack entry moves plus `tail`, and
        memoize the winning suffix at every level of the current path."""
        moves = list(tail)
        for frame in reversed(stack):
            cfg_f, _, entry = frame
            self._solv_suffix[cfg_f] = list(moves)
            if entry is not None:
                moves.insert(0, entry)
        return moves

    # -- branch and bound over unsolvable configurations -------------------

    def best_unsolvable(self, caps: Sequence[int],
                        weights: Optional[Sequence[int]] = None,
                        prune_at: int = -1,
                        stop_above: Optional[int] = None,
                        ) -> Tuple[int, Optional[Tuple[int, ...]]]:
        """Maximize sum(weights[v]*p[v]) over unsolvable p with p <= caps.

        `caps` must be sound: every unsolvable configuration lies within
        them (the engine passes 2^dist - 1, since a vertex at distance d
        with 2^d pebbles solves alone).  `prune_at` discards branches whose
        optimum cannot exceed it; `stop_above` ends the search as soon as
        the incumbent exceeds it.  Returns (best value, config) with
        best value = prune_at and config None when nothing better exists.
        Raises BudgetExceeded with the incumbent readable on the instance.
        """
        n = self.n
        w = list(weights) if weights is not None else [1] * n
        w[self.root] = 0
        order = sorted((v for v in range(n) if v != self.root and caps[v] > 0),
                       key=lambda v: (-self.dist[v], v))
        # suffix_max[i] = max objective obtainable from order[i:]
        suffix_max = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            suffix_max[i] = suffix_max[i + 1] + w[order[i]] * caps[order[i]]
        self.best_val = prune_at
        self.best_cfg = None
        cfg = [0] * n

        class _Stop(Exception):
            pass

        def rec(i: int, val: int, comp_known_solvable: bool) -> None:
            if val + suffix_max[i] <= self.best_val:
                return
            if not comp_known_solvable:
                comp = list(cfg)
                for v in order[i:]:
                    comp[v] = caps[v]
                ok, _ = self.solve(comp)
                if not ok:
                    self.best_val = val + suffix_max[i]
                    self.best_cfg = tuple(comp)
                    if stop_above is not None and self.best_val > stop_above:
                        raise _Stop
                    return
            if i == len(order):
                return  # fully assigned and solvable
            ok0, _ = self.solve(cfg)
            if ok0:
                return  # every extension of a solvable partial is solvable
            v = order[i]
            for t in range(caps[v], -1, -1):
                val_t = val + w[v] * t
                if val_t + suffix_max[i + 1] <= self.best_val:
                    break  # smaller t only lowers the bound further
                cfg[v] = t
                # at t == cap the child's caps-completion is this node's,
                # which is solvable whenever we got as far as branching
                rec(i + 1, val_t, t == caps[v])
                cfg[v] = 0

        try:
            rec(0, 0, False)
        except _Stop:
            pass
        return self.best_val, self.best_cfg
