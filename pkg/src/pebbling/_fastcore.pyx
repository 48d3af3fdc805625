# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernel.

Mirrors pebbling._pycore.SolverCore exactly: same state order, same
verdicts, same witnesses.  The pure-Python module is the readable
reference; this one exists because the solvability search is the hot
inner loop of everything in the package.
"""

import time

from cython.operator cimport dereference as deref
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from libcpp.string cimport string
from libcpp.unordered_set cimport unordered_set
from libcpp.unordered_map cimport unordered_map

from .errors import BudgetExceeded

ctypedef unsigned short u16
ctypedef unsigned long long u64

cdef enum:
    DOM_CAP = 256
    TIME_CHECK_MASK = 0x1FFF


class _StopSearch(Exception):
    pass


cdef struct Frame:
    int arc_idx
    int entry_f
    int entry_t          # entry move; -1,-1 at the top frame


cdef class SolverCore:
    cdef public int n
    cdef public int root
    cdef public list dist            # python copy for callers
    cdef public long long states
    cdef public long long max_states
    cdef object deadline             # float | None
    cdef double c_deadline
    cdef bint has_deadline
    cdef int n_arcs
    cdef int* arc_f
    cdef int* arc_t
    cdef int* c_dist
    cdef int* short_next             # next hop toward root (min id)
    cdef unordered_set[string] unsolv
    cdef unordered_map[string, string] solv_suffix   # cfg -> move bytes
    # bounded dominance stores
    cdef u16* dom_u_cfg
    cdef long long* dom_u_size
    cdef u64* dom_u_mask
    cdef int dom_u_len
    cdef u16* dom_s_cfg
    cdef long long* dom_s_size
    cdef u64* dom_s_mask
    cdef list dom_s_moves
    cdef int dom_s_len
    # branch and bound incumbent
    cdef public long long best_val
    cdef public object best_cfg
    cdef int _need

    def __cinit__(self, neighbors, int root, long long max_states,
                  deadline=None):
        cdef int n = len(neighbors)
        cdef int i, f, v
        self.n = n
        self.root = root
        self.states = 0
        self.max_states = max_states
        self.deadline = deadline
        self.has_deadline = deadline is not None
        self.c_deadline = float(deadline) if deadline is not None else 0.0
        self._need = 0
        self.best_val = -1
        self.best_cfg = None

        # BFS distances
        dist = [-1] * n
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
        self.dist = dist
        self.c_dist = <int*> malloc(n * sizeof(int))
        for i in range(n):
            self.c_dist[i] = dist[i]

        arcs = [(f, t) for f in range(n) for t in neighbors[f]]
        arcs.sort(key=lambda a: ((dist[a[1]] > dist[a[0]])
                                 - (dist[a[1]] < dist[a[0]]),
                                 a[0], a[1]))
        self.n_arcs = len(arcs)
        self.arc_f = <int*> malloc(self.n_arcs * sizeof(int))
        self.arc_t = <int*> malloc(self.n_arcs * sizeof(int))
        for i in range(self.n_arcs):
            self.arc_f[i] = arcs[i][0]
            self.arc_t[i] = arcs[i][1]

        self.short_next = <int*> malloc(n * sizeof(int))
        for v in range(n):
            self.short_next[v] = -1
            if v != root:
                self.short_next[v] = min(
                    w for w in neighbors[v] if dist[w] == dist[v] - 1)

        self.dom_u_cfg = <u16*> malloc(DOM_CAP * n * sizeof(u16))
        self.dom_u_size = <long long*> malloc(DOM_CAP * sizeof(long long))
        self.dom_u_mask = <u64*> malloc(DOM_CAP * sizeof(u64))
        self.dom_u_len = 0
        self.dom_s_cfg = <u16*> malloc(DOM_CAP * n * sizeof(u16))
        self.dom_s_size = <long long*> malloc(DOM_CAP * sizeof(long long))
        self.dom_s_mask = <u64*> malloc(DOM_CAP * sizeof(u64))
        self.dom_s_moves = []
        self.dom_s_len = 0

    def __dealloc__(self):
        free(self.arc_f)
        free(self.arc_t)
        free(self.c_dist)
        free(self.short_next)
        free(self.dom_u_cfg)
        free(self.dom_u_size)
        free(self.dom_u_mask)
        free(self.dom_s_cfg)
        free(self.dom_s_size)
        free(self.dom_s_mask)

    # -- bookkeeping ------------------------------------------------------

    cdef int _tick(self) except -1:
        self.states += 1
        if self.states > self.max_states:
            raise BudgetExceeded(f"state budget {self.max_states} exhausted")
        if self.has_deadline and not (self.states & TIME_CHECK_MASK):
            if time.monotonic() > self.c_deadline:
                raise BudgetExceeded("time budget exhausted")
        return 0

    cdef inline u64 _mask_of(self, u16* cfg) nogil:
        cdef u64 m = 0
        cdef int i
        for i in range(self.n):
            if cfg[i]:
                m |= (<u64>1) << i
        return m

    cdef inline long long _size_of(self, u16* cfg) nogil:
        cdef long long s = 0
        cdef int i
        for i in range(self.n):
            s += cfg[i]
        return s

    cdef bint _dominated_by_unsolvable(self, u16* cfg, long long size,
                                       u64 mask) nogil:
        cdef int k, i
        cdef bint ok
        for k in range(self.dom_u_len):
            if self.dom_u_size[k] > size and (mask & ~self.dom_u_mask[k]) == 0:
                ok = True
                for i in range(self.n):
                    if cfg[i] > self.dom_u_cfg[k * self.n + i]:
                        ok = False
                        break
                if ok:
                    return True
        return False

    cdef int _dominating_solvable(self, u16* cfg, long long size, u64 mask) nogil:
        cdef int k, i
        cdef bint ok
        for k in range(self.dom_s_len):
            if self.dom_s_size[k] <= size and (self.dom_s_mask[k] & ~mask) == 0:
                ok = True
                for i in range(self.n):
                    if cfg[i] < self.dom_s_cfg[k * self.n + i]:
                        ok = False
                        break
                if ok:
                    return k
        return -1

    cdef void _store_unsolvable(self, u16* cfg):
        if self.dom_u_len < DOM_CAP:
            memcpy(self.dom_u_cfg + self.dom_u_len * self.n, cfg,
                   self.n * sizeof(u16))
            self.dom_u_size[self.dom_u_len] = self._size_of(cfg)
            self.dom_u_mask[self.dom_u_len] = self._mask_of(cfg)
            self.dom_u_len += 1

    cdef void _store_solvable(self, u16* cfg, moves):
        if self.dom_s_len < DOM_CAP:
            memcpy(self.dom_s_cfg + self.dom_s_len * self.n, cfg,
                   self.n * sizeof(u16))
            self.dom_s_size[self.dom_s_len] = self._size_of(cfg)
            self.dom_s_mask[self.dom_s_len] = self._mask_of(cfg)
            self.dom_s_moves.append(list(moves))
            self.dom_s_len += 1

    # -- solvability -------------------------------------------------------

    cdef list _shortcut(self, u16* cfg, int need):
        # a vertex at distance d holding need*2^d pebbles solves alone
        cdef int v, cur, d
        cdef long long k, thr
        for v in range(self.n):
            if v == self.root:
                continue
            d = self.c_dist[v]
            if d > 62:
                continue
            thr = (<long long>need) << d
            if cfg[v] >= thr:
                moves = []
                cur = v
                k = thr
                while cur != self.root:
                    nxt = self.short_next[cur]
                    moves.extend([(cur, nxt)] * (k // 2))
                    k //= 2
                    cur = nxt
                return moves
        return None

    def solve(self, counts, int need=1):
        """Exactly `_pycore.SolverCore.solve`: (solvable?, witness moves)."""
        cdef int i
        if self._need == 0:
            self._need = need
        elif need != self._need:
            raise ValueError("memo stores are specific to `need`; "
                             "use a fresh SolverCore per target count")
        cdef u16* cfg = <u16*> malloc(self.n * sizeof(u16))
        try:
            for i in range(self.n):
                if counts[i] > 0xFFFF:
                    raise ValueError("pebble count exceeds kernel limit 65535")
                cfg[i] = counts[i]
            if cfg[self.root] >= need:
                return True, []
            result = self._dfs(cfg, need)
            if result is not None:
                self._store_solvable(cfg, result)
                return True, result
            self._store_unsolvable(cfg)
            return False, None
        finally:
            free(cfg)

    cdef object _dfs(self, u16* top, int need):
        """Iterative DFS; returns list of moves or None. May raise."""
        cdef int depth = 0
        cdef long long cap_depth = self._size_of(top) + 2
        cdef u16* cfgs = <u16*> malloc(cap_depth * self.n * sizeof(u16))
        cdef Frame* frames = <Frame*> malloc(cap_depth * sizeof(Frame))
        cdef u16* cfg
        cdef u16* nxt
        cdef int i, f, t
        cdef long long size
        cdef u64 mask
        cdef string key
        cdef int dom_idx
        cdef bint advanced
        cdef unordered_map[string, string].iterator it
        memcpy(cfgs, top, self.n * sizeof(u16))
        frames[0].arc_idx = 0
        frames[0].entry_f = -1
        frames[0].entry_t = -1
        depth = 1
        try:
            while depth > 0:
                cfg = cfgs + (depth - 1) * self.n
                if frames[depth - 1].arc_idx == 0:
                    self._tick()
                    key = string(<char*> cfg, self.n * sizeof(u16))
                    if self.unsolv.count(key):
                        depth -= 1
                        continue
                    it = self.solv_suffix.find(key)
                    if it != self.solv_suffix.end():
                        return self._splice(cfgs, frames, depth,
                                            self._decode_moves(deref(it).second))
                    short = self._shortcut(cfg, need)
                    if short is not None:
                        return self._splice(cfgs, frames, depth, short)
                    size = self._size_of(cfg)
                    mask = self._mask_of(cfg)
                    if self._dominated_by_unsolvable(cfg, size, mask):
                        depth -= 1
                        continue
                    dom_idx = self._dominating_solvable(cfg, size, mask)
                    if dom_idx >= 0:
                        return self._splice(cfgs, frames, depth,
                                            list(self.dom_s_moves[dom_idx]))
                advanced = False
                while frames[depth - 1].arc_idx < self.n_arcs:
                    i = frames[depth - 1].arc_idx
                    frames[depth - 1].arc_idx += 1
                    f = self.arc_f[i]
                    t = self.arc_t[i]
                    if cfg[f] >= 2:
                        nxt = cfgs + depth * self.n
                        memcpy(nxt, cfg, self.n * sizeof(u16))
                        nxt[f] -= 2
                        nxt[t] += 1
                        if nxt[self.root] >= need:
                            return self._splice(cfgs, frames, depth, [(f, t)])
                        frames[depth].arc_idx = 0
                        frames[depth].entry_f = f
                        frames[depth].entry_t = t
                        depth += 1
                        advanced = True
                        break
                if not advanced:
                    key = string(<char*> cfg, self.n * sizeof(u16))
                    self.unsolv.insert(key)
                    depth -= 1
            return None
        finally:
            free(cfgs)
            free(frames)

    cdef list _decode_moves(self, string blob):
        cdef list out = []
        cdef size_t i
        for i in range(0, blob.size(), 2):
            out.append((<int>(<unsigned char>blob[i]),
                        <int>(<unsigned char>blob[i + 1])))
        return out

    cdef string _encode_moves(self, moves):
        cdef string blob
        for f, t in moves:
            blob.push_back(<char><unsigned char>f)
            blob.push_back(<char><unsigned char>t)
        return blob

    cdef list _splice(self, u16* cfgs, Frame* frames, int depth, list tail):
        """Witness from stack entry moves plus tail; memoize suffixes."""
        cdef int d
        cdef string key
        moves = list(tail)
        for d in range(depth - 1, -1, -1):
            key = string(<char*>(cfgs + d * self.n), self.n * sizeof(u16))
            self.solv_suffix[key] = self._encode_moves(moves)
            if frames[d].entry_f >= 0:
                moves.insert(0, (frames[d].entry_f, frames[d].entry_t))
        return moves

    # -- branch and bound over unsolvable configurations -------------------

    def best_unsolvable(self, caps, weights=None, long long prune_at=-1,
                        stop_above=None):
        """Exactly `_pycore.SolverCore.best_unsolvable`."""
        cdef int n = self.n
        cdef int i, v
        w_list = list(weights) if weights is not None else [1] * n
        w_list[self.root] = 0
        order_list = sorted(
            (v for v in range(n) if v != self.root and caps[v] > 0),
            key=lambda u: (-self.dist[u], u))
        cdef int m = len(order_list)
        cdef long long* w = <long long*> malloc(n * sizeof(long long))
        cdef long long* cap = <long long*> malloc(n * sizeof(long long))
        cdef int* order = <int*> malloc((m + 1) * sizeof(int))
        cdef long long* suffix_max = <long long*> malloc(
            (m + 1) * sizeof(long long))
        cdef long long* cfg = <long long*> malloc(n * sizeof(long long))
        for i in range(n):
            w[i] = w_list[i]
            cap[i] = caps[i]
            cfg[i] = 0
        for i in range(m):
            order[i] = order_list[i]
        suffix_max[m] = 0
        for i in range(m - 1, -1, -1):
            suffix_max[i] = suffix_max[i + 1] + w[order[i]] * cap[order[i]]
        self.best_val = prune_at
        self.best_cfg = None
        cdef long long stop = stop_above if stop_above is not None else -1
        cdef bint has_stop = stop_above is not None
        try:
            self._bnb(0, 0, False, m, order, cap, w, suffix_max, cfg,
                      has_stop, stop)
        except _StopSearch:
            pass
        finally:
            free(w)
            free(cap)
            free(order)
            free(suffix_max)
            free(cfg)
        return self.best_val, self.best_cfg

    cdef int _bnb(self, int i, long long val, bint comp_known_solvable,
                  int m, int* order, long long* cap, long long* w,
                  long long* suffix_max, long long* cfg,
                  bint has_stop, long long stop) except -1:
        cdef int v, j
        cdef long long t, val_t
        if val + suffix_max[i] <= self.best_val:
            return 0
        if not comp_known_solvable:
            comp = [0] * self.n
            for j in range(self.n):
                comp[j] = cfg[j]
            for j in range(i, m):
                comp[order[j]] = cap[order[j]]
            ok, _ = self.solve(comp)
            if not ok:
                self.best_val = val + suffix_max[i]
                self.best_cfg = tuple(comp)
                if has_stop and self.best_val > stop:
                    raise _StopSearch()
                return 0
        if i == m:
            return 0
        partial = [0] * self.n
        for j in range(self.n):
            partial[j] = cfg[j]
        ok0, _ = self.solve(partial)
        if ok0:
            return 0
        v = order[i]
        t = cap[v]
        while t >= 0:
            val_t = val + w[v] * t
            if val_t + suffix_max[i + 1] <= self.best_val:
                break
            cfg[v] = t
            self._bnb(i + 1, val_t, t == cap[v], m, order, cap, w,
                      suffix_max, cfg, has_stop, stop)
            cfg[v] = 0
            t -= 1
        return 0
