"""Exact minimum s-t cut via max-flow, with a global invocation counter.

Every call to :func:`min_cut` is one "cut computation" - the unit of cost the
rest of the package accounts for.  The returned side is canonical: the set of
vertices reachable from ``s`` in the residual network of a maximum flow,
which is the same set for every maximum flow, so results are deterministic
for a fixed graph.
"""

from __future__ import annotations

import threading
from collections import deque

from .errors import SameVertex, VertexMissing
from .graph import Cut, DynamicGraph


class CutCounter:
    """Thread-safe tally of min-cut invocations."""

    def __init__(self):
        self._lock = threading.Lock()
        self._count = 0

    def increment(self) -> None:
        with self._lock:
            self._count += 1

    @property
    def value(self) -> int:
        return self._count

    def reset(self) -> None:
        with self._lock:
            self._count = 0


counter = CutCounter()


def min_cut(graph: DynamicGraph, s: int, t: int) -> Cut:
    """Minimum s-t cut of an undirected weighted graph.

    The cost equals the s-t max-flow value; the stored side contains ``s``.
    Disconnected endpoints yield a zero-cost cut whose side is the connected
    component of ``s``; that still counts as one cut computation.
    """
    if s == t:
        raise SameVertex(f"s and t must differ, got {s}")
    if s not in graph.vertices or t not in graph.vertices:
        raise VertexMissing(f"missing endpoint in ({s}, {t})")
    counter.increment()

    verts = sorted(graph.vertices)
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    head: list[list[int]] = [[] for _ in range(n)]
    to: list[int] = []
    cap: list[int] = []
    for u, v, w in sorted(graph.edges()):
        iu, iv = index[u], index[v]
        head[iu].append(len(to))
        to.append(iv)
        cap.append(w)
        head[iv].append(len(to))
        to.append(iu)
        cap.append(w)

    si, ti = index[s], index[t]
    flow = _dinic(n, head, to, cap, si, ti)

    reach = _residual_reachable(n, head, to, cap, si)
    side = frozenset(verts[i] for i in reach)
    return Cut(side, flow)


def _residual_reachable(n, head, to, cap, s) -> set[int]:
    seen = {s}
    dq = deque([s])
    while dq:
        x = dq.popleft()
        for a in head[x]:
            y = to[a]
            if cap[a] > 0 and y not in seen:
                seen.add(y)
                dq.append(y)
    return seen


def _dinic(n, head, to, cap, s, t) -> int:
    total = 0
    while True:
        level = [-1] * n
        level[s] = 0
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for a in head[x]:
                y = to[a]
                if cap[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    dq.append(y)
        if level[t] < 0:
            return total
        ptr = [0] * n
        stack_v = [s]
        stack_a: list[int] = []
        while stack_v:
            x = stack_v[-1]
            if x == t:
                aug = min(cap[a] for a in stack_a)
                for a in stack_a:
                    cap[a] -= aug
                    cap[a ^ 1] += aug
                total += aug
                for i, a in enumerate(stack_a):
                    if cap[a] == 0:
                        del stack_v[i + 1 :]
                        del stack_a[i:]
                        break
                continue
            arcs = head[x]
            advanced = False
            while ptr[x] < len(arcs):
                a = arcs[ptr[x]]
                y = to[a]
                if cap[a] > 0 and level[y] == level[x] + 1:
                    stack_v.append(y)
                    stack_a.append(a)
                    advanced = True
                    break
                ptr[x] += 1
            if not advanced:
                level[x] = -1
                stack_v.pop()
                if stack_a:
                    stack_a.pop()
