"""Exact Hamilton path and cycle search with a node budget."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadArgument
from .graph import bits

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class HamiltonResult:
    verdict: str  # "yes", "no" or "unknown"
    witness: tuple[int, ...] | None
    nodes: int

    def __bool__(self) -> bool:
        return self.verdict == "yes"


class _Budget(Exception):
    pass


def _adjacency(graph) -> list[int]:
    if hasattr(graph, "adjacency"):
        return list(graph.adjacency())
    if hasattr(graph, "adj"):
        return list(graph.adj)
    return list(graph)


def _two_coloring(n: int, adj: Sequence[int]) -> list[int] | None:
    color = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def is_hamilton_witness(adj: Sequence[int], order: Sequence[int], mode: str) -> bool:
    n = len(adj)
    if sorted(order) != list(range(n)):
        return False
    for a, b in zip(order, order[1:]):
        if not adj[a] >> b & 1:
            return False
    if mode == "cycle":
        return n >= 3 and bool(adj[order[-1]] >> order[0] & 1)
    return True


def hamilton_search(graph, mode: str = "path", budget: int = DEFAULT_BUDGET) -> HamiltonResult:
    """Search for a Hamilton path or cycle.

    ``graph`` is anything with ``adjacency()`` or ``adj`` (neighbor masks),
    or a plain sequence of masks.  Pruning: bipartite class sizes, global
    connectivity of the unvisited part, vertices left with no usable
    neighbor, and forced moves into vertices with one remaining option.
    """
    if mode not in ("path", "cycle"):
        raise BadArgument(f"mode must be 'path' or 'cycle', not {mode!r}")
    adj = _adjacency(graph)
    n = len(adj)
    if n == 0:
        return HamiltonResult("no", None, 0)
    if n == 1:
        return HamiltonResult("yes", (0,), 1) if mode == "path" else HamiltonResult("no", None, 1)
    if n == 2:
        linked = bool(adj[0] >> 1 & 1)
        if mode == "path" and linked:
            return HamiltonResult("yes", (0, 1), 1)
        return HamiltonResult("no", None, 1)
    full = (1 << n) - 1
    if _reach(adj, 0, full) != full:
        return HamiltonResult("no", None, 0)
    deg = [a.bit_count() for a in adj]
    leaves = [v for v in range(n) if deg[v] == 1]
    if mode == "cycle" and leaves:
        return HamiltonResult("no", None, 0)
    if len(leaves) > 2:
        return HamiltonResult("no", None, 0)

    color = _two_coloring(n, adj)
    starts = list(range(n))
    if color is not None:
        a = sum(1 for c in color if c == 0)
        b = n - a
        if mode == "cycle" and a != b:
            return HamiltonResult("no", None, 0)
        if abs(a - b) > 1:
            return HamiltonResult("no", None, 0)
        if a != b:
            big = 0 if a > b else 1
            starts = [v for v in starts if color[v] == big]
    if mode == "cycle":
        starts = [min(range(n), key=lambda v: (deg[v], v))]
    elif leaves:
        starts = [leaves[0]]
    else:
        starts.sort(key=lambda v: (deg[v], v))

    nodes = 0
    path: list[int] = []

    def dfs(v: int, unvisited: int, start: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if not unvisited:
            return mode == "path" or bool(adj[v] >> start & 1)
        # every unvisited vertex must stay reachable from v
        cand = adj[v] & unvisited
        if not cand:
            return False
        first = (cand & -cand).bit_length() - 1
        if _reach(adj, first, unvisited) != unvisited:
            return False
        # vertices with few remaining options
        forced = -1
        dead_ends = 0
        for u in bits(unvisited):
            opts = (adj[u] & unvisited).bit_count() + (adj[u] >> v & 1)
            if mode == "cycle":
                opts += adj[u] >> start & 1
            if opts == 0:
                return False
            if opts == 1:
                if adj[u] >> v & 1:
                    if forced != -1 and forced != u:
                        return False
                    forced = u
                else:
                    dead_ends += 1
        limit = 0 if mode == "cycle" else 1
        if dead_ends > limit:
            return False
        if forced != -1:
            order = [forced]
        else:
            order = sorted(bits(cand), key=lambda u: ((adj[u] & unvisited).bit_count(), u))
        for u in order:
            path.append(u)
            if dfs(u, unvisited & ~(1 << u), start):
                return True
            path.pop()
        return False

    try:
        for s in starts:
            path[:] = [s]
            if dfs(s, full & ~(1 << s), s):
                return HamiltonResult("yes", tuple(path), nodes)
    except _Budget:
        return HamiltonResult("unknown", None, nodes)
    return HamiltonResult("no", None, nodes)
