"""TAR and token-jumping reconfiguration graphs and their structure.

TAR vertices are the feasible sets of a base graph; two sets are adjacent
when they differ in exactly one vertex.  Edges are never stored for the whole
TAR graph: neighbors are found by flipping each of the n bits and probing the
feasibility table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .canon import canonical_key
from .errors import BadArgument, MethodPreconditionViolated, TarError, WrongDirection
from .feasibility import extremal_feasible_sets, feasibility_table, parameter_values, ParameterValues
from .graph import Graph, VertexSet, bits, encode_graph6, format_set, to_dot
from .params import ParameterKind
from .setsystem import find_relabeling


class SetGraph:
    """A graph whose vertices are vertex sets of a base graph.

    ``adj[i]`` is a bitmask over indices into ``sets``.  Used for slices,
    token-jumping graphs and explicit TAR graphs.
    """

    def __init__(self, sets: Sequence[int], adj: Sequence[int]):
        self.sets = list(sets)
        self.adj = list(adj)

    @property
    def order(self) -> int:
        return len(self.sets)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for i in range(self.order):
            if seen >> i & 1:
                continue
            comp = frontier = 1 << i
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def labels(self) -> list[str]:
        return [format_set(s) for s in self.sets]

    def to_dot(self, name: str = "TAR") -> str:
        return to_dot(self.order, self.adj, self.labels(), name)

    def to_graph6(self) -> str:
        return encode_graph6(self.order, self.adj)

    def edge_list(self) -> str:
        return "".join(f"{i} {j}\n" for i in range(self.order) for j in bits(self.adj[i]) if i < j)

    def canonical_key(self) -> bytes:
        return canonical_key(self.order, self.adj)


def induced_set_graph(sets: Iterable[int]) -> SetGraph:
    """Graph on ``sets`` with adjacency by symmetric difference one."""
    sets = sorted(sets, key=lambda s: (s.bit_count(), s))
    index = {s: i for i, s in enumerate(sets)}
    adj = [0] * len(sets)
    top = max((s.bit_length() for s in sets), default=0)
    for i, s in enumerate(sets):
        for b in range(top):
            j = index.get(s ^ (1 << b))
            if j is not None:
                adj[i] |= 1 << j
    return SetGraph(sets, adj)


@dataclass(frozen=True, eq=False)
class TarGraph:
    kind: ParameterKind
    base: Graph
    table: bytes = field(repr=False)
    sets: tuple[int, ...] = field(repr=False)
    values: ParameterValues
    extremal: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def order(self) -> int:
        return len(self.sets)

    def __contains__(self, s: int) -> bool:
        return 0 <= s < len(self.table) and bool(self.table[s])

    @cached_property
    def index(self) -> dict[int, int]:
        return {s: i for i, s in enumerate(self.sets)}

    def neighbors(self, s: VertexSet) -> list[VertexSet]:
        return [s ^ (1 << b) for b in range(self.n) if self.table[s ^ (1 << b)]]

    def degree(self, s: VertexSet) -> int:
        return len(self.neighbors(s))

    def edge_count(self) -> int:
        return sum(self.degree(s) for s in self.sets) // 2

    @cached_property
    def set_graph(self) -> SetGraph:
        idx = self.index
        adj = []
        for s in self.sets:
            row = 0
            for t in self.neighbors(s):
                row |= 1 << idx[t]
            adj.append(row)
        return SetGraph(self.sets, adj)

    def adjacency(self) -> list[int]:
        return self.set_graph.adj

    def canonical_key(self) -> bytes:
        return self.set_graph.canonical_key()


def build_tar(kind: ParameterKind, g: Graph) -> TarGraph:
    table = feasibility_table(kind, g)
    sets = tuple(sorted((s for s in range(1 << g.n) if table[s]), key=lambda s: (s.bit_count(), s)))
    return TarGraph(
        kind=kind,
        base=g,
        table=table,
        sets=sets,
        values=parameter_values(kind, g),
        extremal=tuple(extremal_feasible_sets(kind, g)),
    )


def k_slice(tar: TarGraph, k: int) -> SetGraph:
    """Induced subgraph on feasible sets of size at most k (X) or at least k (Y)."""
    if not 0 <= k <= tar.n:
        raise BadArgument(f"slice index {k} outside 0..{tar.n}")
    if tar.kind.is_x:
        chosen = [s for s in tar.sets if s.bit_count() <= k]
    else:
        chosen = [s for s in tar.sets if s.bit_count() >= k]
    return induced_set_graph(chosen)


@dataclass(frozen=True)
class ConnectivityProfile:
    """Slice connectedness and the derived thresholds.

    For X kinds ``threshold`` is x0 (least k0 with every slice k >= k0
    connected) and ``first`` is the least k with a connected slice.  For Y
    kinds ``threshold`` is y0 (greatest k0 with every slice k <= k0
    connected) and ``first`` is the greatest k with a connected slice.
    """

    direction: str
    connected: tuple[bool, ...]
    threshold: int
    first: int


def profile_from_flags(direction: str, connected: Sequence[bool]) -> ConnectivityProfile:
    n = len(connected) - 1
    if direction == "X":
        k0 = n + 1
        while k0 > 0 and connected[k0 - 1]:
            k0 -= 1
        first = next((k for k in range(n + 1) if connected[k]), n + 1)
    else:
        k0 = -1
        while k0 < n and connected[k0 + 1]:
            k0 += 1
        first = next((k for k in range(n, -1, -1) if connected[k]), -1)
    return ConnectivityProfile(direction, tuple(connected), k0, first)


def connectivity_profile(tar: TarGraph) -> ConnectivityProfile:
    flags = kernels.slice_connectivity(tar.table, tar.n, tar.kind.is_x)
    return profile_from_flags(tar.kind.direction, flags)


def build_tj(kind: ParameterKind, g: Graph, k: int) -> SetGraph:
    """Token-jumping graph on feasible sets of size exactly k."""
    table = feasibility_table(kind, g)
    sets = [s for s in range(1 << g.n) if table[s] and s.bit_count() == k]
    index = {s: i for i, s in enumerate(sets)}
    adj = [0] * len(sets)
    full = g.full
    for i, s in enumerate(sets):
        for a in bits(s):
            for b in bits(full & ~s):
                j = index.get(s ^ (1 << a) ^ (1 << b))
                if j is not None:
                    adj[i] |= 1 << j
    return SetGraph(sets, adj)


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    min_degree: int
    degrees: dict[int, int] = field(repr=False)

    def degree_of(self, s: VertexSet) -> int:
        return self.degrees[s]


def degree_stats(tar: TarGraph) -> DegreeStats:
    deg = kernels.degree_table(tar.table, tar.n)
    degrees = {s: deg[s] for s in tar.sets}
    values = degrees.values()
    return DegreeStats(max(values), min(values), degrees)


def largest_cube_by_search(tar: TarGraph) -> int:
    """Largest d such that some interval [S, S | W] with |W| = d is all feasible."""
    table = tar.table
    best = -1
    full = tar.base.full
    for s in tar.sets:
        free = full & ~s
        w = free
        while True:
            d = w.bit_count()
            if d > best:
                sub = w
                ok = True
                while True:
                    if not table[s | sub]:
                        ok = False
                        break
                    if not sub:
                        break
                    sub = (sub - 1) & w
                if ok:
                    best = d
            if not w:
                break
            w = (w - 1) & free
    return best


def hypercube_dimension(tar: TarGraph, verify: bool = False) -> int:
    """Largest dimension of an induced hypercube, n - X(G) for X kinds.

    With ``verify`` the value is confirmed by exhaustive interval search
    (intended for n <= 6).
    """
    if not tar.kind.is_x:
        raise WrongDirection("hypercube dimension is defined for X kinds")
    d = tar.n - tar.values.value
    if verify:
        found = largest_cube_by_search(tar)
        if found != d:
            raise TarError(f"interval search found dimension {found}, formula gives {d}")
    return d


def articulation_points(n: int, adj: Sequence[int]) -> list[int]:
    disc = [-1] * n
    low = [0] * n
    out = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(bits(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        children += 1
                    stack.append((u, v, iter(bits(adj[u]))))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    out.add(p)
        if children > 1:
            out.add(root)
    return sorted(out)


def cut_vertices(tar: TarGraph) -> list[VertexSet]:
    sg = tar.set_graph
    return [sg.sets[i] for i in articulation_points(sg.order, sg.adj)]


def nu_automorphism_check(tar: TarGraph, r: VertexSet) -> bool:
    """Whether S -> S xor r maps the feasible family onto itself."""
    if not tar.kind.is_x:
        raise WrongDirection("the xor map check is defined for X kinds")
    return all(tar.table[s ^ r] for s in tar.sets)


def setsystem_applicable(kind: ParameterKind, g: Graph, h: Graph) -> bool:
    return kind.robust and (kind.isolated_safe or not (g.has_isolated() or h.has_isolated()))


def setsystem_relabeling(kind: ParameterKind, g: Graph, h: Graph) -> list[int] | None:
    """Base relabeling carrying the extremal family of g onto that of h."""
    if not setsystem_applicable(kind, g, h):
        raise MethodPreconditionViolated(
            f"set-system comparison needs a robust kind and, for {kind}, graphs without isolated vertices"
        )
    if g.n != h.n:
        return None
    return find_relabeling(g.n, extremal_feasible_sets(kind, g), extremal_feasible_sets(kind, h))


def tar_isomorphic(kind: ParameterKind, g: Graph, h: Graph, method: str | None = None) -> bool:
    """TAR-graph isomorphism by set-system relabeling or by canonical forms."""
    if method is None:
        method = "setsystem" if setsystem_applicable(kind, g, h) else "direct"
    if method == "setsystem":
        return setsystem_relabeling(kind, g, h) is not None
    if method != "direct":
        raise BadArgument(f"unknown method {method!r}")
    a, b = build_tar(kind, g), build_tar(kind, h)
    if a.order != b.order:
        return False
    if Counter(a.set_graph.degrees()) != Counter(b.set_graph.degrees()):
        return False
    return a.canonical_key() == b.canonical_key()


def cartesian_set_graph(a: SetGraph, b: SetGraph, shift: int) -> SetGraph:
    """Cartesian product; the pair (S, T) is represented as S | (T << shift)."""
    sets = [s | (t << shift) for s in a.sets for t in b.sets]
    m = b.order
    adj = []
    for i in range(a.order):
        for j in range(m):
            row = 0
            for i2 in bits(a.adj[i]):
                row |= 1 << (i2 * m + j)
            row |= b.adj[j] << (i * m)
            adj.append(row)
    return SetGraph(sets, adj)
