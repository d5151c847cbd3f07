"""Slow reference implementations used as test oracles.

Everything here works on networkx graphs and Python sets and shares no code
with the package kernels.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def subsets(nodes):
    nodes = list(nodes)
    for k in range(len(nodes) + 1):
        for c in combinations(nodes, k):
            yield frozenset(c)


def mask(s) -> int:
    return sum(1 << v for v in s)


def closed_nbhd(h, s):
    out = set(s)
    for v in s:
        out |= set(h[v])
    return out


def standard_closure(h, blue):
    blue = set(blue)
    while True:
        moves = set()
        for u in blue:
            white = [w for w in h[u] if w not in blue]
            if len(white) == 1:
                moves.add(white[0])
        if not moves:
            return blue
        blue |= moves


def skew_closure(h, blue):
    blue = set(blue)
    while True:
        moves = set()
        for u in h.nodes:
            white = [w for w in h[u] if w not in blue]
            if len(white) == 1:
                moves.add(white[0])
        if not moves:
            return blue
        blue |= moves


def psd_closure(h, blue):
    blue = set(blue)
    while True:
        white = set(h.nodes) - blue
        moved = False
        for comp in nx.connected_components(h.subgraph(white)):
            for u in list(blue):
                inside = [w for w in h[u] if w in comp]
                if len(inside) == 1:
                    blue.add(inside[0])
                    moved = True
                    break
            if moved:
                break
        if not moved:
            return blue


def is_fort(h, f):
    if not f:
        return False
    return all(len(set(h[v]) & f) != 1 for v in h.nodes if v not in f)


def feasible(kind_name: str, h, s) -> bool:
    V = set(h.nodes)
    s = set(s)
    if kind_name == "dom":
        return closed_nbhd(h, s) == V
    if kind_name == "pd":
        return standard_closure(h, closed_nbhd(h, s)) == V
    if kind_name == "zf":
        return standard_closure(h, s) == V
    if kind_name == "psd":
        return psd_closure(h, s) == V
    if kind_name == "skew":
        return skew_closure(h, s) == V
    if kind_name == "vc":
        return all(u in s or v in s for u, v in h.edges)
    if kind_name == "cdom":
        return bool(s) and closed_nbhd(h, s) == V and nx.is_connected(h.subgraph(s))
    if kind_name == "ind":
        return not any(h.has_edge(u, v) for u, v in combinations(s, 2))
    if kind_name == "ir":
        for x in s:
            others = closed_nbhd(h, s - {x})
            if not (closed_nbhd(h, {x}) - others):
                return False
        return True
    if kind_name == "zir":
        forts = [f for f in subsets(V) if is_fort(h, f)]
        return all(any(f & s == {x} for f in forts) for x in s)
    raise ValueError(kind_name)


def feasible_masks(kind_name: str, g) -> set[int]:
    h = to_nx(g)
    return {mask(s) for s in subsets(range(g.n)) if feasible(kind_name, h, s)}


def minimal_by_all_subsets(family: set[int]) -> list[int]:
    """Inclusion-minimal members, testing every proper subset (not just one-smaller)."""
    out = []
    for s in family:
        if not any(t != s and t & s == t for t in family):
            out.append(s)
    return sorted(out)


def maximal_by_all_supersets(family: set[int]) -> list[int]:
    out = []
    for s in family:
        if not any(t != s and t & s == s for t in family):
            out.append(s)
    return sorted(out)


def tar_nx(family: set[int]) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(family)
    for s in family:
        for t in family:
            if s < t and bin(s ^ t).count("1") == 1:
                h.add_edge(s, t)
    return h


def slice_flags(family: set[int], n: int, is_x: bool) -> list[bool]:
    flags = []
    for k in range(n + 1):
        chosen = [s for s in family if (bin(s).count("1") <= k if is_x else bin(s).count("1") >= k)]
        h = tar_nx(set(chosen))
        flags.append(h.number_of_nodes() > 0 and nx.is_connected(h))
    return flags
