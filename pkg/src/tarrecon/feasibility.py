"""Feasibility predicates, closures, extremal sets and parameter values."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import kernels
from .errors import BadArgument, KindUnsupportedOnGraph, OrderTooLarge, VertexNotInSet
from .graph import Graph, VertexSet, bits
from .params import ParameterKind

TABLE_ORDER_LIMIT = 24


@dataclass(frozen=True)
class ParameterValues:
    kind: ParameterKind
    value: int
    extremal: int


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return kernels.closed_nbhd(g.adj, s)


def forcing_closure(rule: str, g: Graph, s: VertexSet) -> VertexSet:
    if rule == "standard":
        return kernels.close_standard(g.adj, g.n, s)
    if rule == "psd":
        return kernels.close_psd(g.adj, g.n, s)
    if rule == "skew":
        return kernels.close_skew(g.adj, g.n, s)
    raise BadArgument(f"unknown color change rule {rule!r}")


def _check(kind: ParameterKind, g: Graph) -> None:
    if kind is ParameterKind.CONNECTED_DOMINATION and not g.is_connected():
        raise KindUnsupportedOnGraph("connected domination is defined on connected graphs only")


def is_feasible(kind: ParameterKind, g: Graph, s: VertexSet) -> bool:
    """Evaluate the predicate on one set directly (no table, no closure shortcut)."""
    _check(kind, g)
    if s & ~g.full:
        raise BadArgument("set has vertices outside the graph")
    return kernels.feasible_one(kind.code, g.adj, g.n, s)


def is_fort(g: Graph, f: VertexSet) -> bool:
    return kernels.is_fort(g.adj, g.n, f)


def has_private_fort(g: Graph, t: VertexSet, x: int) -> bool:
    if not t >> x & 1:
        raise VertexNotInSet(f"vertex {x} is not in the set")
    return kernels.has_private_fort(g.adj, g.n, t, x)


@lru_cache(maxsize=256)
def feasibility_table(kind: ParameterKind, g: Graph) -> bytes:
    """Byte ``s`` is 1 iff vertex set ``s`` is feasible; length 2^n."""
    _check(kind, g)
    if g.n > TABLE_ORDER_LIMIT:
        raise OrderTooLarge(f"exhaustive tables stop at order {TABLE_ORDER_LIMIT}")
    return bytes(kernels.feasible_table(kind.code, g.adj, g.n))


@lru_cache(maxsize=256)
def _extremal(kind: ParameterKind, g: Graph) -> tuple[int, ...]:
    sets = kernels.extremal_sets(feasibility_table(kind, g), g.n, kind.is_x)
    return tuple(sorted(sets, key=lambda s: (s.bit_count(), s)))


def extremal_feasible_sets(kind: ParameterKind, g: Graph) -> list[VertexSet]:
    """Minimal (X kinds) or maximal (Y kinds) feasible sets, by (size, mask)."""
    return list(_extremal(kind, g))


def parameter_values(kind: ParameterKind, g: Graph) -> ParameterValues:
    sizes = [s.bit_count() for s in _extremal(kind, g)]
    if kind.is_x:
        return ParameterValues(kind, min(sizes), max(sizes))
    return ParameterValues(kind, max(sizes), min(sizes))


def irrelevant_vertices(kind: ParameterKind, g: Graph) -> VertexSet:
    ext = _extremal(kind, g)
    if kind.is_x:
        used = 0
        for s in ext:
            used |= s
        return g.full & ~used
    common = g.full
    for s in ext:
        common &= s
    return common


def leaf_strip(g: Graph) -> Graph:
    """Delete a leaf together with its neighbor until no leaf is left.

    Returns the induced residual graph, which may have zero vertices.  The
    lowest-numbered leaf is removed first; the residual does not depend on
    the choice for the emptiness question.
    """
    alive = g.full
    while True:
        leaf = next((v for v in bits(alive) if (g.adj[v] & alive).bit_count() == 1), None)
        if leaf is None:
            return g.induced(alive)
        alive &= ~((1 << leaf) | (g.adj[leaf] & alive))


EVEN_HOLE_ORDER_LIMIT = 12


def is_even_hole_free(g: Graph) -> bool:
    """True iff ``g`` has no induced cycle of even length at least 4."""
    if g.n > EVEN_HOLE_ORDER_LIMIT:
        raise OrderTooLarge(f"even-hole search stops at order {EVEN_HOLE_ORDER_LIMIT}")
    for k in range(4, g.n + 1, 2):
        for combo in combinations(range(g.n), k):
            m = 0
            for v in combo:
                m |= 1 << v
            if all((g.adj[v] & m).bit_count() == 2 for v in combo) and g.component_of(combo[0], m) == m:
                return False
    return True
