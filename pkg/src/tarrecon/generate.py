"""Isomorphism-class enumeration for orders up to 7.

Every graph of order n arises from one of order n - 1 by adding a vertex with
some neighborhood, so augmenting all class representatives and deduplicating
by canonical form yields each class exactly once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_graph
from .errors import BadArgument, OrderTooLarge
from .graph import Graph, parse_graph6, write_graph6

MAX_BUILTIN_ORDER = 7
FILTERS = ("all", "no-isolated", "connected")


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return (write_graph6(Graph(1, (0,))),)
    found: dict[str, tuple[int, str]] = {}
    for rec in _classes(n - 1):
        base = parse_graph6(rec)
        for nbrs in range(1 << (n - 1)):
            rows = list(base.adj)
            for v in range(n - 1):
                if nbrs >> v & 1:
                    rows[v] |= 1 << (n - 1)
            rows.append(nbrs)
            canon = canonical_graph(Graph(n, tuple(rows)))
            key = write_graph6(canon)
            if key not in found:
                found[key] = (canon.edge_count(), key)
    return tuple(key for _, key in sorted(found.values()))


def generate_nonisomorphic(n: int, filter: str = "all") -> Iterator[Graph]:
    """One canonical representative per class, ordered by (edges, graph6)."""
    if n > MAX_BUILTIN_ORDER:
        raise OrderTooLarge(f"built-in generation stops at order {MAX_BUILTIN_ORDER}; supply graph6 input")
    if n < 1:
        raise BadArgument("order must be at least 1")
    if filter not in FILTERS:
        raise BadArgument(f"unknown filter {filter!r}")
    for rec in _classes(n):
        g = parse_graph6(rec)
        if filter == "no-isolated" and g.has_isolated():
            continue
        if filter == "connected" and not g.is_connected():
            continue
        yield g
