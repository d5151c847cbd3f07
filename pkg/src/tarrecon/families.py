"""Named graph families with fixed vertex numbering.

Numbering conventions:

* ``path``/``cycle``: vertices 0..n-1 in path (cycle) order.
* ``star:q``: center 0, leaves 1..q.
* ``complete_bipartite:p,q``: part A = 0..p-1, part B = p..p+q-1.
* ``complete_multipartite:n1,n2,...``: consecutive blocks.
* ``fullhouse``: edges 03 04 34 12 13 24 14 23; vertex 0 has degree 2,
  the minimal skew forcing sets are {3}, {4}, {0,1,2}.
* ``fh:r``: the full house with r - 1 extra twins of vertex 0, numbered 5, 6, ...
* ``hmatch:r``: cliques A = 0..r+1 and B = r+2..2r+3, matching i ~ r+2+i for i < r.
* ``htwins:r``: the 8-vertex graph with twins 6 and 7 (both with neighborhood
  {3,4,5}); further twins 8, 9, ... have the same neighborhood.  Order r + 6.
* ``gn:n``: u_j -> j-1 for j = 1..n-1; v^i_j -> (n-1) + (i-1)n + (j-1).
* ``k2q:q,(H)``: H keeps its labels; for each edge ij of H (sorted) q new
  vertices adjacent to i and j are appended and ij is deleted.
* ``flower:r,s``: center 0; petal p uses 1+p(s-1) .. (p+1)(s-1) in cycle order.
* ``flower_of_triangles:r``: hub 0; triangle i is {1+3i, 2+3i, 3+3i}, hub ~ 1+3i.
* ``double_broom:r,s,t``: path 0..r-1, s leaves on 0 then t leaves on r-1.
* ``half:s``: x_i -> i-1 (clique), y_j -> s+j-1, x_i ~ y_j iff i + j <= s + 1.
* ``corona:(H)``: pendant of vertex v is n(H) + v.
* ``union:(G),(H)`` and ``cartesian:(G),(H)`` combine two specs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .errors import BadArgument, OrderTooLarge
from .graph import MAX_ORDER, Graph, combine

Arg = Union[int, "FamilySpec"]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    args: tuple[Arg, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.name
        parts = [f"({a})" if isinstance(a, FamilySpec) else str(a) for a in self.args]
        return f"{self.name}:{','.join(parts)}"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadArgument(msg)


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderTooLarge(f"family order {n} exceeds {MAX_ORDER}")


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    _check_order(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    _check_order(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    _check_order(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    _check_order(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(q: int) -> Graph:
    _need(q >= 1, "star needs q >= 1")
    _check_order(q + 1)
    return Graph.from_edges(q + 1, ((0, i) for i in range(1, q + 1)))


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "every part needs at least one vertex")
    n = sum(parts)
    _check_order(n)
    block = []
    for i, p in enumerate(parts):
        block += [i] * p
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if block[u] != block[v]))


def complete_bipartite(p: int, q: int) -> Graph:
    return complete_multipartite(p, q)


FULL_HOUSE_EDGES = ((0, 3), (0, 4), (3, 4), (1, 2), (1, 3), (2, 4), (1, 4), (2, 3))


def full_house() -> Graph:
    return Graph.from_edges(5, FULL_HOUSE_EDGES)


def fh_twins(r: int) -> Graph:
    _need(r >= 1, "FH(r) needs r >= 1")
    n = r + 4
    _check_order(n)
    edges = list(FULL_HOUSE_EDGES)
    for t in range(5, n):
        edges += [(t, 3), (t, 4)]
    return Graph.from_edges(n, edges)


def h_match(r: int) -> Graph:
    _need(r >= 1, "H(r) needs r >= 1")
    m = r + 2
    _check_order(2 * m)
    edges = list(combinations(range(m), 2))
    edges += [(m + a, m + b) for a, b in combinations(range(m), 2)]
    edges += [(i, m + i) for i in range(r)]
    return Graph.from_edges(2 * m, edges)


H2_EDGES = (
    (0, 1), (1, 2), (2, 5), (4, 5), (3, 4), (0, 3), (0, 5), (1, 5), (1, 4), (4, 7),
    (3, 7), (3, 6), (4, 6), (0, 4), (2, 4), (2, 3), (1, 3), (5, 7), (5, 6),
)


def h_twins(r: int) -> Graph:
    _need(r >= 2, "H_r needs r >= 2")
    n = r + 6
    _check_order(n)
    edges = list(H2_EDGES)
    for t in range(8, n):
        edges += [(t, 3), (t, 4), (t, 5)]
    return Graph.from_edges(n, edges)


def g_n(n: int) -> Graph:
    _need(n >= 3, "G_n needs n >= 3")
    order = (n - 1) + n * n
    _check_order(order)

    def v(i: int, j: int) -> int:
        return (n - 1) + (i - 1) * n + (j - 1)

    edges = []
    for i in range(1, n + 1):
        edges += [(v(i, a), v(i, b)) for a, b in combinations(range(1, n + 1), 2)]
        for j in range(1, n):
            edges.append((j - 1, v(i, j)))
    return Graph.from_edges(order, edges)


def k2q(q: int, inner: Graph) -> Graph:
    _need(q >= 1, "K^{2,q}(H) needs q >= 1")
    _need(inner.n >= 2 and inner.is_connected(), "K^{2,q}(H) needs a connected H of order >= 2")
    base = inner.edges()
    order = inner.n + q * len(base)
    _check_order(order)
    edges = []
    nxt = inner.n
    for i, j in base:
        for _ in range(q):
            edges += [(nxt, i), (nxt, j)]
            nxt += 1
    return Graph.from_edges(order, edges)


def flower(r: int, s: int) -> Graph:
    _need(r >= 2 and s >= 3, "flower needs r >= 2 and s >= 3")
    n = (s - 1) * r + 1
    _check_order(n)
    edges = []
    for p in range(r):
        petal = [0] + [1 + p * (s - 1) + k for k in range(s - 1)]
        edges += [(petal[k], petal[(k + 1) % s]) for k in range(s)]
    return Graph.from_edges(n, edges)


def flower_of_triangles(r: int) -> Graph:
    _need(r >= 1, "F(r) needs r >= 1")
    n = 3 * r + 1
    _check_order(n)
    edges = []
    for i in range(r):
        a, b, c = 1 + 3 * i, 2 + 3 * i, 3 + 3 * i
        edges += [(0, a), (a, b), (b, c), (a, c)]
    return Graph.from_edges(n, edges)


def double_broom(r: int, s: int, t: int) -> Graph:
    _need(r >= 2 and s >= 2 and t >= 2, "double broom needs r, s, t >= 2")
    n = r + s + t
    _check_order(n)
    edges = [(i, i + 1) for i in range(r - 1)]
    edges += [(0, r + k) for k in range(s)]
    edges += [(r - 1, r + s + k) for k in range(t)]
    return Graph.from_edges(n, edges)


def half_graph(s: int) -> Graph:
    _need(s >= 1, "half graph needs s >= 1")
    _check_order(2 * s)
    edges = list(combinations(range(s), 2))
    for i in range(1, s + 1):
        for j in range(1, s + 2 - i):
            edges.append((i - 1, s + j - 1))
    return Graph.from_edges(2 * s, edges)


def corona(inner: Graph) -> Graph:
    n = inner.n
    _check_order(2 * n)
    return Graph.from_edges(2 * n, inner.edges() + [(v, n + v) for v in range(n)])


def _ints(spec: FamilySpec, count: int | None) -> list[int]:
    if count is not None and len(spec.args) != count:
        raise BadArgument(f"{spec.name} takes {count} integer argument(s), got {len(spec.args)}")
    if not all(isinstance(a, int) for a in spec.args):
        raise BadArgument(f"{spec.name} takes integer arguments only")
    return list(spec.args)  # type: ignore[arg-type]


def _specs(spec: FamilySpec, count: int) -> list[FamilySpec]:
    if len(spec.args) != count or not all(isinstance(a, FamilySpec) for a in spec.args):
        raise BadArgument(f"{spec.name} takes {count} nested graph spec(s)")
    return list(spec.args)  # type: ignore[arg-type]


_SIMPLE = {
    "complete": (complete, 1),
    "empty": (empty, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "flower": (flower, 2),
    "fullhouse": (full_house, 0),
    "fh": (fh_twins, 1),
    "hmatch": (h_match, 1),
    "htwins": (h_twins, 1),
    "gn": (g_n, 1),
    "double_broom": (double_broom, 3),
    "half": (half_graph, 1),
    "flower_of_triangles": (flower_of_triangles, 1),
}

FAMILY_NAMES = tuple(sorted(list(_SIMPLE) + ["k2q", "corona", "union", "cartesian"]))


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    name = spec.name
    if name in _SIMPLE:
        fn, count = _SIMPLE[name]
        return fn(*_ints(spec, count))
    if name == "k2q":
        if len(spec.args) != 2 or not isinstance(spec.args[0], int) or not isinstance(spec.args[1], FamilySpec):
            raise BadArgument("k2q takes an integer q and a nested graph spec")
        return k2q(spec.args[0], build_family(spec.args[1]))
    if name == "corona":
        (inner,) = _specs(spec, 1)
        return corona(build_family(inner))
    if name in ("union", "cartesian"):
        g, h = _specs(spec, 2)
        return combine(name, build_family(g), build_family(h))
    raise BadArgument(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def error(self, msg: str) -> BadArgument:
        return BadArgument(f"bad family spec {self.text!r} at position {self.pos}: {msg}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def spec(self) -> FamilySpec:
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        name = self.text[start:self.pos].lower()
        if not name:
            raise self.error("expected a family name")
        args: list[Arg] = []
        if self.peek() == ":":
            self.pos += 1
            args.append(self.arg())
            while self.peek() == ",":
                self.pos += 1
                args.append(self.arg())
        return FamilySpec(name, tuple(args))

    def arg(self) -> Arg:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.spec()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return inner
        start = self.pos
        if ch == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise self.error("expected an integer or a parenthesized spec")
        return int(self.text[start:self.pos])


def parse_family_spec(text: str) -> FamilySpec:
    p = _Parser(text)
    spec = p.spec()
    if p.pos != len(p.text):
        raise p.error("unexpected trailing text")
    return spec
