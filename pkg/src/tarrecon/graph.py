"""Base graphs on at most 32 vertices, stored as per-vertex neighbor masks.

A vertex set is a plain ``int`` bitmask: bit ``i`` set means vertex ``i`` is
in the set.  Symmetric difference is ``^`` and cardinality is
``int.bit_count``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadArgument, Graph6Error, InvalidChar, OrderTooLarge, Truncated

MAX_ORDER = 32

VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def format_set(mask: VertexSet) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def parse_set(text: str) -> VertexSet:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise BadArgument(f"not a vertex set: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return 0
    return to_mask(int(tok) for tok in inner.split(","))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise OrderTooLarge(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise BadArgument("adjacency length does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise BadArgument(f"row {i} has bits beyond the vertex range")
            if row >> i & 1:
                raise BadArgument(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise BadArgument(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise OrderTooLarge(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise BadArgument(f"bad edge ({u}, {v}) for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_isolated(self) -> bool:
        return any(row == 0 for row in self.adj)

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def component_of(self, v: int, within: VertexSet | None = None) -> VertexSet:
        allowed = self.full if within is None else within
        comp = frontier = 1 << v
        while frontier:
            reach = 0
            for u in bits(frontier):
                reach |= self.adj[u]
            frontier = reach & allowed & ~comp
            comp |= frontier
        return comp

    def components(self) -> list[VertexSet]:
        out = []
        rest = self.full
        while rest:
            c = self.component_of((rest & -rest).bit_length() - 1)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and self.component_of(0) == self.full

    def induced(self, mask: VertexSet) -> "Graph":
        """Induced subgraph on ``mask``, vertices renumbered in increasing order."""
        keep = list(bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(to_mask(pos[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = to_mask(perm[u] for u in bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={write_graph6(self)!r})"


# graph6

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(n: int, adj: Sequence[int]) -> str:
    """graph6 record for an adjacency list of any order (no header)."""
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def write_graph6(g: Graph) -> str:
    return encode_graph6(g.n, g.adj)


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Truncated("empty graph6 record")
    data = []
    for ch in text:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise InvalidChar(f"byte {c} outside 63..126 in {text!r}")
        data.append(c - 63)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Truncated("order field cut short")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        if len(data) < 4:
            raise Truncated("order field cut short")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n > MAX_ORDER:
        raise OrderTooLarge(f"graph6 order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Truncated(f"expected {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing bytes after graph6 record")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


# edge lists and DOT

def write_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BadArgument(f"edge line needs two vertices: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    return Graph.from_edges(top + 1 if n is None else n, edges)


def to_dot(n: int, adj: Sequence[int], labels: Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(n):
        label = str(v) if labels is None else labels[v]
        lines.append(f'  {v} [label="{label}"];')
    for v in range(n):
        for u in bits(adj[v]):
            if v < u:
                lines.append(f"  {v} -- {u};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# combinations

def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise OrderTooLarge(f"union order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (i, j) becomes i * h.n + j."""
    if g.n * h.n > MAX_ORDER:
        raise OrderTooLarge(f"product order {g.n * h.n} exceeds {MAX_ORDER}")
    m = h.n
    rows = []
    for i in range(g.n):
        for j in range(m):
            row = 0
            for i2 in bits(g.adj[i]):
                row |= 1 << (i2 * m + j)
            row |= h.adj[j] << (i * m)
            rows.append(row)
    return Graph(g.n * m, tuple(rows))


def combine(op: str, g: Graph, h: Graph) -> Graph:
    if op == "union":
        return disjoint_union(g, h)
    if op == "cartesian":
        return cartesian(g, h)
    raise BadArgument(f"unknown combination {op!r}")
