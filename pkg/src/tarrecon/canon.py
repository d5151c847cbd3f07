"""Canonical labeling by individualization and refinement.

Works on any simple graph given as a list of neighbor masks (Python ints), so
it also handles TAR graphs with far more than 32 vertices.  The search keeps
the lexicographically largest leaf certificate; automorphisms found on the way
are used for orbit pruning and for jumping back to the divergence level.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .graph import Graph, bits, encode_graph6

CanonicalForm = bytes


def _refine(adj: Sequence[int], cells: list[list[int]], active_idx: Sequence[int], n: int) -> list[list[int]]:
    cells = [list(c) for c in cells]
    active = [False] * len(cells)
    for i in active_idx:
        active[i] = True
    while len(cells) < n:
        try:
            i = active.index(True)
        except ValueError:
            break
        active[i] = False
        w = 0
        for v in cells[i]:
            w |= 1 << v
        j = 0
        while j < len(cells):
            cell = cells[j]
            if len(cell) == 1:
                j += 1
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            lo = min(counts)
            if lo == max(counts):
                j += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            frags = [groups[c] for c in sorted(groups)]
            cells[j:j + 1] = frags
            active[j:j + 1] = [True] * len(frags)
            j += len(frags)
    return cells


def _certificate(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for p, v in enumerate(lab):
        pos[v] = p
    cert = []
    for v in lab:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        cert.append(row)
    return tuple(cert)


class _Search:
    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = adj
        self.path: list[int] = []
        self.first_path: list[int] | None = None
        self.first_lab: list[int] = []
        self.first_cert: tuple[int, ...] = ()
        self.best_path: list[int] = []
        self.best_lab: list[int] = []
        self.best_cert: tuple[int, ...] = ()
        self.generators: list[list[int]] = []

    def _common(self, other: list[int]) -> int:
        k = 0
        for a, b in zip(self.path, other):
            if a != b:
                break
            k += 1
        return k

    def _leaf(self, cells: list[list[int]], depth: int) -> int:
        lab = [c[0] for c in cells]
        cert = _certificate(self.adj, lab)
        if self.first_path is None:
            self.first_path = list(self.path)
            self.first_lab = self.best_lab = lab
            self.first_cert = self.best_cert = cert
            self.best_path = list(self.path)
            return depth - 1
        if cert == self.first_cert:
            self._add_automorphism(self.first_lab, lab)
            return self._common(self.first_path)
        if cert == self.best_cert:
            self._add_automorphism(self.best_lab, lab)
            return self._common(self.best_path)
        if cert > self.best_cert:
            self.best_cert = cert
            self.best_lab = lab
            self.best_path = list(self.path)
        return depth - 1

    def _add_automorphism(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        self.generators.append(perm)

    def _orbit_root(self, fixed: list[int]):
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[v] == v for v in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return find

    def node(self, cells: list[list[int]], depth: int) -> int:
        if len(cells) == self.n:
            return self._leaf(cells, depth)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[t])
        explored: list[int] = []
        seen_gens = -1
        find = None
        for v in target:
            if explored:
                if len(self.generators) != seen_gens:
                    find = self._orbit_root(self.path)
                    seen_gens = len(self.generators)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            child = cells[:t] + [[v], [u for u in cells[t] if u != v]] + cells[t + 1:]
            child = _refine(self.adj, child, [t], self.n)
            self.path.append(v)
            r = self.node(child, depth + 1)
            self.path.pop()
            if r < depth:
                return r
        return depth - 1


def canonical_labeling(n: int, adj: Sequence[int], colors: Sequence[Hashable] | None = None) -> list[int]:
    """Return ``lab`` with ``lab[p]`` the vertex placed at canonical position ``p``.

    ``colors`` (optional) must be sortable; vertices are only mapped to
    vertices of equal color and cells are ordered by color.
    """
    if n == 0:
        return []
    if colors is None:
        cells = [list(range(n))]
    else:
        by: dict = {}
        for v in range(n):
            by.setdefault(colors[v], []).append(v)
        cells = [by[c] for c in sorted(by)]
    cells = _refine(adj, cells, range(len(cells)), n)
    s = _Search(n, adj)
    s.node(cells, 0)
    return s.best_lab


def relabeled(n: int, adj: Sequence[int], lab: Sequence[int]) -> list[int]:
    return list(_certificate(adj, lab))


def canonical_adjacency(n: int, adj: Sequence[int], colors: Sequence[Hashable] | None = None) -> tuple[int, ...]:
    lab = canonical_labeling(n, adj, colors)
    return _certificate(adj, lab)


def canonical_key(n: int, adj: Sequence[int], colors: Sequence[Hashable] | None = None) -> bytes:
    """Canonical byte string of an arbitrary-order graph (graph6 of the relabeled graph)."""
    lab = canonical_labeling(n, adj, colors)
    body = encode_graph6(n, _certificate(adj, lab)).encode("ascii")
    if colors is None:
        return body
    return repr([colors[v] for v in lab]).encode("ascii") + b"|" + body


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_key(g.n, g.adj)


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g.n, g.adj)
    return Graph(g.n, _certificate(g.adj, lab))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def graphs_isomorphic(n1: int, adj1: Sequence[int], n2: int, adj2: Sequence[int]) -> bool:
    """Isomorphism test for adjacency lists of any order."""
    if n1 != n2:
        return False
    if sorted(r.bit_count() for r in adj1) != sorted(r.bit_count() for r in adj2):
        return False
    return canonical_key(n1, adj1) == canonical_key(n2, adj2)
