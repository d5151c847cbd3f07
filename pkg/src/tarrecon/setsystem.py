"""Isomorphism of set systems over a common ground set {0..n-1}."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .canon import canonical_key
from .graph import bits


def _profiles(n: int, family: Sequence[int]) -> list[tuple[int, ...]]:
    """Per-vertex count of family members containing it, split by member size."""
    prof = [[0] * (n + 1) for _ in range(n)]
    for s in family:
        k = s.bit_count()
        for v in bits(s):
            prof[v][k] += 1
    return [tuple(p) for p in prof]


def find_relabeling(n: int, fam_g: Sequence[int], fam_h: Sequence[int]) -> list[int] | None:
    """A bijection ``p`` with {p(S) : S in fam_g} = fam_h, or None.

    Backtracking assigns vertices in order of rarest profile; after each
    assignment the traces of both families on the assigned vertices must
    agree as multisets.
    """
    if len(fam_g) != len(fam_h):
        return None
    if Counter(s.bit_count() for s in fam_g) != Counter(s.bit_count() for s in fam_h):
        return None
    pg, ph = _profiles(n, fam_g), _profiles(n, fam_h)
    if Counter(pg) != Counter(ph):
        return None
    freq = Counter(pg)
    order = sorted(range(n), key=lambda v: (freq[pg[v]], pg[v], v))
    target = set(fam_h)
    perm = [-1] * n
    used = [False] * n

    def traces_match(dom: int, img: int) -> bool:
        tg = Counter()
        for s in fam_g:
            t = 0
            for v in bits(s & dom):
                t |= 1 << perm[v]
            tg[t] += 1
        th = Counter(s & img for s in fam_h)
        return tg == th

    def extend(i: int, dom: int, img: int) -> bool:
        if i == n:
            return all(_image(s, perm) in target for s in fam_g)
        v = order[i]
        for w in range(n):
            if used[w] or ph[w] != pg[v]:
                continue
            perm[v] = w
            used[w] = True
            if traces_match(dom | (1 << v), img | (1 << w)) and extend(i + 1, dom | (1 << v), img | (1 << w)):
                return True
            used[w] = False
            perm[v] = -1
        return False

    return list(perm) if extend(0, 0, 0) else None


def _image(s: int, perm: Sequence[int]) -> int:
    t = 0
    for v in bits(s):
        t |= 1 << perm[v]
    return t


def setsystem_key(n: int, family: Sequence[int]) -> bytes:
    """Canonical key of (ground set, family) up to relabeling of the ground set.

    Built from the bipartite incidence graph with ground vertices colored 0
    and members colored 1.
    """
    fam = sorted(set(family))
    m = len(fam)
    adj = [0] * (n + m)
    for j, s in enumerate(fam):
        node = n + j
        adj[node] = s
        for v in bits(s):
            adj[v] |= 1 << node
    colors = [0] * n + [1] * m
    return f"{n}:{m}:".encode() + canonical_key(n + m, adj, colors)
