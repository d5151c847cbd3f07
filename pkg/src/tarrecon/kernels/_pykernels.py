"""Pure-Python reference kernels.

Same signatures and results as the compiled module ``_ckernels``.  ``adj`` is
a sequence of neighbor masks, ``code`` the kernel code of a parameter kind:
0 dom, 1 pd, 2 zf, 3 psd, 4 skew, 5 vc, 6 cdom, 7 ind, 8 ir, 9 zir.
"""

from __future__ import annotations

from typing import Sequence

X_CODES = frozenset(range(7))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closed_nbhd(adj: Sequence[int], s: int) -> int:
    out = s
    for v in _bits(s):
        out |= adj[v]
    return out


def close_standard(adj: Sequence[int], n: int, blue: int) -> int:
    changed = True
    while changed:
        changed = False
        for u in _bits(blue):
            w = adj[u] & ~blue
            if w and not w & (w - 1):
                blue |= w
                changed = True
    return blue


def close_skew(adj: Sequence[int], n: int, blue: int) -> int:
    changed = True
    while changed:
        changed = False
        for u in range(n):
            w = adj[u] & ~blue
            if w and not w & (w - 1):
                blue |= w
                changed = True
    return blue


def close_psd(adj: Sequence[int], n: int, blue: int) -> int:
    full = (1 << n) - 1
    while True:
        rest = full & ~blue
        if not rest:
            return blue
        forced = 0
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= adj[v]
                frontier = reach & rest & ~comp
                comp |= frontier
            rest &= ~comp
            for u in _bits(blue):
                w = adj[u] & comp
                if w and not w & (w - 1):
                    forced |= w
        if not forced:
            return blue
        blue |= forced


def connected_within(adj: Sequence[int], s: int) -> bool:
    if not s:
        return False
    comp = frontier = s & -s
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adj[v]
        frontier = reach & s & ~comp
        comp |= frontier
    return comp == s


def is_fort(adj: Sequence[int], n: int, f: int) -> bool:
    if not f:
        return False
    full = (1 << n) - 1
    for v in _bits(full & ~f):
        w = adj[v] & f
        if w and not w & (w - 1):
            return False
    return True


def has_private_fort(adj: Sequence[int], n: int, t: int, x: int) -> bool:
    full = (1 << n) - 1
    free = full & ~t
    xb = 1 << x
    sub = free
    while True:
        if is_fort(adj, n, sub | xb):
            return True
        if not sub:
            return False
        sub = (sub - 1) & free


def feasible_one(code: int, adj: Sequence[int], n: int, s: int) -> bool:
    full = (1 << n) - 1
    if code == 0:
        return closed_nbhd(adj, s) == full
    if code == 1:
        return close_standard(adj, n, closed_nbhd(adj, s)) == full
    if code == 2:
        return close_standard(adj, n, s) == full
    if code == 3:
        return close_psd(adj, n, s) == full
    if code == 4:
        return close_skew(adj, n, s) == full
    if code == 5:
        for v in _bits(full & ~s):
            if adj[v] & ~s:
                return False
        return True
    if code == 6:
        return closed_nbhd(adj, s) == full and connected_within(adj, s)
    if code == 7:
        for v in _bits(s):
            if adj[v] & s:
                return False
        return True
    if code == 8:
        for x in _bits(s):
            others = 0
            for y in _bits(s & ~(1 << x)):
                others |= adj[y] | (1 << y)
            if not (adj[x] | (1 << x)) & ~others:
                return False
        return True
    if code == 9:
        for x in _bits(s):
            if not has_private_fort(adj, n, s, x):
                return False
        return True
    raise ValueError(f"unknown kernel code {code}")


def _zir_table(adj: Sequence[int], n: int) -> bytearray:
    size = 1 << n
    full = size - 1
    fort = bytearray(size)
    for f in range(1, size):
        fort[f] = is_fort(adj, n, f)
    table = bytearray([1]) * size
    for x in range(n):
        xb = 1 << x
        # h[U] = 1 iff some fort F containing x has F - {x} inside U
        h = bytearray(size)
        for f in range(size):
            if f & xb and fort[f]:
                h[f ^ xb] = 1
        for b in range(n):
            if b == x:
                continue
            bb = 1 << b
            for u in range(size):
                if u & bb and not h[u] and h[u ^ bb]:
                    h[u] = 1
        for t in range(size):
            if t & xb and table[t] and not h[full & ~t]:
                table[t] = 0
    return table


def feasible_table(code: int, adj: Sequence[int], n: int) -> bytearray:
    """Byte ``s`` is 1 iff vertex set ``s`` is feasible.

    X codes use superset closure (a set with a feasible one-smaller subset is
    feasible), Y codes subset closure (a set with an infeasible one-smaller
    subset is infeasible); the predicate runs only on undecided sets.
    """
    size = 1 << n
    if code == 9:
        return _zir_table(adj, n)
    table = bytearray(size)
    is_x = code in X_CODES
    for s in range(size):
        decided = False
        sub = s
        while sub:
            low = sub & -sub
            sub ^= low
            if table[s ^ low]:
                if is_x:
                    decided = True
                    break
            elif not is_x:
                decided = True
                break
        if decided:
            table[s] = 1 if is_x else 0
        else:
            table[s] = feasible_one(code, adj, n, s)
    return table


def extremal_sets(table: bytearray, n: int, is_x: bool) -> list[int]:
    """Minimal (X) or maximal (Y) feasible sets, in increasing mask order."""
    out = []
    full = (1 << n) - 1
    for s in range(1 << n):
        if not table[s]:
            continue
        ok = True
        if is_x:
            sub = s
            while sub:
                low = sub & -sub
                sub ^= low
                if table[s ^ low]:
                    ok = False
                    break
        else:
            sub = full & ~s
            while sub:
                low = sub & -sub
                sub ^= low
                if table[s | low]:
                    ok = False
                    break
        if ok:
            out.append(s)
    return out


def degree_table(table: bytearray, n: int) -> bytearray:
    size = 1 << n
    deg = bytearray(size)
    for s in range(size):
        if table[s]:
            d = 0
            for b in range(n):
                if table[s ^ (1 << b)]:
                    d += 1
            deg[s] = d
    return deg


def slice_connectivity(table: bytearray, n: int, is_x: bool) -> list[bool]:
    """Entry k tells whether the k-slice is connected.

    X: the slice holds feasible sets of size at most k; Y: size at least k.
    Empty slices are reported as disconnected.
    """
    size = 1 << n
    parent = list(range(size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    levels: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(size):
        if table[s]:
            levels[s.bit_count()].append(s)
    connected = [False] * (n + 1)
    added = 0
    comps = 0
    order = range(n + 1) if is_x else range(n, -1, -1)
    for k in order:
        for s in levels[k]:
            added += 1
            comps += 1
            if is_x:
                nb = s
            else:
                nb = (size - 1) & ~s
            while nb:
                low = nb & -nb
                nb ^= low
                t = s ^ low
                if table[t]:
                    a, b = find(s), find(t)
                    if a != b:
                        parent[a] = b
                        comps -= 1
        connected[k] = added > 0 and comps == 1
    return connected
