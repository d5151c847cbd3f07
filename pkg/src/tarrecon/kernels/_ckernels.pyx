# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.  Mirrors ``_pykernels`` function for function."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long mask_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 32


cdef inline int popc(mask_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(mask_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline bint single(mask_t w) noexcept nogil:
    return w != 0 and (w & (w - 1)) == 0


cdef int _load(adj, mask_t* out) except -1:
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("order exceeds 32")
    cdef int i
    for i in range(n):
        out[i] = <mask_t>adj[i]
    return n


cdef inline mask_t _nbhd(const mask_t* adj, mask_t s) noexcept nogil:
    cdef mask_t out = s
    while s:
        out |= adj[ctz(s)]
        s &= s - 1
    return out


cdef mask_t _close_std(const mask_t* adj, mask_t blue) noexcept nogil:
    cdef bint changed = True
    cdef mask_t b, w
    while changed:
        changed = False
        b = blue
        while b:
            w = adj[ctz(b)] & ~blue
            b &= b - 1
            if single(w):
                blue |= w
                changed = True
    return blue


cdef mask_t _close_skew(const mask_t* adj, int n, mask_t blue) noexcept nogil:
    cdef bint changed = True
    cdef int u
    cdef mask_t w
    while changed:
        changed = False
        for u in range(n):
            w = adj[u] & ~blue
            if single(w):
                blue |= w
                changed = True
    return blue


cdef mask_t _close_psd(const mask_t* adj, mask_t full, mask_t blue) noexcept nogil:
    cdef mask_t rest, comp, frontier, reach, f, forced, b, w
    while True:
        rest = full & ~blue
        if not rest:
            return blue
        forced = 0
        while rest:
            comp = rest & (~rest + 1)
            frontier = comp
            while frontier:
                reach = 0
                f = frontier
                while f:
                    reach |= adj[ctz(f)]
                    f &= f - 1
                frontier = reach & rest & ~comp
                comp |= frontier
            rest &= ~comp
            b = blue
            while b:
                w = adj[ctz(b)] & comp
                b &= b - 1
                if single(w):
                    forced |= w
        if not forced:
            return blue
        blue |= forced


cdef bint _connected_within(const mask_t* adj, mask_t s) noexcept nogil:
    if not s:
        return False
    cdef mask_t comp = s & (~s + 1)
    cdef mask_t frontier = comp, reach, f
    while frontier:
        reach = 0
        f = frontier
        while f:
            reach |= adj[ctz(f)]
            f &= f - 1
        frontier = reach & s & ~comp
        comp |= frontier
    return comp == s


cdef bint _is_fort(const mask_t* adj, mask_t full, mask_t f) noexcept nogil:
    if not f:
        return False
    cdef mask_t out = full & ~f
    while out:
        if single(adj[ctz(out)] & f):
            return False
        out &= out - 1
    return True


cdef bint _private_fort(const mask_t* adj, mask_t full, mask_t t, int x) noexcept nogil:
    cdef mask_t free_ = full & ~t
    cdef mask_t xb = (<mask_t>1) << x
    cdef mask_t sub = free_
    while True:
        if _is_fort(adj, full, sub | xb):
            return True
        if not sub:
            return False
        sub = (sub - 1) & free_


cdef bint _feasible(int code, const mask_t* adj, int n, mask_t s) noexcept nogil:
    cdef mask_t full = ((<mask_t>1) << n) - 1 if n < 64 else <mask_t>(-1)
    cdef mask_t r, others, t, xb
    cdef int x
    if code == 0:
        return _nbhd(adj, s) == full
    if code == 1:
        return _close_std(adj, _nbhd(adj, s)) == full
    if code == 2:
        return _close_std(adj, s) == full
    if code == 3:
        return _close_psd(adj, full, s) == full
    if code == 4:
        return _close_skew(adj, n, s) == full
    if code == 5:
        r = full & ~s
        while r:
            if adj[ctz(r)] & ~s:
                return False
            r &= r - 1
        return True
    if code == 6:
        return _nbhd(adj, s) == full and _connected_within(adj, s)
    if code == 7:
        r = s
        while r:
            if adj[ctz(r)] & s:
                return False
            r &= r - 1
        return True
    if code == 8:
        r = s
        while r:
            x = ctz(r)
            xb = (<mask_t>1) << x
            r &= r - 1
            others = 0
            t = s & ~xb
            while t:
                others |= adj[ctz(t)] | (t & (~t + 1))
                t &= t - 1
            if not ((adj[x] | xb) & ~others):
                return False
        return True
    if code == 9:
        r = s
        while r:
            x = ctz(r)
            r &= r - 1
            if not _private_fort(adj, full, s, x):
                return False
        return True
    return False


def closed_nbhd(adj, s):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return _nbhd(a, <mask_t>s)


def close_standard(adj, int n, blue):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return _close_std(a, <mask_t>blue)


def close_skew(adj, int n, blue):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return _close_skew(a, n, <mask_t>blue)


def close_psd(adj, int n, blue):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return _close_psd(a, ((<mask_t>1) << n) - 1, <mask_t>blue)


def connected_within(adj, s):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return bool(_connected_within(a, <mask_t>s))


def is_fort(adj, int n, f):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return bool(_is_fort(a, ((<mask_t>1) << n) - 1, <mask_t>f))


def has_private_fort(adj, int n, t, int x):
    cdef mask_t a[MAXN]
    _load(adj, a)
    return bool(_private_fort(a, ((<mask_t>1) << n) - 1, <mask_t>t, x))


def feasible_one(int code, adj, int n, s):
    cdef mask_t a[MAXN]
    _load(adj, a)
    if code < 0 or code > 9:
        raise ValueError(f"unknown kernel code {code}")
    return bool(_feasible(code, a, n, <mask_t>s))


cdef void _zir_fill(const mask_t* adj, int n, unsigned char* table) noexcept nogil:
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t full = size - 1
    cdef mask_t f, u, t, xb, bb
    cdef int x, b
    cdef unsigned char* fort = <unsigned char*>malloc(size)
    cdef unsigned char* h = <unsigned char*>malloc(size)
    memset(table, 1, size)
    fort[0] = 0
    for f in range(1, size):
        fort[f] = _is_fort(adj, full, f)
    for x in range(n):
        xb = (<mask_t>1) << x
        memset(h, 0, size)
        for f in range(size):
            if (f & xb) and fort[f]:
                h[f ^ xb] = 1
        for b in range(n):
            if b == x:
                continue
            bb = (<mask_t>1) << b
            for u in range(size):
                if (u & bb) and not h[u] and h[u ^ bb]:
                    h[u] = 1
        for t in range(size):
            if (t & xb) and table[t] and not h[full & ~t]:
                table[t] = 0
    free(fort)
    free(h)


def feasible_table(int code, adj, int n):
    cdef mask_t a[MAXN]
    _load(adj, a)
    if code < 0 or code > 9:
        raise ValueError(f"unknown kernel code {code}")
    cdef mask_t size = (<mask_t>1) << n
    out = bytearray(size)
    cdef unsigned char[::1] view = out
    cdef unsigned char* table = &view[0]
    cdef mask_t s, sub, low
    cdef bint is_x = code < 7
    cdef bint decided
    with nogil:
        if code == 9:
            _zir_fill(a, n, table)
        else:
            for s in range(size):
                decided = False
                sub = s
                while sub:
                    low = sub & (~sub + 1)
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
                    table[s] = _feasible(code, a, n, s)
    return out


def extremal_sets(const unsigned char[::1] table, int n, bint is_x):
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t full = size - 1
    cdef mask_t s, sub, low
    cdef bint ok
    out = []
    for s in range(size):
        if not table[s]:
            continue
        ok = True
        if is_x:
            sub = s
            while sub:
                low = sub & (~sub + 1)
                sub ^= low
                if table[s ^ low]:
                    ok = False
                    break
        else:
            sub = full & ~s
            while sub:
                low = sub & (~sub + 1)
                sub ^= low
                if table[s | low]:
                    ok = False
                    break
        if ok:
            out.append(s)
    return out


def degree_table(const unsigned char[::1] table, int n):
    cdef mask_t size = (<mask_t>1) << n
    out = bytearray(size)
    cdef unsigned char[::1] deg = out
    cdef mask_t s
    cdef int b, d
    with nogil:
        for s in range(size):
            if table[s]:
                d = 0
                for b in range(n):
                    if table[s ^ ((<mask_t>1) << b)]:
                        d += 1
                deg[s] = d
    return out


cdef inline unsigned int _find(unsigned int* parent, unsigned int a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def slice_connectivity(const unsigned char[::1] table, int n, bint is_x):
    cdef mask_t size = (<mask_t>1) << n
    cdef mask_t full = size - 1
    cdef unsigned int* parent = <unsigned int*>malloc(size * sizeof(unsigned int))
    cdef unsigned int* order = <unsigned int*>malloc(size * sizeof(unsigned int))
    cdef mask_t* begin = <mask_t*>malloc((n + 1) * sizeof(mask_t))
    cdef mask_t* fill = <mask_t*>malloc((n + 1) * sizeof(mask_t))
    cdef unsigned char* flags = <unsigned char*>malloc(n + 1)
    cdef mask_t s, nb, low, t, i, total
    cdef unsigned int ra, rb
    cdef long long added = 0, comps = 0
    cdef int k, kk
    with nogil:
        for k in range(n + 1):
            fill[k] = 0
        for s in range(size):
            parent[s] = <unsigned int>s
            if table[s]:
                fill[popc(s)] += 1
        total = 0
        for k in range(n + 1):
            begin[k] = total
            total += fill[k]
            fill[k] = begin[k]
        for s in range(size):
            if table[s]:
                k = popc(s)
                order[fill[k]] = <unsigned int>s
                fill[k] += 1
        for kk in range(n + 1):
            k = kk if is_x else n - kk
            for i in range(begin[k], fill[k]):
                s = order[i]
                added += 1
                comps += 1
                nb = s if is_x else (full & ~s)
                while nb:
                    low = nb & (~nb + 1)
                    nb ^= low
                    t = s ^ low
                    if table[t]:
                        ra = _find(parent, <unsigned int>s)
                        rb = _find(parent, <unsigned int>t)
                        if ra != rb:
                            parent[ra] = rb
                            comps -= 1
            flags[k] = added > 0 and comps == 1
    connected = [bool(flags[k]) for k in range(n + 1)]
    free(parent)
    free(order)
    free(begin)
    free(fill)
    free(flags)
    return connected
