"""Structural laws of TAR graphs, as reusable checks.

Each check takes a kind and a base graph and raises AssertionError on a
violation.  Used by the per-module tests and by the acceptance gate.
"""

from __future__ import annotations

import networkx as nx

import oracles
from tarrecon.feasibility import extremal_feasible_sets, feasibility_table, irrelevant_vertices
from tarrecon.graph import Graph, bits, disjoint_union
from tarrecon.params import ParameterKind
from tarrecon.tar import (
    build_tar, build_tj, cartesian_set_graph, connectivity_profile, cut_vertices, degree_stats, hypercube_dimension,
    k_slice, nu_automorphism_check,
)


def check_closure(kind: ParameterKind, g: Graph) -> None:
    t = feasibility_table(kind, g)
    for s in range(1 << g.n):
        if t[s]:
            for v in range(g.n):
                assert t[s | (1 << v)] if kind.is_x else t[s & ~(1 << v)], (kind, g, s, v)


def _no_isolated_or_safe(kind: ParameterKind, g: Graph) -> bool:
    return not g.has_isolated() or kind.value_at_k1 == (0 if kind.is_x else 1)


def check_n_minus_one(kind: ParameterKind, g: Graph) -> None:
    t = feasibility_table(kind, g)
    if kind.is_x:
        every = all(t[g.full & ~(1 << v)] for v in range(g.n))
    else:
        every = all(t[1 << v] for v in range(g.n))
    if kind.robust and ((g.is_connected() and g.n >= 2) or _no_isolated_or_safe(kind, g)):
        assert every, (kind, g)


def check_component_consistency(kind: ParameterKind, g: Graph) -> None:
    t = feasibility_table(kind, g)
    parts = []
    for c in g.components():
        verts = list(bits(c))
        parts.append((verts, feasibility_table(kind, g.induced(c))))
    for s in range(1 << g.n):
        expect = all(ct[sum(1 << i for i, v in enumerate(verts) if s >> v & 1)] for verts, ct in parts)
        assert bool(t[s]) == expect, (kind, g, s)


def check_degree_laws(kind: ParameterKind, g: Graph) -> None:
    tar = build_tar(kind, g)
    stats = degree_stats(tar)
    n = g.n
    ext = set(tar.extremal)
    for s in tar.sets:
        d = stats.degree_of(s)
        assert d <= n
        free = n - s.bit_count() if kind.is_x else s.bit_count()
        assert d >= free
        assert (d == free) == (s in ext), (kind, g, s)
    assert stats.min_degree == (n - tar.values.extremal if kind.is_x else tar.values.extremal)
    every = all(tar.table[g.full & ~(1 << v)] if kind.is_x else tar.table[1 << v] for v in range(n))
    assert (stats.max_degree == n) == every


def check_hypercube(kind: ParameterKind, g: Graph) -> None:
    if kind.is_x:
        tar = build_tar(kind, g)
        assert hypercube_dimension(tar, verify=True) == g.n - tar.values.value


def check_basic_chain(kind: ParameterKind, g: Graph) -> None:
    tar = build_tar(kind, g)
    prof = connectivity_profile(tar)
    value, extremal = tar.values.value, tar.values.extremal
    n = g.n
    ext = tar.extremal
    optimum = sum(1 for s in ext if s.bit_count() == value)
    if kind.is_x:
        assert value <= prof.first <= prof.threshold
        if len(ext) == 1:
            assert value == prof.first == prof.threshold
        else:
            assert extremal + 1 <= prof.threshold <= min(extremal + value, n)
            if value == 1:
                assert prof.threshold == extremal + 1
        if optimum > 1:
            assert value + 1 <= prof.first
    else:
        assert value >= prof.first >= prof.threshold
        if len(ext) == 1:
            assert value == prof.first == prof.threshold
        else:
            assert extremal - 1 >= prof.threshold >= max(extremal + value - n, 0)
        if optimum > 1:
            assert value - 1 >= prof.first


def check_slices_against_oracle(kind: ParameterKind, g: Graph) -> None:
    tar = build_tar(kind, g)
    expected = oracles.slice_flags(set(tar.sets), g.n, kind.is_x)
    assert list(connectivity_profile(tar).connected) == expected


def check_cut_vertices(kind: ParameterKind, g: Graph) -> None:
    tar = build_tar(kind, g)
    found = cut_vertices(tar)
    allowed = g.full if kind.is_x else 0
    assert set(found) <= {allowed}
    h = oracles.tar_nx(set(tar.sets))
    assert sorted(found) == sorted(nx.articulation_points(h))


def check_nu_automorphism(kind: ParameterKind, g: Graph) -> None:
    if not kind.is_x:
        return
    tar = build_tar(kind, g)
    irr = irrelevant_vertices(kind, g)
    for r in range(1 << g.n):
        assert nu_automorphism_check(tar, r) == (r & ~irr == 0), (kind, g, r)


def check_tj_equivalence(kind: ParameterKind, g: Graph) -> None:
    tar = build_tar(kind, g)
    for k in range(g.n + 1):
        tj = build_tj(kind, g, k)
        if not tj.order:
            continue
        other = min(k + 1, g.n) if kind.is_x else max(k - 1, 0)
        sl = k_slice(tar, other)
        comp_of = {}
        for c, members in enumerate(sl.components()):
            for i in members:
                comp_of[sl.sets[i]] = c
        tj_comp = {}
        for c, members in enumerate(tj.components()):
            for i in members:
                tj_comp[tj.sets[i]] = c
        for a in tj.sets:
            for b in tj.sets:
                assert (tj_comp[a] == tj_comp[b]) == (comp_of[a] == comp_of[b]), (kind, g, k, a, b)


def check_product_law(kind: ParameterKind, g: Graph, h: Graph) -> None:
    union = build_tar(kind, disjoint_union(g, h)).set_graph
    prod = cartesian_set_graph(build_tar(kind, g).set_graph, build_tar(kind, h).set_graph, g.n)
    assert sorted(union.sets) == sorted(prod.sets)
    assert union.canonical_key() == prod.canonical_key()


def check_complement_duality(g: Graph) -> None:
    vc = build_tar(ParameterKind.VERTEX_COVER, g)
    ind = build_tar(ParameterKind.INDEPENDENCE, g)
    assert sorted(g.full ^ s for s in ind.sets) == sorted(vc.sets)
    vmin = sorted(extremal_feasible_sets(ParameterKind.VERTEX_COVER, g))
    assert sorted(g.full ^ s for s in extremal_feasible_sets(ParameterKind.INDEPENDENCE, g)) == vmin
    assert vc.edge_count() == ind.edge_count()


SINGLE_CHECKS = (
    check_closure, check_n_minus_one, check_degree_laws, check_hypercube, check_basic_chain,
    check_cut_vertices, check_nu_automorphism, check_tj_equivalence,
)
