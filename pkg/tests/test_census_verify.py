import itertools
import json

import pytest

from tarrecon.canon import is_isomorphic
from tarrecon.census import (
    CensusRow, census_universe, classes_from_json, classes_of, classes_to_json, rows_from_csv, rows_to_csv, run_census,
    uniqueness_classes,
)
from tarrecon.errors import SourceRequired
from tarrecon.families import complete, complete_bipartite
from tarrecon.generate import generate_nonisomorphic
from tarrecon.graph import cartesian, write_graph6
from tarrecon.params import ParameterKind as K
from tarrecon.tar import tar_isomorphic
from tarrecon.verify import CLAIMS, verify_paper_suite

ROBUST = [k for k in K if k.robust]


def pairwise_unique(kind, graphs, method):
    unique = 0
    for i, g in enumerate(graphs):
        if not any(tar_isomorphic(kind, g, h, method) for j, h in enumerate(graphs) if j != i):
            unique += 1
    return unique


@pytest.mark.parametrize("kind", ROBUST, ids=lambda k: k.cli_name)
def test_census_agrees_with_pairwise_methods(kind):
    for n in range(2, 6):
        graphs = census_universe(kind, n)
        row = run_census(kind, n)
        assert row.universe == len(graphs)
        assert row.unique == pairwise_unique(kind, graphs, "setsystem")
        assert row.unique == pairwise_unique(kind, graphs, "direct")
        assert run_census(kind, n, method="direct") == row


@pytest.mark.parametrize("kind,n,unique", [
    (K.DOMINATION, 6, 55), (K.PSD_ZERO_FORCING, 5, 10), (K.POWER_DOMINATION, 6, 13),
    (K.STANDARD_ZERO_FORCING, 6, 34),
])
def test_census_examples(kind, n, unique):
    row = run_census(kind, n)
    assert (row.universe, row.unique) == (122 if n == 6 else 23, unique)


def test_census_skew_order_7():
    assert run_census(K.SKEW_ZERO_FORCING, 7) == CensusRow(K.SKEW_ZERO_FORCING, 7, 888, 179)


def test_universe_counts():
    assert [len(census_universe(K.DOMINATION, n)) for n in range(2, 8)] == [1, 2, 7, 23, 122, 888]
    assert len(census_universe(K.VERTEX_COVER, 4, widen=True)) == 11
    assert len(census_universe(K.CONNECTED_DOMINATION, 5)) == 21
    with pytest.raises(SourceRequired):
        census_universe(K.DOMINATION, 8)


def test_census_from_graph6_source():
    text = "\n".join(write_graph6(g) for g in generate_nonisomorphic(5))
    assert run_census(K.PSD_ZERO_FORCING, 5, source=text) == run_census(K.PSD_ZERO_FORCING, 5)


def test_domination_k33_class():
    k33 = complete_bipartite(3, 3)
    prism = cartesian(complete(3), complete(2))
    cls = next(c for c in uniqueness_classes(K.DOMINATION, 6) if any(is_isomorphic(g, k33) for g in c))
    assert len(cls) == 2 and any(is_isomorphic(g, prism) for g in cls)


@pytest.mark.parametrize("kind", [K.VERTEX_COVER, K.INDEPENDENCE], ids=lambda k: k.cli_name)
def test_vertex_cover_and_independence_unique(kind):
    for n in range(2, 7):
        assert all(len(c) == 1 for c in uniqueness_classes(kind, n))


def test_census_deterministic_across_threads():
    a = uniqueness_classes(K.STANDARD_ZERO_FORCING, 6, threads=1)
    b = uniqueness_classes(K.STANDARD_ZERO_FORCING, 6, threads=3)
    c = uniqueness_classes(K.STANDARD_ZERO_FORCING, 6, threads=1)
    key = lambda classes: [[write_graph6(g) for g in cl] for cl in classes]  # noqa: E731
    assert key(a) == key(b) == key(c)


def test_classes_partition_universe():
    graphs = census_universe(K.POWER_DOMINATION, 5)
    classes = classes_of(K.POWER_DOMINATION, graphs)
    flat = [write_graph6(g) for c in classes for g in c]
    assert sorted(flat) == sorted(write_graph6(g) for g in graphs)
    for c in classes:
        for g, h in itertools.combinations(c, 2):
            assert tar_isomorphic(K.POWER_DOMINATION, g, h, "direct")


def test_persistence_round_trips():
    rows = [run_census(K.PSD_ZERO_FORCING, n) for n in (3, 4, 5)]
    text = rows_to_csv(rows, header=True)
    assert text.splitlines()[0] == "kind,n,universe,unique,ratio"
    assert text.splitlines()[3] == "psd,5,23,10,0.4348"
    assert rows_from_csv(text) == rows
    classes = uniqueness_classes(K.DOMINATION, 4)
    kind, n, back = classes_from_json(classes_to_json(K.DOMINATION, 4, classes))
    assert (kind, n) == (K.DOMINATION, 4)
    assert [[write_graph6(g) for g in c] for c in back] == [[write_graph6(g) for g in c] for c in classes]


def test_widened_skew_uses_direct_method():
    row = run_census(K.SKEW_ZERO_FORCING, 4, widen=True)
    direct = run_census(K.SKEW_ZERO_FORCING, 4, widen=True, method="direct")
    assert row == direct and row.universe == 11


# verification suite

def test_quick_suite_passes():
    report = verify_paper_suite("quick")
    failed = [r for r in report.results if not r.passed]
    assert not failed, failed
    assert report.ok()
    assert len(report.flags) == 1 and "order 3" in report.flags[0]
    text = report.to_text()
    assert text.rstrip().endswith("0 failed, 1 flagged")
    doc = json.loads(report.to_json())
    assert doc["summary"]["failed"] == 0


def test_selected_claims_and_unknown_ids():
    report = verify_paper_suite(["d0-K3P3", "pd-Gn-3", "fullhouse-minsets"])
    assert [r.claim_id for r in report.results] == ["d0-K3P3", "pd-Gn-3", "fullhouse-minsets"]
    assert report.ok() and not report.flags
    with pytest.raises(KeyError):
        verify_paper_suite(["no-such-claim"])


def test_claim_ids_unique():
    ids = [c.claim_id for c in CLAIMS]
    assert len(ids) == len(set(ids))
