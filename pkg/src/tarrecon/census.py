"""Uniqueness census over all small graphs.

Graphs are first bucketed by cheap TAR invariants.  Only buckets with two or
more members get a canonical key: the canonical form of the extremal-set
family (set-system method) or of the TAR graph itself (direct method).  Two
graphs have isomorphic TAR graphs iff both invariants and key agree.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .errors import SourceRequired
from .feasibility import extremal_feasible_sets, feasibility_table, parameter_values
from .generate import MAX_BUILTIN_ORDER, generate_nonisomorphic
from .graph import Graph, parse_graph6, write_graph6
from .params import ParameterKind
from .setsystem import setsystem_key
from .tar import build_tar

THREADS_ENV = "TARRECON_THREADS"


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class CensusRow:
    kind: ParameterKind
    n: int
    universe: int
    unique: int

    @property
    def ratio(self) -> float:
        return self.unique / self.universe if self.universe else 0.0

    def csv_fields(self) -> list[str]:
        return [self.kind.cli_name, str(self.n), str(self.universe), str(self.unique), f"{self.ratio:.4f}"]


CSV_HEADER = ["kind", "n", "universe", "unique", "ratio"]


def _read_source(source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)) and Path(source).exists():
        with open(source) as fh:
            yield from fh
    elif isinstance(source, str):
        yield from source.splitlines()
    else:
        yield from source


def census_universe(kind: ParameterKind, n: int, source=None, widen: bool = False) -> list[Graph]:
    """Classes of order n without isolated vertices (all classes if ``widen``).

    Connected domination is only defined on connected graphs, so its universe
    is the connected classes.  ``source`` supplies graph6 lines (a path, text
    or iterable) and is mandatory beyond the built-in orders.
    """
    if source is None:
        if n > MAX_BUILTIN_ORDER:
            raise SourceRequired(f"order {n} needs a graph6 source")
        graphs = list(generate_nonisomorphic(n, "all"))
    else:
        graphs = [g for g in map(parse_graph6, (ln for ln in _read_source(source) if ln.strip())) if g.n == n]
    if kind is ParameterKind.CONNECTED_DOMINATION:
        return [g for g in graphs if g.is_connected()]
    if widen:
        return graphs
    return [g for g in graphs if not g.has_isolated()]


def choose_method(kind: ParameterKind, graphs: Sequence[Graph]) -> str:
    if kind.robust and (kind.isolated_safe or not any(g.has_isolated() for g in graphs)):
        return "setsystem"
    return "direct"


def tar_invariants(kind: ParameterKind, g: Graph) -> tuple:
    table = feasibility_table(kind, g)
    vals = parameter_values(kind, g)
    deg = kernels.degree_table(table, g.n)
    degs = Counter(deg[s] for s in range(1 << g.n) if table[s])
    sizes = Counter(s.bit_count() for s in extremal_feasible_sets(kind, g))
    return (
        g.n,
        vals.value,
        vals.extremal,
        sum(degs.values()),
        tuple(sorted(degs.items())),
        tuple(sorted(sizes.items())),
    )


def tar_key(kind: ParameterKind, g: Graph, method: str) -> bytes:
    if method == "setsystem":
        return setsystem_key(g.n, extremal_feasible_sets(kind, g))
    return build_tar(kind, g).canonical_key()


def _invariant_job(args: tuple[str, str]) -> tuple:
    kind, rec = ParameterKind.from_name(args[0]), args[1]
    return tar_invariants(kind, parse_graph6(rec))


def _key_job(args: tuple[str, str, str]) -> bytes:
    kind, rec, method = ParameterKind.from_name(args[0]), args[1], args[2]
    return tar_key(kind, parse_graph6(rec), method)


def _map(fn, jobs: list, threads: int) -> list:
    if threads <= 1 or len(jobs) < 64:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (threads * 8))))


def classes_of(kind: ParameterKind, graphs: Sequence[Graph], method: str | None = None,
               threads: int | None = None) -> list[list[Graph]]:
    """Partition ``graphs`` into TAR-isomorphism classes (deterministic order)."""
    threads = default_threads() if threads is None else threads
    method = choose_method(kind, graphs) if method is None else method
    recs = [write_graph6(g) for g in graphs]
    invs = _map(_invariant_job, [(kind.cli_name, r) for r in recs], threads)
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for i, inv in enumerate(invs):
        buckets[inv].append(i)
    shared = [i for members in buckets.values() if len(members) > 1 for i in members]
    keys = dict(zip(shared, _map(_key_job, [(kind.cli_name, recs[i], method) for i in shared], threads)))
    groups: dict[tuple, list[int]] = defaultdict(list)
    for i, inv in enumerate(invs):
        groups[(inv, keys.get(i, b""))].append(i)
    ordered = sorted(groups.values(), key=lambda m: m[0])
    return [[graphs[i] for i in members] for members in ordered]


def uniqueness_classes(kind: ParameterKind, n: int, source=None, widen: bool = False,
                       method: str | None = None, threads: int | None = None) -> list[list[Graph]]:
    return classes_of(kind, census_universe(kind, n, source, widen), method, threads)


def run_census(kind: ParameterKind, n: int, source=None, widen: bool = False,
               method: str | None = None, threads: int | None = None) -> CensusRow:
    classes = uniqueness_classes(kind, n, source, widen, method, threads)
    return CensusRow(kind, n, sum(len(c) for c in classes), sum(1 for c in classes if len(c) == 1))


def rows_to_csv(rows: Iterable[CensusRow], header: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(row.csv_fields())
    return buf.getvalue()


def rows_from_csv(text: str) -> list[CensusRow]:
    out = []
    for fields in csv.reader(io.StringIO(text)):
        if not fields or fields[0] == "kind":
            continue
        out.append(CensusRow(ParameterKind.from_name(fields[0]), int(fields[1]), int(fields[2]), int(fields[3])))
    return out


def classes_to_json(kind: ParameterKind, n: int, classes: Sequence[Sequence[Graph]]) -> str:
    doc = {
        "kind": kind.cli_name,
        "n": n,
        "classes": [[write_graph6(g) for g in c] for c in classes],
    }
    return json.dumps(doc, indent=1)


def classes_from_json(text: str) -> tuple[ParameterKind, int, list[list[Graph]]]:
    doc = json.loads(text)
    return (
        ParameterKind.from_name(doc["kind"]),
        int(doc["n"]),
        [[parse_graph6(r) for r in c] for c in doc["classes"]],
    )
