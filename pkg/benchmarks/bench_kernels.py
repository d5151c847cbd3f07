"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py            # orders 10, 12, 14
    python benchmarks/bench_kernels.py --orders 8 --repeat 1

For each order a fixed random graph is drawn and every kernel that touches
all 2^n subsets is timed on both backends; results must agree bit for bit.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

from tarrecon.graph import Graph
from tarrecon.kernels import available_backends
from tarrecon.params import ParameterKind


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
    # keep it connected so connected domination is defined
    for v in range(1, n):
        if not g.component_of(0) >> v & 1:
            g = Graph.from_edges(n, g.edges() + [(v - 1, v)])
    return g


def best_of(repeat: int, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[10, 12, 14])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python backend only", file=sys.stderr)
    names = sorted(backends)
    print(f"{'n':>3} {'kernel':<22}" + "".join(f"{b:>12}" for b in names) + f"{'speedup':>10}")
    for n in args.orders:
        g = random_graph(n, 0.35, args.seed + n)
        tables = {}
        for kind in ParameterKind:
            row = {}
            for b in names:
                row[b], table = best_of(args.repeat, backends[b].feasible_table, kind.code, g.adj, n)
                table = bytes(table)
                if kind in tables and tables[kind] != table:
                    raise SystemExit(f"backends disagree on {kind.cli_name} tables at n = {n}")
                tables[kind] = table
            _line(n, f"table {kind.cli_name}", row, names)
        table = tables[ParameterKind.DOMINATION]
        for label, fn, extra in (
            ("extremal sets", "extremal_sets", (True,)),
            ("degree table", "degree_table", ()),
            ("slice connectivity", "slice_connectivity", (True,)),
        ):
            row, outs = {}, []
            for b in names:
                row[b], out = best_of(args.repeat, getattr(backends[b], fn), table, n, *extra)
                outs.append(bytes(out) if isinstance(out, (bytes, bytearray)) else list(out))
            if any(o != outs[0] for o in outs):
                raise SystemExit(f"backends disagree on {fn} at n = {n}")
            _line(n, label, row, names)
    return 0


def _line(n: int, label: str, row: dict, names: list[str]) -> None:
    cells = "".join(f"{row[b] * 1e3:>10.2f}ms" for b in names)
    speed = f"{row['python'] / row['cython']:>9.1f}x" if "cython" in row and row["cython"] > 0 else f"{'-':>10}"
    print(f"{n:>3} {label:<22}{cells}{speed}")


if __name__ == "__main__":
    sys.exit(main())
