"""Writes data/graphs_le8.g6: every graph on 1..8 vertices, one per
isomorphism class, in graph6 format.

Up to seven vertices the networkx atlas is used directly. Eight-vertex graphs
are all one-vertex extensions of the seven-vertex ones, deduplicated by a
Weisfeiler-Lehman hash and an isomorphism test inside each hash bucket.
"""

import sys
from collections import defaultdict
from itertools import combinations
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def eight_vertex_graphs(sevens):
    buckets = defaultdict(list)
    for g in sevens:
        for r in range(8):
            for nbrs in combinations(range(7), r):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets[key]
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
    return [g for bucket in buckets.values() for g in bucket]


def main(path: Path) -> None:
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1:
            by_order[g.number_of_nodes()].append(g)
    by_order[8] = eight_vertex_graphs(by_order[7])
    lines = []
    for n in range(1, 9):
        if len(by_order[n]) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(by_order[n])} graphs, expected {EXPECTED[n]}")
        for g in by_order[n]:
            lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {path}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "graphs_le8.g6")
