"""Writes data/corpus_connected_le6.txt: every connected graph on at most six
vertices, one per isomorphism class, with its orientable genus.

Genus comes from planarity alone: every graph on six or fewer vertices is a
subgraph of K6, which embeds on the torus, so a non-planar one has genus 1.
"""

import sys
from pathlib import Path

import networkx as nx


def main(path: Path) -> None:
    graphs = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)]
    lines = [
        "# connected graphs on <= 6 vertices up to isomorphism (networkx atlas order)",
        "# genus: 0 if planar, else 1 (subgraph of K6)",
    ]
    for index, g in enumerate(graphs):
        planar, _ = nx.check_planarity(g)
        genus = 0 if planar else 1
        lines.append(f"graph atlas{index:03d} genus {genus}")
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        lines.append(f"{g.number_of_nodes()} {len(edges)}")
        lines.extend(f"{u} {v}" for u, v in edges)
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(graphs)} graphs to {path}")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "corpus_connected_le6.txt")
