#!/usr/bin/env python3
"""Regenerate the graph6 fixture files under data/.

Connected-graph streams come from the networkx copy of the Read/Wilson atlas
(all graphs up to 7 vertices), tree streams from nonisomorphic_trees.
Output is one graph6 line per isomorphism class, atlas order.
"""
import sys
from pathlib import Path

import networkx as nx

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
EXPECTED_TREES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


def g6(g):
    return nx.to_graph6_bytes(g, header=False).strip().decode()


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)

    atlas = nx.graph_atlas_g()[1:]  # entry 0 is the empty graph
    for n in range(4, 8):
        lines = [g6(g) for g in atlas if g.number_of_nodes() == n and nx.is_connected(g)]
        assert len(lines) == EXPECTED_CONNECTED[n], (n, len(lines))
        (out / f"connected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"connected_n{n}.g6: {len(lines)}")

    for n in range(1, 9):
        if n <= 2:
            trees = [nx.path_graph(n)]
        else:
            trees = list(nx.nonisomorphic_trees(n))
        lines = [g6(t) for t in trees]
        assert len(lines) == EXPECTED_TREES[n], (n, len(lines))
        (out / f"trees_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"trees_n{n}.g6: {len(lines)}")


if __name__ == "__main__":
    main()
