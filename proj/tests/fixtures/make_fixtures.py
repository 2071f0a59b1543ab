#!/usr/bin/env python3
"""Regenerates the frozen test fixtures.

gnk_degrees.txt: one line per (n, k) with 2 <= k <= 5 and 3k <= n <= 60,
    "n k d_1 d_2 ... d_n" with the degree sequence of G_{n,k} sorted in
    non-increasing order. The graph is assembled here with networkx from its
    definition, independently of the C++ builder.
graphs8.g6: every non-isomorphic graph on 8 vertices, one graph6 line each.
    Built by extending the 7-vertex atlas graphs by one vertex in every
    possible way and deduplicating on the pynauty canonical certificate.
"""
import itertools
import pathlib

import networkx as nx

HERE = pathlib.Path(__file__).resolve().parent


def gnk(n, k):
    s = nx.complete_graph(k)
    rest = nx.disjoint_union(nx.empty_graph(k + 1), nx.complete_graph(n - 1 - 2 * k))
    g = nx.disjoint_union(s, rest)
    for a in range(k):
        for b in range(k, n):
            g.add_edge(a, b)
    special = k
    for j in range(k - 1):
        g.add_edge(special, 2 * k + 1 + j)
    assert g.number_of_nodes() == n
    return g


def write_degrees():
    lines = []
    for k in range(2, 6):
        for n in range(3 * k, 61):
            g = gnk(n, k)
            degs = sorted((d for _, d in g.degree()), reverse=True)
            lines.append(" ".join(map(str, [n, k, *degs])))
    (HERE / "gnk_degrees.txt").write_text("\n".join(lines) + "\n")


def write_graphs8():
    import pynauty

    def cert(g):
        n = g.number_of_nodes()
        adj = {v: list(g.neighbors(v)) for v in g.nodes()}
        return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))

    seen = {}
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    for h in base:
        for r in range(8):
            for nbrs in itertools.combinations(range(7), r):
                g = nx.Graph(h)
                g.add_node(7)
                g.add_edges_from((7, v) for v in nbrs)
                c = cert(g)
                if c not in seen:
                    seen[c] = nx.to_graph6_bytes(g, header=False).decode().strip()
    out = sorted(seen.values())
    assert len(out) == 12346, len(out)
    (HERE / "graphs8.g6").write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    write_degrees()
    write_graphs8()
