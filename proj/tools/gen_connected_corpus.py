#!/usr/bin/env python3
"""Write every connected simple graph on 1..N vertices (N <= 8) as graph6.

Graphs up to 7 vertices come from the networkx atlas; 8-vertex graphs are
built by attaching a new vertex to every 7-vertex graph in every possible way
and removing isomorphic duplicates. Expected counts (OEIS A001349):
1, 1, 2, 6, 21, 112, 853, 11117.
"""
import argparse
import itertools
import sys

import networkx as nx

EXPECTED = [1, 1, 2, 6, 21, 112, 853, 11117]


def extend(graphs, n):
    buckets = {}
    out = []
    for g in graphs:
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                if not nx.is_connected(h):
                    continue
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                out.append(h)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    by_n = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= 7:
            by_n[n].append(g)
    connected = {n: [g for g in gs if nx.is_connected(g)] for n, gs in by_n.items()}
    if args.max_n >= 8:
        connected[8] = extend(by_n[7], 8)
    out = sys.stdout if args.output == "-" else open(args.output, "w")
    for n in range(1, args.max_n + 1):
        gs = connected[n]
        if len(gs) != EXPECTED[n - 1]:
            sys.exit(f"n={n}: got {len(gs)} graphs, expected {EXPECTED[n - 1]}")
        for g in gs:
            g = nx.convert_node_labels_to_integers(g)
            out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
