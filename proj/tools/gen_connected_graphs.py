#!/usr/bin/env python3
"""Write every connected graph on 1..N vertices (up to isomorphism) as graph6.

Graphs on n vertices are obtained from all graphs on n-1 vertices by adding a
vertex joined to every possible neighbor subset; isomorphic copies are removed
with nauty certificates. Needs pynauty and networkx.
"""

import argparse
import sys

import networkx as nx
import pynauty


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.certificate(pynauty.Graph(n, directed=False, adjacency_dict=adj))


def extend(graphs, n):
    seen = {}
    for edges in graphs:
        for mask in range(1 << (n - 1)):
            new = edges + tuple((v, n - 1) for v in range(n - 1) if mask >> v & 1)
            cert = certificate(n, new)
            if cert not in seen:
                seen[cert] = new
    return [seen[c] for c in sorted(seen)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("-o", "--output", default="-")
    args = parser.parse_args()

    out = sys.stdout if args.output == "-" else open(args.output, "w")
    level = [()]
    for n in range(1, args.max_n + 1):
        if n > 1:
            level = extend(level, n)
        connected = 0
        for edges in level:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                connected += 1
                out.write(nx.to_graph6_bytes(g, header=False).decode())
        print(f"n={n}: {len(level)} graphs, {connected} connected", file=sys.stderr)
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
