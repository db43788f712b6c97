"""Regenerates the cubic graph fixtures.

cubic_le12.g6 holds every connected bridgeless simple cubic graph on 4 to 12
vertices, one per isomorphism class. Graphs are grown from the theta
multigraph by edge insertion (subdivide two edges, or one edge twice, and
join the new vertices), deduplicated with nauty certificates. Completeness is checked against the known
numbers of bridgeless cubic graphs (1, 2, 5, 18, 81).

cubic_sample_14_16.g6 holds a seeded random sample of bridgeless cubic
graphs on 14 and 16 vertices.
"""

import argparse
import random
from pathlib import Path

import networkx as nx
import pynauty

# Connected cubic graphs number 1, 2, 5, 19, 85; of these 1 (order 10) and 4
# (order 12) have a bridge: two K4-with-a-subdivided-edge pieces, or such a
# piece and one of the four 7-vertex pieces.
BRIDGELESS_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 18, 12: 81}


def certificate(n, edges):
    """Exact isomorphism certificate of a multigraph given as an edge list."""
    adj = {v: [] for v in range(n + len(edges))}
    for i, (a, b) in enumerate(edges):
        adj[n + i] += [a, b]
    g = pynauty.Graph(n + len(edges), adjacency_dict=adj,
                      vertex_coloring=[set(range(n)), set(range(n, n + len(edges)))])
    return pynauty.certificate(g)


def insertions(n, edges):
    m = len(edges)
    for i in range(m):
        for j in range(i, m):
            rest = [e for k, e in enumerate(edges) if k not in (i, j)]
            x, y = n, n + 1
            a, b = edges[i]
            if i == j:
                new = [(a, x), (x, y), (y, b), (x, y)]
            else:
                c, d = edges[j]
                new = [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield sorted(rest + [tuple(sorted(e)) for e in new])


def all_connected_cubic(max_n):
    """Bridgeless simple cubic graphs by order. Intermediate levels keep
    loopless multigraphs, since some simple graphs only arise from them."""
    level = {certificate(2, [(0, 1)] * 3): [(0, 1)] * 3}
    simple = {}
    for n in range(4, max_n + 1, 2):
        nxt = {}
        for edges in level.values():
            for h in insertions(n - 2, edges):
                key = certificate(n, h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt
        simple[n] = [g for g in (nx.Graph(e) for e in level.values() if len(set(e)) == len(e)) if bridgeless(g)]
        if len(simple[n]) != BRIDGELESS_CUBIC_COUNTS[n]:
            raise SystemExit(f"n={n}: {len(simple[n])} graphs, expected {BRIDGELESS_CUBIC_COUNTS[n]}")
    return simple


class IsoSet:
    def __init__(self):
        self.seen = {}

    def add(self, g):
        h = nx.convert_node_labels_to_integers(g)
        key = certificate(h.number_of_nodes(), list(h.edges()))
        if key in self.seen:
            return False
        self.seen[key] = g
        return True

    def graphs(self):
        return list(self.seen.values())


def canonical_order(graphs):
    return sorted(graphs, key=lambda g: nx.to_graph6_bytes(g, header=False))


def bridgeless(g):
    return nx.is_connected(g) and not nx.has_bridges(g)


def relabel_standard(g):
    return nx.convert_node_labels_to_integers(g, ordering="sorted")


def sample(n, count, rng):
    seen = IsoSet()
    attempts = 0
    while len(seen.graphs()) < count:
        attempts += 1
        g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
        if bridgeless(g):
            seen.add(g)
        if attempts > 100000:
            raise SystemExit("sampling did not converge")
    return seen.graphs()


def write(path, graphs, header):
    lines = [f"# {line}" for line in header]
    for g in graphs:
        lines.append(nx.to_graph6_bytes(relabel_standard(g), header=False).decode().strip())
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", type=Path, default=Path(__file__).parent)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--sample", type=int, default=20)
    args = parser.parse_args()

    levels = all_connected_cubic(12)
    small = [g for n in sorted(levels) for g in canonical_order(levels[n])]
    write(args.out / "cubic_le12.g6", small,
          ["connected bridgeless simple cubic graphs, 4..12 vertices, one per isomorphism class",
           "generated by generate_cubic.py (edge insertion from the theta graph, counts checked)",
           f"{len(small)} graphs"])

    rng = random.Random(args.seed)
    big = []
    for n in (14, 16):
        big.extend(canonical_order(sample(n, args.sample, rng)))
    write(args.out / "cubic_sample_14_16.g6", big,
          [f"random bridgeless cubic graphs on 14 and 16 vertices, seed {args.seed}",
           "generated by generate_cubic.py",
           f"{len(big)} graphs"])


if __name__ == "__main__":
    main()
