"""Independent reference implementations used only by the tests.

Nothing here imports the package's planarity or matching code: planarity
comes from networkx, matchings from itertools, and a second planarity oracle
is a Wagner-style fixpoint over the networkx graph atlas.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_planar(g) -> bool:
    return nx.check_planarity(to_nx(g))[0]


def all_matchings(edges):
    """Every matching, by brute force over edge subsets in increasing size."""
    edges = sorted(edges)
    for k in range(len(edges) + 1):
        found = False
        for combo in itertools.combinations(edges, k):
            ends = [x for e in combo for x in e]
            if len(ends) == len(set(ends)):
                found = True
                yield combo
        if not found:
            return


def nx_contract(g, matching) -> nx.Graph:
    h = to_nx(g)
    for u, v in matching:
        h = nx.contracted_nodes(h, u, v, self_loops=False)
    return nx.Graph(h)


def brute_force_string(g) -> bool:
    """String iff some matching (any edges at all) contracts to a planar graph."""
    for m in all_matchings(g.edges):
        if nx.check_planarity(nx_contract(g, m))[0]:
            return True
    return False


def cubic_matchings_oracle(g):
    deg = dict(to_nx(g).degree())
    cubic = [e for e in sorted(g.edges) if deg[e[0]] == 3 and deg[e[1]] == 3]
    return [frozenset(m) for m in all_matchings(cubic)]


# -- Wagner fixpoint over the atlas ------------------------------------------

def _strip(h: nx.Graph) -> nx.Graph:
    h = nx.convert_node_labels_to_integers(h)
    h.remove_nodes_from([v for v in list(h) if h.degree(v) == 0])
    return nx.convert_node_labels_to_integers(h)


def _key(h: nx.Graph):
    return h.number_of_nodes(), h.number_of_edges(), tuple(sorted(d for _, d in h.degree()))


@lru_cache(maxsize=1)
def _atlas_table():
    """Planarity of every atlas graph derived only from Wagner's criterion:
    a graph is nonplanar iff it is K5 or K33 itself after dropping isolated
    vertices, or deleting or contracting some edge leaves it nonplanar.
    Minors come earlier in atlas order, so one pass suffices."""
    atlas = graph_atlas_g()
    buckets: dict = {}
    verdict: list[bool] = []
    k5, k33 = nx.complete_graph(5), nx.complete_bipartite_graph(3, 3)

    def lookup(h):
        h = _strip(h)
        if h.number_of_edges() == 0:
            return True
        for idx in buckets.get(_key(h), ()):
            if nx.is_isomorphic(atlas[idx], h):
                return verdict[idx]
        raise KeyError("minor not reached yet")

    for idx, g in enumerate(atlas):
        s = _strip(g)
        if nx.is_isomorphic(s, k5) or nx.is_isomorphic(s, k33):
            planar = False
        else:
            planar = True
            for e in list(g.edges()):
                d = g.copy()
                d.remove_edge(*e)
                c = nx.Graph(nx.contracted_nodes(g, *e, self_loops=False))
                if not lookup(d) or not lookup(c):
                    planar = False
                    break
        verdict.append(planar)
        buckets.setdefault(_key(_strip(g)), []).append(idx)
    return atlas, verdict


def atlas_with_wagner_planarity():
    """Pairs (networkx graph, planar?) for every graph on at most 7 vertices."""
    atlas, verdict = _atlas_table()
    return list(zip(atlas, verdict))


# -- rotation brute force ----------------------------------------------------

def rotation_system_planar(g) -> bool:
    """Try every rotation system; planar iff some one has Euler characteristic
    two on each component. Only usable on very small graphs."""
    h = to_nx(g)
    comps = [c for c in nx.connected_components(h) if len(c) > 1]
    for comp in comps:
        sub = h.subgraph(comp)
        nodes = sorted(sub)
        n, m = len(nodes), sub.number_of_edges()
        options = []
        for v in nodes:
            nb = sorted(sub[v])
            first, rest = nb[0], nb[1:]
            options.append([(first,) + p for p in itertools.permutations(rest)])
        ok = False
        for choice in itertools.product(*options):
            rot = {v: r for v, r in zip(nodes, choice)}
            succ = {}
            for v, r in rot.items():
                for i, u in enumerate(r):
                    succ[(v, u)] = r[(i + 1) % len(r)]
            seen, faces = set(), 0
            for v in nodes:
                for u in rot[v]:
                    if (u, v) in seen:
                        continue
                    faces += 1
                    a, b = u, v
                    while (a, b) not in seen:
                        seen.add((a, b))
                        a, b = b, succ[(b, a)]
            if n - m + faces == 2:
                ok = True
                break
        if not ok:
            return False
    return True
