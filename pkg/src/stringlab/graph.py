"""Simple undirected graphs on dense integer vertices, plus the structural queries
used throughout the package (contraction, girth, density, subdivision, minors,
isomorphism) and the edge-list interchange format."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs, edge sets, or edge-list files."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    ``labels`` is a sidecar map from vertex to a short annotation string; no
    algorithm reads it.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (),
                 labels: Mapping[int, str] | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normed = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            ne = norm_edge(u, v)
            if ne in normed:
                raise GraphError(f"parallel edge {ne}")
            normed.add(ne)
        lab = {}
        for v, name in (labels or {}).items():
            if not 0 <= v < n:
                raise GraphError(f"label for unknown vertex {v}")
            lab[int(v)] = str(name)
        self._init(n, normed, lab)

    def _init(self, n: int, edge_set: set[Edge], labels: dict[int, str]) -> None:
        self.n = n
        self.edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.labels = labels

    @classmethod
    def _trusted(cls, n: int, edge_set: set[Edge], labels: dict[int, str] | None = None) -> "Graph":
        # Skips validation; callers guarantee normalized, simple, in-range edges.
        g = cls.__new__(cls)
        g._init(n, edge_set, labels or {})
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._edge_set

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def is_cubic_edge(self, e: Edge) -> bool:
        return len(self.adj[e[0]]) == 3 and len(self.adj[e[1]]) == 3

    def cubic_edges(self) -> list[Edge]:
        return [e for e in self.edges if self.is_cubic_edge(e)]

    def vertices_labelled(self, *names: str) -> list[int]:
        return sorted(v for v, lab in self.labels.items() if lab in names)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph on ``keep`` relabelled in increasing order; also returns the
        list mapping new index to old vertex."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        edges = {(index[u], index[v]) for u, v in self.edges if u in index and v in index}
        labels = {index[v]: lab for v, lab in self.labels.items() if v in index}
        return Graph._trusted(len(kept), edges, labels), kept

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(u for u in range(self.n) if u != v)[0]

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        drop = {norm_edge(e[0], e[1]) for e in removed}
        return Graph._trusted(self.n, set(self._edge_set) - drop, dict(self.labels))

    def with_edges(self, added: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in added], self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        edges = {norm_edge(perm[u], perm[v]) for u, v in self.edges}
        labels = {perm[v]: lab for v, lab in self.labels.items()}
        return Graph._trusted(self.n, edges, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeSet:
    """A set of edges of a specific parent graph."""

    graph: Graph = field(repr=False, compare=False)
    edges: tuple[Edge, ...]

    def __post_init__(self):
        normed = tuple(sorted({norm_edge(*e) for e in self.edges}))
        for e in normed:
            if not self.graph.has_edge(*e):
                raise GraphError(f"{e} is not an edge of the parent graph")
        object.__setattr__(self, "edges", normed)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


@dataclass(frozen=True)
class Matching(EdgeSet):
    """Pairwise disjoint edges; ``cubic`` is True iff every member edge has two
    degree-3 endpoints in the parent graph."""

    cubic: bool = field(init=False)

    def __post_init__(self):
        super().__post_init__()
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen:
                raise GraphError(f"edges share an endpoint at {(u, v)}; not a matching")
            seen.update((u, v))
        object.__setattr__(self, "cubic", all(self.graph.is_cubic_edge(e) for e in self.edges))

    def partner(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


def as_matching(g: Graph, m: Matching | Iterable[Sequence[int]]) -> Matching:
    if isinstance(m, Matching):
        if m.graph is not g and any(not g.has_edge(*e) for e in m.edges):
            raise GraphError("matching belongs to a different graph")
        return m if m.graph is g else Matching(g, m.edges)
    return Matching(g, tuple(tuple(e) for e in m))


def contraction_map(n: int, matching: Iterable[Edge]) -> tuple[list[int], int]:
    """Vertex map for contracting a matching: merged pairs take the smaller
    endpoint's slot, then indices are compacted preserving order."""
    rep = list(range(n))
    for u, v in matching:
        a, b = (u, v) if u < v else (v, u)
        rep[b] = a
    index: dict[int, int] = {}
    for v in range(n):
        if rep[v] == v:
            index[v] = len(index)
    return [index[rep[v]] for v in range(n)], len(index)


def contract_matching(g: Graph, m: Matching | Iterable[Sequence[int]]) -> Graph:
    """``G/M``: each matched pair merged, parallel edges collapsed."""
    m = as_matching(g, m)
    vmap, n2 = contraction_map(g.n, m.edges)
    edges = set()
    for u, v in g.edges:
        a, b = vmap[u], vmap[v]
        if a != b:
            edges.add(norm_edge(a, b))
    labels = {}
    for v, lab in g.labels.items():
        labels.setdefault(vmap[v], lab)
    return Graph._trusted(n2, edges, labels)


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    return contract_matching(g, [tuple(e)])


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def density(g: Graph) -> Fraction:
    if g.n == 0:
        raise GraphError("density of the empty graph is undefined")
    return Fraction(g.m, g.n)


def subdivide(g: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` internal vertices; new vertices
    are appended edge by edge in sorted edge order."""
    if k < 0:
        raise GraphError("subdivision count must be non-negative")
    if k == 0:
        return g
    edges = set()
    nxt = g.n
    for u, v in g.edges:
        path = [u] + list(range(nxt, nxt + k)) + [v]
        nxt += k
        for a, b in zip(path, path[1:]):
            edges.add(norm_edge(a, b))
    return Graph._trusted(nxt, edges, dict(g.labels))


def one_step_minors(g: Graph) -> list[tuple[tuple, Graph]]:
    """Every single vertex deletion and single edge contraction, tagged
    ``("delete", v)`` or ``("contract", (u, v))``."""
    out: list[tuple[tuple, Graph]] = [(("delete", v), g.delete_vertex(v)) for v in range(g.n)]
    out.extend((("contract", e), contract_edge(g, e)) for e in g.edges)
    return out


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges)


def has_k23_subgraph(g: Graph) -> bool:
    # K_{2,3} as a subgraph is exactly two vertices with three common neighbours.
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(g.adj[u] & g.adj[v]) >= 3:
                return True
    return False


def is_bipartite(n: int, edges: Iterable[Edge]) -> bool:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def max_vertex_disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int],
                              allowed: Iterable[Edge] | None = None) -> int:
    """Maximum number of vertex-disjoint paths from ``sources`` to ``sinks``
    (Menger, via unit-capacity augmenting paths on the split-vertex network)."""
    src, snk = set(sources), set(sinks)
    edge_list = g.edges if allowed is None else [norm_edge(*e) for e in allowed]
    # node 2v = v_in, 2v+1 = v_out; S = 2n, T = 2n+1
    size = 2 * g.n + 2
    S, T = 2 * g.n, 2 * g.n + 1
    cap: dict[tuple[int, int], int] = {}
    graph: list[set[int]] = [set() for _ in range(size)]

    def arc(a: int, b: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        graph[a].add(b)
        graph[b].add(a)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1)
    for u, v in edge_list:
        arc(2 * u + 1, 2 * v)
        arc(2 * v + 1, 2 * u)
    for s in src:
        arc(S, 2 * s)
    for t in snk:
        arc(2 * t + 1, T)
    flow = 0
    while True:
        prev = {S: S}
        queue = deque([S])
        while queue and T not in prev:
            a = queue.popleft()
            for b in graph[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if T not in prev:
            return flow
        b = T
        while b != S:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


# -- isomorphism ------------------------------------------------------------

def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """A vertex bijection ``phi`` with ``uv in E1 <=> phi(u)phi(v) in E2``, or None.

    Plain backtracking with degree-refinement pruning; adequate for desk-scale
    graphs (up to about 50 vertices).
    """
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return []

    # Colours are refined jointly so the palettes of the two graphs agree.
    c1, c2 = g1.degrees(), g2.degrees()
    for _ in range(4):
        s1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in range(n)]
        s2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in range(n)]
        if sorted(s1) != sorted(s2):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(s1) | set(s2)))}
        c1 = [palette[s] for s in s1]
        c2 = [palette[s] for s in s2]

    # Visit g1 vertices so that each one (after the first of its component)
    # has an already-mapped neighbour.
    order: list[int] = []
    placed = [False] * n
    rarity = {c: c1.count(c) for c in set(c1)}
    for start in sorted(range(n), key=lambda v: (rarity[c1[v]], -len(g1.adj[v]), v)):
        if placed[start]:
            continue
        placed[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g1.adj[u]):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(c2[v], []).append(v)
    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        mapped_nbrs = [phi[w] for w in g1.adj[u] if phi[w] >= 0]
        if mapped_nbrs:
            candidates = set(g2.adj[mapped_nbrs[0]])
            for x in mapped_nbrs[1:]:
                candidates &= g2.adj[x]
            candidates = sorted(c for c in candidates if c2[c] == c1[u])
        else:
            candidates = by_colour.get(c1[u], [])
        for cand in candidates:
            if used[cand]:
                continue
            ok = True
            for w in range(n):
                pw = phi[w]
                if pw >= 0 and ((w in g1.adj[u]) != (pw in g2.adj[cand])):
                    ok = False
                    break
            if not ok:
                continue
            phi[u] = cand
            used[cand] = True
            if extend(i + 1):
                return True
            phi[u] = -1
            used[cand] = False
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


# -- edge-list format -------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    First non-comment line ``n m``, then ``m`` lines ``u v``, then optional
    ``label v name`` lines. Lines starting with ``#`` are comments. Blank input
    is the empty graph.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        return Graph(0)
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"header must be two integers, got {lines[0]!r}") from None
    if len(lines) < 1 + m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {ln!r}") from None
    labels = {}
    for ln in lines[1 + m:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "label":
            raise GraphError(f"bad trailing line {ln!r}; expected 'label v name'")
        labels[int(parts[1])] = parts[2]
    return Graph(n, edges, labels)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    out.extend(f"label {v} {g.labels[v]}" for v in sorted(g.labels))
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment))
