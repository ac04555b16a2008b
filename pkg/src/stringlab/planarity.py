"""Planarity testing with rotation-system witnesses, and the cycle-relative
tools built on it: drawability with a cycle bounding an empty face, bridge
interlacement, and the girth-density rejection test.

The tester decomposes the graph into blocks and embeds each block by path
addition (Demoucron, Malgrange and Pertuiset): grow a 2-connected plane
subgraph from a cycle, always routing a fragment whose attachments fit in the
fewest faces. It is quadratic, deterministic, and produces the faces directly.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Edge, Graph, GraphError, is_bipartite, norm_edge


class NonPlanarError(GraphError):
    """Raised by :func:`planar_embedding` on a non-planar graph.

    ``witness`` holds the edges of a minimal non-planar subgraph (a Kuratowski
    subdivision) when one was extracted.
    """

    def __init__(self, message: str, witness: tuple[Edge, ...] | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: ``rotation[v]`` lists the neighbours of ``v`` in cyclic
    order. Tracing a face from dart ``u -> v`` continues with ``v -> w`` where
    ``w`` follows ``u`` in ``rotation[v]``."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def successor(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def faces(self) -> list[list[int]]:
        """Face boundary walks as vertex lists (each dart used once)."""
        nxt: dict[tuple[int, int], tuple[int, int]] = {}
        for v, rot in enumerate(self.rotation):
            k = len(rot)
            for i, u in enumerate(rot):
                nxt[(u, v)] = (v, rot[(i + 1) % k])
        seen: set[tuple[int, int]] = set()
        faces = []
        for v, rot in enumerate(self.rotation):
            for u in rot:
                dart = (v, u)
                if dart in seen:
                    continue
                walk = []
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart[0])
                    dart = nxt[dart]
                faces.append(walk)
        return faces

    def edges(self) -> set[Edge]:
        return {norm_edge(v, u) for v, rot in enumerate(self.rotation) for u in rot}

    def euler_ok(self) -> bool:
        """Every component with an edge satisfies ``n - m + f = 2``."""
        n = self.n
        comp = [-1] * n
        ncomp = 0
        for s in range(n):
            if comp[s] >= 0:
                continue
            comp[s] = ncomp
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.rotation[u]:
                    if comp[w] < 0:
                        comp[w] = ncomp
                        queue.append(w)
            ncomp += 1
        verts = [0] * ncomp
        edges = [0] * ncomp
        faces = [0] * ncomp
        for v in range(n):
            verts[comp[v]] += 1
            edges[comp[v]] += len(self.rotation[v])
        for f in self.faces():
            faces[comp[f[0]]] += 1
        for c in range(ncomp):
            m = edges[c] // 2
            if m and verts[c] - m + faces[c] != 2:
                return False
        return True

    def matches(self, g: Graph) -> bool:
        return self.n == g.n and all(set(self.rotation[v]) == g.adj[v] and
                                     len(self.rotation[v]) == len(g.adj[v]) for v in range(g.n))

    def to_json(self) -> str:
        return json.dumps({str(v): list(rot) for v, rot in enumerate(self.rotation)})

    @classmethod
    def from_json(cls, text: str) -> "PlanarEmbedding":
        data = json.loads(text)
        return cls(tuple(tuple(data[str(v)]) for v in range(len(data))))


# -- blocks -----------------------------------------------------------------

def _blocks(n: int, adj: Sequence[frozenset[int]]) -> list[list[Edge]]:
    """Biconnected components as edge lists (iterative Hopcroft-Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[Edge]] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = t
        t += 1
        stack: list[Edge] = []
        work = [(root, -1, iter(sorted(adj[root])))]
        while work:
            u, parent, it = work[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    stack.append((u, w))
                    disc[w] = low[w] = t
                    t += 1
                    work.append((w, u, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            work.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(norm_edge(*e))
                        if e == (parent, u):
                            break
                    blocks.append(block)
    return blocks


# -- path addition on one block ----------------------------------------------

def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    depth = {start: 0}
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                stack.append((w, iter(sorted(adj[w]))))
                break
            if w != parent[u] and depth[w] < depth[u]:
                cyc = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc
        else:
            stack.pop()
    raise GraphError("block has no cycle")


def _embed_block(edges: list[Edge]) -> dict[int, list[int]] | None:
    """Rotation system of a 2-connected block, or None if it is non-planar."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if len(edges) == 1:
        (u, v), = edges
        return {u: [v], v: [u]}
    nv = len(adj)
    if len(edges) > 3 * nv - 6:
        return None
    cycle = _find_cycle(adj)
    faces: list[list[int]] = [cycle, cycle[::-1]]
    placed = set(cycle)
    placed_edges = {norm_edge(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
    while len(placed_edges) < len(edges):
        fragments: list[tuple[list[int], set[int]]] = []
        # chords between placed vertices
        for u in sorted(placed):
            for w in sorted(adj[u]):
                if u < w and w in placed and (u, w) not in placed_edges:
                    fragments.append(([u, w], {u, w}))
        # components of the unplaced vertices, with their attachments
        seen: set[int] = set()
        comps: list[tuple[set[int], set[int]]] = []
        for s in sorted(adj):
            if s in placed or s in seen:
                continue
            comp = {s}
            seen.add(s)
            att: set[int] = set()
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w in placed:
                        att.add(w)
                    elif w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append((comp, att))
        chosen = None
        best = None
        candidates = [(None, att, path) for path, att in fragments] + \
                     [(comp, att, None) for comp, att in comps]
        for comp, att, path in candidates:
            ok_faces = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok_faces:
                return None
            if best is None or len(ok_faces) < len(best):
                best = ok_faces
                chosen = (comp, att, path)
                if len(ok_faces) == 1:
                    break
        comp, att, path = chosen
        if path is None:
            path = _path_through(adj, comp, att)
        fi = best[0]
        face = faces[fi]
        a, b = path[0], path[-1]
        ia, ib = face.index(a), face.index(b)
        k = len(face)
        a_to_b = [face[(ia + j) % k] for j in range((ib - ia) % k + 1)]
        b_to_a = [face[(ib + j) % k] for j in range((ia - ib) % k + 1)]
        inner = path[1:-1]
        faces[fi] = a_to_b + inner[::-1]
        faces.append(b_to_a + inner)
        placed.update(inner)
        for x, y in zip(path, path[1:]):
            placed_edges.add(norm_edge(x, y))
    succ: dict[int, dict[int, int]] = {v: {} for v in adj}
    for f in faces:
        k = len(f)
        for i, v in enumerate(f):
            succ[v][f[i - 1]] = f[(i + 1) % k]
    rotation = {}
    for v, s in succ.items():
        first = min(s)
        rot = [first]
        x = s[first]
        while x != first:
            rot.append(x)
            x = s[x]
        if len(rot) != len(adj[v]):
            raise AssertionError("face set does not induce a rotation")
        rotation[v] = rot
    return rotation


def _path_through(adj: dict[int, set[int]], comp: set[int], att: set[int]) -> list[int]:
    a = min(att)
    prev: dict[int, int] = {}
    queue = deque()
    for w in sorted(adj[a]):
        if w in comp:
            prev[w] = a
            queue.append(w)
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w in att and w != a:
                path = [w, u]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if w in comp and w not in prev:
                prev[w] = u
                queue.append(w)
    raise AssertionError("fragment with a single attachment in a 2-connected block")


def _embed(g: Graph) -> list[list[int]] | None:
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block in _blocks(g.n, g.adj):
        rot = _embed_block(block)
        if rot is None:
            return None
        for v, r in rot.items():
            rotation[v].extend(r)
    return rotation


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return _embed(g) is not None


def kuratowski_witness(g: Graph) -> tuple[Edge, ...] | None:
    """Edges of a minimal non-planar subgraph, or None if ``g`` is planar."""
    if is_planar(g):
        return None
    edges = list(g.edges)
    i = 0
    while i < len(edges):
        trial = edges[:i] + edges[i + 1:]
        if not is_planar(Graph._trusted(g.n, set(trial))):
            edges = trial
        else:
            i += 1
    return tuple(edges)


def planar_embedding(g: Graph) -> PlanarEmbedding:
    rot = None
    if not (g.n >= 3 and g.m > 3 * g.n - 6):
        rot = _embed(g)
    if rot is None:
        raise NonPlanarError("graph is not planar", kuratowski_witness(g))
    emb = PlanarEmbedding(tuple(tuple(r) for r in rot))
    if not emb.euler_ok():
        raise AssertionError("embedding fails the Euler face count")
    return emb


# -- cycle-relative tools ----------------------------------------------------

def _check_cycle(g: Graph, c: Sequence[int]) -> list[int]:
    c = list(c)
    if len(c) < 3 or len(set(c)) != len(c):
        raise GraphError("cycle must list at least three distinct vertices")
    for a, b in zip(c, c[1:] + c[:1]):
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge; not a cycle of the graph")
    return c


def cycle_exterior_planar(g: Graph, c: Sequence[int]) -> bool:
    """Whether ``g`` has a planar drawing in which ``c`` bounds a face that no
    other edge enters.

    Every vertex must lie on ``c`` or be an internal (degree-2) vertex of a
    path between cycle vertices. Decided by adding one apex joined to every
    vertex of ``c`` and testing planarity.
    """
    c = _check_cycle(g, c)
    on_cycle = set(c)
    for v in range(g.n):
        if v not in on_cycle and g.degree(v) != 2:
            raise GraphError(f"vertex {v} is neither on the cycle nor inside a path between cycle vertices")
    apex = g.n
    edges = set(g.edges) | {(v, apex) for v in c}
    return is_planar(Graph._trusted(g.n + 1, edges))


@dataclass(frozen=True)
class Piece:
    """A bridge of the graph relative to a cycle: either a single chord or a
    component of the off-cycle vertices with its edges to the cycle."""

    interior: tuple[int, ...]
    edges: tuple[Edge, ...]
    attachments: tuple[int, ...]


@dataclass(frozen=True)
class InterlacementGraph:
    cycle: tuple[int, ...]
    pieces: tuple[Piece, ...]
    edges: tuple[tuple[int, int], ...]

    def is_bipartite(self) -> bool:
        return is_bipartite(len(self.pieces), self.edges)


def _interlace(pos_a: list[int], pos_b: list[int]) -> bool:
    common = set(pos_a) & set(pos_b)
    if len(common) >= 3:
        return True
    for i in range(len(pos_a)):
        for j in range(i + 1, len(pos_a)):
            lo, hi = pos_a[i], pos_a[j]
            inside = any(lo < p < hi for p in pos_b)
            outside = any(p < lo or p > hi for p in pos_b)
            if inside and outside:
                return True
    return False


def interlacement_graph(g: Graph, c: Sequence[int]) -> InterlacementGraph:
    """Pieces of ``g`` relative to cycle ``c`` and their conflict graph.

    Two pieces conflict when they share three attachments or have attachments
    ``a1, b1, a2, b2`` in alternating order around the cycle.
    """
    c = _check_cycle(g, c)
    pos = {v: i for i, v in enumerate(c)}
    cyc_edges = {norm_edge(a, b) for a, b in zip(c, c[1:] + c[:1])}
    pieces: list[Piece] = []
    for u, v in g.edges:
        if u in pos and v in pos and (u, v) not in cyc_edges:
            pieces.append(Piece((), ((u, v),), tuple(sorted((u, v), key=pos.get))))
    seen: set[int] = set()
    for s in range(g.n):
        if s in pos or s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in pos and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        pedges = sorted({norm_edge(u, w) for u in comp for w in g.adj[u]})
        att = sorted({w for u in comp for w in g.adj[u] if w in pos}, key=pos.get)
        pieces.append(Piece(tuple(sorted(comp)), tuple(pedges), tuple(att)))
    positions = [[pos[a] for a in p.attachments] for p in pieces]
    conflicts = tuple((i, j) for i in range(len(pieces)) for j in range(i + 1, len(pieces))
                      if _interlace(positions[i], positions[j]))
    return InterlacementGraph(tuple(c), tuple(pieces), conflicts)


def euler_girth_reject(n: int, m: int, g: int | float) -> bool:
    """True iff ``m/n > g/(g-2)``: no planar graph with girth at least ``g`` has
    this many edges."""
    if g == math.inf:
        return m > n
    if g < 3:
        raise ValueError("girth bound must be at least 3")
    return Fraction(m, n) > Fraction(int(g), int(g) - 2)
