"""Generators for the named graphs and graph families studied here."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .graph import Edge, Graph, GraphError, Matching, norm_edge, subdivide

WHITE, RED, BLUE, JEWEL = "white", "red", "blue", "jewel"
RED_APEX, BLUE_APEX = "red-apex", "blue-apex"
YELLOW = "yellow"


# -- LCF notation ------------------------------------------------------------

@dataclass(frozen=True)
class LcfSpec:
    """Hamiltonian cycle on ``len(jumps) * repeats`` vertices; vertex ``k``
    gets a chord to ``k + jumps[k % len(jumps)]``."""

    jumps: tuple[int, ...]
    repeats: int

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(int(j) for j in self.jumps))
        if not self.jumps or self.repeats < 1:
            raise GraphError("LCF notation needs at least one jump and one repeat")
        n = self.n
        for j in self.jumps:
            if j == 0 or abs(j) >= n:
                raise GraphError(f"jump {j} is invalid on {n} vertices")

    @property
    def n(self) -> int:
        return len(self.jumps) * self.repeats

    @classmethod
    def parse(cls, text: str, repeats: int) -> "LcfSpec":
        return cls(tuple(int(t) for t in text.replace("[", "").replace("]", "").split(",")), repeats)


def lcf(spec: LcfSpec) -> Graph:
    n = spec.n
    edges = {norm_edge(k, (k + 1) % n) for k in range(n)}
    if len(edges) != n:
        raise GraphError("cycle too short for a simple graph")
    chords: set[Edge] = set()
    for k in range(n):
        w = (k + spec.jumps[k % len(spec.jumps)]) % n
        e = norm_edge(k, w)
        if w == k:
            raise GraphError(f"jump at vertex {k} makes a loop")
        if e in edges:
            raise GraphError(f"chord {e} duplicates a cycle edge")
        chords.add(e)
    # each chord is listed from both ends; a consistent jump sequence pairs them
    for k in range(n):
        w = (k + spec.jumps[k % len(spec.jumps)]) % n
        back = (w + spec.jumps[w % len(spec.jumps)]) % n
        if back != k:
            raise GraphError(f"jump sequence is inconsistent at vertex {k}")
    return Graph(n, edges | chords)


def _check_five(spec: LcfSpec) -> None:
    if spec.jumps != (5, -5) or spec.repeats < 7:
        raise GraphError("expected LCF notation [5,-5]^n with n >= 7")


def lcf_nonpath_matching(spec: LcfSpec) -> Matching:
    """Cycle edges ``(2j, 2j+1)``: each joins a forward-chord vertex to the
    next backward-chord vertex."""
    _check_five(spec)
    g = lcf(spec)
    return Matching(g, tuple((2 * j, 2 * j + 1) for j in range(spec.repeats)))


def lcf_path_edges(spec: LcfSpec) -> set[Edge]:
    """Chords plus the cycle edges ``(2j+1, 2j+2)``. Locally these are three
    disjoint paths alternating +1 and +5 steps; globally they close up into
    one Hamiltonian cycle or three cycles, depending on ``n``."""
    _check_five(spec)
    g = lcf(spec)
    return set(g.edges) - set(lcf_nonpath_matching(spec).edges)


def lcf_face_cycles(spec: LcfSpec) -> list[tuple[int, ...]]:
    """The 6-cycles stepping ``+1, +1, +5, -1, -1, -5`` from each even vertex."""
    _check_five(spec)
    n = spec.n
    cycles = []
    for v in range(0, n, 2):
        cyc, x = [v], v
        for step in (1, 1, 5, -1, -1):
            x = (x + step) % n
            cyc.append(x)
        if (x - 5) % n != v:
            raise AssertionError("face pattern does not close")
        cycles.append(tuple(cyc))
    return cycles


# -- necklaces ---------------------------------------------------------------

def necklace(i: int) -> Graph:
    """``i`` links (4-cycles white-red-white-blue) sharing terminals, closed by
    a pendant: a subdivided claw whose third leaf is the jewel.

    Vertices: terminal ``t_j = 3j``; link ``j`` has red ``3j-2`` and blue
    ``3j-1``; then pendant ``3i+1..3i+5`` with the jewel last.
    """
    if i < 1:
        raise GraphError("a necklace needs at least one link")
    labels: dict[int, str] = {}
    edges: list[Edge] = []
    for j in range(1, i + 1):
        a, red, blue, b = 3 * j - 3, 3 * j - 2, 3 * j - 1, 3 * j
        labels.update({a: WHITE, b: WHITE, red: RED, blue: BLUE})
        edges += [(a, red), (red, b), (a, blue), (blue, b)]
    t_last, t_first = 3 * i, 0
    p1, centre, p2, p3, jewel = range(3 * i + 1, 3 * i + 6)
    edges += [(t_last, p1), (p1, centre), (centre, p2), (p2, t_first), (centre, p3), (p3, jewel)]
    labels.update({p1: WHITE, centre: WHITE, p2: WHITE, p3: WHITE, jewel: JEWEL})
    return Graph(3 * i + 6, edges, labels)


def necklace_hat(i: int) -> Graph:
    """Necklace plus a red apex on every red vertex and the jewel, and a blue
    apex on every blue vertex and the jewel."""
    base = necklace(i)
    red_apex, blue_apex = base.n, base.n + 1
    jewel = base.vertices_labelled(JEWEL)[0]
    extra = [(red_apex, v) for v in base.vertices_labelled(RED)] + [(red_apex, jewel)]
    extra += [(blue_apex, v) for v in base.vertices_labelled(BLUE)] + [(blue_apex, jewel)]
    labels = dict(base.labels)
    labels.update({red_apex: RED_APEX, blue_apex: BLUE_APEX})
    return Graph(base.n + 2, list(base.edges) + extra, labels)


def jewel_of(g: Graph) -> int:
    return g.vertices_labelled(JEWEL)[0]


def apexes_of(g: Graph) -> tuple[int, int]:
    return g.vertices_labelled(RED_APEX)[0], g.vertices_labelled(BLUE_APEX)[0]


# -- named graphs ------------------------------------------------------------

def complete(k: int) -> Graph:
    if k < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("part sizes must be non-negative")
    return Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(k, [(v, (v + 1) % k) for v in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph(k, [(v, v + 1) for v in range(k - 1)])


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


def heawood() -> Graph:
    return lcf(LcfSpec((5, -5), 7))


def moebius_ladder(k: int) -> Graph:
    """Cycle on ``2k`` vertices plus the ``k`` long diagonals (rungs)."""
    if k < 2:
        raise GraphError("a Moebius ladder needs at least two rungs")
    n = 2 * k
    return Graph(n, [(v, (v + 1) % n) for v in range(n)] + [(v, v + k) for v in range(k)])


def antiprism(k: int) -> Graph:
    """Two ``k``-cycles ``a_i = i`` and ``b_i = k+i`` with ``a_i b_i`` and
    ``a_i b_{i+1}``."""
    if k < 3:
        raise GraphError("an antiprism needs k >= 3")
    edges = []
    for v in range(k):
        edges += [(v, (v + 1) % k), (k + v, k + (v + 1) % k), (v, k + v), (v, k + (v + 1) % k)]
    return Graph(2 * k, edges)


def sm10() -> Graph:
    """The 10-vertex Moebius ladder with each of its five rungs subdivided:
    cycle ``0..9`` and rung paths ``i - (10+i) - (i+5)``."""
    edges = [(v, (v + 1) % 10) for v in range(10)]
    for v in range(5):
        edges += [(v, 10 + v), (10 + v, v + 5)]
    return Graph(15, edges)


def sub1_k33() -> Graph:
    return subdivide(complete_bipartite(3, 3), 1)


def sub1_k5() -> Graph:
    return subdivide(complete(5), 1)


def _kt3_from(pair: tuple[Edge, Edge]) -> Graph:
    base = sub1_k33()
    # subdivision vertices are appended in sorted edge order
    index = {e: 6 + i for i, e in enumerate(sorted(complete_bipartite(3, 3).edges))}
    s1, s2 = index[pair[0]], index[pair[1]]
    return base.with_edges([(s1, s2)])


def kt3_variants() -> list[Graph]:
    """KT3 built from every pair of K33 edges that share a branch vertex."""
    k33 = sorted(complete_bipartite(3, 3).edges)
    pairs = [(e, f) for e, f in itertools.combinations(k33, 2) if set(e) & set(f)]
    return [_kt3_from(p) for p in pairs]


def kt3() -> Graph:
    """1-subdivision of K33 plus an edge between the subdivision vertices of
    ``b0-a0`` and ``b0-a1``, which closes a triangle with ``b0``.

    Branch vertices 0..2 are ``a0..a2``, 3..5 are ``b0..b2``. The triangle is
    red, the other branch vertices blue, and the other subdivision vertices
    yellow.
    """
    g = _kt3_from(((0, 3), (1, 3)))
    s1, s2 = 6 + 0, 6 + 3  # sorted K33 edges: (0,3),(0,4),(0,5),(1,3),...
    labels = {}
    for v in range(g.n):
        if v in (3, s1, s2):
            labels[v] = RED
        elif v < 6:
            labels[v] = BLUE
        else:
            labels[v] = YELLOW
    return Graph._trusted(g.n, set(g.edges), labels)


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    build: Callable[..., Graph]
    help: str


def _lcf_family(jumps: str, repeats: str) -> Graph:
    return lcf(LcfSpec.parse(jumps, int(repeats)))


REGISTRY: dict[str, Family] = {f.name: f for f in [
    Family("petersen", (), petersen, "Petersen graph"),
    Family("heawood", (), heawood, "Heawood graph, LCF [5,-5]^7"),
    Family("sm10", (), sm10, "10-vertex Moebius ladder with subdivided rungs"),
    Family("kt3", (), kt3, "1-subdivided K33 plus a triangle-closing edge"),
    Family("sub1k33", (), sub1_k33, "1-subdivision of K33"),
    Family("sub1k5", (), sub1_k5, "1-subdivision of K5"),
    Family("moebius_ladder", ("k",), lambda k: moebius_ladder(int(k)), "Moebius ladder with k rungs"),
    Family("antiprism", ("k",), lambda k: antiprism(int(k)), "k-antiprism"),
    Family("complete", ("k",), lambda k: complete(int(k)), "complete graph K_k"),
    Family("complete_bipartite", ("a", "b"), lambda a, b: complete_bipartite(int(a), int(b)),
           "complete bipartite graph K_{a,b}"),
    Family("cycle", ("k",), lambda k: cycle(int(k)), "cycle C_k"),
    Family("path", ("k",), lambda k: path(int(k)), "path on k vertices"),
    Family("lcf", ("jumps", "n"), _lcf_family, "LCF graph, e.g. 'lcf 5,-5 8'"),
    Family("necklace", ("i",), lambda i: necklace(int(i)), "necklace with i links"),
    Family("necklace_hat", ("i",), lambda i: necklace_hat(int(i)), "necklace with both apexes"),
]}


def named(family: str, *params) -> Graph:
    try:
        fam = REGISTRY[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(sorted(REGISTRY))}") from None
    if len(params) != len(fam.params):
        raise GraphError(f"{family} takes {len(fam.params)} parameter(s): {' '.join(fam.params) or 'none'}")
    try:
        return fam.build(*params)
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameters for {family}: {exc}") from None
