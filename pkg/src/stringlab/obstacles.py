"""Obstacle certification: minimality in the induced-minor order, the cycle
colouring problem that decides which necklaces with apexes are string graphs,
and the structural audit behind the girth bound for subcubic obstacles."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .graph import Edge, Graph, GraphError, density, girth, norm_edge, one_step_minors
from .planarity import cycle_exterior_planar
from .recognition import BudgetExceeded, Status, Verdict, recognize

R, B = "R", "B"


# -- minimality --------------------------------------------------------------

class MinorBudgetExceeded(BudgetExceeded):
    def __init__(self, tag: tuple, inner: BudgetExceeded):
        super().__init__(inner.budget, inner.examined)
        self.tag = tag
        self.args = (f"recognition of minor {format_tag(tag)} exhausted the budget of "
                     f"{inner.budget} matchings",)


def format_tag(tag: tuple) -> str:
    op, target = tag
    if op == "delete":
        return f"delete {target}"
    return f"contract {target[0]}-{target[1]}"


@dataclass(frozen=True)
class MinimalityReport:
    graph_id: str
    self_verdict: Verdict
    minor_results: tuple[tuple[tuple, Verdict], ...]
    n: int = 0
    m: int = 0

    @property
    def is_minimal_obstacle(self) -> bool | None:
        """True or False when decided; None when an Unknown verdict leaves it open."""
        if self.self_verdict.status is Status.STRING:
            return False
        if any(v.status is Status.NONSTRING for _, v in self.minor_results):
            return False
        if self.self_verdict.status is Status.UNKNOWN:
            return None
        if any(v.status is Status.UNKNOWN for _, v in self.minor_results):
            return None
        return True

    def undetermined_minors(self) -> list[tuple]:
        return [tag for tag, v in self.minor_results if v.status is Status.UNKNOWN]

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "n": self.n,
            "m": self.m,
            "self": self.self_verdict.to_dict(),
            "minors": [{"operation": format_tag(tag), "verdict": v.to_dict()}
                       for tag, v in self.minor_results],
            "is_minimal_obstacle": self.is_minimal_obstacle,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def certify_minimal_obstacle(g: Graph, graph_id: str = "G",
                             budget: int | None = None) -> MinimalityReport:
    """Recognize ``g`` and every graph one vertex deletion or one edge
    contraction away. String graphs are closed under induced minors, so this
    depth suffices. Minors of maximum degree four get the unrestricted
    matching search; a failure there is Unknown and is reported as such."""
    self_verdict = recognize(g, budget=budget)
    results = []
    for tag, minor in one_step_minors(g):
        try:
            results.append((tag, recognize(minor, budget=budget)))
        except BudgetExceeded as exc:
            raise MinorBudgetExceeded(tag, exc) from None
    return MinimalityReport(graph_id, self_verdict, tuple(results), g.n, g.m)


# -- the cycle colouring problem ---------------------------------------------

@dataclass(frozen=True)
class HiInstance:
    """A cycle ``v_1^1 v_1^2 ... v_n^1 v_n^2`` (vertex ``2(j-1)+k-1`` is
    ``v_j^k``), a colouring in ``{R, B}`` and the non-cycle edges.

    Extra edges may join cycle neighbours; they then run parallel to a cycle
    edge.
    """

    pair_count: int
    coloring: tuple[str, ...]
    extra_edges: tuple[Edge, ...] = ()

    @property
    def cycle(self) -> tuple[int, ...]:
        return tuple(range(2 * self.pair_count))

    def color_class(self, colour: str) -> list[int]:
        return [v for v, c in enumerate(self.coloring) if c == colour]

    def to_dict(self) -> dict:
        return {"pair_count": self.pair_count, "coloring": "".join(self.coloring),
                "extra_edges": [list(e) for e in self.extra_edges]}


def _connected(vertices: Sequence[int], edges: Iterable[Edge]) -> bool:
    if not vertices:
        return True
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        if u in adj and v in adj:
            adj[u].add(v)
            adj[v].add(u)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def exterior_drawable(n_pairs: int, extra: Iterable[Edge]) -> bool:
    """Condition 6: the cycle plus ``extra`` drawn with every extra edge
    outside the cycle. Extra edges parallel to a cycle edge are subdivided."""
    size = 2 * n_pairs
    extra = sorted(set(norm_edge(*e) for e in extra))
    if size < 3 or not extra:
        return True
    cyc = {norm_edge(v, (v + 1) % size) for v in range(size)}
    edges = set(cyc)
    nxt = size
    for e in extra:
        if e in cyc:
            edges.add((e[0], nxt))
            edges.add((e[1], nxt))
            nxt += 1
        else:
            edges.add(e)
    return cycle_exterior_planar(Graph._trusted(nxt, edges), list(range(size)))


def hi_conditions(inst: HiInstance) -> dict[int, bool]:
    """Truth value of each of the six conditions."""
    n = inst.pair_count
    size = 2 * n
    extra = [norm_edge(*e) for e in inst.extra_edges]
    c1 = n >= 1 and len(inst.coloring) == size and all(c in (R, B) for c in inst.coloring)
    c2 = c1 and all(0 <= u < size and 0 <= v < size and u != v for u, v in extra)
    if not c2:
        return {1: c1, 2: c2, 3: False, 4: False, 5: False, 6: False}
    col = inst.coloring
    c3 = all(col[2 * j] != col[2 * j + 1] for j in range(n))
    c4 = all(col[u] == col[v] for u, v in extra)
    c5 = _connected(inst.color_class(R), extra) and _connected(inst.color_class(B), extra)
    c6 = exterior_drawable(n, extra)
    return {1: c1, 2: c2, 3: c3, 4: c4, 5: c5, 6: c6}


def hi_valid(inst: HiInstance) -> bool:
    return all(hi_conditions(inst).values())


def colorings(n: int) -> Iterator[tuple[str, ...]]:
    """Colourings meeting condition 3 with ``v_1^1`` red; swapping the two
    colours maps solutions to solutions, so this loses nothing."""
    for bits in itertools.product((0, 1), repeat=n - 1):
        col = [R, B]
        for b in bits:
            col += [R, B] if b == 0 else [B, R]
        yield tuple(col)


def spanning_trees(vertices: Sequence[int]) -> Iterator[tuple[Edge, ...]]:
    """Spanning trees of the complete graph on ``vertices``, deterministic order."""
    k = len(vertices)
    if k <= 1:
        yield ()
        return
    pairs = list(itertools.combinations(vertices, 2))
    for combo in itertools.combinations(pairs, k - 1):
        if _connected(list(vertices), combo):
            yield combo


MAX_SEARCH_PAIRS = 7


def hi_witness_search(i: int) -> HiInstance | None:
    """Search colourings and extra edges meeting all six conditions with
    ``i`` pairs on the cycle.

    Condition 5 needs a spanning tree of each colour class, and condition 6
    only gets harder as edges are added, so it is enough to try one spanning
    tree per class.
    """
    if i < 1:
        raise GraphError("pair count must be positive")
    if i > MAX_SEARCH_PAIRS:
        raise GraphError(f"search is limited to at most {MAX_SEARCH_PAIRS} pairs")
    for col in colorings(i):
        reds = [v for v, c in enumerate(col) if c == R]
        blues = [v for v, c in enumerate(col) if c == B]
        red_ok = [t for t in spanning_trees(reds) if exterior_drawable(i, t)]
        blue_ok = [t for t in spanning_trees(blues) if exterior_drawable(i, t)]
        for tr in red_ok:
            for tb in blue_ok:
                if exterior_drawable(i, tr + tb):
                    inst = HiInstance(i, col, tuple(sorted(tr + tb)))
                    assert hi_valid(inst)
                    return inst
    return None


def hi_witness_brute_force(i: int) -> HiInstance | None:
    """Unpruned reference search over every set of monochromatic pairs."""
    for col in colorings(i):
        mono = [e for e in itertools.combinations(range(2 * i), 2) if col[e[0]] == col[e[1]]]
        for r in range(len(mono) + 1):
            for extra in itertools.combinations(mono, r):
                inst = HiInstance(i, col, extra)
                if hi_valid(inst):
                    return inst
    return None


def _forests(vertices: Sequence[int]) -> Iterator[tuple[Edge, ...]]:
    pairs = list(itertools.combinations(vertices, 2))
    for r in range(len(vertices)):
        for combo in itertools.combinations(pairs, r):
            if _is_forest(vertices, combo):
                yield combo


def _is_forest(vertices: Sequence[int], edges: Sequence[Edge]) -> bool:
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def hi_near_misses(i: int) -> Iterator[HiInstance]:
    """Instances failing only connectivity that cannot be improved: both
    classes are forests, the drawing condition holds, and every monochromatic
    edge joining two components of its class breaks the drawing condition."""
    for col in colorings(i):
        reds = [v for v, c in enumerate(col) if c == R]
        blues = [v for v, c in enumerate(col) if c == B]
        red_ok = [f for f in _forests(reds) if exterior_drawable(i, f)]
        blue_ok = [f for f in _forests(blues) if exterior_drawable(i, f)]
        for fr in red_ok:
            for fb in blue_ok:
                extra = tuple(sorted(fr + fb))
                inst = HiInstance(i, col, extra)
                conds = hi_conditions(inst)
                if conds[5] or not conds[6]:
                    continue
                if all(not exterior_drawable(i, extra + (e,)) for e in _joining_edges(inst)):
                    yield inst


def hi_near_miss(i: int, shape: Sequence[int] | None = None) -> HiInstance | None:
    """First near miss, optionally one whose two colour classes both have the
    component sizes ``shape``."""
    want = None if shape is None else sorted(shape, reverse=True)
    for inst in hi_near_misses(i):
        if want is None or (class_components(inst, R) == want and class_components(inst, B) == want):
            return inst
    return None


def _joining_edges(inst: HiInstance) -> list[Edge]:
    out = []
    for colour in (R, B):
        verts = inst.color_class(colour)
        own = tuple(f for f in inst.extra_edges if inst.coloring[f[0]] == colour)
        for e in itertools.combinations(verts, 2):
            if _is_forest(verts, own + (e,)):
                out.append(e)
    return out


def class_components(inst: HiInstance, colour: str) -> list[int]:
    """Component sizes of one colour class under the extra edges, descending."""
    verts = inst.color_class(colour)
    remaining = set(verts)
    sizes = []
    while remaining:
        s = min(remaining)
        comp = [s]
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for a, b in inst.extra_edges:
                for x, y in ((a, b), (b, a)):
                    if x == u and y in remaining and y not in seen:
                        seen.add(y)
                        stack.append(y)
        remaining -= seen
        sizes.append(len(seen))
    return sorted(sizes, reverse=True)


def interleaved_opposite_edges(inst: HiInstance) -> list[tuple[Edge, Edge]]:
    """Pairs of extra edges of different colours whose ends alternate around
    the cycle. A valid instance has none."""
    out = []
    col = inst.coloring
    for e, f in itertools.combinations(sorted(set(inst.extra_edges)), 2):
        if col[e[0]] == col[f[0]]:
            continue
        a, b = e
        inside = [a < x < b for x in f]
        if inside[0] != inside[1]:
            out.append((e, f))
    return out


# -- girth bound audit -------------------------------------------------------

@dataclass(frozen=True)
class GirthAudit:
    connected: bool
    no_low_degree: bool
    no_adjacent_degree_two: bool
    degree_two_deletions_connected: bool
    girth: int | float
    density: Fraction
    failures: tuple[str, ...] = field(default=())

    @property
    def preconditions_hold(self) -> bool:
        return not self.failures

    @property
    def girth_below_30(self) -> bool:
        return self.girth < 30

    @property
    def may_be_obstacle(self) -> bool:
        """Passes every structural necessary condition and the girth bound."""
        return self.preconditions_hold and self.girth_below_30

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "no_degree_0_or_1": self.no_low_degree,
            "no_adjacent_degree_2": self.no_adjacent_degree_two,
            "degree_2_deletions_connected": self.degree_two_deletions_connected,
            "girth": None if self.girth == float("inf") else self.girth,
            "density": f"{self.density.numerator}/{self.density.denominator}",
            "girth_below_30": self.girth_below_30,
            "preconditions_hold": self.preconditions_hold,
            "failures": list(self.failures),
        }


def girth_bound_audit(g: Graph) -> GirthAudit:
    """Structural facts every subcubic obstacle satisfies, plus its girth and
    density. A graph of girth 30 or more cannot be a subcubic obstacle."""
    if not g.is_subcubic():
        raise GraphError("girth audit applies to subcubic graphs only")
    if g.n == 0:
        raise GraphError("girth audit needs a non-empty graph")
    connected = g.is_connected()
    no_low = all(d >= 2 for d in g.degrees())
    no_adj = not any(g.degree(u) == 2 and g.degree(v) == 2 for u, v in g.edges)
    deg2_ok = all(g.delete_vertex(v).is_connected() for v in range(g.n) if g.degree(v) == 2)
    failures = []
    if not connected:
        failures.append("disconnected")
    if not no_low:
        failures.append("vertex of degree 0 or 1")
    if not no_adj:
        failures.append("two adjacent degree-2 vertices")
    if not deg2_ok:
        failures.append("deleting a degree-2 vertex disconnects the graph")
    return GirthAudit(connected, no_low, no_adj, deg2_ok, girth(g), density(g), tuple(failures))
