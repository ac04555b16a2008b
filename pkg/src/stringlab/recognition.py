"""String-graph recognition by searching for planarizing matchings.

A graph is a string graph whenever contracting some matching leaves a planar
graph. For subcubic graphs the converse holds with the matching restricted to
cubic edges (both endpoints of degree three), so exhausting the cubic
matchings decides the question exactly.
"""

from __future__ import annotations

import enum
import json
import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Edge, Graph, Matching, contraction_map, girth, norm_edge
from .planarity import euler_girth_reject, is_planar

DEFAULT_BUDGET = 10 ** 7
BUDGET_ENV = "STRINGLAB_BUDGET"


class BudgetExceeded(RuntimeError):
    """The search would examine more matchings than the configured budget."""

    def __init__(self, budget: int, examined: int):
        super().__init__(f"matching budget of {budget} exhausted after {examined} matchings")
        self.budget = budget
        self.examined = examined


class Status(str, enum.Enum):
    STRING = "String"
    NONSTRING = "NonString"
    UNKNOWN = "Unknown"


class Rule(str, enum.Enum):
    PLANAR = "planar"
    DEGREE_TWO = "degree-two-endpoints"
    MATCHING = "planarizing-matching"
    CUBIC_EXHAUSTION = "cubic-exhaustion"
    INCONCLUSIVE = "no-matching-found"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Matching | None
    matchings_examined: int
    rule: Rule

    def __post_init__(self):
        if (self.status is Status.STRING) != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the String verdicts")

    @property
    def is_string(self) -> bool:
        return self.status is Status.STRING

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness_edges": None if self.witness is None else [list(e) for e in self.witness],
            "matchings_examined": self.matchings_examined,
            "rule": self.rule.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def _matchings(edges: Sequence[Edge]) -> Iterator[tuple[Edge, ...]]:
    """All matchings drawn from ``edges``: by size, then lexicographically by
    position in ``edges``."""
    k_max = _max_matching_size(edges)
    chosen: list[Edge] = []
    used: set[int] = set()

    def extend(start: int, left: int) -> Iterator[tuple[Edge, ...]]:
        if left == 0:
            yield tuple(chosen)
            return
        for i in range(start, len(edges) - left + 1):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            used.update((u, v))
            yield from extend(i + 1, left - 1)
            chosen.pop()
            used.difference_update((u, v))

    for k in range(k_max + 1):
        yield from extend(0, k)


def _max_matching_size(edges: Sequence[Edge]) -> int:
    best = 0
    used: set[int] = set()

    def go(i: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if i == len(edges) or size + (len(edges) - i) <= best:
            return
        u, v = edges[i]
        if u not in used and v not in used:
            used.update((u, v))
            go(i + 1, size + 1)
            used.difference_update((u, v))
        go(i + 1, size)

    if len(edges) > 40:
        # greedy bound; sizes past the true maximum simply yield nothing
        return len({x for e in edges for x in e}) // 2
    go(0, 0)
    return best


def enumerate_cubic_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching of cubic edges, the empty one first, each exactly once."""
    for edges in _matchings(g.cubic_edges()):
        yield Matching(g, frozenset(edges))


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    for edges in _matchings(sorted(g.edges)):
        yield Matching(g, frozenset(edges))


@dataclass
class SearchResult:
    matching: Matching | None
    examined: int


def _search(g: Graph, cubic_only: bool, budget: int | None) -> SearchResult:
    if budget is None:
        budget = default_budget()
    if is_planar(g):
        return SearchResult(Matching(g, frozenset()), 1)
    edges = g.cubic_edges() if cubic_only else sorted(g.edges)
    gi = girth(g)
    bound = 3 if gi == math.inf else max(3, math.ceil(gi / 2))
    examined = 1
    for size_k in _matchings(edges):
        if not size_k:
            continue  # the empty matching was the planarity test above
        if examined >= budget:
            raise BudgetExceeded(budget, examined)
        examined += 1
        h = _contract(g, size_k)
        if h.n >= 3 and euler_girth_reject(h.n, h.m, bound):
            continue
        if is_planar(h):
            return SearchResult(Matching(g, frozenset(size_k)), examined)
    return SearchResult(None, examined)


def _contract(g: Graph, matching: Sequence[Edge]) -> Graph:
    vmap, n2 = contraction_map(g.n, matching)
    edges = {norm_edge(vmap[u], vmap[v]) for u, v in g.edges if vmap[u] != vmap[v]}
    return Graph._trusted(n2, edges)


def find_planarizing_matching(g: Graph, cubic_only: bool = True,
                              budget: int | None = None) -> Matching | None:
    """First matching ``M`` (cubic if ``cubic_only``) with ``G/M`` planar, in
    order of size then lexicographic order, or None."""
    return _search(g, cubic_only, budget).matching


def recognize_sufficient(g: Graph, budget: int | None = None) -> Matching | None:
    """Any planarizing matching, cubic or not. Useful for graphs of arbitrary
    degree, where finding one still proves the graph is a string graph."""
    return _search(g, False, budget).matching


def every_edge_has_degree_two_end(g: Graph) -> bool:
    return all(g.degree(u) == 2 or g.degree(v) == 2 for u, v in g.edges)


def recognize(g: Graph, budget: int | None = None, cubic_only: bool | None = None) -> Verdict:
    """Decide whether ``g`` is a string graph.

    When every edge has an endpoint of degree two, the answer is planarity of
    ``g`` itself, at any maximum degree. Otherwise search planarizing
    matchings: only cubic ones for subcubic graphs (an exact decision), all
    matchings otherwise (a failed search is then ``Unknown``).
    ``cubic_only`` forces the restriction either way.
    """
    if g.m and every_edge_has_degree_two_end(g):
        if is_planar(g):
            return Verdict(Status.STRING, Matching(g, frozenset()), 1, Rule.DEGREE_TWO)
        return Verdict(Status.NONSTRING, None, 0, Rule.DEGREE_TWO)
    subcubic = g.is_subcubic()
    restrict = subcubic if cubic_only is None else cubic_only
    res = _search(g, restrict, budget)
    if res.matching is not None:
        rule = Rule.PLANAR if not res.matching.edges else Rule.MATCHING
        return Verdict(Status.STRING, res.matching, res.examined, rule)
    if subcubic:
        return Verdict(Status.NONSTRING, None, res.examined, Rule.CUBIC_EXHAUSTION)
    return Verdict(Status.UNKNOWN, None, res.examined, Rule.INCONCLUSIVE)
