from __future__ import annotations

from collections import Counter

import networkx as nx
import pytest

from oracles import to_nx
from stringlab.families import (BLUE, BLUE_APEX, JEWEL, RED, RED_APEX, REGISTRY, WHITE, LcfSpec, antiprism,
                                apexes_of, heawood, jewel_of, kt3, kt3_variants, lcf, lcf_face_cycles,
                                lcf_nonpath_matching, lcf_path_edges, moebius_ladder, named, necklace,
                                necklace_hat, petersen, sm10, sub1_k33)
from stringlab.graph import GraphError, contract_matching, girth, is_isomorphic
from stringlab.planarity import is_planar


def simple_cycles_within(g, allowed):
    h = to_nx(g).subgraph([v for v in range(g.n) if g.labels.get(v) in allowed])
    return [c for c in nx.simple_cycles(h) if len(c) >= 3]


class TestNecklace:
    def test_counts(self):
        assert necklace(14).n == 48
        assert necklace(1).n == 9
        for i in range(1, 8):
            g = necklace(i)
            assert g.n == 3 * i + 6
            assert girth(g) == 4
            assert Counter(g.labels.values())[JEWEL] == 1

    def test_unique_monochromatic_cycles(self):
        for i in range(1, 7):
            g = necklace(i)
            assert len(simple_cycles_within(g, {RED, WHITE})) == 1
            assert len(simple_cycles_within(g, {BLUE, WHITE})) == 1

    def test_links_are_four_cycles_on_shared_terminals(self):
        g = necklace(3)
        for j in range(1, 4):
            a, red, blue, b = 3 * j - 3, 3 * j - 2, 3 * j - 1, 3 * j
            assert g.labels[red] == RED and g.labels[blue] == BLUE
            assert g.labels[a] == g.labels[b] == WHITE
            assert not g.has_edge(a, b)
            assert all(g.has_edge(x, y) for x, y in [(a, red), (red, b), (a, blue), (blue, b)])

    def test_pendant_is_subdivided_claw(self):
        g = necklace(2)
        jewel = jewel_of(g)
        assert g.degree(jewel) == 1
        centre = next(v for v in range(g.n) if g.degree(v) == 3 and g.labels[v] == WHITE
                      and all(g.labels[w] == WHITE for w in g.adj[v]) and v > 6)
        assert sorted(g.degree(w) for w in g.adj[centre]) == [2, 2, 2]

    def test_errors(self):
        with pytest.raises(GraphError):
            necklace(0)
        with pytest.raises(GraphError):
            necklace_hat(0)


class TestNecklaceHat:
    def test_counts(self):
        g = necklace_hat(3)
        assert (g.n, g.m) == (17, 26)
        for i in range(1, 11):
            g = necklace_hat(i)
            assert (g.n, g.m) == (3 * i + 8, 6 * i + 8)

    def test_degrees(self):
        for i in range(1, 11):
            g = necklace_hat(i)
            ra, ba = apexes_of(g)
            assert g.labels[ra] == RED_APEX and g.labels[ba] == BLUE_APEX
            assert g.degree(ra) == g.degree(ba) == i + 1
            assert g.degree(jewel_of(g)) == 3

    def test_near_planar(self):
        for i in range(1, 11):
            g = necklace_hat(i)
            _, ba = apexes_of(g)
            assert is_planar(g.without_edges([(ba, jewel_of(g))]))

    def test_hat_itself_is_not_planar(self):
        for i in (1, 3, 5):
            assert not is_planar(necklace_hat(i))


class TestLcf:
    def test_heawood_and_mk(self):
        g = lcf(LcfSpec((5, -5), 7))
        assert (g.n, g.m, girth(g)) == (14, 21, 6)
        assert nx.is_isomorphic(to_nx(g), nx.heawood_graph())
        mk = lcf(LcfSpec((5, -5), 8))
        assert nx.is_isomorphic(to_nx(mk), nx.LCF_graph(16, [5, -5], 8))
        assert is_isomorphic(heawood(), named("lcf", "5,-5", "7"))

    def test_cubic_girth_six(self):
        for n in range(7, 13):
            g = lcf(LcfSpec((5, -5), n))
            assert g.n == 2 * n and all(d == 3 for d in g.degrees())
            assert girth(g) == 6

    def test_matches_networkx_lcf(self):
        for jumps, rep in [((3, -3), 4), ((5, -5), 9), ((2,), 5)]:
            try:
                g = lcf(LcfSpec(jumps, rep))
            except GraphError:
                continue
            expected = nx.LCF_graph(len(jumps) * rep, list(jumps), rep)
            assert nx.is_isomorphic(to_nx(g), expected)

    def test_errors(self):
        with pytest.raises(GraphError):
            LcfSpec((0,), 4)
        with pytest.raises(GraphError):
            LcfSpec((9, -9), 4)
        with pytest.raises(GraphError):
            lcf(LcfSpec((1, -1), 4))
        with pytest.raises(GraphError):
            lcf(LcfSpec((3, 4), 4))
        with pytest.raises(GraphError):
            lcf_nonpath_matching(LcfSpec((3, -3), 8))
        with pytest.raises(GraphError):
            lcf_nonpath_matching(LcfSpec((5, -5), 6))

    def test_parse(self):
        assert LcfSpec.parse("[5,-5]", 8) == LcfSpec((5, -5), 8)
        assert LcfSpec.parse("5,-5", 8).n == 16


class TestLcfMatching:
    def test_contractions(self):
        for n in (8, 10, 12):
            spec = LcfSpec((5, -5), n)
            m = lcf_nonpath_matching(spec)
            assert len(m) == n and m.cubic
            h = contract_matching(lcf(spec), m)
            assert is_planar(h)
            assert is_isomorphic(h, antiprism(n // 2))

    def test_odd_repeats_do_not_planarize(self):
        spec = LcfSpec((5, -5), 7)
        assert not is_planar(contract_matching(lcf(spec), lcf_nonpath_matching(spec)))

    def test_nonpath_edges_join_forward_to_backward(self):
        spec = LcfSpec((5, -5), 8)
        g = lcf(spec)
        for u, v in lcf_nonpath_matching(spec):
            assert g.has_edge(u, (u + 5) % g.n) and g.has_edge(v, (v - 5) % g.n)

    def test_path_edges_close_into_one_or_three_cycles(self):
        counts = {}
        for n in range(7, 16):
            spec = LcfSpec((5, -5), n)
            h = nx.Graph(list(lcf_path_edges(spec)))
            assert h.number_of_nodes() == 2 * n
            assert all(d == 2 for _, d in h.degree())
            counts[n] = nx.number_connected_components(h)
        assert set(counts.values()) == {1, 3}
        # the contact cycle of the Moebius-Kantor representation is Hamiltonian
        assert counts[8] == 1


class TestFaceCycles:
    @pytest.mark.parametrize("n", [7, 8, 10])
    def test_face_cycles(self, n):
        spec = LcfSpec((5, -5), n)
        g = lcf(spec)
        cycles = lcf_face_cycles(spec)
        path_edges = lcf_path_edges(spec)
        per_edge = Counter()
        for cyc in cycles:
            assert len(cyc) == 6 and len(set(cyc)) == 6
            ring = list(zip(cyc, cyc[1:] + cyc[:1]))
            assert all(g.has_edge(a, b) for a, b in ring)
            assert sum(tuple(sorted(e)) in path_edges for e in ring) == 4
            per_edge.update(tuple(sorted(e)) for e in ring)
        # a torus embedding: every edge on exactly two faces, V - E + F = 0
        assert set(per_edge) == set(g.edges)
        assert set(per_edge.values()) == {2}
        assert g.n - g.m + len(cycles) == 0


class TestNamed:
    def test_examples(self):
        s = sm10()
        assert (s.n, s.m, girth(s)) == (15, 20, 6)
        assert sorted(Counter(s.degrees()).items()) == [(2, 5), (3, 10)]
        k = kt3()
        assert (k.n, k.m, girth(k)) == (15, 19, 3) and k.is_subcubic()
        assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())
        assert nx.is_isomorphic(to_nx(sm10()), _subdivided_rungs(5))

    def test_kt3_chord_choices_all_isomorphic(self):
        variants = kt3_variants()
        assert len(variants) == 18
        assert all(is_isomorphic(v, kt3()) for v in variants)

    def test_kt3_contains_sub1_k33(self):
        g = kt3()
        assert g.without_edges([(6, 9)]).edges == sub1_k33().edges

    def test_registry(self):
        for name, fam in REGISTRY.items():
            params = {"k": "4", "a": "2", "b": "3", "i": "2", "jumps": "5,-5", "n": "8"}
            g = named(name, *[params[p] for p in fam.params])
            assert g.n > 0
        with pytest.raises(GraphError):
            named("dodecahedron")
        with pytest.raises(GraphError):
            named("complete")
        with pytest.raises(GraphError):
            named("complete", "x")
        with pytest.raises(GraphError):
            named("cycle", "2")


def _subdivided_rungs(k):
    h = nx.cycle_graph(2 * k)
    nxt = 2 * k
    for v in range(k):
        h.add_edges_from([(v, nxt), (nxt, v + k)])
        nxt += 1
    return h
