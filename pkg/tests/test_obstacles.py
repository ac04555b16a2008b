from __future__ import annotations

import itertools
import json

import pytest

from oracles import brute_force_string
from stringlab.families import complete, complete_bipartite, cycle, heawood, kt3, petersen, sm10, sub1_k33
from stringlab.graph import Graph, GraphError, one_step_minors, subdivide
from stringlab.obstacles import (MAX_SEARCH_PAIRS, HiInstance, MinimalityReport, certify_minimal_obstacle,
                                 class_components, colorings, exterior_drawable, format_tag, girth_bound_audit,
                                 hi_conditions, hi_near_miss, hi_valid, hi_witness_brute_force,
                                 hi_witness_search, interleaved_opposite_edges, spanning_trees,
                                 _joining_edges)
from stringlab.planarity import cycle_exterior_planar
from stringlab.recognition import Rule, Status, Verdict, recognize


class TestCertify:
    @pytest.mark.parametrize("build", [sub1_k33, kt3, sm10])
    def test_known_obstacles(self, build):
        g = build()
        report = certify_minimal_obstacle(g, build.__name__)
        assert report.is_minimal_obstacle is True
        assert len(report.minor_results) == g.n + g.m
        assert all(v.status is Status.STRING for _, v in report.minor_results)

    def test_minor_verdicts_confirmed_by_oracle(self):
        for g in (kt3(), sm10()):
            report = certify_minimal_obstacle(g)
            minors = dict(one_step_minors(g))
            for tag, v in report.minor_results:
                assert v.status is Status.STRING
                assert brute_force_string(minors[tag])

    def test_petersen_is_not(self):
        report = certify_minimal_obstacle(petersen(), "petersen")
        assert report.self_verdict.status is Status.STRING
        assert report.is_minimal_obstacle is False

    def test_non_minimal_nonstring(self):
        # sub1(K33) with a pendant vertex: non-string, but deleting the pendant
        # leaves a non-string minor
        base = sub1_k33()
        g = Graph(base.n + 1, list(base.edges) + [(base.n - 1, base.n)])
        report = certify_minimal_obstacle(g)
        assert report.self_verdict.status is Status.NONSTRING
        assert report.is_minimal_obstacle is False

    def test_report_json(self):
        report = certify_minimal_obstacle(kt3(), "kt3")
        data = json.loads(report.to_json())
        assert data["graph"] == "kt3" and data["is_minimal_obstacle"] is True
        assert data["n"] == 15 and data["m"] == 19
        assert len(data["minors"]) == 34
        assert data["minors"][0]["operation"] == "delete 0"
        assert data["minors"][-1]["operation"].startswith("contract ")

    def test_unknown_minor_makes_it_undetermined(self):
        unknown = Verdict(Status.UNKNOWN, None, 5, Rule.INCONCLUSIVE)
        non = Verdict(Status.NONSTRING, None, 3, Rule.CUBIC_EXHAUSTION)
        string = recognize(complete(3))
        r = MinimalityReport("x", non, ((("delete", 0), unknown), (("delete", 1), string)))
        assert r.is_minimal_obstacle is None and r.undetermined_minors() == [("delete", 0)]
        r = MinimalityReport("x", non, ((("delete", 0), unknown), (("delete", 1), non)))
        assert r.is_minimal_obstacle is False
        r = MinimalityReport("x", non, ((("delete", 1), string),))
        assert r.is_minimal_obstacle is True

    def test_format_tag(self):
        assert format_tag(("delete", 3)) == "delete 3"
        assert format_tag(("contract", (1, 4))) == "contract 1-4"

    def test_heawood(self):
        report = certify_minimal_obstacle(heawood(), "heawood")
        assert report.is_minimal_obstacle is True


class TestHiConditions:
    def test_witnesses(self):
        w1, w2 = hi_witness_search(1), hi_witness_search(2)
        assert w1 is not None and hi_valid(w1)
        assert w2 is not None and hi_valid(w2)
        assert hi_witness_search(3) is None
        assert hi_witness_search(4) is None

    def test_witness_for_two_pairs_uses_parallel_edges(self):
        w = hi_witness_search(2)
        cyc = {tuple(sorted((v, (v + 1) % 4))) for v in range(4)}
        assert any(tuple(sorted(e)) in cyc for e in w.extra_edges)

    @pytest.mark.parametrize("i", [1, 2, 3])
    def test_pruned_search_matches_brute_force(self, i):
        assert (hi_witness_search(i) is None) == (hi_witness_brute_force(i) is None)

    def test_witnesses_have_no_interleaved_opposite_edges(self):
        for i in (1, 2):
            assert interleaved_opposite_edges(hi_witness_search(i)) == []

    def test_condition_checks(self):
        ok = HiInstance(2, ("R", "B", "B", "R"), ((0, 3), (1, 2)))
        assert hi_conditions(ok) == {k: True for k in range(1, 7)}
        bad3 = HiInstance(2, ("R", "R", "B", "B"), ((0, 1), (2, 3)))
        assert not hi_conditions(bad3)[3]
        bad4 = HiInstance(2, ("R", "B", "B", "R"), ((0, 1),))
        assert not hi_conditions(bad4)[4] and not hi_conditions(bad4)[5]
        bad2 = HiInstance(2, ("R", "B", "B", "R"), ((0, 9),))
        assert not hi_conditions(bad2)[2]
        bad1 = HiInstance(2, ("R", "B", "X", "R"), ())
        assert not hi_conditions(bad1)[1]

    def test_crossing_chords_violate_condition_six(self):
        inst = HiInstance(2, ("R", "B", "R", "B"), ((0, 2), (1, 3)))
        conds = hi_conditions(inst)
        assert conds[5] and not conds[6]
        assert interleaved_opposite_edges(inst) == [((0, 2), (1, 3))]

    def test_colorings(self):
        cols = list(colorings(3))
        assert len(cols) == 4
        assert all(c[0] == "R" and all(c[2 * j] != c[2 * j + 1] for j in range(3)) for c in cols)

    def test_spanning_trees_count(self):
        # Cayley: k^(k-2)
        for k in range(1, 6):
            assert sum(1 for _ in spanning_trees(list(range(k)))) == max(1, k ** (k - 2))

    def test_search_limit(self):
        with pytest.raises(GraphError):
            hi_witness_search(MAX_SEARCH_PAIRS + 1)
        with pytest.raises(GraphError):
            hi_witness_search(0)

    def test_exterior_drawable_matches_cycle_exterior_planar(self):
        for n in (3, 4):
            size = 2 * n
            chords = [e for e in itertools.combinations(range(size), 2)
                      if (e[1] - e[0]) % size not in (1, size - 1)]
            for r in range(3):
                for extra in itertools.combinations(chords, r):
                    g = Graph(size, [(v, (v + 1) % size) for v in range(size)] + list(extra))
                    assert exterior_drawable(n, extra) == cycle_exterior_planar(g, list(range(size)))


class TestNearMiss:
    def test_n4_figure(self):
        """Each colour class is a 3-vertex path plus an isolated vertex, only
        connectivity fails, and every extra edge that would repair it breaks
        the exterior drawing."""
        miss = hi_near_miss(4, (3, 1))
        assert miss is not None
        conds = hi_conditions(miss)
        assert [k for k, ok in conds.items() if not ok] == [5]
        assert class_components(miss, "R") == [3, 1] == class_components(miss, "B")
        joins = _joining_edges(miss)
        assert joins
        for e in joins:
            assert not exterior_drawable(4, miss.extra_edges + (e,))
            g = Graph(8, [(v, (v + 1) % 8) for v in range(8)])
            extra = [x for x in set(miss.extra_edges + (e,))
                     if (x[1] - x[0]) % 8 not in (1, 7)]
            if len(extra) == len(set(miss.extra_edges + (e,))):
                assert not cycle_exterior_planar(g.with_edges(extra), list(range(8)))


class TestGirthAudit:
    def test_examples(self):
        a = girth_bound_audit(kt3())
        assert a.preconditions_hold and a.girth == 3 and a.girth_below_30
        a = girth_bound_audit(sub1_k33())
        assert a.preconditions_hold and a.girth == 8
        assert str(a.density) == "6/5"
        a = girth_bound_audit(subdivide(complete_bipartite(3, 3), 2))
        assert not a.preconditions_hold and "two adjacent degree-2 vertices" in a.failures
        assert not a.may_be_obstacle

    def test_failures(self):
        a = girth_bound_audit(Graph(4, [(0, 1), (2, 3)]))
        assert "disconnected" in a.failures and "vertex of degree 0 or 1" in a.failures
        big = cycle(31)
        a = girth_bound_audit(big)
        assert not a.girth_below_30
        with pytest.raises(GraphError):
            girth_bound_audit(complete(5))
        with pytest.raises(GraphError):
            girth_bound_audit(Graph(0))

    def test_json(self):
        d = girth_bound_audit(sm10()).to_dict()
        assert d["girth"] == 6 and d["density"] == "4/3" and d["failures"] == []
        assert json.dumps(d)
