import random

import pytest

from dyncut import (
    CutTree,
    DynamicGraph,
    all_pairs_connectivity,
    apply_change,
    cut_cost,
    detect_bridge,
    query_value,
    random_event,
    static_build,
    update_add_vertex,
    update_decrease,
    update_increase,
    update_remove_vertex,
    verify_cut_tree,
)
from dyncut.dynamic import (
    EXISTING_BRIDGE,
    NEW_BRIDGE,
    NON_BRIDGE,
    RULE_BRIDGE,
    RULE_NEW_BRIDGE,
    RULE_REVALIDATED,
    RULE_THRESHOLD,
)
from dyncut.errors import VertexExists, VertexMissing, VertexNotIsolated
from dyncut.graph import (
    ADD_EDGE,
    ADD_VERTEX,
    INCREASE_WEIGHT,
    REMOVE_VERTEX,
    pair_key,
)
from dyncut.mincut import counter
from helpers import SCENARIO_MIX, dispatch_update, random_graph


class TestVertexUpdates:
    def test_add_to_empty_tree(self):
        tree = update_add_vertex(CutTree(), 1)
        assert set(tree.vertices) == {1}
        assert tree.edge_count == 0

    def test_add_attaches_zero_edge_to_smallest(self, t3_tree):
        tree = update_add_vertex(t3_tree, 4)
        assert tree.cost(4, 1) == 0
        assert query_value(tree, 4, 2) == 0

    def test_add_existing_rejected(self, t3_tree):
        with pytest.raises(VertexExists):
            update_add_vertex(t3_tree, 2)

    def test_remove_leaf_with_zero_edge(self):
        tree = CutTree(edges=[(1, 2, 3), (2, 3, 0)])
        out = update_remove_vertex(tree, 3)
        assert out == CutTree(edges=[(1, 2, 3)])

    def test_remove_interior_rejoins_subtrees(self):
        tree = CutTree(edges=[(1, 5, 0), (5, 3, 0), (1, 2, 4), (3, 4, 6)])
        out = update_remove_vertex(tree, 5)
        assert out.has_edge(1, 3)
        assert out.cost(1, 3) == 0
        assert out.edge_count == 3

    def test_remove_last_vertex(self):
        tree = update_remove_vertex(CutTree(vertices=[9]), 9)
        assert tree.vertex_count == 0

    def test_remove_with_nonzero_edge_rejected(self, t3_tree):
        with pytest.raises(VertexNotIsolated):
            update_remove_vertex(t3_tree, 2)

    def test_remove_missing_rejected(self, t3_tree):
        with pytest.raises(VertexMissing):
            update_remove_vertex(t3_tree, 9)


class TestDetectBridge:
    def test_existing_bridge(self, p3, p3_tree):
        assert detect_bridge(p3_tree, p3, 1, 2) == EXISTING_BRIDGE

    def test_new_bridge_across_components(self):
        g = DynamicGraph(vertices=[1, 2, 3], edges=[(1, 2, 5)])
        tree = CutTree(edges=[(1, 2, 5), (1, 3, 0)])
        assert detect_bridge(tree, g, 1, 3) == NEW_BRIDGE
        assert detect_bridge(tree, g, 2, 3) == NEW_BRIDGE

    def test_non_bridge(self, t3, t3_tree):
        assert detect_bridge(t3_tree, t3, 1, 2) == NON_BRIDGE

    def test_costs_no_cuts(self, t3, t3_tree):
        before = counter.value
        detect_bridge(t3_tree, t3, 1, 2)
        assert counter.value == before


class TestIncrease:
    def test_existing_bridge_only_bumps_the_edge(self, p3, p3_tree):
        new = p3.copy()
        new.increase_weight(2, 3, 5)
        tree, stats = update_increase(p3_tree, p3, new, 2, 3, 5)
        assert tree == CutTree(edges=[(1, 2, 3), (2, 3, 7)])
        assert stats.cuts_used == 0
        assert stats.reuse_breakdown == {RULE_BRIDGE: 1}

    def test_new_bridge_replaces_zero_edge(self):
        old = DynamicGraph(vertices=[1, 2])
        tree = CutTree(edges=[(1, 2, 0)])
        new = old.copy()
        new.add_edge(1, 2, 4)
        out, stats = update_increase(tree, old, new, 1, 2, 4)
        assert out == CutTree(edges=[(1, 2, 4)])
        assert stats.cuts_used == 0
        assert stats.reuse_breakdown == {RULE_NEW_BRIDGE: 1}

    def test_non_bridge_uses_path_minus_one_cuts(self, t3, t3_tree):
        new = t3.copy()
        new.increase_weight(1, 2, 2)
        tree, stats = update_increase(t3_tree, t3, new, 1, 2, 2)
        assert stats.cuts_used == 1
        assert verify_cut_tree(tree, new).ok
        for a, b in ((1, 2), (1, 3), (2, 3)):
            assert query_value(tree, a, b) == 5
        assert tree == CutTree(edges=[(1, 3, 5), (1, 2, 5)])

    def test_insertion_reports_add_edge_event(self, t3, t3_tree):
        new = t3.copy()
        new.remove_edge(1, 2)
        old = new.copy()
        new.add_edge(1, 2, 1)
        tree2 = static_build(old)
        _, stats = update_increase(tree2, old, new, 1, 2, 1)
        assert stats.event.kind == ADD_EDGE


class TestDecrease:
    def test_threshold_reuse(self, t3, t3_tree):
        new = t3.copy()
        new.decrease_weight(1, 3, 1)
        tree, stats = update_decrease(t3_tree, t3, new, 1, 3, 1, verify=True)
        assert tree == CutTree(edges=[(1, 3, 3), (2, 3, 3)])
        assert stats.cuts_used == 0
        assert stats.reuse_breakdown == {RULE_THRESHOLD: 1}
        assert stats.accepted_stale == (((2, 3), 3, RULE_THRESHOLD),)

    def test_revalidation_keeps_structure(self, t3, t3_tree):
        new = t3.copy()
        new.decrease_weight(2, 3, 1)
        tree, stats = update_decrease(t3_tree, t3, new, 2, 3, 1, verify=True)
        assert tree == CutTree(edges=[(1, 3, 4), (2, 3, 2)])
        assert stats.cuts_used == 1
        assert stats.reuse_breakdown == {RULE_REVALIDATED: 1}

    def test_bridge_deletion(self, p3, p3_tree):
        new = p3.copy()
        new.remove_edge(2, 3)
        tree, stats = update_decrease(p3_tree, p3, new, 2, 3, 2)
        assert tree == CutTree(edges=[(1, 2, 3), (2, 3, 0)])
        assert stats.cuts_used == 0
        assert stats.reuse_breakdown == {RULE_BRIDGE: 1}

    def test_deletion_reports_remove_edge_event(self, t3, t3_tree):
        new = t3.copy()
        new.remove_edge(2, 3)
        _, stats = update_decrease(t3_tree, t3, new, 2, 3, 2)
        assert stats.event.kind == "remove-edge"
        assert stats.event.delta is None


def _run_scenario(seed, events=15, check_contracts=True):
    rng = random.Random(seed)
    g = random_graph(rng)
    tree = static_build(g)
    assert verify_cut_tree(tree, g).ok
    for _ in range(events):
        ev = random_event(g, rng, SCENARIO_MIX, weight_max=8, max_vertices=12)
        old = g.copy()
        apply_change(g, ev)
        if check_contracts and ev.kind not in (ADD_VERTEX, REMOVE_VERTEX):
            plen = len(tree.path_vertices(ev.u, ev.v)) - 1
            kind = detect_bridge(tree, old, ev.u, ev.v)
            n_before = old.vertex_count
        before = counter.value
        tree, stats = dispatch_update(tree, old, g, ev)
        used = counter.value - before
        if stats is not None:
            assert stats.cuts_used == used
            assert stats.cuts_used <= stats.static_equivalent
            assert sum(stats.reuse_breakdown.values()) >= stats.cuts_used
        if check_contracts:
            if ev.kind in (ADD_VERTEX, REMOVE_VERTEX):
                assert used == 0
            elif ev.kind in (ADD_EDGE, INCREASE_WEIGHT):
                expected = plen - 1 if kind == NON_BRIDGE else 0
                assert used == expected, (ev, kind)
            else:
                assert used <= n_before - 1 - plen
                if kind == EXISTING_BRIDGE:
                    assert used == 0
        lam = all_pairs_connectivity(g) if g.vertex_count > 1 else {}
        report = verify_cut_tree(tree, g, lam=lam)
        assert report.ok, (seed, ev, str(report))
        if stats is not None:
            for pair, stale, rule in stats.accepted_stale:
                assert lam[pair] == stale, (seed, ev, pair, rule)


@pytest.mark.parametrize("seed", range(12))
def test_random_scenarios_stay_valid(seed):
    _run_scenario(seed)


def test_decrease_verify_mode_on_random_cases():
    rng = random.Random(99)
    done = 0
    while done < 10:
        g = random_graph(rng, n_min=4, n_max=7)
        if g.edge_count == 0:
            continue
        tree = static_build(g)
        u, v, w = sorted(g.edges())[rng.randrange(g.edge_count)]
        delta = rng.randint(1, w)
        new = g.copy()
        if delta == w:
            new.remove_edge(u, v)
        else:
            new.decrease_weight(u, v, delta)
        out, _ = update_decrease(tree, g, new, u, v, delta, verify=True)
        assert verify_cut_tree(out, new).ok
        done += 1


def test_increase_keeps_off_path_cuts():
    # after an increase, every former tree edge off the changed path must
    # still induce a minimum cut of unchanged cost in the new graph
    rng = random.Random(5)
    done = 0
    while done < 10:
        g = random_graph(rng, n_min=5, n_max=9)
        tree = static_build(g)
        verts = sorted(g.vertices)
        b, d = rng.sample(verts, 2)
        if detect_bridge(tree, g, b, d) != NON_BRIDGE:
            continue
        new = g.copy()
        delta = rng.randint(1, 8)
        if new.has_edge(b, d):
            new.increase_weight(b, d, delta)
        else:
            new.add_edge(b, d, delta)
        pverts = tree.path_vertices(b, d)
        on_path = {pair_key(x, y) for x, y in zip(pverts, pverts[1:])}
        lam_new = all_pairs_connectivity(new)
        for u, v, c in tree.edges():
            if pair_key(u, v) in on_path:
                continue
            side = tree.cut_side(u, v)
            assert cut_cost(new, side) == c
            assert lam_new[pair_key(u, v)] == c
        out, _ = update_increase(tree, g, new, b, d, delta)
        assert verify_cut_tree(out, new, lam=lam_new).ok
        done += 1


def test_decrease_lowers_all_path_cuts():
    # every former path edge keeps its cut, at cost lowered by delta
    rng = random.Random(11)
    done = 0
    while done < 10:
        g = random_graph(rng, n_min=5, n_max=9)
        if g.edge_count == 0:
            continue
        tree = static_build(g)
        u0, v0, w = sorted(g.edges())[rng.randrange(g.edge_count)]
        delta = rng.randint(1, w)
        new = g.copy()
        if delta == w:
            new.remove_edge(u0, v0)
        else:
            new.decrease_weight(u0, v0, delta)
        lam_new = all_pairs_connectivity(new)
        pverts = tree.path_vertices(u0, v0)
        for x, y in zip(pverts, pverts[1:]):
            side = tree.cut_side(x, y)
            assert cut_cost(new, side) == tree.cost(x, y) - delta
            assert lam_new[pair_key(x, y)] == tree.cost(x, y) - delta
        done += 1
