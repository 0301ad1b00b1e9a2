"""Update routines that carry a cut tree across one atomic graph change.

Vertex inserts/deletes and bridge edges are handled by pure tree surgery
with zero cut computations.  A non-bridge weight increase reuses every cut
off the tree path between the changed endpoints plus one cut on it, then
rebuilds the rest.  A weight decrease or deletion walks the stale cuts in
order of decreasing cost and re-certifies each one by a cost threshold, a
bridge/zero-cost rule, or (only when those fail) a fresh min-cut on a
contracted graph, reshaping the tree along the new cut when it is cheaper.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InternalInvariantViolation,
    InvalidDelta,
    VertexExists,
    VertexMissing,
    VertexNotIsolated,
)
from .graph import (
    ChangeEvent,
    DynamicGraph,
    Pair,
    contract,
    cut_cost,
    pair_key,
)
from .mincut import counter, min_cut
from .tree import CutTree, IntermediateTree, complete, query_value

EXISTING_BRIDGE = "existing-bridge"
NEW_BRIDGE = "new-bridge"
NON_BRIDGE = "non-bridge"

RULE_BRIDGE = "bridge"
RULE_NEW_BRIDGE = "new-bridge"
RULE_THRESHOLD = "threshold"
RULE_ZERO_OR_BRIDGE = "zero-or-bridge-edge"
RULE_REVALIDATED = "revalidated"
RULE_RECOMPUTED = "recomputed"

UNFOLD_TAG = "unfold"


@dataclass(frozen=True)
class UpdateStats:
    """Per-event accounting of cut computations and reuse rules.

    ``reuse_breakdown`` counts, per rule, the former tree edges the routine
    actually processed; edges re-certified inside a retained subtree inherit
    the rule of the edge that triggered the retention.  ``accepted_stale``
    lists every edge that was accepted without a fresh cut computation,
    with its (stale) cost and the rule that accepted it - audit data for
    reuse-soundness checks.
    """

    event: ChangeEvent
    cuts_used: int
    static_equivalent: int
    reuse_breakdown: dict[str, int] = field(default_factory=dict)
    accepted_stale: tuple[tuple[Pair, int, str], ...] = ()


def detect_bridge(tree: CutTree, graph: DynamicGraph, b: int, d: int) -> str:
    """Classify {b, d} with tree lookups only (no cut computation).

    An existing edge is a bridge iff its weight equals the connectivity of
    its endpoints; {b, d} is a new bridge iff the endpoints are currently
    disconnected (connectivity zero).
    """
    lam = query_value(tree, b, d)
    if graph.has_edge(b, d) and graph.weight(b, d) == lam and lam > 0:
        return EXISTING_BRIDGE
    if lam == 0:
        return NEW_BRIDGE
    return NON_BRIDGE


def update_add_vertex(tree: CutTree, vertex: int) -> CutTree:
    """Insert an isolated vertex, attached by a zero-cost edge."""
    if vertex in tree.vertices:
        raise VertexExists(f"vertex {vertex} already present")
    t = tree.copy()
    anchor = min(t.vertices) if t.vertex_count else None
    t.add_vertex(vertex)
    if anchor is not None:
        t.add_edge(vertex, anchor, 0)
    return t


def update_remove_vertex(tree: CutTree, vertex: int) -> CutTree:
    """Delete an isolated vertex, starring orphaned subtrees back together.

    All tree edges at the vertex must carry cost zero (the tree-side
    consequence of graph isolation); orphans reconnect to the smallest-id
    former neighbor by zero-cost edges.
    """
    if vertex not in tree.vertices:
        raise VertexMissing(f"no vertex {vertex}")
    t = tree.copy()
    nbrs = sorted(t.neighbors(vertex))
    for x in nbrs:
        if t.cost(vertex, x) != 0:
            raise VertexNotIsolated(
                f"tree edge {{{vertex},{x}}} has nonzero cost {t.cost(vertex, x)}"
            )
    t.remove_vertex(vertex)
    for x in nbrs[1:]:
        t.add_edge(nbrs[0], x, 0)
    return t


def update_increase(
    tree: CutTree,
    old_graph: DynamicGraph,
    new_graph: DynamicGraph,
    b: int,
    d: int,
    delta: int,
    verify: bool = False,
) -> tuple[CutTree, UpdateStats]:
    """Carry the tree across an edge insertion or weight increase by delta."""
    if delta <= 0:
        raise InvalidDelta("delta must be positive")
    old_w = old_graph.weight(b, d) if old_graph.has_edge(b, d) else 0
    if not new_graph.has_edge(b, d) or new_graph.weight(b, d) != old_w + delta:
        raise ValueError("new_graph is not old_graph with {b,d} increased by delta")
    event = (
        ChangeEvent.increase_weight(b, d, delta)
        if old_w
        else ChangeEvent.add_edge(b, d, delta)
    )
    static_eq = max(0, new_graph.vertex_count - 1)
    kind = detect_bridge(tree, old_graph, b, d)

    if kind == EXISTING_BRIDGE:
        t = tree.copy()
        if not t.has_edge(b, d):
            raise InternalInvariantViolation("a bridge must appear as a tree edge")
        t.set_cost(b, d, t.cost(b, d) + delta)
        return t, UpdateStats(event, 0, static_eq, {RULE_BRIDGE: 1})

    if kind == NEW_BRIDGE:
        t = tree.copy()
        verts = t.path_vertices(b, d)
        for x, y in zip(verts, verts[1:]):
            if t.cost(x, y) == 0:
                t.remove_edge(x, y)
                t.add_edge(b, d, new_graph.weight(b, d))
                break
        else:
            raise InternalInvariantViolation(
                "zero connectivity but no zero-cost edge on the path"
            )
        return t, UpdateStats(event, 0, static_eq, {RULE_NEW_BRIDGE: 1})

    # General route: every edge off the b-d path keeps its cut; the cheapest
    # path edge (nearest to b on ties) is a minimum b-d cut, so it stays
    # valid with cost +delta and is kept fat with {b, d} as its certified
    # pair.  The remaining path edges are rebuilt.
    verts = tree.path_vertices(b, d)
    pedges = list(zip(verts, verts[1:]))
    chosen = min(pedges, key=lambda e: tree.cost(*e))
    work = IntermediateTree.from_cut_tree(tree)
    for x, y in pedges:
        if (x, y) != chosen:
            work.mark_thin(x, y)
    rec = work.edge(*chosen)
    rec.cost += delta
    if {b, d} != set(chosen):
        rec.pair = (b, d)
    before = counter.value
    result = complete(work, new_graph, verify=verify)
    cuts = counter.value - before
    if cuts != len(pedges) - 1:
        raise InternalInvariantViolation(
            f"rebuild used {cuts} cuts, expected {len(pedges) - 1}"
        )
    breakdown = {RULE_RECOMPUTED: cuts} if cuts else {}
    return result, UpdateStats(event, cuts, static_eq, breakdown)


def update_decrease(
    tree: CutTree,
    old_graph: DynamicGraph,
    new_graph: DynamicGraph,
    b: int,
    d: int,
    delta: int,
    verify: bool = False,
) -> tuple[CutTree, UpdateStats]:
    """Carry the tree across a weight decrease by delta or an edge deletion.

    ``delta`` equal to the old weight means the edge was deleted.  With
    ``verify`` on (small graphs only), the fat/thin cut invariants are
    re-checked against brute-force connectivities after every loop step.
    """
    old_w = old_graph.weight(b, d)
    if delta <= 0 or delta > old_w:
        raise InvalidDelta(f"delta must be in [1, {old_w}]")
    if delta == old_w:
        if new_graph.has_edge(b, d):
            raise ValueError("full-cost decrease must remove the edge")
        event = ChangeEvent.remove_edge(b, d)
    else:
        if not new_graph.has_edge(b, d) or new_graph.weight(b, d) != old_w - delta:
            raise ValueError("new_graph is not old_graph with {b,d} decreased by delta")
        event = ChangeEvent.decrease_weight(b, d, delta)
    static_eq = max(0, new_graph.vertex_count - 1)

    if detect_bridge(tree, old_graph, b, d) == EXISTING_BRIDGE:
        t = tree.copy()
        verts = t.path_vertices(b, d)
        pedges = list(zip(verts, verts[1:]))
        for x, y in pedges:
            t.set_cost(x, y, t.cost(x, y) - delta)
        accepted = tuple(
            (pair_key(x, y), c, RULE_BRIDGE) for x, y, c in sorted(t.edges())
        )
        return t, UpdateStats(
            event, 0, static_eq, {RULE_BRIDGE: len(pedges)}, accepted
        )

    # Stale-cost walk: path edges stay valid at cost -delta; everything else
    # turns thin and is re-certified most-expensive-first.
    work = IntermediateTree.from_cut_tree(tree)
    verts0 = tree.path_vertices(b, d)
    path_pairs = {pair_key(x, y) for x, y in zip(verts0, verts0[1:])}
    for x, y, rec in work.edges():
        if pair_key(x, y) in path_pairs:
            rec.cost -= delta
        else:
            rec.fat = False
    initial_thin = (tree.vertex_count - 1) - len(path_pairs)

    lam_old = lam_new = None
    if verify:
        from .oracle import all_pairs_connectivity

        lam_old = all_pairs_connectivity(old_graph, method="enumerate")
        lam_new = all_pairs_connectivity(new_graph, method="enumerate")
        _check_loop_state(work, old_graph, new_graph, lam_old, lam_new)

    cuts = 0
    breakdown: dict[str, int] = {}
    accepted: list[tuple[Pair, int, str]] = []
    while True:
        thin = work.thin_edges()
        if not thin:
            break
        pverts = work.path_vertices(b, d)
        pset = set(pverts)
        eligible = []
        for x, y, cost in thin:
            x_on, y_on = x in pset, y in pset
            if x_on and y_on:
                raise InternalInvariantViolation(
                    f"thin edge {{{x},{y}}} has both endpoints on the path"
                )
            if x_on or y_on:
                v_on, u_off = (x, y) if x_on else (y, x)
                lo, hi = pair_key(x, y)
                eligible.append((cost, lo, hi, u_off, v_on))
        if not eligible:
            raise InternalInvariantViolation(
                "thin edges remain but none touches the path"
            )
        eligible.sort(key=lambda r: (-r[0], r[1], r[2]))
        stale, _, _, u, v = eligible[0]

        vi = pverts.index(v)
        flanks = [pverts[i] for i in (vi - 1, vi + 1) if 0 <= i < len(pverts)]
        threshold = min(work.edge(x, v).cost for x in flanks)

        rule = None
        if stale == 0:
            rule = RULE_ZERO_OR_BRIDGE
        elif old_graph.has_edge(u, v) and old_graph.weight(u, v) == stale:
            rule = RULE_ZERO_OR_BRIDGE
        elif threshold >= stale:
            rule = RULE_THRESHOLD

        if rule is not None:
            inherited = _fatten_subtree(work, u, v)
            breakdown[rule] = breakdown.get(rule, 0) + 1 + len(inherited)
            accepted.append((pair_key(u, v), stale, rule))
            accepted.extend((p, c, UNFOLD_TAG) for p, c in inherited)
        else:
            groups = [
                work.subtree(x, v) for x in sorted(work.neighbors(v)) if x != u
            ]
            quotient, node_of = contract(new_graph, groups)
            cut = min_cut(quotient, u, v)
            cuts += 1
            if cut.cost > stale:
                raise InternalInvariantViolation(
                    f"recomputed cut {cut.cost} exceeds the stale bound {stale}"
                )
            if cut.cost == stale:
                inherited = _fatten_subtree(work, u, v)
                breakdown[RULE_REVALIDATED] = (
                    breakdown.get(RULE_REVALIDATED, 0) + 1 + len(inherited)
                )
                accepted.extend((p, c, UNFOLD_TAG) for p, c in inherited)
            else:
                work.mark_fat(u, v, cut.cost)
                breakdown[RULE_RECOMPUTED] = breakdown.get(RULE_RECOMPUTED, 0) + 1
                moved_flanks = 0
                for x in sorted(work.neighbors(v)):
                    if x == u:
                        continue
                    if node_of[x] in cut.side:
                        work.move_endpoint(x, v, u)
                        if x in flanks:
                            moved_flanks += 1
                if moved_flanks != 1:
                    raise InternalInvariantViolation(
                        "reshaped cut must pull exactly one path neighbor across"
                    )
        if verify:
            _check_loop_state(work, old_graph, new_graph, lam_old, lam_new)

    if cuts > initial_thin:
        raise InternalInvariantViolation(
            f"{cuts} cuts used, more than the {initial_thin} stale edges"
        )
    return work.to_cut_tree(), UpdateStats(
        event, cuts, static_eq, breakdown, tuple(accepted)
    )


def _fatten_subtree(work: IntermediateTree, u: int, v: int) -> list[tuple[Pair, int]]:
    """Certify {u, v} and every stale edge of the subtree hanging at u."""
    work.mark_fat(u, v)
    sub = work.subtree(u, v)
    inherited = []
    for x, y, rec in work.edges():
        if not rec.fat and x in sub and y in sub:
            rec.fat = True
            inherited.append((pair_key(x, y), rec.cost))
    return inherited


def _check_loop_state(work, old_graph, new_graph, lam_old, lam_new) -> None:
    """Fat edges must be minimum cuts of the new graph, thin ones of the old."""
    for x, y, rec in work.edges():
        side = work.cut_side(x, y)
        key = pair_key(x, y)
        graph, lam = (new_graph, lam_new) if rec.fat else (old_graph, lam_old)
        induced = cut_cost(graph, side)
        if induced != rec.cost or lam[key] != rec.cost:
            kind = "fat" if rec.fat else "thin"
            raise InternalInvariantViolation(
                f"{kind} edge {key}: label {rec.cost}, induced {induced}, "
                f"connectivity {lam[key]}"
            )
