"""Constructive square coloring by witness-driven reduction.

The graph is repeatedly reduced (vertex deletions, chord additions, or an
edge-separator split) following the first catalog witness in priority order,
until DSATUR on the square fits the palette budget; colorings are then
extended back step by step.  Every run is deterministic and produces a
replayable trace.
"""

from __future__ import annotations

import json

from . import catalog as cat
from . import coloring as col
from . import embedding as emb
from .budgets import LARGE, Budget
from .errors import ExtensionStuck, MergeInfeasible, NoWitnessFound


class ReductionTrace:
    def __init__(self):
        self.steps = []
        self.terminal = None

    def to_jsonl(self):
        lines = [json.dumps(s) for s in self.steps]
        lines.append(json.dumps({"terminal": self.terminal}))
        return "\n".join(lines) + "\n"


def color_within_budget(g, budget=None):
    """Verified square coloring within the proven palette budget, plus the
    reduction trace that produced it."""
    if budget is None:
        budget = Budget.for_graph(g)
    trace = ReductionTrace()
    mapping = _solve(g, budget, trace.steps, trace)
    palette = max(mapping.values(), default=1)
    coloring = col.SquareColoring(palette, mapping)
    ok, pair = col.verify(g, coloring)
    if not ok:
        raise MergeInfeasible(f"final coloring invalid at pair {pair}")
    if palette > budget.palette_size:
        raise ExtensionStuck(
            f"palette {palette} exceeds budget {budget.palette_size}")
    return coloring, trace


def _solve(g, budget, steps, trace):
    """Color one connected graph within the budget; returns vertex -> color.

    Chain reductions (delete / add edge) are handled iteratively; only
    edge-separator splits recurse.
    """
    degree_limit = budget.delta_context if budget.regime == LARGE else 6
    pending = []  # extension records, unwound in reverse
    current = g
    mapping = None
    while True:
        base = col.dsatur_color(emb.square(current), budget.palette_size)
        if base is not None:
            trace.terminal = {"n": current.n, "palette": base.palette_size,
                              "digest": f"{emb.graph_digest(current):016x}"}
            mapping = dict(base.color_of)
            break
        w = cat.find_first_witness(current, budget)
        if w is None:
            raise NoWitnessFound(
                "no reducible configuration found (would contradict the "
                "structure theorem)", graph_text=emb.to_pg(current))
        step = {"witness": w.to_obj(),
                "before": f"{emb.graph_digest(current):016x}"}
        op = w.recipe["op"]
        if op == "split":
            step["after"] = None
            step["extension"] = "merge"
            steps.append(step)
            mapping = _merge_separator(current, w, budget, steps, trace)
            break
        if op == "add_edge":
            nxt = emb.mutate_add_edge(
                current, w.recipe["u"], w.recipe["v"], w.recipe["face"])
        else:
            v = w.recipe["v"]
            edges = w.recipe.get("edges", []) if op == "delete_and_add" else []
            nxt, id_map = _delete_with_edges(current, v, edges,
                                             w.recipe.get("anchor"))
            pending.append((current, v, id_map, step))
        if nxt.max_degree() > degree_limit:
            raise ExtensionStuck(
                f"reduction raised the maximum degree past {degree_limit}")
        step["after"] = f"{emb.graph_digest(nxt):016x}"
        step["extension"] = None
        steps.append(step)
        current = nxt
    for before, v, id_map, step in reversed(pending):
        mapping = _extend(before, v, id_map, mapping, budget, step)
    return mapping


def _delete_with_edges(g, v, edges, anchor):
    """G - v plus the recipe's edges.  When deleting v alone would
    disconnect the graph, the same result is obtained by contracting the
    edge between v and the anchor endpoint of the added edges."""
    try:
        out, id_map = emb.mutate_delete_vertex(g, v)
    except emb.WouldDisconnect:
        return _contract_into(g, v, anchor)
    for a, b in edges:
        a2, b2 = id_map[a], id_map[b]
        if not out.adjacent(a2, b2):
            out = emb.add_edge_any_face(out, a2, b2)
    return out, id_map


def _contract_into(g, v, anchor):
    """Contract the edge (anchor, v): v disappears, anchor inherits v's
    other neighbors (duplicates dropped), preserving the embedding.

    The result is G - v plus edges from the anchor to v's other neighbors,
    so any coloring of it restricts to a coloring of G - v.
    """
    if anchor is None:
        anchor = min(g.neighbors(v), key=lambda x: (g.degree(x), x))
    rot = [list(r) for r in g.rotation]
    rv = rot[v]
    i = rv.index(anchor)
    inherited = rv[i + 1:] + rv[:i]  # v's neighbors after anchor, in order
    ra = rot[anchor]
    j = ra.index(v)
    spliced = ra[:j] + [x for x in inherited if x not in g.neighbors(anchor)] \
        + ra[j + 1:]
    rot[anchor] = spliced
    for x in sorted(g.neighbors(v)):
        if x == anchor:
            continue
        if anchor in g.neighbors(x):
            rot[x] = [y for y in rot[x] if y != v]
        else:
            rot[x] = [anchor if y == v else y for y in rot[x]]
    id_map = {old: (old if old < v else old - 1) for old in range(g.n)
              if old != v}
    final = []
    for old in range(g.n):
        if old == v:
            continue
        final.append([id_map[x] for x in rot[old]])
    return emb.build(g.n - 1, final), id_map


def _extend(before, v, id_map, mapping, budget, step):
    """Color the deleted vertex with the smallest color absent from its
    distance-2 ball in the pre-deletion graph."""
    out = {old: mapping[new] for old, new in id_map.items()}
    forbidden = {out[u] for u in emb.dist2_neighborhood(before, v)}
    for c in range(1, budget.palette_size + 1):
        if c not in forbidden:
            out[v] = c
            step["extension"] = c
            return out
    raise ExtensionStuck(
        f"no free color for vertex {v}: {len(forbidden)} forbidden of "
        f"{budget.palette_size} (witness {step['witness']['kind']})")


def _merge_separator(g, w, budget, steps, trace):
    u, v = w.recipe["u"], w.recipe["v"]
    comp = w.recipe["component"]
    part1 = sorted(set(comp) | {u, v})
    part2 = sorted(set(range(g.n)) - set(comp))
    g1, map1 = emb.induced_subgraph(g, part1)
    g2, map2 = emb.induced_subgraph(g, part2)
    sub1, sub2 = [], []
    m1 = _solve(g1, budget, sub1, trace)
    m2 = _solve(g2, budget, sub2, trace)
    steps.append({"split_parts": [sub1, sub2]})
    col1 = _normalize_uv({x: m1[map1[x]] for x in part1}, u, v)
    col2 = _normalize_uv({x: m2[map2[x]] for x in part2}, u, v)
    n1 = sorted((set(g.neighbors(u)) | set(g.neighbors(v))) & set(comp))
    n2 = sorted(((set(g.neighbors(u)) | set(g.neighbors(v))) - set(comp))
                - {u, v})
    sigma = _avoiding_permutation(
        budget.palette_size,
        sources=sorted({col2[x] for x in n2}),
        blocked={col1[x] for x in n1})
    merged = dict(col1)
    for x in part2:
        merged[x] = sigma[col2[x]]
    if merged[u] != col1[u] or merged[v] != col1[v]:
        raise MergeInfeasible("separator endpoints recolored by permutation")
    return merged


def _normalize_uv(mapping, u, v):
    """Swap color classes so that u gets color 1 and v color 2."""
    cu, cv = mapping[u], mapping[v]
    swap = {cu: 1, 1: cu}
    out = {x: swap.get(c, c) for x, c in mapping.items()}
    cv = out[v]
    swap = {cv: 2, 2: cv}
    return {x: swap.get(c, c) for x, c in out.items()}


def _avoiding_permutation(k, sources, blocked):
    """Bijection on 1..k fixing 1 and 2 that moves every source color out of
    the blocked set."""
    sigma = {1: 1, 2: 2}
    kept = [c for c in sources if c not in blocked and c not in (1, 2)]
    moving = [c for c in sources if c in blocked and c not in (1, 2)]
    for c in kept:
        sigma[c] = c
    taken = {1, 2} | set(kept)
    pool = [t for t in range(3, k + 1)
            if t not in blocked and t not in taken]
    for c in moving:
        if not pool:
            raise MergeInfeasible("palette too small to separate cut sides")
        sigma[c] = pool.pop(0)
        taken.add(sigma[c])
    # complete to a bijection, identity where possible
    deferred = []
    for c in range(1, k + 1):
        if c in sigma:
            continue
        if c not in taken:
            sigma[c] = c
            taken.add(c)
        else:
            deferred.append(c)
    leftovers = [t for t in range(1, k + 1) if t not in taken]
    for c, t in zip(deferred, leftovers):
        sigma[c] = t
    return sigma
