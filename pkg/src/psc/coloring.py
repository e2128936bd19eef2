"""Coloring back-ends: validity check, greedy and DSATUR heuristics, and an
exact branch-and-bound chi_2 oracle for desk-scale graphs."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import embedding as emb
from .errors import PartialColoring


@dataclass(frozen=True)
class SquareColoring:
    palette_size: int
    color_of: dict  # vertex -> color in 1..palette_size

    def to_json(self):
        return json.dumps(
            {"palette": self.palette_size,
             "colors": {str(v): c for v, c in sorted(self.color_of.items())}},
            sort_keys=False)

    @staticmethod
    def from_json(text):
        obj = json.loads(text)
        return SquareColoring(obj["palette"],
                              {int(v): c for v, c in obj["colors"].items()})


@dataclass(frozen=True)
class ExactResult:
    chi2: int
    witness: SquareColoring
    lower_bound_clique: tuple
    exact: bool = True


def verify(g, coloring):
    """True iff all distance-<=2 pairs differ; on failure also returns one
    violating pair."""
    col = coloring.color_of
    for v in range(g.n):
        if v not in col:
            raise PartialColoring(f"vertex {v} has no color")
    for v in range(g.n):
        for u in emb.dist2_neighborhood(g, v):
            if u > v and col[u] == col[v]:
                return False, (v, u)
    return True, None


def smallest_last_order(g):
    """Degeneracy (smallest-last) order of the base graph: reversed removal
    order by repeatedly deleting a minimum-degree vertex."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        v = min((x for x in range(g.n) if not removed[x]),
                key=lambda x: (deg[x], x))
        removed[v] = True
        order.append(v)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
    order.reverse()
    return order


def greedy_color(g):
    """Greedy coloring of the square in a smallest-last order of g."""
    sq = emb.square(g)
    col = {}
    for v in smallest_last_order(g):
        used = {col[u] for u in sq.adj[v] if u in col}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return SquareColoring(max(col.values(), default=1), col)


def dsatur_color(sq, budget=None):
    """DSATUR on the square graph; ties broken by higher square degree then
    lower id.  Returns None when the palette budget is exceeded."""
    n = len(sq.adj)
    col = {}
    sat = [set() for _ in range(n)]
    uncolored = set(range(n))
    palette = 0
    while uncolored:
        v = max(uncolored, key=lambda x: (len(sat[x]), len(sq.adj[x]), -x))
        c = 1
        while c in sat[v]:
            c += 1
        if budget is not None and c > budget:
            return None
        col[v] = c
        palette = max(palette, c)
        uncolored.discard(v)
        for u in sq.adj[v]:
            sat[u].add(c)
    return SquareColoring(palette, col)


def greedy_clique(sq):
    """Greedy clique in the square: grow from the highest-degree vertex."""
    n = len(sq.adj)
    if n == 0:
        return ()
    start = max(range(n), key=lambda v: (len(sq.adj[v]), -v))
    clique = [start]
    cand = set(sq.adj[start])
    while cand:
        v = max(cand, key=lambda x: (len(sq.adj[x] & cand), -x))
        clique.append(v)
        cand &= sq.adj[v]
    return tuple(sorted(clique))


class _Timeout(Exception):
    pass


def exact_chi2(g, time_limit=60.0):
    """Exact chi_2 by decreasing-k feasibility search on the square.

    Lower bound: greedy clique (plus Delta+1); upper bound: DSATUR.  The
    clique is precolored to break color symmetry; colors are explored in
    ascending order and capped at one above the current maximum.  On timeout
    the best bounds so far are returned with exact=False.
    """
    sq = emb.square(g)
    clique = greedy_clique(sq)
    lb = max(len(clique), g.max_degree() + 1)
    best = dsatur_color(sq)
    ub = best.palette_size
    deadline = time.monotonic() + time_limit
    order = sorted(range(g.n),
                   key=lambda v: (v not in clique, -len(sq.adj[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    nbr_pos = [sorted(pos[u] for u in sq.adj[v]) for v in order]

    def feasible(k):
        colors = [0] * g.n  # by position in order
        for i, v in enumerate(order):
            if v in clique:
                colors[i] = clique.index(v) + 1
        fixed = len(clique)

        def bt(i, max_used):
            if time.monotonic() > deadline:
                raise _Timeout
            if i == g.n:
                return True
            if i < fixed:
                return bt(i + 1, max(max_used, colors[i]))
            forbidden = {colors[j] for j in nbr_pos[i] if j < i or j < fixed}
            cap = min(k, max_used + 1)
            for c in range(1, cap + 1):
                if c in forbidden:
                    continue
                colors[i] = c
                if bt(i + 1, max(max_used, c)):
                    return True
            colors[i] = 0
            return False

        if bt(0, 0):
            return {order[i]: colors[i] for i in range(g.n)}
        return None

    exact = True
    while ub > lb:
        try:
            sol = feasible(ub - 1)
        except _Timeout:
            exact = False
            break
        if sol is None:
            break
        best = SquareColoring(ub - 1, sol)
        ub -= 1
    return ExactResult(ub, best, clique, exact)


def naive_chi2(g):
    """Independent brute-force oracle: enumerate set partitions of the
    vertices (restricted growth strings) and keep the smallest number of
    blocks that are all independent in the square.  Exponential; n <= ~10."""
    sq = emb.square(g)
    best = g.n

    def rec(v, blocks):
        nonlocal best
        if len(blocks) >= best:
            return
        if v == g.n:
            best = len(blocks)
            return
        for b in blocks:
            if not (sq.adj[v] & b):
                b.add(v)
                rec(v + 1, blocks)
                b.discard(v)
        blocks.append({v})
        rec(v + 1, blocks)
        blocks.pop()

    rec(0, [])
    return best
