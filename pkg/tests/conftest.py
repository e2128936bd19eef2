import itertools

import pytest

from psc import embedding as emb
from psc import generators as gen
from psc import coloring as col


def glue_pocket(g, u, v):
    """Attach two new vertices forming a K4 with the edge uv, which makes uv
    an edge separator.  Tries insertion orders until the embedding builds."""
    n = g.n
    a, b = n, n + 1
    base = [list(r) for r in g.rotation]
    iu = base[u].index(v)
    iv = base[v].index(u)
    orders = list(itertools.permutations([a, b]))
    tris = list(itertools.permutations([u, v]))
    for ordu in orders:
        for ordv in orders:
            for pa in tris:
                for pb in tris:
                    rot = [list(r) for r in base]
                    rot[u] = rot[u][:iu] + list(ordu) + rot[u][iu:]
                    rot[v] = rot[v][:iv + 1] + list(ordv) + rot[v][iv + 1:]
                    rot.append(list(pa) + [b])
                    rot.append(list(pb) + [a])
                    try:
                        return emb.build(n + 2, rot)
                    except Exception:
                        pass
    raise RuntimeError("no embedding found for pocket")


_real_dsatur = col.dsatur_color


def stingy_dsatur(limit):
    """A DSATUR stand-in that refuses graphs above `limit` vertices, forcing
    the reducer down the reduction path with the true palette budget."""
    def f(sq, budget=None):
        if len(sq.adj) > limit:
            return None
        return _real_dsatur(sq, budget)
    return f


@pytest.fixture(scope="session")
def corpus_large():
    return gen.gen_corpus(60, (20, 120), 9, 42)


@pytest.fixture(scope="session")
def corpus_small():
    return gen.gen_corpus(40, (12, 80), 3, 43, delta_max=6)
