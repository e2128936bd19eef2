"""Embedded planar graphs given by rotation systems.

A graph is stored as, for every vertex, the cyclic clockwise order of its
neighbors.  Faces are traced with the fixed convention: from the directed
corner (u -> v) the next corner is (v -> w) where w is the successor of u in
the rotation around v.  A connected simple rotation system is a genus-zero
(planar) embedding exactly when n - m + f = 2.
"""

from __future__ import annotations

from collections import deque

from .errors import (
    AlreadyAdjacent,
    AsymmetricAdjacency,
    Disconnected,
    DuplicateNeighbor,
    NonPlanarEmbedding,
    NotOnSameFace,
    UnknownVertex,
    WouldDisconnect,
)

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


class Face:
    """A face as the cyclic list of its directed corners (u, v)."""

    __slots__ = ("corners",)

    def __init__(self, corners):
        self.corners = tuple(corners)

    @property
    def degree(self):
        return len(self.corners)

    def vertices(self):
        """Distinct vertices on the face boundary, in first-visit order."""
        seen = set()
        order = []
        for u, _ in self.corners:
            if u not in seen:
                seen.add(u)
                order.append(u)
        return order

    def __repr__(self):
        return f"Face({list(self.corners)})"


class FaceSet:
    __slots__ = ("faces", "_corner_to_face")

    def __init__(self, faces):
        self.faces = tuple(faces)
        self._corner_to_face = {}
        for i, f in enumerate(self.faces):
            for c in f.corners:
                self._corner_to_face[c] = i

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __getitem__(self, i):
        return self.faces[i]

    def face_of_corner(self, u, v):
        """Index of the face containing the directed edge (u, v)."""
        return self._corner_to_face[(u, v)]

    def faces_at(self, v):
        """Indices of faces incident to v, with multiplicity one per corner."""
        out = []
        for i, f in enumerate(self.faces):
            for u, _ in f.corners:
                if u == v:
                    out.append(i)
        return out


class EmbeddedGraph:
    """Immutable simple connected planar graph with a fixed embedding."""

    __slots__ = ("n", "rotation", "_adj", "_faces")

    def __init__(self, n, rotation, _adj, _faces):
        self.n = n
        self.rotation = rotation
        self._adj = _adj
        self._faces = _faces

    # -- accessors -----------------------------------------------------------

    @property
    def m(self):
        return sum(len(r) for r in self.rotation) // 2

    def neighbors(self, v):
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v):
        self._check_vertex(v)
        return len(self.rotation[v])

    def max_degree(self):
        return max((len(r) for r in self.rotation), default=0)

    def min_degree(self):
        return min((len(r) for r in self.rotation), default=0)

    def adjacent(self, u, v):
        return v in self._adj[u]

    def successor(self, v, u):
        """Neighbor following u in the clockwise rotation around v."""
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def predecessor(self, v, u):
        rot = self.rotation[v]
        return rot[(rot.index(u) - 1) % len(rot)]

    def next_to(self, v, u):
        """The (at most two) neighbors of v consecutive with u around v."""
        rot = self.rotation[v]
        if len(rot) == 1:
            return ()
        if len(rot) == 2:
            other = rot[0] if rot[1] == u else rot[1]
            return (other,)
        return (self.predecessor(v, u), self.successor(v, u))

    def _check_vertex(self, v):
        if not (0 <= v < self.n):
            raise UnknownVertex(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other):
        return isinstance(other, EmbeddedGraph) and self.rotation == other.rotation

    def __hash__(self):
        return hash(self.rotation)

    def __repr__(self):
        return f"EmbeddedGraph(n={self.n}, m={self.m})"


def build(n, rotation):
    """Validate a rotation system and return the embedded graph.

    Raises AsymmetricAdjacency, DuplicateNeighbor, Disconnected or
    NonPlanarEmbedding when the input is not a simple connected genus-zero
    embedding.
    """
    if n <= 0:
        raise UnknownVertex("vertex count must be positive")
    if len(rotation) != n:
        raise UnknownVertex(f"expected {n} rotation lists, got {len(rotation)}")
    rot = tuple(tuple(r) for r in rotation)
    adj = []
    for v, r in enumerate(rot):
        s = set(r)
        if len(s) != len(r):
            raise DuplicateNeighbor(f"vertex {v} lists a neighbor twice")
        if v in s:
            raise DuplicateNeighbor(f"vertex {v} lists itself")
        for u in r:
            if not (0 <= u < n):
                raise UnknownVertex(f"vertex {v} lists out-of-range neighbor {u}")
        adj.append(frozenset(s))
    for v in range(n):
        for u in rot[v]:
            if v not in adj[u]:
                raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")
    # connectivity
    if n > 1:
        seen = bytearray(n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for u in rot[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    queue.append(u)
        if count != n:
            raise Disconnected(f"only {count} of {n} vertices reachable from 0")
    g = EmbeddedGraph(n, rot, tuple(adj), None)
    m = g.m
    f = len(trace_faces(g))
    if n - m + f != 2:
        raise NonPlanarEmbedding(f"Euler count n-m+f = {n}-{m}+{f} = {n - m + f} != 2")
    return g


def trace_faces(g):
    """Faces induced by the rotation system, in deterministic order."""
    if g._faces is not None:
        return g._faces
    succ = {}
    for v, rot in enumerate(g.rotation):
        k = len(rot)
        for i, u in enumerate(rot):
            succ[(v, u)] = rot[(i + 1) % k]
    faces = []
    visited = set()
    for v in range(g.n):
        for u in g.rotation[v]:
            if (v, u) in visited:
                continue
            corners = []
            a, b = v, u
            while (a, b) not in visited:
                visited.add((a, b))
                corners.append((a, b))
                a, b = b, succ[(b, a)]
            faces.append(Face(corners))
    fs = FaceSet(faces)
    g._faces = fs
    return fs


class SquareGraph:
    """The distance-<=2 pair structure over a base embedded graph."""

    __slots__ = ("base", "pairs", "adj")

    def __init__(self, base, pairs, adj):
        self.base = base
        self.pairs = pairs
        self.adj = adj

    def degree(self, v):
        return len(self.adj[v])


def dist2_neighborhood(g, v):
    """All vertices u != v with dist(u, v) <= 2."""
    g._check_vertex(v)
    out = set()
    for u in g._adj[v]:
        out.add(u)
        out.update(g._adj[u])
    out.discard(v)
    return out


def square(g):
    adj = []
    pairs = set()
    for v in range(g.n):
        ball = dist2_neighborhood(g, v)
        adj.append(frozenset(ball))
        for u in ball:
            if u > v:
                pairs.add((v, u))
    return SquareGraph(g, frozenset(pairs), tuple(adj))


def _face_corner_at(face, v):
    """First corner (x, v), (v, y) of the face at vertex v, or None."""
    corners = face.corners
    k = len(corners)
    for i in range(k):
        if corners[i][0] == v:
            x = corners[(i - 1) % k][0]
            y = corners[i][1]
            return x, y
    return None


def mutate_add_edge(g, u, v, face_index):
    """Add the chord uv inside the given face; returns the new graph."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v or g.adjacent(u, v):
        raise AlreadyAdjacent(f"{u} and {v} are already adjacent")
    faces = trace_faces(g)
    face = faces[face_index]
    cu = _face_corner_at(face, u)
    cv = _face_corner_at(face, v)
    if cu is None or cv is None:
        raise NotOnSameFace(f"{u} and {v} are not both on face {face_index}")
    xu, yu = cu  # corner (xu -> u), (u -> yu)
    xv, yv = cv
    rot = [list(r) for r in g.rotation]
    # insert v between xu and yu around u: succ(xu)=v, succ(v)=yu
    iu = rot[u].index(yu)
    rot[u].insert(iu, v)
    iv = rot[v].index(yv)
    rot[v].insert(iv, u)
    return build(g.n, rot)


def mutate_delete_vertex(g, v):
    """Remove v; returns (new graph, mapping old id -> new dense id)."""
    g._check_vertex(v)
    id_map = {}
    for old in range(g.n):
        if old != v:
            id_map[old] = old if old < v else old - 1
    rot = []
    for old in range(g.n):
        if old == v:
            continue
        rot.append([id_map[u] for u in g.rotation[old] if u != v])
    try:
        return build(g.n - 1, rot), id_map
    except Disconnected:
        raise WouldDisconnect(f"removing {v} disconnects the graph") from None


def induced_subgraph(g, vertices):
    """Embedding induced on a vertex set; returns (graph, old->new map).

    The subgraph must be connected.
    """
    keep = sorted(set(vertices))
    id_map = {old: i for i, old in enumerate(keep)}
    rot = []
    for old in keep:
        rot.append([id_map[u] for u in g.rotation[old] if u in id_map])
    return build(len(keep), rot), id_map


def common_faces(g, u, v):
    """Indices of faces whose boundary contains both u and v."""
    faces = trace_faces(g)
    out = []
    for i, f in enumerate(faces):
        have_u = have_v = False
        for a, _ in f.corners:
            if a == u:
                have_u = True
            elif a == v:
                have_v = True
        if have_u and have_v:
            out.append(i)
    return out


def add_edge_any_face(g, u, v):
    """Add uv inside the first face containing both endpoints."""
    for i in common_faces(g, u, v):
        return mutate_add_edge(g, u, v, i)
    raise NotOnSameFace(f"{u} and {v} share no face")


# -- text format -------------------------------------------------------------

def to_pg(g):
    """Canonical '.pg' text for a graph; bit-exact round-trip with from_pg."""
    lines = [f"n {g.n}"]
    for v in range(g.n):
        lines.append(f"{v}: " + " ".join(str(u) for u in g.rotation[v]))
    return "\n".join(lines) + "\n"


def from_pg(text):
    n = None
    rows = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n "):
            n = int(line.split()[1])
            continue
        head, _, rest = line.partition(":")
        v = int(head)
        rows[v] = [int(t) for t in rest.split()]
    if n is None:
        raise UnknownVertex("missing 'n <count>' header line")
    rotation = [rows.get(v, []) for v in range(n)]
    return build(n, rotation)


def graph_digest(g):
    """64-bit FNV-1a digest of the canonical serialization."""
    h = FNV_OFFSET
    for byte in to_pg(g).encode():
        h ^= byte
        h = (h * FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h
