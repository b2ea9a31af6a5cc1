"""Immutable simple-graph values and the structural operations the rest of
the package builds on: vertex/edge deletion, the edge-smoothing surgery,
girth, cycle listing, Hamiltonicity, and cyclic edge connectivity.

Vertices are dense ints 0..n-1.  Edges are unordered pairs stored as
(u, v) with u < v, sorted lexicographically, so an edge index is stable
for a given labeled graph.  Every operation returns a fresh graph; nothing
here mutates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import CyclicConnectivityUndefinedError, DomainError

EdgePair = tuple[int, int]


def _normalize_pair(u: int, v: int) -> EdgePair:
    if u == v:
        raise DomainError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph (no loops, no multiple edges)."""

    n: int
    edges: tuple[EdgePair, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("graph needs at least one vertex")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise DomainError(f"bad edge ({u},{v}) for n={self.n}")
            pair = (u, v)
            if prev is not None and pair <= prev:
                raise DomainError("edge list must be sorted and duplicate-free")
            prev = pair
        neighbors = [[] for _ in range(self.n)]
        incidence = [[] for _ in range(self.n)]
        index = {}
        for i, (u, v) in enumerate(self.edges):
            neighbors[u].append(v)
            neighbors[v].append(u)
            incidence[u].append(i)
            incidence[v].append(i)
            index[(u, v)] = i
        object.__setattr__(self, "_neighbors", tuple(tuple(a) for a in neighbors))
        object.__setattr__(self, "_incidence", tuple(tuple(a) for a in incidence))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from any iterable of endpoint pairs, normalizing
        orientation and order.  Duplicate pairs are rejected."""
        norm = sorted(_normalize_pair(u, v) for u, v in pairs)
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise DomainError(f"duplicate edge {a}")
        return cls(n, tuple(norm))

    # -- basic queries ------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indexes of the edges connected to v."""
        return self._incidence[v]

    def valence(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_pair(u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[_normalize_pair(u, v)]
        except KeyError:
            raise DomainError(f"({u},{v}) is not an edge") from None

    def edge_ref(self, i: int) -> "EdgeRef":
        if not 0 <= i < len(self.edges):
            raise DomainError(f"edge index {i} out of range")
        return EdgeRef(i, self.edges[i])

    def edge_refs(self) -> list["EdgeRef"]:
        return [EdgeRef(i, pair) for i, pair in enumerate(self.edges)]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._neighbors[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1


@dataclass(frozen=True)
class EdgeRef:
    """An edge of a specific graph: its index plus the endpoint pair."""

    index: int
    pair: EdgePair


EdgeLike = Union[EdgeRef, int, tuple[int, int]]


def resolve_edge(g: Graph, e: EdgeLike) -> EdgeRef:
    """Accept an EdgeRef, an edge index, or an endpoint pair."""
    if isinstance(e, EdgeRef):
        if not (0 <= e.index < g.m) or g.edges[e.index] != e.pair:
            raise DomainError(f"edge ref {e} does not belong to this graph")
        return e
    if isinstance(e, int):
        return g.edge_ref(e)
    u, v = e
    return g.edge_ref(g.edge_index(u, v))


@dataclass(frozen=True)
class Cycle:
    """A cycle as its vertex sequence, stored in canonical form: the least
    vertex first, and the smaller of the two neighbors second."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise DomainError(f"not a cycle: {vs}")

    @classmethod
    def from_vertices(cls, seq: Sequence[int]) -> "Cycle":
        vs = list(seq)
        k = vs.index(min(vs))
        vs = vs[k:] + vs[:k]
        if vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[EdgePair]:
        vs = self.vertices
        return [_normalize_pair(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


# -- valence shape ----------------------------------------------------


def valence_profile(g: Graph) -> dict[int, int]:
    """Map valence -> number of vertices with that valence."""
    prof: dict[int, int] = {}
    for v in range(g.n):
        d = g.valence(v)
        prof[d] = prof.get(d, 0) + 1
    return prof


def is_cubic(g: Graph) -> bool:
    return all(g.valence(v) == 3 for v in range(g.n))


def is_quasi_cubic(g: Graph) -> bool:
    """Every vertex 1- or 3-valent."""
    return all(g.valence(v) in (1, 3) for v in range(g.n))


def univalent_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.valence(v) == 1]


def pendant_edges(g: Graph) -> list[int]:
    """Indexes of edges connected to a univalent vertex, ordered by the
    univalent endpoint."""
    return [g.incident_edges(v)[0] for v in univalent_vertices(g)]


# -- surgeries ---------------------------------------------------------


def delete_vertices(g: Graph, q: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove the vertices in q and every edge touching them.

    Survivors are re-indexed densely; the returned mapping old -> new lets
    callers keep naming specific surviving vertices.
    """
    qs = set(q)
    if not qs <= set(range(g.n)) or len(qs) == g.n:
        raise DomainError("q must be a proper subset of the vertex set")
    mapping = {}
    for v in range(g.n):
        if v not in qs:
            mapping[v] = len(mapping)
    kept = [
        (mapping[u], mapping[v])
        for (u, v) in g.edges
        if u not in qs and v not in qs
    ]
    return Graph.from_edges(g.n - len(qs), kept), mapping


def delete_edges(g: Graph, s: Iterable[tuple[int, int]]) -> Graph:
    """Remove the given edges; every vertex is retained."""
    drop = {_normalize_pair(u, v) for u, v in s}
    unknown = drop - set(g.edges)
    if unknown:
        raise DomainError(f"not edges of the graph: {sorted(unknown)}")
    return Graph(g.n, tuple(p for p in g.edges if p not in drop))


def contract_removed_edge(g: Graph, e: EdgeLike) -> tuple[Graph, EdgeRef, EdgeRef]:
    """Remove edge e = (u, v) together with u and v, then reconnect each
    endpoint's two remaining neighbors with a new edge (smoothing both
    2-valent stubs away).

    Returns the smaller cubic graph plus the two inserted edges d1 (from
    u's side) and d2 (from v's side).  Requires a cubic host with girth
    at least 4, which is exactly what keeps the result simple.
    """
    ref = resolve_edge(g, e)
    if not is_cubic(g):
        raise DomainError("edge smoothing requires a cubic graph")
    gval = girth(g)
    if gval is None or gval < 4:
        raise DomainError("edge smoothing requires girth at least 4")
    u, v = ref.pair
    t1, t2 = (w for w in g.neighbors(u) if w != v)
    w1, w2 = (w for w in g.neighbors(v) if w != u)
    if len({t1, t2, w1, w2}) != 4:
        raise DomainError("endpoint neighborhoods overlap; smoothing undefined")
    if g.has_edge(t1, t2) or g.has_edge(w1, w2):
        raise DomainError("smoothing would create a multiple edge")
    smaller, mapping = delete_vertices(g, {u, v})
    d1_pair = _normalize_pair(mapping[t1], mapping[t2])
    d2_pair = _normalize_pair(mapping[w1], mapping[w2])
    out = Graph.from_edges(smaller.n, list(smaller.edges) + [d1_pair, d2_pair])
    return out, out.edge_ref(out.edge_index(*d1_pair)), out.edge_ref(out.edge_index(*d2_pair))


# -- cycles ------------------------------------------------------------


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; a non-tree edge closes a cycle of length
    dist[u] + dist[w] + 1, and the minimum over all roots is exact.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            if best is not None and dist[u] * 2 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def find_cycles(g: Graph, length: int) -> list[Cycle]:
    """All distinct cycles of exactly the given length, each reported once
    (deduplicated up to rotation and reflection).

    Enumeration is rooted at the least vertex of each cycle: paths grow
    only through larger vertices, and orientation is fixed by requiring
    the second vertex to be smaller than the last.
    """
    if length < 3:
        return []
    out = []
    path = [0] * length

    def grow(root: int, v: int, depth: int, used: set[int]):
        for w in g.neighbors(v):
            if depth == length - 1:
                if w == root and path[1] < path[depth]:
                    out.append(Cycle(tuple(path)))
                continue
            if w <= root or w in used:
                continue
            path[depth + 1] = w
            used.add(w)
            grow(root, w, depth + 1, used)
            used.remove(w)

    for root in range(g.n):
        path[0] = root
        grow(root, root, 0, set())
    return out


def list_pentagons(g: Graph) -> list[Cycle]:
    return find_cycles(g, 5)


def _has_cycle_in_component(n_comp: int, m_comp: int) -> bool:
    # A connected component has a cycle iff it has at least as many edges
    # as vertices.
    return m_comp >= n_comp


def has_two_disjoint_cycles(g: Graph) -> bool:
    """True iff g contains two vertex-disjoint cycles."""
    gv = girth(g)
    if gv is None:
        return False
    for length in range(gv, g.n + 1):
        for cyc in find_cycles(g, length):
            rest, _ = delete_vertices(g, set(cyc.vertices)) if len(cyc) < g.n else (None, None)
            if rest is not None and girth(rest) is not None:
                return True
    return False


def is_hamiltonian(g: Graph) -> bool:
    """True iff some cycle visits every vertex exactly once (backtracking).

    Pruning: with the path ending at ``head`` and due back at vertex 0,
    every unvisited vertex still needs two route neighbors drawn from the
    unvisited set plus the two open endpoints, a necessary condition that
    kills most dead branches early.
    """
    n = g.n
    if n < 3:
        return False
    if any(g.valence(v) < 2 for v in range(n)):
        return False
    neighbors = g._neighbors
    nbr_sets = [frozenset(a) for a in neighbors]
    visited = [False] * n
    visited[0] = True
    unvisited_deg = [g.valence(v) for v in range(n)]
    for w in neighbors[0]:
        unvisited_deg[w] -= 1

    def feasible(head: int) -> bool:
        for x in range(n):
            if visited[x]:
                continue
            if unvisited_deg[x] + (x in nbr_sets[head]) + (x in nbr_sets[0]) < 2:
                return False
        return True

    def extend(v: int, count: int) -> bool:
        if count == n:
            return 0 in nbr_sets[v]
        for w in neighbors[v]:
            if visited[w]:
                continue
            visited[w] = True
            for x in neighbors[w]:
                unvisited_deg[x] -= 1
            if feasible(w) and extend(w, count + 1):
                return True
            for x in neighbors[w]:
                unvisited_deg[x] += 1
            visited[w] = False
        return False

    return extend(0, 1)


# -- cyclic edge connectivity ------------------------------------------


def _violating_cut(g: Graph, removed: Sequence[bool]) -> bool:
    """Does removing the flagged edges leave two components that each
    contain a cycle?"""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = 0
    for i, (u, v) in enumerate(g.edges):
        if removed[i]:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merges += 1
    if g.n - merges < 2:
        return False
    nverts = [0] * g.n
    medges = [0] * g.n
    for v in range(g.n):
        nverts[find(v)] += 1
    for i, (u, v) in enumerate(g.edges):
        if not removed[i]:
            medges[find(u)] += 1
    cyclic = sum(
        1 for r in range(g.n) if nverts[r] and medges[r] >= nverts[r]
    )
    return cyclic >= 2


def cyclically_edge_connected_at_least(g: Graph, n: int) -> bool:
    """True iff no set S of at most n-1 edges separates the graph into two
    parts that both contain a cycle.

    Candidate sets are enumerated exhaustively.  For hosts of maximum
    valence 3 the candidates can be restricted to matchings: if S is a
    smallest violating set it is an edge cut delta(A), and any vertex with
    two cut edges could be moved across the cut to produce a strictly
    smaller violating set (its side keeps its cycle, since at most one of
    the vertex's edges stays inside).  So some smallest violating set has
    no two edges sharing a vertex.
    """
    if n < 2:
        raise DomainError("connectivity level must be at least 2")
    if not has_two_disjoint_cycles(g):
        raise CyclicConnectivityUndefinedError(
            "graph has no pair of disjoint cycles"
        )
    limit = n - 1
    removed = [False] * g.m
    if _violating_cut(g, removed):
        return False
    max_val = max(g.valence(v) for v in range(g.n))
    if max_val <= 3:
        used = [False] * g.n
        depth = 0

        def rec(start: int) -> bool:
            nonlocal depth
            for i in range(start, g.m):
                u, v = g.edges[i]
                if used[u] or used[v]:
                    continue
                removed[i] = True
                used[u] = used[v] = True
                depth += 1
                hit = _violating_cut(g, removed) or (depth < limit and rec(i + 1))
                depth -= 1
                removed[i] = False
                used[u] = used[v] = False
                if hit:
                    return True
            return False

        return not rec(0)
    from itertools import combinations

    for k in range(1, limit + 1):
        for s in combinations(range(g.m), k):
            for i in s:
                removed[i] = True
            bad = _violating_cut(g, removed)
            for i in s:
                removed[i] = False
            if bad:
                return False
    return True
