"""Edge-3-coloring enumeration and counting, decomposition counts, the
pendant-edge parity residual, and the psi number of a snark edge.

Colors are the three nonzero Klein-group elements (see klein.py).  The
counting and enumeration paths share one propagation kernel: edges are
ordered depth-first from a trivalent root so that every edge after the
first touches an already-colored vertex, which turns the two-colored
vertex constraint into forced moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BudgetExceededError, CountContradictionError, DomainError
from .graph import (
    EdgeLike,
    Graph,
    contract_removed_edge,
    cyclically_edge_connected_at_least,
    girth,
    is_cubic,
    is_quasi_cubic,
    pendant_edges,
    resolve_edge,
)
from .klein import COLORS, color_name, group_add, parse_color


@dataclass(frozen=True)
class EdgeColoring:
    """A total proper assignment edge index -> color for a host graph."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.m:
            raise DomainError("coloring must assign every edge")

    def color(self, e: EdgeLike) -> int:
        return self.colors[resolve_edge(self.graph, e).index]

    def is_proper(self) -> bool:
        if not all(c in COLORS for c in self.colors):
            return False
        for v in range(self.graph.n):
            inc = self.graph.incident_edges(v)
            seen = 0
            for i in inc:
                bit = 1 << self.colors[i]
                if seen & bit:
                    return False
                seen |= bit
        return True

    def to_text(self) -> str:
        """Line-oriented form: one ``<edge index> <color name>`` per line."""
        return "\n".join(
            f"{i} {color_name(c)}" for i, c in enumerate(self.colors)
        ) + "\n"

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> "EdgeColoring":
        assign: dict[int, int] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            idx_s, name = line.split()
            assign[int(idx_s)] = parse_color(name)
        if sorted(assign) != list(range(graph.m)):
            raise DomainError("coloring text does not cover the edge set")
        return cls(graph, tuple(assign[i] for i in range(graph.m)))


# -- propagation kernel -------------------------------------------------


def _check_colorable_shape(g: Graph, require_connected: bool = True):
    if any(g.valence(v) > 3 for v in range(g.n)):
        raise DomainError("edge-3-coloring needs maximum valence 3")
    if require_connected and not g.is_connected():
        raise DomainError("graph must be connected")


def _propagation_order(g: Graph, root: Optional[int] = None) -> list[int]:
    """Edge order such that, within each component, every edge after the
    first shares a vertex with some earlier edge."""
    order: list[int] = []
    done_edge = [False] * g.m
    seen = [False] * g.n
    starts = list(range(g.n))
    if root is not None:
        starts = [root] + [v for v in starts if v != root]
    starts.sort(key=lambda v: (v != root, -g.valence(v), v))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for i in g.incident_edges(u):
                if done_edge[i]:
                    continue
                done_edge[i] = True
                order.append(i)
                a, b = g.edges[i]
                w = b if a == u else a
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return order


def _search_colorings(
    g: Graph,
    fixed: Optional[dict[int, int]] = None,
    root: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every proper total coloring extending ``fixed``, as a tuple of
    colors indexed by edge.  Shared by the counting and enumeration paths."""
    m = g.m
    assign = [0] * m
    mask = [0] * g.n
    if fixed:
        for i, c in fixed.items():
            u, v = g.edges[i]
            bit = 1 << c
            if (mask[u] | mask[v]) & bit:
                return
            mask[u] |= bit
            mask[v] |= bit
            assign[i] = c
    order = [i for i in _propagation_order(g, root) if not fixed or i not in fixed]
    edges = g.edges
    nodes = 0

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        if k == len(order):
            yield tuple(assign)
            return
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceededError(f"coloring search exceeded {node_budget} nodes")
        i = order[k]
        u, v = edges[i]
        forb = mask[u] | mask[v]
        for c in COLORS:
            bit = 1 << c
            if forb & bit:
                continue
            mask[u] |= bit
            mask[v] |= bit
            assign[i] = c
            yield from rec(k + 1)
            mask[u] &= ~bit
            mask[v] &= ~bit
        assign[i] = 0

    yield from rec(0)


def _count_search(
    g: Graph,
    fixed: Optional[dict[int, int]] = None,
    root: Optional[int] = None,
    node_budget: Optional[int] = None,
) -> int:
    """Count what _search_colorings would yield, without materializing."""
    m = g.m
    mask = [0] * g.n
    if fixed:
        for i, c in fixed.items():
            u, v = g.edges[i]
            bit = 1 << c
            if (mask[u] | mask[v]) & bit:
                return 0
            mask[u] |= bit
            mask[v] |= bit
    order = [i for i in _propagation_order(g, root) if not fixed or i not in fixed]
    edges = g.edges
    last = len(order)
    nodes = 0

    def rec(k: int) -> int:
        nonlocal nodes
        if k == last:
            return 1
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise BudgetExceededError(f"coloring search exceeded {node_budget} nodes")
        u, v = edges[order[k]]
        forb = mask[u] | mask[v]
        total = 0
        for c in (1, 2, 3):
            bit = 1 << c
            if forb & bit:
                continue
            mask[u] |= bit
            mask[v] |= bit
            total += rec(k + 1)
            mask[u] &= ~bit
            mask[v] &= ~bit
        return total

    return rec(0)


# -- public counting API -------------------------------------------------


def count_colorings(g: Graph, node_budget: Optional[int] = None) -> int:
    """Exact number of proper edge-3-colorings of a connected graph with
    maximum valence 3."""
    _check_colorable_shape(g)
    return _count_search(g, node_budget=node_budget)


def enumerate_colorings(g: Graph) -> Iterator[EdgeColoring]:
    """Yield each proper edge-3-coloring exactly once."""
    _check_colorable_shape(g)
    for assign in _search_colorings(g):
        yield EdgeColoring(g, assign)


def _decomposition_fixing(g: Graph) -> tuple[dict[int, int], int]:
    pivot = next((v for v in range(g.n) if g.valence(v) == 3), None)
    if pivot is None:
        raise DomainError("decomposition counting needs a trivalent vertex")
    e1, e2, e3 = g.incident_edges(pivot)
    return {e1: 1, e2: 2, e3: 3}, pivot


def count_decompositions(g: Graph, node_budget: Optional[int] = None) -> int:
    """Number of partitions of the edge set into three classes with no two
    adjacent edges sharing a class.

    Counted by pinning the three colors at one trivalent vertex, which
    selects exactly one coloring per decomposition; no division by the 6
    color permutations is ever performed.
    """
    _check_colorable_shape(g)
    if not is_quasi_cubic(g):
        raise DomainError("decomposition counting is defined for quasi-cubic graphs")
    fixed, pivot = _decomposition_fixing(g)
    return _count_search(g, fixed=fixed, root=pivot, node_budget=node_budget)


def enumerate_decompositions(g: Graph) -> Iterator[EdgeColoring]:
    """Yield one canonical coloring per decomposition (the representative
    with the pinned colors at the first trivalent vertex)."""
    _check_colorable_shape(g)
    if not is_quasi_cubic(g):
        raise DomainError("decomposition counting is defined for quasi-cubic graphs")
    fixed, pivot = _decomposition_fixing(g)
    for assign in _search_colorings(g, fixed=fixed, root=pivot):
        yield EdgeColoring(g, assign)


# -- parity ---------------------------------------------------------------


def parity_residual(g: Graph, coloring: EdgeColoring) -> int:
    """Klein-group sum of the colors on pendant edges (edges meeting a
    univalent vertex).  Zero for every valid coloring."""
    if coloring.graph != g:
        raise DomainError("coloring does not belong to this graph")
    if not is_quasi_cubic(g):
        raise DomainError("parity residual is defined for quasi-cubic graphs")
    pend = pendant_edges(g)
    if not pend:
        raise DomainError("cubic graph has no pendant edges")
    total = 0
    for i in pend:
        total = group_add(total, coloring.colors[i])
    return total


# -- psi -------------------------------------------------------------------


def is_snark(g: Graph) -> bool:
    """Certification predicate: simple cubic, girth >= 5, cyclically
    4-edge-connected, and uncolorable."""
    if not (g.is_connected() and is_cubic(g)):
        return False
    gv = girth(g)
    if gv is None or gv < 5:
        return False
    if not cyclically_edge_connected_at_least(g, 4):
        return False
    return count_colorings(g) == 0


def psi(
    g: Graph,
    e: EdgeLike,
    strict: bool = False,
    node_budget: Optional[int] = None,
) -> int:
    """The psi number of (g, e): one third of the decomposition count of
    the graph obtained by removing e and smoothing its endpoints away.

    The host must be a snark (caller-asserted unless ``strict``); the
    divisibility by 3 is guaranteed for snarks and its failure raises
    CountContradictionError, never returns a wrong value.
    """
    ref = resolve_edge(g, e)
    if strict and not is_snark(g):
        raise DomainError("strict mode: graph failed snark certification")
    reduced, _d1, _d2 = contract_removed_edge(g, ref)
    ned = count_decompositions(reduced, node_budget=node_budget)
    if ned % 3:
        raise CountContradictionError(
            f"decomposition count {ned} of the reduced graph is not a multiple of 3"
        )
    return ned // 3


def psi_with_counts(
    g: Graph, e: EdgeLike, node_budget: Optional[int] = None
) -> tuple[int, int, int]:
    """(psi, |ED| of reduced graph, |EC| of reduced graph); the coloring
    count comes from the decomposition count via the 6x correspondence."""
    ref = resolve_edge(g, e)
    reduced, _d1, _d2 = contract_removed_edge(g, ref)
    ned = count_decompositions(reduced, node_budget=node_budget)
    if ned % 3:
        raise CountContradictionError(
            f"decomposition count {ned} of the reduced graph is not a multiple of 3"
        )
    return ned // 3, ned, 6 * ned
