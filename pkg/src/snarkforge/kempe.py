"""Kempe chains: the maximal two-colored connected subgraphs of an
edge-3-coloring, the color-interchange move on them, and the derived
orthogonality predicate for edge pairs of a colorable cubic graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import EdgeLike, Graph, is_cubic, resolve_edge
from .klein import COLORS
from .coloring import EdgeColoring, enumerate_colorings


@dataclass(frozen=True)
class KempeChain:
    """A maximal connected subgraph carrying exactly two colors.  Either a
    path whose two endpoints are univalent in the host, or a cycle."""

    coloring: EdgeColoring
    colors: frozenset[int]
    edge_indexes: frozenset[int]
    kind: str  # "path" or "cycle"
    endpoints: tuple[int, ...]  # the univalent path ends; empty for cycles

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"


def kempe_chain_two_colors(
    coloring: EdgeColoring, x: int, y: int, seed: EdgeLike
) -> KempeChain:
    """The unique maximal connected xy-colored subgraph through the seed
    edge, which must itself be colored x or y."""
    if x == y or x not in COLORS or y not in COLORS:
        raise DomainError("need two distinct colors")
    g = coloring.graph
    ref = resolve_edge(g, seed)
    if coloring.colors[ref.index] not in (x, y):
        raise DomainError("seed edge does not carry either chain color")
    pair = (x, y)
    in_chain = {ref.index}
    stack = [ref.index]
    touched: dict[int, int] = {}  # vertex -> number of chain edges at it
    while stack:
        i = stack.pop()
        for v in g.edges[i]:
            touched[v] = touched.get(v, 0) + 1
            for j in g.incident_edges(v):
                if j not in in_chain and coloring.colors[j] in pair:
                    in_chain.add(j)
                    stack.append(j)
    ends = tuple(sorted(v for v, cnt in touched.items() if cnt == 1))
    kind = "path" if ends else "cycle"
    return KempeChain(coloring, frozenset(pair), frozenset(in_chain), kind, ends)


def kempe_chain(coloring: EdgeColoring, e: EdgeLike, y: int) -> KempeChain:
    """Chain through e for the color pair {color(e), y}."""
    x = coloring.color(e)
    if y == x:
        raise DomainError("second color must differ from the edge's color")
    return kempe_chain_two_colors(coloring, x, y, e)


def kempe_swap(coloring: EdgeColoring, chain: KempeChain) -> EdgeColoring:
    """Interchange the chain's two colors along the chain.  The result is
    again proper, and swapping twice restores the original."""
    if chain.coloring != coloring:
        raise DomainError("chain does not belong to this coloring")
    x, y = sorted(chain.colors)
    flip = x ^ y
    new = list(coloring.colors)
    for i in chain.edge_indexes:
        new[i] ^= flip
    swapped = EdgeColoring(coloring.graph, tuple(new))
    assert swapped.is_proper()
    return swapped


def _cocyclic_in(coloring: EdgeColoring, d1: int, d2: int) -> bool:
    """Do d1 and d2 lie on one two-colored cycle of this coloring?"""
    x = coloring.colors[d1]
    y = coloring.colors[d2]
    pairs = [(x, y)] if x != y else [(x, z) for z in COLORS if z != x]
    for p, q in pairs:
        chain = kempe_chain_two_colors(coloring, p, q, d1)
        if chain.is_cycle and d2 in chain.edge_indexes:
            return True
    return False


def are_orthogonal(h: Graph, d1: EdgeLike, d2: EdgeLike) -> bool:
    """True iff no coloring of h puts d1 and d2 on a common two-colored
    Kempe cycle.  Decided by full enumeration of the colorings.

    Defined for colorable cubic hosts; an uncolorable host is a domain
    error, as is d1 == d2.
    """
    if not is_cubic(h):
        raise DomainError("orthogonality is defined for cubic hosts")
    r1, r2 = resolve_edge(h, d1), resolve_edge(h, d2)
    if r1.index == r2.index:
        raise DomainError("need two distinct edges")
    seen_any = False
    for coloring in enumerate_colorings(h):
        seen_any = True
        if _cocyclic_in(coloring, r1.index, r2.index):
            return False
    if not seen_any:
        raise DomainError("host graph is uncolorable")
    return True


def color_pair_counts(
    h: Graph, d1: EdgeLike, d2: EdgeLike
) -> dict[tuple[int, int], int]:
    """Table (x, y) -> number of colorings with d1 colored x and d2
    colored y.  Keys cover all nine ordered color pairs."""
    r1, r2 = resolve_edge(h, d1), resolve_edge(h, d2)
    table = {(x, y): 0 for x in COLORS for y in COLORS}
    for coloring in enumerate_colorings(h):
        table[(coloring.colors[r1.index], coloring.colors[r2.index])] += 1
    return table


def orthogonal_pairs(h: Graph) -> list[tuple[int, int]]:
    """All unordered pairs of orthogonal edges of a colorable cubic graph.

    One full enumeration suffices: every pair seen together on some
    two-colored cycle is struck out, and the survivors are orthogonal.
    Adjacent pairs are always co-cyclic, so they never survive.
    """
    if not is_cubic(h):
        raise DomainError("orthogonality is defined for cubic hosts")
    cocyclic: set[tuple[int, int]] = set()
    seen_any = False
    for coloring in enumerate_colorings(h):
        seen_any = True
        for x, y in ((1, 2), (1, 3), (2, 3)):
            done: set[int] = set()
            for i in range(h.m):
                if i in done or coloring.colors[i] not in (x, y):
                    continue
                chain = kempe_chain_two_colors(coloring, x, y, i)
                done |= chain.edge_indexes
                if chain.is_cycle:
                    members = sorted(chain.edge_indexes)
                    for a in range(len(members)):
                        for b in range(a + 1, len(members)):
                            cocyclic.add((members[a], members[b]))
    if not seen_any:
        raise DomainError("host graph is uncolorable")
    return [
        (i, j)
        for i in range(h.m)
        for j in range(i + 1, h.m)
        if (i, j) not in cocyclic
    ]
