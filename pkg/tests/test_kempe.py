import random

import pytest

from snarkforge.errors import DomainError
from snarkforge.graph import contract_removed_edge, delete_edges, list_pentagons
from snarkforge.klein import A, B, C, COLORS
from snarkforge.coloring import enumerate_colorings
from snarkforge.construct import remove_pentagon
from snarkforge.kempe import (
    are_orthogonal,
    color_pair_counts,
    kempe_chain,
    kempe_chain_two_colors,
    kempe_swap,
    orthogonal_pairs,
)


def all_chains(coloring):
    g = coloring.graph
    for x, y in ((1, 2), (1, 3), (2, 3)):
        done = set()
        for i in range(g.m):
            if i in done or coloring.colors[i] not in (x, y):
                continue
            chain = kempe_chain_two_colors(coloring, x, y, i)
            done |= chain.edge_indexes
            yield chain


class TestChains:
    def test_cubic_chains_are_cycles(self, W):
        for coloring in enumerate_colorings(W):
            for chain in all_chains(coloring):
                assert chain.is_cycle
                assert chain.endpoints == ()
                assert len(chain.edge_indexes) % 2 == 0

    def test_same_pair_chains_disjoint(self, W, P):
        g = delete_edges(P, list_pentagons(P)[0].edge_pairs())
        for host_coloring in list(enumerate_colorings(W)) + list(enumerate_colorings(g)):
            for x, y in ((1, 2), (1, 3), (2, 3)):
                seen_vertices = set()
                done = set()
                for i in range(host_coloring.graph.m):
                    if i in done or host_coloring.colors[i] not in (x, y):
                        continue
                    chain = kempe_chain_two_colors(host_coloring, x, y, i)
                    done |= chain.edge_indexes
                    verts = {
                        v
                        for j in chain.edge_indexes
                        for v in host_coloring.graph.edges[j]
                    }
                    assert not verts & seen_vertices
                    seen_vertices |= verts

    def test_pendant_chain_walks_to_the_far_stub(self, P):
        # in the pentagon-free graph, the chain through the pendant edge
        # one step behind the spread triple is a path, and its far end is
        # forced two steps behind -- otherwise the host would be colorable
        p = list_pentagons(P)[0]
        reduced, pendants = remove_pentagon(P, p)
        for coloring in enumerate_colorings(reduced):
            cols = [coloring.colors[pendants[i].index] for i in range(5)]
            ks = [
                k
                for k in range(5)
                if cols[(k - 2) % 5] == cols[k] == cols[(k + 2) % 5]
            ]
            assert len(ks) == 1
            k = ks[0]
            x, y = cols[k], cols[(k - 1) % 5]
            chain = kempe_chain_two_colors(coloring, x, y, pendants[(k - 1) % 5])
            assert chain.kind == "path"
            assert set(chain.endpoints) == {
                p.vertices[(k - 1) % 5],
                p.vertices[(k - 2) % 5],
            }

    def test_seed_must_carry_chain_color(self, W):
        coloring = next(enumerate_colorings(W))
        i = next(j for j in range(W.m) if coloring.colors[j] == A)
        with pytest.raises(DomainError):
            kempe_chain_two_colors(coloring, B, C, i)
        with pytest.raises(DomainError):
            kempe_chain(coloring, i, A)


class TestSwap:
    def test_involution_everywhere_on_wheel(self, W):
        for coloring in enumerate_colorings(W):
            for chain in all_chains(coloring):
                swapped = kempe_swap(coloring, chain)
                assert swapped.is_proper()
                back_chain = kempe_chain_two_colors(
                    swapped, *sorted(chain.colors), next(iter(chain.edge_indexes))
                )
                assert back_chain.edge_indexes == chain.edge_indexes
                assert kempe_swap(swapped, back_chain) == coloring

    def test_involution_sampled_on_larger_hosts(self, P, J5):
        rng = random.Random(11)
        hosts = [
            delete_edges(P, list_pentagons(P)[0].edge_pairs()),
            contract_removed_edge(J5, 0)[0],
        ]
        for g in hosts:
            pool = list(enumerate_colorings(g))
            for coloring in rng.sample(pool, min(100, len(pool))):
                chains = list(all_chains(coloring))
                chain = rng.choice(chains)
                swapped = kempe_swap(coloring, chain)
                assert swapped.is_proper()
                again = kempe_chain_two_colors(
                    swapped, *sorted(chain.colors), next(iter(chain.edge_indexes))
                )
                assert kempe_swap(swapped, again) == coloring

    def test_rim_swap_exchanges_the_two_pinned_colorings(self, W_parts):
        W, spokes, rim = W_parts
        f0, f2 = spokes[0], spokes[2]
        pinned = [
            c
            for c in enumerate_colorings(W)
            if c.colors[f0.index] == A and c.colors[f2.index] == A
        ]
        assert len(pinned) == 2
        first, second = pinned
        chain = kempe_chain_two_colors(first, B, C, rim[0])
        assert chain.is_cycle and len(chain.edge_indexes) == 8
        assert kempe_swap(first, chain) == second


class TestOrthogonality:
    def test_wheel_spoke_pairs(self, W_parts):
        W, spokes, _ = W_parts
        assert are_orthogonal(W, spokes[0], spokes[2])
        assert are_orthogonal(W, spokes[1], spokes[3])

    def test_adjacent_edges_never_orthogonal(self, W):
        u, v = W.edges[0]
        other = next(i for i in W.incident_edges(u) if i != 0)
        assert not are_orthogonal(W, 0, other)

    def test_uncolorable_host_rejected(self, P):
        with pytest.raises(DomainError):
            are_orthogonal(P, 0, 7)

    def test_identical_edges_rejected(self, W):
        with pytest.raises(DomainError):
            are_orthogonal(W, 0, 0)


class TestColorPairCounts:
    def test_wheel_table_flat(self, W_parts):
        W, spokes, _ = W_parts
        table = color_pair_counts(W, spokes[0], spokes[2])
        assert set(table.values()) == {2}

    def test_table_partitions_colorings(self, W_parts):
        W, spokes, _ = W_parts
        table = color_pair_counts(W, spokes[0], spokes[1])
        assert sum(table.values()) == 18

    def test_adjacent_pair_diagonal_zero(self, W):
        u, v = W.edges[0]
        other = next(i for i in W.incident_edges(u) if i != 0)
        table = color_pair_counts(W, 0, other)
        assert all(table[(x, x)] == 0 for x in COLORS)


class TestOrthogonalPairs:
    def test_wheel_census(self, W_parts):
        W, spokes, _ = W_parts
        pairs = orthogonal_pairs(W)
        expected = {
            tuple(sorted((spokes[0].index, spokes[2].index))),
            tuple(sorted((spokes[1].index, spokes[3].index))),
        }
        assert expected <= set(pairs)
        # and on this host there is nothing else
        assert set(pairs) == expected

    def test_pairs_never_adjacent(self, W):
        for i, j in orthogonal_pairs(W):
            assert not set(W.edges[i]) & set(W.edges[j])

    def test_agrees_with_pairwise_predicate(self, W):
        pairs = set(orthogonal_pairs(W))
        for i in range(W.m):
            for j in range(i + 1, W.m):
                assert ((i, j) in pairs) == are_orthogonal(W, i, j)
