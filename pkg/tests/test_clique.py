"""The bitmask branch-and-bound clique solver against subset enumeration."""

import itertools
import random

from crossvec.clique import max_clique, max_clique_parallel


def adj_from_edges(n, edges):
    adj = [0] * n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def brute_max_clique(n, adj):
    best = 0
    witness = ()
    for size in range(n, 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(range(n), size):
            if all(adj[a] >> b & 1 for a, b in itertools.combinations(combo, 2)):
                return size, combo
    return best, witness


class TestExactness:
    def test_edgeless(self):
        res = max_clique([0, 0, 0], 3)
        assert res.size == 1
        assert len(res.members) == 1
        assert not res.truncated

    def test_empty_graph(self):
        res = max_clique([], 0)
        assert res.size == 0 and res.members == ()

    def test_complete(self):
        n = 6
        adj = adj_from_edges(n, itertools.combinations(range(n), 2))
        res = max_clique(adj, n)
        assert res.size == 6
        assert res.members == tuple(range(6))

    def test_two_triangles_and_bridge(self):
        edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
        res = max_clique(adj_from_edges(6, edges), 6)
        assert res.size == 3
        assert set(res.members) in ({0, 1, 2}, {3, 4, 5})

    def test_random_graphs_match_brute_force(self):
        rng = random.Random(1729)
        for _ in range(60):
            n = rng.randrange(1, 14)
            edges = [
                e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5
            ]
            adj = adj_from_edges(n, edges)
            expect, _ = brute_max_clique(n, adj)
            res = max_clique(adj, n)
            assert res.size == expect
            assert not res.truncated
            # returned members really form a clique of the claimed size
            ms = res.members
            assert len(ms) == res.size
            assert all(
                adj[a] >> b & 1 for a, b in itertools.combinations(ms, 2)
            )


class TestControls:
    def test_initial_suppresses_non_improvements(self):
        edges = [(0, 1), (1, 2), (0, 2)]
        adj = adj_from_edges(3, edges)
        res = max_clique(adj, 3, initial=3)
        assert res.size == 3
        assert res.members == ()
        res = max_clique(adj, 3, initial=2)
        assert res.size == 3
        assert len(res.members) == 3

    def test_stop_at_returns_early_witness(self):
        n = 12
        adj = adj_from_edges(n, itertools.combinations(range(n), 2))
        res = max_clique(adj, n, stop_at=4)
        # may overshoot on a deep leaf, never undershoots
        assert res.size >= 4
        assert len(res.members) == res.size
        assert not res.truncated

    def test_node_limit_truncates(self):
        rng = random.Random(9)
        n = 40
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.7]
        adj = adj_from_edges(n, edges)
        res = max_clique(adj, n, node_limit=5)
        assert res.truncated
        full = max_clique(adj, n)
        assert not full.truncated
        assert full.size >= res.size

    def test_roots_restriction(self):
        # roots {0} explores only cliques whose least vertex is 0
        edges = [(0, 1), (2, 3), (3, 4), (2, 4)]
        adj = adj_from_edges(5, edges)
        assert max_clique(adj, 5, roots=[0]).size == 2
        assert max_clique(adj, 5, roots=[0, 2]).size == 3


class TestParallel:
    def test_matches_serial_and_is_deterministic(self):
        rng = random.Random(4242)
        n = 18
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        adj = adj_from_edges(n, edges)
        serial = max_clique_parallel(adj, n, workers=1)
        for workers in (2, 3):
            par = max_clique_parallel(adj, n, workers=workers)
            assert par.size == serial.size
            assert par.members == serial.members
            assert not par.truncated
