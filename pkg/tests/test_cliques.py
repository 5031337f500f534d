"""Maximal-clique enumeration against a brute-force subset filter."""

import random
from itertools import combinations

from maxrigid.cliques import bits, max_cliques


def brute_max_cliques(adj, n, subset):
    verts = [v for v in range(n) if subset >> v & 1]
    cliques = []
    for r in range(len(verts) + 1):
        for combo in combinations(verts, r):
            if all(adj[a] >> b & 1 for a, b in combinations(combo, 2)):
                mask = sum(1 << v for v in combo)
                cliques.append(mask)
    maximal = []
    for c in cliques:
        if not any(d != c and d & c == c for d in cliques):
            maximal.append(c)
    return sorted(maximal)


def random_graph(rng, n, p):
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def test_against_bruteforce():
    rng = random.Random(7)
    for trial in range(40):
        n = rng.randrange(1, 11)
        adj = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        subset = rng.randrange(1 << n)
        got = sorted(max_cliques(adj, subset))
        assert got == brute_max_cliques(adj, n, subset), (trial, adj, subset)


def test_full_universe_default():
    adj = random_graph(random.Random(1), 8, 0.4)
    assert sorted(max_cliques(adj)) == brute_max_cliques(adj, 8, (1 << 8) - 1)


def test_bits_roundtrip():
    assert bits(0) == []
    assert bits(0b10110) == [1, 2, 4]
