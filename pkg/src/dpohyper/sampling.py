"""Seeded random hypergraphs for property checks."""
from __future__ import annotations

import random

from .hypergraph import Hypergraph, make_hypergraph


def random_interval_hypergraph(rng: random.Random, max_vertices: int, max_edges: int = 6) -> Hypergraph:
    """Random intervals over a hidden vertex order; vertex labels are shuffled."""
    n = rng.randint(2, max_vertices)
    labels = [f"v{i}" for i in range(n)]
    hidden = labels[:]
    rng.shuffle(hidden)
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        i = rng.randrange(n - 1)
        j = rng.randint(i + 1, n - 1)
        edges.append(hidden[i : j + 1])
    return make_hypergraph(labels, edges)


def random_hypergraph(rng: random.Random, max_vertices: int, max_edges: int = 7) -> Hypergraph:
    """Either uniformly random edges or an interval hypergraph with a few random edges added.

    The second kind lands near the interval boundary, so both outcomes of an
    interval test occur often.
    """
    n = rng.randint(1, max_vertices)
    labels = [f"v{i}" for i in range(n)]
    if n < 2:
        return make_hypergraph(labels, [])
    edges = []
    if rng.random() < 0.5:
        for _ in range(rng.randint(0, max_edges)):
            edges.append(rng.sample(labels, rng.randint(2, n)))
    else:
        hidden = labels[:]
        rng.shuffle(hidden)
        for _ in range(rng.randint(1, max_edges - 1)):
            i = rng.randrange(n - 1)
            j = rng.randint(i + 1, min(n - 1, i + 3))
            edges.append(hidden[i : j + 1])
        for _ in range(rng.randint(0, 2)):
            edges.append(rng.sample(labels, rng.choice([2, 2, 3])) if n >= 3 else labels)
    return make_hypergraph(labels, edges)
