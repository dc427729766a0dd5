"""Interval recognition for hypergraphs (consecutive ones) and for graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .errors import TooLarge
from .hypergraph import Graph, Hypergraph
from .pqtree import consecutive_ordering

BRUTEFORCE_BOUND = 10
GRAPH_BOUND = 20


@dataclass(frozen=True)
class IntervalCertificate:
    interval: bool
    ordering: Optional[tuple[str, ...]] = None

    def to_json(self) -> dict:
        return {"interval": self.interval, "ordering": None if self.ordering is None else list(self.ordering)}


def is_consecutive(ordering: Sequence[str], edges: Iterable[Iterable[str]]) -> bool:
    """Every edge occupies a contiguous block of positions in ``ordering``."""
    pos = {v: i for i, v in enumerate(ordering)}
    for e in edges:
        idx = [pos[v] for v in e]
        if max(idx) - min(idx) + 1 != len(idx):
            return False
    return True


def _certify(h: Hypergraph, ordering) -> IntervalCertificate:
    if ordering is None:
        return IntervalCertificate(False)
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(h.vertices) or not is_consecutive(ordering, h.edges):
        raise AssertionError(f"solver produced an invalid ordering {ordering}")
    return IntervalCertificate(True, ordering)


def is_interval(h: Hypergraph) -> IntervalCertificate:
    return _certify(h, consecutive_ordering(h.vertices, h.edges))


def is_interval_bruteforce(h: Hypergraph, bound: int = BRUTEFORCE_BOUND) -> IntervalCertificate:
    """Try every vertex permutation in lexicographic order of the input order."""
    n = len(h.vertices)
    if n > bound:
        raise TooLarge("is_interval_bruteforce", n, bound)
    index = {v: i for i, v in enumerate(h.vertices)}
    edges = [[index[v] for v in e] for e in h.edges]
    for perm in permutations(range(n)):
        pos = [0] * n
        for p, v in enumerate(perm):
            pos[v] = p
        ok = True
        for e in edges:
            ps = [pos[v] for v in e]
            if max(ps) - min(ps) + 1 != len(ps):
                ok = False
                break
        if ok:
            return _certify(h, [h.vertices[v] for v in perm])
    return IntervalCertificate(False)


def maximal_cliques(g: Graph) -> list[frozenset[str]]:
    """Bron-Kerbosch with pivoting."""
    adj = g.adjacency
    cliques: list[frozenset[str]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    return cliques


def is_interval_graph(g: Graph, bound: int = GRAPH_BOUND) -> bool:
    """Maximal cliques admit a linear order with each vertex's cliques consecutive."""
    n = len(g.vertices)
    if n > bound:
        raise TooLarge("is_interval_graph", n, bound)
    cliques = maximal_cliques(g)
    by_vertex = [[i for i, c in enumerate(cliques) if v in c] for v in g.vertices]
    return consecutive_ordering(range(len(cliques)), by_vertex) is not None
