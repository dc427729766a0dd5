"""Finite hypergraphs without loops or multiple hyperedges.

Hyperedges are stored canonically (members sorted, edge list sorted) so that
two hypergraphs with the same vertex order and edge sets compare equal.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .errors import DPOError, DuplicateVertex, SingletonEdge, TooLarge, UnknownVertex

Edge = tuple[str, ...]

CHORDAL_BOUND = 16


def _edge_key(edge: Edge):
    return (len(edge), edge)


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def edge_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    @cached_property
    def incidence(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def degree_signature(self, v: str) -> tuple[int, ...]:
        """Sorted sizes of the hyperedges containing ``v``."""
        return tuple(sorted(len(e) for e in self.incidence[v]))

    @cached_property
    def edge_size_profile(self) -> tuple[int, ...]:
        return tuple(sorted(len(e) for e in self.edges))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> "Hypergraph":
        if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
            raise DPOError("hypergraph document needs 'vertices' and 'edges'")
        vertices, edges = doc["vertices"], doc["edges"]
        if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
            raise DPOError("'vertices' must be a list of strings")
        if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
            raise DPOError("'edges' must be a list of lists")
        return make_hypergraph(vertices, edges)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _canonical_edges(edges: Iterable[Iterable[str]]) -> tuple[Edge, ...]:
    unique = {tuple(sorted(set(e))) for e in edges}
    return tuple(sorted(unique, key=_edge_key))


def make_hypergraph(vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> Hypergraph:
    """Validate and canonicalize; repeated edges collapse to one."""
    vertices = tuple(vertices)
    known = set()
    for v in vertices:
        if v in known:
            raise DuplicateVertex(v)
        known.add(v)
    checked = []
    for e in edges:
        members = set(e)
        if len(members) < 2:
            raise SingletonEdge(f"edge {sorted(members)} has fewer than two vertices")
        missing = members - known
        if missing:
            raise UnknownVertex(", ".join(sorted(missing)))
        checked.append(members)
    return Hypergraph(vertices, _canonical_edges(checked))


def trace_subhypergraph(h: Hypergraph, subset: Iterable[str]) -> Hypergraph:
    """Restrict every edge to ``subset``; keep intersections of size at least two.

    The vertex order of the result follows ``h``.
    """
    keep = set(subset)
    missing = keep - set(h.vertices)
    if missing:
        raise UnknownVertex(", ".join(sorted(missing)))
    traced = []
    for e in h.edges:
        cut = [v for v in e if v in keep]
        if len(cut) >= 2:
            traced.append(cut)
    return Hypergraph(tuple(v for v in h.vertices if v in keep), _canonical_edges(traced))


def isolated_vertices(h: Hypergraph) -> frozenset[str]:
    return frozenset(v for v in h.vertices if not h.incidence[v])


def _search_bijection(h1: Hypergraph, h2: Hypergraph, induced: bool) -> Optional[dict[str, str]]:
    # Maps V(h1) onto V(h2). With induced=True the edge sets must correspond
    # exactly; otherwise every edge of h1 must land on an edge of h2.
    sig1 = {v: h1.degree_signature(v) for v in h1.vertices}
    sig2 = {v: h2.degree_signature(v) for v in h2.vertices}
    if induced:
        if Counter(sig1.values()) != Counter(sig2.values()):
            return None
        compatible = lambda a, b: sig1[a] == sig2[b]
    else:
        # A vertex's incident edges must map injectively onto edges of the
        # same sizes at its image.
        def compatible(a, b):
            need = Counter(sig1[a])
            have = Counter(sig2[b])
            return all(have[size] >= k for size, k in need.items())

    candidates = {v: [w for w in h2.vertices if compatible(v, w)] for v in h1.vertices}
    if any(not c for c in candidates.values()):
        return None

    # Most constrained vertices first, then by connectivity to what is placed.
    order: list[str] = []
    remaining = set(h1.vertices)
    while remaining:
        placed = set(order)

        def rank(v):
            touching = sum(1 for e in h1.incidence[v] for u in e if u in placed)
            return (len(candidates[v]), -touching, h1.vertices.index(v))

        nxt = min(remaining, key=rank)
        order.append(nxt)
        remaining.remove(nxt)

    edges1 = h1.edge_sets
    edges2 = h2.edge_sets
    position = {v: i for i, v in enumerate(order)}
    # Edges of h1 become checkable once their last member (in search order) is placed.
    closing1: dict[str, list[frozenset[str]]] = {v: [] for v in order}
    for e in edges1:
        closing1[max(e, key=position.__getitem__)].append(e)

    mapping: dict[str, str] = {}
    inverse: dict[str, str] = {}

    def consistent(v: str, w: str) -> bool:
        for e in closing1[v]:
            if frozenset(mapping[u] for u in e) not in edges2:
                return False
        if induced:
            for e in h2.incidence[w]:
                if all(u in inverse for u in e):
                    if frozenset(inverse[u] for u in e) not in edges1:
                        return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in inverse:
                continue
            mapping[v] = w
            inverse[w] = v
            if consistent(v, w) and extend(i + 1):
                return True
            del mapping[v]
            del inverse[w]
        return False

    return dict(mapping) if extend(0) else None


def isomorphism(h1: Hypergraph, h2: Hypergraph) -> Optional[dict[str, str]]:
    """Return a vertex bijection carrying E(h1) exactly onto E(h2), or None."""
    if len(h1.vertices) != len(h2.vertices) or len(h1.edges) != len(h2.edges):
        return None
    if h1.edge_size_profile != h2.edge_size_profile:
        return None
    return _search_bijection(h1, h2, induced=True)


def edge_preserving_bijection(pattern: Hypergraph, host: Hypergraph) -> Optional[dict[str, str]]:
    """Bijection V(pattern) -> V(host) sending each pattern edge to a host edge.

    Host edges need not all be hit; this is the relaxed containment test.
    """
    if len(pattern.vertices) != len(host.vertices) or len(pattern.edges) > len(host.edges):
        return None
    return _search_bijection(pattern, host, induced=False)


def is_isomorphism(h1: Hypergraph, h2: Hypergraph, mapping: dict[str, str]) -> bool:
    if set(mapping) != set(h1.vertices) or set(mapping.values()) != set(h2.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    image = frozenset(frozenset(mapping[v] for v in e) for e in h1.edge_sets)
    return image == h2.edge_sets


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @cached_property
    def adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> "Graph":
        h = Hypergraph.from_json(doc)
        if any(len(e) != 2 for e in h.edges):
            raise DPOError("graph files may only contain edges of size 2")
        return make_graph(h.vertices, h.edges)


def make_graph(vertices: Iterable[str], pairs: Iterable[Iterable[str]]) -> Graph:
    h = make_hypergraph(vertices, pairs)
    if any(len(e) != 2 for e in h.edges):
        raise DPOError("graph edges must be pairs")
    return Graph(h.vertices, tuple((e[0], e[1]) for e in h.edges))


def two_section(h: Hypergraph) -> Graph:
    pairs = {pair for e in h.edges for pair in combinations(e, 2)}
    return Graph(h.vertices, tuple(sorted(pairs)))


@dataclass(frozen=True)
class ChordalityReport:
    chordal: bool
    cycle: Optional[tuple[str, ...]] = None
    supporting_edges: Optional[tuple[Edge, ...]] = None

    def to_json(self) -> dict:
        witness = None
        if not self.chordal:
            witness = {"cycle": list(self.cycle), "edges": [list(e) for e in self.supporting_edges]}
        return {"chordal": self.chordal, "witness": witness}


def distinct_supporting_edges(h: Hypergraph, cycle: tuple[str, ...]) -> Optional[tuple[Edge, ...]]:
    """Assign pairwise distinct hyperedges to the consecutive pairs of ``cycle``.

    Solved as a bipartite matching between pairs and hyperedges. The i-th
    returned edge covers ``cycle[i], cycle[i+1]`` (indices mod length).
    """
    k = len(cycle)
    pairs = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    options = [[e for e in h.edges if a in e and b in e] for a, b in pairs]
    owner: dict[Edge, int] = {}

    def augment(i: int, seen: set) -> bool:
        for e in options[i]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = i
                return True
        return False

    for i in range(k):
        if not augment(i, set()):
            return None
    chosen: list[Optional[Edge]] = [None] * k
    for e, i in owner.items():
        chosen[i] = e
    return tuple(chosen)


def is_chordal(h: Hypergraph, bound: int = CHORDAL_BOUND) -> ChordalityReport:
    """Search for a cycle of length >= 4 with no two nonconsecutive vertices adjacent.

    The search grows chordless paths from each start vertex (the smallest
    index on its cycle), so every such cycle is reached.
    """
    n = len(h.vertices)
    if n > bound:
        raise TooLarge("is_chordal", n, bound)
    adj = two_section(h).adjacency
    index = {v: i for i, v in enumerate(h.vertices)}

    def grow(path: list[str]):
        start, last = path[0], path[-1]
        for nxt in sorted(adj[last], key=index.__getitem__):
            if index[nxt] <= index[start] or nxt in path:
                continue
            # nxt may touch only last, and start if it closes the cycle.
            inner = path[1:-1]
            if any(u in adj[nxt] for u in inner):
                continue
            candidate = path + [nxt]
            if len(path) >= 2 and start in adj[nxt]:
                if len(candidate) >= 4:
                    support = distinct_supporting_edges(h, tuple(candidate))
                    if support is not None:
                        return tuple(candidate), support
                continue
            found = grow(candidate)
            if found:
                return found
        return None

    for v in h.vertices:
        found = grow([v])
        if found:
            return ChordalityReport(False, found[0], found[1])
    return ChordalityReport(True)
