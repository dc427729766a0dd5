"""Doubly partial orders on labeled planar points and their competition structures.

There is an arc from ``u`` to ``v`` exactly when ``v``'s point is strictly
dominated by ``u``'s. Arcs are never stored; they are recomputed from the
coordinates whenever a derivation needs them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import DPOError, DuplicateId, DuplicatePoint, UnknownVertex
from .geometry import Point2, down_right, strictly_dominated
from .hypergraph import Edge, Graph, Hypergraph, _canonical_edges


@dataclass(frozen=True)
class DoublyPartialOrder:
    points: tuple[Point2, ...]

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points)

    @cached_property
    def by_id(self) -> dict[str, Point2]:
        return {p.id: p for p in self.points}

    def point(self, v: str) -> Point2:
        try:
            return self.by_id[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def has_arc(self, u: str, v: str) -> bool:
        return strictly_dominated(self.point(v), self.point(u))

    def arcs(self) -> list[tuple[str, str]]:
        return [(p.id, q.id) for p in self.points for q in self.points if strictly_dominated(q, p)]

    @cached_property
    def _dominators(self) -> dict[str, frozenset[str]]:
        pts = self.points
        return {q.id: frozenset(p.id for p in pts if strictly_dominated(q, p)) for q in pts}

    def to_json(self) -> dict:
        return {"points": [p.to_json() for p in self.points]}

    @classmethod
    def from_json(cls, doc: dict) -> "DoublyPartialOrder":
        if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
            raise DPOError("point-set document needs a 'points' list")
        return build_dpo(Point2.from_json(entry) for entry in doc["points"])


def build_dpo(points: Iterable[Point2]) -> DoublyPartialOrder:
    points = tuple(points)
    ids: set[str] = set()
    coords: dict[tuple, str] = {}
    for p in points:
        if p.id in ids:
            raise DuplicateId(p.id)
        ids.add(p.id)
        if p.coords in coords:
            raise DuplicatePoint(f"{p.id} and {coords[p.coords]} share coordinates")
        coords[p.coords] = p.id
    return DoublyPartialOrder(points)


def in_neighborhood(d: DoublyPartialOrder, v: str) -> frozenset[str]:
    """Ids of the points strictly dominating ``v``'s point."""
    d.point(v)
    return d._dominators[v]


@dataclass(frozen=True)
class CompetitionResult:
    hypergraph: Hypergraph
    # edge -> ids whose in-neighborhood is exactly that edge
    witness_map: dict[Edge, tuple[str, ...]]

    def to_json(self) -> dict:
        doc = self.hypergraph.to_json()
        doc["witnesses"] = [
            {"edge": list(e), "witnesses": list(self.witness_map[e])} for e in self.hypergraph.edges
        ]
        return doc


def competition_hypergraph(d: DoublyPartialOrder) -> CompetitionResult:
    order = {v: i for i, v in enumerate(d.ids)}
    witnesses: dict[Edge, list[str]] = {}
    for v in d.ids:
        nbhd = in_neighborhood(d, v)
        if len(nbhd) >= 2:
            witnesses.setdefault(tuple(sorted(nbhd)), []).append(v)
    edges = _canonical_edges(witnesses)
    wmap = {e: tuple(sorted(witnesses[e], key=order.__getitem__)) for e in edges}
    return CompetitionResult(Hypergraph(d.ids, edges), wmap)


def competition_graph(d: DoublyPartialOrder) -> Graph:
    """Join two vertices when some point is strictly dominated by both."""
    pairs = set()
    for v in d.ids:
        pairs.update(combinations(sorted(in_neighborhood(d, v)), 2))
    return Graph(d.ids, tuple(sorted(pairs)))


@dataclass(frozen=True)
class LemmaViolation:
    lemma: str
    vertices: tuple[str, ...]

    def to_json(self) -> dict:
        return {"lemma": self.lemma, "tuple": list(self.vertices)}


def verify_structure_lemmas(d: DoublyPartialOrder) -> list[LemmaViolation]:
    """Check the four down-right lemmas over every applicable tuple of ``d``.

    L1  edges e_x (x in, y out) and e_y (y in, x out) exist => x, y down-right comparable
    L2  x dr y dr z => y and N^-(y) lie in every edge containing x and z
    L3  x dr y, z < x, z not< y => z dr y
    L4  x dr y, z < y, z not< x => x dr z

    An empty list means no violations.
    """
    ids = d.ids
    pts = d.points
    n = len(pts)
    prec = [[strictly_dominated(pts[i], pts[j]) for j in range(n)] for i in range(n)]
    dr = [[i != j and down_right(pts[i], pts[j]) for j in range(n)] for i in range(n)]
    edges = [frozenset(e) for e in competition_hypergraph(d).hypergraph.edges]
    member = [frozenset(k for k, e in enumerate(edges) if ids[i] in e) for i in range(n)]
    nbhd = [in_neighborhood(d, v) for v in ids]

    out: list[LemmaViolation] = []
    for i, j in combinations(range(n), 2):
        if member[i] - member[j] and member[j] - member[i] and not (dr[i][j] or dr[j][i]):
            out.append(LemmaViolation("L1", (ids[i], ids[j])))

    for x in range(n):
        for y in range(n):
            if not dr[x][y]:
                continue
            for z in range(n):
                if dr[y][z]:
                    need = nbhd[y] | {ids[y]}
                    for k in member[x] & member[z]:
                        if not need <= edges[k]:
                            out.append(LemmaViolation("L2", (ids[x], ids[y], ids[z])))
                            break
                if prec[z][x] and not prec[z][y] and not dr[z][y]:
                    out.append(LemmaViolation("L3", (ids[x], ids[y], ids[z])))
                if prec[z][y] and not prec[z][x] and not dr[x][z]:
                    out.append(LemmaViolation("L4", (ids[x], ids[y], ids[z])))
    return out


def random_dpo(rng: random.Random, n: int, prefix: str = "p") -> DoublyPartialOrder:
    """``n`` distinct integer points drawn uniformly from a grid of side 4n."""
    side = 4 * n
    cells = rng.sample(range(side * side), n)
    return build_dpo(Point2(f"{prefix}{i}", c // side, c % side) for i, c in enumerate(cells))


def random_dpos(seed: int, count: int, max_points: int, min_points: int = 1) -> list[DoublyPartialOrder]:
    rng = random.Random(seed)
    return [random_dpo(rng, rng.randint(min_points, max_points)) for _ in range(count)]
