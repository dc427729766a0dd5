"""Forbidden hypergraph families, point-set gadgets, interval embeddings, and
the searches built on them (forbidden witnesses, realizations).
"""
from __future__ import annotations

import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .competition import build_dpo, competition_hypergraph
from .errors import BadParameter, NotContiguous, TooLarge, UnknownVertex
from .geometry import Point2
from .hypergraph import (
    Hypergraph,
    edge_preserving_bijection,
    isolated_vertices,
    isomorphism,
    make_hypergraph,
    trace_subhypergraph,
)
from .interval import is_consecutive

WITNESS_BOUND = 14
FAMILIES = ("C", "M", "F", "O1", "O2")


@dataclass(frozen=True)
class PatternKind:
    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        if kind not in FAMILIES:
            raise BadParameter(f"unknown pattern family {self.kind!r}")
        if kind in ("O1", "O2"):
            object.__setattr__(self, "n", None)
            return
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise BadParameter(f"{kind} needs an integer parameter")
        if kind == "C" and self.n < 3:
            raise BadParameter("C_n needs n >= 3")
        if self.n < 1:
            raise BadParameter(f"{kind}_n needs n >= 1")

    @property
    def name(self) -> str:
        return self.kind.lower() if self.n is None else f"{self.kind.lower()}{self.n}"

    @property
    def size(self) -> int:
        if self.kind == "C":
            return self.n
        if self.kind in ("M", "F"):
            return self.n + 3
        return 6 if self.kind == "O1" else 5


_NAME_RE = re.compile(r"(o1|o2|c|m|f)(\d*)", re.IGNORECASE)


def parse_pattern_name(name: str) -> PatternKind:
    """``c3``, ``m2``, ``f1``, ``o1``, ``o2`` (any case)."""
    m = _NAME_RE.fullmatch(name.strip())
    if m is None:
        raise BadParameter(f"unknown pattern name {name!r}")
    family, digits = m.group(1).upper(), m.group(2)
    if family in ("O1", "O2"):
        if digits:
            raise BadParameter(f"unknown pattern name {name!r}")
        return PatternKind(family)
    if not digits:
        raise BadParameter(f"pattern {name!r} needs a parameter")
    return PatternKind(family, int(digits))


def generate_pattern(p: PatternKind) -> Hypergraph:
    if p.kind == "O1":
        return make_hypergraph(
            ["x", "x'", "y", "y'", "z", "z'"],
            [["x", "x'"], ["y", "y'"], ["z", "z'"], ["x", "y", "z"]],
        )
    if p.kind == "O2":
        return make_hypergraph(
            ["x", "y", "z", "w", "v"],
            [["x", "y"], ["z", "w"], ["x", "y", "z", "w"], ["y", "z", "v"]],
        )
    if p.kind == "C":
        vs = [f"v{i}" for i in range(1, p.n + 1)]
        return make_hypergraph(vs, [[vs[i], vs[(i + 1) % p.n]] for i in range(p.n)])
    n = p.n
    vs = [f"v{i}" for i in range(1, n + 4)]
    path = [[vs[i], vs[i + 1]] for i in range(n + 1)]
    v1, v_last_path = vs[0], vs[n + 1]
    if p.kind == "M":
        extra = [[v for v in vs if v not in (v1, v_last_path)]]
    else:
        extra = [[v for v in vs if v != v1], [v for v in vs if v != v_last_path]]
    return make_hypergraph(vs, path + extra)


def counterexample_hypergraph() -> Hypergraph:
    """Six-vertex interval hypergraph that no DPO realizes up to isolated vertices."""
    vs = [f"v{i}" for i in range(1, 7)]
    pairs = [[vs[i], vs[i + 1]] for i in range(5)]
    return make_hypergraph(vs, pairs + [["v2", "v3", "v4", "v5"]])


def generate_staircase(n: int) -> tuple[list[Point2], list[Point2]]:
    """Diagonal ``a`` points (i, n-i+1) and the ``b`` points just below-left of each gap."""
    if not isinstance(n, int) or n < 1:
        raise BadParameter("staircase needs n >= 1")
    third = Fraction(1, 3)
    a = [Point2(f"a{i}", Fraction(i), Fraction(n - i + 1)) for i in range(n + 2)]
    b = [Point2(f"b{i}", i - third, n - i - third) for i in range(n + 1)]
    return a, b


def gadget_dpo(kind: str, n: int) -> list[Point2]:
    """Point sets whose competition hypergraphs contain M_n (kind "M") or F_n ("F")."""
    kind = kind.upper()
    if kind not in ("M", "F"):
        raise BadParameter(f"gadget kind must be M or F, not {kind!r}")
    a, b = generate_staircase(n)
    two_thirds = Fraction(2, 3)
    if kind == "M":
        extra = [Point2("o", 0, 0)]
        if n == 1:
            extra.append(Point2("c", two_thirds, two_thirds))
    else:
        extra = [Point2("l", -1, 0), Point2("d", 0, -1)]
        if n == 1:
            extra.insert(0, Point2("c", two_thirds, two_thirds))
    return a + b + extra


def gadget_witness_subset(kind: str, n: int) -> list[str]:
    """The a-points plus the point whose only hyperedge is the large one."""
    a, b = generate_staircase(n)
    return [p.id for p in a] + (["c"] if n == 1 else [b[1].id])


def embed_interval_hypergraph(h: Hypergraph, ordering: Sequence[str]) -> list[Point2]:
    """Place the i-th vertex at (i, n+1-i) and add (min(e)-1, n-max(e)) per edge.

    Vertex points keep the vertex labels; edge points are labeled
    ``b:<members>`` with members in ordering order.
    """
    ordering = list(ordering)
    if sorted(ordering) != sorted(h.vertices):
        raise UnknownVertex("ordering must be a permutation of the vertices")
    if not is_consecutive(ordering, h.edges):
        raise NotContiguous("some edge is split by the ordering")
    n = len(ordering)
    pos = {v: i for i, v in enumerate(ordering, start=1)}
    points = [Point2(v, i, n + 1 - i) for v, i in pos.items()]
    for e in sorted(h.edges, key=lambda e: (min(pos[v] for v in e), max(pos[v] for v in e))):
        idx = sorted(pos[v] for v in e)
        label = "b:" + ",".join(ordering[i - 1] for i in idx)
        points.append(Point2(label, idx[0] - 1, n - idx[-1]))
    return points


@dataclass(frozen=True)
class PatternWitness:
    pattern: PatternKind
    subset: tuple[str, ...]
    map: dict[str, str]
    containment: str = "partial"

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.name,
            "subset": list(self.subset),
            "map": dict(sorted(self.map.items())),
            "containment": self.containment,
        }


def witness_holds(h: Hypergraph, w: PatternWitness) -> bool:
    """Re-check a witness against ``h`` independently of the search."""
    pat = generate_pattern(w.pattern)
    t = trace_subhypergraph(h, w.subset)
    if sorted(w.map) != sorted(pat.vertices) or sorted(w.map.values()) != sorted(w.subset):
        return False
    image = {frozenset(w.map[v] for v in e) for e in pat.edge_sets}
    if w.containment == "trace":
        return image == set(t.edge_sets)
    return image <= set(t.edge_sets)


KindSpec = Union[str, PatternKind]


def _expand_kinds(kinds: Iterable[KindSpec], max_size: int) -> list[PatternKind]:
    out: set[PatternKind] = set()
    for k in kinds:
        if isinstance(k, PatternKind):
            out.add(k)
            continue
        fam = k.upper()
        if fam in ("O1", "O2"):
            out.add(PatternKind(fam))
        elif fam == "C":
            out.update(PatternKind("C", s) for s in range(3, max_size + 1))
        elif fam in ("M", "F"):
            out.update(PatternKind(fam, s - 3) for s in range(4, max_size + 1))
        else:
            raise BadParameter(f"unknown pattern family {k!r}")
    return sorted(out, key=lambda p: (p.size, FAMILIES.index(p.kind)))


def _witness_core(h: Hypergraph) -> list[str]:
    # Patterns have no isolated vertices and no two vertices in exactly the
    # same edges. Both properties persist in any trace (and any edge subset of
    # it), so one representative per membership class suffices.
    seen = set()
    core = []
    for v in sorted(set(h.vertices) - isolated_vertices(h)):
        key = frozenset(h.incidence[v])
        if key not in seen:
            seen.add(key)
            core.append(v)
    return core


def find_forbidden_witness(
    h: Hypergraph,
    kinds: Iterable[KindSpec] = FAMILIES,
    max_subset: Optional[int] = None,
    bound: int = WITNESS_BOUND,
    containment: str = "partial",
) -> Optional[PatternWitness]:
    """First vertex subset (by size, then lexicographically) carrying a requested pattern.

    ``kinds`` mixes family names ("C", "M", "F", "O1", "O2"), which stand for
    every member small enough, and explicit :class:`PatternKind` values.

    ``containment="partial"`` asks that every pattern edge appear among the
    edges traced on the subset (extra traced edges are allowed); this is the
    reading under which the forbidden families characterize interval
    hypergraphs. ``"trace"`` demands the trace be isomorphic to the pattern.
    """
    if containment not in ("trace", "partial"):
        raise BadParameter(f"unknown containment mode {containment!r}")
    core = _witness_core(h)
    if len(core) > bound:
        raise TooLarge("find_forbidden_witness", len(core), bound)
    limit = len(core) if max_subset is None else min(max_subset, len(core))
    wanted = _expand_kinds(kinds, limit)
    by_size: dict[int, list[tuple[PatternKind, Hypergraph]]] = {}
    for p in wanted:
        if p.size <= limit:
            by_size.setdefault(p.size, []).append((p, generate_pattern(p)))
    for size in sorted(by_size):
        for subset in combinations(core, size):
            t = trace_subhypergraph(h, subset)
            for p, pat in by_size[size]:
                if containment == "trace":
                    if len(t.edges) != len(pat.edges) or t.edge_size_profile != pat.edge_size_profile:
                        continue
                    f = isomorphism(pat, t)
                else:
                    f = edge_preserving_bijection(pat, t)
                if f is not None:
                    return PatternWitness(p, tuple(subset), f, containment)
    return None


@dataclass(frozen=True)
class RealizationReport:
    realized: bool
    points: Optional[tuple[Point2, ...]] = None
    embedding: Optional[dict[str, str]] = None
    isolated: Optional[tuple[str, ...]] = None
    trials: Optional[int] = None

    def to_json(self) -> dict:
        doc = {
            "realized": self.realized,
            "points": None if self.points is None else [p.to_json() for p in self.points],
            "embedding": self.embedding,
            "isolated": None if self.isolated is None else list(self.isolated),
        }
        if self.trials is not None:
            doc["trials"] = self.trials
        return doc


def check_realization(points: Sequence[Point2], h: Hypergraph) -> RealizationReport:
    """Is the competition hypergraph of ``points`` exactly ``h`` plus isolated points?"""
    points = tuple(points)
    ch = competition_hypergraph(build_dpo(points)).hypergraph
    iso_ch = isolated_vertices(ch)
    iso_h = isolated_vertices(h)
    spare = [v for v in ch.vertices if v in iso_ch]
    if len(ch.edges) != len(h.edges) or len(spare) < len(iso_h):
        return RealizationReport(False, points)
    core_h = trace_subhypergraph(h, [v for v in h.vertices if v not in iso_h])
    core_ch = trace_subhypergraph(ch, [v for v in ch.vertices if v not in iso_ch])
    f = isomorphism(core_h, core_ch)
    if f is None:
        return RealizationReport(False, points)
    leftovers = iter(spare)
    for v in h.vertices:
        if v in iso_h:
            f[v] = next(leftovers)
    embedding = {v: f[v] for v in h.vertices}
    image = set(embedding.values())
    isolated = tuple(v for v in ch.vertices if v not in image)
    return RealizationReport(True, points, embedding, isolated)


_CHUNK = 4096


def _chunk_rng(seed: int, chunk: int) -> random.Random:
    return random.Random(f"{seed}:{chunk}")


def _scan_chunk(args) -> Optional[tuple[int, RealizationReport]]:
    """First realizing placement in one chunk of trials, as (trial index, report)."""
    h, k, grid, seed, chunk, start, stop = args
    profile = h.edge_size_profile
    rng = _chunk_rng(seed, chunk)
    side = grid + 1
    cells = range(side * side)
    for trial in range(start, stop):
        picked = rng.sample(cells, k)
        pts = [(c // side, c % side) for c in picked]
        # Cheap integer prefilter on the edge-size profile before the exact check.
        nbhds = set()
        for qx, qy in pts:
            mask = 0
            for i, (px, py) in enumerate(pts):
                if qx < px and qy < py:
                    mask |= 1 << i
            if mask & (mask - 1):
                nbhds.add(mask)
        if tuple(sorted(bin(m).count("1") for m in nbhds)) != profile:
            continue
        report = check_realization([Point2(f"p{i}", x, y) for i, (x, y) in enumerate(pts)], h)
        if report.realized:
            return trial, report
    return None


def search_realization(
    h: Hypergraph,
    grid: int,
    extra: int,
    budget: int,
    seed: int,
    threads: int = 1,
) -> RealizationReport:
    """Sample up to ``budget`` placements of |V(h)| + extra distinct points in {0..grid}^2.

    Trials are generated in fixed-size chunks, each with its own seeded
    generator, so the first success in trial order does not depend on
    ``threads``. Failure is evidence, not proof, that no realization exists.
    """
    if grid < 1:
        raise BadParameter("grid must be >= 1")
    if extra < 0 or budget < 0:
        raise BadParameter("extra and budget must be >= 0")
    k = len(h.vertices) + extra
    if k > (grid + 1) ** 2:
        raise BadParameter(f"cannot place {k} distinct points on a {grid + 1}x{grid + 1} grid")
    chunks = [
        (h, k, grid, seed, c, c * _CHUNK, min(budget, (c + 1) * _CHUNK))
        for c in range((budget + _CHUNK - 1) // _CHUNK)
    ]
    if threads <= 1:
        results = map(_scan_chunk, chunks)
        return _first_success(results, budget)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return _first_success(pool.map(_scan_chunk, chunks), budget)


def _first_success(results, budget: int) -> RealizationReport:
    for hit in results:
        if hit is not None:
            trial, r = hit
            return RealizationReport(True, r.points, r.embedding, r.isolated, trial + 1)
    return RealizationReport(False, trials=budget)
