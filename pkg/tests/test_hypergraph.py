import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpohyper import (
    DuplicateVertex,
    Hypergraph,
    PatternKind,
    SingletonEdge,
    TooLarge,
    UnknownVertex,
    generate_pattern,
    is_chordal,
    isolated_vertices,
    isomorphism,
    make_hypergraph,
    trace_subhypergraph,
    two_section,
)
from dpohyper.hypergraph import edge_preserving_bijection, is_isomorphism
from dpohyper.sampling import random_hypergraph

C = lambda n: generate_pattern(PatternKind("C", n))
M = lambda n: generate_pattern(PatternKind("M", n))
F = lambda n: generate_pattern(PatternKind("F", n))
O1 = generate_pattern(PatternKind("O1"))
O2 = generate_pattern(PatternKind("O2"))


def test_make_hypergraph_dedups():
    h = make_hypergraph("abc", [["a", "b"], ["b", "c"], ["b", "a"]])
    assert h.edges == (("a", "b"), ("b", "c"))


def test_make_hypergraph_errors():
    with pytest.raises(SingletonEdge):
        make_hypergraph("ab", [["a"]])
    with pytest.raises(UnknownVertex):
        make_hypergraph("ab", [["a", "z"]])
    with pytest.raises(DuplicateVertex):
        make_hypergraph("aab", [])


def test_single_big_edge():
    h = make_hypergraph("abcd", [list("abcd")])
    assert h.edges == (("a", "b", "c", "d"),)


def test_canonical_equality_ignores_input_order():
    h1 = make_hypergraph("abc", [["c", "b"], ["b", "a", "c"]])
    h2 = make_hypergraph("abc", [["a", "b", "c"], ["b", "c"]])
    assert h1 == h2


def test_json_round_trip():
    h = make_hypergraph(["v1", "v2", "v3"], [["v3", "v2"], ["v1", "v2"]])
    assert Hypergraph.from_json(h.to_json()) == h
    assert h.to_json() == {"vertices": ["v1", "v2", "v3"], "edges": [["v1", "v2"], ["v2", "v3"]]}


def test_trace_examples():
    m1 = M(1)
    assert trace_subhypergraph(m1, m1.vertices) == m1
    t = trace_subhypergraph(O2, ["y", "z", "v"])
    assert set(t.edge_sets) == {frozenset("yz"), frozenset("yzv")}
    h = make_hypergraph("abcd", [["a", "b", "c"], ["a", "b", "d"]])
    assert trace_subhypergraph(h, "ab").edges == (("a", "b"),)
    with pytest.raises(UnknownVertex):
        trace_subhypergraph(h, ["q"])


def test_isomorphism_examples():
    c3 = C(3)
    other = make_hypergraph(["1", "2", "3"], [["1", "2"], ["2", "3"], ["3", "1"]])
    f = isomorphism(c3, other)
    assert f is not None and is_isomorphism(c3, other, f)
    assert isomorphism(M(1), F(1)) is None
    assert isomorphism(O1, O1) is not None


def test_two_section_examples():
    g = two_section(O1)
    expected = {frozenset(p) for p in [("x", "x'"), ("y", "y'"), ("z", "z'"), ("x", "y"), ("x", "z"), ("y", "z")]}
    assert {frozenset(e) for e in g.edges} == expected
    assert {frozenset(e) for e in two_section(C(4)).edges} == set(C(4).edge_sets)
    tri = two_section(make_hypergraph("abc", [list("abc")]))
    assert len(tri.edges) == 3


def test_isolated_vertices_examples():
    assert isolated_vertices(make_hypergraph("abc", [["a", "b"]])) == {"c"}
    assert isolated_vertices(make_hypergraph("ab", [])) == {"a", "b"}
    assert isolated_vertices(M(1)) == frozenset()


def test_chordal_examples():
    r = is_chordal(C(4))
    assert not r.chordal
    assert len(r.cycle) == 4
    assert {frozenset(e) for e in r.supporting_edges} == set(C(4).edge_sets)
    assert is_chordal(C(3)).chordal


def test_chordal_bound():
    big = make_hypergraph([f"v{i}" for i in range(17)], [])
    with pytest.raises(TooLarge):
        is_chordal(big)


def _random_relabel(h, rng):
    new = [f"w{i}" for i in range(len(h.vertices))]
    rng.shuffle(new)
    rename = dict(zip(h.vertices, new))
    order = list(new)
    rng.shuffle(order)
    return make_hypergraph(order, [[rename[v] for v in e] for e in h.edges])


def _brute_isomorphic(h1, h2):
    if len(h1.vertices) != len(h2.vertices):
        return False
    for perm in permutations(h2.vertices):
        f = dict(zip(h1.vertices, perm))
        if is_isomorphism(h1, h2, f):
            return True
    return False


hyper_seeds = st.integers(0, 10**9)


@settings(max_examples=200, deadline=None)
@given(hyper_seeds)
def test_isomorphism_recovers_relabeling(seed):
    rng = random.Random(seed)
    h = random_hypergraph(rng, 8)
    g = _random_relabel(h, rng)
    f = isomorphism(h, g)
    assert f is not None and is_isomorphism(h, g, f)
    back = isomorphism(g, h)
    assert back is not None and is_isomorphism(g, h, back)
    inverse = {w: v for v, w in f.items()}
    assert is_isomorphism(g, h, inverse)
    ident = isomorphism(h, h)
    assert is_isomorphism(h, h, ident)


@settings(max_examples=150, deadline=None)
@given(hyper_seeds)
def test_isomorphism_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    h1 = random_hypergraph(random.Random(seed), n)
    h2 = random_hypergraph(random.Random(seed + 1), n)
    if len(h1.vertices) != len(h2.vertices):
        h2 = _random_relabel(h1, rng) if rng.random() < 0.5 else h1
    assert (isomorphism(h1, h2) is not None) == _brute_isomorphic(h1, h2)


@settings(max_examples=100, deadline=None)
@given(hyper_seeds)
def test_edge_preserving_bijection_matches_brute_force(seed):
    rng = random.Random(seed)
    host = random_hypergraph(rng, 6)
    n = len(host.vertices)
    labels = [f"u{i}" for i in range(n)]
    pattern = make_hypergraph(labels, [rng.sample(labels, rng.randint(2, n)) for _ in range(rng.randint(0, 3))] if n >= 2 else [])
    brute = any(
        all(frozenset(dict(zip(labels, perm))[v] for v in e) in host.edge_sets for e in pattern.edges)
        for perm in permutations(host.vertices)
    )
    f = edge_preserving_bijection(pattern, host)
    assert (f is not None) == brute
    if f is not None:
        assert all(frozenset(f[v] for v in e) in host.edge_sets for e in pattern.edges)


@settings(max_examples=200, deadline=None)
@given(hyper_seeds, st.data())
def test_trace_properties(seed, data):
    h = random_hypergraph(random.Random(seed), 8)
    assert trace_subhypergraph(h, h.vertices) == h
    a = data.draw(st.sets(st.sampled_from(h.vertices)))
    b = data.draw(st.sets(st.sampled_from(sorted(a)))) if a else set()
    assert trace_subhypergraph(trace_subhypergraph(h, a), b) == trace_subhypergraph(h, b)


@settings(max_examples=100, deadline=None)
@given(hyper_seeds)
def test_two_section_of_graph_is_itself(seed):
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(rng.randint(2, 7))]
    pairs = {frozenset(rng.sample(labels, 2)) for _ in range(rng.randint(0, 8))}
    h = make_hypergraph(labels, pairs)
    assert {frozenset(e) for e in two_section(h).edges} == set(h.edge_sets)


def _naive_nonchordal(h):
    """Enumerate every vertex sequence of length >= 4 directly."""
    adjacent = {frozenset(p) for e in h.edges for p in combinations(e, 2)}
    for k in range(4, len(h.vertices) + 1):
        for seq in permutations(h.vertices, k):
            pairs = [frozenset((seq[i], seq[(i + 1) % k])) for i in range(k)]
            if not all(p in adjacent for p in pairs):
                continue
            chords = [
                frozenset((seq[i], seq[j]))
                for i in range(k)
                for j in range(i + 2, k)
                if not (i == 0 and j == k - 1)
            ]
            if any(c in adjacent for c in chords):
                continue
            options = [[e for e in h.edge_sets if p <= e] for p in pairs]
            if any(len(set(choice)) == k for choice in product(*options)):
                return True
    return False


def test_chordal_matches_naive_enumeration():
    rng = random.Random(2024)
    checked = 0
    for i in range(600):
        if i % 2:
            h = random_hypergraph(rng, 7)
        else:
            labels = [f"v{j}" for j in range(rng.randint(4, 7))]
            edges = [rng.sample(labels, rng.choice([2, 2, 2, 3])) for _ in range(rng.randint(3, 8))]
            h = make_hypergraph(labels, edges)
        report = is_chordal(h)
        assert report.chordal == (not _naive_nonchordal(h))
        if not report.chordal:
            checked += 1
            cyc = report.cycle
            k = len(cyc)
            assert k >= 4 and len(set(report.supporting_edges)) == k
            for i, e in enumerate(report.supporting_edges):
                assert {cyc[i], cyc[(i + 1) % k]} <= set(e)
    for n in (4, 5, 6, 7):
        assert not is_chordal(C(n)).chordal
        assert _naive_nonchordal(C(n))
    assert checked > 10
