"""Acceptance gate: one pass/fail line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the summary section
at the end of the run lists every criterion.
"""
import random
import time

import pytest

from dpohyper import (
    PatternKind,
    build_dpo,
    competition_graph,
    competition_hypergraph,
    counterexample_hypergraph,
    embed_interval_hypergraph,
    find_forbidden_witness,
    gadget_dpo,
    generate_pattern,
    is_chordal,
    is_interval,
    is_interval_bruteforce,
    is_interval_graph,
    isomorphism,
    make_hypergraph,
    search_realization,
    trace_subhypergraph,
    verify_structure_lemmas,
)
from dpohyper.competition import random_dpos
from dpohyper.patterns import witness_holds
from dpohyper.sampling import random_hypergraph, random_interval_hypergraph

pytestmark = pytest.mark.slow

GADGETS = [(kind, n) for kind in "MF" for n in range(1, 7)]


@pytest.fixture(scope="module")
def small_dpos():
    return [competition_hypergraph(d).hypergraph for d in random_dpos(2024, 500, 9)]


def test_criterion_1_gadgets_contain_patterns(record_criterion):
    start = time.perf_counter()
    missing = []
    for kind, n in GADGETS:
        ch = competition_hypergraph(build_dpo(gadget_dpo(kind, n))).hypergraph
        w = find_forbidden_witness(ch, [PatternKind(kind, n)], containment="trace")
        if w is None or not witness_holds(ch, w):
            missing.append(f"{kind}{n}")
    elapsed = time.perf_counter() - start
    ok = not missing and elapsed < 10
    record_criterion(1, ok, f"trace witnesses for M_n, F_n n=1..6, missing={missing}, {elapsed:.2f}s (< 10s)")
    assert ok


def test_criterion_2_gadgets_not_interval(record_criterion):
    interval = []
    for kind, n in GADGETS:
        ch = competition_hypergraph(build_dpo(gadget_dpo(kind, n))).hypergraph
        if is_interval(ch).interval:
            interval.append(f"{kind}{n}")
    record_criterion(2, not interval, f"12 gadget hypergraphs non-interval, interval ones={interval}")
    assert not interval


def test_criterion_3_biconditional(small_dpos, record_criterion):
    start = time.perf_counter()
    agree = non_interval = 0
    for h in small_dpos:
        has_witness = find_forbidden_witness(h, ["M", "F"]) is not None
        interval = is_interval(h).interval
        non_interval += not interval
        agree += interval != has_witness
    elapsed = time.perf_counter() - start
    ok = agree == len(small_dpos) and elapsed < 300
    record_criterion(
        3,
        ok,
        f"interval <=> no M/F witness on {agree}/{len(small_dpos)} DPOs"
        f" ({non_interval} non-interval), {elapsed:.1f}s (< 300s)",
    )
    assert ok


def test_criterion_4_no_cycle_or_o_patterns(small_dpos, record_criterion):
    # Partial containment is the weaker requirement, so zero hits here also
    # means zero exact traces.
    hits = sum(find_forbidden_witness(h, ["C", "O1", "O2"]) is not None for h in small_dpos)
    record_criterion(4, hits == 0, f"C_n/O_1/O_2 witnesses found in {hits}/{len(small_dpos)} DPOs")
    assert hits == 0


def test_criterion_5_chordal(small_dpos, record_criterion):
    chordal = sum(is_chordal(h).chordal for h in small_dpos)
    record_criterion(5, chordal == len(small_dpos), f"chordal in {chordal}/{len(small_dpos)}")
    assert chordal == len(small_dpos)


def test_criterion_6_competition_graphs_interval(record_criterion):
    dpos = random_dpos(6, 500, 12)
    good = sum(is_interval_graph(competition_graph(d)) for d in dpos)
    record_criterion(6, good == 500, f"interval competition graphs {good}/500")
    assert good == 500


def test_criterion_7_structure_lemmas(record_criterion):
    bad = 0
    for d in random_dpos(7, 10_000, 10):
        bad += bool(verify_structure_lemmas(d))
    record_criterion(7, bad == 0, f"DPOs with lemma violations {bad}/10000")
    assert bad == 0


def test_criterion_8_embedding(record_criterion):
    rng = random.Random(8)
    good = 0
    for _ in range(100):
        h = random_interval_hypergraph(rng, 8)
        pts = embed_interval_hypergraph(h, is_interval(h).ordering)
        ch = competition_hypergraph(build_dpo(pts)).hypergraph
        good += isomorphism(h, trace_subhypergraph(ch, h.vertices)) is not None
    record_criterion(8, good == 100, f"embedded traces isomorphic {good}/100")
    assert good == 100


def test_criterion_9_solver_cross_validation(record_criterion):
    rng = random.Random(9)
    disagree = 0
    count = 2000
    for _ in range(count):
        h = random_hypergraph(rng, 7)
        disagree += is_interval(h).interval != is_interval_bruteforce(h).interval
    suite = [PatternKind("C", n) for n in (3, 4, 5)]
    suite += [PatternKind(k, n) for k in "MF" for n in range(1, 5)]
    suite += [PatternKind("O1"), PatternKind("O2")]
    suite_bad = []
    for p in suite:
        h = generate_pattern(p)
        if is_interval(h).interval or is_interval_bruteforce(h).interval:
            suite_bad.append(p.name)
    h = counterexample_hypergraph()
    counter_ok = is_interval(h).interval and is_interval_bruteforce(h).interval
    ok = disagree == 0 and not suite_bad and counter_ok
    record_criterion(
        9, ok, f"random disagreements {disagree}/{count}, fixed suite wrong={suite_bad}, counterexample interval={counter_ok}"
    )
    assert ok


def test_criterion_10_realization_search(record_criterion):
    start = time.perf_counter()
    h = counterexample_hypergraph()
    found = []
    for extra in (0, 1, 2):
        for seed in (1, 2, 3):
            r = search_realization(h, grid=8, extra=extra, budget=100_000, seed=seed)
            if r.realized:
                found.append((extra, seed))
    p3 = make_hypergraph(["v1", "v2", "v3"], [["v1", "v2"], ["v2", "v3"]])
    p3_ok = search_realization(p3, grid=4, extra=2, budget=100_000, seed=1).realized
    elapsed = time.perf_counter() - start
    ok = not found and p3_ok and elapsed < 600
    record_criterion(
        10, ok, f"counterexample realized in {len(found)}/9 runs, P_3 realized={p3_ok}, {elapsed:.1f}s (< 600s)"
    )
    assert ok
