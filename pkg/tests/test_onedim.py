import random
from math import gcd

import pytest

from tilekit.onedim import (
    WindowDigraph,
    build_lambda,
    component_period,
    decide_onedim,
    directed_components,
    primitive_cycle_lengths,
)
from tilekit.sft import Pattern, SftSpec, golden_mean_sft, proper_coloring_sft, respects_1d


def test_build_lambda_no_constant_words():
    spec = SftSpec(2, 1, (Pattern((2,), (0, 0)), Pattern((2,), (1, 1))))
    lam = build_lambda(spec)
    assert lam.vertices == [(0, 1), (1, 0)]
    assert sorted(lam.edges()) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]


def test_build_lambda_golden_mean():
    lam = build_lambda(golden_mean_sft())
    assert lam.vertices == [(0, 0), (0, 1), (1, 0)]
    assert lam.edge_count() == 5
    assert (0, 0) in lam.succ[(0, 0)]  # self-loop


def test_build_lambda_trivial_alphabet():
    lam = build_lambda(SftSpec(1, 1, ()))
    assert lam.vertices == [(0,)]
    assert lam.succ[(0,)] == ((0,),)


def test_build_lambda_pads_unequal_lengths():
    # forbidding the letter 1 and the word 000 kills every periodic orbit
    spec = SftSpec(2, 1, (Pattern((1,), (1,)), Pattern((3,), (0, 0, 0))))
    lam = build_lambda(spec)
    assert lam.ell == 3
    # prefix-anchored padding removes 000 and every window starting with 1
    assert lam.vertices == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert all(c.period == 0 for c in directed_components(lam))
    assert decide_onedim(spec).answer is False


def test_directed_components_and_periods():
    spec = SftSpec(2, 1, (Pattern((2,), (0, 0)), Pattern((2,), (1, 1))))
    comps = directed_components(build_lambda(spec))
    assert len(comps) == 1 and comps[0].period == 2

    comps = directed_components(build_lambda(golden_mean_sft()))
    assert len(comps) == 1 and comps[0].period == 1


def test_acyclic_leftovers_have_period_zero():
    lam = WindowDigraph(3, 1, [(0,), (1,), (2,)], {(0,): (), (1,): (), (2,): ()})
    comps = directed_components(lam)
    assert [c.period for c in comps] == [0, 0, 0]


def test_directed_cycle_period():
    verts = [(i,) for i in range(6)]
    succ = {(i,): ((((i + 1) % 6),),) for i in range(6)}
    lam = WindowDigraph(6, 1, verts, succ)
    comps = directed_components(lam)
    assert len(comps) == 1 and comps[0].period == 6
    assert component_period(comps[0].vertices, lam) == 6


def test_component_period_rejects_acyclic():
    lam = WindowDigraph(2, 1, [(0,), (1,)], {(0,): ((1,),), (1,): ()})
    with pytest.raises(ValueError):
        component_period([(0,), (1,)], lam)


def _random_digraph(rng, n, density):
    verts = [(i,) for i in range(n)]
    succ = {v: tuple(sorted(w for w in verts if rng.random() < density)) for v in verts}
    return WindowDigraph(n, 1, verts, succ)


def test_period_matches_primitive_cycle_gcd():
    networkx = pytest.importorskip("networkx")
    rng = random.Random(17)
    checked = 0
    for _ in range(150):
        lam = _random_digraph(rng, rng.randrange(2, 9), rng.choice((0.2, 0.4)))
        nxg = networkx.DiGraph()
        nxg.add_nodes_from(lam.vertices)
        for (u, v) in lam.edges():
            nxg.add_edge(u, v)
        for comp in directed_components(lam):
            if comp.period == 0:
                continue
            mine = primitive_cycle_lengths(lam, comp.vertices)
            vset = set(comp.vertices)
            ref = sorted({
                len(c) for c in networkx.simple_cycles(nxg.subgraph(vset))
            })
            assert mine == ref
            g = 0
            for ell in ref:
                g = gcd(g, ell)
            assert g == comp.period
            checked += 1
    assert checked > 50


def test_decide_examples():
    d2 = decide_onedim(proper_coloring_sft(2, dim=1))
    assert d2.answer is False and d2.witness_map is None

    d3 = decide_onedim(proper_coloring_sft(3, dim=1))
    assert d3.answer and gcd(d3.witness_p, d3.witness_q) == 1
    assert (d3.witness_p, d3.witness_q) == (2, 3)
    assert respects_1d(d3.witness_map, proper_coloring_sft(3, dim=1))

    dg = decide_onedim(golden_mean_sft())
    assert dg.answer
    assert respects_1d(dg.witness_map, golden_mean_sft())


def test_decide_witness_soundness_random():
    rng = random.Random(4)
    for _ in range(40):
        b = rng.randrange(2, 4)
        ell = rng.randrange(1, 3)
        pats = []
        seen = set()
        for _ in range(rng.randrange(1, b ** ell)):
            cells = tuple(rng.randrange(b) for _ in range(ell))
            if cells not in seen:
                seen.add(cells)
                pats.append(Pattern((ell,), cells))
        spec = SftSpec(b, 1, tuple(pats))
        d = decide_onedim(spec)
        if d.answer:
            assert respects_1d(d.witness_map, spec)


def test_decide_invariant_under_symbol_permutation():
    rng = random.Random(12)
    for _ in range(30):
        b = 3
        pats = []
        seen = set()
        for _ in range(rng.randrange(1, 6)):
            cells = (rng.randrange(b), rng.randrange(b))
            if cells not in seen:
                seen.add(cells)
                pats.append(Pattern((2,), cells))
        spec = SftSpec(b, 1, tuple(pats))
        perm = [1, 2, 0]
        permuted = SftSpec(b, 1, tuple(
            Pattern((2,), tuple(perm[c] for c in p.cells)) for p in spec.patterns
        ))
        assert decide_onedim(spec).answer == decide_onedim(permuted).answer
