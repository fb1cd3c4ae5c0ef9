import random

import pytest

from tilekit import fixtures
from tilekit.grids import TileFamilyParams, make_gamma1
from tilekit.sft import (
    Pattern,
    SftSpec,
    SymbolMap,
    golden_mean_sft,
    pattern_occurs,
    preset,
    proper_coloring_sft,
    respects,
    respects_1d,
    within_hypothesis,
)


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern((2, 2), (0, 1, 2))
    with pytest.raises(ValueError):
        SftSpec(2, 2, (Pattern((1, 1), (5,)),))
    with pytest.raises(ValueError):
        SftSpec(2, 2, (Pattern((2,), (0, 1)),))  # 1-D pattern in a 2-D shift


def test_width():
    assert proper_coloring_sft(4).width() == 1
    assert golden_mean_sft().width() == 1
    assert SftSpec(2, 2, ()).width() == 0
    assert SftSpec(2, 2, (Pattern((3, 1), (0, 0, 0)),)).width() == 2


def test_pattern_occurs_1d():
    assert pattern_occurs(Pattern((2,), (0, 1)), [1, 0, 1, 0])
    assert not pattern_occurs(Pattern((2,), (1, 1)), [1, 0, 1, 0])


def test_pattern_occurs_checkerboard():
    board = [[(x + y) % 2 for x in range(4)] for y in range(4)]
    assert not pattern_occurs(Pattern((2, 1), (1, 1)), board)
    assert pattern_occurs(Pattern((2, 1), (0, 1)), board)


def test_pattern_occurs_center():
    window = [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    # every translate of the 2x2 all-zero pattern hits the center 1
    assert not pattern_occurs(Pattern((2, 2), (0, 0, 0, 0)), window)
    window[1][1] = 0
    assert pattern_occurs(Pattern((2, 2), (0, 0, 0, 0)), window)


def test_pattern_dimension_mismatch():
    with pytest.raises(ValueError):
        pattern_occurs(Pattern((2,), (0, 1)), [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pattern_occurs(Pattern((5,), (0,) * 5), [0, 1])


def test_respects_four_coloring_fixture():
    g = fixtures.four_coloring_map()
    assert respects(g, proper_coloring_sft(4))
    assert within_hypothesis(g.graph, proper_coloring_sft(4))


def test_respects_constant_map_fails():
    G = fixtures.gamma(1, 2, 3)
    const = SymbolMap(G, {v: 0 for v in G.vertices})
    spec = SftSpec(2, 2, (Pattern((2, 1), (0, 0)),))
    assert not respects(const, spec)


def test_respects_empty_is_vacuous():
    g = fixtures.mono_map()
    assert respects(g, SftSpec(2, 2, ()))


def test_respects_monotone_under_more_patterns():
    G = fixtures.gamma(1, 2, 3)
    rng = random.Random(5)
    for _ in range(20):
        g = SymbolMap(G, {v: rng.randrange(3) for v in G.vertices})
        pats = [Pattern((2, 1), (0, 0)), Pattern((1, 2), (1, 1)), Pattern((2, 1), (2, 1))]
        for cut in range(len(pats)):
            small = SftSpec(3, 2, tuple(pats[:cut]))
            big = SftSpec(3, 2, tuple(pats[: cut + 1]))
            if not respects(g, small):
                assert not respects(g, big)


def test_respects_fast_vs_general_agree():
    G = fixtures.gamma(1, 2, 3)
    rng = random.Random(99)
    for _ in range(40):
        b = rng.randrange(2, 4)
        pats = []
        for _ in range(rng.randrange(1, 4)):
            dims = rng.choice(((2, 1), (1, 2), (1, 1), (2, 2)))
            cells = tuple(rng.randrange(b) for _ in range(dims[0] * dims[1]))
            pats.append(Pattern(dims, cells))
        spec = SftSpec(b, 2, tuple(pats))
        g = SymbolMap(G, {v: rng.randrange(b) for v in G.vertices})
        assert respects(g, spec) == respects(g, spec, force_general=True)


def test_respects_1d_alternating():
    G = make_gamma1(TileFamilyParams(1, 2, 3))
    x = G.class_of[(0, 0, 0)]
    a = G.class_of[(0, 1, 0)]
    b0 = G.class_of[(1, 1, 0)]
    b1 = G.class_of[(1, 2, 0)]
    g = SymbolMap(G, {x: 0, a: 1, b0: 1, b1: 0})
    spec = SftSpec(2, 1, (Pattern((2,), (0, 0)), Pattern((2,), (1, 1))))
    # the longer tile ends 0,0 against the shared cross cell
    assert not respects_1d(g, spec)
    assert respects_1d(g, SftSpec(2, 1, ()))


def test_respects_1d_agreement_with_coloring():
    # the edge subshift respect check must agree with direct properness
    G = make_gamma1(TileFamilyParams(1, 2, 3))
    spec = proper_coloring_sft(3, dim=1)
    rng = random.Random(3)
    for _ in range(50):
        g = SymbolMap(G, {v: rng.randrange(3) for v in G.vertices})
        direct = all(
            g.value_at(i, x) != g.value_at(i, x + 1)
            for i, grid in enumerate(G.grids)
            for x in range(grid.width - 1)
        )
        assert respects_1d(g, spec) == direct


def test_edge_sft_matches_coloring_validator():
    G = fixtures.gamma(1, 2, 3)
    rng = random.Random(11)
    spec = proper_coloring_sft(4)
    for _ in range(30):
        values = {v: rng.randrange(4) for v in G.vertices}
        g = SymbolMap(G, values)
        proper = all(values[u] != values[v] for (u, v) in G.simple_undirected_edges())
        assert respects(g, spec) == proper


def test_presets():
    assert preset("proper-coloring(4)").b == 4
    assert preset("golden-mean").patterns[0].cells == (1, 1)
    pm = preset("perfect-matching(2D)")
    assert pm.b == 4 and pm.width() == 1 and len(pm.patterns) == 12
    with pytest.raises(ValueError):
        preset("no-such-preset")


def test_sft_json_roundtrip():
    spec = proper_coloring_sft(3)
    again = SftSpec.from_json(spec.to_json())
    assert again == spec
