import random

import pytest

from tilekit.grids import TILE_INDICES, TileFamilyParams, make_tile_grid, tile_dims
from tilekit.tiler12 import (
    BoundarySpec,
    InfeasibleSpec,
    Placement12,
    fill_rectangle,
    fill_uniform,
    gather_strip,
    product_fill,
    propagate_fill,
    random_boundary_spec,
    run_width,
    tile_permutation,
    validate_tiling12,
)

P123 = TileFamilyParams(1, 2, 3)
P134 = TileFamilyParams(1, 3, 4)
P257 = TileFamilyParams(2, 5, 7)


def test_permutations_are_structure_preserving():
    for params in (P123, P134, P257):
        for tr in ("transpose", "hflip", "vflip"):
            perm = tile_permutation(tr, params)
            assert sorted(perm.values()) == list(TILE_INDICES)
            for i in TILE_INDICES:
                assert perm[perm[i]] == i  # involution
                w, h = tile_dims(i, params)
                w2, h2 = tile_dims(perm[i], params)
                if tr == "transpose":
                    assert (w2, h2) == (h, w)
                else:
                    assert (w2, h2) == (w, h)


def test_transform_preserves_block_rectangles():
    # mirrored placements of the permuted tile must put equal-kind blocks
    # on exactly the same cells
    params = P257
    for tr in ("transpose", "hflip", "vflip"):
        perm = tile_permutation(tr, params)
        for i in TILE_INDICES:
            g = make_tile_grid(i, params)
            g2 = make_tile_grid(perm[i], params)
            for (x, y) in g.cells():
                kind = g.label_of[(x, y)][0].kind
                if tr == "transpose":
                    tx, ty = y, x
                    kind = {"a": "c", "c": "a", "b": "d", "d": "b"}.get(kind, kind)
                elif tr == "hflip":
                    tx, ty = g.width - 1 - x, y
                else:
                    tx, ty = x, g.height - 1 - y
                kind2 = g2.label_of[(tx, ty)][0].kind
                if kind == "interior":
                    assert kind2 == "interior"
                else:
                    assert kind2 == kind


def test_fill_uniform_counts():
    n, p = P123.n, P123.p
    pls = fill_uniform((3 * p + n, 3 * p + n), 1, P123)
    assert len(pls) == 9
    assert validate_tiling12(pls, (3 * p + n, 3 * p + n), P123)
    assert len(fill_uniform((p + n, p + n), 1, P123)) == 1
    assert len(fill_uniform((p + n, P123.q + n), 2, P123)) == 1


def test_fill_uniform_rejects_bad_dims():
    with pytest.raises(ValueError):
        fill_uniform((4, 4), 1, P123)
    with pytest.raises(ValueError):
        fill_uniform((3, 3), 9, P123)


def test_validate_rejects_mismatched_overlap():
    # two uniform fills shifted against each other overlap inconsistently
    pls = fill_uniform((3, 3), 1, P123) + [Placement12(1, (1, 0))]
    assert not validate_tiling12(pls, (5, 3), P123)


def test_validate_needs_2x2_containment():
    # two side-by-side tiles that only share a column of width n=1 leave
    # a 2x2 square split between them when they do not overlap
    pls = [Placement12(1, (0, 0)), Placement12(1, (3, 0))]
    assert not validate_tiling12(pls, (6, 3), P123)


def test_propagate_fill_examples():
    W = run_width("ccdcc", P123)
    H = 3 * P123.p + P123.n
    pls, bottom = propagate_fill((W, H), "ccdcc", [0], P123)
    assert bottom == "ccdcc"
    assert validate_tiling12(pls, (W, H), P123)
    pls, bottom = propagate_fill((W, H), "ccdcc", [2], P123)
    assert bottom == "ccccd"
    assert validate_tiling12(pls, (W, H), P123)
    W2 = run_width("ccccc", P123)
    pls, bottom = propagate_fill((W2, H), "ccccc", [], P123)
    assert bottom == "ccccc"
    assert validate_tiling12(pls, (W2, H), P123)


def test_propagate_fill_rejects_excess_shift():
    W = run_width("cdc", P123)
    H = P123.p + P123.n  # a single row
    with pytest.raises(InfeasibleSpec):
        propagate_fill((W, H), "cdc", [2], P123)


def test_gather_strip_formulas():
    # k = 0, k = p and k = p + 2 on parameters with p = 3
    params = P134
    p, q = params.p, params.q
    H = (q + 1) * p + params.n
    for k, gaps in ((0, [8]), (p, [8, 4, 4, 8]), (p + 2, [8, 4, 4, 4, 4, 8])):
        units = ""
        for i, g in enumerate(gaps):
            units += "c" * g
            if i < k:
                units += "d"
        res = gather_strip(units, params)
        j = units.count("c")
        assert res.top_counts == (j, k)
        assert res.bottom_counts == (k % p, j + q * (k // p))
        assert res.bottom == "d" * (k % p) + "c" * (j + q * (k // p))
        W = run_width(units, params)
        assert validate_tiling12(res.placements, (W, H), params)


def test_gather_strip_routes_within_separation():
    with pytest.raises(InfeasibleSpec):
        # a d block hard against the right end cannot shift into its slot
        gather_strip("cd", P123)


def test_fill_rectangle_plain_spec():
    q = P123.q
    side = "c" * (2 * (q + 1) + 1)
    spec = BoundarySpec(P123, side, side,
                        side.replace("c", "a"), side.replace("c", "a"))
    pls = fill_rectangle(spec)
    assert validate_tiling12(pls, (spec.width, spec.height), P123)


def test_fill_rectangle_single_rare_blocks():
    q = P123.q
    m = 2 * q + 1
    top = "c" * m + "d" + "c" * m
    left = ("a" * m + "b" + "a" * m)
    spec = BoundarySpec(P123, top, top, left, left)
    pls = fill_rectangle(spec)
    assert validate_tiling12(pls, (spec.width, spec.height), P123)


def test_fill_rectangle_infeasible_separation():
    side = "c" * 12
    bad_top = "cd" + "c" * 10
    spec = BoundarySpec(P123, bad_top, bad_top,
                        side.replace("c", "a"), side.replace("c", "a"))
    with pytest.raises(InfeasibleSpec):
        fill_rectangle(spec)


def test_fill_rectangle_mismatched_sides():
    spec = BoundarySpec(P123, "c" * 15, "c" * 14 + "d", "a" * 15, "a" * 15)
    with pytest.raises(InfeasibleSpec):
        fill_rectangle(spec)


@pytest.mark.parametrize("params", [P123, P134, P257])
def test_fill_rectangle_randomized(params):
    rng = random.Random(hash((params.n, params.p, params.q)) & 0xFFFF)
    for _ in range(4):
        spec = random_boundary_spec(params, rng)
        pls = fill_rectangle(spec)
        assert validate_tiling12(pls, (spec.width, spec.height), params)


def test_product_fill_mixed_units():
    pls = product_fill("dc", "ba", P123)
    W = P123.q + P123.p + P123.n
    H = P123.q + P123.p + P123.n
    assert validate_tiling12(pls, (W, H), P123)
    tiles = sorted(p.tile for p in pls)
    assert tiles == [1, 2, 3, 4]


def test_boundary_spec_json_roundtrip():
    import json

    rng = random.Random(0)
    spec = random_boundary_spec(P123, rng)
    again = BoundarySpec.from_jsonable(json.loads(json.dumps(spec.to_jsonable())))
    assert again == spec


def test_placements_consistent_under_symbol_map():
    # reading any symbol map through overlapping placements is well defined
    from tilekit import fixtures

    g = fixtures.four_coloring_map()
    G = g.graph
    rng = random.Random(6)
    spec = random_boundary_spec(P123, rng)
    pls = fill_rectangle(spec)
    seen = {}
    for pl in pls:
        grid = make_tile_grid(pl.tile, P123)
        for (cx, cy) in grid.cells():
            cell = (pl.anchor[0] + cx, pl.anchor[1] + cy)
            val = g.values[G.class_of[(pl.tile - 1, cx, cy)]]
            assert seen.setdefault(cell, val) == val
