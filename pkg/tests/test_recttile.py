import random

import pytest

from tilekit import fixtures
from tilekit.recttile import (
    SMALL_LARGE,
    RectTileSet,
    Region,
    RegionTiling,
    area_obstruction,
    box,
    decide_ss_torus,
    lattice_tiling_2_3,
    representable_13_6,
    solve_rect_tiling,
    stretch_tiling,
    tiling_from_certificate,
    torus,
)


def test_tileset_normalization():
    ts = RectTileSet(((3, 3), (2, 2), (2, 2)))
    assert ts.tiles == ((2, 2), (3, 3))
    with pytest.raises(ValueError):
        RectTileSet(())


def test_validator_catches_gaps_and_overlaps():
    ts = RectTileSet(((2, 2),))
    good = RegionTiling(box(4, 2), ts, [(0, (0, 0)), (0, (2, 0))])
    assert good.validate()
    gap = RegionTiling(box(4, 2), ts, [(0, (0, 0))])
    assert not gap.validate()
    overlap = RegionTiling(box(4, 2), ts, [(0, (0, 0)), (0, (1, 0)), (0, (2, 0))])
    assert not overlap.validate()
    outside = RegionTiling(box(3, 2), ts, [(0, (0, 0)), (0, (2, 0))])
    assert not outside.validate()


def test_validator_rejects_self_wrapping():
    ts = RectTileSet(((2, 2),))
    t = RegionTiling(torus(1, 4), ts, [(0, (0, 0)), (0, (0, 2))])
    assert not t.validate()


def test_single_unit_tile_always_tiles():
    ts = RectTileSet(((1, 1),))
    cert = solve_rect_tiling(box(5, 3), ts)
    assert cert.sat and len(cert.witness) == 15


def test_torus_17_19_fixture():
    t = fixtures.torus_17_19_tiling()
    assert t.validate()
    areas = sum(
        t.tiles.tiles[ti][0] * t.tiles.tiles[ti][1] for (ti, _) in t.placements
    )
    assert areas == 17 * 19


def test_solver_outputs_validate():
    for region in (box(6, 4), torus(6, 6), torus(12, 13)):
        cert = solve_rect_tiling(region, SMALL_LARGE)
        if cert.sat:
            assert tiling_from_certificate(region, SMALL_LARGE, cert).validate()


def test_torus_5x5_unsat_and_obstructed():
    tiles = RectTileSet(((2, 2), (2, 3), (3, 2)))
    ob = area_obstruction(torus(5, 5), tiles)
    assert ob["d"] == 2
    cert = solve_rect_tiling(torus(5, 5), tiles)
    assert not cert.sat


def test_area_obstruction_examples():
    assert area_obstruction(torus(7, 7), RectTileSet(((3, 3), (3, 4), (4, 3))))["d"] == 3
    assert area_obstruction(torus(4, 4), RectTileSet(((2, 2),))) is None


def test_obstruction_implies_unsat():
    rng = random.Random(9)
    for _ in range(10):
        a, b = rng.randrange(3, 7), rng.randrange(3, 7)
        tiles = RectTileSet(tuple(
            (rng.randrange(2, 4), rng.randrange(2, 4)) for _ in range(rng.randrange(1, 3))
        ))
        ob = area_obstruction(torus(a, b), tiles)
        if ob is not None:
            assert not solve_rect_tiling(torus(a, b), tiles).sat


def test_lattice_tiling():
    t = lattice_tiling_2_3()
    assert t.region == torus(13, 13)
    assert t.validate()
    bigs = sum(1 for (ti, _) in t.placements if t.tiles.tiles[ti] == (3, 3))
    smalls = len(t.placements) - bigs
    assert 9 * bigs + 4 * smalls == 169
    assert bigs == 13 and smalls == 13


def test_lattice_tiling_periodic():
    # the pattern extends 13-periodically: shifted placements retile
    t = lattice_tiling_2_3()
    for (dx, dy) in ((1, 0), (0, 5), (7, 11)):
        shifted = RegionTiling(
            t.region, t.tiles,
            [(ti, ((x + dx) % 13, (y + dy) % 13)) for (ti, (x, y)) in t.placements],
        )
        assert shifted.validate()


def test_stretch_examples():
    t = lattice_tiling_2_3()
    sx = stretch_tiling(t, "x", 1)
    assert sx.region == torus(19, 13) and sx.validate()
    sy = stretch_tiling(t, "y", 1)
    assert sy.region == torus(13, 19) and sy.validate()
    twice = stretch_tiling(stretch_tiling(t, "x", 1), "x", 1)
    once_by_two = stretch_tiling(t, "x", 2)
    assert twice.region == once_by_two.region == torus(25, 13)
    assert twice.validate() and once_by_two.validate()


def test_stretch_random_small_tori():
    rng = random.Random(14)
    produced = 0
    for _ in range(8):
        a = rng.choice((6, 8, 12))
        b = rng.choice((6, 9, 12))
        cert = solve_rect_tiling(torus(a, b), SMALL_LARGE, budget=500_000)
        if not cert.sat:
            continue
        t = tiling_from_certificate(torus(a, b), SMALL_LARGE, cert)
        for axis in ("x", "y"):
            s = stretch_tiling(t, axis, 1)
            assert s.validate()
            produced += 1
    assert produced >= 4


def test_stretch_rejects_invalid_input():
    bad = RegionTiling(torus(4, 4), SMALL_LARGE, [(0, (0, 0))])
    with pytest.raises(ValueError):
        stretch_tiling(bad, "x", 1)


def test_representable():
    assert representable_13_6(13) and representable_13_6(6)
    assert representable_13_6(60) and representable_13_6(61)
    assert not representable_13_6(17)
    assert all(representable_13_6(x) for x in range(60, 200))


def test_decide_examples():
    d = decide_ss_torus(60, 61)
    assert d.answer is True and d.method == "lattice+stretch"
    assert d.tiling.validate()
    d = decide_ss_torus(13, 13)
    assert d.answer is True and d.method == "lattice+stretch"
    d = decide_ss_torus(2, 2, budget=1000)
    assert d.answer is True and d.method == "search"
    d = decide_ss_torus(5, 5, budget=100_000)
    assert d.answer is False and d.method == "search"


def test_decide_unknown_on_budget():
    d = decide_ss_torus(17, 19, budget=50)
    assert d.answer is None and d.method == "unknown"


def test_tiling_json_roundtrip():
    t = lattice_tiling_2_3()
    again = RegionTiling.from_jsonable(
        __import__("json").loads(t.to_json())
    )
    assert again.validate() and again.placements == t.placements


@pytest.mark.slow
def test_torus_17_19_search():
    cert = solve_rect_tiling(torus(17, 19), SMALL_LARGE)
    assert cert.sat
    assert tiling_from_certificate(torus(17, 19), SMALL_LARGE, cert).validate()
