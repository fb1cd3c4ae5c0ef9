"""Registry of shipped exhibits: example target graphs, weightings,
witness boxes, colorings and tilings.

The coloring and tiling payloads are stored as explicit per-tile
matrices (rows listed top to bottom) or placement lists, and every
loader re-validates its payload against the matching checker.  Where a
published exhibit pins only part of a quotient graph (five of the twelve
tile interiors), the remaining interiors were completed by a
deterministic constraint search; the pinned cells are kept verbatim.
"""

from __future__ import annotations

from tilekit.csp import TargetGraph, edge_slot_classes, _slot_id
from tilekit.grids import TileFamilyParams, make_gamma
from tilekit.homotopy import Weighting, WitnessBox
from tilekit.recttile import RegionTiling, SMALL_LARGE, torus
from tilekit.sft import SymbolMap


# -- example target graphs ---------------------------------------------------


def k3() -> TargetGraph:
    return TargetGraph(3, ((0, 1), (1, 2), (0, 2)), ("0", "1", "2"))


def k4() -> TargetGraph:
    return TargetGraph(4, tuple((i, j) for i in range(4) for j in range(i + 1, 4)))


def c4() -> TargetGraph:
    return TargetGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))


def petersen() -> TargetGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return TargetGraph(10, tuple(outer + spokes + inner))


def petersen_3coloring():
    """A proper 3-coloring of the Petersen graph, outer then inner ring."""
    return {0: 0, 1: 1, 2: 2, 3: 0, 4: 1, 5: 1, 6: 0, 7: 0, 8: 2, 9: 2}


# clamshell: x=0, x'=1, path v0..v4 = 2..6, arcs u0..u4 = 7..11
_CLAM_WEIGHTED_EDGES = (
    ((0, 1), -1),
    ((0, 7), 1), ((0, 8), -1), ((0, 9), -1), ((0, 10), -1), ((0, 11), -1),
    ((1, 7), 1), ((1, 8), -1), ((1, 9), -1), ((1, 10), -1), ((1, 11), -1),
    ((2, 7), 1), ((3, 8), 1), ((4, 9), 1), ((5, 10), 1), ((6, 11), 1),
    ((0, 2), -1), ((2, 3), -1), ((3, 4), -1), ((4, 5), 1), ((5, 6), 1), ((6, 1), 1),
)


def clamshell() -> TargetGraph:
    names = ("x", "x'", "v0", "v1", "v2", "v3", "v4", "u0", "u1", "u2", "u3", "u4")
    return TargetGraph(12, tuple(e for (e, _) in _CLAM_WEIGHTED_EDGES), names)


def clamshell_weighting() -> Weighting:
    H = clamshell()
    table = {}
    for ((a, b), w) in _CLAM_WEIGHTED_EDGES:
        e = (min(a, b), max(a, b))
        table[e] = w if a < b else -w
    return Weighting(H, tuple(table[e] for e in H.edges))


def k3_weighting() -> Weighting:
    """Weights 0, 0, 1 around the triangle (edge 2->0 carries the 1)."""
    H = k3()
    # canonical edges: (0,1), (0,2), (1,2); the 2->0 traversal weighs +1
    return Weighting(H, (0, -1, 0))


_KLEIN_ROWS = (
    ("x", "c1", "c2", "c3", "c4", "x"),
    ("a1", ".11", ".21", ".31", ".41", "a4"),
    ("a2", ".12", ".22", ".32", ".42", "a3"),
    ("a3", ".13", ".23", ".33", ".43", "a2"),
    ("a4", ".14", ".24", ".34", ".44", "a1"),
    ("x", "c1", "c2", "c3", "c4", "x"),
)


def klein() -> TargetGraph:
    """Quotient of a 6x6 grid whose side progressions run in opposite
    directions; the associated square complex is a Klein bottle."""
    labels = sorted({n for row in _KLEIN_ROWS for n in row})
    idx = {n: i for i, n in enumerate(labels)}
    edges = set()
    for r in range(6):
        for c in range(6):
            if c + 1 < 6:
                a, b = idx[_KLEIN_ROWS[r][c]], idx[_KLEIN_ROWS[r][c + 1]]
                if a != b:
                    edges.add((min(a, b), max(a, b)))
            if r + 1 < 6:
                a, b = idx[_KLEIN_ROWS[r][c]], idx[_KLEIN_ROWS[r + 1][c]]
                if a != b:
                    edges.add((min(a, b), max(a, b)))
    return TargetGraph(len(labels), tuple(sorted(edges)), tuple(labels))


def klein_alpha():
    """The 5-cycle through the side blocks of the Klein graph."""
    H = klein()
    idx = {n: i for i, n in enumerate(H.names)}
    return tuple(idx[n] for n in ("x", "a1", "a2", "a3", "a4", "x"))


def chvatal() -> TargetGraph:
    return TargetGraph(12, (
        (0, 1), (0, 3), (0, 4), (0, 11), (1, 2), (1, 5), (1, 6), (2, 3),
        (2, 7), (2, 8), (3, 9), (3, 10), (4, 5), (4, 7), (4, 8), (5, 9),
        (5, 10), (6, 7), (6, 9), (6, 10), (7, 11), (8, 9), (8, 11), (10, 11),
    ))


CHVATAL_CYCLE = (0, 11, 7, 2, 1, 0)

CHVATAL_BOX = WitnessBox((
    (0, 11, 7, 2, 1, 0),
    (3, 10, 6, 1, 0, 3),
    (0, 3, 9, 5, 4, 0),
    (3, 2, 8, 4, 0, 3),
    (0, 1, 2, 7, 11, 0),
))


def grotzsch() -> TargetGraph:
    return TargetGraph(11, (
        (0, 1), (0, 4), (0, 6), (0, 9), (1, 2), (1, 5), (1, 7), (2, 3),
        (2, 6), (2, 8), (3, 4), (3, 7), (3, 9), (4, 5), (4, 8), (5, 10),
        (6, 10), (7, 10), (8, 10), (9, 10),
    ))


GROTZSCH_CYCLE = (0, 1, 2, 3, 9, 0)

GROTZSCH_BOX = WitnessBox((
    (0, 1, 2, 3, 9, 0),
    (6, 2, 1, 7, 10, 6),
    (0, 1, 5, 10, 6, 0),
    (6, 0, 4, 8, 2, 6),
    (0, 9, 3, 2, 1, 0),
))

K4_CYCLE = (0, 1, 2, 0)

K4_BOX = WitnessBox((
    (0, 1, 2, 0),
    (1, 0, 3, 1),
    (0, 2, 1, 0),
))


EXAMPLE_GRAPHS = {
    "k3": k3,
    "k4": k4,
    "petersen": petersen,
    "clamshell": clamshell,
    "klein": klein,
    "chvatal": chvatal,
    "grotzsch": grotzsch,
}


# -- quotient-graph colorings ---------------------------------------------------

# Proper 4-coloring of the (1,2,3) twelve-tile graph.  Tiles 1, 3, 4, 5
# and 9 are the published matrices; the other interiors are the least
# completion found by the deterministic search.  Rows top to bottom.
FOUR_COLORING_123 = {
    1: [[3, 0, 3], [0, 3, 0], [3, 0, 3]],
    2: [[3, 0, 3], [0, 2, 0], [2, 1, 2], [3, 0, 3]],
    3: [[3, 0, 2, 3], [0, 2, 3, 0], [3, 0, 2, 3]],
    4: [[3, 0, 2, 3], [0, 2, 3, 0], [2, 3, 0, 2], [3, 0, 2, 3]],
    5: [[3, 0, 2, 3, 0, 3], [0, 3, 0, 2, 3, 0], [3, 0, 3, 0, 2, 3]],
    6: [[3, 0, 3], [0, 1, 0], [3, 0, 2], [0, 2, 3], [2, 1, 0], [3, 0, 3]],
    7: [[3, 0, 3, 0, 2, 3], [0, 1, 0, 1, 3, 0], [3, 0, 2, 3, 0, 3]],
    8: [[3, 0, 3], [0, 1, 0], [2, 0, 3], [3, 2, 0], [0, 1, 2], [3, 0, 3]],
    9: [[3, 0, 3, 0, 3, 0, 3], [0, 3, 0, 2, 1, 3, 0], [3, 0, 2, 3, 0, 2, 3]],
    10: [[3, 0, 2, 3, 0, 2, 3], [0, 1, 0, 1, 2, 1, 0], [3, 0, 3, 0, 3, 0, 3]],
    11: [[3, 0, 3], [0, 1, 0], [3, 0, 2], [0, 1, 3], [3, 2, 0], [0, 1, 2], [3, 0, 3]],
    12: [[3, 0, 3], [0, 1, 0], [2, 0, 3], [3, 1, 0], [0, 2, 3], [2, 1, 0], [3, 0, 3]],
}

# Two-coloring of the (1,5,2) twelve-tile graph with all monochromatic
# components of size at most 3.  Tiles 1, 2, 4, 7 and 9 as published;
# the rest completed under the same component conditions.
MONO_152 = {
    1: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 1, 0, 1, 0],
        [1, 0, 0, 1, 0, 1], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
    2: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
    3: [[0, 1, 0], [1, 0, 1], [0, 1, 0], [1, 0, 1], [1, 0, 1], [0, 1, 0]],
    4: [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
    5: [[0, 1, 0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 1, 0, 0, 1], [0, 1, 1, 0, 1, 0, 1, 0],
        [1, 0, 0, 1, 0, 1, 0, 1], [1, 0, 1, 0, 0, 1, 0, 1], [0, 1, 0, 1, 1, 0, 1, 0]],
    6: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 1, 0, 1, 0], [1, 0, 0, 1, 0, 1],
        [1, 0, 1, 0, 1, 0], [0, 1, 0, 1, 0, 1], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
    7: [[0, 1, 0, 1, 1, 0, 1, 0], [1, 0, 1, 0, 0, 1, 0, 1], [0, 1, 0, 1, 1, 0, 1, 0],
        [1, 0, 1, 0, 0, 1, 0, 1], [1, 0, 1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 0, 1, 1, 0]],
    8: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0], [1, 0, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 1], [1, 0, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
    9: [[0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1],
        [0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1],
        [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1], [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]],
    10: [[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0], [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
         [0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0], [1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1],
         [1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0]],
    11: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 1, 0, 1, 0], [1, 0, 0, 1, 0, 1],
         [1, 0, 1, 0, 1, 0], [0, 1, 0, 1, 0, 1], [1, 0, 0, 1, 1, 0], [0, 1, 1, 0, 0, 1],
         [1, 0, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
    12: [[0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1],
         [0, 1, 0, 1, 0, 1], [1, 0, 0, 1, 1, 0], [0, 1, 1, 0, 0, 1], [1, 0, 0, 1, 1, 0],
         [0, 1, 0, 1, 0, 1], [1, 0, 1, 0, 0, 1], [0, 1, 0, 1, 1, 0]],
}

# Proper edge 5-coloring of the (1,2,3) twelve-tile graph.  Per cell the
# colors of the (left, top, bottom, right) edge slots, 1-based; rows top
# to bottom.
EDGE_COLORING_123 = {
    1: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    2: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 5, 2), (2, 3, 5, 1), (1, 3, 5, 2)],
        [(1, 5, 4, 2), (2, 5, 4, 1), (1, 5, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    3: [[(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 5), (5, 3, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)]],
    4: [[(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 5, 2), (2, 3, 1, 4), (4, 3, 2, 1), (1, 3, 5, 2)],
        [(1, 5, 4, 2), (2, 1, 4, 3), (3, 2, 4, 1), (1, 5, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)]],
    5: [[(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 5), (5, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)]],
    6: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 5, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 5, 4, 2)],
        [(1, 3, 5, 2), (2, 3, 5, 1), (1, 4, 3, 2)],
        [(1, 5, 4, 2), (2, 5, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    7: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 5), (5, 3, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    8: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 5, 2), (2, 3, 5, 1), (1, 3, 4, 2)],
        [(1, 5, 4, 2), (2, 5, 4, 1), (1, 4, 3, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 3, 5, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 1), (1, 5, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    9: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
        [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
        [(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)]],
    10: [[(1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 5), (5, 4, 3, 1), (1, 4, 3, 2)],
         [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
         [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    11: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
         [(1, 3, 4, 2), (2, 3, 4, 1), (1, 3, 5, 2)],
         [(1, 4, 3, 2), (2, 4, 3, 1), (1, 5, 4, 2)],
         [(1, 3, 4, 2), (2, 3, 4, 1), (1, 4, 3, 2)],
         [(1, 4, 3, 2), (2, 4, 3, 1), (1, 3, 5, 2)],
         [(1, 3, 4, 2), (2, 3, 4, 1), (1, 5, 4, 2)],
         [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
    12: [[(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
         [(1, 3, 5, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
         [(1, 5, 4, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
         [(1, 4, 3, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
         [(1, 3, 5, 2), (2, 4, 3, 1), (1, 4, 3, 2)],
         [(1, 5, 4, 2), (2, 3, 4, 1), (1, 3, 4, 2)],
         [(1, 4, 3, 2), (2, 4, 3, 1), (1, 4, 3, 2)]],
}

# Tiling of the 17 x 19 torus by 2x2 and 3x3 squares (tile 0 = 2x2,
# tile 1 = 3x3 in the canonical small/large tile set).
TORUS_17_19_PLACEMENTS = [
    (0, (0, 12)), (0, (1, 0)), (0, (1, 2)), (0, (1, 4)), (0, (1, 17)), (0, (2, 9)),
    (0, (3, 1)), (0, (3, 14)), (0, (3, 16)), (0, (3, 18)), (0, (4, 6)), (0, (5, 11)),
    (0, (5, 13)), (0, (5, 15)), (0, (5, 17)), (0, (6, 3)), (0, (7, 8)), (0, (8, 0)),
    (0, (9, 5)), (0, (10, 10)), (0, (10, 12)), (0, (10, 14)), (0, (10, 16)), (0, (11, 2)),
    (0, (12, 7)), (0, (12, 9)), (0, (12, 11)), (0, (12, 13)), (0, (13, 18)), (0, (14, 4)),
    (0, (14, 6)), (0, (14, 8)), (0, (14, 10)), (0, (15, 15)), (0, (16, 1)), (0, (16, 3)),
    (0, (16, 5)), (0, (16, 7)), (1, (0, 14)), (1, (1, 6)), (1, (2, 11)), (1, (3, 3)),
    (1, (4, 8)), (1, (5, 0)), (1, (6, 5)), (1, (7, 10)), (1, (7, 13)), (1, (7, 16)),
    (1, (8, 2)), (1, (9, 7)), (1, (10, 18)), (1, (11, 4)), (1, (12, 15)), (1, (13, 1)),
    (1, (14, 12)), (1, (15, 17)), (1, (16, 9)),
]


# -- loaders with validation -----------------------------------------------------


_GAMMA_CACHE = {}


def gamma(n, p, q):
    key = (n, p, q)
    if key not in _GAMMA_CACHE:
        _GAMMA_CACHE[key] = make_gamma(TileFamilyParams(n, p, q))
    return _GAMMA_CACHE[key]


def symbol_map_from_tiles(G, matrices) -> SymbolMap:
    """Assemble a symbol map from per-tile matrices (rows top to bottom),
    checking agreement on identified cells."""
    values = {}
    for i, rows in matrices.items():
        gi = i - 1
        grid = G.grids[gi]
        if grid.height != len(rows) or grid.width != len(rows[0]):
            raise ValueError(f"tile {i} matrix has wrong dimensions")
        for ry, row in enumerate(rows):
            y = grid.height - 1 - ry
            for x, v in enumerate(row):
                cls = G.class_of[(gi, x, y)]
                if values.get(cls, v) != v:
                    raise ValueError(f"matrix conflict at tile {i} cell {(x, y)}")
                values[cls] = v
    return SymbolMap(G, values)


def four_coloring_map() -> SymbolMap:
    """The shipped 4-coloring of the (1,2,3) graph; validated at load."""
    G = gamma(1, 2, 3)
    g = symbol_map_from_tiles(G, FOUR_COLORING_123)
    for (u, v) in G.simple_undirected_edges():
        if g.values[u] == g.values[v]:
            raise AssertionError("shipped 4-coloring is not proper")
    return g


def mono_map() -> SymbolMap:
    """The shipped two-coloring of the (1,5,2) graph."""
    from tilekit.csp import check_mono_bound

    G = gamma(1, 5, 2)
    g = symbol_map_from_tiles(G, MONO_152)
    if not check_mono_bound(TileFamilyParams(1, 5, 2), g, 3):
        raise AssertionError("shipped two-coloring violates the component bound")
    return g


def edge_coloring_witness():
    """Slot-class coloring from the shipped per-cell edge colors.

    Returns (graph, witness dict mapping slot-class ids to 0-based
    colors); raises when the payload is inconsistent or improper.
    """
    G = gamma(1, 2, 3)
    reps, rep_of, slots_of = edge_slot_classes(G)
    witness = {}
    for i, rows in EDGE_COLORING_123.items():
        gi = i - 1
        grid = G.grids[gi]
        if grid.height != len(rows) or grid.width != len(rows[0]):
            raise ValueError(f"tile {i} matrix has wrong dimensions")
        for ry, row in enumerate(rows):
            y = grid.height - 1 - ry
            for x, (l, t, b, r) in enumerate(row):
                cls = G.class_of[(gi, x, y)]
                for (g, s, col) in ((0, -1, l), (1, 1, t), (1, -1, b), (0, 1, r)):
                    rid = _slot_id(rep_of[(cls, g, s)])
                    if witness.get(rid, col - 1) != col - 1:
                        raise ValueError(f"edge color conflict at tile {i} cell {(x, y)}")
                    witness[rid] = col - 1
    if len(witness) != len(reps):
        raise ValueError("edge coloring does not cover every edge class")
    for v in G.vertices:
        colors = [witness[_slot_id(rep_of[s])] for s in slots_of[v]]
        if len(set(colors)) != len(colors):
            raise AssertionError("shipped edge coloring is not proper")
    return G, witness


def torus_17_19_tiling() -> RegionTiling:
    t = RegionTiling(torus(17, 19), SMALL_LARGE,
                     [(ti, xy) for (ti, xy) in TORUS_17_19_PLACEMENTS])
    if not t.validate():
        raise AssertionError("shipped 17x19 tiling is invalid")
    return t


# -- registry ----------------------------------------------------------------------


def _check_k3_weighting():
    from tilekit.homotopy import negative_weight_holds

    w = k3_weighting()
    return all(negative_weight_holds(k3(), w, p) for p in (3, 5, 7))


def _check_clamshell_weighting():
    from tilekit.homotopy import negative_weight_holds

    w = clamshell_weighting()
    return all(negative_weight_holds(clamshell(), w, p) for p in (5, 7))


def _check_petersen_coloring():
    col = petersen_3coloring()
    return all(col[u] != col[v] for (u, v) in petersen().edges)


def _check_chvatal_box():
    from tilekit.homotopy import verify_order2_witness

    return verify_order2_witness(chvatal(), CHVATAL_CYCLE, CHVATAL_BOX)


def _check_grotzsch_box():
    from tilekit.homotopy import verify_order2_witness

    return verify_order2_witness(grotzsch(), GROTZSCH_CYCLE, GROTZSCH_BOX)


def _check_k4_box():
    from tilekit.homotopy import verify_order2_witness

    return verify_order2_witness(k4(), K4_CYCLE, K4_BOX)


def _check_lattice_tiling():
    from tilekit.recttile import lattice_tiling_2_3

    return lattice_tiling_2_3().validate()


FIXTURES = {
    "four-coloring-1-2-3": {
        "provenance": "chromatic 4-coloring exhibit for the (1,2,3) twelve-tile graph",
        "check": lambda: four_coloring_map() is not None,
    },
    "edge-five-coloring-1-2-3": {
        "provenance": "edge 5-coloring exhibit for the (1,2,3) twelve-tile graph",
        "check": lambda: edge_coloring_witness() is not None,
    },
    "mono-two-coloring-1-5-2": {
        "provenance": "two-coloring of the (1,5,2) twelve-tile graph with components of size <= 3",
        "check": lambda: mono_map() is not None,
    },
    "k3-weighting": {
        "provenance": "triangle weighting passing the closed-walk residue test",
        "check": _check_k3_weighting,
    },
    "clamshell-weighting": {
        "provenance": "clamshell graph weighting passing the closed-walk residue test",
        "check": _check_clamshell_weighting,
    },
    "petersen-three-coloring": {
        "provenance": "proper 3-coloring of the Petersen graph",
        "check": _check_petersen_coloring,
    },
    "chvatal-order2-box": {
        "provenance": "order-2 witness box for an odd cycle of the Chvatal graph",
        "check": _check_chvatal_box,
    },
    "grotzsch-order2-box": {
        "provenance": "order-2 witness box for an odd cycle of the Grotzsch graph",
        "check": _check_grotzsch_box,
    },
    "k4-order2-box": {
        "provenance": "order-2 witness box for a triangle of the complete 4-graph",
        "check": _check_k4_box,
    },
    "lattice-tiling-13": {
        "provenance": "periodic 13x13 torus tiling by 2x2 and 3x3 squares",
        "check": _check_lattice_tiling,
    },
    "torus-17-19-tiling": {
        "provenance": "17x19 torus tiling by 2x2 and 3x3 squares",
        "check": lambda: torus_17_19_tiling() is not None,
    },
}


def check_fixture(name: str) -> bool:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}")
    return bool(FIXTURES[name]["check"]())
