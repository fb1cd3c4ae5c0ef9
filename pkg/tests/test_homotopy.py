import random

import pytest

from tilekit import fixtures
from tilekit.csp import TargetGraph
from tilekit.homotopy import (
    Weighting,
    WitnessBox,
    contains_k4,
    negative_weight_holds,
    negative_weight_search,
    nontrivial_4cycles,
    search_order2_witness,
    simple_negative,
    verify_order2_witness,
    weight_nullspace,
)


def test_nontrivial_4cycles_examples():
    assert nontrivial_4cycles(fixtures.k3()) == []
    assert len(nontrivial_4cycles(fixtures.c4())) == 1
    assert len(nontrivial_4cycles(fixtures.k4())) == 3


def test_nullspace_dimensions():
    assert len(weight_nullspace(fixtures.k3())) == 3
    assert len(weight_nullspace(fixtures.c4())) == 3
    assert len(weight_nullspace(fixtures.klein())) == 25


def test_nullspace_vanishes_on_4cycles():
    for build in (fixtures.c4, fixtures.k4, fixtures.clamshell):
        H = build()
        cycles = nontrivial_4cycles(H)
        for vec in weight_nullspace(H):
            w = Weighting(H, vec)
            for cyc in cycles:
                assert w.walk_weight(list(cyc) + [cyc[0]]) == 0


def test_klein_nullspace_forces_side_cycle():
    K = fixtures.klein()
    alpha = list(fixtures.klein_alpha())
    for vec in weight_nullspace(K):
        assert Weighting(K, vec).walk_weight(alpha) == 0


def test_weighting_antisymmetric_on_walks():
    H = fixtures.clamshell()
    w = fixtures.clamshell_weighting()
    rng = random.Random(2)
    adj = H.adjacency()
    for _ in range(50):
        walk = [rng.randrange(H.n)]
        for _ in range(rng.randrange(1, 8)):
            walk.append(rng.choice(sorted(adj[walk[-1]])))
        assert w.walk_weight(list(reversed(walk))) == -w.walk_weight(walk)


def test_negative_weight_holds_examples():
    w3 = fixtures.k3_weighting()
    for p in (3, 5, 7):
        assert negative_weight_holds(fixtures.k3(), w3, p)
    wj = fixtures.clamshell_weighting()
    for p in (5, 7):
        assert negative_weight_holds(fixtures.clamshell(), wj, p)


def test_negative_weight_zero_fails_on_odd_walks():
    H = fixtures.k3()
    zero = Weighting(H, (0, 0, 0))
    assert not negative_weight_holds(H, zero, 3)


def test_negative_weight_requires_vanishing():
    H = fixtures.c4()
    bad = Weighting(H, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        negative_weight_holds(H, bad, 3)


def test_negative_weight_search_examples():
    assert negative_weight_search(fixtures.k3(), 5, 1) is not None
    # bipartite graph has no odd closed walks: vacuous pass
    assert negative_weight_search(fixtures.c4(), 3, 1) is not None
    assert negative_weight_search(fixtures.klein(), 5, 2) is None


def test_dp_matches_walk_enumeration():
    rng = random.Random(31)

    def enumerate_holds(H, w, p):
        adj = H.adjacency()

        def walks(v, length):
            if length == 0:
                yield (v,)
                return
            for u in sorted(adj[v]):
                for rest in walks(u, length - 1):
                    yield (v,) + rest

        for start in range(H.n):
            for walk in walks(start, p):
                if walk[-1] == start and w.walk_weight(walk) % p == 0:
                    return False
        return True

    for _ in range(12):
        m = rng.randrange(3, 8)
        edges = tuple((i, j) for i in range(m) for j in range(i + 1, m)
                      if rng.random() < 0.5)
        if not edges:
            continue
        H = TargetGraph(m, edges)
        basis = weight_nullspace(H)
        vec = [0] * len(H.edges)
        for bvec in basis[:3]:
            c = rng.randrange(-1, 2)
            for i, x in enumerate(bvec):
                vec[i] += c * x
        w = Weighting(H, tuple(vec))
        for p in (3, 5, 7):
            assert negative_weight_holds(H, w, p) == enumerate_holds(H, w, p)


def test_simple_negative():
    assert simple_negative(fixtures.petersen())  # 3-colorable
    assert not simple_negative(fixtures.k4())
    tree = TargetGraph(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
    assert simple_negative(tree)


def test_contains_k4():
    assert contains_k4(fixtures.k4())
    assert not contains_k4(fixtures.petersen())
    assert not contains_k4(fixtures.chvatal())
    assert not contains_k4(fixtures.grotzsch())


def test_fixture_boxes_verify():
    assert verify_order2_witness(fixtures.chvatal(), fixtures.CHVATAL_CYCLE,
                                 fixtures.CHVATAL_BOX)
    assert verify_order2_witness(fixtures.grotzsch(), fixtures.GROTZSCH_CYCLE,
                                 fixtures.GROTZSCH_BOX)
    assert verify_order2_witness(fixtures.k4(), fixtures.K4_CYCLE, fixtures.K4_BOX)


def test_corrupted_box_fails():
    rows = [list(r) for r in fixtures.CHVATAL_BOX.rows]
    rows[2][2] = (rows[2][2] + 1) % 12
    box = WitnessBox(tuple(tuple(r) for r in rows))
    assert not verify_order2_witness(fixtures.chvatal(), fixtures.CHVATAL_CYCLE, box)


def test_box_requires_odd_cycle():
    with pytest.raises(ValueError):
        verify_order2_witness(fixtures.c4(), (0, 1, 2, 3, 0), fixtures.CHVATAL_BOX)


def test_search_refinds_chvatal():
    box = search_order2_witness(fixtures.chvatal(), fixtures.CHVATAL_CYCLE, 5, 6)
    assert box is not None
    assert verify_order2_witness(fixtures.chvatal(), fixtures.CHVATAL_CYCLE, box)


def test_search_finds_k4_triangle():
    box = search_order2_witness(fixtures.k4(), (0, 1, 2, 0), 6, 6)
    assert box is not None
    assert verify_order2_witness(fixtures.k4(), (0, 1, 2, 0), box)


def test_search_exhausts_k3():
    assert search_order2_witness(fixtures.k3(), (0, 1, 2, 0), 10, 10) is None


def test_mutual_exclusion_fixture_pairing():
    # graphs with a shipped negative weighting have no witness box in bounds
    assert search_order2_witness(fixtures.k3(), (0, 1, 2, 0), 8, 8) is None
    H = fixtures.clamshell()
    tri = (0, 7, 1, 0)  # x, u0, x' triangle
    assert search_order2_witness(H, tri, 4, 4) is None


def test_simple_negative_implies_hom_unsat():
    from tilekit.csp import solve_hom

    G = fixtures.gamma(1, 2, 3)
    for name, build in fixtures.EXAMPLE_GRAPHS.items():
        H = build()
        if simple_negative(H):
            assert not solve_hom(G, H).sat, name
