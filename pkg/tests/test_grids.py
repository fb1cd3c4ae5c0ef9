import pytest

from tilekit.grids import (
    TILE_INDICES,
    BlockLabel,
    TileFamilyParams,
    make_gamma,
    make_gamma1,
    make_grid,
    make_tile_grid,
    make_torus,
    quotient,
    tile_dims,
)

P123 = TileFamilyParams(1, 2, 3)


def test_make_grid_counts():
    g = make_grid(3, 3)
    assert g.vertex_count() == 9 and g.edge_count() == 12
    g = make_grid(1, 1)
    assert g.vertex_count() == 1 and g.edge_count() == 0
    g = make_grid(7, 3)
    assert g.vertex_count() == 21 and g.edge_count() == 32


def test_make_grid_rejects_nonpositive():
    with pytest.raises(ValueError):
        make_grid(0, 3)
    with pytest.raises(ValueError):
        make_grid(3, -1)


def test_torus_counts_and_degrees():
    t = make_torus(3, 3)
    assert t.vertex_count() == 9
    assert t.undirected_edge_count() == 18
    assert all(t.degree(v) == 4 for v in t.vertices)
    assert make_torus(17, 19).vertex_count() == 323


def test_torus_parallel_edges_retained():
    t = make_torus(2, 2)
    assert t.vertex_count() == 4
    tags = t.edge_tags[((0, 0), (1, 0))]
    assert tags == frozenset({(0, 1), (0, -1)})
    assert t.undirected_edge_count() == 8  # 2ab with multiplicity
    assert all(t.degree(v) == 4 for v in t.vertices)


def test_torus_higher_dimension():
    t = make_torus([5, 5, 5])
    assert t.vertex_count() == 125
    assert all(t.degree(v) == 6 for v in t.vertices)


def test_tile_dims_table():
    n, p, q = 1, 2, 3
    expect = {
        1: (p + n, p + n),
        2: (p + n, q + n),
        3: (q + n, p + n),
        4: (q + n, q + n),
        5: (p + q + n, p + n),
        6: (p + n, p + q + n),
        7: (p + q + n, p + n),
        8: (p + n, p + q + n),
        9: (p * q + n, p + n),
        10: (p * q + n, p + n),
        11: (p + n, p * q + n),
        12: (p + n, p * q + n),
    }
    for i in TILE_INDICES:
        assert tile_dims(i, P123) == expect[i]
    assert tile_dims(9, TileFamilyParams(1, 2, 3)) == (7, 3)
    assert tile_dims(5, TileFamilyParams(1, 2, 3)) == (6, 3)
    assert tile_dims(1, TileFamilyParams(1, 2, 3)) == (3, 3)


def _union_find_oracle(grids):
    """Independent count of classes and tagged edges via plain dict DSU."""
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx

    for i, g in enumerate(grids):
        for cell in g.cells():
            parent[(i,) + cell] = (i,) + cell
    buckets = {}
    for i, g in enumerate(grids):
        for (x, y) in g.cells():
            label, off = g.label_of[(x, y)]
            if label.is_interior:
                continue
            key = (label.kind, off)
            if key in buckets:
                union(buckets[key], (i, x, y))
            else:
                buckets[key] = (i, x, y)
    classes = {find(v) for v in parent}
    edges = set()
    for i, g in enumerate(grids):
        for (x, y) in g.cells():
            u = find((i, x, y))
            if x + 1 < g.width:
                edges.add((u, find((i, x + 1, y)), "e1"))
            if y + 1 < g.height:
                edges.add((u, find((i, x, y + 1)), "e2"))
    return len(classes), len(edges)


@pytest.mark.parametrize("params,expect_v", [
    ((1, 2, 3), 52),
    ((2, 5, 7), 616),
])
def test_gamma_counts_match_union_find_oracle(params, expect_v):
    tp = TileFamilyParams(*params)
    grids = [make_tile_grid(i, tp) for i in TILE_INDICES]
    v, e_forward = _union_find_oracle(grids)
    g = make_gamma(tp)
    assert g.vertex_count() == v == expect_v
    # one forward tagged edge per (class pair, generator) in the oracle
    forward = sum(
        1 for tags in g.edge_tags.values() for (gen, s) in tags if s == 1
    )
    assert forward == e_forward


def test_gamma_123_frozen_edge_count():
    g = make_gamma(P123)
    assert g.undirected_edge_count() == 156
    assert len(g.simple_undirected_edges()) == 148


def test_gamma_unique_generators_and_reverse_closure():
    for params in ((1, 2, 3), (1, 3, 4)):
        g = make_gamma(TileFamilyParams(*params))
        assert g.unique_generator_edges()
        assert g.has_reverse_closure()


def test_gamma_block_class_audit():
    for (n, p, q) in ((1, 2, 3), (2, 5, 7)):
        g = make_gamma(TileFamilyParams(n, p, q))
        assert len(g.classes_with_kind("x")) == n * n
        assert len(g.classes_with_kind("a")) == n * (p - n)
        assert len(g.classes_with_kind("b")) == n * (q - n)
        assert len(g.classes_with_kind("c")) == (p - n) * n
        assert len(g.classes_with_kind("d")) == (q - n) * n


def test_gamma_contains_torus_tile():
    networkx = pytest.importorskip("networkx")
    g = make_gamma(P123)
    tile1 = sorted({g.class_of[(0, x, y)] for x in range(3) for y in range(3)})
    assert len(tile1) == 4  # p*p classes
    sub = networkx.Graph(g.induced_simple_subgraph(tile1))
    torus = networkx.Graph()
    for (u, v) in make_torus(2, 2).simple_undirected_edges():
        torus.add_edge(u, v)
    assert networkx.is_isomorphic(sub, torus)


@pytest.mark.parametrize("params,expect", [
    ((3, 7, 9), 13),
    ((1, 2, 3), 4),
    ((2, 5, 7), 10),
])
def test_gamma1_vertex_counts(params, expect):
    assert make_gamma1(TileFamilyParams(*params)).vertex_count() == expect


def test_quotient_identity_on_single_grid():
    g = make_grid(4, 3)
    q = quotient([g])
    assert q.vertex_count() == 12
    assert q.undirected_edge_count() == g.edge_count()


def test_quotient_identifies_equal_cross_grids():
    n = 2
    lbl = BlockLabel("x")
    label_of = {(x, y): (lbl, (x, y)) for x in range(n) for y in range(n)}
    from tilekit.grids import LabeledGridGraph

    g1 = LabeledGridGraph(n, n, label_of, index=0, block_dims={"x": (n, n)})
    g2 = LabeledGridGraph(n, n, label_of, index=1, block_dims={"x": (n, n)})
    q = quotient([g1, g2])
    assert q.vertex_count() == n * n


def test_quotient_rejects_mismatched_block_dims():
    from tilekit.grids import LabeledGridGraph

    lbl = BlockLabel("a")
    g1 = LabeledGridGraph(1, 2, {(0, 0): (lbl, (0, 0)), (0, 1): (lbl, (0, 1))},
                          index=0, block_dims={"a": (1, 2)})
    g2 = LabeledGridGraph(1, 3, {(0, y): (lbl, (0, y)) for y in range(3)},
                          index=1, block_dims={"a": (1, 3)})
    with pytest.raises(ValueError):
        quotient([g1, g2])


def test_quotient_idempotent():
    g = make_gamma(P123)
    again = quotient(g.grids)
    assert again.vertices == g.vertices
    assert again.edge_tags == g.edge_tags


def test_serialization_deterministic():
    a = make_gamma(P123).to_json()
    b = make_gamma(P123).to_json()
    assert a == b
    assert '"vertices"' in a and '"edges"' in a and '"params"' in a


def test_params_validation():
    with pytest.raises(ValueError):
        TileFamilyParams(2, 2, 3)
    with pytest.raises(ValueError):
        TileFamilyParams(0, 2, 3)
    assert TileFamilyParams(1, 2, 3).coprime()
    assert not TileFamilyParams(1, 2, 4).coprime()
