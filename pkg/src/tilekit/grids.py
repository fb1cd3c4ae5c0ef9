"""Labeled rectangular grid graphs and their label/offset quotients.

Coordinates are (column, row) with the origin at the lower left and y
increasing upward.  A grid graph of width w and height h has vertices
(x, y) for 0 <= x < w, 0 <= y < h and the 4-neighbor edges induced by the
standard generators e1 = (1, 0) and e2 = (0, 1).

The quotient construction identifies vertices that carry the same
non-interior block label and the same offset inside that block.  Interior
blocks are one rectangle per grid graph and are never identified across
graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

X_KIND = "x"
A_KIND = "a"
B_KIND = "b"
C_KIND = "c"
D_KIND = "d"
INTERIOR_KIND = "interior"

# Block sequences along each side of the twelve tile grid graphs.  Strings
# list the non-corner blocks in bottom-to-top (sides) or left-to-right
# (rows) order; consecutive blocks are separated by an n x n cross block
# and every side starts and ends with one.  Sequences marked "q*"/"p*"
# are expanded per parameter set.
_TILE_RUNS = {
    1: ("c", "c", "a", "a"),
    2: ("c", "c", "b", "b"),
    3: ("d", "d", "a", "a"),
    4: ("d", "d", "b", "b"),
    5: ("cd", "dc", "a", "a"),
    6: ("c", "c", "ba", "ab"),
    7: ("dc", "cd", "a", "a"),
    8: ("c", "c", "ab", "ba"),
    9: ("d*", "c*", "a", "a"),
    10: ("c*", "d*", "a", "a"),
    11: ("c", "c", "a*", "b*"),
    12: ("c", "c", "b*", "a*"),
}

TILE_INDICES = tuple(range(1, 13))


@dataclass(frozen=True, order=True)
class BlockLabel:
    """Label of a block: one of the five shared kinds or a per-grid interior."""

    kind: str
    tile: int = 0

    def __post_init__(self):
        if self.kind not in (X_KIND, A_KIND, B_KIND, C_KIND, D_KIND, INTERIOR_KIND):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if self.kind != INTERIOR_KIND and self.tile != 0:
            raise ValueError("only interior labels carry a tile index")

    @property
    def is_interior(self) -> bool:
        return self.kind == INTERIOR_KIND

    def text(self) -> str:
        return f"I{self.tile}" if self.is_interior else self.kind.upper()


@dataclass(frozen=True)
class TileFamilyParams:
    """Parameters (n, p, q) of a tile family; requires n < p and n < q.

    Coprimality of p and q is not enforced here; callers that need it
    query :meth:`coprime`.
    """

    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1 or self.q < 1:
            raise ValueError("n, p, q must be positive")
        if not (self.n < self.p and self.n < self.q):
            raise ValueError("need n < p and n < q")

    def coprime(self) -> bool:
        return gcd(self.p, self.q) == 1

    def block_dims(self, kind: str) -> tuple[int, int]:
        n, p, q = self.n, self.p, self.q
        return {
            X_KIND: (n, n),
            A_KIND: (n, p - n),
            B_KIND: (n, q - n),
            C_KIND: (p - n, n),
            D_KIND: (q - n, n),
        }[kind]

    def unit_width(self, unit: str) -> int:
        """Pitch of one cross block plus one c/d block along a row."""
        return self.p if unit == "c" else self.q

    def unit_height(self, unit: str) -> int:
        """Pitch of one cross block plus one a/b block along a column."""
        return self.p if unit == "a" else self.q


class LabeledGridGraph:
    """A w x h grid with each vertex assigned a block label and offset."""

    def __init__(self, width, height, label_of, index=0, block_dims=None):
        if width < 1 or height < 1:
            raise ValueError("grid dimensions must be positive")
        self.width = width
        self.height = height
        self.index = index
        self.label_of = label_of
        self.block_dims = dict(block_dims or {})
        self._check()

    def _check(self):
        for x in range(self.width):
            for y in range(self.height):
                if (x, y) not in self.label_of:
                    raise ValueError(f"cell {(x, y)} has no label")
                label, (dx, dy) = self.label_of[(x, y)]
                if label.kind in self.block_dims:
                    bw, bh = self.block_dims[label.kind]
                    if not (0 <= dx < bw and 0 <= dy < bh):
                        raise ValueError(
                            f"offset {(dx, dy)} outside {label.kind} block {bw}x{bh}"
                        )

    def cells(self):
        for y in range(self.height):
            for x in range(self.width):
                yield (x, y)

    def vertex_count(self) -> int:
        return self.width * self.height

    def edge_count(self) -> int:
        return self.width * (self.height - 1) + self.height * (self.width - 1)

    def with_index(self, index) -> "LabeledGridGraph":
        return LabeledGridGraph(self.width, self.height, self.label_of, index, self.block_dims)


def make_grid(w: int, h: int, index: int = 0) -> LabeledGridGraph:
    """Unlabeled w x h grid: a single interior block covering every cell."""
    if w < 1 or h < 1:
        raise ValueError("grid dimensions must be positive")
    interior = BlockLabel(INTERIOR_KIND, tile=index)
    label_of = {(x, y): (interior, (x, y)) for x in range(w) for y in range(h)}
    return LabeledGridGraph(w, h, label_of, index=index)


def _expand_runs(runs: str, params: TileFamilyParams) -> str:
    if runs == "d*":
        return "d" * params.p
    if runs == "c*":
        return "c" * params.q
    if runs == "a*":
        return "a" * params.q
    if runs == "b*":
        return "b" * params.p
    return runs


def tile_runs(i: int, params: TileFamilyParams):
    """Block sequences (bottom, top, left, right) of tile grid graph i."""
    if i not in _TILE_RUNS:
        raise ValueError(f"tile index must be 1..12, got {i}")
    bottom, top, left, right = (_expand_runs(r, params) for r in _TILE_RUNS[i])
    return bottom, top, left, right


def tile_dims(i: int, params: TileFamilyParams) -> tuple[int, int]:
    bottom, top, left, right = tile_runs(i, params)
    n = params.n
    w = n + sum(params.unit_width(u) for u in bottom)
    w2 = n + sum(params.unit_width(u) for u in top)
    h = n + sum(params.unit_height(u) for u in left)
    h2 = n + sum(params.unit_height(u) for u in right)
    assert w == w2 and h == h2
    return w, h


def _row_blocks(units: str, params: TileFamilyParams):
    """Blocks along a horizontal side: [(x0, kind), ...] incl. cross blocks."""
    n = params.n
    blocks = [(0, X_KIND)]
    x = n
    for u in units:
        bw = params.block_dims(u)[0]
        blocks.append((x, u))
        blocks.append((x + bw, X_KIND))
        x += bw + n
    return blocks


def _col_blocks(units: str, params: TileFamilyParams):
    n = params.n
    blocks = [(0, X_KIND)]
    y = n
    for u in units:
        bh = params.block_dims(u)[1]
        blocks.append((y, u))
        blocks.append((y + bh, X_KIND))
        y += bh + n
    return blocks


def make_tile_grid(i: int, params: TileFamilyParams) -> LabeledGridGraph:
    """Tile grid graph i of the family: a frame of labeled blocks around
    one unlabeled interior rectangle, dimensions per the family table."""
    bottom, top, left, right = tile_runs(i, params)
    w, h = tile_dims(i, params)
    n = params.n
    label_of = {}

    def put(x0, y0, kind):
        bw, bh = params.block_dims(kind)
        for dx in range(bw):
            for dy in range(bh):
                cell = (x0 + dx, y0 + dy)
                entry = (BlockLabel(kind), (dx, dy))
                prev = label_of.get(cell)
                if prev is not None and prev != entry:
                    raise ValueError(f"conflicting labels at {cell}")
                label_of[cell] = entry

    for x0, kind in _row_blocks(bottom, params):
        put(x0, 0, kind)
    for x0, kind in _row_blocks(top, params):
        put(x0, h - n, kind)
    for y0, kind in _col_blocks(left, params):
        put(0, y0, kind)
    for y0, kind in _col_blocks(right, params):
        put(w - n, y0, kind)

    interior = BlockLabel(INTERIOR_KIND, tile=i)
    for x in range(n, w - n):
        for y in range(n, h - n):
            if (x, y) not in label_of:
                label_of[(x, y)] = (interior, (x - n, y - n))

    dims = {k: params.block_dims(k) for k in (X_KIND, A_KIND, B_KIND, C_KIND, D_KIND)}
    return LabeledGridGraph(w, h, label_of, index=i, block_dims=dims)


def gamma1_tiles(params: TileFamilyParams):
    """The two one-dimensional tiles: chains x^n a^(p-n) x^n and x^n b^(q-n) x^n."""
    n, p, q = params.n, params.p, params.q
    tiles = []
    for idx, (mid_kind, mid_len, total) in enumerate(
        [(A_KIND, p - n, p + n), (B_KIND, q - n, q + n)], start=1
    ):
        label_of = {}
        for x in range(total):
            if x < n:
                label_of[(x, 0)] = (BlockLabel(X_KIND), (x, 0))
            elif x < n + mid_len:
                label_of[(x, 0)] = (BlockLabel(mid_kind), (x - n, 0))
            else:
                label_of[(x, 0)] = (BlockLabel(X_KIND), (x - n - mid_len, 0))
        dims = {X_KIND: (n, 1), mid_kind: (mid_len, 1)}
        tiles.append(LabeledGridGraph(total, 1, label_of, index=idx, block_dims=dims))
    return tiles


class QuotientGraph:
    """Quotient of labeled grid graphs, or a torus Cayley graph.

    Vertices are canonical class keys (the lexicographically least member
    (grid_index, x, y), or the coordinate tuple for tori).  Directed edges
    carry signed generator tags (g, s) with g the generator index and
    s = +1 or -1; the reverse of every tagged edge is present with the
    opposite sign.
    """

    def __init__(self, dim, vertices, label_of, edge_tags, meta=None, grids=None, class_of=None):
        self.dim = dim
        self.vertices = sorted(vertices)
        self.label_of = label_of
        self.edge_tags = edge_tags  # (u, v) -> frozenset of (gen, sign)
        self.meta = dict(meta or {})
        self.grids = grids
        self.class_of = class_of
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._succ = {v: {} for v in self.vertices}
        self._deg = {v: 0 for v in self.vertices}
        for (u, v), tags in edge_tags.items():
            for tag in tags:
                self._succ[u].setdefault(tag, []).append(v)
                self._deg[u] += 1
        for table in self._succ.values():
            for tag in table:
                table[tag] = tuple(sorted(table[tag]))

    # -- basic views ----------------------------------------------------

    def vertex_count(self) -> int:
        return len(self.vertices)

    def successors(self, u, gen, sign=1):
        return self._succ[u].get((gen, sign), ())

    def directed_edge_count(self) -> int:
        return sum(len(tags) for tags in self.edge_tags.values())

    def undirected_edge_count(self) -> int:
        """Number of undirected edges, parallel edges counted separately."""
        return self.directed_edge_count() // 2

    def degree(self, u) -> int:
        return self._deg[u]

    def simple_undirected_edges(self):
        """Deduplicated undirected edges between distinct vertices."""
        seen = set()
        for (u, v) in self.edge_tags:
            if u == v:
                continue
            e = (u, v) if u <= v else (v, u)
            seen.add(e)
        return sorted(seen)

    def loops(self):
        return sorted({u for (u, v) in self.edge_tags if u == v})

    def neighbors(self, u):
        out = {v for (uu, v) in self.edge_tags if uu == u and v != u}
        return sorted(out)

    def unique_generator_edges(self) -> bool:
        """True iff no ordered vertex pair carries two distinct generators."""
        for tags in self.edge_tags.values():
            if len({g for (g, _) in tags}) > 1:
                return False
        return True

    def has_reverse_closure(self) -> bool:
        for (u, v), tags in self.edge_tags.items():
            for (g, s) in tags:
                if (g, -s) not in self.edge_tags.get((v, u), ()):
                    return False
        return True

    def classes_with_kind(self, kind: str):
        return sorted(v for v in self.vertices if self.label_of[v][0].kind == kind)

    def induced_simple_subgraph(self, keep):
        keep = set(keep)
        return sorted(
            (u, v) for (u, v) in self.simple_undirected_edges() if u in keep and v in keep
        )

    # -- serialization ---------------------------------------------------

    @staticmethod
    def _gen_text(gen, sign):
        return f"e{gen + 1}" + ("" if sign > 0 else "-")

    def to_jsonable(self):
        verts = []
        for v in self.vertices:
            label, offset = self.label_of[v]
            verts.append(
                {
                    "id": list(v),
                    "label": label.text(),
                    "offset": list(offset),
                }
            )
        edges = []
        for (u, v) in sorted(self.edge_tags):
            for (g, s) in sorted(self.edge_tags[(u, v)]):
                edges.append({"from": list(u), "to": list(v), "gen": self._gen_text(g, s)})
        return {"params": self.meta, "vertices": verts, "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))


def quotient(grids, meta=None) -> QuotientGraph:
    """Quotient of a list of labeled grids by label/offset identification.

    Grids sharing a block kind must declare identical block dimensions;
    a mismatch raises ValueError.  Interior blocks are keyed by position
    in the list and never identified.
    """
    dims_seen = {}
    for g in grids:
        for kind, d in g.block_dims.items():
            if kind in dims_seen and dims_seen[kind] != d:
                raise ValueError(f"block {kind!r} has mismatched dimensions across grids")
            dims_seen[kind] = d

    # Canonical representative per identification bucket.
    rep_of_bucket = {}
    class_of = {}
    for i, g in enumerate(grids):
        for (x, y) in g.cells():
            label, offset = g.label_of[(x, y)]
            if label.is_interior:
                bucket = ("interior", i, offset)
            else:
                bucket = (label.kind, offset)
            member = (i, x, y)
            if bucket not in rep_of_bucket or member < rep_of_bucket[bucket]:
                rep_of_bucket[bucket] = member

    label_of = {}
    for i, g in enumerate(grids):
        for (x, y) in g.cells():
            label, offset = g.label_of[(x, y)]
            if label.is_interior:
                bucket = ("interior", i, offset)
            else:
                bucket = (label.kind, offset)
            rep = rep_of_bucket[bucket]
            class_of[(i, x, y)] = rep
            label_of[rep] = (label, offset)

    dim = 1 if all(g.height == 1 for g in grids) else 2
    edge_tags = {}

    def add_edge(u, v, gen, sign):
        key = (u, v)
        cur = edge_tags.get(key, frozenset())
        edge_tags[key] = cur | {(gen, sign)}

    for i, g in enumerate(grids):
        for (x, y) in g.cells():
            u = class_of[(i, x, y)]
            if x + 1 < g.width:
                v = class_of[(i, x + 1, y)]
                add_edge(u, v, 0, 1)
                add_edge(v, u, 0, -1)
            if y + 1 < g.height:
                v = class_of[(i, x, y + 1)]
                add_edge(u, v, 1, 1)
                add_edge(v, u, 1, -1)

    return QuotientGraph(
        dim,
        set(label_of),
        label_of,
        edge_tags,
        meta=meta,
        grids=list(grids),
        class_of=class_of,
    )


def make_gamma(params: TileFamilyParams) -> QuotientGraph:
    """The twelve-tile quotient graph for the given parameters."""
    grids = [make_tile_grid(i, params) for i in TILE_INDICES]
    g = quotient(grids, meta={"kind": "gamma", "n": params.n, "p": params.p, "q": params.q})
    if not g.unique_generator_edges():
        raise AssertionError("quotient violates the unique-generator edge property")
    return g


def make_gamma1(params: TileFamilyParams) -> QuotientGraph:
    """The two-tile one-dimensional quotient graph."""
    tiles = gamma1_tiles(params)
    return quotient(
        tiles, meta={"kind": "gamma1", "n": params.n, "p": params.p, "q": params.q}
    )


def make_torus(*dims) -> QuotientGraph:
    """Cayley graph of Z_d1 x ... x Z_dk with the standard generators.

    Accepts either ``make_torus(a, b)`` or ``make_torus([d1, ..., dk])``.
    Parallel edges arising when some d <= 2 are retained with distinct
    generator tags.
    """
    if len(dims) == 1 and isinstance(dims[0], (list, tuple)):
        dims = tuple(dims[0])
    if not dims or any(d < 1 for d in dims):
        raise ValueError("torus dimensions must be positive")
    dims = tuple(int(d) for d in dims)
    k = len(dims)

    verts = [()]
    for d in dims:
        verts = [v + (i,) for v in verts for i in range(d)]

    interior = BlockLabel(INTERIOR_KIND, tile=0)
    label_of = {v: (interior, v) for v in verts}
    edge_tags = {}

    def add_edge(u, v, gen, sign):
        key = (u, v)
        cur = edge_tags.get(key, frozenset())
        edge_tags[key] = cur | {(gen, sign)}

    for v in verts:
        for g in range(k):
            w = list(v)
            w[g] = (w[g] + 1) % dims[g]
            w = tuple(w)
            add_edge(v, w, g, 1)
            add_edge(w, v, g, -1)

    return QuotientGraph(k, verts, label_of, edge_tags, meta={"kind": "torus", "dims": list(dims)})
