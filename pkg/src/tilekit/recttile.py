"""Rectangle tilings of boxes and tori.

Exact-cover search with canonical symmetry breaking, the explicit 13x13
periodic tiling by 2x2 and 3x3 squares, the stretch-by-six construction,
the divisibility obstruction, and the small/large-square torus decision
driver built on top of them.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import gcd

from tilekit.csp import BudgetExceeded, Certificate


@dataclass(frozen=True)
class Region:
    kind: str  # "box" or "torus"
    width: int
    height: int

    def __post_init__(self):
        if self.kind not in ("box", "torus"):
            raise ValueError("region kind must be 'box' or 'torus'")
        if self.width < 1 or self.height < 1:
            raise ValueError("region dimensions must be positive")

    def area(self) -> int:
        return self.width * self.height

    def to_jsonable(self):
        return {"kind": self.kind, "w": self.width, "h": self.height}


def box(w: int, h: int) -> Region:
    return Region("box", w, h)


def torus(a: int, b: int) -> Region:
    return Region("torus", a, b)


@dataclass(frozen=True)
class RectTileSet:
    tiles: tuple  # tuples (w, h), duplicates collapsed

    def __post_init__(self):
        tiles = tuple(sorted({(int(w), int(h)) for (w, h) in self.tiles}))
        if not tiles or any(w < 1 or h < 1 for (w, h) in tiles):
            raise ValueError("tile set must be nonempty with positive tiles")
        object.__setattr__(self, "tiles", tiles)

    def to_jsonable(self):
        return [list(t) for t in self.tiles]


@dataclass
class RegionTiling:
    region: Region
    tiles: RectTileSet
    placements: list  # (tile_index, (x, y))

    def cells_of(self, placement):
        t, (x0, y0) = placement
        w, h = self.tiles.tiles[t]
        a, b = self.region.width, self.region.height
        out = []
        for dx in range(w):
            for dy in range(h):
                x, y = x0 + dx, y0 + dy
                if self.region.kind == "torus":
                    x, y = x % a, y % b
                out.append((x, y))
        return out

    def validate(self) -> bool:
        """Exact cover: every region cell covered exactly once."""
        a, b = self.region.width, self.region.height
        count = {}
        for pl in self.placements:
            t, (x0, y0) = pl
            w, h = self.tiles.tiles[t]
            if self.region.kind == "box":
                if not (0 <= x0 and x0 + w <= a and 0 <= y0 and y0 + h <= b):
                    return False
            cells = self.cells_of(pl)
            if len(set(cells)) != len(cells):
                return False
            for c in cells:
                count[c] = count.get(c, 0) + 1
        return all(count.get((x, y), 0) == 1 for x in range(a) for y in range(b))

    def to_jsonable(self):
        return {
            "region": self.region.to_jsonable(),
            "tiles": self.tiles.to_jsonable(),
            "placements": [[t, list(xy)] for (t, xy) in self.placements],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_jsonable(data) -> "RegionTiling":
        reg = Region(data["region"]["kind"], data["region"]["w"], data["region"]["h"])
        ts = RectTileSet(tuple(tuple(t) for t in data["tiles"]))
        pls = [(int(t), (int(xy[0]), int(xy[1]))) for (t, xy) in data["placements"]]
        return RegionTiling(reg, ts, pls)


def _instance_digest(region: Region, tiles: RectTileSet) -> str:
    blob = json.dumps(
        {"region": region.to_jsonable(), "tiles": tiles.to_jsonable()},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def _mask_cells(mask):
    out = []
    while mask:
        low = mask & (-mask)
        mask ^= low
        out.append(low.bit_length() - 1)
    return out


def _area_semigroup(areas, limit):
    """Bitmask of cell counts below the limit expressible as sums of tile
    areas; anything at or above the limit is treated as expressible."""
    reachable = [False] * limit
    reachable[0] = True
    for s in range(1, limit):
        for x in areas:
            if s >= x and reachable[s - x]:
                reachable[s] = True
                break
    return reachable


def solve_rect_tiling(region: Region, tiles: RectTileSet, budget=None) -> Certificate:
    """Exhaustive anchor-at-least-uncovered-cell exact-cover search.

    On tori the tile covering cell (0, 0) is pinned to anchor (0, 0),
    which breaks translation symmetry without losing solutions.
    Placements that wrap onto themselves are discarded.  Two sound
    reductions keep the tree small: forced placements are propagated
    (a frontier cell with a single fitting placement commits it, one
    with none kills the branch), and pockets whose cell count is no sum
    of tile areas are pruned.
    """
    a, b = region.width, region.height
    N = a * b
    full = (1 << N) - 1

    def cell_index(x, y):
        return x * b + y

    def placement_mask(t, x0, y0):
        w, h = tiles.tiles[t]
        if region.kind == "box":
            if x0 + w > a or y0 + h > b:
                return None
            cells = [cell_index(x0 + dx, y0 + dy) for dx in range(w) for dy in range(h)]
        else:
            cells = [
                cell_index((x0 + dx) % a, (y0 + dy) % b) for dx in range(w) for dy in range(h)
            ]
            if len(set(cells)) != len(cells):
                return None
        m = 0
        for c in cells:
            m |= 1 << c
        return m

    by_cell = [[] for _ in range(N)]
    for t in range(len(tiles.tiles)):
        w, h = tiles.tiles[t]
        for x0 in range(a):
            for y0 in range(b):
                m = placement_mask(t, x0, y0)
                if m is None:
                    continue
                if region.kind == "torus" and m & 1:
                    # covering cell (0,0): pin anchor to the origin
                    if (x0, y0) != (0, 0):
                        continue
                w2, h2 = tiles.tiles[t]
                for dx in range(w2):
                    for dy in range(h2):
                        x = (x0 + dx) % a if region.kind == "torus" else x0 + dx
                        y = (y0 + dy) % b if region.kind == "torus" else y0 + dy
                        by_cell[cell_index(x, y)].append((m, t, (x0, y0)))
    # larger tiles first: denser commitments fail earlier
    area = [w * h for (w, h) in tiles.tiles]
    for lst in by_cell:
        lst.sort(key=lambda e: (-area[e[1]], e[1], e[2]))

    digest = _instance_digest(region, tiles)
    params = {}
    nodes = 0
    max_depth = 0
    chosen = []

    areas = sorted({w * h for (w, h) in tiles.tiles})
    frobenius_limit = areas[0] * areas[-1] + 1
    expressible = _area_semigroup(areas, frobenius_limit)
    neighbors = []
    for x in range(a):
        for y in range(b):
            if region.kind == "torus":
                nb = [cell_index((x + 1) % a, y), cell_index((x - 1) % a, y),
                      cell_index(x, (y + 1) % b), cell_index(x, (y - 1) % b)]
            else:
                nb = []
                if x + 1 < a:
                    nb.append(cell_index(x + 1, y))
                if x > 0:
                    nb.append(cell_index(x - 1, y))
                if y + 1 < b:
                    nb.append(cell_index(x, y + 1))
                if y > 0:
                    nb.append(cell_index(x, y - 1))
            neighbors.append(nb)
    # reorder: neighbors indexed by cell_index
    nb_table = [None] * N
    i = 0
    for x in range(a):
        for y in range(b):
            nb_table[cell_index(x, y)] = neighbors[i]
            i += 1

    def pocket_dead(covered, seed_cells):
        """True when an uncovered pocket next to the seeds has a cell
        count no sum of tile areas can match."""
        free = ~covered & full
        seen = 0
        for seed in seed_cells:
            low = 1 << seed
            if not (free & low) or (seen & low):
                continue
            comp = low
            frontier = [seed]
            size = 1
            while frontier and size < frobenius_limit:
                c = frontier.pop()
                for nbc in nb_table[c]:
                    bit = 1 << nbc
                    if (free & bit) and not (comp & bit):
                        comp |= bit
                        size += 1
                        frontier.append(nbc)
            seen |= comp
            if size < frobenius_limit and not expressible[size]:
                return True
        return False

    def propagate(covered, seeds):
        """Commit forced placements around the seeds.

        Returns (covered, committed placements) or None on a dead end.
        """
        placed = []
        queue = sorted(seeds, reverse=True)
        while queue:
            c = queue.pop()
            if covered >> c & 1:
                continue
            fits = [e for e in by_cell[c] if not (e[0] & covered)]
            if not fits:
                return None
            if len(fits) == 1:
                m, t, anchor = fits[0]
                covered |= m
                placed.append((t, anchor))
                for cell in _mask_cells(m):
                    for nbc in nb_table[cell]:
                        if not (covered >> nbc & 1):
                            queue.append(nbc)
        return covered, placed

    def rec(covered, depth):
        nonlocal nodes, max_depth
        if covered == full:
            return True
        free = ~covered & full
        c = (free & -free).bit_length() - 1
        for (m, t, anchor) in by_cell[c]:
            if m & covered:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exceeded")
            max_depth = max(max_depth, depth + 1)
            seeds = [nbc for cell in _mask_cells(m) for nbc in nb_table[cell]]
            result = propagate(covered | m, seeds)
            if result is None:
                continue
            cov2, extra = result
            if pocket_dead(cov2, seeds):
                continue
            chosen.append((t, anchor))
            chosen.extend(extra)
            if rec(cov2, depth + 1):
                return True
            for _ in range(len(extra) + 1):
                chosen.pop()
        return False

    if rec(0, 0):
        witness = [[t, list(xy)] for (t, xy) in chosen]
        return Certificate("tiling", digest, params, "SAT", witness, nodes, max_depth)
    return Certificate(
        "tiling", digest, params, "UNSAT", {"reason": "exhaustive search"}, nodes, max_depth
    )


def tiling_from_certificate(region, tiles, cert: Certificate) -> RegionTiling:
    pls = [(int(t), (int(xy[0]), int(xy[1]))) for (t, xy) in cert.witness]
    return RegionTiling(region, tiles, pls)


def area_obstruction(region: Region, tiles: RectTileSet):
    """Smallest d > 1 dividing every tile area but not the region area."""
    g = 0
    for (w, h) in tiles.tiles:
        g = gcd(g, w * h)
    area = region.area()
    for d in range(2, g + 1):
        if g % d == 0 and area % d != 0:
            return {
                "d": d,
                "tile_areas": [w * h for (w, h) in tiles.tiles],
                "region_area": area,
            }
    return None


# -- the explicit 13x13 tiling and stretching --------------------------------


SMALL_LARGE = RectTileSet(((2, 2), (3, 3)))
_SMALL = SMALL_LARGE.tiles.index((2, 2))
_LARGE = SMALL_LARGE.tiles.index((3, 3))


def lattice_tiling_2_3() -> RegionTiling:
    """Periodic tiling of the 13x13 torus by 2x2 and 3x3 squares.

    Large squares are centered on the index-13 lattice spanned by (3, 2)
    and (2, -3); small squares have their upper-left cells on the (2, 0)
    coset of that lattice.
    """
    lattice = sorted({((3 * k) % 13, (2 * k) % 13) for k in range(13)})
    placements = []
    for (lx, ly) in lattice:
        placements.append((_LARGE, ((lx - 1) % 13, (ly - 1) % 13)))
        placements.append((_SMALL, ((lx + 2) % 13, (ly - 1) % 13)))
    return RegionTiling(torus(13, 13), SMALL_LARGE, sorted(placements))


def stretch_tiling(t: RegionTiling, axis: str, c: int) -> RegionTiling:
    """Stretch a torus tiling by 6c along one axis.

    Tiles meeting the cut column keep a copy at their old position, gain
    a copy shifted by 6c, and the gap between the copies is filled with a
    run of same-size squares; everything else is unchanged.
    """
    if c < 1:
        raise ValueError("stretch factor must be positive")
    if t.region.kind != "torus":
        raise ValueError("stretching is defined for torus tilings")
    if not t.validate():
        raise ValueError("input tiling is invalid")
    if axis == "y":
        flipped = _transpose_tiling(t)
        return _transpose_tiling(stretch_tiling(flipped, "x", c))
    if axis != "x":
        raise ValueError("axis must be 'x' or 'y'")

    a, b = t.region.width, t.region.height
    step = 6 * c
    out = []
    for (ti, (x0, y0)) in t.placements:
        w, h = t.tiles.tiles[ti]
        if x0 <= a - w - 1:
            out.append((ti, (x0, y0)))
            continue
        # the tile covers column a-1: keep, copy right, fill between
        out.append((ti, (x0, y0)))
        out.append((ti, (x0 + step, y0)))
        for fx in range(x0 + w, x0 + step, w):
            out.append((ti, (fx, y0)))
    return RegionTiling(torus(a + step, b), t.tiles, sorted(out))


def _transpose_tiling(t: RegionTiling) -> RegionTiling:
    trans = {}
    for i, (w, h) in enumerate(t.tiles.tiles):
        if (h, w) not in t.tiles.tiles:
            raise ValueError("tile set is not closed under transposition")
        trans[i] = t.tiles.tiles.index((h, w))
    pls = sorted((trans[ti], (y, x)) for (ti, (x, y)) in t.placements)
    return RegionTiling(torus(t.region.height, t.region.width), t.tiles, pls)


def representable_13_6(x: int) -> bool:
    """x = 13m + 6k with m, k >= 0 and m + k > 0."""
    if x < 1:
        return False
    for m in range(x // 13 + 1):
        if (x - 13 * m) % 6 == 0:
            return True
    return False


@dataclass
class TorusDecision:
    answer: object  # True, False, or None for unknown
    method: str
    tiling: RegionTiling = None


def decide_ss_torus(a: int, b: int, budget: int = 2_000_000) -> TorusDecision:
    """Can the a x b torus be tiled by 2x2 and 3x3 squares?

    Dimensions representable as 13m + 6k are settled by the lattice
    tiling plus stretching; otherwise an exact-cover search runs within
    the node budget, and exhaustion of the budget reports unknown.
    """
    if a < 1 or b < 1:
        raise ValueError("torus dimensions must be positive")
    if representable_13_6(a) and representable_13_6(b):
        return TorusDecision(True, "lattice+stretch", _build_lattice_stretch(a, b))
    try:
        cert = solve_rect_tiling(torus(a, b), SMALL_LARGE, budget=budget)
    except BudgetExceeded:
        return TorusDecision(None, "unknown")
    if cert.sat:
        return TorusDecision(True, "search", tiling_from_certificate(torus(a, b), SMALL_LARGE, cert))
    return TorusDecision(False, "search")


def quotient_tiling_search(G, tiles: RectTileSet, budget=None) -> Certificate:
    """Exact cover of a quotient graph's classes by embedded rectangles.

    A placement is an injective grid homomorphism of a w x h rectangle
    into the graph, following generator successors; the cover must hit
    every class exactly once.  This is the open-experiment harness for
    tiling individual quotient tiles; exhausting the budget means
    unknown, not no.
    """
    classes = list(G.vertices)
    index = {v: i for i, v in enumerate(classes)}
    N = len(classes)
    full = (1 << N) - 1

    def hom_placements(w, h):
        out = set()
        cells = [(x, y) for y in range(h) for x in range(w)]

        def extend(assign, idx):
            if idx == len(cells):
                out.add(frozenset(assign.values()))
                return
            x, y = cells[idx]
            cands = None
            if x > 0:
                cands = set(G.successors(assign[(x - 1, y)], 0, 1))
            if y > 0:
                below = set(G.successors(assign[(x, y - 1)], 1, 1))
                cands = below if cands is None else cands & below
            for v in sorted(cands):
                if v in assign.values():
                    continue
                assign[(x, y)] = v
                extend(assign, idx + 1)
                del assign[(x, y)]

        for anchor in classes:
            extend({(0, 0): anchor}, 1)
        return sorted(out, key=sorted)

    by_class = [[] for _ in range(N)]
    masks = []
    for t, (w, h) in enumerate(tiles.tiles):
        for cover in hom_placements(w, h):
            m = 0
            for v in cover:
                m |= 1 << index[v]
            masks.append((m, t, tuple(sorted(cover))))
    masks.sort(key=lambda e: (e[1], e[2]))
    for (m, t, cover) in masks:
        for v in cover:
            by_class[index[v]].append((m, t, cover))

    digest = hashlib.sha256(
        (G.to_json() + "|" + json.dumps(tiles.to_jsonable())).encode()
    ).hexdigest()
    nodes = 0
    chosen = []

    def rec(covered):
        nonlocal nodes
        if covered == full:
            return True
        free = ~covered & full
        c = (free & -free).bit_length() - 1
        for (m, t, cover) in by_class[c]:
            if m & covered:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exceeded")
            chosen.append((t, cover))
            if rec(covered | m):
                return True
            chosen.pop()
        return False

    if rec(0):
        witness = [[t, [list(v) for v in cover]] for (t, cover) in chosen]
        return Certificate("quotient-tiling", digest, {}, "SAT", witness, nodes, len(chosen))
    return Certificate("quotient-tiling", digest, {}, "UNSAT",
                       {"reason": "exhaustive search"}, nodes, 0)


def _decompose_13_6(x: int):
    for m in range(x // 13 + 1):
        if (x - 13 * m) % 6 == 0:
            return m, (x - 13 * m) // 6
    raise ValueError(f"{x} is not representable as 13m + 6k")


def _box_6wide_column(x0: int, y0: int, height_parts):
    """Stack of 6-wide blocks of heights 13 or 6 starting at (x0, y0)."""
    out = []
    y = y0
    for hp in height_parts:
        if hp == 6:
            for dx in range(0, 6, 2):
                for dy in range(0, 6, 2):
                    out.append((_SMALL, (x0 + dx, y + dy)))
        else:  # 13 = 4 rows of 2x2 plus 9 rows of 3x3
            for dx in range(0, 6, 2):
                for dy in range(0, 4, 2):
                    out.append((_SMALL, (x0 + dx, y + dy)))
            for dx in range(0, 6, 3):
                for dy in range(4, 13, 3):
                    out.append((_LARGE, (x0 + dx, y + dy)))
        y += hp
    return out


def _build_lattice_stretch(a: int, b: int) -> RegionTiling:
    """Tile the a x b torus given both sides are of the form 13m + 6k.

    With both m parts positive, the 13-periodic lattice pattern tiles the
    13m x 13m' torus directly and stretching supplies the 6k parts.  When
    one side is a pure multiple of 6, stacked 6-wide blocks of heights 13
    and 6 partition the torus without wrapping.
    """
    ma, ka = _decompose_13_6(a)
    mb, kb = _decompose_13_6(b)
    if ma >= 1 and mb >= 1:
        base = lattice_tiling_2_3()
        pls = []
        for (t, (x, y)) in base.placements:
            for i in range(ma):
                for j in range(mb):
                    pls.append((t, (x + 13 * i, y + 13 * j)))
        out = RegionTiling(torus(13 * ma, 13 * mb), SMALL_LARGE, sorted(pls))
        if ka:
            out = stretch_tiling(out, "x", ka)
        if kb:
            out = stretch_tiling(out, "y", kb)
        return out
    if ma == 0 and mb == 0:
        pls = [(_SMALL, (x, y)) for x in range(0, a, 2) for y in range(0, b, 2)]
        return RegionTiling(torus(a, b), SMALL_LARGE, pls)
    if mb == 0:
        return _transpose_tiling(_build_lattice_stretch(b, a))
    # a is a pure multiple of 6; partition the height into 13s and 6s
    parts = [13] * mb + [6] * kb
    pls = []
    for x0 in range(0, a, 6):
        pls.extend(_box_6wide_column(x0, 0, parts))
    return RegionTiling(torus(a, b), SMALL_LARGE, sorted(pls))
