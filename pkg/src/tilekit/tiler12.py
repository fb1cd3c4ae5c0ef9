"""Placement collections of the twelve tile grid graphs.

Validates collections of placements against the finitary tiling
conditions (cover, block/offset agreement on overlaps, and the 2x2
containment condition), and fills boundary-labeled rectangles using the
uniform, diagonal-propagation and gathering algorithms.

Conventions: a placement anchors a tile grid graph by its lower-left
cell.  Boundary runs list the non-cross blocks of a side: 'c'/'d' left
to right for horizontal sides, 'a'/'b' bottom to top for vertical sides.
Rows of a strip are counted from the side carrying the given boundary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from tilekit.grids import (
    TILE_INDICES,
    TileFamilyParams,
    make_tile_grid,
    tile_dims,
)


class InfeasibleSpec(ValueError):
    """The boundary specification cannot be filled by these algorithms."""


@dataclass(frozen=True)
class Placement12:
    tile: int
    anchor: tuple

    def __post_init__(self):
        if self.tile not in TILE_INDICES:
            raise ValueError("tile index must be 1..12")
        object.__setattr__(self, "anchor", (int(self.anchor[0]), int(self.anchor[1])))


_GRID_CACHE = {}


def _tile_grid(i, params):
    key = (i, params)
    if key not in _GRID_CACHE:
        _GRID_CACHE[key] = make_tile_grid(i, params)
    return _GRID_CACHE[key]


def _kind_matrix(i, params):
    g = _tile_grid(i, params)
    return tuple(
        tuple(
            ("i" if g.label_of[(x, y)][0].is_interior else g.label_of[(x, y)][0].kind)
            for y in range(g.height)
        )
        for x in range(g.width)
    )


_SWAP = {"a": "c", "c": "a", "b": "d", "d": "b", "x": "x", "i": "i"}


def tile_permutation(transform: str, params: TileFamilyParams):
    """Permutation of tile indices under a symmetry of the plane.

    'transpose' reflects along the main diagonal (swapping the a/c and
    b/d block kinds), 'hflip' and 'vflip' are the axis mirrors.  The tile
    family is closed under all three at the level of block layouts.
    """
    mats = {i: _kind_matrix(i, params) for i in TILE_INDICES}

    def transformed(m):
        w, h = len(m), len(m[0])
        if transform == "transpose":
            return tuple(tuple(_SWAP[m[x][y]] for x in range(w)) for y in range(h))
        if transform == "hflip":
            return tuple(tuple(m[w - 1 - x][y] for y in range(h)) for x in range(w))
        if transform == "vflip":
            return tuple(tuple(m[x][h - 1 - y] for y in range(h)) for x in range(w))
        raise ValueError("unknown transform")

    inv = {m: i for i, m in mats.items()}
    perm = {}
    for i, m in mats.items():
        tm = transformed(m)
        if tm not in inv:
            raise AssertionError("tile family not closed under transform")
        perm[i] = inv[tm]
    return perm


def transform_placements(placements, transform, region, params):
    """Apply a plane symmetry of the region to a placement list."""
    W, H = region
    perm = tile_permutation(transform, params)
    out = []
    for pl in placements:
        w, h = tile_dims(pl.tile, params)
        x, y = pl.anchor
        t2 = perm[pl.tile]
        if transform == "transpose":
            out.append(Placement12(t2, (y, x)))
        elif transform == "hflip":
            out.append(Placement12(t2, (W - x - w, y)))
        elif transform == "vflip":
            out.append(Placement12(t2, (x, H - y - h)))
        else:
            raise ValueError("unknown transform")
    return sorted(out, key=lambda p: (p.anchor, p.tile))


def translate_placements(placements, dx, dy):
    return [Placement12(p.tile, (p.anchor[0] + dx, p.anchor[1] + dy)) for p in placements]


# -- validation ---------------------------------------------------------------


def validate_tiling12(placements, region, params: TileFamilyParams) -> bool:
    """Check the finitary tiling conditions on a rectangle.

    Placements must lie inside the region and cover it; overlapping
    placements must agree on the block and the offset within the block at
    every shared cell; and every 2x2 square of the region must lie inside
    a single placement.
    """
    W, H = region
    cover = {}
    for pi, pl in enumerate(placements):
        g = _tile_grid(pl.tile, params)
        x0, y0 = pl.anchor
        if x0 < 0 or y0 < 0 or x0 + g.width > W or y0 + g.height > H:
            return False
        for (cx, cy) in g.cells():
            cell = (x0 + cx, y0 + cy)
            label, off = g.label_of[(cx, cy)]
            entry = (label.kind, label.tile, off)
            cover.setdefault(cell, []).append((pi, entry))
    for x in range(W):
        for y in range(H):
            entries = cover.get((x, y))
            if not entries:
                return False
            kinds = {e for (_, e) in entries}
            if len(kinds) > 1:
                return False
            (kind, tile, off) = next(iter(kinds))
            if kind == "i" or kind == "interior":
                if len(entries) > 1:
                    return False
    spans = []
    for pl in placements:
        w, h = tile_dims(pl.tile, params)
        spans.append((pl.anchor[0], pl.anchor[1], pl.anchor[0] + w, pl.anchor[1] + h))
    by_cell = {}
    for i, (x0, y0, x1, y1) in enumerate(spans):
        for x in range(x0, x1):
            for y in range(y0, y1):
                by_cell.setdefault((x, y), set()).add(i)
    for x in range(W - 1):
        for y in range(H - 1):
            common = (
                by_cell[(x, y)]
                & by_cell[(x + 1, y)]
                & by_cell[(x, y + 1)]
                & by_cell[(x + 1, y + 1)]
            )
            if not common:
                return False
    return True


# -- boundary runs -------------------------------------------------------------


def run_width(units: str, params: TileFamilyParams) -> int:
    """Width of a horizontal boundary with these c/d blocks."""
    return params.n + sum(params.unit_width(u) for u in units)


def run_height(units: str, params: TileFamilyParams) -> int:
    return params.n + sum(params.unit_height(u) for u in units)


@dataclass(frozen=True)
class BoundarySpec:
    """Rectangle with all four boundary runs and a separation parameter.

    The separation s lower-bounds the distance between two b (resp. d)
    blocks on a side and from each such block to the nearest corner; the
    default is p*q.
    """

    params: TileFamilyParams
    top: str
    bottom: str
    left: str
    right: str
    separation: int = None

    def __post_init__(self):
        if self.separation is None:
            object.__setattr__(self, "separation", self.params.p * self.params.q)
        for units, letters in ((self.top, "cd"), (self.bottom, "cd"),
                               (self.left, "ab"), (self.right, "ab")):
            if not units or any(u not in letters for u in units):
                raise ValueError(f"boundary run {units!r} must be over {letters!r}")

    @property
    def width(self) -> int:
        return run_width(self.top, self.params)

    @property
    def height(self) -> int:
        return run_height(self.left, self.params)

    def validate(self):
        p = self.params
        if run_width(self.bottom, p) != self.width:
            raise InfeasibleSpec("top and bottom boundary widths differ")
        if run_height(self.right, p) != self.height:
            raise InfeasibleSpec("left and right boundary heights differ")
        for units, rare in ((self.top, "d"), (self.bottom, "d"),
                            (self.left, "b"), (self.right, "b")):
            pitch = p.unit_width if rare == "d" else p.unit_height
            pos = 0
            marks = []
            for u in units:
                if u == rare:
                    marks.append(pos)
                pos += pitch(u)
            total = pos
            for i, m in enumerate(marks):
                if m < self.separation or total - (m + pitch(rare)) < self.separation:
                    raise InfeasibleSpec(f"{rare} block too close to a corner")
                if i + 1 < len(marks) and marks[i + 1] - (m + pitch(rare)) < self.separation:
                    raise InfeasibleSpec(f"two {rare} blocks closer than the separation")

    def to_jsonable(self):
        return {
            "n": self.params.n,
            "p": self.params.p,
            "q": self.params.q,
            "top": self.top,
            "bottom": self.bottom,
            "left": self.left,
            "right": self.right,
            "separation": self.separation,
        }

    @staticmethod
    def from_jsonable(data) -> "BoundarySpec":
        return BoundarySpec(
            TileFamilyParams(data["n"], data["p"], data["q"]),
            data["top"],
            data["bottom"],
            data["left"],
            data["right"],
            data.get("separation"),
        )


# -- algorithm I: uniform and product fills ------------------------------------


_ROW_TILE = {("c", "a"): 1, ("c", "b"): 2, ("d", "a"): 3, ("d", "b"): 4}


def product_fill(col_units: str, row_units: str, params: TileFamilyParams, origin=(0, 0)):
    """Fill a rectangle with torus tiles per column/row unit pattern.

    Column units are c/d blocks left to right, row units a/b blocks
    bottom to top; the tile at each crossing is the torus tile matching
    the pair.  The filled rectangle including its boundary has dimensions
    (sum of unit widths + n) x (sum of unit heights + n).
    """
    x0, y0 = origin
    out = []
    y = y0
    for ru in row_units:
        x = x0
        for cu in col_units:
            out.append(Placement12(_ROW_TILE[(cu, ru)], (x, y)))
            x += params.unit_width(cu)
        y += params.unit_height(ru)
    return out


def fill_uniform(region, tile_index: int, params: TileFamilyParams, origin=(0, 0)):
    """Tessellate a rectangle with one torus tile (algorithm I)."""
    if tile_index not in (1, 2, 3, 4):
        raise ValueError("uniform fills use the torus tiles 1..4")
    W, H = region
    g = _tile_grid(tile_index, params)
    cu = g.label_of[(params.n, 0)][0].kind
    ru = g.label_of[(0, params.n)][0].kind
    pw, ph = params.unit_width(cu), params.unit_height(ru)
    if (W - params.n) % pw or (H - params.n) % ph or W < pw or H < ph:
        raise ValueError("region dimensions do not match the tile pitch")
    return product_fill(cu * ((W - params.n) // pw), ru * ((H - params.n) // ph),
                        params, origin)


# -- algorithm II: shifted downward propagation ---------------------------------


def _shift_row(in_units: str, shifting, params, origin, y):
    """One row of height p+n realizing the requested right-shifts.

    A shifting d block is consumed together with the c block to its right
    by the horizontal commutativity tile; other blocks propagate straight
    down.  Returns (placements, out_units).
    """
    out_units = []
    placements = []
    x = origin
    i = 0
    d_idx = 0
    units = list(in_units)
    while i < len(units):
        u = units[i]
        if u == "c":
            placements.append(Placement12(1, (x, y)))
            out_units.append("c")
            x += params.unit_width("c")
            i += 1
        else:
            if d_idx < len(shifting) and shifting[d_idx]:
                if i + 1 >= len(units) or units[i + 1] != "c":
                    raise InfeasibleSpec("no room to move a d block right")
                placements.append(Placement12(5, (x, y)))
                out_units.extend(["c", "d"])
                x += params.unit_width("c") + params.unit_width("d")
                i += 2
            else:
                placements.append(Placement12(3, (x, y)))
                out_units.append("d")
                x += params.unit_width("d")
                i += 1
            d_idx += 1
    return placements, "".join(out_units)


def propagate_fill(region, top: str, shifts, params: TileFamilyParams, origin=(0, 0)):
    """Algorithms I+II: move each d block right by its shift while
    filling downward; lateral boundaries are pure a blocks.

    The region height must be rows*p + n; each shift must be at most the
    number of rows.  Returns (placements, bottom_units).
    """
    W, H = region
    if run_width(top, params) != W:
        raise ValueError("top boundary does not match the region width")
    if (H - params.n) % params.p:
        raise ValueError("region height is not a whole number of rows")
    rows = (H - params.n) // params.p
    k = top.count("d")
    if len(shifts) != k:
        raise ValueError("one shift per d block required")
    if any(s < 0 or s > rows for s in shifts):
        raise InfeasibleSpec("shift offsets exceed the rows available")
    x0, y0 = origin
    placements = []
    cur = top
    for r in range(1, rows + 1):
        shifting = [r <= s for s in shifts]
        y = y0 + H - params.n - r * params.p
        pls, cur = _shift_row(cur, shifting, params, x0, y)
        placements.extend(pls)
    return placements, cur


# -- algorithm III: gathering -----------------------------------------------------


@dataclass
class GatherResult:
    placements: list
    bottom: str
    shifts: list
    top_counts: tuple  # (j, k)
    bottom_counts: tuple


def _gather_schedule(top: str, q: int):
    """Right-shift schedule making every gap before a d a multiple of q."""
    gaps = []
    run = 0
    for u in top:
        if u == "d":
            gaps.append(run)
            run = 0
        else:
            run += 1
    gaps.append(run)
    shifts = []
    prev = 0
    for i in range(len(gaps) - 1):
        s = (prev - gaps[i]) % q
        shifts.append(s)
        prev = s
    if shifts and gaps[-1] - shifts[-1] < 0:
        raise InfeasibleSpec("separation too small to route the last d block")
    return shifts


def gather_strip(top: str, params: TileFamilyParams, origin=(0, 0)):
    """Algorithm III on a strip of height (q+1)p + n.

    The strip's lateral boundaries carry exactly q+1 a blocks.  The
    bottom boundary comes out as k mod p copies of d on the left followed
    by j + q*floor(k/p) copies of c.
    """
    p, q, n = params.p, params.q, params.n
    x0, y0 = origin
    H = (q + 1) * p + n
    shifts = _gather_schedule(top, q)
    placements = []
    cur = top
    for r in range(1, q):
        shifting = [r <= s for s in shifts]
        y = y0 + H - n - r * p
        pls, cur = _shift_row(cur, shifting, params, x0, y)
        placements.extend(pls)

    # row q: convert each q-group of c blocks in front of a d into p d's
    y = y0 + H - n - q * p
    out_units = []
    x = x0
    i = 0
    units = cur
    last_d = units.rfind("d")
    while i < len(units):
        if units[i] == "d":
            placements.append(Placement12(3, (x, y)))
            out_units.append("d")
            x += params.unit_width("d")
            i += 1
        elif i < last_d:
            group = 0
            while units[i + group] == "c":
                group += 1
            if group % q:
                raise AssertionError("gather schedule left a bad group")
            for _ in range(group // q):
                placements.append(Placement12(9, (x, y)))
                out_units.extend("d" * p)
                x += params.p * params.q
            i += group
        else:
            placements.append(Placement12(1, (x, y)))
            out_units.append("c")
            x += params.unit_width("c")
            i += 1
    cur = "".join(out_units)

    # final row: convert p-groups of d blocks back to q-groups of c blocks,
    # keeping the leftover d blocks on the left
    y = y0
    D = cur.count("d")
    trailing = len(cur) - D
    out_units = []
    x = x0
    for _ in range(D % p):
        placements.append(Placement12(3, (x, y)))
        out_units.append("d")
        x += params.unit_width("d")
    for _ in range(D // p):
        placements.append(Placement12(10, (x, y)))
        out_units.extend("c" * q)
        x += params.p * params.q
    for _ in range(trailing):
        placements.append(Placement12(1, (x, y)))
        out_units.append("c")
        x += params.unit_width("c")
    bottom = "".join(out_units)

    j, k = top.count("c"), top.count("d")
    expect_d = k % p
    expect_c = j + q * (k // p)
    if bottom != "d" * expect_d + "c" * expect_c:
        raise AssertionError("gathered bottom boundary has unexpected counts")
    return GatherResult(placements, bottom, shifts, (j, k), (expect_d, expect_c))


# -- the full rectangle fill -------------------------------------------------------


def _strip_for_side(units_cd: str, params):
    """Canonical gather of a top-style boundary; local coordinates."""
    res = gather_strip(units_cd, params, origin=(0, 0))
    W = run_width(units_cd, params)
    H = (params.q + 1) * params.p + params.n
    return res, (W, H)


def fill_rectangle(spec: BoundarySpec):
    """Fill a boundary-labeled rectangle: four uniform corners, four
    gathered strips, and a product-filled inner rectangle.

    Raises InfeasibleSpec when the separation or the region is too small
    for the corner squares and strips, or when opposite sides disagree.
    """
    params = spec.params
    n, p, q = params.n, params.p, params.q
    spec.validate()
    W, H = spec.width, spec.height
    margin = q + 1  # c/a units consumed by each corner square
    c0 = (q + 1) * p + n

    for units, letters in ((spec.top, "c"), (spec.bottom, "c")):
        if len(units) < 2 * margin + 1:
            raise InfeasibleSpec("region too narrow for the corner squares")
        if set(units[:margin]) != {letters} or set(units[-margin:]) != {letters}:
            raise InfeasibleSpec("b/d blocks intrude on a corner square")
    for units in (spec.left, spec.right):
        if len(units) < 2 * margin + 1:
            raise InfeasibleSpec("region too short for the corner squares")
        if set(units[:margin]) != {"a"} or set(units[-margin:]) != {"a"}:
            raise InfeasibleSpec("b/d blocks intrude on a corner square")

    placements = []
    # four corner squares (algorithm I)
    for (cx, cy) in ((0, 0), (W - c0, 0), (0, H - c0), (W - c0, H - c0)):
        placements.extend(fill_uniform((c0, c0), 1, params, origin=(cx, cy)))

    strip_h = c0

    # top strip: gather downward
    top_units = spec.top[margin:-margin]
    res_top, (tw, th) = _strip_for_side(top_units, params)
    placements.extend(translate_placements(res_top.placements, c0 - n, H - c0))

    # bottom strip: gather upward = vertical mirror of the canonical strip
    bot_units = spec.bottom[margin:-margin]
    res_bot, (bw_, bh_) = _strip_for_side(bot_units, params)
    mirrored = transform_placements(res_bot.placements, "vflip", (bw_, bh_), params)
    placements.extend(translate_placements(mirrored, c0 - n, 0))

    # transposing puts the given boundary on the right edge and the
    # gathered edge on the left, so the left strip needs an extra mirror
    left_units = spec.left[margin:-margin].replace("a", "c").replace("b", "d")
    res_left, (lw_, lh_) = _strip_for_side(left_units, params)
    tl = transform_placements(res_left.placements, "transpose", (lw_, lh_), params)
    tl = transform_placements(tl, "hflip", (strip_h, lw_), params)
    placements.extend(translate_placements(tl, 0, c0 - n))

    # right strip: transpose only
    right_units = spec.right[margin:-margin].replace("a", "c").replace("b", "d")
    res_right, (rw_, rh_) = _strip_for_side(right_units, params)
    tr = transform_placements(res_right.placements, "transpose", (rw_, rh_), params)
    placements.extend(translate_placements(tr, W - c0, c0 - n))

    # inner rectangle: product fill from the gathered boundaries
    kd_top, _ = res_top.bottom_counts
    kd_bot, _ = res_bot.bottom_counts
    kb_left, _ = res_left.bottom_counts
    kb_right, _ = res_right.bottom_counts
    if kd_top != kd_bot or kb_left != kb_right:
        raise InfeasibleSpec("opposite boundaries disagree after gathering")
    inner_w = W - 2 * c0 + 2 * n
    inner_h = H - 2 * c0 + 2 * n
    jc = (inner_w - n - kd_top * q) // p
    ja = (inner_h - n - kb_left * q) // p
    col_units = "d" * kd_top + "c" * jc
    row_units = "b" * kb_left + "a" * ja
    if run_width(col_units, params) != inner_w or run_height(row_units, params) != inner_h:
        raise AssertionError("inner rectangle does not match the gathered boundaries")
    placements.extend(product_fill(col_units, row_units, params, origin=(c0 - n, c0 - n)))

    return sorted(placements, key=lambda pl: (pl.anchor, pl.tile))


# -- randomized feasible boundary specs ---------------------------------------------


def random_boundary_spec(params: TileFamilyParams, rng: random.Random,
                         max_rare: int = 2) -> BoundarySpec:
    """Feasible random spec: generous corner margins and gaps.

    Rare blocks (d on top/bottom, b on the sides) keep at least 2q c/a
    units to each corner and q units between each other, which satisfies
    the default separation p*q and leaves room for the gathering shifts.
    """
    q = params.q

    def side(total_rare):
        margin = 2 * q + rng.randrange(0, 3)
        gaps = [margin]
        for _ in range(total_rare - 1):
            gaps.append(q + rng.randrange(0, 3))
        gaps.append(margin)
        units = []
        for i, g in enumerate(gaps):
            units.append("c" * g)
            if i < total_rare:
                units.append("d")
        return "".join(units)

    k_h = rng.randrange(0, max_rare + 1)
    k_v = rng.randrange(0, max_rare + 1)
    top = side(k_h)
    bottom_gaps = side(k_h)
    left = side(k_v).replace("c", "a").replace("d", "b")
    right = side(k_v).replace("c", "a").replace("d", "b")

    def pad_to(units, target_len, filler):
        return units + filler * (target_len - len(units))

    # equalize opposite side widths by padding with plain units
    tlen = max(len(top), len(bottom_gaps))
    top = pad_to(top, tlen, "c")
    bottom = pad_to(bottom_gaps, tlen, "c")
    vlen = max(len(left), len(right))
    left = pad_to(left, vlen, "a")
    right = pad_to(right, vlen, "a")
    return BoundarySpec(params, top, bottom, left, right)
