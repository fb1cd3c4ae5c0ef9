"""ASCII renderings of colorings, placements and tilings."""

from __future__ import annotations

from tilekit.grids import QuotientGraph, TileFamilyParams, tile_dims
from tilekit.recttile import RegionTiling
from tilekit.sft import SymbolMap


def symbol_map_ascii(g: SymbolMap) -> str:
    """Block matrices of all constituent grids, one tile per paragraph."""
    out = []
    for gi, grid in enumerate(g.graph.grids):
        out.append(f"tile {gi + 1} ({grid.width}x{grid.height})")
        for ry in range(grid.height):
            y = grid.height - 1 - ry
            row = " ".join(str(g.value_at(gi, x, y)) for x in range(grid.width))
            out.append("  " + row)
    return "\n".join(out)


def placements_ascii(placements, region, params: TileFamilyParams) -> str:
    """Region map with one glyph per cell naming the covering tile."""
    W, H = region
    glyphs = "123456789abc"
    cells = [[" " for _ in range(W)] for _ in range(H)]
    for pl in placements:
        w, h = tile_dims(pl.tile, params)
        gl = glyphs[pl.tile - 1]
        for dx in range(w):
            for dy in range(h):
                x, y = pl.anchor[0] + dx, pl.anchor[1] + dy
                if 0 <= x < W and 0 <= y < H:
                    cells[y][x] = gl
    return "\n".join("".join(cells[H - 1 - y]) for y in range(H))


def tiling_ascii(t: RegionTiling) -> str:
    """Region map with the placement index (mod 36) in each cell."""
    a, b = t.region.width, t.region.height
    glyphs = "0123456789abcdefghijklmnopqrstuvwxyz"
    cells = [["." for _ in range(a)] for _ in range(b)]
    for i, pl in enumerate(t.placements):
        for (x, y) in t.cells_of(pl):
            cells[y][x] = glyphs[i % len(glyphs)]
    return "\n".join("".join(cells[b - 1 - y]) for y in range(b))


def graph_info(G: QuotientGraph) -> str:
    lines = [
        f"vertices: {G.vertex_count()}",
        f"undirected edges (with multiplicity): {G.undirected_edge_count()}",
        f"simple undirected edges: {len(G.simple_undirected_edges())}",
    ]
    kinds = {}
    for (label, _) in G.label_of.values():
        kinds[label.text()] = kinds.get(label.text(), 0) + 1
    lines.append("classes by label: " + ", ".join(f"{k}={v}" for k, v in sorted(kinds.items())))
    lines.append(f"unique generator edges: {G.unique_generator_edges()}")
    return "\n".join(lines)
