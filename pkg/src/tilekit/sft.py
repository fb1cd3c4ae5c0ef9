"""Subshifts of finite type: patterns, occurrence, and the respect relation.

A subshift is described by an alphabet size b and a list of forbidden
patterns.  Patterns are stored row-major with explicit dimensions; for
two-dimensional patterns ``cells[y * w + x]`` is the value at (x, y) with
y = 0 the bottom row, matching the grid convention of :mod:`tilekit.grids`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from tilekit.grids import QuotientGraph


@dataclass(frozen=True)
class Pattern:
    dims: tuple
    cells: tuple

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        cells = tuple(int(c) for c in self.cells)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "cells", cells)
        if not dims or any(d < 1 for d in dims):
            raise ValueError("pattern dimensions must be positive")
        size = 1
        for d in dims:
            size *= d
        if size != len(cells):
            raise ValueError("cell count does not match dimensions")

    @property
    def ndim(self) -> int:
        return len(self.dims)

    def value(self, x: int, y: int = 0) -> int:
        if self.ndim == 1:
            return self.cells[x]
        w = self.dims[0]
        return self.cells[y * w + x]

    def max_side(self) -> int:
        return max(self.dims)

    def to_jsonable(self):
        return {"dims": list(self.dims), "cells": list(self.cells)}


@dataclass(frozen=True)
class SftSpec:
    b: int
    dim: int
    patterns: tuple

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if self.b < 1:
            raise ValueError("alphabet size must be >= 1")
        if self.dim not in (1, 2):
            raise ValueError("dim must be 1 or 2")
        for p in self.patterns:
            if p.ndim != self.dim:
                raise ValueError("pattern dimensionality does not match the subshift")
            if any(c >= self.b or c < 0 for c in p.cells):
                raise ValueError("pattern value outside alphabet")

    def width(self) -> int:
        if not self.patterns:
            return 0
        return max(p.max_side() for p in self.patterns) - 1

    def to_jsonable(self):
        return {
            "b": self.b,
            "dim": self.dim,
            "patterns": [p.to_jsonable() for p in self.patterns],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_jsonable(data) -> "SftSpec":
        pats = tuple(Pattern(tuple(p["dims"]), tuple(p["cells"])) for p in data["patterns"])
        return SftSpec(int(data["b"]), int(data["dim"]), pats)

    @staticmethod
    def from_json(text: str) -> "SftSpec":
        return SftSpec.from_jsonable(json.loads(text))


class SymbolMap:
    """Total assignment of alphabet values to the classes of a quotient graph."""

    def __init__(self, graph: QuotientGraph, values):
        missing = [v for v in graph.vertices if v not in values]
        if missing:
            raise ValueError(f"symbol map is not total, missing {missing[:3]}...")
        self.graph = graph
        self.values = {v: int(values[v]) for v in graph.vertices}

    def value_at(self, grid_index: int, x: int, y: int = 0) -> int:
        return self.values[self.graph.class_of[(grid_index, x, y)]]

    def max_value(self) -> int:
        return max(self.values.values())

    def to_jsonable(self):
        return [{"id": list(v), "value": self.values[v]} for v in self.graph.vertices]


# -- pattern occurrence ------------------------------------------------


def _window_dims(window):
    if window and isinstance(window[0], (list, tuple)):
        h = len(window)
        w = len(window[0])
        if any(len(row) != w for row in window):
            raise ValueError("ragged window")
        return (w, h)
    return (len(window),)


def pattern_occurs(p: Pattern, window) -> bool:
    """True iff some translate of p matches the window exactly.

    One-dimensional windows are flat sequences; two-dimensional windows
    are ``window[y][x]`` with y = 0 the bottom row.
    """
    dims = _window_dims(window)
    if len(dims) != p.ndim:
        raise ValueError("window and pattern dimensionality differ")
    if p.ndim == 1:
        (ell,) = p.dims
        (length,) = dims
        if ell > length:
            raise ValueError("window smaller than pattern")
        return any(
            all(window[c + i] == p.value(i) for i in range(ell)) for c in range(length - ell + 1)
        )
    pw, ph = p.dims
    w, h = dims
    if pw > w or ph > h:
        raise ValueError("window smaller than pattern")
    for y0 in range(h - ph + 1):
        for x0 in range(w - pw + 1):
            if all(
                window[y0 + y][x0 + x] == p.value(x, y) for y in range(ph) for x in range(pw)
            ):
                return True
    return False


# -- the respect relation ----------------------------------------------


def within_hypothesis(graph: QuotientGraph, spec: SftSpec) -> bool:
    """True iff the graph parameter n is at least the subshift width."""
    n = graph.meta.get("n")
    return n is not None and n >= spec.width()


def _grid_value_table(g: SymbolMap, grid_index: int):
    grid = g.graph.grids[grid_index]
    return [
        [g.value_at(grid_index, x, y) for x in range(grid.width)] for y in range(grid.height)
    ]


def _pattern_in_grids(g: SymbolMap, p: Pattern) -> bool:
    for i, grid in enumerate(g.graph.grids):
        pw, ph = p.dims
        if pw > grid.width or ph > grid.height:
            continue
        table = _grid_value_table(g, i)
        for y0 in range(grid.height - ph + 1):
            for x0 in range(grid.width - pw + 1):
                if all(
                    table[y0 + y][x0 + x] == p.value(x, y)
                    for y in range(ph)
                    for x in range(pw)
                ):
                    return True
    return False


def _pattern_pullback_exists(g: SymbolMap, p: Pattern) -> bool:
    """Search for a grid homomorphism of dom(p) into the graph matching p.

    Cells are assigned row by row; each new cell must be a generator
    successor of its already-assigned left and lower neighbors, and must
    carry the pattern value.  Quotient vertices may have several
    successors per generator, so the search branches and prunes.
    """
    graph = g.graph
    pw, ph = p.dims
    anchors = [v for v in graph.vertices if g.values[v] == p.value(0, 0)]
    assign = {}

    def extend(idx: int) -> bool:
        if idx == pw * ph:
            return True
        y, x = divmod(idx, pw)
        want = p.value(x, y)
        cands = None
        if x > 0:
            cands = set(graph.successors(assign[(x - 1, y)], 0, 1))
        if y > 0:
            below = set(graph.successors(assign[(x, y - 1)], 1, 1))
            cands = below if cands is None else (cands & below)
        for v in sorted(cands):
            if g.values[v] != want:
                continue
            assign[(x, y)] = v
            if extend(idx + 1):
                return True
            del assign[(x, y)]
        return False

    for a in anchors:
        assign[(0, 0)] = a
        if extend(1):
            return True
        assign.clear()
    return False


def respects(g: SymbolMap, spec: SftSpec, force_general: bool = False) -> bool:
    """True iff no forbidden pattern of the subshift arises as a pullback.

    When every pattern side is at most n + 1 the check enumerates pattern
    placements entirely inside each constituent grid graph; otherwise it
    enumerates all grid homomorphisms of each pattern domain into the
    quotient.  The latter also covers parameters below the width
    hypothesis of the tile theorems (callers can flag those results via
    :func:`within_hypothesis`).
    """
    if spec.dim != 2:
        raise ValueError("respects expects a two-dimensional subshift")
    if g.max_value() >= spec.b:
        raise ValueError("symbol map uses values outside the alphabet")
    n = g.graph.meta.get("n")
    fast = (
        not force_general
        and g.graph.grids is not None
        and n is not None
        and all(p.max_side() <= n + 1 for p in spec.patterns)
    )
    for p in spec.patterns:
        if fast:
            if _pattern_in_grids(g, p):
                return False
        else:
            if _pattern_pullback_exists(g, p):
                return False
    return True


def respects_1d(g: SymbolMap, spec: SftSpec) -> bool:
    """True iff no forbidden word occurs along either one-dimensional tile."""
    if spec.dim != 1:
        raise ValueError("respects_1d expects a one-dimensional subshift")
    if g.max_value() >= spec.b:
        raise ValueError("symbol map uses values outside the alphabet")
    for i, grid in enumerate(g.graph.grids):
        seq = [g.value_at(i, x) for x in range(grid.width)]
        for p in spec.patterns:
            (ell,) = p.dims
            for a in range(len(seq) - ell + 1):
                if all(seq[a + j] == p.value(j) for j in range(ell)):
                    return False
    return True


# -- canonical presets --------------------------------------------------


def proper_coloring_sft(b: int, dim: int = 2) -> SftSpec:
    """Edge subshift forbidding equal adjacent symbols."""
    pats = []
    for c in range(b):
        if dim == 1:
            pats.append(Pattern((2,), (c, c)))
        else:
            pats.append(Pattern((2, 1), (c, c)))
            pats.append(Pattern((1, 2), (c, c)))
    return SftSpec(b, dim, tuple(pats))


def golden_mean_sft() -> SftSpec:
    """Binary one-dimensional shift forbidding the word 11."""
    return SftSpec(2, 1, (Pattern((2,), (1, 1)),))


UP, DOWN, LEFT, RIGHT = 0, 1, 2, 3


def perfect_matching_sft() -> SftSpec:
    """Two-dimensional matching consistency over directions {up, down, left, right}.

    A horizontal pair (g, g') is forbidden iff exactly one of g == RIGHT,
    g' == LEFT holds; vertical pairs are analogous with UP/DOWN.
    """
    pats = []
    for a in range(4):
        for b in range(4):
            if (a == RIGHT) != (b == LEFT):
                pats.append(Pattern((2, 1), (a, b)))
            if (a == UP) != (b == DOWN):
                pats.append(Pattern((1, 2), (a, b)))
    return SftSpec(4, 2, tuple(pats))


def preset(name: str) -> SftSpec:
    """Look up a named preset such as ``proper-coloring(4)``."""
    m = re.fullmatch(r"proper-coloring\((\d+)\)", name)
    if m:
        return proper_coloring_sft(int(m.group(1)))
    m = re.fullmatch(r"proper-coloring-1d\((\d+)\)", name)
    if m:
        return proper_coloring_sft(int(m.group(1)), dim=1)
    if name == "golden-mean":
        return golden_mean_sft()
    if name == "perfect-matching(2D)":
        return perfect_matching_sft()
    raise ValueError(f"unknown preset {name!r}")
