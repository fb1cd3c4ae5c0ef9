"""Obstruction calculus for graph homomorphism targets.

Implements the finite, checkable shadows of the reduced homotopy group of
a target graph: enumeration of non-trivial 4-cycles, the rational space
of edge weightings vanishing on them, the closed-walk residue test, the
simple negative conditions, and order-2 odd-cycle witness boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from tilekit.csp import TargetGraph, solve_coloring


# -- 4-cycles ---------------------------------------------------------------


def _canonical_4cycle(cyc):
    """Least representative under rotation and reflection."""
    v = list(cyc)
    best = None
    for seq in (v, v[::-1]):
        for r in range(4):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


_FOURCYCLE_CACHE = {}


def nontrivial_4cycles(H: TargetGraph):
    """All non-backtracking closed 4-walks (v0, v1, v2, v3) with v0 != v2
    and v1 != v3, up to rotation and reflection."""
    cached = _FOURCYCLE_CACHE.get(H)
    if cached is not None:
        return cached
    adj = H.adjacency()
    out = set()
    for v0 in range(H.n):
        for v1 in adj[v0]:
            for v2 in adj[v1]:
                if v2 == v0:
                    continue
                for v3 in adj[v2]:
                    if v3 == v1 or v0 not in adj[v3]:
                        continue
                    out.add(_canonical_4cycle((v0, v1, v2, v3)))
    result = sorted(out)
    _FOURCYCLE_CACHE[H] = result
    return result


# -- weightings --------------------------------------------------------------


@dataclass(frozen=True)
class Weighting:
    """Integer weights on the canonically oriented edges of a graph.

    Edges are oriented from the smaller to the larger endpoint; traversing
    an edge backwards contributes the negated weight, so the weight
    extends additively to walks.
    """

    graph: TargetGraph
    weights: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.graph.edges):
            raise ValueError("one weight per edge required")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        table = {}
        for (a, b), wt in zip(self.graph.edges, self.weights):
            table[(a, b)] = wt
            table[(b, a)] = -wt
        object.__setattr__(self, "_table", table)

    def edge_weight(self, u, v) -> int:
        return self._table[(u, v)]

    def walk_weight(self, walk) -> int:
        total = 0
        for a, b in zip(walk, walk[1:]):
            total += self.edge_weight(a, b)
        return total

    def to_jsonable(self):
        return {
            "edges": [list(e) for e in self.graph.edges],
            "weights": list(self.weights),
        }


def _cycle_row(H, cyc, ncols):
    index = {e: i for i, e in enumerate(H.edges)}
    row = [0] * ncols
    seq = list(cyc) + [cyc[0]]
    for a, b in zip(seq, seq[1:]):
        e = (min(a, b), max(a, b))
        row[index[e]] += 1 if a < b else -1
    return row


def _rref(rows, ncols):
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _primitive(vec):
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _nullspace(rows, ncols):
    """Primitive integer basis of the rational nullspace, canonically
    ordered by free-column index."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(_primitive(vec))
    return basis


def weight_nullspace(H: TargetGraph):
    """Primitive integer basis of weightings vanishing on every
    non-trivial 4-cycle, as vectors over the canonical edge order."""
    ncols = len(H.edges)
    rows = [_cycle_row(H, cyc, ncols) for cyc in nontrivial_4cycles(H)]
    return _nullspace(rows, ncols)


def _gradient_vectors(H: TargetGraph):
    """Weightings that vanish on every closed walk (vertex potentials)."""
    ncols = len(H.edges)
    out = []
    for u in range(1, H.n):
        vec = [0] * ncols
        for i, (a, b) in enumerate(H.edges):
            if b == u:
                vec[i] = 1
            elif a == u:
                vec[i] = -1
        out.append(tuple(vec))
    return out


def _independent_mod(base_rows, candidates, ncols):
    """Subset of candidates that extend the row space of base_rows."""
    rows = [list(r) for r in base_rows]
    picked = []
    red, _ = _rref(rows, ncols) if rows else ([], [])
    current = [list(r) for r in red]
    rank = len(current)
    for cand in candidates:
        trial = current + [list(cand)]
        red2, _ = _rref(trial, ncols)
        if len(red2) > rank:
            picked.append(cand)
            current = [list(r) for r in red2]
            rank += 1
    return picked


# -- the residue test ---------------------------------------------------------


def _check_vanishes(H, w: Weighting):
    for cyc in nontrivial_4cycles(H):
        if w.walk_weight(list(cyc) + [cyc[0]]) != 0:
            raise ValueError("weighting does not vanish on a non-trivial 4-cycle")


def negative_weight_holds(H: TargetGraph, w: Weighting, p: int) -> bool:
    """True iff no closed walk of length p has weight divisible by p.

    The weighting must vanish on all non-trivial 4-cycles (checked).
    Decided by dynamic programming over (vertex, steps, residue mod p)
    states; a graph with no closed p-walk at all passes vacuously.
    """
    if p < 1:
        raise ValueError("p must be positive")
    _check_vanishes(H, w)
    adj = H.adjacency()
    wmat = {}
    for (a, b), wt in zip(H.edges, w.weights):
        wmat[(a, b)] = wt
        wmat[(b, a)] = -wt
    for start in range(H.n):
        reach = {start: 1 << 0}
        for _ in range(p):
            nxt = {}
            for v, residues in reach.items():
                for u in adj[v]:
                    shift = wmat[(v, u)] % p
                    mask = ((residues << shift) | (residues >> (p - shift))) & ((1 << p) - 1) \
                        if shift else residues
                    nxt[u] = nxt.get(u, 0) | mask
            reach = nxt
        if reach.get(start, 0) & 1:
            return False
    return True


_FULL_ENUM_LIMIT = 20000


def negative_weight_search(H: TargetGraph, p: int, coeff_bound: int):
    """Bounded search for a weighting passing the residue test.

    Enumerates integer combinations of nullspace basis vectors with
    coefficients in [-coeff_bound, coeff_bound].  When the full
    coefficient box is too large, only basis vectors independent of the
    vertex-potential subspace are varied; potentials contribute nothing
    to closed-walk weights, so no outcome is missed that way.  A None
    result is not a proof of nonexistence.
    """
    basis = weight_nullspace(H)
    ncols = len(H.edges)
    B = coeff_bound
    if (2 * B + 1) ** len(basis) > _FULL_ENUM_LIMIT:
        grads = _gradient_vectors(H)
        basis = _independent_mod(grads, basis, ncols)
    for coeffs in product(range(-B, B + 1), repeat=len(basis)):
        vec = [0] * ncols
        for c, bvec in zip(coeffs, basis):
            if c:
                for i, x in enumerate(bvec):
                    vec[i] += c * x
        w = Weighting(H, tuple(vec))
        if negative_weight_holds(H, w, p):
            return w
    return None


# -- simple conditions ---------------------------------------------------------


def simple_negative(H: TargetGraph) -> bool:
    """True iff H is 3-colorable or has no non-trivial 4-cycles."""
    if not nontrivial_4cycles(H):
        return True
    return solve_coloring(H, 3).sat


def contains_k4(H: TargetGraph) -> bool:
    adj = H.adjacency()
    for quad in combinations(range(H.n), 4):
        if all(b in adj[a] for a, b in combinations(quad, 2)):
            return True
    return False


# -- order-2 witness boxes ------------------------------------------------------


@dataclass(frozen=True)
class WitnessBox:
    """Grid of target-graph vertices; rows are stored top row first."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) < 2 or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("witness box must be rectangular with >= 2 rows")

    @property
    def height(self):
        return len(self.rows)

    @property
    def width(self):
        return len(self.rows[0])

    def to_jsonable(self):
        return [list(r) for r in self.rows]


def _check_cycle(H: TargetGraph, gamma):
    gamma = tuple(gamma)
    if len(gamma) < 2 or gamma[0] != gamma[-1]:
        raise ValueError("cycle must start and end at the same vertex")
    length = len(gamma) - 1
    adj = H.adjacency()
    for a, b in zip(gamma, gamma[1:]):
        if b not in adj[a]:
            raise ValueError("cycle uses a non-edge")
    return gamma, length


def verify_order2_witness(H: TargetGraph, gamma, box: WitnessBox) -> bool:
    """Check the box invariants; success certifies that the square of the
    odd cycle is trivial modulo 4-cycles."""
    gamma, length = _check_cycle(H, gamma)
    if length % 2 == 0:
        raise ValueError("cycle length must be odd")
    rows = box.rows
    w, h = box.width, box.height
    if w < length + 1:
        return False
    adj = H.adjacency()
    for r in range(h):
        for c in range(w):
            if c + 1 < w and rows[r][c + 1] not in adj[rows[r][c]]:
                return False
            if r + 1 < h and rows[r + 1][c] not in adj[rows[r][c]]:
                return False
    top = rows[0]
    if tuple(top[: length + 1]) != gamma:
        return False
    for c in range(length + 1, w):
        if top[c] != top[c - 2]:
            return False
    if tuple(reversed(rows[-1])) != tuple(top):
        return False
    for col in (0, w - 1):
        for r in range(2, h):
            if rows[r][col] != rows[r - 2][col]:
                return False
    return True


def search_order2_witness(H: TargetGraph, gamma, max_rows: int, max_cols: int):
    """Search for a witness box, smallest widths first, then heights.

    Whole rows are treated as states of a layered transition system: a
    row can sit below another iff the cells are vertically adjacent, the
    row is horizontally a walk in the graph, and the side columns keep
    their two-value alternation.  Reachability of the reversed top row
    then decides each box size, so exhausting the bounds is cheap.
    None within the bounds is inconclusive.
    """
    gamma, length = _check_cycle(H, gamma)
    if length % 2 == 0:
        raise ValueError("cycle length must be odd")
    adj = H.adjacency()

    for width in range(length + 1, max_cols + 1):
        for top in _enumerate_tops(adj, gamma, width):
            for c0 in sorted(adj[top[0]]):
                for cw in sorted(adj[top[-1]]):
                    box = _reach_box(adj, top, c0, cw, max_rows)
                    if box is not None:
                        return WitnessBox(box)
    return None


def _enumerate_tops(adj, gamma, width):
    """Top rows: the cycle followed by a two-vertex alternating pad."""
    pads = [tuple(gamma)]
    for c in range(len(gamma), width):
        nxt = []
        for row in pads:
            for v in sorted(adj[row[-1]]):
                if v == row[c - 2]:
                    nxt.append(row + (v,))
        pads = nxt
    yield from pads


def _row_successors(adj, row, col0, colw):
    """Rows that can sit directly below, with fixed side-column values."""
    width = len(row)
    out = []
    partial = [None] * width

    def rec(c):
        if c == width:
            out.append(tuple(partial))
            return
        if c == 0:
            cands = [col0] if col0 in adj[row[0]] else []
        else:
            cands = sorted(adj[row[c]] & adj[partial[c - 1]])
            if c == width - 1:
                cands = [v for v in cands if v == colw]
        for v in cands:
            partial[c] = v
            rec(c + 1)
        partial[c] = None

    rec(0)
    return out


def _reach_box(adj, top, c0, cw, max_rows):
    """Layered reachability from the top row to its reversal.

    Side columns alternate between (top[0], c0) on the left and
    (top[-1], cw) on the right.  Returns the row list of the smallest
    workable height within the bound, or None.
    """
    bottom = tuple(reversed(top))
    sides = {0: (top[0], top[-1]), 1: (c0, cw)}
    succ_cache = {}
    parents = [{top: None}]
    for r in range(1, max_rows):
        want0, want1 = sides[r % 2]
        nxt = {}
        for row in sorted(parents[-1]):
            key = (row, r % 2)
            if key not in succ_cache:
                succ_cache[key] = _row_successors(adj, row, want0, want1)
            for b in succ_cache[key]:
                if b not in nxt:
                    nxt[b] = row
        parents.append(nxt)
        if bottom in nxt:
            rows = [bottom]
            for lvl in range(r, 0, -1):
                rows.append(parents[lvl][rows[-1]])
            rows.reverse()
            return rows
        if not nxt:
            break
    return None
