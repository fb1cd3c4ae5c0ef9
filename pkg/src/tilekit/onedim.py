"""Decision procedure for one-dimensional subshifts of finite type.

The subshift is turned into the digraph of allowed length-l windows with
edges given by one-step overlap.  A continuous equivariant map out of the
binary full shift exists iff some directed component of that digraph has
cycle-length gcd equal to 1; in that case two coprime cycle lengths (p, q)
through one vertex produce a symbol map on the two-tile quotient graph
that witnesses the decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from tilekit.grids import TileFamilyParams, make_gamma1
from tilekit.sft import SftSpec, SymbolMap


class WindowDigraph:
    """Digraph of allowed windows of a 1-D subshift.

    Vertices are the words in b^ell not on the forbidden list; there is an
    edge u -> v when the (ell-1)-prefix of v equals the (ell-1)-suffix of u.
    """

    def __init__(self, b: int, ell: int, vertices, succ):
        self.b = b
        self.ell = ell
        self.vertices = sorted(vertices)
        self.succ = {u: tuple(sorted(succ.get(u, ()))) for u in self.vertices}

    def edge_count(self) -> int:
        return sum(len(s) for s in self.succ.values())

    def edges(self):
        for u in self.vertices:
            for v in self.succ[u]:
                yield (u, v)


@dataclass(frozen=True)
class DirectedComponent:
    """A mutual-reachability class, with the gcd of its cycle lengths.

    Vertices not lying on any cycle are reported as singleton components
    of period 0.
    """

    vertices: tuple
    period: int
    root: tuple


def _pad_patterns(spec: SftSpec):
    """Expand forbidden words to a common length ell (the max length).

    A word of length m < ell is replaced by all length-ell words having it
    as a prefix; for bi-infinite sequences this preserves the subshift.
    """
    if spec.dim != 1:
        raise ValueError("expected a one-dimensional subshift")
    if spec.b < 1:
        raise ValueError("alphabet must be nonempty")
    ell = max((p.dims[0] for p in spec.patterns), default=1)
    forbidden = set()
    for p in spec.patterns:
        m = p.dims[0]
        base = tuple(p.cells)
        for ext in product(range(spec.b), repeat=ell - m):
            forbidden.add(base + ext)
    return ell, forbidden


def build_lambda(spec: SftSpec) -> WindowDigraph:
    """Window digraph of the subshift, patterns padded to a common length."""
    ell, forbidden = _pad_patterns(spec)
    vertices = [w for w in product(range(spec.b), repeat=ell) if w not in forbidden]
    vset = set(vertices)
    succ = {}
    for u in vertices:
        suffix = u[1:]
        succ[u] = tuple(
            sorted(suffix + (c,) for c in range(spec.b) if suffix + (c,) in vset)
        )
    return WindowDigraph(spec.b, ell, vertices, succ)


def _strong_components(lam: WindowDigraph):
    """Tarjan's algorithm, iterative to avoid recursion limits."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    components = []
    counter = [0]

    for start in lam.vertices:
        if start in index:
            continue
        work = [(start, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            succ = lam.succ[v]
            for i in range(pi, len(succ)):
                w = succ[i]
                if w not in index:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def component_period(vertices, lam: WindowDigraph) -> int:
    """Gcd of all cycle lengths through a strongly connected vertex set.

    Computed by the potential method: fix a root, take BFS levels lev
    along intra-component edges, and return the gcd of
    lev(u) + 1 - lev(v) over those edges.
    """
    vset = set(vertices)
    root = min(vset)
    lev = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in lam.succ[v]:
                if w in vset and w not in lev:
                    lev[w] = lev[v] + 1
                    nxt.append(w)
        frontier = nxt
    if set(lev) != vset:
        raise ValueError("vertex set is not strongly connected")
    g = 0
    for v in vset:
        for w in lam.succ[v]:
            if w in vset:
                g = gcd(g, lev[v] + 1 - lev[w])
    if g == 0:
        raise ValueError("vertex set carries no cycle")
    return abs(g)


def directed_components(lam: WindowDigraph):
    """Mutual-reachability classes with periods; acyclic leftovers get 0."""
    out = []
    for comp in _strong_components(lam):
        vset = set(comp)
        has_cycle = any(w in vset for v in comp for w in lam.succ[v])
        period = component_period(comp, lam) if has_cycle else 0
        out.append(DirectedComponent(comp, period, min(comp)))
    out.sort(key=lambda c: c.vertices)
    return out


def primitive_cycle_lengths(lam: WindowDigraph, vertices=None):
    """Lengths of all primitive (vertex-simple) directed cycles.

    Exhaustive DFS; used as a slow cross-check oracle for
    :func:`component_period`.
    """
    keep = set(vertices if vertices is not None else lam.vertices)
    lengths = set()
    order = sorted(keep)
    pos = {v: i for i, v in enumerate(order)}

    def dfs(start, v, path_set, depth):
        for w in lam.succ[v]:
            if w not in keep or pos[w] < pos[start]:
                continue
            if w == start:
                lengths.add(depth + 1)
            elif w not in path_set:
                path_set.add(w)
                dfs(start, w, path_set, depth + 1)
                path_set.discard(w)

    for s in order:
        dfs(s, s, {s}, 0)
    return sorted(lengths)


@dataclass
class OnedimDecision:
    answer: bool
    component: tuple | None
    period: int | None
    witness_p: int | None
    witness_q: int | None
    witness_map: SymbolMap | None

    def to_jsonable(self):
        return {
            "answer": self.answer,
            "component": [list(w) for w in self.component] if self.component else None,
            "period": self.period,
            "witness_p": self.witness_p,
            "witness_q": self.witness_q,
            "witness": self.witness_map.to_jsonable() if self.witness_map else None,
        }


def _closed_walk_lengths(lam, vset, root, bound):
    """Reachability sets by exact step count from the root, plus parents."""
    reach = [{root}]
    parents = [{root: None}]
    closed = set()
    for step in range(1, bound + 1):
        layer = {}
        for v in sorted(reach[-1]):
            for w in lam.succ[v]:
                if w in vset and w not in layer:
                    layer[w] = v
        reach.append(set(layer))
        parents.append(layer)
        if root in layer:
            closed.add(step)
    return closed, parents


def _recover_walk(parents, root, length):
    walk = [root]
    v = root
    for step in range(length, 0, -1):
        v = parents[step][v]
        walk.append(v)
    walk.reverse()
    return walk


def _witness_pair(closed_lengths):
    """Smallest coprime pair of achievable lengths, both at least 2."""
    usable = sorted(l for l in closed_lengths if l >= 2)
    best = None
    for i, p in enumerate(usable):
        for q in usable[i + 1 :]:
            if gcd(p, q) == 1:
                cand = (p + q, p, q)
                if best is None or cand < best:
                    best = cand
        if best is not None and p > best[0]:
            break
    if best is None:
        return None
    return best[1], best[2]


def decide_onedim(spec: SftSpec) -> OnedimDecision:
    """Decide existence of an equivariant map out of the binary full shift.

    The answer is yes iff some directed component of the window digraph
    has period 1.  On a yes answer the returned witness contains coprime
    cycle lengths (p, q) and the induced symbol map on the two-tile graph
    with n = 1, which satisfies the one-dimensional respect relation.
    """
    lam = build_lambda(spec)
    comps = directed_components(lam)
    for comp in comps:
        if comp.period != 1:
            continue
        vset = set(comp.vertices)
        root = comp.root
        n_c = len(comp.vertices)
        bound = n_c * n_c + 2 * n_c + 4
        closed, parents = _closed_walk_lengths(lam, vset, root, bound)
        pair = _witness_pair(closed)
        if pair is None:
            raise AssertionError("period-1 component without coprime cycle lengths")
        p, q = pair
        walk_p = _recover_walk(parents, root, p)
        walk_q = _recover_walk(parents, root, q)
        params = TileFamilyParams(1, p, q)
        g1 = make_gamma1(params)
        values = {}
        for x in range(p + 1):
            values[g1.class_of[(0, x, 0)]] = walk_p[x][0]
        for x in range(q + 1):
            values[g1.class_of[(1, x, 0)]] = walk_q[x][0]
        gmap = SymbolMap(g1, values)
        return OnedimDecision(True, comp.vertices, comp.period, p, q, gmap)
    return OnedimDecision(False, None, None, None, None, None)
