"""Exact backtracking searches with independently verifiable certificates.

All solvers use the same deterministic discipline: variables ordered by
descending degree with canonical id as tie-breaker, values ascending,
plain backtracking with forward checking.  SAT answers carry a witness
that re-validates by a linear scan; UNSAT answers record the size of the
exhausted search tree.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from tilekit.grids import QuotientGraph, TileFamilyParams
from tilekit.sft import SftSpec, SymbolMap


class BudgetExceeded(Exception):
    """Raised when a solver exceeds its node budget."""


@dataclass(frozen=True)
class TargetGraph:
    """Finite undirected loop-free target graph for homomorphism search."""

    n: int
    edges: tuple
    names: tuple = None

    def __post_init__(self):
        norm = []
        for (u, v) in self.edges:
            if u == v:
                raise ValueError("target graphs may not contain loops")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(set(norm))))
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names length mismatch")

    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for (u, v) in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def to_jsonable(self):
        data = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.names is not None:
            data["names"] = list(self.names)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_jsonable(data) -> "TargetGraph":
        return TargetGraph(
            int(data["n"]),
            tuple(tuple(e) for e in data["edges"]),
            tuple(data["names"]) if data.get("names") else None,
        )

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()


@dataclass
class Certificate:
    """Answer of an exact search together with re-checkable evidence."""

    kind: str
    instance_digest: str
    parameters: dict
    status: str  # "SAT" or "UNSAT"
    witness: object
    nodes: int
    max_depth: int
    deterministic: bool = True

    @property
    def sat(self) -> bool:
        return self.status == "SAT"

    def to_jsonable(self):
        return {
            "statement": {
                "kind": self.kind,
                "instance": self.instance_digest,
                "parameters": self.parameters,
            },
            "status": self.status,
            "witness": self.witness,
            "search": {"nodes": self.nodes, "max_depth": self.max_depth},
            "deterministic": self.deterministic,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))


# -- instance adapters ---------------------------------------------------


def _vid(v) -> str:
    return ",".join(str(c) for c in v) if isinstance(v, tuple) else str(v)


@dataclass
class SimpleInstance:
    ids: list
    adj: list
    loops: list
    digest: str


def simple_view(G) -> SimpleInstance:
    """Collapsed simple undirected view of a quotient or target graph.

    Parallel edges impose identical constraints for coloring, matching
    and homomorphism and are deduplicated; loops are kept on the side.
    """
    if isinstance(G, TargetGraph):
        ids = list(range(G.n))
        adj = [sorted(s) for s in G.adjacency()]
        return SimpleInstance(ids, adj, [], G.digest())
    ids = list(G.vertices)
    index = {v: i for i, v in enumerate(ids)}
    adj = [set() for _ in ids]
    for (u, v) in G.simple_undirected_edges():
        adj[index[u]].add(index[v])
        adj[index[v]].add(index[u])
    loops = [index[u] for u in G.loops()]
    digest = hashlib.sha256(G.to_json().encode()).hexdigest()
    return SimpleInstance(ids, [sorted(s) for s in adj], loops, digest)


def _static_order(adj):
    m = len(adj)
    return sorted(range(m), key=lambda i: (-len(adj[i]), i))


# -- generic forward-checking search --------------------------------------


def _fc_search(adj, order, init_domains, allowed_mask, budget=None):
    """Backtracking with forward checking over bitmask domains.

    allowed_mask[c] restricts a neighbor's domain when a variable takes
    value c.  Returns (assignment list or None, nodes, max_depth).
    """
    m = len(adj)
    domains = list(init_domains)
    assign = [-1] * m
    nodes = 0
    max_depth = 0

    def rec(depth):
        nonlocal nodes, max_depth
        if depth == m:
            return True
        var = order[depth]
        dom = domains[var]
        while dom:
            low = dom & (-dom)
            dom ^= low
            c = low.bit_length() - 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exceeded")
            max_depth = max(max_depth, depth + 1)
            assign[var] = c
            touched = []
            ok = True
            for u in adj[var]:
                if assign[u] != -1:
                    continue
                newdom = domains[u] & allowed_mask[c]
                if newdom != domains[u]:
                    touched.append((u, domains[u]))
                    domains[u] = newdom
                    if newdom == 0:
                        ok = False
                        break
            if ok and rec(depth + 1):
                return True
            for (u, old) in touched:
                domains[u] = old
            assign[var] = -1
        return False

    found = rec(0)
    return (assign if found else None, nodes, max_depth)


# -- vertex coloring -------------------------------------------------------


def _color_certificate(kind, inst, params, k, budget, extra_conflicts=()):
    if k < 1:
        raise ValueError("k must be positive")
    adj = [set(s) for s in inst.adj]
    for (a, b) in extra_conflicts:
        adj[a].add(b)
        adj[b].add(a)
    adj = [sorted(s) for s in adj]
    if inst.loops:
        return Certificate(kind, inst.digest, params, "UNSAT",
                           {"reason": "self-adjacent vertex"}, 0, 0)
    full = (1 << k) - 1
    allowed = [full & ~(1 << c) for c in range(k)]
    order = _static_order(adj)
    assign, nodes, depth = _fc_search(adj, order, [full] * len(adj), allowed, budget)
    if assign is None:
        return Certificate(kind, inst.digest, params, "UNSAT",
                           {"reason": "exhaustive search"}, nodes, depth)
    witness = {_vid(inst.ids[i]): assign[i] for i in range(len(adj))}
    return Certificate(kind, inst.digest, params, "SAT", witness, nodes, depth)


def solve_coloring(G, k: int, budget=None) -> Certificate:
    """Proper vertex k-coloring of the collapsed simple view of G."""
    inst = simple_view(G)
    return _color_certificate("coloring", inst, {"k": k}, k, budget)


# -- edge coloring ---------------------------------------------------------


def edge_slot_classes(G: QuotientGraph):
    """Edge classes of the generator structure of G.

    Each vertex carries one color slot per signed generator; the slot
    (v, g, +) is identified with (w, g, -) whenever the tagged edge
    v -> w with generator g exists.  The classes are the objects an edge
    coloring assigns colors to.
    """
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx

    slots_of = {v: [] for v in G.vertices}
    for v in G.vertices:
        for g in range(G.dim):
            for s in (1, -1):
                if G.successors(v, g, s):
                    slot = (v, g, s)
                    parent[slot] = slot
                    slots_of[v].append(slot)
    for (u, v), tags in G.edge_tags.items():
        for (g, s) in tags:
            union((u, g, s), (v, g, -s))
    classes = {}
    for slot in parent:
        classes.setdefault(find(slot), []).append(slot)
    reps = sorted(classes)
    return reps, {slot: find(slot) for slot in parent}, slots_of


def _slot_id(slot) -> str:
    v, g, s = slot
    return _vid(v) + "|" + f"e{g + 1}" + ("" if s > 0 else "-")


def solve_edge_coloring(G: QuotientGraph, k: int, budget=None) -> Certificate:
    """Proper edge k-coloring: the slot classes at each vertex get
    pairwise distinct colors."""
    reps, rep_of, slots_of = edge_slot_classes(G)
    index = {r: i for i, r in enumerate(reps)}
    adj = [set() for _ in reps]
    clash = False
    for v in G.vertices:
        cs = [index[rep_of[s]] for s in slots_of[v]]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if cs[i] == cs[j]:
                    clash = True
                else:
                    adj[cs[i]].add(cs[j])
                    adj[cs[j]].add(cs[i])
    digest = hashlib.sha256(G.to_json().encode()).hexdigest()
    params = {"k": k}
    if clash:
        return Certificate("edge-coloring", digest, params, "UNSAT",
                           {"reason": "edge class adjacent to itself"}, 0, 0)
    inst = SimpleInstance([_slot_id(r) for r in reps], [sorted(s) for s in adj], [], digest)
    return _color_certificate("edge-coloring", inst, params, k, budget)


# -- graph homomorphism ----------------------------------------------------


def solve_hom(G, H: TargetGraph, budget=None) -> Certificate:
    """Vertex map of G into H sending edges to edges."""
    inst = simple_view(G)
    digest = hashlib.sha256((inst.digest + "|" + H.digest()).encode()).hexdigest()
    params = {"target": H.digest()}
    if inst.loops:
        return Certificate("hom", digest, params, "UNSAT",
                           {"reason": "self-adjacent vertex"}, 0, 0)
    hadj = H.adjacency()
    allowed = [sum(1 << w for w in hadj[c]) for c in range(H.n)]
    full = (1 << H.n) - 1
    order = _static_order(inst.adj)
    assign, nodes, depth = _fc_search(inst.adj, order, [full] * len(inst.adj), allowed, budget)
    if assign is None:
        return Certificate("hom", digest, params, "UNSAT",
                           {"reason": "exhaustive search"}, nodes, depth)
    witness = {_vid(inst.ids[i]): assign[i] for i in range(len(inst.adj))}
    return Certificate("hom", digest, params, "SAT", witness, nodes, depth)


# -- perfect matching ------------------------------------------------------


def solve_matching(G, budget=None) -> Certificate:
    """Perfect matching of the collapsed simple view of G."""
    inst = simple_view(G)
    params = {}
    m = len(inst.ids)
    if m % 2 == 1:
        return Certificate("matching", inst.digest, params, "UNSAT",
                           {"reason": "odd vertex count"}, 0, 0)
    adj = inst.adj
    mate = [-1] * m
    nodes = 0
    max_depth = 0

    def rec(depth):
        nonlocal nodes, max_depth
        try:
            u = mate.index(-1)
        except ValueError:
            return True
        for w in adj[u]:
            if mate[w] != -1:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exceeded")
            max_depth = max(max_depth, depth + 1)
            mate[u] = w
            mate[w] = u
            if rec(depth + 1):
                return True
            mate[u] = -1
            mate[w] = -1
        return False

    if rec(0):
        pairs = sorted({tuple(sorted((i, mate[i]))) for i in range(m)})
        witness = [[_vid(inst.ids[a]), _vid(inst.ids[b])] for (a, b) in pairs]
        return Certificate("matching", inst.digest, params, "SAT", witness, nodes, max_depth)
    return Certificate("matching", inst.digest, params, "UNSAT",
                       {"reason": "exhaustive search"}, nodes, max_depth)


# -- subshift-respecting symbol maps ---------------------------------------


def _grid_placements(G: QuotientGraph, spec: SftSpec):
    """Per forbidden pattern, the class tuples of all in-grid placements."""
    placements = []
    for p in spec.patterns:
        pw, ph = p.dims
        cells = [(x, y) for y in range(ph) for x in range(pw)]
        values = tuple(p.value(x, y) for (x, y) in cells)
        for i, grid in enumerate(G.grids):
            if pw > grid.width or ph > grid.height:
                continue
            for y0 in range(grid.height - ph + 1):
                for x0 in range(grid.width - pw + 1):
                    classes = tuple(G.class_of[(i, x0 + x, y0 + y)] for (x, y) in cells)
                    placements.append((classes, values))
    return placements


def solve_sft_map(G: QuotientGraph, spec: SftSpec, budget=None) -> Certificate:
    """Symbol map on a twelve-tile quotient graph respecting the subshift.

    Requires the graph parameter n to be at least the subshift width, so
    that pattern placements inside the constituent grids are exhaustive.
    """
    if spec.dim != 2:
        raise ValueError("expected a two-dimensional subshift")
    n = G.meta.get("n")
    if G.grids is None or n is None:
        raise ValueError("expected a quotient graph built from tile grids")
    if n < spec.width():
        raise ValueError("solver requires n >= subshift width")
    digest = hashlib.sha256((G.to_json() + "|" + spec.to_json()).encode()).hexdigest()
    params = {"sft": spec.to_jsonable()}

    ids = list(G.vertices)
    index = {v: i for i, v in enumerate(ids)}
    m = len(ids)
    placements = _grid_placements(G, spec)
    by_var = [[] for _ in range(m)]
    dedup = sorted({(tuple(index[c] for c in cls), vals) for (cls, vals) in placements})
    for pi, (cls, vals) in enumerate(dedup):
        for c in set(cls):
            by_var[c].append(pi)
    constraints = dedup

    deg = [len(by_var[i]) for i in range(m)]
    order = sorted(range(m), key=lambda i: (-deg[i], i))
    assign = [-1] * m
    nodes = 0
    max_depth = 0

    def violated(pi):
        cls, vals = constraints[pi]
        return all(assign[c] == v for c, v in zip(cls, vals))

    def rec(depth):
        nonlocal nodes, max_depth
        if depth == m:
            return True
        var = order[depth]
        for c in range(spec.b):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exceeded")
            max_depth = max(max_depth, depth + 1)
            assign[var] = c
            if not any(violated(pi) for pi in by_var[var]):
                if rec(depth + 1):
                    return True
            assign[var] = -1
        return False

    if rec(0):
        witness = {_vid(ids[i]): assign[i] for i in range(m)}
        return Certificate("sft-map", digest, params, "SAT", witness, nodes, max_depth)
    return Certificate("sft-map", digest, params, "UNSAT",
                       {"reason": "exhaustive search"}, nodes, max_depth)


# -- bounded monochromatic components ---------------------------------------


def check_mono_bound(params: TileFamilyParams, g: SymbolMap, bound: int) -> bool:
    """Audit the finite sufficient condition for bounded components.

    Within every tile grid graph: all monochromatic components have size
    at most the bound; components meeting a labeled block have size at
    most 2; and no labeled cell has an interior neighbor of equal color
    (so components never leak from the frame into an interior).
    """
    if any(v not in (0, 1) for v in g.values.values()):
        raise ValueError("expected a two-valued symbol map")
    G = g.graph
    for i, grid in enumerate(G.grids):
        w, h = grid.width, grid.height
        val = [[g.value_at(i, x, y) for y in range(h)] for x in range(w)]
        seen = [[False] * h for _ in range(w)]
        for sx in range(w):
            for sy in range(h):
                if seen[sx][sy]:
                    continue
                color = val[sx][sy]
                comp = []
                stack = [(sx, sy)]
                seen[sx][sy] = True
                while stack:
                    (x, y) = stack.pop()
                    comp.append((x, y))
                    for (nx, ny) in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                        if 0 <= nx < w and 0 <= ny < h and not seen[nx][ny] \
                                and val[nx][ny] == color:
                            seen[nx][ny] = True
                            stack.append((nx, ny))
                if len(comp) > bound:
                    return False
                labeled = [c for c in comp if not grid.label_of[c][0].is_interior]
                if labeled and len(comp) > 2:
                    return False
        for x in range(w):
            for y in range(h):
                if grid.label_of[(x, y)][0].is_interior:
                    continue
                for (nx, ny) in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if 0 <= nx < w and 0 <= ny < h \
                            and grid.label_of[(nx, ny)][0].is_interior \
                            and val[nx][ny] == val[x][y]:
                        return False
    return True


# -- certificate verification -----------------------------------------------


def verify_certificate(cert: Certificate, instance, target: TargetGraph = None) -> bool:
    """Independent linear re-validation of a certificate.

    SAT witnesses are re-checked against the instance without any search;
    UNSAT certificates are checked for digest match and exhaustion
    metadata.  A digest mismatch raises ValueError.
    """
    if isinstance(instance, tuple):
        instance, target = instance

    if cert.kind == "sft-map":
        spec = SftSpec.from_jsonable(cert.parameters["sft"])
        digest = hashlib.sha256((instance.to_json() + "|" + spec.to_json()).encode()).hexdigest()
    elif cert.kind == "hom":
        inst = simple_view(instance)
        digest = hashlib.sha256((inst.digest + "|" + target.digest()).encode()).hexdigest()
    else:
        inst = simple_view(instance)
        digest = inst.digest
    if digest != cert.instance_digest:
        raise ValueError("certificate digest does not match the instance")

    if cert.status == "UNSAT":
        return isinstance(cert.witness, dict) and "reason" in cert.witness \
            and cert.nodes >= 0

    if cert.kind == "coloring":
        inst = simple_view(instance)
        k = cert.parameters["k"]
        w = cert.witness
        for i, v in enumerate(inst.ids):
            c = w.get(_vid(v))
            if c is None or not (0 <= c < k):
                return False
        if inst.loops:
            return False
        for i, nbrs in enumerate(inst.adj):
            for j in nbrs:
                if w[_vid(inst.ids[i])] == w[_vid(inst.ids[j])]:
                    return False
        return True

    if cert.kind == "edge-coloring":
        k = cert.parameters["k"]
        reps, rep_of, slots_of = edge_slot_classes(instance)
        w = cert.witness
        for r in reps:
            c = w.get(_slot_id(r))
            if c is None or not (0 <= c < k):
                return False
        for v in instance.vertices:
            colors = [w[_slot_id(rep_of[s])] for s in slots_of[v]]
            if len(set(colors)) != len(colors):
                return False
        return True

    if cert.kind == "hom":
        inst = simple_view(instance)
        w = cert.witness
        index = {_vid(v): i for i, v in enumerate(inst.ids)}
        for v in inst.ids:
            c = w.get(_vid(v))
            if c is None or not (0 <= c < target.n):
                return False
        eset = set(target.edges)
        for i, nbrs in enumerate(inst.adj):
            for j in nbrs:
                a, b = w[_vid(inst.ids[i])], w[_vid(inst.ids[j])]
                if (min(a, b), max(a, b)) not in eset:
                    return False
        return True

    if cert.kind == "matching":
        inst = simple_view(instance)
        index = {_vid(v): i for i, v in enumerate(inst.ids)}
        used = set()
        for (a, b) in cert.witness:
            ia, ib = index[a], index[b]
            if ib not in inst.adj[ia]:
                return False
            if ia in used or ib in used:
                return False
            used.update((ia, ib))
        return len(used) == len(inst.ids)

    if cert.kind == "sft-map":
        spec = SftSpec.from_jsonable(cert.parameters["sft"])
        values = {}
        w = cert.witness
        for v in instance.vertices:
            c = w.get(_vid(v))
            if c is None:
                return False
            values[v] = c
        from tilekit.sft import respects

        return respects(SymbolMap(instance, values), spec)

    raise ValueError(f"unknown certificate kind {cert.kind!r}")


# -- DIMACS export ------------------------------------------------------------


def coloring_to_dimacs(G, k: int) -> str:
    """CNF encoding of the k-coloring instance in DIMACS format.

    Variable v*k + c + 1 means vertex v takes color c.  Clauses are
    at-least-one-color per vertex and per-edge conflict clauses; the
    at-most-one constraint is omitted (any model projects to a coloring).
    """
    inst = simple_view(G)
    m = len(inst.ids)

    def var(i, c):
        return i * k + c + 1

    clauses = []
    for i in range(m):
        clauses.append([var(i, c) for c in range(k)])
    for i, nbrs in enumerate(inst.adj):
        for j in nbrs:
            if i < j:
                for c in range(k):
                    clauses.append([-var(i, c), -var(j, c)])
    for i in inst.loops:
        for c in range(k):
            clauses.append([-var(i, c)])
    lines = [f"c coloring instance {inst.digest[:16]} k={k}"]
    lines.append(f"p cnf {m * k} {len(clauses)}")
    for cl in clauses:
        lines.append(" ".join(str(x) for x in cl) + " 0")
    return "\n".join(lines) + "\n"
