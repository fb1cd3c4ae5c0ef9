"""Command-line front end.

Exit codes follow the decision semantics: 0 for SAT/true, 1 for
UNSAT/false, 2 for errors or unknown.  Output is deterministic; wall
times appear only in the report envelope, never in certificate bodies.
"""

from __future__ import annotations

import argparse
import json
import sys

from tilekit import csp, fixtures, homotopy, hyper, onedim, recttile, render, sft, tiler12
from tilekit.grids import TileFamilyParams, make_gamma, make_gamma1, make_torus

EXIT_SAT = 0
EXIT_UNSAT = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def _graph_from_args(args):
    if getattr(args, "gamma", None):
        n, p, q = args.gamma
        return make_gamma(TileFamilyParams(n, p, q))
    if getattr(args, "gamma1", None):
        n, p, q = args.gamma1
        return make_gamma1(TileFamilyParams(n, p, q))
    if getattr(args, "torus", None):
        return make_torus(list(args.torus))
    raise CliError("specify a graph with --gamma N P Q or --torus A B [C ...]")


def _add_graph_args(sub, gamma1=False):
    sub.add_argument("--gamma", nargs=3, type=int, metavar=("N", "P", "Q"))
    sub.add_argument("--torus", nargs="+", type=int, metavar="DIM")
    if gamma1:
        sub.add_argument("--gamma1", nargs=3, type=int, metavar=("N", "P", "Q"))


def _target_from_arg(text):
    if text in fixtures.EXAMPLE_GRAPHS:
        return fixtures.EXAMPLE_GRAPHS[text]()
    with open(text) as fh:
        return csp.TargetGraph.from_jsonable(json.load(fh))


def _load_sft(args):
    if getattr(args, "preset", None):
        return sft.preset(args.preset)
    if getattr(args, "sft", None):
        with open(args.sft) as fh:
            return sft.SftSpec.from_jsonable(json.load(fh))
    raise CliError("specify a subshift with --preset NAME or --sft FILE")


def _emit(args, payload, text=None):
    if args.json or text is None:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _cert_exit(cert):
    return EXIT_SAT if cert.sat else EXIT_UNSAT


# -- subcommand handlers ---------------------------------------------------------


def cmd_gamma(args):
    G = _graph_from_args(args)
    if args.action == "build":
        print(G.to_json())
    else:
        _emit(args, G.to_jsonable() if args.json else None, render.graph_info(G))
    return EXIT_SAT


def cmd_sft_check(args):
    spec = _load_sft(args)
    G = _graph_from_args(args)
    with open(args.map) as fh:
        raw = json.load(fh)
    values = {tuple(entry["id"]): entry["value"] for entry in raw}
    g = sft.SymbolMap(G, values)
    ok = sft.respects(g, spec) if spec.dim == 2 else sft.respects_1d(g, spec)
    hyp = sft.within_hypothesis(G, spec)
    _emit(args, {"respects": ok, "within_width_hypothesis": hyp},
          f"respects: {ok} (within width hypothesis: {hyp})")
    return EXIT_SAT if ok else EXIT_UNSAT


def cmd_solve(args):
    G = _graph_from_args(args)
    budget = args.budget
    try:
        if args.problem == "color":
            cert = csp.solve_coloring(G, args.k, budget=budget)
        elif args.problem == "edge-color":
            cert = csp.solve_edge_coloring(G, args.k, budget=budget)
        elif args.problem == "hom":
            cert = csp.solve_hom(G, _target_from_arg(args.target), budget=budget)
        elif args.problem == "match":
            cert = csp.solve_matching(G, budget=budget)
        elif args.problem == "sft":
            cert = csp.solve_sft_map(G, _load_sft(args), budget=budget)
        else:
            raise CliError(f"unknown solve problem {args.problem!r}")
    except csp.BudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(cert.to_json())
    return _cert_exit(cert)


def cmd_solve_mono(args):
    n, p, q = args.params
    params = TileFamilyParams(n, p, q)
    G = fixtures.gamma(n, p, q)
    with open(args.map) as fh:
        raw = json.load(fh)
    values = {tuple(entry["id"]): entry["value"] for entry in raw}
    g = sft.SymbolMap(G, values)
    ok = csp.check_mono_bound(params, g, args.bound)
    _emit(args, {"bounded": ok, "bound": args.bound}, f"bounded by {args.bound}: {ok}")
    return EXIT_SAT if ok else EXIT_UNSAT


def cmd_onedim(args):
    spec = _load_sft(args)
    decision = onedim.decide_onedim(spec)
    print(json.dumps(decision.to_jsonable(), sort_keys=True))
    return EXIT_SAT if decision.answer else EXIT_UNSAT


def cmd_homotopy(args):
    H = _target_from_arg(args.graph)
    if args.action == "fourcycles":
        cycles = homotopy.nontrivial_4cycles(H)
        _emit(args, [list(c) for c in cycles], "\n".join(str(c) for c in cycles) or "none")
        return EXIT_SAT if cycles else EXIT_UNSAT
    if args.action == "nullspace":
        basis = homotopy.weight_nullspace(H)
        _emit(args, {"dimension": len(basis), "basis": [list(v) for v in basis]},
              f"dimension {len(basis)}")
        return EXIT_SAT
    if args.action == "negweight":
        if args.weights:
            with open(args.weights) as fh:
                w = homotopy.Weighting(H, tuple(json.load(fh)["weights"]))
            ok = homotopy.negative_weight_holds(H, w, args.p)
            _emit(args, {"holds": ok, "p": args.p}, f"holds for p={args.p}: {ok}")
            return EXIT_SAT if ok else EXIT_UNSAT
        w = homotopy.negative_weight_search(H, args.p, args.coeff_bound)
        if w is None:
            _emit(args, {"found": None}, "none found (inconclusive)")
            return EXIT_UNSAT
        _emit(args, w.to_jsonable(), f"weights: {list(w.weights)}")
        return EXIT_SAT
    if args.action == "witness":
        gamma = tuple(int(x) for x in args.cycle.split(","))
        with open(args.box) as fh:
            box = homotopy.WitnessBox(tuple(tuple(r) for r in json.load(fh)))
        ok = homotopy.verify_order2_witness(H, gamma, box)
        _emit(args, {"valid": ok}, f"witness box valid: {ok}")
        return EXIT_SAT if ok else EXIT_UNSAT
    if args.action == "search-witness":
        gamma = tuple(int(x) for x in args.cycle.split(","))
        box = homotopy.search_order2_witness(H, gamma, args.max_rows, args.max_cols)
        if box is None:
            _emit(args, {"found": None}, "none found within bounds (inconclusive)")
            return EXIT_UNSAT
        _emit(args, box.to_jsonable(), "\n".join(" ".join(map(str, r)) for r in box.rows))
        return EXIT_SAT
    raise CliError(f"unknown homotopy action {args.action!r}")


def _tileset_from_arg(text):
    tiles = []
    for part in text.split(","):
        w, h = part.lower().split("x")
        tiles.append((int(w), int(h)))
    return recttile.RectTileSet(tuple(tiles))


def cmd_tile(args):
    if args.action in ("torus", "box"):
        region = (recttile.torus if args.action == "torus" else recttile.box)(
            args.dims[0], args.dims[1])
        tiles = _tileset_from_arg(args.tiles)
        try:
            cert = recttile.solve_rect_tiling(region, tiles, budget=args.budget)
        except csp.BudgetExceeded as exc:
            print(f"unknown: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if cert.sat and args.ascii:
            t = recttile.tiling_from_certificate(region, tiles, cert)
            print(render.tiling_ascii(t))
        else:
            print(cert.to_json())
        return _cert_exit(cert)
    if args.action == "stretch":
        with open(args.tiling) as fh:
            t = recttile.RegionTiling.from_jsonable(json.load(fh))
        out = recttile.stretch_tiling(t, args.axis, args.c)
        print(out.to_json())
        return EXIT_SAT
    if args.action == "obstruct":
        region = recttile.torus(args.dims[0], args.dims[1])
        ob = recttile.area_obstruction(region, _tileset_from_arg(args.tiles))
        _emit(args, ob, f"obstruction: {ob}")
        return EXIT_SAT if ob else EXIT_UNSAT
    if args.action == "decide":
        d = recttile.decide_ss_torus(args.dims[0], args.dims[1], budget=args.budget or 2_000_000)
        payload = {"answer": d.answer, "method": d.method}
        if d.tiling is not None and args.json:
            payload["tiling"] = d.tiling.to_jsonable()
        _emit(args, payload, f"answer: {d.answer} via {d.method}")
        if d.answer is None:
            return EXIT_ERROR
        return EXIT_SAT if d.answer else EXIT_UNSAT
    if args.action == "longtile":
        # open experiment: tile one long quotient tile by squares
        n, p, q = args.dims
        from tilekit.grids import make_tile_grid, quotient as quotient_grids

        G = quotient_grids([make_tile_grid(args.tile_index,
                                           TileFamilyParams(n, p, q))])
        try:
            cert = recttile.quotient_tiling_search(
                G, _tileset_from_arg(args.tiles), budget=args.budget or 5_000_000)
        except csp.BudgetExceeded as exc:
            print(f"unknown: {exc}", file=sys.stderr)
            return EXIT_ERROR
        print(cert.to_json())
        return _cert_exit(cert)
    raise CliError(f"unknown tile action {args.action!r}")


def cmd_tiler12(args):
    if args.action == "fill":
        with open(args.spec) as fh:
            spec = tiler12.BoundarySpec.from_jsonable(json.load(fh))
        try:
            placements = tiler12.fill_rectangle(spec)
        except tiler12.InfeasibleSpec as exc:
            print(f"infeasible: {exc}", file=sys.stderr)
            return EXIT_ERROR
        if args.ascii:
            print(render.placements_ascii(placements, (spec.width, spec.height), spec.params))
        else:
            print(json.dumps([[p.tile, list(p.anchor)] for p in placements]))
        return EXIT_SAT
    if args.action == "validate":
        with open(args.placements) as fh:
            data = json.load(fh)
        n, p, q = args.params
        params = TileFamilyParams(n, p, q)
        placements = [tiler12.Placement12(t, tuple(xy)) for (t, xy) in data["placements"]]
        ok = tiler12.validate_tiling12(placements, tuple(data["region"]), params)
        _emit(args, {"valid": ok}, f"valid: {ok}")
        return EXIT_SAT if ok else EXIT_UNSAT
    if args.action == "minsep":
        n, p, q = args.params
        params = TileFamilyParams(n, p, q)
        result = _min_separation_experiment(params)
        _emit(args, result, f"empirical minimum corner margin (units): {result}")
        return EXIT_SAT
    raise CliError(f"unknown tiler12 action {args.action!r}")


def _min_separation_experiment(params):
    """Smallest corner margin (in plain units) for which a one-rare-block
    spec still fills, reported per side orientation.  Experimental data,
    not a claim."""
    q = params.q
    out = {}
    for margin in range(3 * q, 0, -1):
        top = "c" * margin + "d" + "c" * margin
        spec = tiler12.BoundarySpec(
            params, top, top, "a" * len(top), "a" * len(top), separation=0)
        try:
            pls = tiler12.fill_rectangle(spec)
            if tiler12.validate_tiling12(pls, (spec.width, spec.height), params):
                out["corner_margin_units"] = margin
            else:
                break
        except (tiler12.InfeasibleSpec, ValueError):
            break
    return out


def cmd_hyper(args):
    if args.action == "gen":
        a, b = args.range
        w = hyper.tm_window(a, b)
        print(json.dumps(w.to_jsonable()))
        return EXIT_SAT
    if args.action == "check":
        s = args.s
        if s == 0:
            raise CliError("shift must be nonzero")
        half = args.half_width or 64 * abs(s)
        window = hyper.tm_window(-half, half)
        ok = hyper.verify_witness(window, s, hyper.standard_offsets(s))
        _emit(args, {"shift": s, "witnessed": ok}, f"shift {s} witnessed: {ok}")
        return EXIT_SAT if ok else EXIT_UNSAT
    raise CliError(f"unknown hyper action {args.action!r}")


def cmd_verify(args):
    if args.action == "fixture":
        ok = fixtures.check_fixture(args.name)
        prov = fixtures.FIXTURES[args.name]["provenance"]
        _emit(args, {"fixture": args.name, "valid": ok, "provenance": prov},
              f"{args.name}: {ok} ({prov})")
        return EXIT_SAT if ok else EXIT_UNSAT
    if args.action == "certificate":
        with open(args.certificate) as fh:
            data = json.load(fh)
        cert = csp.Certificate(
            data["statement"]["kind"], data["statement"]["instance"],
            data["statement"]["parameters"], data["status"], data["witness"],
            data["search"]["nodes"], data["search"]["max_depth"],
            data.get("deterministic", True),
        )
        G = _graph_from_args(args)
        target = _target_from_arg(args.target) if args.target else None
        ok = csp.verify_certificate(cert, G, target)
        _emit(args, {"valid": ok}, f"certificate valid: {ok}")
        return EXIT_SAT if ok else EXIT_UNSAT
    raise CliError(f"unknown verify action {args.action!r}")


def cmd_reproduce(args):
    from tilekit.report import format_report, run_criteria, write_report

    rows = run_criteria(filter_text=args.filter or "", full=args.full)
    print(format_report(rows))
    if args.out_dir:
        path, figs = write_report(rows, args.out_dir)
        print(f"report: {path}")
        for f in figs:
            print(f"figure: {f}")
    return EXIT_SAT if all(r[2] for r in rows) else EXIT_UNSAT


# -- parser -----------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="tilekit")
    ap.add_argument("--json", action="store_true", help="JSON output where applicable")
    ap.add_argument("--ascii", action="store_true", help="ASCII rendering where applicable")
    ap.add_argument("--seedless", action="store_true",
                    help="reject any operation that would need fresh randomness")
    ap.add_argument("--budget", type=int, default=None, help="search node budget")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="build or inspect quotient graphs")
    g.add_argument("action", choices=("build", "info"))
    _add_graph_args(g, gamma1=True)
    g.set_defaults(fn=cmd_gamma)

    s = sub.add_parser("sft", help="subshift checks")
    s.add_argument("action", choices=("check",))
    s.add_argument("--preset")
    s.add_argument("--sft")
    s.add_argument("--map", required=True, help="symbol map JSON")
    _add_graph_args(s, gamma1=True)
    s.set_defaults(fn=cmd_sft_check)

    so = sub.add_parser("solve", help="exact searches with certificates")
    so.add_argument("problem", choices=("color", "edge-color", "hom", "match", "sft", "mono"))
    so.add_argument("-k", type=int, default=4)
    so.add_argument("--target", help="target graph name or JSON file")
    so.add_argument("--preset")
    so.add_argument("--sft")
    so.add_argument("--params", nargs=3, type=int, metavar=("N", "P", "Q"))
    so.add_argument("--map")
    so.add_argument("--bound", type=int, default=3)
    _add_graph_args(so)
    so.set_defaults(fn=lambda a: cmd_solve_mono(a) if a.problem == "mono" else cmd_solve(a))

    od = sub.add_parser("onedim", help="one-dimensional subshift decision")
    od.add_argument("action", choices=("decide",))
    od.add_argument("sft", nargs="?", help="subshift JSON file")
    od.add_argument("--preset")
    od.set_defaults(fn=cmd_onedim)

    ho = sub.add_parser("homotopy", help="homomorphism obstruction calculus")
    ho.add_argument("action", choices=("fourcycles", "nullspace", "negweight",
                                       "witness", "search-witness"))
    ho.add_argument("--graph", required=True, help="example name or JSON file")
    ho.add_argument("-p", type=int, default=5)
    ho.add_argument("--coeff-bound", type=int, default=1)
    ho.add_argument("--weights", help="weighting JSON file")
    ho.add_argument("--cycle", help="comma-separated closed walk")
    ho.add_argument("--box", help="witness box JSON file")
    ho.add_argument("--max-rows", type=int, default=6)
    ho.add_argument("--max-cols", type=int, default=8)
    ho.set_defaults(fn=cmd_homotopy)

    ti = sub.add_parser("tile", help="rectangle tilings of boxes and tori")
    ti.add_argument("action",
                    choices=("torus", "box", "stretch", "obstruct", "decide", "longtile"))
    ti.add_argument("dims", nargs="*", type=int)
    ti.add_argument("--tiles", default="2x2,3x3")
    ti.add_argument("--tiling", help="tiling JSON file (stretch)")
    ti.add_argument("--axis", choices=("x", "y"), default="x")
    ti.add_argument("-c", type=int, default=1)
    ti.add_argument("--tile-index", type=int, default=9,
                    help="quotient tile for the longtile experiment")
    ti.set_defaults(fn=cmd_tile)

    t12 = sub.add_parser("tiler12", help="twelve-tile boundary fills")
    t12.add_argument("action", choices=("fill", "validate", "minsep"))
    t12.add_argument("spec", nargs="?", help="boundary spec JSON (fill)")
    t12.add_argument("--placements", help="placements JSON (validate)")
    t12.add_argument("--params", nargs=3, type=int, metavar=("N", "P", "Q"))
    t12.set_defaults(fn=cmd_tiler12)

    hy = sub.add_parser("hyper", help="aperiodicity witness windows")
    hy.add_argument("action", choices=("gen", "check"))
    hy.add_argument("--range", nargs=2, type=int, metavar=("A", "B"))
    hy.add_argument("--s", type=int, default=1)
    hy.add_argument("--half-width", type=int)
    hy.set_defaults(fn=cmd_hyper)

    ve = sub.add_parser("verify", help="re-validate fixtures and certificates")
    ve.add_argument("action", choices=("fixture", "certificate"))
    ve.add_argument("name", nargs="?", help="fixture name")
    ve.add_argument("--certificate", help="certificate JSON file")
    ve.add_argument("--target", help="target graph for hom certificates")
    _add_graph_args(ve)
    ve.set_defaults(fn=cmd_verify)

    rp = sub.add_parser("reproduce", help="run every acceptance criterion")
    rp.add_argument("--filter", help="substring filter on criterion ids")
    rp.add_argument("--full", action="store_true", help="include the slow searches")
    rp.add_argument("--out-dir", help="write report.csv and figures here")
    rp.set_defaults(fn=cmd_reproduce)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
