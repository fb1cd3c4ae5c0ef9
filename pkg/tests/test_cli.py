import json

from tilekit.cli import main


def test_color_unsat_exit_code(capsys):
    assert main(["solve", "color", "--gamma", "1", "2", "3", "-k", "3"]) == 1
    out = capsys.readouterr().out
    assert json.loads(out)["status"] == "UNSAT"


def test_color_sat_exit_code(capsys):
    assert main(["solve", "color", "--gamma", "1", "2", "3", "-k", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "SAT"


def test_onedim_decide_preset(capsys):
    assert main(["onedim", "decide", "--preset", "proper-coloring-1d(3)"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["answer"] is True and data["witness_p"] == 2
    assert main(["onedim", "decide", "--preset", "proper-coloring-1d(2)"]) == 1


def test_onedim_decide_file(tmp_path, capsys):
    from tilekit.sft import golden_mean_sft

    f = tmp_path / "gm.json"
    f.write_text(golden_mean_sft().to_json())
    assert main(["onedim", "decide", str(f)]) == 0


def test_verify_fixture(capsys):
    assert main(["verify", "fixture", "four-coloring-1-2-3"]) == 0
    assert main(["verify", "fixture", "nonexistent"]) == 2


def test_gamma_info(capsys):
    assert main(["gamma", "info", "--gamma", "1", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert "vertices: 52" in out


def test_gamma_build_json(capsys):
    assert main(["gamma", "build", "--torus", "2", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["vertices"]) == 4


def test_missing_graph_is_error(capsys):
    assert main(["solve", "color", "-k", "3"]) == 2


def test_homotopy_commands(capsys):
    assert main(["homotopy", "fourcycles", "--graph", "k3"]) == 1  # none found
    assert main(["homotopy", "fourcycles", "--graph", "k4"]) == 0
    assert main(["homotopy", "negweight", "--graph", "k3", "-p", "5"]) == 0
    assert main(["homotopy", "negweight", "--graph", "klein", "-p", "5",
                 "--coeff-bound", "2"]) == 1


def test_homotopy_witness_roundtrip(tmp_path, capsys):
    from tilekit import fixtures

    box = tmp_path / "box.json"
    box.write_text(json.dumps(fixtures.CHVATAL_BOX.to_jsonable()))
    assert main(["homotopy", "witness", "--graph", "chvatal",
                 "--cycle", "0,11,7,2,1,0", "--box", str(box)]) == 0


def test_tile_commands(capsys, tmp_path):
    assert main(["tile", "obstruct", "5", "5", "--tiles", "2x2,2x3,3x2"]) == 0
    assert main(["tile", "obstruct", "4", "4", "--tiles", "2x2"]) == 1
    assert main(["tile", "decide", "13", "13"]) == 0
    assert main(["tile", "box", "6", "4", "--tiles", "2x2,3x3"]) == 0
    assert main(["tile", "torus", "5", "5", "--tiles", "2x2,2x3,3x2"]) == 1
    # budget exhaustion reports unknown
    assert main(["--budget", "5", "tile", "torus", "12", "12",
                 "--tiles", "2x2,3x3"]) == 2


def test_tile_stretch_roundtrip(tmp_path, capsys):
    from tilekit.recttile import lattice_tiling_2_3

    f = tmp_path / "t.json"
    f.write_text(lattice_tiling_2_3().to_json())
    assert main(["tile", "stretch", "--tiling", str(f), "--axis", "x", "-c", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["region"]["w"] == 19


def test_tiler12_fill_and_validate(tmp_path, capsys):
    import random

    from tilekit.grids import TileFamilyParams
    from tilekit.tiler12 import random_boundary_spec

    spec = random_boundary_spec(TileFamilyParams(1, 2, 3), random.Random(1))
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec.to_jsonable()))
    assert main(["tiler12", "fill", str(f)]) == 0
    placements = json.loads(capsys.readouterr().out)
    g = tmp_path / "placements.json"
    g.write_text(json.dumps({
        "region": [spec.width, spec.height],
        "placements": placements,
    }))
    assert main(["tiler12", "validate", "--placements", str(g),
                 "--params", "1", "2", "3"]) == 0


def test_hyper_commands(capsys):
    assert main(["hyper", "gen", "--range", "0", "7"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["bits"] == [0, 1, 1, 0, 1, 0, 0, 1]
    assert main(["hyper", "check", "--s", "2"]) == 0


def test_sft_check_command(tmp_path, capsys):
    from tilekit import fixtures

    g = fixtures.four_coloring_map()
    f = tmp_path / "map.json"
    f.write_text(json.dumps(g.to_jsonable()))
    assert main(["sft", "check", "--preset", "proper-coloring(4)",
                 "--map", str(f), "--gamma", "1", "2", "3"]) == 0
    assert main(["sft", "check", "--preset", "proper-coloring(2)",
                 "--map", str(f), "--gamma", "1", "2", "3"]) == 2  # alphabet overflow


def test_verify_certificate_roundtrip(tmp_path, capsys):
    from tilekit import csp, fixtures

    G = fixtures.gamma(1, 2, 3)
    cert = csp.solve_coloring(G, 4)
    f = tmp_path / "cert.json"
    f.write_text(cert.to_json())
    assert main(["verify", "certificate", "--certificate", str(f),
                 "--gamma", "1", "2", "3"]) == 0


def test_reproduce_filtered(capsys):
    assert main(["reproduce", "--filter", "C12"]) == 0
    out = capsys.readouterr().out
    assert "C12" in out and "PASS" in out
