import json
import subprocess
import sys

import pytest

from bdforest.cli import main
from bdforest.generators import complete_graph, cube_graph
from bdforest.graph_core import dumps


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def o1_file(tmp_path):
    return write(tmp_path / "o1.json", {
        "n": 4,
        "edges": [[0, 1], [1, 2], [2, 3], [0, 2]],
        "forest": [0, 1, 2],
        "star_forest": [3],
    })


def test_decompose_o1(o1_file, tmp_path, capsys):
    code, out, _ = run(["decompose", "--graph", o1_file], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["format"] == 1
    assert data["part1"] == [0, 2, 3] and data["part2"] == [1]
    assert data["max_diameter"] <= 18 and data["max_dipath"] <= 9
    parts = write(tmp_path / "parts.json", data)
    code, out, _ = run(["verify", "--graph", o1_file, "--parts", parts], capsys)
    assert code == 0 and json.loads(out)["ok"]


def test_decompose_separate_input(tmp_path, capsys):
    g = write(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, 2]]})
    d = write(tmp_path / "d.json", {"forest": [0], "star_forest": [1]})
    code, out, _ = run(["decompose", "--graph", g, "--input", d, "--report"], capsys)
    assert code == 0 and json.loads(out)["report"]["ok"]


def test_verify_tampered(o1_file, tmp_path, capsys):
    parts = write(tmp_path / "bad.json", {"part1": [0, 1, 3], "part2": [2]})
    code, out, _ = run(["verify", "--graph", o1_file, "--parts", parts], capsys)
    assert code == 1
    assert json.loads(out)["parts_ok"] == [False, True]


def test_verify_diameter_flag(tmp_path, capsys):
    g = write(tmp_path / "p.json", {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]})
    parts = write(tmp_path / "parts.json", [[0, 1, 2, 3]])
    assert run(["verify", "--graph", g, "--parts", parts, "--diameter", "4"], capsys)[0] == 0
    assert run(["verify", "--graph", g, "--parts", parts, "--diameter", "3"], capsys)[0] == 1


class TestParseErrors:
    def test_bad_json_has_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 3,\n "edges": [[0, 1],\n}')
        code, _, err = run(["arboricity", "--graph", str(bad)], capsys)
        assert code == 2 and "bad.json:3:" in err

    def test_field_diagnostic(self, tmp_path, capsys):
        g = write(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, "x"]]})
        code, _, err = run(["arboricity", "--graph", g], capsys)
        assert code == 2 and "edges[1]" in err

    def test_unknown_edge_in_parts(self, o1_file, tmp_path, capsys):
        parts = write(tmp_path / "p.json", [[0, 1, 2, 3, 17]])
        code, _, err = run(["verify", "--graph", o1_file, "--parts", parts], capsys)
        assert code == 2 and "17" in err

    def test_missing_file(self, capsys):
        assert run(["arboricity", "--graph", "/nonexistent/x.json"], capsys)[0] == 2

    def test_missing_decomposition(self, tmp_path, capsys):
        g = write(tmp_path / "g.json", {"n": 2, "edges": [[0, 1]]})
        code, _, err = run(["decompose", "--graph", g], capsys)
        assert code == 2 and "forest" in err

    def test_bad_outing_input(self, tmp_path, capsys):
        g = write(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]], "forest": [0, 1, 2], "star_forest": []})
        code, _, err = run(["decompose", "--graph", g], capsys)
        assert code == 2 and "cycle" in err

    def test_argparse_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify"])
        assert exc.value.code == 2


def test_gen_counterexample(capsys):
    code, out, _ = run(["gen", "counterexample", "--k", "1"], capsys)
    data = json.loads(out)
    assert code == 0 and data["n"] == 22 and len(data["rotation"]) == 22


def test_pipeline_round_trips(tmp_path, capsys):
    inst = str(tmp_path / "inst.json")
    assert main(["gen", "random-forest-star", "--n", "300", "--seed", "5", "--out", inst]) == 0
    parts = str(tmp_path / "parts.json")
    assert main(["decompose", "--graph", inst, "--out", parts]) == 0
    assert main(["verify", "--graph", inst, "--parts", parts]) == 0

    bounded = str(tmp_path / "bounded.json")
    assert main(["decompose-bounded", "--graph", inst, "--out", bounded]) == 0
    assert main(["verify", "--graph", inst, "--parts", bounded]) == 0

    arb = str(tmp_path / "arb.json")
    assert main(["arboricity", "--graph", inst, "--out", arb]) == 0
    assert main(["verify", "--graph", inst, "--parts", arb, "--diameter", "100000"]) == 0
    capsys.readouterr()


def test_embedding_round_trips(tmp_path, capsys):
    emb = str(tmp_path / "h.json")
    assert main(["gen", "honeycomb", "--rows", "2", "--cols", "2", "--dual", "--out", emb]) == 0
    d1 = str(tmp_path / "d1.json")
    assert main(["dual", "--embedding", emb, "--out", d1]) == 0
    d2 = str(tmp_path / "d2.json")
    assert main(["dual", "--embedding", d1, "--out", d2]) == 0
    assert json.loads(open(d2).read())["n"] == json.loads(open(emb).read())["n"]
    code, out, _ = run(["thin-trees", "--embedding", emb], capsys)
    data = json.loads(out)
    assert code == 0 and data["thin_ok"] is True and not set(data["tree1"]) & set(data["tree2"])

    dec = write(tmp_path / "dec.json", {"forest": data["dual_forest"], "matching": data["dual_matching"]})
    code, out2, _ = run(["thin-trees", "--embedding", emb, "--decomposition", dec], capsys)
    assert code == 0 and out2 == out


def test_thin_trees_precondition(tmp_path, capsys):
    emb = str(tmp_path / "s.json")
    assert main(["gen", "triangulation-strip", "--n", "6", "--out", emb]) == 0
    code, _, err = run(["thin-trees", "--embedding", emb], capsys)
    assert code == 1 and "girth" in err


def test_forest_star_command(tmp_path, capsys):
    cube = write(tmp_path / "cube.json", cube_graph().to_json())
    code, out, _ = run(["forest-star", "--graph", cube], capsys)
    assert code == 0 and json.loads(out)["found"]
    k4 = write(tmp_path / "k4.json", complete_graph(4).to_json())
    code, out, _ = run(["forest-star", "--graph", k4], capsys)
    assert code == 1 and not json.loads(out)["found"]


def test_lower_bound_command(tmp_path, capsys):
    strip = str(tmp_path / "strip.json")
    main(["gen", "triangulation-strip", "--n", "200", "--out", strip])
    code, out, _ = run(["lower-bound", "--graph", strip, "--k", "3", "--d", "2", "--c", "6"], capsys)
    assert code == 0 and json.loads(out)["holds"]
    k4 = write(tmp_path / "k4.json", complete_graph(4).to_json())
    assert run(["lower-bound", "--graph", k4, "--k", "3", "--d", "5", "--c", "6"], capsys)[0] == 1


def test_export_dot(o1_file, tmp_path, capsys):
    parts = write(tmp_path / "p.json", {"part1": [0, 2, 3], "part2": [1]})
    code, out, _ = run(["export-dot", "--graph", o1_file, "--parts", parts], capsys)
    assert code == 0 and out.startswith("graph G {")
    assert 'color="red", style="solid"' in out and 'color="blue"' in out
    assert out.count(" -- ") == 4


def test_decompose_dot_side_output(o1_file, tmp_path, capsys):
    dot = tmp_path / "o1.dot"
    assert main(["decompose", "--graph", o1_file, "--dot", str(dot)]) == 0
    capsys.readouterr()
    assert "part=1" in dot.read_text()


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BDFOREST_OUTPUT_DIR", str(tmp_path / "outdir"))
    assert main(["gen", "counterexample", "--k", "1", "--out", "cx.json"]) == 0
    assert (tmp_path / "outdir" / "cx.json").exists()


def test_canonical_output(capsys):
    _, out, _ = run(["gen", "random-graph", "--n", "6", "--seed", "1"], capsys)
    assert out == dumps(json.loads(out))


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "bdforest.cli", "gen", "counterexample", "--k", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["n"] == 22
