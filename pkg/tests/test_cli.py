import json

import bisectlab as bl
from bisectlab import generators as gen
from bisectlab.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_and_check(tmp_path, capsys):
    path = str(tmp_path / "c8.txt")
    code, _ = _run(capsys, "gen", "cycle", "--n", "8", "--out", path)
    assert code == 0
    assert bl.load_graph(path) == gen.cycle(8)

    code, out = _run(capsys, "check", path)
    assert code == 0
    report = json.loads(out)
    assert report["free"] and report["min_degree"] == 2


def test_check_flags_forbidden_cycles(tmp_path, capsys):
    path = str(tmp_path / "c6.txt")
    bl.save_graph(gen.cycle(6), path)
    code, out = _run(capsys, "check", path)
    assert code == 1
    assert json.loads(out)["witness_cycle"]


def test_gen_families(tmp_path, capsys):
    code, out = _run(capsys, "gen", "tutte-coxeter")
    assert code == 0 and bl.parse_graph(out).n == 30
    code, out = _run(capsys, "gen", "two-subdivision", "k4")
    assert code == 0 and bl.parse_graph(out).n == 16
    code, out = _run(capsys, "gen", "random", "--n", "14", "--target-m", "18",
                     "--seed", "2")
    assert code == 0 and bl.is_free(bl.parse_graph(out), (4, 6))[0]


def test_bisect_round_trip(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    bl.save_graph(gen.cycle(8), path)
    code, out = _run(capsys, "bisect", path, "--seed", "3", "--restarts", "100")
    assert code == 0
    report = json.loads(out)
    assert report["cut_size"] == 8 and report["audit_ok"]
    assert set(report) >= {"seed", "cut_size", "stage1_cut", "sides", "active_pairs"}

    code2, out2 = _run(capsys, "bisect", path, "--seed", "3", "--restarts", "100")
    assert out == out2  # byte-identical reports for a fixed seed


def test_prob_subcommand(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    bl.save_graph(gen.path_graph(4), path)
    code, out = _run(capsys, "prob", path, "1", "2", "--samples", "2000")
    assert code == 0
    report = json.loads(out)
    assert report["cut_probability"] == "3/4" == report["identity"]
    assert abs(report["estimate"] - 0.75) < 0.1


def test_prob_rejects_matching_edges(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    bl.save_graph(gen.path_graph(4), path)
    code = main(["prob", path, "0", "1"])
    assert code == 2


def test_analyze_subcommand(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    bl.save_graph(gen.cycle(8), path)
    code, out = _run(capsys, "analyze", path, "--xi", "1/32")
    assert code == 0
    report = json.loads(out)
    assert report["edge_partition_summary"]["e1"] == 4
    assert report["degeneracy_chain"]["ok"]
    assert report["bounds"]["hou_yan"] == "23/4"


def test_lemmas_exit_code_reflects_violations(tmp_path, capsys):
    code, out = _run(capsys, "lemmas", "--t-max", "2", "--s-max", "4")
    report = json.loads(out)
    # the t = -1 boundary counterexamples put eight-term violations in range
    assert report["eight-term"]["violations"]
    assert code == 1

    code, out = _run(capsys, "lemmas", "--t-max", "0", "--s-max", "3")
    assert json.loads(out)["shifted-four-term"]["violations"] == []


def test_oracle_subcommand(tmp_path, capsys):
    path = str(tmp_path / "g.txt")
    bl.save_graph(gen.petersen(), path)
    code, out = _run(capsys, "oracle", path)
    assert code == 0
    report = json.loads(out)
    assert report["max_matching"] == 5


def test_experiment_json_and_csv(tmp_path, capsys):
    config = {
        "corpus": [
            {"generator": "cycle", "n": 8},
            {"generator": "random_free", "n": 12, "target_m": 14, "seed": 0},
        ],
        "seed": 1,
        "restarts": 60,
        "bounds": {"xi": "1/32", "c": 1, "k": 3},
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))

    code, out = _run(capsys, "experiment", "--config", str(cfg_path))
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["total"] == 2 and report["ok"]

    code, out = _run(capsys, "experiment", "--config", str(cfg_path),
                     "--format", "csv")
    assert code == 0
    header = out.splitlines()[0]
    assert header == "graph_id,n,m,best_cut,hou_yan_bound,shearer_bound,passed"


def test_missing_file_is_usage_error(capsys):
    assert main(["check", "/nonexistent/path.txt"]) == 2


def test_malformed_graph_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 0\n")
    assert main(["check", str(path)]) == 2
