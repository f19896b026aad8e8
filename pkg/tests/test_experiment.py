import json

from bisectlab.experiment import (
    ExperimentConfig,
    build_corpus_entry,
    default_corpus_specs,
    report_to_csv,
    run_experiment,
)


def test_default_corpus_materializes(corpus):
    assert len(corpus) == 25
    ids = [graph_id for graph_id, _ in corpus]
    assert ids[:5] == [
        "cycle-8",
        "cycle-9",
        "two-subdivision-k4",
        "two-subdivision-petersen",
        "tutte-coxeter",
    ]
    assert sum(1 for i in ids if i.startswith("random-")) == 20


def test_corpus_entry_from_path(tmp_path):
    import bisectlab as bl
    from bisectlab import generators as gen

    path = tmp_path / "g.txt"
    bl.save_graph(gen.cycle(8), path)
    graph_id, g = build_corpus_entry({"path": str(path)})
    assert g == gen.cycle(8) and graph_id == str(path)


def test_empty_corpus_gives_empty_passing_report():
    report = run_experiment(ExperimentConfig(corpus=[]))
    assert report["summary"] == {"total": 0, "skipped": 0, "passed": 0, "failed": 0}
    assert report["ok"]


def test_non_free_graphs_are_skipped():
    report = run_experiment(
        ExperimentConfig(corpus=[{"generator": "cycle", "n": 6}], restarts=5)
    )
    (row,) = report["graphs"]
    assert row["skipped"] and not row["free"] and row["passed"] is None
    assert report["ok"]


def test_experiment_deterministic_and_serializable():
    cfg = ExperimentConfig(
        corpus=default_corpus_specs(random_count=3), restarts=30, seed=9
    )
    a = run_experiment(cfg)
    b = run_experiment(cfg)
    assert json.dumps(a) == json.dumps(b)


def test_config_round_trip_from_json():
    cfg = ExperimentConfig.from_json(
        {
            "corpus": [{"generator": "cycle", "n": 8}],
            "seed": 4,
            "restarts": 10,
            "bounds": {"xi": "1/16", "c": 2, "k": 4},
            "lemma_grids": {"t_max": 1, "s_max": 2},
        }
    )
    assert cfg.seed == 4 and str(cfg.xi) == "1/16" and cfg.k == 4
    report = run_experiment(cfg)
    assert "lemma_grids" in report
    assert report["graphs"][0]["power_bound"] is not None


def test_csv_columns():
    cfg = ExperimentConfig(corpus=[{"generator": "cycle", "n": 8}], restarts=40)
    csv = report_to_csv(run_experiment(cfg))
    lines = csv.strip().splitlines()
    assert lines[0] == "graph_id,n,m,best_cut,hou_yan_bound,shearer_bound,passed"
    assert lines[1].startswith("cycle-8,8,8,")
