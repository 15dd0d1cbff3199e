import math
import os
from pathlib import Path

import pytest

import mentionnet as mn

DATA = Path(os.environ.get("MENTIONNET_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load_degrees(path):
    return [int(line) for line in path.read_text().splitlines() if line and not line.startswith("#")]


def test_worked_example_graph():
    records, diagnostics = mn.read_tweets(str(DATA / "worked_example.jsonl"))
    assert diagnostics.accepted == 3 and diagnostics.rejected == 0
    graph = mn.build_graph(records, mn.EdgeMode.root_only)
    report = mn.full_report(graph)
    assert (report.nodes_directed, report.links_directed) == (3, 2)
    assert report.lcc_radius == 1 and report.lcc_diameter == 2
    assert report.transitivity == 0.0


def test_fit_bundled_power_law_sample():
    degrees = load_degrees(DATA / "powerlaw" / "degrees.txt")
    fit = mn.fit(mn.TailFamily.power_law, degrees, x_min=11)
    assert 2.25 <= fit.gamma <= 2.35
    assert fit.x_min == 11 and 0.0 <= fit.ks_distance <= 1.0
    fits, comparisons = mn.fit_all(degrees, x_min=11)
    assert [f.family for f in fits][0] == mn.TailFamily.power_law
    pl_vs_exp = next(c for c in comparisons
                     if {c.family_a, c.family_b} == {mn.TailFamily.power_law, mn.TailFamily.exponential})
    assert pl_vs_exp.preferred == mn.TailFamily.power_law


def test_scale_invariance_identity():
    fit = mn.fit(mn.TailFamily.power_law, mn.sample_power_law(2000, 2.5, 2, 3), x_min=2)
    assert mn.scale_invariance_check(fit, 7.0, 3.0) < 1e-9


def test_commonality_two_days():
    records, _ = mn.read_tweets(str(DATA / "two_day.jsonl"))
    fractions = mn.commonality(records, element="nodes")
    assert list(fractions.values()) == [0.0, 0.5]


def test_growth_final_row_matches_report():
    records = mn.synthetic_corpus(days=3, tweets_per_day=300, users=400, seed=5)
    rows = mn.growth_series(records)
    report = mn.full_report(mn.build_graph(records))
    assert len(rows) == 3
    assert rows[-1].cum_nodes == report.nodes_directed
    assert math.isclose(rows[-1].avg_clustering, report.avg_clustering_undirected, rel_tol=0, abs_tol=0)


def test_run_cli_stats(tmp_path):
    code, out, err = mn.run_cli(["stats", "--input", str(DATA / "worked_example.jsonl"), "--out", str(tmp_path)])
    assert code == 0, err
    assert "Number of Nodes (directed)" in out
    assert (tmp_path / "stats.csv").exists()


def test_run_cli_usage_error():
    code, _, err = mn.run_cli(["stats"])
    assert code == 2
    assert '"error":"usage"' in err


def test_error_kind():
    with pytest.raises(mn.Error) as info:
        mn.fit(mn.TailFamily.power_law, [5], x_min=1)
    assert info.value.kind in {"degenerate_data", "invalid_argument"}
