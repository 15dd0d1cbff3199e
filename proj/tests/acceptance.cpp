// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mentionnet/graph.hpp"
#include "mentionnet/metrics.hpp"
#include "mentionnet/report.hpp"
#include "mentionnet/synth.hpp"
#include "mentionnet/tail_fit.hpp"
#include "mentionnet/temporal.hpp"
#include "mentionnet/time_util.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mentionnet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

Outcome worked_example() {
  Outcome o;
  const auto records = parse_tweets(fixtures::worked_example_text()).records;
  const auto g = build_graph(records, EdgeMode::root_only);
  const std::map<DirectedEdge, std::uint64_t> expected{
      {DirectedEdge{709920419529281537ULL, 3239853627ULL}, 1},
      {DirectedEdge{709920419529281537ULL, 325069363ULL}, 1}};
  o.require(g.directed_edges() == expected, "directed links differ from the two stated links");
  for (const auto& [e, w] : g.directed_edges()) o.require(e.source != e.target, "self-loop present");
  const auto r = full_report(g);
  o.require(r.nodes_directed == 3 && r.links_directed == 2, "stats report is not 3 nodes / 2 links");
  std::ostringstream text;
  write_table1(text, corpus_stats(records), r, EdgeMode::root_only);
  o.require(text.str().find("Number of Nodes (directed)                              3\n") != std::string::npos,
            "stats report does not show 3 nodes");
  if (o.pass) o.detail = "links 709920419529281537->3239853627 and ->325069363; 3 nodes / 2 links";
  return o;
}

Outcome formula_suite() {
  using oracle::graph_from_edges;
  Outcome o;
  const auto k3 = graph_from_edges({{1, 2}, {2, 3}, {3, 1}});
  const auto star = graph_from_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const auto path = graph_from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto cycle = graph_from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto k4e = graph_from_edges({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});

  o.require(close(density(3, 3, false), 1.0), "K3 undirected density");
  o.require(close(density(3, 3, true), 0.5), "K3 directed density");
  o.require(close(full_report(k3).density_undirected, 1.0), "K3 report density");
  o.require(close(full_report(star).density_undirected, 5.0 / 15.0), "star density");
  o.require(close(full_report(path).density_directed, 4.0 / 20.0), "path directed density");
  o.require(close(transitivity(k3), 1.0), "K3 transitivity");
  o.require(close(average_clustering(k3), 1.0), "K3 clustering");
  o.require(close(local_clustering(k3, 2), 1.0), "K3 local clustering");
  o.require(transitivity(star) == 0.0 && average_clustering(star) == 0.0, "star transitivity/clustering");
  o.require(transitivity(path) == 0.0 && local_clustering(path, 1) == 0.0, "path transitivity/clustering");
  o.require(transitivity(cycle) == 0.0 && average_clustering(cycle) == 0.0, "cycle transitivity/clustering");
  o.require(close(average_clustering(k4e), 5.0 / 6.0), "K4-minus-edge average clustering 5/6");
  o.require(close(local_clustering(k4e, 1), 2.0 / 3.0), "K4-minus-edge local clustering 2/3");
  o.require(close(transitivity(k4e), 0.75), "K4-minus-edge transitivity 0.75");
  const auto pr = full_report(path), cr = full_report(cycle);
  o.require(pr.lcc_radius == 2u && pr.lcc_diameter == 4u, "path radius/diameter");
  o.require(cr.lcc_radius == 3u && cr.lcc_diameter == 3u, "cycle radius/diameter");
  if (o.pass) o.detail = "K3 1.0, star 0.0, K4-e clustering 5/6 and transitivity 0.75, path/cycle eccentricities";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t discrepancies = 0;
  std::mt19937_64 rng(20160416);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 99;
    const double p = std::pow(10.0, -2.5 + 2.3 * static_cast<double>(rng() % 1000) / 1000.0);
    const auto pg = oracle::random_graph(n, p, 1000 + i);
    const auto g = oracle::to_graph(pg, 0);

    const auto labels = oracle::union_find_components(pg);
    std::map<std::size_t, std::vector<UserId>> by_label;
    for (std::size_t v = 0; v < n; ++v) by_label[labels[v]].push_back(v);
    std::set<std::vector<UserId>> want, got;
    for (auto& [l, members] : by_label) want.insert(members);
    const auto comps = connected_components(g);
    for (const auto& c : comps) got.insert(c);
    discrepancies += want != got;

    const auto dist = oracle::floyd_warshall(pg);
    for (const auto& comp : comps) {
      const auto r = eccentricity_radius_diameter(comp, g, 1 + i % 4);
      std::uint32_t rad = oracle::kInf, diam = 0;
      for (auto v : comp) {
        std::uint32_t ecc = 0;
        for (auto u : comp) ecc = std::max(ecc, dist[v][u]);
        discrepancies += r.eccentricity.at(v) != ecc;
        rad = std::min(rad, ecc);
        diam = std::max(diam, ecc);
      }
      discrepancies += (r.radius != rad) + (r.diameter != diam);
    }
    discrepancies += triangle_count(g) != oracle::triangles_cubic(pg);
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  if (o.pass) o.detail = "100 graphs: components, eccentricities, radius, diameter, triangles all agree";
  return o;
}

Outcome power_law_recovery() {
  Outcome o;
  int gamma_ok = 0, lr_ok = 0;
  std::ostringstream worst;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    oracle::Sampler sampler(seed * 7919);
    const auto data = sampler.power_law(50000, 2.3, 11);
    const auto pl = fit_power_law(data);
    const bool ok = std::abs(pl.gamma - 2.3) <= 0.05 && pl.x_min >= 8 && pl.x_min <= 14;
    gamma_ok += ok;
    if (!ok) worst << " seed " << seed << ": gamma=" << pl.gamma << " x_min=" << pl.x_min << ";";
    FitOptions at;
    at.x_min = pl.x_min;
    const auto ex = fit_exponential(data, at);
    const auto c = compare(pl, ex, data);
    lr_ok += c.p_value < 0.05 && c.preferred && *c.preferred == TailFamily::power_law;
  }
  o.require(gamma_ok >= 18, std::to_string(gamma_ok) + "/20 recovered;" + worst.str());
  o.require(lr_ok == 20, std::to_string(lr_ok) + "/20 preferred power_law over exponential");
  if (o.pass) {
    o.detail = std::to_string(gamma_ok) + "/20 within +-0.05 and x_min in [8,14]; LR test prefers power_law in " +
               std::to_string(lr_ok) + "/20";
  }
  return o;
}

Outcome nested_and_identities() {
  Outcome o;
  std::mt19937_64 rng(42);
  int samples = 0;
  for (int trial = 0; trial < 60; ++trial) {
    oracle::Sampler sampler(5000 + trial);
    const double gamma = 1.5 + 2.5 * static_cast<double>(rng() % 1000) / 1000.0;
    const std::uint64_t x_min = 1 + rng() % 8;
    const std::size_t n = 200 + rng() % 3000;
    std::vector<std::uint64_t> data;
    switch (trial % 4) {
      case 0: data = sampler.power_law(n, gamma, x_min); break;
      case 1: data = sampler.truncated(n, gamma, 0.01 + 0.05 * (trial % 7), x_min); break;
      case 2: data = sampler.lognormal(n, 1.0 + 0.1 * (trial % 10), 0.6 + 0.1 * (trial % 5), x_min); break;
      default: data = sampler.geometric(n, 0.1 + 0.05 * (trial % 9), x_min); break;
    }
    FitOptions at;
    at.x_min = x_min;
    try {
      const auto pl = fit_power_law(data, at);
      const auto tr = fit_truncated_power_law(data, at);
      o.require(tr.log_likelihood >= pl.log_likelihood,
                "trial " + std::to_string(trial) + ": truncated loglik below pure");
      ++samples;
    } catch (const Error& e) {
      o.require(e.kind() == ErrorKind::degenerate_data, std::string("unexpected error: ") + e.what());
    }
  }
  std::uniform_real_distribution<double> g(1.01, 5.0), x(0.01, 1000.0), k(1.0, 1e6);
  double worst = 0;
  TailFit pl;
  for (int i = 0; i < 1000; ++i) {
    pl.gamma = g(rng);
    worst = std::max(worst, scale_invariance_check(pl, x(rng), k(rng)));
  }
  o.require(worst < 1e-9, "scale-invariance residual " + std::to_string(worst));
  oracle::Sampler sampler(1);
  const auto data = sampler.power_law(5000, 2.3, 3);
  FitOptions at;
  at.x_min = 3;
  const auto set = fit_all(data, at);
  for (const auto& f : set.fits) {
    const auto c = compare(f, f, data);
    o.require(c.normalized_lr == 0.0 && !c.preferred, "self-comparison nonzero for " + std::string(to_string(f.family)));
  }
  if (o.pass) {
    std::ostringstream s;
    s << samples << " fuzz samples nested-dominant; max scale residual " << worst << "; self LR = 0 for 4 families";
    o.detail = s.str();
  }
  return o;
}

std::vector<TweetRecord> five_day_corpus() {
  synth::CorpusSpec spec;  // 5 days x 2000 tweets
  return synth::corpus(spec);
}

Outcome temporal_exactness() {
  Outcome o;
  const auto records = five_day_corpus();
  const auto rows = growth_series(records, EdgeMode::root_only);
  o.require(rows.size() == 5, "expected 5 rows");
  const auto g = build_graph(records, EdgeMode::root_only);
  auto single = growth_row(rows.back().day, g);
  single.common_node_fraction = rows.back().common_node_fraction;
  single.common_link_fraction = rows.back().common_link_fraction;
  o.require(rows.back() == single, "final growth row differs from single-shot analysis");
  const auto report = full_report(g);
  o.require(rows.back().cum_nodes == report.nodes_directed &&
                rows.back().avg_clustering == report.avg_clustering_undirected &&
                rows.back().lcc_diameter == report.lcc_diameter,
            "final row differs from full_report");
  const auto pl = fit_power_law(undirected_degrees(g));
  o.require(rows.back().gamma_power_law && *rows.back().gamma_power_law == pl.gamma,
            "final row exponent differs from a direct fit");

  const Timestamp d1 = *parse_timestamp("2016-04-16T10:00:00Z"), d2 = *parse_timestamp("2016-04-17T10:00:00Z");
  const auto fixture = bucket_by_day({TweetRecord{1, 2, d1, "", {1}}, TweetRecord{2, 3, d2, "", {2}}});
  const auto nodes = commonality(fixture, EdgeMode::root_only, CommonElement::nodes);
  o.require(nodes.rbegin()->second == 0.5, "2-day fixture node fraction is not 0.5");
  const auto repeat = bucket_by_day({TweetRecord{1, 2, d1, "", {1}}, TweetRecord{2, 2, d2, "", {1}}});
  o.require(commonality(repeat, EdgeMode::root_only, CommonElement::nodes).rbegin()->second == 1.0,
            "repeated day node fraction is not 1.0");
  if (o.pass) {
    o.detail = std::to_string(records.size()) + " tweets, final row bitwise equal; commonality 0.5 / 1.0";
  }
  return o;
}

std::string serialise(const std::vector<GrowthRow>& rows, const MetricsReport& r, const FitSet& fits) {
  std::ostringstream s;
  write_growth_csv(s, rows);
  write_stats_csv(s, CorpusStats{}, r, EdgeMode::root_only);
  write_fit_csv(s, fits.fits);
  write_comparison_csv(s, fits.comparisons);
  return s.str();
}

Outcome determinism_and_scale() {
  Outcome o;
  const auto records = five_day_corpus();
  std::string baseline;
  for (std::size_t threads : {1u, 4u, 8u}) {
    const auto g = build_graph(parse_tweets([&] {
                                 std::string text;
                                 for (const auto& r : records) text += to_canonical_line(r) + "\n";
                                 return text;
                               }(), IngestConfig{"", threads}).records,
                               EdgeMode::root_only);
    FitOptions options;
    options.threads = threads;
    const auto out = serialise(growth_series(records, EdgeMode::root_only, GrowthOptions{threads}),
                               full_report(g, threads), fit_all(undirected_degrees(g), options));
    if (baseline.empty()) baseline = out;
    o.require(out == baseline, "outputs differ at " + std::to_string(threads) + " threads");
  }
  const auto big = build_graph(synth::graph_records(25000, 40000, 9), EdgeMode::root_only);
  o.require(big.node_count() == 25000 && big.undirected_edge_count() == 40000, "synthetic graph size");
  const auto start = std::chrono::steady_clock::now();
  const auto r = full_report(big, 0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 60.0, "25k/40k full stats took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "identical at 1/4/8 threads; 25k nodes / 40k edges full stats in " << seconds
      << " s (LCC " << r.lcc_nodes << ", radius " << *r.lcc_radius << ", diameter " << *r.lcc_diameter << ")";
    o.detail = s.str();
  }
  return o;
}

Outcome table1_labels() {
  Outcome o;
  const auto records = parse_tweets(fixtures::worked_example_text()).records;
  std::ostringstream text;
  write_table1(text, corpus_stats(records), full_report(build_graph(records, EdgeMode::root_only)),
               EdgeMode::root_only);
  const std::vector<std::string> labels{
      "Description of the Tweets",
      "Number of Total Tweets",
      "Number of Tweets without any User Mentions",
      "Number of Tweets with at least one User Mentions",
      "Number of Tweets only including Self Mentions",
      "Number of Words",
      "Description of Network Elements",
      "Number of Nodes (directed)",
      "Number of Links (directed)",
      "Network Density (directed)",
      "Number of Nodes (undirected)",
      "Number of Links (undirected)",
      "Network Density (undirected)",
      "Number of Nodes (largest connected component)",
      "Number of Links (largest connected component)",
      "Network Density (largest connected component)",
      "Radius (largest connected component)",
      "Diameter (largest connected component)",
      "Number of Connected Components",
      "Number of Isolates",
      "Average Degree (directed)",
      "Average Clustering Coefficient (undirected)",
  };
  std::set<std::string> line_starts;
  std::istringstream in(text.str());
  for (std::string line; std::getline(in, line);) line_starts.insert(line);
  for (const auto& label : labels) {
    bool found = false;
    for (const auto& line : line_starts) found = found || line.rfind(label, 0) == 0;
    o.require(found, "missing label: " + label);
  }
  if (o.pass) o.detail = std::to_string(labels.size()) + " report labels present in both blocks";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked-example fidelity", 1, worked_example},
      {2, "metric formula suite", 1, formula_suite},
      {3, "oracle equivalence", 30, oracle_equivalence},
      {4, "power-law recovery", 120, power_law_recovery},
      {5, "nested-model and identity properties", 10, nested_and_identities},
      {6, "temporal exactness", 30, temporal_exactness},
      {7, "determinism and scale", 180, determinism_and_scale},
      {8, "stats report labels", 1, table1_labels},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !outcome.pass;
    std::printf("criterion %d %s: %s [%.2f s] %s\n", c.number, c.name.c_str(), outcome.pass ? "PASS" : "FAIL",
                seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
