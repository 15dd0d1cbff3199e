#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "mentionnet/graph.hpp"
#include "mentionnet/ingest.hpp"
#include "mentionnet/metrics.hpp"
#include "mentionnet/report.hpp"
#include "mentionnet/synth.hpp"
#include "mentionnet/tail_fit.hpp"
#include "mentionnet/temporal.hpp"
#include "mentionnet/time_util.hpp"

namespace py = pybind11;
using namespace mentionnet;

namespace {

std::int64_t epoch_seconds(Timestamp t) { return t.time_since_epoch().count(); }

template <typename T>
std::map<std::string, double> by_day_string(const std::map<Day, T>& in) {
  std::map<std::string, double> out;
  for (const auto& [day, v] : in) out[format_day(day)] = v;
  return out;
}

std::vector<TweetRecord> records_from_text(const std::string& text) {
  return parse_tweets(std::string_view(text)).records;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mention-network construction and analysis";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = type(py::str(e.what()));
      exc.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::enum_<EdgeMode>(m, "EdgeMode")
      .value("root_only", EdgeMode::root_only)
      .value("all_mentions", EdgeMode::all_mentions);

  py::class_<TweetRecord>(m, "TweetRecord")
      .def_readonly("tweet_id", &TweetRecord::tweet_id)
      .def_readonly("author_id", &TweetRecord::author_id)
      .def_property_readonly("created_at", [](const TweetRecord& r) { return epoch_seconds(r.created_at); })
      .def_property_readonly("created_at_iso", [](const TweetRecord& r) { return format_timestamp(r.created_at); })
      .def_readonly("text", &TweetRecord::text)
      .def_readonly("mention_ids", &TweetRecord::mention_ids)
      .def("canonical", &to_canonical_line)
      .def("__repr__", [](const TweetRecord& r) { return "TweetRecord(" + to_canonical_line(r) + ")"; });

  py::class_<IngestDiagnostics>(m, "IngestDiagnostics")
      .def_readonly("lines_read", &IngestDiagnostics::lines_read)
      .def_readonly("accepted", &IngestDiagnostics::accepted)
      .def_readonly("bad_timestamp", &IngestDiagnostics::bad_timestamp)
      .def_readonly("missing_author", &IngestDiagnostics::missing_author)
      .def_readonly("duplicate_tweet_id", &IngestDiagnostics::duplicate_tweet_id)
      .def_readonly("malformed_record", &IngestDiagnostics::malformed_record)
      .def_readonly("filtered_by_keyword", &IngestDiagnostics::filtered_by_keyword)
      .def_property_readonly("rejected", &IngestDiagnostics::rejected);

  m.def(
      "parse_tweets",
      [](const std::string& text, const std::string& keyword, std::size_t threads) {
        auto result = parse_tweets(std::string_view(text), IngestConfig{keyword, threads});
        return py::make_tuple(result.records, result.diagnostics);
      },
      py::arg("text"), py::arg("keyword") = "", py::arg("threads") = 1,
      "Parse line-delimited tweet JSON; returns (records, diagnostics).");
  m.def(
      "read_tweets",
      [](const std::string& path, const std::string& keyword, std::size_t threads) {
        auto result = parse_tweets_file(path, IngestConfig{keyword, threads});
        return py::make_tuple(result.records, result.diagnostics);
      },
      py::arg("path"), py::arg("keyword") = "", py::arg("threads") = 1);

  py::class_<CorpusStats>(m, "CorpusStats")
      .def_readonly("total_tweets", &CorpusStats::total_tweets)
      .def_readonly("tweets_without_mentions", &CorpusStats::tweets_without_mentions)
      .def_readonly("tweets_with_mentions", &CorpusStats::tweets_with_mentions)
      .def_readonly("tweets_only_self_mentions", &CorpusStats::tweets_only_self_mentions)
      .def_readonly("total_words", &CorpusStats::total_words)
      .def_readonly("total_words_raw", &CorpusStats::total_words_raw)
      .def_readonly("word_frequencies", &CorpusStats::word_frequencies);
  m.def("corpus_stats", &corpus_stats, py::arg("records"), py::arg("stopwords") = std::set<std::string>{});
  m.def("top_words", &top_words, py::arg("stats"), py::arg("k"));
  m.def("top_k_contribution", &top_k_contribution, py::arg("stats"), py::arg("k"));
  m.def("tokenize", &tokenize);

  py::class_<MentionEvent>(m, "MentionEvent")
      .def_readonly("source", &MentionEvent::source)
      .def_readonly("target", &MentionEvent::target)
      .def_readonly("tweet_id", &MentionEvent::tweet_id)
      .def_property_readonly("timestamp", [](const MentionEvent& e) { return epoch_seconds(e.timestamp); });
  m.def("extract_events", &extract_events, py::arg("record"), py::arg("mode") = EdgeMode::root_only);

  py::class_<InteractionGraph>(m, "InteractionGraph")
      .def(py::init<>())
      .def_property_readonly("nodes", &InteractionGraph::nodes)
      .def_property_readonly("directed_edges",
                             [](const InteractionGraph& g) {
                               std::map<std::pair<UserId, UserId>, std::uint64_t> out;
                               for (const auto& [e, w] : g.directed_edges()) out[{e.source, e.target}] = w;
                               return out;
                             })
      .def_property_readonly("edge_weights",
                             [](const InteractionGraph& g) {
                               std::map<std::pair<UserId, UserId>, std::uint64_t> out;
                               for (const auto& [e, w] : g.edge_weights()) out[{e.low, e.high}] = w;
                               return out;
                             })
      .def_property_readonly("event_count", [](const InteractionGraph& g) { return g.event_log().size(); })
      .def("node_count", &InteractionGraph::node_count)
      .def("directed_edge_count", &InteractionGraph::directed_edge_count)
      .def("undirected_edge_count", &InteractionGraph::undirected_edge_count)
      .def("edge_list_csv", [](const InteractionGraph& g) {
        std::ostringstream s;
        write_edge_list_csv(g, s);
        return s.str();
      })
      .def("node_list_csv", [](const InteractionGraph& g) {
        std::ostringstream s;
        write_node_list_csv(g, s);
        return s.str();
      })
      .def("dot", [](const InteractionGraph& g) {
        std::ostringstream s;
        write_dot(g, s);
        return s.str();
      });
  m.def("build_graph", &build_graph, py::arg("records"), py::arg("mode") = EdgeMode::root_only);
  m.def("merge", &merge);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("nodes_directed", &MetricsReport::nodes_directed)
      .def_readonly("links_directed", &MetricsReport::links_directed)
      .def_readonly("density_directed", &MetricsReport::density_directed)
      .def_readonly("nodes_undirected", &MetricsReport::nodes_undirected)
      .def_readonly("links_undirected", &MetricsReport::links_undirected)
      .def_readonly("density_undirected", &MetricsReport::density_undirected)
      .def_readonly("lcc_nodes", &MetricsReport::lcc_nodes)
      .def_readonly("lcc_links", &MetricsReport::lcc_links)
      .def_readonly("lcc_density", &MetricsReport::lcc_density)
      .def_readonly("lcc_radius", &MetricsReport::lcc_radius)
      .def_readonly("lcc_diameter", &MetricsReport::lcc_diameter)
      .def_readonly("component_count", &MetricsReport::component_count)
      .def_readonly("isolate_count", &MetricsReport::isolate_count)
      .def_readonly("avg_degree_directed", &MetricsReport::avg_degree_directed)
      .def_readonly("avg_degree_undirected", &MetricsReport::avg_degree_undirected)
      .def_readonly("avg_clustering_undirected", &MetricsReport::avg_clustering_undirected)
      .def_readonly("transitivity", &MetricsReport::transitivity)
      .def_readonly("triangle_count", &MetricsReport::triangle_count)
      .def_readonly("connected_triples", &MetricsReport::connected_triples);
  m.def("full_report", &full_report, py::arg("graph"), py::arg("threads") = 1);
  m.def("density", &density, py::arg("n"), py::arg("m"), py::arg("directed"));
  m.def("connected_components", &connected_components);
  m.def("average_clustering", &average_clustering);
  m.def("local_clustering", &local_clustering);
  m.def("transitivity", &transitivity);
  m.def("triangle_count", &triangle_count);
  m.def("undirected_degrees", &undirected_degrees);
  m.def(
      "degree_histogram",
      [](const InteractionGraph& g, const std::string& kind) {
        DegreeKind k = DegreeKind::undirected;
        if (kind == "in") k = DegreeKind::in;
        else if (kind == "out") k = DegreeKind::out;
        else if (kind == "total") k = DegreeKind::total;
        else if (kind != "undirected") throw Error(ErrorKind::invalid_argument, "unknown degree kind '" + kind + "'");
        return degree_distribution(g, k).histogram;
      },
      py::arg("graph"), py::arg("kind") = "undirected");
  m.def(
      "eccentricity_radius_diameter",
      [](const std::vector<UserId>& component, const InteractionGraph& g, std::size_t threads) {
        auto r = eccentricity_radius_diameter(component, g, threads);
        return py::make_tuple(r.eccentricity, r.radius, r.diameter);
      },
      py::arg("component"), py::arg("graph"), py::arg("threads") = 1);

  py::enum_<TailFamily>(m, "TailFamily")
      .value("power_law", TailFamily::power_law)
      .value("truncated_power_law", TailFamily::truncated_power_law)
      .value("lognormal", TailFamily::lognormal)
      .value("exponential", TailFamily::exponential);

  py::class_<TailFit>(m, "TailFit")
      .def_readonly("family", &TailFit::family)
      .def_readonly("gamma", &TailFit::gamma)
      .def_readonly("lambda_", &TailFit::lambda)
      .def_readonly("mu", &TailFit::mu)
      .def_readonly("sigma", &TailFit::sigma)
      .def_readonly("x_min", &TailFit::x_min)
      .def_readonly("n_tail", &TailFit::n_tail)
      .def_readonly("log_likelihood", &TailFit::log_likelihood)
      .def_readonly("ks_distance", &TailFit::ks_distance)
      .def_readonly("gamma_std_error", &TailFit::gamma_std_error);

  py::class_<FitComparison>(m, "FitComparison")
      .def_readonly("family_a", &FitComparison::family_a)
      .def_readonly("family_b", &FitComparison::family_b)
      .def_readonly("normalized_lr", &FitComparison::normalized_lr)
      .def_readonly("p_value", &FitComparison::p_value)
      .def_readonly("preferred", &FitComparison::preferred);

  const auto options = [](std::optional<std::uint64_t> x_min, std::size_t threads) {
    FitOptions o;
    o.x_min = x_min;
    o.threads = threads;
    return o;
  };
  m.def(
      "fit",
      [options](TailFamily family, const std::vector<std::uint64_t>& degrees,
                std::optional<std::uint64_t> x_min, std::size_t threads) {
        return fit_family(family, degrees, options(x_min, threads));
      },
      py::arg("family"), py::arg("degrees"), py::arg("x_min") = py::none(), py::arg("threads") = 1);
  m.def(
      "fit_all",
      [options](const std::vector<std::uint64_t>& degrees, std::optional<std::uint64_t> x_min,
                double alpha, std::size_t threads) {
        auto set = fit_all(degrees, options(x_min, threads), alpha);
        return py::make_tuple(set.fits, set.comparisons);
      },
      py::arg("degrees"), py::arg("x_min") = py::none(), py::arg("alpha") = 0.05,
      py::arg("threads") = 1);
  m.def(
      "compare",
      [](const TailFit& a, const TailFit& b, const std::vector<std::uint64_t>& degrees, double alpha) {
        return compare(a, b, degrees, alpha);
      },
      py::arg("a"), py::arg("b"), py::arg("degrees"), py::arg("alpha") = 0.05);
  m.def("scale_invariance_check", &scale_invariance_check);

  py::class_<GrowthRow>(m, "GrowthRow")
      .def_property_readonly("day", [](const GrowthRow& r) { return format_day(r.day); })
      .def_readonly("cum_nodes", &GrowthRow::cum_nodes)
      .def_readonly("cum_links_directed", &GrowthRow::cum_links_directed)
      .def_readonly("cum_links_undirected", &GrowthRow::cum_links_undirected)
      .def_readonly("cum_isolates", &GrowthRow::cum_isolates)
      .def_readonly("cum_components", &GrowthRow::cum_components)
      .def_readonly("density_directed", &GrowthRow::density_directed)
      .def_readonly("density_undirected", &GrowthRow::density_undirected)
      .def_readonly("density_lcc", &GrowthRow::density_lcc)
      .def_readonly("lcc_radius", &GrowthRow::lcc_radius)
      .def_readonly("lcc_diameter", &GrowthRow::lcc_diameter)
      .def_readonly("avg_degree", &GrowthRow::avg_degree)
      .def_readonly("avg_clustering", &GrowthRow::avg_clustering)
      .def_readonly("gamma_power_law", &GrowthRow::gamma_power_law)
      .def_readonly("gamma_truncated", &GrowthRow::gamma_truncated)
      .def_readonly("x_min", &GrowthRow::x_min)
      .def_readonly("common_node_fraction", &GrowthRow::common_node_fraction)
      .def_readonly("common_link_fraction", &GrowthRow::common_link_fraction);
  m.def(
      "growth_series",
      [](const std::vector<TweetRecord>& records, EdgeMode mode, std::size_t threads) {
        return growth_series(records, mode, GrowthOptions{threads});
      },
      py::arg("records"), py::arg("mode") = EdgeMode::root_only, py::arg("threads") = 1);
  m.def(
      "commonality",
      [](const std::vector<TweetRecord>& records, EdgeMode mode, const std::string& element) {
        if (element != "nodes" && element != "links") {
          throw Error(ErrorKind::invalid_argument, "element must be 'nodes' or 'links'");
        }
        return by_day_string(commonality(bucket_by_day(records), mode,
                                         element == "nodes" ? CommonElement::nodes : CommonElement::links));
      },
      py::arg("records"), py::arg("mode") = EdgeMode::root_only, py::arg("element") = "nodes");

  m.def("sample_power_law", &synth::sample_power_law, py::arg("n"), py::arg("gamma"),
        py::arg("x_min"), py::arg("seed"));
  m.def(
      "synthetic_corpus",
      [](std::size_t days, std::size_t tweets_per_day, std::size_t users, std::uint64_t seed) {
        synth::CorpusSpec spec;
        spec.days = days;
        spec.tweets_per_day = tweets_per_day;
        spec.users = users;
        spec.seed = seed;
        return synth::corpus(spec);
      },
      py::arg("days") = 5, py::arg("tweets_per_day") = 2000, py::arg("users") = 3000,
      py::arg("seed") = 1);
  m.def("records_from_text", &records_from_text);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
