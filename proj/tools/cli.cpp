#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "mentionnet/graph.hpp"
#include "mentionnet/ingest.hpp"
#include "mentionnet/metrics.hpp"
#include "mentionnet/parallel.hpp"
#include "mentionnet/report.hpp"
#include "mentionnet/synth.hpp"
#include "mentionnet/tail_fit.hpp"
#include "mentionnet/temporal.hpp"
#include "mentionnet/time_util.hpp"

namespace mentionnet::cli {
namespace {

namespace fs = std::filesystem;

class Outputs {
 public:
  Outputs(const RunConfig& config, std::ostream& log) : config_(config), log_(log) {
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec) throw Error(ErrorKind::io, "cannot create output directory '" + config.out + "'");
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body,
             std::string_view prefix = "# ") {
    const fs::path path = fs::path(config_.out) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    write_provenance(file, config_, prefix);
    body(file);
    file.flush();
    if (!file) throw Error(ErrorKind::io, "write failed for '" + path.string() + "'");
    log_ << "wrote " << path.string() << '\n';
  }

 private:
  const RunConfig& config_;
  std::ostream& log_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) throw Error(ErrorKind::io, "cannot open input '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void require_inputs(const RunConfig& c) {
  if (c.inputs.empty()) throw Error(ErrorKind::usage, c.subcommand + " needs at least one --input");
}

// All inputs are read as one stream so duplicate tweet ids are resolved
// across files.
IngestResult load(const RunConfig& c) {
  require_inputs(c);
  std::string text;
  for (const auto& path : c.inputs) {
    text += slurp(path);
    if (!text.empty() && text.back() != '\n') text.push_back('\n');
  }
  return parse_tweets(text, IngestConfig{c.keyword, c.threads});
}

std::set<std::string> stopwords(const RunConfig& c) {
  return c.stopwords.empty() ? std::set<std::string>{} : load_stopwords(c.stopwords);
}

std::vector<std::uint64_t> load_degrees(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<std::uint64_t> degrees;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::invalid_argument,
                  path + ":" + std::to_string(number) + ": not a non-negative integer");
    }
    degrees.push_back(value);
  }
  return degrees;
}

void do_ingest(const RunConfig& c, Outputs& out) {
  const auto result = load(c);
  out.write("records.jsonl", [&](std::ostream& f) {
    for (const auto& r : result.records) f << to_canonical_line(r) << '\n';
  });
  out.write("ingest_diagnostics.csv",
            [&](std::ostream& f) { write_diagnostics_csv(f, result.diagnostics); });
}

void do_stats(const RunConfig& c, Outputs& out, std::ostream& log) {
  const auto records = load(c).records;
  const auto corpus = corpus_stats(records, stopwords(c));
  const auto graph = build_graph(records, c.mode);
  const auto metrics = full_report(graph, c.threads);
  out.write("stats.txt", [&](std::ostream& f) { write_table1(f, corpus, metrics, c.mode); });
  out.write("stats.csv", [&](std::ostream& f) { write_stats_csv(f, corpus, metrics, c.mode); });
  for (auto kind : {DegreeKind::undirected, DegreeKind::in, DegreeKind::out}) {
    const auto dist = degree_distribution(graph, kind);
    out.write("degree_" + std::string(to_string(kind)) + ".csv",
              [&](std::ostream& f) { write_degree_csv(f, dist); });
  }
  write_table1(log, corpus, metrics, c.mode);
}

void do_fit(const RunConfig& c, Outputs& out, std::ostream& log) {
  std::vector<std::uint64_t> degrees;
  if (!c.degrees.empty()) {
    degrees = load_degrees(c.degrees);
  } else {
    degrees = undirected_degrees(build_graph(load(c).records, c.mode));
  }
  FitOptions options;
  options.x_min = c.x_min;
  options.threads = c.threads;
  const auto set = fit_all(degrees, options, c.alpha);
  out.write("fit.csv", [&](std::ostream& f) { write_fit_csv(f, set.fits); });
  out.write("comparison.csv", [&](std::ostream& f) { write_comparison_csv(f, set.comparisons); });
  const auto& pl = set.fits.front();
  log << "power_law gamma=" << format_double(pl.gamma) << " +/- "
      << format_double(pl.gamma_std_error) << " x_min=" << pl.x_min << " n_tail=" << pl.n_tail
      << '\n';
}

void do_growth(const RunConfig& c, Outputs& out) {
  const auto rows = growth_series(load(c).records, c.mode, GrowthOptions{c.threads});
  out.write("growth.csv", [&](std::ostream& f) { write_growth_csv(f, rows); });
}

void do_common(const RunConfig& c, Outputs& out) {
  const auto by_day = bucket_by_day(load(c).records);
  const auto nodes = commonality(by_day, c.mode, CommonElement::nodes);
  const auto links = commonality(by_day, c.mode, CommonElement::links);
  out.write("common.csv", [&](std::ostream& f) { write_common_csv(f, nodes, links); });
}

void do_words(const RunConfig& c, Outputs& out, std::ostream& log) {
  const auto stats = corpus_stats(load(c).records, stopwords(c));
  out.write("words.csv", [&](std::ostream& f) { write_words_csv(f, stats, c.top); });
  if (stats.total_words > 0) {
    log << "top " << c.top << " words cover " << format_double(top_k_contribution(stats, c.top))
        << " of " << stats.total_words << '\n';
  }
}

void do_export(const RunConfig& c, Outputs& out) {
  const auto graph = build_graph(load(c).records, c.mode);
  out.write("edges.csv", [&](std::ostream& f) { write_edge_list_csv(graph, f); });
  out.write("nodes.csv", [&](std::ostream& f) { write_node_list_csv(graph, f); });
  out.write("graph.dot", [&](std::ostream& f) { write_dot(graph, f); }, "// ");
}

void do_synth(const RunConfig& c, Outputs& out) {
  const auto& p = c.params;
  if (p.at("kind") == "power-law") {
    const auto samples = synth::sample_power_law(std::stoull(p.at("count")), std::stod(p.at("gamma")),
                                                 c.x_min.value_or(11), c.seed);
    out.write("degrees.txt", [&](std::ostream& f) {
      for (auto k : samples) f << k << '\n';
    });
    return;
  }
  synth::CorpusSpec spec;
  spec.days = std::stoull(p.at("days"));
  spec.tweets_per_day = std::stoull(p.at("tweets-per-day"));
  spec.users = std::stoull(p.at("users"));
  spec.seed = c.seed;
  const auto records = synth::corpus(spec);
  out.write("records.jsonl", [&](std::ostream& f) {
    for (const auto& r : records) f << to_canonical_line(r) << '\n';
  });
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
      return usage;
    case ErrorKind::io:
      return io;
    default:
      return analysis;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message) {
  err << nlohmann::json{{"error", kind}, {"message", message}}.dump(
             -1, ' ', false, nlohmann::json::error_handler_t::replace)
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string mode = "root-only";
  std::uint64_t x_min = 0;
  std::string synth_kind = "power-law";
  std::uint64_t count = 50000;
  double gamma = 2.3;
  std::size_t days = 5, tweets_per_day = 2000, users = 3000;

  CLI::App app{"Mention-network construction and analysis"};
  app.name("mentionnet");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const auto common_flags = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads, 0 = one per hardware thread")
        ->capture_default_str();
  };
  const auto input_flags = [&](CLI::App* sub) {
    sub->add_option("--input", c.inputs, "Tweet or record file (repeatable)");
    sub->add_option("--mode", mode, "Edge construction")
        ->check(CLI::IsMember({"root-only", "all-mentions"}))
        ->capture_default_str();
    sub->add_option("--keyword", c.keyword, "Case-insensitive substring filter on text");
    sub->add_option("--stopwords", c.stopwords, "Stop-word file, one word per line");
    common_flags(sub);
  };

  auto* ingest = app.add_subcommand("ingest", "Validate tweets into the canonical record file");
  auto* stats = app.add_subcommand("stats", "Corpus and network summary");
  auto* fit = app.add_subcommand("fit", "Fit tail models to the degree distribution and compare them");
  auto* growth = app.add_subcommand("growth", "Cumulative daily network metrics");
  auto* common = app.add_subcommand("common", "Daily share of nodes and links seen before");
  auto* words = app.add_subcommand("words", "Most frequent words");
  auto* exp = app.add_subcommand("export", "Edge list, node list and DOT files");
  auto* syn = app.add_subcommand("synth", "Seeded synthetic degrees or tweet corpus");
  for (auto* sub : {ingest, stats, fit, growth, common, words, exp}) input_flags(sub);

  fit->add_option("--degrees", c.degrees, "Plain degree list instead of --input");
  fit->add_option("--xmin", x_min, "Fixed x_min (default: KS scan)")->check(CLI::PositiveNumber);
  fit->add_option("--alpha", c.alpha, "Significance level for model comparison")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  words->add_option("--top", c.top, "Number of words")->capture_default_str();

  syn->add_option("--kind", synth_kind)
      ->check(CLI::IsMember({"power-law", "corpus"}))
      ->capture_default_str();
  syn->add_option("--seed", c.seed)->capture_default_str();
  syn->add_option("--count", count, "Power-law sample size")->capture_default_str();
  syn->add_option("--gamma", gamma)->capture_default_str();
  syn->add_option("--xmin", x_min, "Power-law x_min (default 11)")->check(CLI::PositiveNumber);
  syn->add_option("--days", days)->capture_default_str();
  syn->add_option("--tweets-per-day", tweets_per_day)->capture_default_str();
  syn->add_option("--users", users)->capture_default_str();
  common_flags(syn);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return usage;
  }

  try {
    auto* chosen = app.get_subcommands().front();
    c.subcommand = chosen->get_name();
    c.mode = parse_edge_mode(mode);
    if (x_min > 0) c.x_min = x_min;
    c.threads = resolve_threads(c.threads);
    if (c.subcommand == "synth") {
      c.params["kind"] = synth_kind;
      if (synth_kind == "power-law") {
        c.params["count"] = std::to_string(count);
        c.params["gamma"] = format_double(gamma);
      } else {
        c.params["days"] = std::to_string(days);
        c.params["tweets-per-day"] = std::to_string(tweets_per_day);
        c.params["users"] = std::to_string(users);
      }
    }
    if (c.subcommand == "fit" && c.degrees.empty() && c.inputs.empty()) {
      throw Error(ErrorKind::usage, "fit needs --input or --degrees");
    }

    Outputs outputs(c, out);
    if (c.subcommand == "ingest") do_ingest(c, outputs);
    else if (c.subcommand == "stats") do_stats(c, outputs, out);
    else if (c.subcommand == "fit") do_fit(c, outputs, out);
    else if (c.subcommand == "growth") do_growth(c, outputs);
    else if (c.subcommand == "common") do_common(c, outputs);
    else if (c.subcommand == "words") do_words(c, outputs, out);
    else if (c.subcommand == "export") do_export(c, outputs);
    else do_synth(c, outputs);
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return analysis;
  }
  return ok;
}

}  // namespace mentionnet::cli
