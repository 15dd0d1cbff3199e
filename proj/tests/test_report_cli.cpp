#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mentionnet/report.hpp"
#include "mentionnet/synth.hpp"
#include "support/fixtures.hpp"

using namespace mentionnet;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("mentionnet_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string csv_value(const std::string& file, const std::string& column) {
  std::istringstream in(file);
  std::string header, values, line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (header.empty()) header = line;
    else if (values.empty()) values = line;
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream cells(s);
    while (std::getline(cells, cell, ',')) out.push_back(cell);
    return out;
  };
  const auto h = split(header), v = split(values);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] == column) return v.at(i);
  return "<missing>";
}

}  // namespace

TEST(Provenance, RoundTrips) {
  RunConfig c;
  c.subcommand = "fit";
  c.inputs = {"a.jsonl", "b dir/c.jsonl"};
  c.degrees = "deg.txt";
  c.mode = EdgeMode::all_mentions;
  c.stopwords = "stop.txt";
  c.keyword = "purdue";
  c.x_min = 11;
  c.alpha = 0.01;
  c.seed = 7;
  c.top = 20;
  c.out = "/tmp/x";
  c.params = {{"gamma", "2.3"}};
  for (std::string_view prefix : {"# ", "// "}) {
    std::stringstream s;
    write_provenance(s, c, prefix);
    s << "k,count\n";
    EXPECT_EQ(parse_provenance(s, prefix), c);
  }
  RunConfig defaults;
  std::stringstream s;
  write_provenance(s, defaults);
  EXPECT_EQ(parse_provenance(s), defaults);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_double(std::nan("")), "");
  EXPECT_EQ(std::stod(format_double(2.2940000000000001)), 2.2940000000000001);
}

TEST(Cli, StatsOnWorkedExample) {
  const auto dir = scratch("stats");
  const auto r = cli_run({"stats", "--input", fixtures::data_path("worked_example.jsonl"), "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(dir / "stats.csv");
  EXPECT_EQ(csv_value(csv, "nodes_directed"), "3");
  EXPECT_EQ(csv_value(csv, "links_directed"), "2");
  EXPECT_EQ(csv_value(csv, "edge_mode"), "root-only");
  const auto text = slurp(dir / "stats.txt");
  EXPECT_NE(text.find("Number of Nodes (directed)"), std::string::npos);
  std::ifstream again(dir / "stats.txt");
  EXPECT_EQ(parse_provenance(again).inputs.front(), fixtures::data_path("worked_example.jsonl"));
}

TEST(Cli, StatsOnEmptyFile) {
  const auto dir = scratch("empty");
  std::ofstream(dir / "empty.jsonl").close();
  const auto r = cli_run({"stats", "--input", (dir / "empty.jsonl").string(), "--out", (dir / "o").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(dir / "o" / "stats.csv");
  EXPECT_EQ(csv_value(csv, "nodes_directed"), "0");
  EXPECT_EQ(csv_value(csv, "lcc_radius"), "");
  EXPECT_NE(slurp(dir / "o" / "stats.txt").find("undefined"), std::string::npos);
}

TEST(Cli, FitOnBundledSample) {
  const auto dir = scratch("fit");
  const auto r = cli_run({"fit", "--degrees", fixtures::data_path("powerlaw/degrees.txt"), "--xmin", "11",
                          "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const double gamma = std::stod(csv_value(slurp(dir / "fit.csv"), "gamma"));
  EXPECT_GE(gamma, 2.25);
  EXPECT_LE(gamma, 2.35);
  const auto comparison = slurp(dir / "comparison.csv");
  EXPECT_NE(comparison.find("family_a,family_b,lr,p,preferred\n"), std::string::npos);
  EXPECT_NE(comparison.find("power_law,exponential,"), std::string::npos);
}

TEST(Cli, ErrorsAreMachineReadable) {
  auto r = cli_run({"frobnicate"});
  EXPECT_EQ(r.code, cli::usage);
  EXPECT_EQ(r.err.rfind("{\"error\":\"usage\"", 0), 0u) << r.err;
  r = cli_run({"stats", "--bogus-flag"});
  EXPECT_EQ(r.code, cli::usage);
  r = cli_run({"stats", "--input", "/nonexistent/x.jsonl", "--out", scratch("io").string()});
  EXPECT_EQ(r.code, cli::io);
  EXPECT_EQ(r.err.rfind("{\"error\":\"io\"", 0), 0u) << r.err;
  r = cli_run({"stats", "--mode", "sideways", "--input", "x"});
  EXPECT_EQ(r.code, cli::usage);
  const auto dir = scratch("degenerate");
  std::ofstream(dir / "d.txt") << "5\n5\n5\n";
  r = cli_run({"fit", "--degrees", (dir / "d.txt").string(), "--xmin", "1", "--out", dir.string()});
  EXPECT_EQ(r.code, cli::analysis);
  EXPECT_NE(r.err.find("degenerate_data"), std::string::npos);
  EXPECT_EQ(cli_run({"--help"}).code, 0);
}

TEST(Cli, EverySubcommandWritesItsFiles) {
  const auto dir = scratch("all");
  const auto input = fixtures::data_path("worked_example.jsonl");
  const std::vector<std::pair<std::string, std::vector<std::string>>> expect{
      {"ingest", {"records.jsonl", "ingest_diagnostics.csv"}},
      {"stats", {"stats.txt", "stats.csv", "degree_undirected.csv", "degree_in.csv", "degree_out.csv"}},
      {"growth", {"growth.csv"}},
      {"common", {"common.csv"}},
      {"words", {"words.csv"}},
      {"export", {"edges.csv", "nodes.csv", "graph.dot"}},
  };
  for (const auto& [sub, files] : expect) {
    const auto out = dir / sub;
    const auto r = cli_run({sub, "--input", input, "--out", out.string()});
    ASSERT_EQ(r.code, 0) << sub << ": " << r.err;
    for (const auto& f : files) {
      ASSERT_TRUE(fs::exists(out / f)) << f;
      std::ifstream in(out / f);
      EXPECT_EQ(parse_provenance(in, f == "graph.dot" ? "// " : "# ").subcommand, sub);
    }
  }
  // The canonical record file feeds straight back in.
  const auto r = cli_run({"stats", "--input", (dir / "ingest" / "records.jsonl").string(), "--out",
                          (dir / "again").string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(csv_value(slurp(dir / "again" / "stats.csv"), "links_directed"), "2");
}

TEST(Cli, OutputsIdenticalAcrossThreadCounts) {
  const auto dir = scratch("threads");
  synth::CorpusSpec spec;
  spec.tweets_per_day = 300;
  spec.users = 500;
  {
    std::ofstream f(dir / "corpus.jsonl");
    for (const auto& r : synth::corpus(spec)) f << to_canonical_line(r) << '\n';
  }
  for (std::string sub : {"stats", "growth", "fit"}) {
    std::vector<std::string> contents;
    for (std::string threads : {"1", "4", "8"}) {
      const auto r = cli_run({sub, "--input", (dir / "corpus.jsonl").string(), "--threads", threads,
                              "--out", (dir / "o").string()});
      ASSERT_EQ(r.code, 0) << r.err;
      const std::string file = sub == "stats" ? "stats.txt" : sub == "growth" ? "growth.csv" : "fit.csv";
      contents.push_back(slurp(dir / "o" / file));
    }
    EXPECT_EQ(contents[0], contents[1]) << sub;
    EXPECT_EQ(contents[0], contents[2]) << sub;
  }
}

TEST(Cli, SynthIsSeeded) {
  const auto dir = scratch("synth");
  auto body = [&](const std::string& name, const std::string& seed) {
    const auto r = cli_run({"synth", "--count", "1000", "--seed", seed, "--out", (dir / name).string()});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream in(slurp(dir / name / "degrees.txt"));
    std::string line, values;
    while (std::getline(in, line))
      if (line.rfind("#", 0) != 0) values += line + "\n";
    return values;
  };
  const auto a = body("a", "5"), b = body("b", "5"), c = body("c", "6");
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_FALSE(a.empty());
}
