#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mentionnet/ingest.hpp"
#include "mentionnet/metrics.hpp"
#include "mentionnet/tail_fit.hpp"
#include "mentionnet/temporal.hpp"

namespace mentionnet {

inline constexpr std::string_view kVersion = "0.1.0";

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string degrees;  // plain degree list for `fit`, one integer per line
  EdgeMode mode = EdgeMode::root_only;
  std::string stopwords;
  std::string keyword;
  std::optional<std::uint64_t> x_min;
  double alpha = 0.05;
  std::uint64_t seed = 42;
  std::size_t top = 50;
  std::string out = ".";
  // Subcommand-specific settings (synth parameters), written as param.<key>.
  std::map<std::string, std::string> params;
  std::size_t threads = 0;  // execution only; not part of the provenance header

  bool operator==(const RunConfig&) const = default;
};

// `<prefix>key=value` lines describing everything that shapes the output.
void write_provenance(std::ostream& out, const RunConfig& config, std::string_view prefix = "# ");
// Reads the leading provenance block back; threads is left at its default.
RunConfig parse_provenance(std::istream& in, std::string_view prefix = "# ");

// Shortest decimal that round-trips; empty for NaN.
std::string format_double(double value);

void write_table1(std::ostream& out, const CorpusStats& corpus, const MetricsReport& metrics,
                  EdgeMode mode);
// Header of field names, then one row of values.
void write_stats_csv(std::ostream& out, const CorpusStats& corpus, const MetricsReport& metrics,
                     EdgeMode mode);
void write_degree_csv(std::ostream& out, const DegreeDistribution& dist);
void write_fit_csv(std::ostream& out, const std::vector<TailFit>& fits);
void write_comparison_csv(std::ostream& out, const std::vector<FitComparison>& comparisons);
void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows);
void write_common_csv(std::ostream& out, const std::map<Day, double>& nodes,
                      const std::map<Day, double>& links);
void write_words_csv(std::ostream& out, const CorpusStats& stats, std::size_t k);
void write_diagnostics_csv(std::ostream& out, const IngestDiagnostics& diag);

}  // namespace mentionnet
