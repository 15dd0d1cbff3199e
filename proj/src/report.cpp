#include "mentionnet/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "mentionnet/time_util.hpp"

namespace mentionnet {
namespace {

std::string with_commas(std::uint64_t v) {
  std::string digits = std::to_string(v);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

std::string fixed(double v, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << v;
  return s.str();
}

template <typename T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

void line(std::ostream& out, std::string_view label, const std::string& value) {
  out << std::left << std::setw(56) << label << value << '\n';
}

}  // namespace

void write_provenance(std::ostream& out, const RunConfig& c, std::string_view prefix) {
  out << prefix << "mentionnet " << kVersion << '\n';
  out << prefix << "subcommand=" << c.subcommand << '\n';
  for (const auto& in : c.inputs) out << prefix << "input=" << in << '\n';
  out << prefix << "degrees=" << c.degrees << '\n';
  out << prefix << "mode=" << to_string(c.mode) << '\n';
  out << prefix << "stopwords=" << c.stopwords << '\n';
  out << prefix << "keyword=" << c.keyword << '\n';
  out << prefix << "xmin=" << (c.x_min ? std::to_string(*c.x_min) : "") << '\n';
  out << prefix << "alpha=" << format_double(c.alpha) << '\n';
  out << prefix << "seed=" << c.seed << '\n';
  out << prefix << "top=" << c.top << '\n';
  out << prefix << "out=" << c.out << '\n';
  for (const auto& [key, value] : c.params) out << prefix << "param." << key << '=' << value << '\n';
}

RunConfig parse_provenance(std::istream& in, std::string_view prefix) {
  RunConfig c;
  std::string text;
  while (in.peek() != EOF && std::getline(in, text)) {
    if (text.compare(0, prefix.size(), prefix) != 0) break;
    const std::string body = text.substr(prefix.size());
    const auto eq = body.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = body.substr(0, eq);
    const std::string value = body.substr(eq + 1);
    if (key == "subcommand") c.subcommand = value;
    else if (key == "input") c.inputs.push_back(value);
    else if (key == "degrees") c.degrees = value;
    else if (key == "mode") c.mode = parse_edge_mode(value);
    else if (key == "stopwords") c.stopwords = value;
    else if (key == "keyword") c.keyword = value;
    else if (key == "xmin") c.x_min = value.empty() ? std::nullopt : std::optional{std::stoull(value)};
    else if (key == "alpha") c.alpha = std::stod(value);
    else if (key == "seed") c.seed = std::stoull(value);
    else if (key == "top") c.top = std::stoull(value);
    else if (key == "out") c.out = value;
    else if (key.starts_with("param.")) c.params[key.substr(6)] = value;
  }
  return c;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_table1(std::ostream& out, const CorpusStats& t, const MetricsReport& m, EdgeMode mode) {
  const auto undefined_or = [](const std::optional<std::uint32_t>& v) {
    return v ? std::to_string(*v) : std::string("undefined");
  };
  out << "Description of the Tweets\n";
  line(out, "Number of Total Tweets", with_commas(t.total_tweets));
  line(out, "Number of Tweets without any User Mentions", with_commas(t.tweets_without_mentions));
  line(out, "Number of Tweets with at least one User Mentions", with_commas(t.tweets_with_mentions));
  line(out, "Number of Tweets only including Self Mentions", with_commas(t.tweets_only_self_mentions));
  line(out, "Number of Words", with_commas(t.total_words));
  out << "Description of Network Elements\n";
  line(out, "Number of Nodes (directed)", with_commas(m.nodes_directed));
  line(out, "Number of Links (directed)", with_commas(m.links_directed));
  line(out, "Network Density (directed)", fixed(m.density_directed, 5));
  line(out, "Number of Nodes (undirected)", with_commas(m.nodes_undirected));
  line(out, "Number of Links (undirected)", with_commas(m.links_undirected));
  line(out, "Network Density (undirected)", fixed(m.density_undirected, 5));
  line(out, "Number of Nodes (largest connected component)", with_commas(m.lcc_nodes));
  line(out, "Number of Links (largest connected component)", with_commas(m.lcc_links));
  line(out, "Network Density (largest connected component)", fixed(m.lcc_density, 5));
  line(out, "Radius (largest connected component)", undefined_or(m.lcc_radius));
  line(out, "Diameter (largest connected component)", undefined_or(m.lcc_diameter));
  line(out, "Number of Connected Components", with_commas(m.component_count));
  line(out, "Number of Isolates", with_commas(m.isolate_count));
  line(out, "Average Degree (directed)", fixed(m.avg_degree_directed, 3));
  line(out, "Average Clustering Coefficient (undirected)", fixed(m.avg_clustering_undirected, 3));
  out << "Additional Measures\n";
  line(out, "Number of Words (before stop-word removal)", with_commas(t.total_words_raw));
  line(out, "Average Degree (undirected, 2m/n)", fixed(m.avg_degree_undirected, 3));
  line(out, "Transitivity (undirected)", fixed(m.transitivity, 3));
  line(out, "Number of Triangles", with_commas(m.triangle_count));
  line(out, "Edge Mode", std::string(to_string(mode)));
  line(out, "Clustering Convention", "degree < 2 counts as 0 in the mean");
}

void write_stats_csv(std::ostream& out, const CorpusStats& t, const MetricsReport& m, EdgeMode mode) {
  const std::vector<std::pair<std::string, std::string>> fields{
      {"total_tweets", std::to_string(t.total_tweets)},
      {"tweets_without_mentions", std::to_string(t.tweets_without_mentions)},
      {"tweets_with_mentions", std::to_string(t.tweets_with_mentions)},
      {"tweets_only_self_mentions", std::to_string(t.tweets_only_self_mentions)},
      {"total_words", std::to_string(t.total_words)},
      {"total_words_raw", std::to_string(t.total_words_raw)},
      {"nodes_directed", std::to_string(m.nodes_directed)},
      {"links_directed", std::to_string(m.links_directed)},
      {"density_directed", format_double(m.density_directed)},
      {"nodes_undirected", std::to_string(m.nodes_undirected)},
      {"links_undirected", std::to_string(m.links_undirected)},
      {"density_undirected", format_double(m.density_undirected)},
      {"lcc_nodes", std::to_string(m.lcc_nodes)},
      {"lcc_links", std::to_string(m.lcc_links)},
      {"lcc_density", format_double(m.lcc_density)},
      {"lcc_radius", optional_field(m.lcc_radius)},
      {"lcc_diameter", optional_field(m.lcc_diameter)},
      {"component_count", std::to_string(m.component_count)},
      {"isolate_count", std::to_string(m.isolate_count)},
      {"avg_degree_directed", format_double(m.avg_degree_directed)},
      {"avg_degree_undirected", format_double(m.avg_degree_undirected)},
      {"avg_clustering_undirected", format_double(m.avg_clustering_undirected)},
      {"transitivity", format_double(m.transitivity)},
      {"triangle_count", std::to_string(m.triangle_count)},
      {"connected_triples", std::to_string(m.connected_triples)},
      {"edge_mode", std::string(to_string(mode))},
  };
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
  out << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
  out << '\n';
}

void write_degree_csv(std::ostream& out, const DegreeDistribution& dist) {
  out << "k,count,pmf,ccdf\n";
  std::uint64_t at_least = dist.n;
  for (const auto& [k, count] : dist.histogram) {
    const double n = static_cast<double>(dist.n);
    out << k << ',' << count << ',' << format_double(static_cast<double>(count) / n) << ','
        << format_double(static_cast<double>(at_least) / n) << '\n';
    at_least -= count;
  }
}

void write_fit_csv(std::ostream& out, const std::vector<TailFit>& fits) {
  out << "family,gamma,lambda,mu,sigma,x_min,n_tail,loglik,ks,gamma_se\n";
  for (const auto& f : fits) {
    out << to_string(f.family) << ',' << format_double(f.gamma) << ',' << format_double(f.lambda)
        << ',' << format_double(f.mu) << ',' << format_double(f.sigma) << ',' << f.x_min << ','
        << f.n_tail << ',' << format_double(f.log_likelihood) << ','
        << format_double(f.ks_distance) << ',' << format_double(f.gamma_std_error) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<FitComparison>& comparisons) {
  out << "family_a,family_b,lr,p,preferred\n";
  for (const auto& c : comparisons) {
    out << to_string(c.family_a) << ',' << to_string(c.family_b) << ','
        << format_double(c.normalized_lr) << ',' << format_double(c.p_value) << ','
        << (c.preferred ? to_string(*c.preferred) : std::string_view("inconclusive")) << '\n';
  }
}

void write_growth_csv(std::ostream& out, const std::vector<GrowthRow>& rows) {
  out << "day,cum_nodes,cum_links_directed,cum_links_undirected,cum_isolates,cum_components,"
         "density_directed,density_undirected,density_lcc,lcc_radius,lcc_diameter,avg_degree,"
         "avg_clustering,gamma_power_law,gamma_truncated,x_min,common_node_fraction,"
         "common_link_fraction\n";
  for (const auto& r : rows) {
    out << format_day(r.day) << ',' << r.cum_nodes << ',' << r.cum_links_directed << ','
        << r.cum_links_undirected << ',' << r.cum_isolates << ',' << r.cum_components << ','
        << format_double(r.density_directed) << ',' << format_double(r.density_undirected) << ','
        << format_double(r.density_lcc) << ',' << optional_field(r.lcc_radius) << ','
        << optional_field(r.lcc_diameter) << ',' << format_double(r.avg_degree) << ','
        << format_double(r.avg_clustering) << ',' << optional_field(r.gamma_power_law) << ','
        << optional_field(r.gamma_truncated) << ',' << optional_field(r.x_min) << ','
        << format_double(r.common_node_fraction) << ',' << format_double(r.common_link_fraction)
        << '\n';
  }
}

void write_common_csv(std::ostream& out, const std::map<Day, double>& nodes,
                      const std::map<Day, double>& links) {
  out << "day,node_fraction,link_fraction\n";
  for (const auto& [day, fraction] : nodes) {
    out << format_day(day) << ',' << format_double(fraction) << ',' << format_double(links.at(day))
        << '\n';
  }
}

void write_words_csv(std::ostream& out, const CorpusStats& stats, std::size_t k) {
  out << "rank,word,count,fraction,cumulative_fraction\n";
  const double total = static_cast<double>(stats.total_words);
  std::uint64_t running = 0;
  std::size_t rank = 0;
  for (const auto& [word, count] : top_words(stats, k)) {
    running += count;
    out << ++rank << ',' << word << ',' << count << ','
        << format_double(static_cast<double>(count) / total) << ','
        << format_double(static_cast<double>(running) / total) << '\n';
  }
}

void write_diagnostics_csv(std::ostream& out, const IngestDiagnostics& d) {
  out << "reason,count\n";
  out << "lines_read," << d.lines_read << '\n';
  out << "accepted," << d.accepted << '\n';
  out << "bad_timestamp," << d.bad_timestamp << '\n';
  out << "missing_author," << d.missing_author << '\n';
  out << "duplicate_tweet_id," << d.duplicate_tweet_id << '\n';
  out << "malformed_record," << d.malformed_record << '\n';
  out << "filtered_by_keyword," << d.filtered_by_keyword << '\n';
}

}  // namespace mentionnet
