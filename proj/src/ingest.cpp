#include "mentionnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>
#include <variant>

#include <json.hpp>

#include "mentionnet/parallel.hpp"
#include "mentionnet/time_util.hpp"

namespace mentionnet {
namespace {

using json = nlohmann::json;

enum class Reject { none, malformed, missing_author, bad_timestamp };

struct LineOutcome {
  Reject reject = Reject::none;
  bool skipped = false;  // blank or comment
  TweetRecord record;
};

std::optional<std::uint64_t> parse_id(const json& value) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer()) {
    auto v = value.get<std::int64_t>();
    if (v < 0) return std::nullopt;
    return static_cast<std::uint64_t>(v);
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.empty()) return std::nullopt;
    std::uint64_t out = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

LineOutcome parse_line(std::string_view line) {
  LineOutcome out;
  if (is_blank(line) || line.front() == '#') {
    out.skipped = true;
    return out;
  }
  json obj = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    out.reject = Reject::malformed;
    return out;
  }
  auto tweet_it = obj.find("tweet_id");
  if (tweet_it == obj.end()) {
    out.reject = Reject::malformed;
    return out;
  }
  auto tweet_id = parse_id(*tweet_it);
  if (!tweet_id) {
    out.reject = Reject::malformed;
    return out;
  }
  auto user_it = obj.find("user_id");
  if (user_it == obj.end() || user_it->is_null()) {
    out.reject = Reject::missing_author;
    return out;
  }
  auto author = parse_id(*user_it);
  if (!author) {
    out.reject = Reject::malformed;
    return out;
  }
  auto created_it = obj.find("created_at");
  if (created_it == obj.end() || !created_it->is_string()) {
    out.reject = Reject::bad_timestamp;
    return out;
  }
  auto created = parse_timestamp(created_it->get_ref<const std::string&>());
  if (!created) {
    out.reject = Reject::bad_timestamp;
    return out;
  }
  auto text_it = obj.find("text");
  auto mentions_it = obj.find("user_mentions");
  if (text_it == obj.end() || !text_it->is_string() || mentions_it == obj.end() ||
      !mentions_it->is_array()) {
    out.reject = Reject::malformed;
    return out;
  }
  out.record.mention_ids.reserve(mentions_it->size());
  for (const auto& m : *mentions_it) {
    auto id = parse_id(m);
    if (!id) {
      out.reject = Reject::malformed;
      return out;
    }
    out.record.mention_ids.push_back(*id);
  }
  out.record.tweet_id = *tweet_id;
  out.record.author_id = *author;
  out.record.created_at = *created;
  out.record.text = text_it->get<std::string>();
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

IngestResult parse_lines(const std::vector<std::string>& lines, const IngestConfig& config) {
  std::vector<LineOutcome> outcomes(lines.size());
  parallel_for(lines.size(), config.threads,
               [&](std::size_t i) { outcomes[i] = parse_line(lines[i]); });

  const std::string keyword = ascii_lower(config.keyword);
  IngestResult result;
  auto& diag = result.diagnostics;
  std::unordered_set<TweetId> seen;
  for (auto& outcome : outcomes) {
    if (outcome.skipped) continue;
    ++diag.lines_read;
    switch (outcome.reject) {
      case Reject::malformed: ++diag.malformed_record; continue;
      case Reject::missing_author: ++diag.missing_author; continue;
      case Reject::bad_timestamp: ++diag.bad_timestamp; continue;
      case Reject::none: break;
    }
    if (!seen.insert(outcome.record.tweet_id).second) {
      ++diag.duplicate_tweet_id;
      continue;
    }
    if (!keyword.empty() && ascii_lower(outcome.record.text).find(keyword) == std::string::npos) {
      ++diag.filtered_by_keyword;
      continue;
    }
    ++diag.accepted;
    result.records.push_back(std::move(outcome.record));
  }
  return result;
}

}  // namespace

IngestResult parse_tweets(std::istream& source, const IngestConfig& config) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(source, line)) lines.push_back(std::move(line));
  if (source.bad()) throw Error(ErrorKind::io, "failed while reading tweet source");
  return parse_lines(lines, config);
}

IngestResult parse_tweets(std::string_view text, const IngestConfig& config) {
  std::istringstream in{std::string(text)};
  return parse_tweets(in, config);
}

IngestResult parse_tweets_file(const std::filesystem::path& path, const IngestConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open input '" + path.string() + "'");
  return parse_tweets(in, config);
}

std::string to_canonical_line(const TweetRecord& record) {
  nlohmann::ordered_json obj;
  obj["tweet_id"] = std::to_string(record.tweet_id);
  obj["user_id"] = std::to_string(record.author_id);
  obj["created_at"] = format_timestamp(record.created_at);
  obj["text"] = record.text;
  auto mentions = nlohmann::ordered_json::array();
  for (auto id : record.mention_ids) mentions.push_back(std::to_string(id));
  obj["user_mentions"] = std::move(mentions);
  return obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open stop-word file '" + path.string() + "'");
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    auto begin = line.find_first_not_of(" \t");
    words.insert(ascii_lower(line.substr(begin, end - begin + 1)));
  }
  return words;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    const bool word_char = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                           (c >= 'A' && c <= 'Z') || c >= 0x80;
    if (word_char) {
      current.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

CorpusStats corpus_stats(const std::vector<TweetRecord>& records,
                         const std::set<std::string>& stopwords) {
  CorpusStats stats;
  for (const auto& r : records) {
    ++stats.total_tweets;
    if (r.mention_ids.empty()) {
      ++stats.tweets_without_mentions;
    } else {
      ++stats.tweets_with_mentions;
      const bool only_self = std::all_of(r.mention_ids.begin(), r.mention_ids.end(),
                                         [&](UserId id) { return id == r.author_id; });
      if (only_self) ++stats.tweets_only_self_mentions;
    }
    for (auto& token : tokenize(r.text)) {
      ++stats.total_words_raw;
      if (stopwords.contains(token)) continue;
      ++stats.total_words;
      ++stats.word_frequencies[std::move(token)];
    }
  }
  return stats;
}

std::vector<std::pair<std::string, std::uint64_t>> top_words(const CorpusStats& stats,
                                                            std::size_t k) {
  std::vector<std::pair<std::string, std::uint64_t>> ranked(stats.word_frequencies.begin(),
                                                           stats.word_frequencies.end());
  auto by_count = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  k = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end(),
                    by_count);
  ranked.resize(k);
  return ranked;
}

double top_k_contribution(const CorpusStats& stats, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "k must be at least 1");
  if (stats.total_words == 0) throw Error(ErrorKind::empty_input, "corpus has no words");
  std::uint64_t covered = 0;
  for (const auto& [word, count] : top_words(stats, k)) covered += count;
  return static_cast<double>(covered) / static_cast<double>(stats.total_words);
}

std::map<Day, std::vector<TweetRecord>> bucket_by_day(const std::vector<TweetRecord>& records) {
  std::map<Day, std::vector<TweetRecord>> buckets;
  for (const auto& r : records) buckets[utc_day(r.created_at)].push_back(r);
  return buckets;
}

}  // namespace mentionnet
