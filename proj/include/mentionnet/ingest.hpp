#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mentionnet/types.hpp"

namespace mentionnet {

struct TweetRecord {
  TweetId tweet_id = 0;
  UserId author_id = 0;
  Timestamp created_at{};
  std::string text;
  std::vector<UserId> mention_ids;  // source order preserved

  bool operator==(const TweetRecord&) const = default;
};

struct IngestConfig {
  // Case-insensitive substring filter on text; empty means no filter.
  std::string keyword;
  std::size_t threads = 1;
};

struct IngestDiagnostics {
  std::uint64_t lines_read = 0;  // non-blank, non-comment lines
  std::uint64_t accepted = 0;
  std::uint64_t bad_timestamp = 0;
  std::uint64_t missing_author = 0;
  std::uint64_t duplicate_tweet_id = 0;
  std::uint64_t malformed_record = 0;
  std::uint64_t filtered_by_keyword = 0;

  std::uint64_t rejected() const {
    return bad_timestamp + missing_author + duplicate_tweet_id + malformed_record;
  }
  bool operator==(const IngestDiagnostics&) const = default;
};

struct IngestResult {
  std::vector<TweetRecord> records;
  IngestDiagnostics diagnostics;
};

// Line-delimited JSON objects with keys tweet_id, user_id, created_at, text,
// user_mentions. Blank lines and lines starting with '#' are skipped. Bad
// lines are counted, never fatal. Duplicate tweet ids keep the first record.
IngestResult parse_tweets(std::istream& source, const IngestConfig& config = {});
IngestResult parse_tweets(std::string_view text, const IngestConfig& config = {});
// Throws Error(io) if the file cannot be opened.
IngestResult parse_tweets_file(const std::filesystem::path& path, const IngestConfig& config = {});

// One canonical JSON line per record, in the same schema parse_tweets reads.
std::string to_canonical_line(const TweetRecord& record);

std::set<std::string> load_stopwords(const std::filesystem::path& path);

struct CorpusStats {
  std::uint64_t total_tweets = 0;
  std::uint64_t tweets_without_mentions = 0;
  std::uint64_t tweets_with_mentions = 0;
  std::uint64_t tweets_only_self_mentions = 0;
  std::uint64_t total_words = 0;      // after stop-word removal
  std::uint64_t total_words_raw = 0;  // before stop-word removal
  std::map<std::string, std::uint64_t> word_frequencies;

  bool operator==(const CorpusStats&) const = default;
};

// Lowercased ASCII letters/digits plus any non-ASCII byte form word
// characters; everything else separates tokens.
std::vector<std::string> tokenize(std::string_view text);

CorpusStats corpus_stats(const std::vector<TweetRecord>& records,
                         const std::set<std::string>& stopwords = {});

// Largest counts first, ties by word.
std::vector<std::pair<std::string, std::uint64_t>> top_words(const CorpusStats& stats,
                                                            std::size_t k);

// Share of all (filtered) words covered by the k most frequent ones.
// Throws Error(empty_input) when the corpus has no words.
double top_k_contribution(const CorpusStats& stats, std::size_t k);

std::map<Day, std::vector<TweetRecord>> bucket_by_day(const std::vector<TweetRecord>& records);

}  // namespace mentionnet
