#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mentionnet/types.hpp"

namespace mentionnet {

// Accepts `2016-04-28T02:45:40Z` and the classic Twitter form
// `Thu Apr 28 02:45:40 +0000 2016`. Offsets other than +0000 are folded
// into UTC. Returns nullopt for anything else, including impossible dates.
std::optional<Timestamp> parse_timestamp(std::string_view text);

std::string format_timestamp(Timestamp ts);  // ISO-8601, trailing Z
std::string format_day(Day day);             // YYYY-MM-DD
std::optional<Day> parse_day(std::string_view text);

inline Day utc_day(Timestamp ts) { return std::chrono::floor<std::chrono::days>(ts); }

}  // namespace mentionnet
