#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mentionnet {

using UserId = std::uint64_t;
using TweetId = std::uint64_t;
using Timestamp = std::chrono::sys_seconds;
using Day = std::chrono::sys_days;

enum class ErrorKind {
  io,
  usage,
  invalid_argument,
  empty_input,
  degenerate_data,
  not_converged,
  disconnected,
  unknown_node,
  mismatched_xmin,
};

std::string_view to_string(ErrorKind kind);

// Every defined failure of the library surfaces as this exception; the kind
// is what the CLI prints in its machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class EdgeMode { root_only, all_mentions };

std::string_view to_string(EdgeMode mode);
EdgeMode parse_edge_mode(std::string_view text);

}  // namespace mentionnet
