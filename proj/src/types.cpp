#include "mentionnet/types.hpp"

namespace mentionnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return "io";
    case ErrorKind::usage: return "usage";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::empty_input: return "empty_input";
    case ErrorKind::degenerate_data: return "degenerate_data";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::unknown_node: return "unknown_node";
    case ErrorKind::mismatched_xmin: return "mismatched_xmin";
  }
  return "unknown";
}

std::string_view to_string(EdgeMode mode) {
  return mode == EdgeMode::root_only ? "root-only" : "all-mentions";
}

EdgeMode parse_edge_mode(std::string_view text) {
  if (text == "root-only") return EdgeMode::root_only;
  if (text == "all-mentions") return EdgeMode::all_mentions;
  throw Error(ErrorKind::usage, "unknown edge mode '" + std::string(text) + "'");
}

}  // namespace mentionnet
