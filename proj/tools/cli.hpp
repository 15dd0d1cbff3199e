#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mentionnet::cli {

enum ExitCode : int { ok = 0, usage = 2, io = 3, analysis = 4 };

// Runs one invocation; args excludes the program name. Human output goes to
// `out`; failures print a single JSON error object on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mentionnet::cli
