#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace instanton::cli {

/// Settings normally taken from INSTANTON_MAX_DEGREE and INSTANTON_CACHE_DIR.
struct Environment {
  std::optional<std::string> max_degree;
  std::optional<std::string> cache_dir;

  static Environment from_process();
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code: 0 ok, 1 usage, 2 parse or validation, 3 unsupported
/// field tower, 4 singular input, 5 certification failure or table mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace instanton::cli
