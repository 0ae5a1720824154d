#ifndef LAXALG_TOOLS_CLI_HPP
#define LAXALG_TOOLS_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace laxalg::cli {

enum ExitCode { kPass = 0, kFail = 1, kConfigError = 2 };

struct Check {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json observed;
  nlohmann::ordered_json expected;
  /// exact inputs reproducing a failure
  std::vector<std::string> witnesses;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
};

struct Report {
  std::string command;
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
  std::vector<Suite> suites;
  /// human-readable table, printed before the checks
  std::vector<std::string> table;
  bool ok() const;
  nlohmann::ordered_json to_json() const;
  std::string render() const;
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace laxalg::cli

#endif
