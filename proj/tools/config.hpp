#ifndef LAXALG_TOOLS_CONFIG_HPP
#define LAXALG_TOOLS_CONFIG_HPP

#include "laxalg/cocycle.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace laxalg::cli {

/// Invalid configuration; path names the offending field, e.g. "curve.gamma[1].pvec".
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path))
  {
  }
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct RunConfig {
  RootType type = RootType::A;
  /// Rank of the root system; A with rank r is sl(r+1). Ignored for G2.
  int rank = 1;
  MarkedCurve curve;
  DegreeSchedule schedule;
  bool default_schedule = true;
  long m_min = -2, m_max = 2;
  FormKind form = FormKind::Trace;
  std::vector<std::string> suites;
  /// Explicit grading for the grade command; defaults to the gamma gradings.
  std::vector<GradingSpec> pvecs;

  /// Parameter for build_algebra / build_root_system.
  int model_param() const { return type == RootType::A ? rank + 1 : rank; }
};

/// Parses and validates; throws ConfigError.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Canonical JSON rendering of a config (rationals as "p/q" strings).
nlohmann::ordered_json to_json(const RunConfig& c);

}  // namespace laxalg::cli

#endif
