#include "config.hpp"

#include <fstream>
#include <set>

namespace laxalg::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const std::string& key, const std::string& path)
{
  if (!j.is_object())
    throw ConfigError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ConfigError(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

Scalar rational(const json& j, const std::string& path)
{
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  if (!j.is_string())
    throw ConfigError(path, "expected a rational as an integer or a \"p/q\" string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

long integer(const json& j, const std::string& path)
{
  if (!j.is_number_integer())
    throw ConfigError(path, "expected an integer");
  return j.get<long>();
}

std::vector<Scalar> rationals(const json& j, const std::string& path)
{
  if (!j.is_array())
    throw ConfigError(path, "expected a list");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

GradingSpec pvec(const json& j, const std::string& path, const RootSystem& rs)
{
  if (!j.is_array())
    throw ConfigError(path, "expected a list of nonnegative integers");
  GradingSpec s;
  for (std::size_t i = 0; i < j.size(); ++i)
    s.push_back(integer(j[i], path + "[" + std::to_string(i) + "]"));
  try {
    validate_spec(rs, s);
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
  return s;
}

std::string scalar_json(const Scalar& s)
{
  return to_string(s);
}

}  // namespace

RunConfig parse_config(const json& j)
{
  RunConfig c;
  const json& alg = field(j, "algebra", "");
  try {
    c.type = parse_root_type(field(alg, "type", "algebra").get<std::string>());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("algebra.type", e.what());
  }
  if (c.type != RootType::G2)
    c.rank = static_cast<int>(integer(field(alg, "rank", "algebra"), "algebra.rank"));
  RootSystem rs;
  try {
    if (c.rank < 1)
      throw std::invalid_argument("rank must be positive");
    rs = build_root_system(c.type, c.model_param());
  } catch (const std::exception& e) {
    throw ConfigError("algebra.rank", e.what());
  }

  const json& curve = field(j, "curve", "");
  c.curve.P = rationals(field(curve, "P", "curve"), "curve.P");
  c.curve.Q = rationals(field(curve, "Q", "curve"), "curve.Q");
  if (curve.contains("gamma")) {
    const json& g = curve["gamma"];
    if (!g.is_array())
      throw ConfigError("curve.gamma", "expected a list");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string p = "curve.gamma[" + std::to_string(i) + "]";
      c.curve.gamma.push_back({rational(field(g[i], "coord", p), p + ".coord"), pvec(field(g[i], "pvec", p), p + ".pvec", rs)});
    }
  }
  try {
    c.curve.validate();
  } catch (const std::exception& e) {
    throw ConfigError("curve", e.what());
  }

  if (!j.contains("schedule") || (j["schedule"].is_string() && j["schedule"] == "default")) {
    c.schedule = default_schedule(c.curve);
  } else {
    const json& s = j["schedule"];
    c.default_schedule = false;
    c.schedule.slopes = rationals(field(s, "slopes", "schedule"), "schedule.slopes");
    const json& off = field(s, "offsets", "schedule");
    if (!off.is_array() || off.empty())
      throw ConfigError("schedule.offsets", "expected a non-empty list of rows");
    c.schedule.period = static_cast<long>(off.size());
    for (std::size_t r = 0; r < off.size(); ++r)
      c.schedule.offsets.push_back(rationals(off[r], "schedule.offsets[" + std::to_string(r) + "]"));
    if (c.schedule.slopes.size() != c.curve.M())
      throw ConfigError("schedule.slopes", "one slope per Q point is required");
    for (std::size_t r = 0; r < c.schedule.offsets.size(); ++r)
      if (c.schedule.offsets[r].size() != c.curve.M())
        throw ConfigError("schedule.offsets[" + std::to_string(r) + "]", "one offset per Q point is required");
    try {
      c.schedule.validate(c.curve.N());
    } catch (const std::exception& e) {
      throw ConfigError("schedule", e.what());
    }
  }

  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_array() || w.size() != 2)
      throw ConfigError("window", "expected [m_min, m_max]");
    c.m_min = integer(w[0], "window[0]");
    c.m_max = integer(w[1], "window[1]");
    if (c.m_min > c.m_max)
      throw ConfigError("window", "m_min exceeds m_max");
  }
  if (j.contains("form")) {
    try {
      c.form = parse_form(j["form"].get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError("form", e.what());
    }
  }
  if (j.contains("suites")) {
    static const std::set<std::string> known{"grading", "almost-graded", "cocycle", "tyurin", "all"};
    const json& s = j["suites"];
    if (!s.is_array())
      throw ConfigError("suites", "expected a list");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string p = "suites[" + std::to_string(i) + "]";
      if (!s[i].is_string() || !known.contains(s[i].get<std::string>()))
        throw ConfigError(p, "unknown suite");
      c.suites.push_back(s[i].get<std::string>());
    }
  }
  if (j.contains("pvec"))
    c.pvecs.push_back(pvec(j["pvec"], "pvec", rs));
  return c;
}

RunConfig load_config(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("--config", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", std::string("not valid JSON: ") + e.what());
  }
  try {
    return parse_config(j);
  } catch (const json::exception& e) {
    throw ConfigError("config", e.what());
  }
}

nlohmann::ordered_json to_json(const RunConfig& c)
{
  nlohmann::ordered_json j;
  j["algebra"] = {{"type", to_string(c.type)}, {"rank", c.rank}};
  nlohmann::ordered_json curve;
  curve["P"] = nlohmann::ordered_json::array();
  for (const auto& p : c.curve.P)
    curve["P"].push_back(scalar_json(p));
  curve["Q"] = nlohmann::ordered_json::array();
  for (const auto& q : c.curve.Q)
    curve["Q"].push_back(scalar_json(q));
  curve["gamma"] = nlohmann::ordered_json::array();
  for (const auto& g : c.curve.gamma)
    curve["gamma"].push_back(nlohmann::ordered_json{{"coord", scalar_json(g.coord)}, {"pvec", g.spec}});
  j["curve"] = curve;
  nlohmann::ordered_json s;
  s["slopes"] = nlohmann::ordered_json::array();
  for (const auto& a : c.schedule.slopes)
    s["slopes"].push_back(scalar_json(a));
  s["offsets"] = nlohmann::ordered_json::array();
  for (const auto& row : c.schedule.offsets) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& b : row)
      r.push_back(scalar_json(b));
    s["offsets"].push_back(r);
  }
  j["schedule"] = s;
  j["window"] = {c.m_min, c.m_max};
  j["form"] = to_string(c.form);
  return j;
}

}  // namespace laxalg::cli
