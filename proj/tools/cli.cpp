#include "cli.hpp"

#include "cache.hpp"
#include "config.hpp"

#include "laxalg/tyurin.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace laxalg::cli {

using nlohmann::ordered_json;

bool Report::ok() const
{
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      if (!c.pass)
        return false;
  return true;
}

ordered_json Report::to_json() const
{
  ordered_json j;
  j["command"] = command;
  j["status"] = ok() ? "pass" : "fail";
  j["info"] = info;
  ordered_json ss = ordered_json::object();
  for (const auto& s : suites) {
    ordered_json checks = ordered_json::object();
    for (const auto& c : s.checks) {
      ordered_json e;
      e["status"] = c.pass ? "pass" : "fail";
      e["observed"] = c.observed;
      e["expected"] = c.expected;
      e["witnesses"] = c.witnesses;
      checks[c.name] = e;
    }
    ss[s.name] = ordered_json{{"info", s.info}, {"checks", checks}};
  }
  j["suites"] = ss;
  return j;
}

namespace {

std::string brief(const ordered_json& j)
{
  return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace

std::string Report::render() const
{
  std::ostringstream o;
  for (const auto& line : table)
    o << line << '\n';
  for (const auto& s : suites) {
    o << "[" << s.name << "]\n";
    for (const auto& c : s.checks) {
      o << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.observed.is_null())
        o << "  observed " << brief(c.observed);
      if (!c.expected.is_null())
        o << "  expected " << brief(c.expected);
      o << '\n';
      for (const auto& w : c.witnesses)
        o << "      witness: " << w << '\n';
    }
  }
  o << (ok() ? "result: pass" : "result: FAIL") << '\n';
  return o.str();
}

namespace {

struct Options {
  std::string config_path;
  bool machine = false;
  std::string cache_dir;
  std::string degree;
  std::string suite;
  std::string case_name;
};

/// Everything a config-driven command needs.
struct Context {
  RunConfig cfg;
  AlgebraPtr alg;
  std::unique_ptr<LaxOperatorAlgebra> lax;
  std::optional<BasisCache> cache;

  std::shared_ptr<const DegreeBasis> basis(long m, bool* hit = nullptr) const
  {
    if (cache)
      return cache->fetch(*lax, m, hit);
    if (hit)
      *hit = false;
    return lax->degree_subspace(m);
  }
  void prepare(long lo, long hi) const
  {
    if (!cache) {
      lax->precompute(lo, hi);
      return;
    }
    for (long m = lo; m <= hi; ++m)
      basis(m);
  }
};

Context make_context(const Options& o)
{
  if (o.config_path.empty())
    throw ConfigError("--config", "a configuration file is required for this command");
  Context c;
  c.cfg = load_config(o.config_path);
  try {
    c.alg = build_algebra(c.cfg.type, c.cfg.model_param());
    c.lax = std::make_unique<LaxOperatorAlgebra>(c.alg, c.cfg.curve, c.cfg.schedule);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config", e.what());
  }
  c.cache = BasisCache::from(o.cache_dir);
  return c;
}

std::pair<long, std::optional<long>> parse_degree(const std::string& s)
{
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size())
      throw ConfigError("--degree", "expected m or m,n with integers, got '" + s + "'");
    return v;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    return {num(s), std::nullopt};
  return {num(s.substr(0, comma)), num(s.substr(comma + 1))};
}

std::string spec_string(const GradingSpec& s)
{
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::vector<GradingSpec> gradings_of(const RunConfig& cfg)
{
  std::vector<GradingSpec> out = cfg.pvecs;
  for (const auto& g : cfg.curve.gamma)
    if (std::find(out.begin(), out.end(), g.spec) == out.end())
      out.push_back(g.spec);
  return out;
}

///////////////////////////////////
// grading                       //
///////////////////////////////////

Suite grading_suite(const Context& c, std::vector<std::string>* table)
{
  Suite s{"grading", {}, ordered_json::object()};
  const auto specs = gradings_of(c.cfg);
  if (specs.empty())
    throw ConfigError("pvec", "no grading given: add a top-level pvec or gamma points");
  for (const auto& spec : specs) {
    const auto gr = grade(c.alg, spec);
    const std::string tag = spec_string(spec);
    ordered_json dims = ordered_json::object();
    if (table) {
      table->push_back(c.alg->name() + " pvec " + tag + ", depth " + std::to_string(gr.depth));
      table->push_back("  level  dim");
    }
    for (long p = -gr.depth; p <= gr.depth; ++p) {
      dims[std::to_string(p)] = gr.dim_at(p);
      if (table) {
        std::string row = std::to_string(p);
        table->push_back("  " + std::string(5 - std::min<std::size_t>(5, row.size()), ' ') + row + "  " +
                         std::to_string(gr.dim_at(p)));
      }
    }
    const auto cr = codim_report(gr);
    ordered_json codims = ordered_json::object();
    for (const auto& [p, v] : cr.codims)
      codims[std::to_string(p)] = v;
    if (table)
      table->push_back("  c_gamma = " + std::to_string(cr.c_gamma) + ", k dim g = " + std::to_string(cr.k_dim_g));
    s.info[tag] = ordered_json{{"depth", gr.depth}, {"dims", dims}, {"codims", codims}, {"c_gamma", cr.c_gamma}};
    const auto vr = verify_grading(gr, c.alg->killing_gram());
    s.checks.push_back({"grading invariants " + tag, vr.ok(), vr.violations.size(), 0, vr.violations});
    Check cc{"codimension identity " + tag, cr.ok(), cr.c_gamma, cr.k_dim_g, {}};
    if (!cc.pass)
      cc.witnesses.push_back("pvec " + tag + " on " + c.alg->name());
    s.checks.push_back(cc);
  }
  return s;
}

///////////////////////////////////
// almost graded structure       //
///////////////////////////////////

Suite almost_graded_suite(const Context& c)
{
  Suite s{"almost-graded", {}, ordered_json::object()};
  const long lo = c.cfg.m_min, hi = c.cfg.m_max;
  // brackets reach 2 lo .. 2 hi, decomposed over a window of 2 on each side
  c.prepare(2 * lo - 2, 2 * hi + 2);
  const std::size_t want = c.cfg.curve.N() * c.alg->dim();
  for (long m = lo; m <= hi; ++m) {
    const auto b = c.basis(m);
    Check d{"dimension L_" + std::to_string(m), b->dim() == want, b->dim(), want, {}};
    if (!d.pass)
      d.witnesses.push_back("m = " + std::to_string(m) + ": ambient " + std::to_string(b->ambient_dim) +
                            ", constraint rank " + std::to_string(b->constraint_rank));
    s.checks.push_back(d);
  }
  const auto r = c.lax->verify_almost_graded(lo, hi, 2);
  s.info = ordered_json{{"pairs", r.pairs}, {"R", r.R}, {"S", r.S}, {"in_target", r.in_target}};
  std::vector<std::string> wit;
  for (const auto& w : r.witnesses)
    wit.push_back("m = " + std::to_string(w.m) + ", n = " + std::to_string(w.n) + ", basis " + std::to_string(w.i) +
                  " x " + std::to_string(w.j) + ": " + w.reason);
  auto with = [&](const std::string& key) {
    std::vector<std::string> out;
    for (const auto& w : wit)
      if (w.find(key) != std::string::npos)
        out.push_back(w);
    if (out.size() > 8)
      out.resize(8);
    return out;
  };
  s.checks.push_back({"closure", r.closure_failures == 0, r.closure_failures, 0, with("leaves the algebra")});
  s.checks.push_back({"unique decomposition", r.not_unique == 0, r.not_unique, 0, with("not independent")});
  s.checks.push_back({"strict grading", r.off_degree == 0 && r.outside_window == 0 && r.not_unique == 0,
                      ordered_json{{"off_degree", r.off_degree}, {"outside_window", r.outside_window}},
                      ordered_json{{"off_degree", 0}, {"outside_window", 0}}, with("component in degree")});
  s.checks.push_back({"spread R = S = 0", r.R == 0 && r.S == 0 && r.not_unique == 0,
                      ordered_json{{"R", r.R}, {"S", r.S}}, ordered_json{{"R", 0}, {"S", 0}}, {}});
  return s;
}

///////////////////////////////////
// cocycle                       //
///////////////////////////////////

Suite cocycle_suite(const Context& c)
{
  Suite s{"cocycle", {}, ordered_json::object()};
  const auto& lax = *c.lax;
  const auto w = build_omega(lax);
  const auto wbad = check_omega(lax, w);
  s.checks.push_back({"connection form", wbad.empty(), wbad.empty() ? "ok" : wbad, "ok", {}});
  const auto bounds = locality_bounds(lax, w);
  s.info["locality"] = ordered_json{{"lower", bounds.lower}, {"upper", bounds.upper}};
  const long lo = c.cfg.m_min, hi = c.cfg.m_max;
  c.prepare(std::min(lo, 0L), std::max(hi, 1L));
  ConnectionForm none = w;
  for (auto& f : none.coords)
    f = RatFun();

  std::size_t pairs = 0, poles = 0, asym = 0, qmis = 0, nonlocal = 0, bare_poles = 0, cob = 0, cob_pairs = 0;
  std::vector<std::string> wpole, wasym, wq, wloc, wcob;
  auto tag = [](long m, long n, std::size_t i, std::size_t j) {
    return "m = " + std::to_string(m) + ", n = " + std::to_string(n) + ", basis " + std::to_string(i) + " x " +
           std::to_string(j);
  };
  auto note = [](std::vector<std::string>& v, std::string x) {
    if (v.size() < 8)
      v.push_back(std::move(x));
  };
  for (long m = lo; m <= hi; ++m)
    for (long n = lo; n <= hi; ++n) {
      const auto bm = c.basis(m), bn = c.basis(n);
      for (std::size_t i = 0; i < bm->dim(); ++i)
        for (std::size_t j = 0; j < bn->dim(); ++j) {
          const auto& x = bm->elements[i];
          const auto& y = bn->elements[j];
          ++pairs;
          for (bool ok : check_gamma_holomorphy(lax, x, y, w, c.cfg.form))
            if (!ok) {
              ++poles;
              note(wpole, tag(m, n, i, j));
            }
          for (bool ok : check_gamma_holomorphy(lax, x, y, none, c.cfg.form))
            bare_poles += !ok;
          const auto xy = eta(lax, x, y, w, c.cfg.form);
          const auto yx = eta(lax, y, x, w, c.cfg.form);
          if (xy.value != -yx.value) {
            ++asym;
            note(wasym, tag(m, n, i, j));
          }
          if (xy.value != xy.q_value) {
            ++qmis;
            note(wq, tag(m, n, i, j));
          }
          if ((m + n < bounds.lower || m + n > bounds.upper) && xy.value != 0) {
            ++nonlocal;
            note(wloc, tag(m, n, i, j) + ": eta = " + to_string(xy.value));
          }
          if (std::abs(m) <= 1 && std::abs(n) <= 1) {
            ++cob_pairs;
            const auto sides = coboundary_identity(lax, x, y, w, c.cfg.form);
            if (!sides.equal()) {
              ++cob;
              note(wcob, tag(m, n, i, j));
            }
          }
        }
    }
  s.info["pairs"] = pairs;
  s.info["gamma_poles_without_omega"] = bare_poles;
  s.checks.push_back({"gamma holomorphy", poles == 0, poles, 0, wpole});
  s.checks.push_back({"antisymmetry", asym == 0, asym, 0, wasym});
  s.checks.push_back({"P and Q residue sums agree", qmis == 0, qmis, 0, wq});
  s.checks.push_back({"locality", nonlocal == 0, nonlocal, 0, wloc});
  s.checks.push_back({"coboundary identity", cob == 0, ordered_json{{"failures", cob}, {"pairs", cob_pairs}}, 0, wcob});

  std::vector<CurrentElement> elems;
  for (long m = 0; m <= 1; ++m)
    for (const auto& e : c.basis(m)->elements)
      elems.push_back(e);
  const auto id = verify_cocycle_identity(lax, elems, w, c.cfg.form);
  s.checks.push_back({"cocycle identity on L_0 + L_1", id.ok(),
                      ordered_json{{"failures", id.failures}, {"triples", id.checked}}, 0, id.witnesses});
  return s;
}

///////////////////////////////////
// Tyurin data                   //
///////////////////////////////////

Suite tyurin_suite(const std::string& filter)
{
  Suite s{"tyurin", {}, ordered_json::object()};
  std::vector<TyurinCheck> checks;
  try {
    checks = run_tyurin_suite(filter);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("--case", e.what());
  }
  for (const auto& t : checks) {
    Check c{t.name, t.passed, t.detail, nullptr, {}};
    if (!t.passed)
      c.witnesses.push_back("case " + to_string(t.tag) + ", n = " + std::to_string(t.n));
    s.checks.push_back(c);
  }
  return s;
}

///////////////////////////////////
// commands                      //
///////////////////////////////////

Report cmd_grade(const Options& o)
{
  const auto c = make_context(o);
  Report r;
  r.command = "grade";
  r.info["algebra"] = c.alg->name();
  r.info["dim"] = c.alg->dim();
  r.suites.push_back(grading_suite(c, &r.table));
  return r;
}

Report cmd_basis(const Options& o)
{
  const auto c = make_context(o);
  Report r;
  r.command = "basis";
  r.info["config"] = to_json(c.cfg);
  long lo = c.cfg.m_min, hi = c.cfg.m_max;
  if (!o.degree.empty()) {
    const auto [m, n] = parse_degree(o.degree);
    lo = m;
    hi = n.value_or(m);
    if (lo > hi)
      throw ConfigError("--degree", "m exceeds n");
  }
  Suite s{"basis", {}, ordered_json::object()};
  const std::size_t want = c.cfg.curve.N() * c.alg->dim();
  r.table.push_back(c.alg->name() + ", N = " + std::to_string(c.cfg.curve.N()) + ", dim g = " +
                    std::to_string(c.alg->dim()));
  for (long m = lo; m <= hi; ++m) {
    bool hit = false;
    const auto b = c.basis(m, &hit);
    ordered_json elems = ordered_json::array();
    r.table.push_back("L_" + std::to_string(m) + ": dim " + std::to_string(b->dim()) + (hit ? " (cached)" : ""));
    for (std::size_t i = 0; i < b->dim(); ++i) {
      const auto a = b->coordinate[i];
      const auto f = b->elements[i].coords[a].to_string();
      elems.push_back(ordered_json{{"coordinate", a}, {"function", f}});
      r.table.push_back("  [" + std::to_string(a) + "] " + f);
    }
    s.info[std::to_string(m)] = ordered_json{{"dim", b->dim()},
                                             {"ambient_dim", b->ambient_dim},
                                             {"constraint_rank", b->constraint_rank},
                                             {"elements", elems}};
    Check d{"dimension L_" + std::to_string(m), b->dim() == want, b->dim(), want, {}};
    if (!d.pass)
      d.witnesses.push_back("m = " + std::to_string(m) + " (non-generic: constraint rank " +
                            std::to_string(b->constraint_rank) + " of ambient " + std::to_string(b->ambient_dim) + ")");
    s.checks.push_back(d);
  }
  r.suites.push_back(s);
  return r;
}

Report cmd_verify(const Options& o)
{
  std::vector<std::string> suites;
  if (!o.suite.empty())
    suites.push_back(o.suite);
  Report r;
  r.command = "verify";
  std::optional<Context> c;
  if (!o.config_path.empty()) {
    c.emplace(make_context(o));
    if (suites.empty())
      suites = c->cfg.suites;
  }
  if (suites.empty())
    suites.push_back("all");
  static const std::set<std::string> known{"grading", "almost-graded", "cocycle", "tyurin", "all"};
  for (const auto& s : suites)
    if (!known.contains(s))
      throw ConfigError("--suite", "unknown suite '" + s + "'");
  auto want = [&](const std::string& s) {
    return std::find(suites.begin(), suites.end(), s) != suites.end() ||
           std::find(suites.begin(), suites.end(), "all") != suites.end();
  };
  const bool needs_config = want("grading") || want("almost-graded") || want("cocycle");
  if (needs_config && !c)
    throw ConfigError("--config", "the grading, almost-graded and cocycle suites need a configuration");
  if (c)
    r.info["algebra"] = c->alg->name();
  if (c && want("grading") && !gradings_of(c->cfg).empty())
    r.suites.push_back(grading_suite(*c, nullptr));
  if (want("almost-graded"))
    r.suites.push_back(almost_graded_suite(*c));
  if (want("cocycle"))
    r.suites.push_back(cocycle_suite(*c));
  if (want("tyurin"))
    r.suites.push_back(tyurin_suite(o.case_name));
  return r;
}

Report cmd_cocycle(const Options& o)
{
  const auto c = make_context(o);
  if (o.degree.empty())
    throw ConfigError("--degree", "the cocycle table needs --degree m,n");
  const auto [m, nn] = parse_degree(o.degree);
  const long n = nn.value_or(m);
  const auto& lax = *c.lax;
  const auto w = build_omega(lax);
  const auto bounds = locality_bounds(lax, w);
  const auto bm = c.basis(m), bn = c.basis(n);
  Report r;
  r.command = "cocycle";
  r.info["form"] = to_string(c.cfg.form);
  r.info["m"] = m;
  r.info["n"] = n;
  r.info["locality"] = ordered_json{{"lower", bounds.lower}, {"upper", bounds.upper}};
  ordered_json rows = ordered_json::array();
  std::vector<std::vector<Scalar>> t(bm->dim(), std::vector<Scalar>(bn->dim()));
  bool all_zero = true;
  r.table.push_back("eta on L_" + std::to_string(m) + " x L_" + std::to_string(n) + " (" + to_string(c.cfg.form) +
                    " form)");
  for (std::size_t i = 0; i < bm->dim(); ++i) {
    ordered_json row = ordered_json::array();
    std::string line;
    for (std::size_t j = 0; j < bn->dim(); ++j) {
      t[i][j] = eta(lax, bm->elements[i], bn->elements[j], w, c.cfg.form).value;
      all_zero = all_zero && t[i][j] == 0;
      row.push_back(to_string(t[i][j]));
      std::string cell = to_string(t[i][j]);
      line += std::string(cell.size() < 8 ? 8 - cell.size() : 1, ' ') + cell;
    }
    rows.push_back(row);
    r.table.push_back(line);
  }
  r.info["table"] = rows;
  Suite s{"cocycle-table", {}, ordered_json::object()};
  if (m + n < bounds.lower || m + n > bounds.upper) {
    Check z{"zero outside the locality window", all_zero, all_zero ? "zero" : "nonzero", "zero", {}};
    if (!all_zero)
      z.witnesses.push_back("m = " + std::to_string(m) + ", n = " + std::to_string(n));
    s.checks.push_back(z);
  }
  if (m == n) {
    std::vector<std::string> wit;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t[i][j] != -t[j][i] && wit.size() < 8)
          wit.push_back("basis " + std::to_string(i) + " x " + std::to_string(j));
    s.checks.push_back({"antisymmetric with zero diagonal", wit.empty(), wit.size(), 0, wit});
  }
  r.suites.push_back(s);
  return r;
}

Report cmd_tyurin(const Options& o)
{
  Report r;
  r.command = "tyurin-check";
  if (!o.case_name.empty())
    r.info["case"] = o.case_name;
  r.suites.push_back(tyurin_suite(o.case_name));
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Lax operator algebras over the projective line: gradings, degree bases, cocycles"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "JSON configuration file");
  app.add_flag("--machine-readable", o.machine, "print the report as JSON");
  app.add_option("--cache-dir", o.cache_dir, "basis cache directory (default: $LAXALG_CACHE_DIR)");
  app.add_option("--degree", o.degree, "degree m or pair m,n");
  app.add_option("--suite", o.suite, "grading | almost-graded | cocycle | tyurin | all");
  app.add_option("--case", o.case_name, "Tyurin case tag, e.g. C_first");
  auto* grade_cmd = app.add_subcommand("grade", "grading dimensions, codimensions and invariants");
  auto* basis_cmd = app.add_subcommand("basis", "bases of the degree subspaces");
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  auto* cocycle_cmd = app.add_subcommand("cocycle", "table of the cocycle on L_m x L_n");
  auto* tyurin_cmd = app.add_subcommand("tyurin-check", "matrix families against grading subspaces");
  for (auto* s : {grade_cmd, basis_cmd, verify_cmd, cocycle_cmd, tyurin_cmd})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  Report r;
  try {
    if (*grade_cmd)
      r = cmd_grade(o);
    else if (*basis_cmd)
      r = cmd_basis(o);
    else if (*verify_cmd)
      r = cmd_verify(o);
    else if (*cocycle_cmd)
      r = cmd_cocycle(o);
    else
      r = cmd_tyurin(o);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  if (o.machine)
    out << r.to_json().dump(2) << '\n';
  else
    out << r.render();
  return r.ok() ? kPass : kFail;
}

}  // namespace laxalg::cli
