// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// diagnostics. Exit status is nonzero when any criterion fails.

#include "laxalg/cocycle.hpp"
#include "laxalg/tyurin.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

using namespace laxalg;

namespace {

Scalar q(long n, long d = 1)
{
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

struct Ref {
  std::string name;
  std::unique_ptr<LaxOperatorAlgebra> lax;
};

Ref make(std::string name, RootType t, int p, std::vector<Scalar> P, std::vector<Scalar> Q, std::vector<Scalar> G,
         const GradingSpec& spec)
{
  MarkedCurve c;
  c.P = std::move(P);
  c.Q = std::move(Q);
  for (const auto& z : G)
    c.gamma.push_back({z, spec});
  auto s = default_schedule(c);
  return {std::move(name), std::make_unique<LaxOperatorAlgebra>(build_algebra(t, p), c, s)};
}

std::vector<Ref> references()
{
  std::vector<Ref> r;
  r.push_back(make("(a) sl(2)", RootType::A, 2, {q(0)}, {q(-1)}, {q(5, 3)}, {1}));
  r.push_back(make("(b) sl(3)", RootType::A, 3, {q(0), q(2)}, {q(-1)}, {q(5, 3), q(7, 2)}, {1, 0}));
  r.push_back(make("(c) sp(4)", RootType::C, 2, {q(0)}, {q(-1)}, {q(5, 3)}, {1, 0}));
  r.push_back(make("(d) so(5)", RootType::B, 2, {q(0)}, {q(-1), q(4)}, {q(5, 3)}, {0, 1}));
  return r;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o)
{
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << '\n';
  for (const auto& n : o.notes)
    std::cout << "      " << n << '\n';
  std::cout.flush();
  failures += !o.pass;
}

ConnectionForm zeroed(const ConnectionForm& w)
{
  ConnectionForm z = w;
  for (auto& f : z.coords)
    f = RatFun();
  return z;
}

CurrentElement random_combo(const LaxOperatorAlgebra& lax, long m, std::mt19937& rng)
{
  std::uniform_int_distribution<int> d(-3, 3);
  CurrentElement x = lax.zero();
  for (const auto& e : lax.degree_subspace(m)->elements)
    x = x + Scalar(d(rng)) * e;
  return x;
}

std::size_t count_poles(const LaxOperatorAlgebra& lax, const ConnectionForm& w, long lo, long hi)
{
  std::size_t poles = 0;
  for (long m = lo; m <= hi; ++m)
    for (long n = lo; n <= hi; ++n)
      for (const auto& x : lax.degree_subspace(m)->elements)
        for (const auto& y : lax.degree_subspace(n)->elements)
          for (bool ok : check_gamma_holomorphy(lax, x, y, w, FormKind::Trace))
            poles += !ok;
  return poles;
}

Outcome dimension_counts(const std::vector<Ref>& refs)
{
  Outcome o;
  for (const auto& r : refs) {
    const auto& lax = *r.lax;
    lax.precompute(-4, 4);
    const std::size_t want = lax.curve().N() * lax.algebra()->dim();
    std::ostringstream line;
    line << r.name << " want " << want << ":";
    bool ok = true;
    for (long m = -4; m <= 4; ++m) {
      const auto b = lax.degree_subspace(m);
      line << ' ' << b->dim();
      if (b->dim() != want) {
        ok = false;
        line << "[m=" << m << ", constraint rank " << b->constraint_rank << "/" << b->ambient_dim << "]";
      }
    }
    o.pass = o.pass && ok;
    o.note(line.str() + (ok ? "" : "  MISMATCH"));
  }
  return o;
}

Outcome codimension_identity()
{
  Outcome o;
  std::size_t tried = 0;
  auto run = [&](RootType t, int param, const std::string& label) {
    const auto alg = build_algebra(t, param);
    const auto& rs = alg->roots();
    for (int i = 0; i < rs.rank; ++i) {
      GradingSpec s(rs.rank, 0);
      s[i] = 1;
      const auto cr = codim_report(grade(alg, s));
      ++tried;
      if (!cr.ok()) {
        o.pass = false;
        o.note(label + " simple root " + std::to_string(i + 1) + ": c_gamma " + std::to_string(cr.c_gamma) +
               " != k dim g " + std::to_string(cr.k_dim_g));
      }
    }
  };
  for (int r = 1; r <= 4; ++r)
    run(RootType::A, r + 1, "A" + std::to_string(r));
  for (int r = 1; r <= 4; ++r) {
    run(RootType::B, r, "B" + std::to_string(r));
    run(RootType::C, r, "C" + std::to_string(r));
  }
  for (int r = 3; r <= 4; ++r)
    run(RootType::D, r, "D" + std::to_string(r));
  run(RootType::G2, 2, "G2");
  o.note(std::to_string(tried) + " (type, pvec) pairs; D1 and D2 are not simple and are not modelled");
  return o;
}

struct Structure {
  std::string name;
  AlmostGradingReport rep;
};

Outcome strict_grading(const std::vector<Structure>& s)
{
  Outcome o;
  for (const auto& x : s) {
    const auto& r = x.rep;
    const bool ok = r.off_degree == 0 && r.outside_window == 0 && r.not_unique == 0;
    o.pass = o.pass && ok;
    std::ostringstream line;
    line << x.name << ": " << r.pairs << " pairs, " << r.in_target << " land in L_{m+n}, " << r.not_unique
         << " without unique decomposition, off-degree " << r.off_degree << ", outside window " << r.outside_window;
    o.note(line.str());
    std::size_t shown = 0;
    for (const auto& w : r.witnesses)
      if (w.reason.find("leaves the algebra") == std::string::npos && shown++ < 2)
        o.note("  witness m=" + std::to_string(w.m) + " n=" + std::to_string(w.n) + " basis " + std::to_string(w.i) +
               " x " + std::to_string(w.j) + ": " + w.reason);
  }
  return o;
}

Outcome closure(const std::vector<Structure>& s)
{
  Outcome o;
  for (const auto& x : s) {
    o.pass = o.pass && x.rep.closure_failures == 0;
    o.note(x.name + ": " + std::to_string(x.rep.closure_failures) + " of " + std::to_string(x.rep.pairs) +
           " brackets leave the algebra");
  }
  return o;
}

Outcome holomorphy(const std::vector<Ref>& refs)
{
  Outcome o;
  std::size_t control = 0;
  for (const auto& r : refs) {
    const auto& lax = *r.lax;
    const auto w = build_omega(lax);
    const auto with = count_poles(lax, w, -2, 2);
    const auto without = count_poles(lax, zeroed(w), -2, 2);
    control += without;
    o.pass = o.pass && with == 0;
    o.note(r.name + ": gamma poles with omega " + std::to_string(with) + ", with omega = 0 " + std::to_string(without));
  }
  if (control == 0) {
    o.pass = false;
    o.note("negative control did not fire on (a)-(d): a gamma pole needs a coordinate of level +1 at gamma whose");
    o.note("  partner has level -1, and those coordinates never enter any L_m at these sizes");
  }
  // outside the reference set the control does fire
  std::vector<Ref> extra;
  extra.push_back(make("sl(2), N=2", RootType::A, 2, {q(0), q(2)}, {q(-1)}, {q(5, 3)}, {1}));
  extra.push_back(make("sp(4), N=3", RootType::C, 2, {q(0), q(2), q(3)}, {q(-1)}, {q(5, 3)}, {1, 0}));
  for (const auto& r : extra) {
    const auto& lax = *r.lax;
    lax.precompute(-1, 1);
    const auto w = build_omega(lax);
    o.note("supplementary " + r.name + ": gamma poles with omega " + std::to_string(count_poles(lax, w, -1, 1)) +
           ", with omega = 0 " + std::to_string(count_poles(lax, zeroed(w), -1, 1)));
  }
  return o;
}

Outcome cocycle_properties(const std::vector<Ref>& refs)
{
  Outcome o;
  for (const auto& r : refs) {
    const auto& lax = *r.lax;
    const auto w = build_omega(lax);
    const auto b = locality_bounds(lax, w);
    std::size_t pairs = 0, asym = 0, nonlocal = 0;
    for (long m = -2; m <= 2; ++m)
      for (long n = -2; n <= 2; ++n)
        for (const auto& x : lax.degree_subspace(m)->elements)
          for (const auto& y : lax.degree_subspace(n)->elements) {
            ++pairs;
            const auto xy = eta(lax, x, y, w, FormKind::Trace).value;
            asym += xy != -eta(lax, y, x, w, FormKind::Trace).value;
            nonlocal += (m + n < b.lower || m + n > b.upper) && xy != 0;
          }
    o.pass = o.pass && asym == 0 && nonlocal == 0;
    o.note(r.name + ": " + std::to_string(pairs) + " pairs, locality [" + std::to_string(b.lower) + ", " +
           std::to_string(b.upper) + "], antisymmetry failures " + std::to_string(asym) + ", nonzero outside " +
           std::to_string(nonlocal));
  }
  const auto& a = *refs[0].lax;
  std::vector<CurrentElement> elems;
  for (long m = 0; m <= 1; ++m)
    for (const auto& e : a.degree_subspace(m)->elements)
      elems.push_back(e);
  const auto id = verify_cocycle_identity(a, elems, build_omega(a), FormKind::Trace);
  o.pass = o.pass && id.ok();
  o.note("cocycle identity on L_0 + L_1 of (a): " + std::to_string(id.checked) + " triples, " +
         std::to_string(id.failures) + " failures");
  for (const auto& w : id.witnesses)
    o.note("  witness " + w);
  return o;
}

Outcome coboundary(const std::vector<Ref>& refs)
{
  Outcome o;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> deg(-2, 2);
  for (std::size_t k : {0u, 2u}) {
    const auto& lax = *refs[k].lax;
    const auto w = build_omega(lax);
    std::size_t bad = 0;
    for (int t = 0; t < 20; ++t) {
      const auto x = random_combo(lax, deg(rng), rng);
      const auto y = random_combo(lax, deg(rng), rng);
      bad += !coboundary_identity(lax, x, y, w, FormKind::Trace).equal();
    }
    o.pass = o.pass && bad == 0;
    o.note(refs[k].name + ": 20 random pairs, " + std::to_string(bad) + " disagreements");
  }
  return o;
}

Outcome invariant_forms()
{
  Outcome o;
  auto check = [&](const std::string& label, const AlgebraPtr& alg, std::size_t want) {
    const auto got = invariant_form_space(*alg).size();
    o.pass = o.pass && got == want;
    o.note(label + ": " + std::to_string(got) + " (want " + std::to_string(want) + ")");
  };
  check("sl(2)", build_algebra(RootType::A, 2), 1);
  check("sl(3)", build_algebra(RootType::A, 3), 1);
  check("so(5)", build_algebra(RootType::B, 2), 1);
  check("sp(4)", build_algebra(RootType::C, 2), 1);
  check("so(8)", build_algebra(RootType::D, 4), 1);
  check("G2", build_algebra(RootType::G2, 2), 1);
  const auto sl2 = build_algebra(RootType::A, 2);
  check("sl(2) + sl(2)", direct_sum(*sl2, *sl2), 2);
  return o;
}

Outcome tyurin()
{
  Outcome o;
  const auto checks = run_tyurin_suite();
  std::set<std::pair<TyurinCase, int>> seen;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    seen.insert({c.tag, c.n});
    passed += c.passed;
    if (!c.passed) {
      o.pass = false;
      o.note("failed: " + c.name + ": " + c.detail);
    }
  }
  using T = TyurinCase;
  const std::vector<std::pair<T, int>> required{{T::A1, 3},      {T::A1, 4},      {T::D_first, 4}, {T::D_last, 4},
                                                {T::C_first, 2}, {T::C_first, 3}, {T::C_last, 2},  {T::C_last, 3},
                                                {T::B_first, 2}, {T::B_first, 3}, {T::B_last, 2},  {T::B_last, 3}};
  for (const auto& r : required)
    if (!seen.contains(r)) {
      o.pass = false;
      o.note("missing case " + to_string(r.first) + " n = " + std::to_string(r.second));
    }
  o.note(std::to_string(passed) + " of " + std::to_string(checks.size()) + " checks pass");
  std::ostringstream line;
  line << "G2 level dimensions:";
  for (const auto& c : checks)
    if (c.tag == T::G2_depth2)
      line << ' ' << c.detail << ';';
  o.note(line.str());
  return o;
}

}  // namespace

int main()
{
  const auto t0 = std::chrono::steady_clock::now();
  const auto refs = references();

  report(1, "dim L_m = N dim g on (a)-(d), m in [-4, 4]", dimension_counts(refs));
  report(2, "c_gamma = k dim g for every simple-root grading", codimension_identity());

  std::vector<Structure> st;
  for (const auto& r : refs)
    st.push_back({r.name, r.lax->verify_almost_graded(-2, 2, 2)});
  report(3, "brackets of L_m x L_n decompose exactly on L_{m+n}, m, n in [-2, 2]", strict_grading(st));
  report(4, "brackets stay in the algebra", closure(st));
  report(5, "gamma holomorphy with omega; poles without it", holomorphy(refs));
  report(6, "antisymmetry, locality, cocycle identity", cocycle_properties(refs));
  report(7, "coboundary identity on random pairs of (a), (c)", coboundary(refs));
  report(8, "invariant form space dimensions", invariant_forms());
  report(9, "Tyurin parametrizations match the grading subspaces", tyurin());

  Outcome decl;
  decl.note("declared: higher-genus statements (spread constants for g > 0 and genericity of the degree");
  decl.note("  subspaces) are not reproduced; only genus 0 curves are modelled, covered by criteria 1-7");
  report(10, "scope declaration", decl);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria FAIL" : std::string("acceptance: all pass"))
            << " (" << secs << " s)\n";
  return failures ? 1 : 0;
}
