#include "laxalg/cocycle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace laxalg {

std::string to_string(FormKind f)
{
  return f == FormKind::Trace ? "trace" : "killing";
}

FormKind parse_form(const std::string& s)
{
  if (s == "trace")
    return FormKind::Trace;
  if (s == "killing")
    return FormKind::Killing;
  throw std::invalid_argument("unknown invariant form '" + s + "' (expected trace or killing)");
}

const Matrix& form_gram(const LieAlgebra& alg, FormKind f)
{
  return f == FormKind::Trace ? alg.trace_gram() : alg.killing_gram();
}

namespace {

// [x, y] for RatFun-valued coordinate vectors
std::vector<RatFun> bracket_coords(const LieAlgebra& alg, const std::vector<RatFun>& x, const std::vector<RatFun>& y)
{
  std::vector<RatFun> out(alg.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero())
        continue;
      const auto& sc = alg.structure(i, j);
      if (sc.empty())
        continue;
      const RatFun prod = x[i] * y[j];
      for (const auto& [k, c] : sc)
        out[k] += c * prod;
    }
  }
  return out;
}

RatFun pair(const Matrix& gram, const std::vector<RatFun>& x, const std::vector<RatFun>& y)
{
  RatFun out;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero())
      continue;
    RatFun col;
    for (std::size_t b = 0; b < y.size(); ++b)
      if (gram(a, b) != 0 && !y[b].is_zero())
        col += gram(a, b) * y[b];
    if (!col.is_zero())
      out += x[a] * col;
  }
  return out;
}

// (ad x)_{kj} as a sparse map
std::map<std::pair<std::size_t, std::size_t>, RatFun> ad_coords(const LieAlgebra& alg, const std::vector<RatFun>& x)
{
  std::map<std::pair<std::size_t, std::size_t>, RatFun> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < alg.dim(); ++j)
      for (const auto& [k, c] : alg.structure(i, j))
        out[{k, j}] += c * x[i];
  }
  return out;
}

}  // namespace

ConnectionForm build_omega(const LaxOperatorAlgebra& lax)
{
  const auto& alg = *lax.algebra();
  const auto& curve = lax.curve();
  ConnectionForm w;
  w.coords.assign(alg.dim(), RatFun());
  w.m_plus.assign(curve.N(), 0);
  w.m_minus.assign(curve.M(), 0);
  w.m_minus[0] = 1;
  for (std::size_t g = 0; g < curve.gamma.size(); ++g) {
    const Vector& h = lax.grading(g).h.coords;
    for (std::size_t a = alg.cartan_dim(); a < alg.dim(); ++a)
      if (h[a] != 0)
        throw std::invalid_argument("grading element at gamma " + std::to_string(g) + " leaves the Cartan subalgebra");
    w.residues.push_back(h);
    const RatFun kernel = RatFun::inverse_power(curve.gamma[g].coord, 1) - RatFun::inverse_power(curve.Q[0], 1);
    for (std::size_t a = 0; a < alg.cartan_dim(); ++a)
      if (h[a] != 0)
        w.coords[a] += h[a] * kernel;
  }
  return w;
}

std::string check_omega(const LaxOperatorAlgebra& lax, const ConnectionForm& w)
{
  const auto& alg = *lax.algebra();
  const auto& curve = lax.curve();
  if (w.coords.size() != alg.dim() || w.residues.size() != curve.gamma.size())
    return "shape mismatch";
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    const RatFun& f = w.coords[a];
    if (f.is_zero())
      continue;
    const std::string c = "coordinate " + std::to_string(a);
    if (a >= alg.cartan_dim())
      return c + " is outside the Cartan subalgebra";
    if (f.order_at_infinity() < 2)
      return c + " is not O(z^-2) at infinity";
    Poly den = f.den();
    for (std::size_t i = 0; i < curve.N(); ++i) {
      if (f.order_at(curve.P[i]) < w.m_plus[i])
        return c + " vanishes to too low an order at P_" + std::to_string(i + 1);
      den = den.divide_root(curve.P[i], den.root_multiplicity(curve.P[i]));
    }
    for (std::size_t j = 0; j < curve.M(); ++j) {
      if (f.order_at(curve.Q[j]) < -w.m_minus[j])
        return c + " has too high a pole at Q_" + std::to_string(j + 1);
      den = den.divide_root(curve.Q[j], den.root_multiplicity(curve.Q[j]));
    }
    for (std::size_t g = 0; g < curve.gamma.size(); ++g) {
      const Scalar& z = curve.gamma[g].coord;
      if (f.order_at(z) < -1)
        return c + " has a multiple pole at gamma " + std::to_string(g);
      if (residue(f, z) != w.residues[g][a])
        return c + " has the wrong residue at gamma " + std::to_string(g);
      den = den.divide_root(z, den.root_multiplicity(z));
    }
    if (den.degree() > 0)
      return c + " has a pole away from the marked points";
  }
  for (std::size_t g = 0; g < curve.gamma.size(); ++g)
    for (std::size_t a = 0; a < alg.dim(); ++a)
      if (w.coords[a].is_zero() && w.residues[g][a] != 0)
        return "missing residue at gamma " + std::to_string(g);
  return {};
}

RatFun connection_form_value(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                             const ConnectionForm& w, FormKind form)
{
  const auto& alg = *lax.algebra();
  if (L.coords.size() != alg.dim() || Lp.coords.size() != alg.dim() || w.coords.size() != alg.dim())
    throw std::invalid_argument("elements belong to a different algebra");
  std::vector<RatFun> v = bracket_coords(alg, w.coords, Lp.coords);
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    RatFun d = Lp.coords[b].is_zero() ? RatFun() : Lp.coords[b].derivative();
    v[b] = d - v[b];
  }
  return pair(form_gram(alg, form), L.coords, v);
}

std::vector<bool> check_gamma_holomorphy(const LaxOperatorAlgebra& lax, const CurrentElement& L,
                                         const CurrentElement& Lp, const ConnectionForm& w, FormKind form)
{
  const RatFun rho = connection_form_value(lax, L, Lp, w, form);
  std::vector<bool> out;
  for (const auto& g : lax.curve().gamma)
    out.push_back(rho.is_zero() || rho.order_at(g.coord) >= 0);
  return out;
}

CocycleEvaluation eta(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                      const ConnectionForm& w, FormKind form)
{
  const RatFun rho = connection_form_value(lax, L, Lp, w, form);
  CocycleEvaluation e;
  e.form = form;
  e.value = 0;
  e.q_value = 0;
  for (const auto& p : lax.curve().P) {
    e.p_residues.push_back(rho.is_zero() ? Scalar(0) : residue(rho, p));
    e.value += e.p_residues.back();
  }
  if (!rho.is_zero())
    for (const auto& q : lax.curve().Q)
      e.q_value -= residue(rho, q);
  return e;
}

LocalityBounds locality_bounds(const LaxOperatorAlgebra& lax, const ConnectionForm& w)
{
  LocalityBounds b;
  // at P_i: ord rho >= m + n + min(-1, m_i^+), so every P residue vanishes
  // once m + n >= -min_i{-1, m_i^+}
  long mn = -1;
  for (long v : w.m_plus)
    mn = std::min(mn, v);
  b.upper = -1 - mn;
  // at Q_j: the pole order of rho is at most n_{m,j} + n_{n,j} + max(1, m_j^-)
  // <= a_j (m + n) + 2B + max(1, m_j^-); all Q residues vanish, and hence eta
  // does, once this is <= 0 for every j
  const auto& s = lax.schedule();
  const Scalar B = s.bound();
  std::optional<Scalar> x;
  for (std::size_t j = 0; j < s.slopes.size(); ++j) {
    Scalar t = -(2 * B + std::max(1L, w.m_minus.at(j))) / s.slopes[j];
    if (!x || t < *x)
      x = t;
  }
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x->get_num_mpz_t(), x->get_den_mpz_t());
  b.lower = fl.get_si() + 1;
  return b;
}

IdentityReport verify_cocycle_identity(const LaxOperatorAlgebra& lax, const std::vector<CurrentElement>& elems,
                                       const ConnectionForm& w, FormKind form)
{
  IdentityReport rep;
  const std::size_t n = elems.size();
  std::vector<std::vector<CurrentElement>> br(n, std::vector<CurrentElement>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      br[i][j] = lax.bracket(elems[i], elems[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        ++rep.checked;
        Scalar s = eta(lax, br[i][j], elems[k], w, form).value + eta(lax, br[j][k], elems[i], w, form).value +
                   eta(lax, br[k][i], elems[j], w, form).value;
        if (s != 0) {
          ++rep.failures;
          if (rep.witnesses.size() < 16)
            rep.witnesses.push_back("triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ") sums to " + to_string(s));
        }
      }
  return rep;
}

CoboundarySides coboundary_identity(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                                    const ConnectionForm& w, FormKind form)
{
  const auto& alg = *lax.algebra();
  CoboundarySides s;
  s.lhs = pair(form_gram(alg, form), L.coords, bracket_coords(alg, w.coords, Lp.coords));
  if (form == FormKind::Trace) {
    if (!alg.killing_trace_ratio())
      throw std::invalid_argument("trace form is not proportional to the Killing form");
    s.lhs = *alg.killing_trace_ratio() * s.lhs;
  }
  const auto adx = ad_coords(alg, bracket_coords(alg, L.coords, Lp.coords));
  const auto adw = ad_coords(alg, w.coords);
  RatFun tr;
  for (const auto& [kj, f] : adx) {
    auto it = adw.find({kj.second, kj.first});
    if (it != adw.end())
      tr += f * it->second;
  }
  s.rhs = -tr;
  return s;
}

}  // namespace laxalg
