#include "laxalg/current.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace laxalg {

bool CurrentElement::is_zero() const
{
  return std::all_of(coords.begin(), coords.end(), [](const RatFun& f) { return f.is_zero(); });
}

CurrentElement operator+(const CurrentElement& a, const CurrentElement& b)
{
  CurrentElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    if (!b.coords[i].is_zero())
      out.coords[i] += b.coords[i];
  return out;
}

CurrentElement operator-(const CurrentElement& a, const CurrentElement& b)
{
  CurrentElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    if (!b.coords[i].is_zero())
      out.coords[i] -= b.coords[i];
  return out;
}

CurrentElement operator*(const Scalar& s, const CurrentElement& a)
{
  CurrentElement out = a;
  for (auto& f : out.coords)
    f = s * f;
  return out;
}

CurrentElement times(const RatFun& f, std::span<const Scalar> x, AlgebraPtr alg)
{
  CurrentElement out{alg, std::vector<RatFun>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      out.coords[i] = x[i] * f;
  return out;
}

// Per-coordinate linear systems for decomposing over a window of degrees.
// Elements are described by their value at infinity and their principal
// parts at the marked points, which determines a rational function whose
// poles lie among the marked points.
struct LaxOperatorAlgebra::WindowSystem {
  long lo = 0, hi = 0;
  std::vector<Scalar> points;
  std::vector<long> max_pole;
  std::size_t features = 0;
  struct Block {
    std::vector<std::pair<long, std::size_t>> columns;  // (degree, index in basis)
    Matrix F;
    bool independent = true;
    std::optional<ColumnSolver> solver;
  };
  std::vector<Block> blocks;

  Vector describe(const RatFun& f) const
  {
    Vector v(features);
    if (f.is_zero())
      return v;
    v[0] = f.value_at_infinity();
    std::size_t at = 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const long e = max_pole[i];
      if (e > 0) {
        auto s = laurent_expand(f, points[i], -e, -1);
        for (long p = -e; p <= -1; ++p)
          v[at++] = s.coeff(p);
      }
    }
    return v;
  }
};

LaxOperatorAlgebra::LaxOperatorAlgebra(AlgebraPtr alg, MarkedCurve curve, DegreeSchedule schedule)
    : alg_(std::move(alg)), curve_(std::move(curve)), schedule_(std::move(schedule))
{
  curve_.validate();
  schedule_.validate(curve_.N());
  if (schedule_.slopes.size() != curve_.M())
    throw std::invalid_argument("schedule width differs from the number of Q points");
  if (!alg_->has_roots() && !curve_.gamma.empty())
    throw std::invalid_argument("gamma points need an algebra with root data");
  for (const auto& g : curve_.gamma) {
    gradings_.push_back(grade(alg_, g.spec));
    depths_.push_back(gradings_.back().depth);
  }
}

CurrentElement LaxOperatorAlgebra::zero() const
{
  return {alg_, std::vector<RatFun>(alg_->dim())};
}

MembershipResult LaxOperatorAlgebra::check_membership(const CurrentElement& L) const
{
  auto fail = [](std::string s) { return MembershipResult{false, std::move(s)}; };
  if (L.coords.size() != alg_->dim())
    return fail("coordinate count differs from dim g");
  const auto pts = curve_.all_points();
  for (std::size_t a = 0; a < L.coords.size(); ++a) {
    const RatFun& f = L.coords[a];
    if (f.is_zero())
      continue;
    if (!f.holomorphic_at_infinity())
      return fail("coordinate " + std::to_string(a) + " has a pole at infinity");
    Poly den = f.den();
    for (const auto& p : pts)
      den = den.divide_root(p, den.root_multiplicity(p));
    if (den.degree() > 0)
      return fail("coordinate " + std::to_string(a) + " has a pole away from the marked points");
    // exact orders from numerator and denominator multiplicities decide every
    // Laurent coefficient below the order at once
    for (std::size_t g = 0; g < curve_.gamma.size(); ++g) {
      const long k = depths_[g];
      const long ord = f.order_at(curve_.gamma[g].coord);
      const std::string where = " at gamma " + std::to_string(g);
      if (ord < -k)
        return fail("pole of order " + std::to_string(-ord) + where + " exceeds depth " + std::to_string(k));
      const long lv = gradings_[g].levels[a];
      if (ord < lv)
        return fail("coefficient L_" + std::to_string(ord) + where + " has a component of level " +
                    std::to_string(lv) + " (coordinate " + std::to_string(a) + ")");
    }
  }
  return {};
}

MembershipResult LaxOperatorAlgebra::in_degree(const CurrentElement& L, long m) const
{
  auto r = check_membership(L);
  if (!r.ok)
    return r;
  const auto row = schedule_.row(m);
  for (std::size_t a = 0; a < L.coords.size(); ++a) {
    const RatFun& f = L.coords[a];
    if (f.is_zero())
      continue;
    for (std::size_t i = 0; i < curve_.N(); ++i)
      if (f.order_at(curve_.P[i]) < m)
        return {false, "order at P_" + std::to_string(i + 1) + " below " + std::to_string(m)};
    for (std::size_t j = 0; j < curve_.M(); ++j)
      if (f.order_at(curve_.Q[j]) < -row[j])
        return {false, "pole at Q_" + std::to_string(j + 1) + " above " + std::to_string(row[j])};
  }
  return {};
}

DegreeBasis LaxOperatorAlgebra::build(long m) const
{
  DegreeBasis b;
  b.m = m;
  b.divisor = divisor_Dm(curve_, schedule_, depths_, m);
  b.expected_dim = curve_.N() * alg_->dim();
  const auto rr = rr_basis(b.divisor);
  const std::size_t r = rr.size();
  b.ambient_dim = r * alg_->dim();
  if (r == 0)
    return b;
  // expansions of the scalar basis at each gamma, exponents -k..k-1
  std::vector<std::vector<LaurentSeries>> ex(curve_.gamma.size());
  for (std::size_t g = 0; g < curve_.gamma.size(); ++g) {
    const long k = depths_[g];
    if (k == 0)
      continue;
    for (const auto& f : rr)
      ex[g].push_back(laurent_expand(f, curve_.gamma[g].coord, -k, k - 1));
  }
  // The constraint matrix on rr (x) g is block diagonal over algebra
  // coordinates: coordinate a of L_p must vanish whenever level(a) > p.
  for (std::size_t a = 0; a < alg_->dim(); ++a) {
    std::vector<Vector> rows;
    for (std::size_t g = 0; g < curve_.gamma.size(); ++g) {
      const long k = depths_[g];
      const long lv = gradings_[g].levels[a];
      for (long p = -k; p < std::min(lv, k); ++p) {
        Vector row(r);
        for (std::size_t i = 0; i < r; ++i)
          row[i] = ex[g][i].coeff(p);
        rows.push_back(std::move(row));
      }
    }
    std::vector<Vector> kernel;
    if (rows.empty()) {
      for (std::size_t i = 0; i < r; ++i) {
        Vector e(r);
        e[i] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = null_space(Matrix::from_rows(rows, r));
    }
    b.constraint_rank += r - kernel.size();
    for (const auto& v : kernel) {
      RatFun f;
      for (std::size_t i = 0; i < r; ++i)
        if (v[i] != 0)
          f += v[i] * rr[i];
      CurrentElement el = zero();
      el.coords[a] = std::move(f);
      b.elements.push_back(std::move(el));
      b.coordinate.push_back(a);
    }
  }
  return b;
}

std::shared_ptr<const DegreeBasis> LaxOperatorAlgebra::degree_subspace(long m) const
{
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(m); it != cache_.end())
      return it->second;
  }
  auto fresh = std::make_shared<const DegreeBasis>(build(m));
  std::lock_guard lock(mu_);
  return cache_.try_emplace(m, std::move(fresh)).first->second;
}

void LaxOperatorAlgebra::adopt(std::shared_ptr<const DegreeBasis> basis) const
{
  std::lock_guard lock(mu_);
  cache_.try_emplace(basis->m, std::move(basis));
}

void LaxOperatorAlgebra::precompute(long lo, long hi) const
{
  std::vector<std::future<std::shared_ptr<const DegreeBasis>>> jobs;
  for (long m = lo; m <= hi; ++m)
    jobs.push_back(std::async(std::launch::async, [this, m] { return degree_subspace(m); }));
  for (auto& j : jobs)
    j.get();
}

CurrentElement LaxOperatorAlgebra::bracket(const CurrentElement& a, const CurrentElement& b) const
{
  if (a.coords.size() != alg_->dim() || b.coords.size() != alg_->dim())
    throw std::invalid_argument("bracket of elements from a different algebra");
  CurrentElement out = zero();
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j].is_zero())
        continue;
      const auto& sc = alg_->structure(i, j);
      if (sc.empty())
        continue;
      const RatFun prod = a.coords[i] * b.coords[j];
      for (const auto& [k, c] : sc)
        out.coords[k] += c * prod;
    }
  }
  return out;
}

std::shared_ptr<const LaxOperatorAlgebra::WindowSystem> LaxOperatorAlgebra::window_system(long lo, long hi) const
{
  {
    std::lock_guard lock(mu_);
    if (auto it = windows_.find({lo, hi}); it != windows_.end())
      return it->second;
  }
  precompute(lo, hi);
  auto w = std::make_shared<WindowSystem>();
  w->lo = lo;
  w->hi = hi;
  w->points = curve_.all_points();
  const auto top = schedule_.row(hi);
  for (std::size_t i = 0; i < curve_.N(); ++i)
    w->max_pole.push_back(std::max(0L, -lo));
  for (std::size_t j = 0; j < curve_.M(); ++j)
    w->max_pole.push_back(std::max(0L, top[j]));
  for (long k : depths_)
    w->max_pole.push_back(k);
  w->features = 1;
  for (long e : w->max_pole)
    w->features += static_cast<std::size_t>(e);

  w->blocks.resize(alg_->dim());
  std::vector<std::vector<Vector>> cols(alg_->dim());
  for (long m = lo; m <= hi; ++m) {
    auto b = degree_subspace(m);
    for (std::size_t i = 0; i < b->dim(); ++i) {
      const std::size_t a = b->coordinate[i];
      w->blocks[a].columns.emplace_back(m, i);
      cols[a].push_back(w->describe(b->elements[i].coords[a]));
    }
  }
  for (std::size_t a = 0; a < alg_->dim(); ++a) {
    auto& blk = w->blocks[a];
    blk.F = Matrix::from_columns(cols[a], w->features);
    blk.independent = rank(blk.F) == blk.columns.size();
    if (blk.independent && !blk.columns.empty())
      blk.solver.emplace(blk.F);
  }
  std::lock_guard lock(mu_);
  return windows_.try_emplace({lo, hi}, std::move(w)).first->second;
}

Decomposition LaxOperatorAlgebra::decompose(const CurrentElement& L, long lo, long hi) const
{
  if (lo > hi)
    throw std::invalid_argument("empty degree window");
  auto w = window_system(lo, hi);
  Decomposition out;
  for (std::size_t a = 0; a < alg_->dim(); ++a) {
    const RatFun& f = L.coords.at(a);
    const auto& blk = w->blocks[a];
    if (!blk.independent)
      out.unique = false;
    if (f.is_zero())
      continue;
    auto outside = [&] {
      return std::domain_error("coordinate " + std::to_string(a) + " is not in the span of degrees " +
                               std::to_string(lo) + ".." + std::to_string(hi));
    };
    if (!f.holomorphic_at_infinity())
      throw outside();
    Poly den = f.den();
    for (std::size_t i = 0; i < w->points.size(); ++i) {
      const auto mult = den.root_multiplicity(w->points[i]);
      if (static_cast<long>(mult) > w->max_pole[i])
        throw outside();
      den = den.divide_root(w->points[i], mult);
    }
    if (den.degree() > 0 || blk.columns.empty())
      throw outside();
    const Vector rhs = w->describe(f);
    std::optional<Vector> c = blk.solver ? blk.solver->solve(rhs) : solve(blk.F, rhs);
    if (!c)
      throw outside();
    for (std::size_t t = 0; t < c->size(); ++t) {
      if ((*c)[t] == 0)
        continue;
      const auto [m, i] = blk.columns[t];
      auto b = degree_subspace(m);
      auto [it, fresh] = out.components.try_emplace(m, zero());
      it->second.coords[a] += (*c)[t] * b->elements[i].coords[a];
    }
  }
  return out;
}

AlmostGradingReport LaxOperatorAlgebra::verify_almost_graded(long lo, long hi, long window) const
{
  AlmostGradingReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.window = window;
  precompute(2 * lo - window, 2 * hi + window);
  auto note = [&](long m, long n, std::size_t i, std::size_t j, std::string why) {
    if (rep.witnesses.size() < 32)
      rep.witnesses.push_back({m, n, i, j, std::move(why)});
  };
  for (long m = lo; m <= hi; ++m) {
    auto bm = degree_subspace(m);
    for (long n = lo; n <= hi; ++n) {
      auto bn = degree_subspace(n);
      const long t = m + n;
      for (std::size_t i = 0; i < bm->dim(); ++i)
        for (std::size_t j = 0; j < bn->dim(); ++j) {
          ++rep.pairs;
          CurrentElement br = bracket(bm->elements[i], bn->elements[j]);
          if (br.is_zero()) {
            ++rep.in_target;
            continue;
          }
          if (auto mem = check_membership(br); !mem.ok) {
            ++rep.closure_failures;
            note(m, n, i, j, "bracket leaves the algebra: " + mem.violation);
          }
          if (in_degree(br, t).ok)
            ++rep.in_target;
          Decomposition d;
          try {
            d = decompose(br, t - window, t + window);
          } catch (const std::domain_error& e) {
            ++rep.outside_window;
            note(m, n, i, j, e.what());
            continue;
          }
          if (!d.unique) {
            ++rep.not_unique;
            note(m, n, i, j, "degree spaces " + std::to_string(t - window) + ".." + std::to_string(t + window) +
                                 " are not independent");
            continue;
          }
          bool off = false;
          for (const auto& [r, comp] : d.components) {
            if (r != t && !off) {
              off = true;
              note(m, n, i, j, "component in degree " + std::to_string(r));
            }
            rep.R = std::max(rep.R, t - r);
            rep.S = std::max(rep.S, r - t);
          }
          rep.off_degree += off;
        }
    }
  }
  return rep;
}

}  // namespace laxalg
