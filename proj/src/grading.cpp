#include "laxalg/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace laxalg {

std::vector<std::size_t> GradedStructure::subspace(long p) const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] == p)
      out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedStructure::filtration(long p) const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] <= p)
      out.push_back(i);
  return out;
}

bool GradedStructure::in_filtration(std::span<const Scalar> x, long p) const
{
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] > p && x[i] != 0)
      return false;
  return true;
}

LieElement grading_element(const AlgebraPtr& alg, const GradingSpec& spec)
{
  const auto& rs = alg->roots();
  validate_spec(rs, spec);
  const std::size_t r = alg->cartan_dim();
  // alpha_i(H_l) read off from [H_l, X_{alpha_i}] = alpha_i(H_l) X_{alpha_i}
  Matrix a(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    Expansion e(r, 0);
    e[i] = 1;
    std::size_t idx = alg->root_index(e);
    for (std::size_t l = 0; l < r; ++l)
      a(i, l) = alg->bracket(alg->unit(l), alg->unit(idx))[idx];
  }
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i)
    rhs[i] = spec[i];
  auto c = solve(a, rhs);
  if (!c || rank(a) != r)
    throw std::logic_error("simple roots do not span the dual of the Cartan subalgebra");
  Vector coords(alg->dim());
  for (std::size_t l = 0; l < r; ++l)
    coords[l] = (*c)[l];
  return {alg, coords};
}

GradedStructure grade(const AlgebraPtr& alg, const GradingSpec& spec)
{
  GradedStructure gr;
  gr.algebra = alg;
  gr.spec = spec;
  gr.h = grading_element(alg, spec);
  gr.depth = depth(alg->roots(), spec);
  gr.levels.resize(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i)
    gr.levels[i] = level(spec, alg->weight(i));
  return gr;
}

bool filtration_membership(const GradedStructure& gr, std::span<const Scalar> x, long p)
{
  const std::size_t n = gr.algebra->dim();
  if (p >= gr.depth)
    return true;
  std::vector<Vector> rows;
  for (auto i : gr.filtration(p))
    rows.push_back(gr.algebra->unit(i));
  const std::size_t before = rows.size();
  rows.emplace_back(x.begin(), x.end());
  return rank(Matrix::from_rows(rows, n)) == before;
}

CodimReport codim_report(const GradedStructure& gr)
{
  CodimReport rep;
  const std::size_t n = gr.algebra->dim();
  for (long p = -gr.depth; p < gr.depth; ++p) {
    std::vector<Vector> rows;
    for (auto i : gr.filtration(p))
      rows.push_back(gr.algebra->unit(i));
    std::size_t rk = rows.empty() ? 0 : rank(Matrix::from_rows(rows, n));
    rep.codims.emplace_back(p, n - rk);
    rep.c_gamma += n - rk;
  }
  rep.k_dim_g = static_cast<std::size_t>(gr.depth) * n;
  return rep;
}

GradingReport verify_grading(const GradedStructure& gr, const Matrix& form_gram)
{
  GradingReport rep;
  const auto& alg = *gr.algebra;
  const std::size_t n = alg.dim();
  auto label = [&](std::size_t i) { return "basis " + std::to_string(i) + " (level " + std::to_string(gr.levels[i]) + ")"; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : alg.structure(i, j))
        if (gr.levels[k] != gr.levels[i] + gr.levels[j])
          rep.violations.push_back("bracket of " + label(i) + " and " + label(j) + " leaves g_" +
                                   std::to_string(gr.levels[i] + gr.levels[j]));
  for (long p = 1; p <= gr.depth; ++p)
    if (gr.dim_at(p) != gr.dim_at(-p))
      rep.violations.push_back("dim g_" + std::to_string(p) + " != dim g_" + std::to_string(-p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gr.levels[i] + gr.levels[j] != 0 && form_gram(i, j) != 0)
        rep.violations.push_back("form pairs " + label(i) + " with " + label(j));
  Matrix adh = alg.ad(gr.h.coords);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = adh.column(i);
    for (std::size_t k = 0; k < n; ++k) {
      Scalar expect = k == i ? Scalar(gr.levels[i]) : Scalar(0);
      if (col[k] != expect) {
        rep.violations.push_back("ad(h) is not " + std::to_string(gr.levels[i]) + " on " + label(i));
        break;
      }
    }
  }
  long total = 0;
  for (long p = -gr.depth; p <= gr.depth; ++p)
    total += static_cast<long>(gr.dim_at(p));
  if (total != static_cast<long>(n))
    rep.violations.push_back("graded pieces do not add up to the algebra");
  return rep;
}

}  // namespace laxalg
