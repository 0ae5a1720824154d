#ifndef LAXALG_GRADING_HPP
#define LAXALG_GRADING_HPP

#include "laxalg/liealg.hpp"

#include <string>
#include <vector>

namespace laxalg {

/// Z-grading g = sum g_p induced by a grading element h with alpha_i(h) = p_i.
/// Because the algebra basis is adapted, every g_p is spanned by a subset of
/// the basis.
struct GradedStructure {
  AlgebraPtr algebra;
  GradingSpec spec;
  long depth = 0;
  LieElement h;
  /// Level of each basis element.
  std::vector<long> levels;

  std::vector<std::size_t> subspace(long p) const;
  /// Basis indices spanning the filtration subspace sum_{q <= p} g_q.
  std::vector<std::size_t> filtration(long p) const;
  std::size_t dim_at(long p) const { return subspace(p).size(); }
  /// Coordinate test: every coordinate at level > p vanishes.
  bool in_filtration(std::span<const Scalar> x, long p) const;
};

/// The element h of the Cartan subalgebra with alpha_i(h) = spec_i.
LieElement grading_element(const AlgebraPtr& alg, const GradingSpec& spec);

GradedStructure grade(const AlgebraPtr& alg, const GradingSpec& spec);

/// Rank test for X in the filtration subspace of level p.
bool filtration_membership(const GradedStructure& gr, std::span<const Scalar> x, long p);

struct CodimReport {
  /// (p, codim of the filtration subspace) for p = -k..k-1
  std::vector<std::pair<long, std::size_t>> codims;
  std::size_t c_gamma = 0;
  std::size_t k_dim_g = 0;
  bool ok() const { return c_gamma == k_dim_g; }
};

CodimReport codim_report(const GradedStructure& gr);

struct GradingReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks bracket compatibility, dimension symmetry, orthogonality of g_p and
/// g_q under the given form for p + q != 0, and (ad h) X = p X on g_p.
GradingReport verify_grading(const GradedStructure& gr, const Matrix& form_gram);

}  // namespace laxalg

#endif
