#ifndef LAXALG_LIEALG_HPP
#define LAXALG_LIEALG_HPP

#include "laxalg/exactnum.hpp"
#include "laxalg/rootsys.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace laxalg {

/// Exact matrix model of a Lie algebra with a fixed basis and structure
/// constants. Models built by build_algebra carry root data and use the
/// adapted basis order: Cartan flag basis H_1..H_r, then positive root
/// vectors in RootSystem::positive order, then the matching negatives.
///
/// Root convention: the ambient functional e_i evaluates to minus the i-th
/// diagonal entry, so positive root vectors sit below the diagonal and
/// sl(n) has E_21 as the root vector of e_1 - e_2.
class LieAlgebra {
public:
  /// Generic constructor: the span of the given d x d matrices, which must be
  /// linearly independent and closed under the commutator. No root data.
  static std::shared_ptr<const LieAlgebra> from_basis(std::string name, std::vector<Matrix> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t matrix_size() const { return d_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::optional<Matrix>& sigma() const { return sigma_; }

  bool has_roots() const { return roots_.has_value(); }
  const RootSystem& roots() const;
  std::size_t cartan_dim() const { return cartan_dim_; }
  /// Basis index of the root vector with the given expansion (positive or negative).
  std::size_t root_index(const Expansion& e) const;
  /// Expansion of the weight of basis element i (all zeros for Cartan elements).
  const Expansion& weight(std::size_t i) const { return weights_.at(i); }

  /// Coordinates of a matrix over the basis; nullopt if outside the span.
  std::optional<Vector> try_coords(const Matrix& x) const;
  /// As try_coords, throwing std::invalid_argument when X is not in the algebra.
  Vector coords(const Matrix& x) const;
  Matrix to_matrix(std::span<const Scalar> coords) const;

  /// Nonzero structure constants: [b_i, b_j] = sum_k c_ij^k b_k.
  const std::vector<std::pair<std::size_t, Scalar>>& structure(std::size_t i, std::size_t j) const
  {
    return sc_[i * dim() + j];
  }
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Matrix ad(std::span<const Scalar> x) const;

  Scalar trace_form(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Scalar killing_form(std::span<const Scalar> x, std::span<const Scalar> y) const;
  const Matrix& trace_gram() const { return trace_gram_; }
  const Matrix& killing_gram() const { return killing_gram_; }
  /// c with Killing = c * trace form, when the two are proportional.
  const std::optional<Scalar>& killing_trace_ratio() const { return ratio_; }

  /// Unit coordinate vector of basis element i.
  Vector unit(std::size_t i) const;

private:
  friend std::shared_ptr<const LieAlgebra> build_algebra(RootType type, int param);
  LieAlgebra() = default;
  void finish();

  std::string name_;
  std::size_t d_ = 0;
  std::vector<Matrix> basis_;
  std::optional<Matrix> sigma_;
  std::optional<RootSystem> roots_;
  std::size_t cartan_dim_ = 0;
  std::vector<Expansion> weights_;
  std::map<Expansion, std::size_t> root_index_;
  std::vector<std::size_t> pivot_positions_;
  Matrix pivot_inverse_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sc_;
  Matrix trace_gram_;
  Matrix killing_gram_;
  std::optional<Scalar> ratio_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// sl(n) for (A, n); so(2n+1), sp(2n), so(2n) for B, C, D of rank n; the
/// 14-dimensional derivation algebra of the split octonions for G2, acting on
/// the 7-dimensional trace-zero part.
AlgebraPtr build_algebra(RootType type, int param);

/// Element of a specific algebra, stored by coordinates.
struct LieElement {
  AlgebraPtr algebra;
  Vector coords;

  Matrix matrix() const { return algebra->to_matrix(coords); }
};

/// Throws std::invalid_argument when the operands belong to different algebras.
LieElement bracket(const LieElement& x, const LieElement& y);
Scalar trace_form(const LieElement& x, const LieElement& y);
Scalar killing_form(const LieElement& x, const LieElement& y);

/// Basis of the space of symmetric invariant bilinear forms, each returned
/// as a dim x dim Gram matrix over the algebra basis.
std::vector<Matrix> invariant_form_space(const LieAlgebra& alg);

/// True iff gram defines an invariant bilinear form: B([x,y],z) + B(y,[x,z]) = 0.
bool is_invariant(const LieAlgebra& alg, const Matrix& gram);

/// Block-diagonal direct sum of two matrix models (no root data).
AlgebraPtr direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace laxalg

#endif
