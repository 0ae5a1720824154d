#ifndef LAXALG_ROOTSYS_HPP
#define LAXALG_ROOTSYS_HPP

#include "laxalg/exactnum.hpp"

#include <string>
#include <vector>

namespace laxalg {

enum class RootType { A, B, C, D, G2 };

RootType parse_root_type(const std::string& name);
std::string to_string(RootType t);

/// Integer coordinates over the simple roots.
using Expansion = std::vector<long>;

/// Nonnegative integers p_i = alpha_i(h), one per simple root.
using GradingSpec = std::vector<long>;

/// Type A is keyed by matrix size: (A, n) is the root system of sl(n), with
/// n - 1 simple roots e_i - e_{i+1}. For B, C, D the parameter is the rank.
/// G2 ignores the parameter.
struct RootSystem {
  RootType type = RootType::A;
  int param = 0;
  int rank = 0;
  /// Ambient coordinates: e_1..e_n for classical types, the simple-root basis
  /// itself for G2.
  std::size_t ambient_dim = 0;
  std::vector<Vector> simple_roots;
  std::vector<Vector> positive_ambient;
  /// Ordered by height, then lexicographically descending on the expansion.
  std::vector<Expansion> positive;
  /// Gram matrix (alpha_i, alpha_j) of the simple roots.
  Matrix gram;
  /// A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  std::vector<std::vector<long>> cartan;

  std::string name() const;
};

RootSystem build_root_system(RootType type, int param);

/// Expansion of a root (positive or negative) given in ambient coordinates.
/// Throws std::invalid_argument if the vector is not a root of rs.
Expansion expand_in_simple(const RootSystem& rs, const Vector& root);

/// Ambient coordinates of an integer combination of simple roots.
Vector to_ambient(const RootSystem& rs, const Expansion& e);

struct HighestRoot {
  Vector ambient;
  Expansion expansion;
};

HighestRoot highest_root(const RootSystem& rs);

/// Sum m_i p_i. Valid for negative roots too.
long level(const GradingSpec& spec, const Expansion& root);
long level(const RootSystem& rs, const GradingSpec& spec, const Expansion& root);

/// Level of the highest root; 0 for the zero spec.
long depth(const RootSystem& rs, const GradingSpec& spec);

/// Throws std::invalid_argument unless spec has rank entries, all >= 0.
void validate_spec(const RootSystem& rs, const GradingSpec& spec);

/// Inner product of two expansions under the Gram matrix.
Scalar root_inner(const RootSystem& rs, const Expansion& a, const Expansion& b);

}  // namespace laxalg

#endif
