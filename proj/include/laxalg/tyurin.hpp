#ifndef LAXALG_TYURIN_HPP
#define LAXALG_TYURIN_HPP

#include "laxalg/current.hpp"

#include <string>
#include <vector>

namespace laxalg {

/// Gradings by a simple root for which the grading subspaces have a
/// parametric matrix description. "first"/"last" name the simple root
/// alpha_1 or alpha_n; Ar is sl(n) graded by alpha_r.
enum class TyurinCase { A1, Ar, D_first, D_last, C_first, C_last, B_first, B_last, G2_depth2 };

std::string to_string(TyurinCase c);
/// Throws std::invalid_argument on an unknown tag.
TyurinCase parse_tyurin_case(const std::string& s);

/// The algebra of a case: sl(n) for A (n = matrix size), so(2n), sp(2n),
/// so(2n+1) for D, C, B of rank n, G2.
AlgebraPtr tyurin_algebra(TyurinCase c, int n);
/// The simple-root grading of a case; r only matters for Ar.
GradingSpec tyurin_spec(TyurinCase c, int n, int r = 1);

/// Frames and parameters of a local expansion
///   L(z) = L_{-k} z^{-k} + ... + L_{-1} z^{-1} + L_0 + L_1 z + ...
/// Frames are the coordinate vectors fixed per case; the caller fills the
/// parameters.
struct TyurinData {
  TyurinCase tag = TyurinCase::A1;
  int n = 2;
  int r = 1;
  /// alpha (one frame) or alpha_1..alpha_r / alpha_1..alpha_n
  std::vector<Vector> alpha;
  /// one parameter vector per frame
  std::vector<Vector> beta;
  /// B_last: alpha_0 = e_{n+1}, beta_0 supported on the first n coordinates
  Vector alpha0, beta0;
  /// C_first: coefficient of alpha alpha^T sigma at z^{-2}
  Scalar nu = 0;
  /// eigenvalue of L_0 on alpha for the one-frame cases
  Scalar kappa = 0;
  /// L_0, L_1, ... as matrices
  std::vector<Matrix> regular;
};

/// Frames set, every parameter zero, no regular part.
TyurinData default_data(TyurinCase c, int n, int r = 1);

/// First violated relation of the case, or an empty string.
std::string check_relations(const TyurinData& d);

/// Generators of the polar coefficient L_p (p < 0) spanned by the case's
/// parametrization; one generator per basis vector of the parameter space.
struct Family {
  long level = -1;
  std::vector<Matrix> generators;
  std::string description;
};

/// {alpha beta^T : beta^T alpha = 0}, alpha = e_1.
Family family_A_minus1(int n);
/// {sum_i alpha_i beta_i^T : alpha_i^T beta_j = 0}, alpha_i = e_i, i <= r.
Family family_A_r(int n, int r);
/// {(alpha beta^T - beta alpha^T) sigma : beta^T sigma alpha = 0}.
Family family_D_minus1(int n);
Family family_B_minus1(int n);
/// g_{-2} = {nu alpha alpha^T sigma}, then g_{-1} = {(alpha beta^T + beta alpha^T) sigma}.
/// With strict, beta is also taken orthogonal to alpha: beta = alpha only
/// reproduces the g_{-2} generator and is absorbed by nu.
std::vector<Family> family_C(int n, bool strict = true);
/// alpha_n-gradings. D, C: the g_{-1} family with frames alpha_i = e_i.
/// B: g_{-1} = {(alpha_0 beta_0^T - beta_0 alpha_0^T) sigma} (or without sigma
/// when with_sigma is false), then g_{-2} as for D.
std::vector<Family> family_last_root(RootType type, int n, bool with_sigma = true);

enum class SpanVerdict { Equal, FamilyProper, SubspaceProper, Incomparable, OutsideAlgebra };
std::string to_string(SpanVerdict v);

struct SpanCheck {
  long level = 0;
  std::size_t generators = 0;
  std::size_t outside_algebra = 0;
  std::size_t family_rank = 0;
  std::size_t subspace_dim = 0;
  std::size_t joint_rank = 0;
  /// every basis vector of g_level solved exactly as a parameter combination
  bool surjective = false;
  SpanVerdict verdict = SpanVerdict::Incomparable;
  bool equal() const { return verdict == SpanVerdict::Equal; }
};

/// Exact rank comparison of span(generators) with g_level.
SpanCheck compare_span(const GradedStructure& gr, const std::vector<Matrix>& generators, long level);

struct StabilizerCheck {
  std::size_t stabilizer_dim = 0;
  std::size_t filtration_dim = 0;
  std::size_t joint_rank = 0;
  bool equal() const { return stabilizer_dim == filtration_dim && joint_rank == filtration_dim; }
};

/// {X in sl(n) : X e_1 in C e_1} against g_{-1} + g_0 for the alpha_1-grading.
StabilizerCheck stabilizer_check_A(int n);

struct IdentityCount {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return checked > 0 && failures == 0; }
};

/// alpha^T sigma L_1 alpha = 0 over the basis of g_1 of sp(2n) graded by alpha_1.
IdentityCount c_level_one_identity(int n);

struct G2Report {
  GradingSpec depth2_spec, depth3_spec;
  std::vector<std::size_t> depth2_dims, depth3_dims;
  /// block family of g_{-2}: one parameter mu
  std::size_t minus2_parameters = 0, minus2_rank = 0;
  /// block family of g_{-1}: beta_01, beta_02 and beta_1, beta_2 under their
  /// orthogonality relations
  std::size_t minus1_parameters = 0, minus1_rank = 0;
  std::size_t root_dim_minus1 = 0, root_dim_minus2 = 0;
  /// kernel directions of the parameter map, by parameter name
  std::vector<std::string> dependencies;
};

/// Level dimensions of both simple-root gradings and the parameter count of
/// the block families. The irrational block scale is replaced by a rational
/// stand-in; the ranks do not depend on it because the scaled blocks carry
/// disjoint supports.
G2Report g2_grading_dims(const Scalar& scale = Scalar(1));

/// Truncated germ L(z) = sum_p L_p (z - gamma)^p built from the data, as a
/// current with Laurent-polynomial coordinates. Throws std::invalid_argument
/// when the relations fail and std::domain_error for G2_depth2, whose matrix
/// realization is not modeled.
CurrentElement local_expansion_from_data(const TyurinData& d, const Scalar& gamma);

/// Coefficientwise filtration test of a germ: L_p in g~_p for p = -k..k-1,
/// no pole beyond order k.
MembershipResult check_germ(const GradedStructure& gr, const CurrentElement& germ, const Scalar& gamma);

/// Outcome of one named check of the suite.
struct TyurinCheck {
  std::string name;
  TyurinCase tag = TyurinCase::A1;
  int n = 0;
  bool passed = false;
  std::string detail;
};

/// All span, stabilizer, identity, germ and G2 checks; a non-empty filter
/// keeps only the matching case tag.
std::vector<TyurinCheck> run_tyurin_suite(const std::string& case_filter = "");

}  // namespace laxalg

#endif
