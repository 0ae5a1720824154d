#ifndef LAXALG_COCYCLE_HPP
#define LAXALG_COCYCLE_HPP

#include "laxalg/current.hpp"

#include <optional>
#include <string>
#include <vector>

namespace laxalg {

enum class FormKind { Trace, Killing };

std::string to_string(FormKind f);
/// "trace" or "killing"; throws std::invalid_argument otherwise.
FormKind parse_form(const std::string& s);
const Matrix& form_gram(const LieAlgebra& alg, FormKind f);

/// omega = coords dz, Cartan-valued.
struct ConnectionForm {
  std::vector<RatFun> coords;
  /// Order of zero demanded at each P.
  std::vector<long> m_plus;
  /// Allowed pole order at each Q.
  std::vector<long> m_minus;
  /// Residue at each gamma point (its grading element).
  std::vector<Vector> residues;
};

/// omega/dz = sum_gamma h_gamma (1/(z - z_gamma) - 1/(z - z_Q1)).
/// Throws std::invalid_argument if some h_gamma leaves the Cartan subalgebra.
ConnectionForm build_omega(const LaxOperatorAlgebra& lax);

/// Checks the residue, infinity and divisor invariants of omega; returns the
/// first violation or an empty string.
std::string check_omega(const LaxOperatorAlgebra& lax, const ConnectionForm& w);

/// rho with rho dz = <L, (d - ad omega) L'>.
RatFun connection_form_value(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                             const ConnectionForm& w, FormKind form);

/// One flag per gamma point: rho has no pole there.
std::vector<bool> check_gamma_holomorphy(const LaxOperatorAlgebra& lax, const CurrentElement& L,
                                         const CurrentElement& Lp, const ConnectionForm& w, FormKind form);

struct CocycleEvaluation {
  Scalar value;
  std::vector<Scalar> p_residues;
  /// Minus the sum of residues at the Q points; equals value when rho is
  /// holomorphic at every gamma.
  Scalar q_value;
  FormKind form = FormKind::Trace;
};

CocycleEvaluation eta(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                      const ConnectionForm& w, FormKind form);

struct LocalityBounds {
  long lower = 0;
  long upper = 0;
};

/// eta vanishes on L_m x L_n whenever m + n < lower or m + n > upper.
LocalityBounds locality_bounds(const LaxOperatorAlgebra& lax, const ConnectionForm& w);

struct IdentityReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return failures == 0; }
};

/// eta([x,y],z) + eta([y,z],x) + eta([z,x],y) = 0 over all triples.
IdentityReport verify_cocycle_identity(const LaxOperatorAlgebra& lax, const std::vector<CurrentElement>& elems,
                                       const ConnectionForm& w, FormKind form);

struct CoboundarySides {
  RatFun lhs;  // <L, [omega, L']> rescaled to the Killing form
  RatFun rhs;  // -tr(ad[L, L'] ad omega)
  bool equal() const { return lhs == rhs; }
};

CoboundarySides coboundary_identity(const LaxOperatorAlgebra& lax, const CurrentElement& L, const CurrentElement& Lp,
                                    const ConnectionForm& w, FormKind form);

}  // namespace laxalg

#endif
