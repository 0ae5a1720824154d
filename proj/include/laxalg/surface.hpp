#ifndef LAXALG_SURFACE_HPP
#define LAXALG_SURFACE_HPP

#include "laxalg/exactnum.hpp"
#include "laxalg/rootsys.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace laxalg {

struct GammaPoint {
  Scalar coord;
  GradingSpec spec;
};

/// The projective line with finite marked points. Infinity is never marked.
struct MarkedCurve {
  std::vector<Scalar> P;
  std::vector<Scalar> Q;
  std::vector<GammaPoint> gamma;

  std::size_t N() const { return P.size(); }
  std::size_t M() const { return Q.size(); }
  /// Throws std::invalid_argument unless N, M >= 1 and all points are distinct.
  void validate() const;
  /// P points, then Q points, then gamma points.
  std::vector<Scalar> all_points() const;
};

/// n_{m,j} = a_j m + b_{m,j} with b periodic in m of the given period.
struct DegreeSchedule {
  std::vector<Scalar> slopes;
  long period = 1;
  /// offsets[r][j] = b_{m,j} for m = r (mod period)
  std::vector<Vector> offsets;

  long n(long m, std::size_t j) const;
  std::vector<long> row(long m) const;
  /// max |b_{m,j}|
  Scalar bound() const;
  /// Throws std::invalid_argument if the slope sum, offset sums, integrality
  /// or monotonicity conditions fail for a curve with N P-points.
  void validate(std::size_t N) const;
};

/// Slopes N/M, n_{m,j} = floor((N m + N - 1 + j - 1) / M) for j = 1..M.
DegreeSchedule default_schedule(const MarkedCurve& curve);

struct Divisor {
  std::vector<std::pair<Scalar, long>> terms;

  long degree() const;
  long coeff(const Scalar& point) const;
};

/// Depth of the grading at each gamma point.
std::vector<long> gamma_depths(const MarkedCurve& curve, const RootSystem& rs);

/// -m at each P, n_{m,j} at Q_j, the depth k at each gamma.
Divisor divisor_Dm(const MarkedCurve& curve, const DegreeSchedule& schedule,
                   const std::vector<long>& depths, long m);

/// Basis of {f : (f) + D >= 0, f holomorphic at infinity}; empty if deg D < 0.
std::vector<RatFun> rr_basis(const Divisor& d);

/// Residues of f dz at every finite pole. Throws std::domain_error unless
/// f = O(z^-2) at infinity.
std::map<Scalar, Scalar> form_residues(const RatFun& f);

}  // namespace laxalg

#endif
