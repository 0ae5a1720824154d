#ifndef LAXALG_CURRENT_HPP
#define LAXALG_CURRENT_HPP

#include "laxalg/grading.hpp"
#include "laxalg/surface.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace laxalg {

/// A g-valued rational function, one RatFun per algebra basis coordinate.
struct CurrentElement {
  AlgebraPtr algebra;
  std::vector<RatFun> coords;

  bool is_zero() const;
  friend bool operator==(const CurrentElement& a, const CurrentElement& b) { return a.coords == b.coords; }
};

CurrentElement operator+(const CurrentElement& a, const CurrentElement& b);
CurrentElement operator-(const CurrentElement& a, const CurrentElement& b);
CurrentElement operator*(const Scalar& s, const CurrentElement& a);
/// f times a constant algebra element.
CurrentElement times(const RatFun& f, std::span<const Scalar> x, AlgebraPtr alg);

struct MembershipResult {
  bool ok = true;
  std::string violation;
};

struct DegreeBasis {
  long m = 0;
  Divisor divisor;
  std::vector<CurrentElement> elements;
  /// Algebra coordinate carrying each element (every element lives on one).
  std::vector<std::size_t> coordinate;
  std::size_t ambient_dim = 0;
  std::size_t constraint_rank = 0;
  std::size_t expected_dim = 0;

  std::size_t dim() const { return elements.size(); }
  bool generic() const { return dim() == expected_dim; }
};

struct Decomposition {
  std::map<long, CurrentElement> components;
  /// False when the degree spaces of the window are not independent; the
  /// components are then one particular solution (free coefficients zero).
  bool unique = true;
};

struct PairWitness {
  long m = 0, n = 0;
  std::size_t i = 0, j = 0;
  std::string reason;
};

struct AlmostGradingReport {
  long lo = 0, hi = 0;
  long window = 0;
  /// Spread constants over pairs with a unique decomposition.
  long R = 0, S = 0;
  std::size_t pairs = 0;
  std::size_t closure_failures = 0;
  std::size_t not_unique = 0;
  std::size_t off_degree = 0;
  std::size_t outside_window = 0;
  /// Pairs whose bracket satisfies the defining condition of L_{m+n} itself.
  std::size_t in_target = 0;
  std::vector<PairWitness> witnesses;

  bool ok() const { return closure_failures == 0 && not_unique == 0 && off_degree == 0 && outside_window == 0; }
};

/// The Lax operator algebra over a genus-0 marked curve, with cached degree
/// subspaces. Thread safe; degree bases are immutable once built.
class LaxOperatorAlgebra {
public:
  LaxOperatorAlgebra(AlgebraPtr alg, MarkedCurve curve, DegreeSchedule schedule);

  const AlgebraPtr& algebra() const { return alg_; }
  const MarkedCurve& curve() const { return curve_; }
  const DegreeSchedule& schedule() const { return schedule_; }
  const GradedStructure& grading(std::size_t g) const { return gradings_.at(g); }
  const std::vector<long>& depths() const { return depths_; }

  CurrentElement zero() const;
  MembershipResult check_membership(const CurrentElement& L) const;
  /// Defining condition of L_m: (L) + D_m >= 0 together with membership.
  MembershipResult in_degree(const CurrentElement& L, long m) const;

  std::shared_ptr<const DegreeBasis> degree_subspace(long m) const;
  /// Seeds the cache with a basis obtained elsewhere (e.g. read from disk).
  void adopt(std::shared_ptr<const DegreeBasis> basis) const;
  /// Builds the bases for m in [lo, hi] on parallel threads.
  void precompute(long lo, long hi) const;

  CurrentElement bracket(const CurrentElement& a, const CurrentElement& b) const;

  /// Components over degrees lo..hi. Throws std::domain_error when L is not
  /// in the span of the window.
  Decomposition decompose(const CurrentElement& L, long lo, long hi) const;

  /// Brackets all basis pairs of L_m x L_n for m, n in [lo, hi] and
  /// decomposes each over m+n-window .. m+n+window.
  AlmostGradingReport verify_almost_graded(long lo, long hi, long window = 2) const;

private:
  struct WindowSystem;
  DegreeBasis build(long m) const;
  std::shared_ptr<const WindowSystem> window_system(long lo, long hi) const;

  AlgebraPtr alg_;
  MarkedCurve curve_;
  DegreeSchedule schedule_;
  std::vector<GradedStructure> gradings_;
  std::vector<long> depths_;
  mutable std::mutex mu_;
  mutable std::map<long, std::shared_ptr<const DegreeBasis>> cache_;
  mutable std::map<std::pair<long, long>, std::shared_ptr<const WindowSystem>> windows_;
};

}  // namespace laxalg

#endif
