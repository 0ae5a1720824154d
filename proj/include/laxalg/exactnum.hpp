#ifndef LAXALG_EXACTNUM_HPP
#define LAXALG_EXACTNUM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxalg {

/// Arbitrary-precision rational, always kept in lowest terms with positive
/// denominator (GMP canonicalizes after every operation).
using Scalar = mpq_class;

using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& s);

///////////////////////////////////
// Dense matrices                //
///////////////////////////////////

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Kernel basis, one vector per free column in increasing column order.
std::vector<Vector> null_space(const Matrix& m);

/// Determinant by Gaussian elimination over Q.
Scalar determinant(Matrix m);

/// Inverse of a square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves A x = b for a single right-hand side; nullopt if inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);

/// Precomputed solver for many right-hand sides against a matrix with full
/// column rank. Selects an invertible square row subset once; each solve is a
/// matrix-vector product followed by a full consistency check.
class ColumnSolver {
public:
  explicit ColumnSolver(Matrix a);
  std::size_t unknowns() const { return a_.cols(); }
  bool full_column_rank() const { return full_rank_; }
  std::optional<Vector> solve(std::span<const Scalar> b) const;

private:
  Matrix a_;
  bool full_rank_ = false;
  std::vector<std::size_t> rows_;
  Matrix inv_;
};

/// Incremental sparse row reduction to RREF. Rows are added one at a time;
/// dependent rows are discarded. Intended for tall, very sparse systems.
class SparseEliminator {
public:
  explicit SparseEliminator(std::size_t cols) : cols_(cols), pivot_index_(cols, -1) {}

  /// Adds a row given as (column, value) pairs. Returns true if it increased rank.
  bool add_row(std::vector<std::pair<std::size_t, Scalar>> row);
  std::size_t rank() const { return pivot_rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<Vector> null_space() const;

private:
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
  std::size_t cols_;
  // pivot column -> fully reduced row with leading 1 at that column
  std::vector<std::pair<std::size_t, SparseRow>> pivot_rows_;
  std::vector<long> pivot_index_;
};

///////////////////////////////////
// Univariate polynomials        //
///////////////////////////////////

/// Dense polynomial in z, coefficients low to high, trailing zeros stripped.
class Poly {
public:
  Poly() = default;
  explicit Poly(Vector coeffs);
  Poly(const Scalar& c);  // NOLINT(google-explicit-constructor): constants promote

  static Poly monomial(const Scalar& c, std::size_t degree);
  /// (z - a)
  static Poly linear(const Scalar& a);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Vector& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const;

  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  Poly monic() const;
  /// p(w + a) as a polynomial in w.
  Poly shifted(const Scalar& a) const;
  /// Multiplicity of a as a root (0 if p(a) != 0). Undefined for zero poly.
  std::size_t root_multiplicity(const Scalar& a) const;
  /// Divides out (z - a)^k exactly; throws if not divisible.
  Poly divide_root(const Scalar& a, std::size_t k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(const char* var = "z") const;

private:
  void strip();
  Vector c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, std::size_t e);

///////////////////////////////////
// Rational functions            //
///////////////////////////////////

/// Canonical num/den with monic den and gcd(num, den) = 1. Zero is 0/1.
class RatFun {
public:
  RatFun() : den_(Scalar(1)) {}
  RatFun(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT
  RatFun(const Poly& p) : num_(p), den_(Scalar(1)) {}     // NOLINT
  RatFun(Poly num, Poly den);

  /// (z - a)^(-k)
  static RatFun inverse_power(const Scalar& a, std::size_t k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Order of vanishing at a finite point; negative for poles.
  /// Zero function returns kInfiniteOrder.
  long order_at(const Scalar& a) const;
  /// deg(den) - deg(num): order at infinity in the coordinate 1/z.
  long order_at_infinity() const;
  bool holomorphic_at_infinity() const { return is_zero() || num_.degree() <= den_.degree(); }
  /// Value at infinity; requires holomorphic_at_infinity().
  Scalar value_at_infinity() const;
  Scalar eval(const Scalar& x) const;
  RatFun derivative() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const Scalar& s, const RatFun& a);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string() const;

  static constexpr long kInfiniteOrder = std::numeric_limits<long>::max();

private:
  Poly num_;
  Poly den_;
};

///////////////////////////////////
// Laurent expansions            //
///////////////////////////////////

/// Coefficients of (z - z0)^p for p = lowest .. truncation. Coefficients above
/// the truncation order are unknown, not zero.
struct LaurentSeries {
  Scalar base;
  long lowest = 0;
  long truncation = -1;
  Vector coeffs;

  /// Coefficient of (z - base)^p; throws std::out_of_range beyond truncation.
  Scalar coeff(long p) const;
};

LaurentSeries laurent_expand(const RatFun& f, const Scalar& z0, long lo, long hi);

/// Expansion in t = 1/z at z = infinity, exponents lo..hi.
LaurentSeries laurent_expand_at_infinity(const RatFun& f, long lo, long hi);

Scalar residue(const RatFun& f, const Scalar& z0);

/// Residue of f dz at infinity: minus the coefficient of z^{-1} at infinity.
Scalar residue_at_infinity(const RatFun& f);

/// Distinct rational roots of p, ascending. Throws if p has a non-linear
/// irreducible factor over Q (i.e. an irrational or complex root).
std::vector<Scalar> rational_roots(const Poly& p);

}  // namespace laxalg

#endif
