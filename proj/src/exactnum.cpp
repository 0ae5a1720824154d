#include "laxalg/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace laxalg {

Scalar parse_scalar(const std::string& text)
{
  auto trimmed = text;
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), [](unsigned char c) { return std::isspace(c); }),
                trimmed.end());
  if (trimmed.empty())
    throw std::invalid_argument("empty rational literal");
  auto slash = trimmed.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
      i = 1;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        return false;
    return true;
  };
  std::string num = trimmed.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : trimmed.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s)
{
  return s.get_str();
}

///////////////////////////////////
// Matrix                        //
///////////////////////////////////

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const
{
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

Scalar Matrix::trace() const
{
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
  Matrix m = a;
  for (auto& x : m.data_)
    x *= s;
  return m;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v)
{
  if (a.cols_ != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (v[j] != 0 && a(i, j) != 0)
        out[i] += a(i, j) * v[j];
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b)
{
  return a * b - b * a;
}

RrefResult rref(Matrix m)
{
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(p, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0)
          m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Matrix& m)
{
  return rref(m).rank;
}

std::vector<Vector> null_space(const Matrix& m)
{
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      v[red.pivots[i]] = -red.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(Matrix m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0)
        continue;
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = red.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b)
{
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == a.cols())
    return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    x[red.pivots[i]] = red.reduced(i, a.cols());
  return x;
}

ColumnSolver::ColumnSolver(Matrix a) : a_(std::move(a))
{
  auto red = rref(a_.transpose());
  full_rank_ = red.rank == a_.cols();
  if (!full_rank_)
    return;
  rows_ = red.pivots;
  Matrix square(rows_.size(), a_.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j)
      square(i, j) = a_(rows_[i], j);
  auto inv = inverse(square);
  if (!inv)
    throw std::logic_error("ColumnSolver: selected rows are singular");
  inv_ = std::move(*inv);
}

std::optional<Vector> ColumnSolver::solve(std::span<const Scalar> b) const
{
  if (!full_rank_)
    throw std::logic_error("ColumnSolver: matrix lacks full column rank");
  if (b.size() != a_.rows())
    throw std::invalid_argument("ColumnSolver: rhs length mismatch");
  Vector sub(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    sub[i] = b[rows_[i]];
  Vector x = inv_ * sub;
  Vector check = a_ * x;
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != b[i])
      return std::nullopt;
  return x;
}

bool SparseEliminator::add_row(SparseRow row)
{
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  // reduce against existing pivots until the row has no pivot columns left
  std::map<std::size_t, Scalar> acc;
  for (auto& [c, v] : row)
    if (v != 0)
      acc[c] += v;
  for (;;) {
    bool changed = false;
    for (auto it = acc.begin(); it != acc.end(); ++it) {
      if (it->second == 0 || pivot_index_[it->first] < 0)
        continue;
      Scalar f = it->second;
      const auto& prow = pivot_rows_[static_cast<std::size_t>(pivot_index_[it->first])].second;
      for (const auto& [c, v] : prow)
        acc[c] -= f * v;
      changed = true;
      break;
    }
    if (!changed)
      break;
  }
  SparseRow reduced;
  for (auto& [c, v] : acc)
    if (v != 0)
      reduced.emplace_back(c, v);
  if (reduced.empty())
    return false;
  std::size_t pc = reduced.front().first;
  Scalar inv = 1 / reduced.front().second;
  for (auto& [c, v] : reduced)
    v *= inv;
  // eliminate the new pivot column from existing rows
  for (auto& [col, prow] : pivot_rows_) {
    auto hit = std::find_if(prow.begin(), prow.end(), [pc](const auto& e) { return e.first == pc; });
    if (hit == prow.end())
      continue;
    Scalar f = hit->second;
    std::map<std::size_t, Scalar> merged(prow.begin(), prow.end());
    for (const auto& [c, v] : reduced)
      merged[c] -= f * v;
    prow.clear();
    for (auto& [c, v] : merged)
      if (v != 0)
        prow.emplace_back(c, v);
  }
  pivot_index_[pc] = static_cast<long>(pivot_rows_.size());
  pivot_rows_.emplace_back(pc, std::move(reduced));
  return true;
}

std::vector<Vector> SparseEliminator::null_space() const
{
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_index_[f] >= 0)
      continue;
    Vector v(cols_);
    v[f] = 1;
    for (const auto& [pc, prow] : pivot_rows_)
      for (const auto& [c, val] : prow)
        if (c == f)
          v[pc] = -val;
    basis.push_back(std::move(v));
  }
  return basis;
}

///////////////////////////////////
// Poly                          //
///////////////////////////////////

Poly::Poly(Vector coeffs) : c_(std::move(coeffs))
{
  strip();
}

Poly::Poly(const Scalar& c)
{
  if (c != 0)
    c_.push_back(c);
}

Poly Poly::monomial(const Scalar& c, std::size_t degree)
{
  Vector v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Scalar& a)
{
  return Poly(Vector{-a, Scalar(1)});
}

void Poly::strip()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

const Scalar& Poly::leading() const
{
  if (c_.empty())
    throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Scalar Poly::eval(const Scalar& x) const
{
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const
{
  if (c_.size() <= 1)
    return Poly();
  Vector d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const
{
  if (c_.empty())
    return *this;
  Scalar inv = 1 / c_.back();
  Vector v = c_;
  for (auto& x : v)
    x *= inv;
  return Poly(std::move(v));
}

Poly Poly::shifted(const Scalar& a) const
{
  // Horner-style Taylor shift
  Vector v = c_;
  const std::size_t n = v.size();
  if (a == 0 || n <= 1)
    return *this;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j)
      v[j - 1] += a * v[j];
  return Poly(std::move(v));
}

std::size_t Poly::root_multiplicity(const Scalar& a) const
{
  if (is_zero())
    throw std::domain_error("root multiplicity of zero polynomial");
  Poly s = shifted(a);
  std::size_t k = 0;
  while (k < s.c_.size() && s.c_[k] == 0)
    ++k;
  return k;
}

Poly Poly::divide_root(const Scalar& a, std::size_t k) const
{
  if (k == 0)
    return *this;
  Poly s = shifted(a);
  for (std::size_t i = 0; i < k; ++i)
    if (i < s.c_.size() && s.c_[i] != 0)
      throw std::domain_error("divide_root: not divisible");
  Vector v(s.c_.begin() + static_cast<long>(std::min(k, s.c_.size())), s.c_.end());
  return Poly(std::move(v)).shifted(-a);
}

Poly operator+(const Poly& a, const Poly& b)
{
  Vector v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a)
{
  Vector v = a.c_;
  for (auto& x : v)
    x = -x;
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b)
{
  return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b)
{
  if (a.is_zero() || b.is_zero())
    return Poly();
  Vector v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::string Poly::to_string(const char* var) const
{
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0)
      continue;
    Scalar c = c_[i];
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    Scalar ac = abs(c);
    if (i == 0 || ac != 1)
      os << ac.get_str();
    if (i > 0) {
      if (ac != 1)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree())
    return {Poly(), a};
  Vector r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  Vector q(r.size() - db);
  Scalar inv = 1 / bc.back();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0)
      continue;
    Scalar f = r[i] * inv;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b)
{
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Poly pow(const Poly& p, std::size_t e)
{
  Poly result(Scalar(1)), base = p;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

///////////////////////////////////
// RatFun                        //
///////////////////////////////////

RatFun::RatFun(Poly num, Poly den)
{
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Scalar(1));
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
  }
  Scalar lead = den.leading();
  if (lead != 1) {
    Scalar inv = 1 / lead;
    num = Poly(inv) * num;
    den = Poly(inv) * den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFun RatFun::inverse_power(const Scalar& a, std::size_t k)
{
  RatFun f;
  f.num_ = Poly(Scalar(1));
  f.den_ = pow(Poly::linear(a), k);
  return f;
}

long RatFun::order_at(const Scalar& a) const
{
  if (is_zero())
    return kInfiniteOrder;
  return static_cast<long>(num_.root_multiplicity(a)) - static_cast<long>(den_.root_multiplicity(a));
}

long RatFun::order_at_infinity() const
{
  if (is_zero())
    return kInfiniteOrder;
  return den_.degree() - num_.degree();
}

Scalar RatFun::value_at_infinity() const
{
  if (!holomorphic_at_infinity())
    throw std::domain_error("value_at_infinity: pole at infinity");
  if (is_zero() || num_.degree() < den_.degree())
    return 0;
  return num_.leading() / den_.leading();
}

Scalar RatFun::eval(const Scalar& x) const
{
  Scalar d = den_.eval(x);
  if (d == 0)
    throw std::domain_error("RatFun::eval at a pole");
  return num_.eval(x) / d;
}

RatFun RatFun::derivative() const
{
  if (is_zero())
    return RatFun();
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun operator+(const RatFun& a, const RatFun& b)
{
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.den_ == b.den_)
    return RatFun(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly ad = divmod(a.den_, g).quotient;
  Poly bd = divmod(b.den_, g).quotient;
  return RatFun(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFun operator-(const RatFun& a)
{
  RatFun f = a;
  f.num_ = -f.num_;
  return f;
}

RatFun operator-(const RatFun& a, const RatFun& b)
{
  return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b)
{
  if (a.is_zero() || b.is_zero())
    return RatFun();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    RatFun f;
    f.num_ = a.num_ * b.num_;
    return f;
  }
  // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den)
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.degree() > 0 ? divmod(a.num_, g1).quotient : a.num_;
  Poly bd = g1.degree() > 0 ? divmod(b.den_, g1).quotient : b.den_;
  Poly bn = g2.degree() > 0 ? divmod(b.num_, g2).quotient : b.num_;
  Poly ad = g2.degree() > 0 ? divmod(a.den_, g2).quotient : a.den_;
  RatFun f;
  f.num_ = an * bn;
  f.den_ = ad * bd;
  Scalar lead = f.den_.leading();
  if (lead != 1) {
    Scalar inv = 1 / lead;
    f.num_ = Poly(inv) * f.num_;
    f.den_ = Poly(inv) * f.den_;
  }
  return f;
}

RatFun operator*(const Scalar& s, const RatFun& a)
{
  if (s == 0 || a.is_zero())
    return RatFun();
  RatFun f = a;
  f.num_ = Poly(s) * f.num_;
  return f;
}

RatFun operator/(const RatFun& a, const RatFun& b)
{
  if (b.is_zero())
    throw std::domain_error("RatFun division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const
{
  if (den_.degree() == 0)
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

///////////////////////////////////
// Laurent expansions            //
///////////////////////////////////

Scalar LaurentSeries::coeff(long p) const
{
  if (p > truncation)
    throw std::out_of_range("Laurent coefficient beyond truncation order");
  if (p < lowest)
    return 0;
  return coeffs[static_cast<std::size_t>(p - lowest)];
}

namespace {

/// Power series coefficients of n(w)/d(w), d(0) != 0, for w^0..w^count-1.
Vector series_quotient(const Poly& n, const Poly& d, std::size_t count)
{
  Vector q(count);
  const Scalar d0inv = 1 / d.coeff(0);
  for (std::size_t i = 0; i < count; ++i) {
    Scalar acc = n.coeff(i);
    const std::size_t lim = std::min<std::size_t>(i, static_cast<std::size_t>(std::max<long>(d.degree(), 0)));
    for (std::size_t j = 1; j <= lim; ++j)
      acc -= d.coeff(j) * q[i - j];
    q[i] = acc * d0inv;
  }
  return q;
}

LaurentSeries expand_shifted(const Poly& num, const Poly& den, const Scalar& base, long lo, long hi)
{
  LaurentSeries s;
  s.base = base;
  s.lowest = lo;
  s.truncation = hi;
  s.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
  if (num.is_zero())
    return s;
  // num(w)/den(w) with den = w^e * d1(w), d1(0) != 0
  std::size_t e = 0;
  while (den.coeff(e) == 0)
    ++e;
  Poly d1(Vector(den.coeffs().begin() + static_cast<long>(e), den.coeffs().end()));
  const long top = hi + static_cast<long>(e);
  if (top < 0)
    return s;
  Vector q = series_quotient(num, d1, static_cast<std::size_t>(top) + 1);
  for (long p = std::max(lo, -static_cast<long>(e)); p <= hi; ++p)
    s.coeffs[static_cast<std::size_t>(p - lo)] = q[static_cast<std::size_t>(p + static_cast<long>(e))];
  return s;
}

}  // namespace

LaurentSeries laurent_expand(const RatFun& f, const Scalar& z0, long lo, long hi)
{
  if (hi < lo)
    throw std::invalid_argument("laurent_expand: hi < lo");
  return expand_shifted(f.num().shifted(z0), f.den().shifted(z0), z0, lo, hi);
}

LaurentSeries laurent_expand_at_infinity(const RatFun& f, long lo, long hi)
{
  if (hi < lo)
    throw std::invalid_argument("laurent_expand_at_infinity: hi < lo");
  // f(1/t) = t^(dd - dn) * rev(num)(t) / rev(den)(t)
  const auto reversed = [](const Poly& p) {
    Vector v = p.coeffs();
    std::reverse(v.begin(), v.end());
    return Poly(std::move(v));
  };
  if (f.is_zero())
    return expand_shifted(Poly(), Poly(Scalar(1)), 0, lo, hi);
  const long shift = f.den().degree() - f.num().degree();
  Poly rn = reversed(f.num()), rd = reversed(f.den());
  LaurentSeries s;
  s.base = 0;
  s.lowest = lo;
  s.truncation = hi;
  s.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
  if (hi - shift < 0)
    return s;
  auto inner = expand_shifted(rn, rd, 0, 0, hi - shift);
  for (long p = std::max(lo, shift); p <= hi; ++p)
    s.coeffs[static_cast<std::size_t>(p - lo)] = inner.coeff(p - shift);
  return s;
}

Scalar residue(const RatFun& f, const Scalar& z0)
{
  return laurent_expand(f, z0, -1, -1).coeff(-1);
}

Scalar residue_at_infinity(const RatFun& f)
{
  // z^{-1} = t, dz = -dt/t^2: res_inf f dz = -[t^1] f(1/t)
  return -laurent_expand_at_infinity(f, 1, 1).coeff(1);
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n)
{
  if (n < 0)
    n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n)
        large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& p)
{
  if (p.is_zero())
    throw std::domain_error("rational_roots of zero polynomial");
  std::vector<Scalar> roots;
  Poly rest = p;
  if (rest.coeff(0) == 0) {
    roots.push_back(0);
    rest = rest.divide_root(0, rest.root_multiplicity(0));
  }
  if (rest.degree() > 0) {
    // clear denominators to integer coefficients
    mpz_class l = 1;
    for (const auto& c : rest.coeffs())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_class a0 = Scalar(rest.coeff(0) * l).get_num();
    mpz_class an = Scalar(rest.leading() * l).get_num();
    for (const auto& num : positive_divisors(a0))
      for (const auto& den : positive_divisors(an))
        for (int sign : {1, -1}) {
          Scalar cand(sign * num, den);
          cand.canonicalize();
          if (rest.degree() <= 0)
            break;
          if (rest.eval(cand) == 0) {
            roots.push_back(cand);
            rest = rest.divide_root(cand, rest.root_multiplicity(cand));
          }
        }
  }
  if (rest.degree() > 0)
    throw std::domain_error("polynomial has non-rational roots: " + p.to_string());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace laxalg
