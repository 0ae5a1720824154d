#include "laxalg/liealg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace laxalg {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

Vector flatten(const Matrix& m)
{
  Vector v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      v[r * m.cols() + c] = m(r, c);
  return v;
}

Matrix unflatten(const Vector& v, std::size_t d)
{
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m(r, c) = v[r * d + c];
  return m;
}

Matrix diag(const Vector& entries)
{
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

///////////////////////////////////
// Split octonions               //
///////////////////////////////////

// Zorn vector-matrix coordinates (a, u1, u2, u3, v1, v2, v3, b).
using Oct = std::array<Scalar, 8>;

Oct zorn_product(const Oct& x, const Oct& y)
{
  const Scalar &a = x[0], &b = x[7], &a2 = y[0], &b2 = y[7];
  auto u = [&](const Oct& o, int i) -> const Scalar& { return o[1 + i]; };
  auto v = [&](const Oct& o, int i) -> const Scalar& { return o[4 + i]; };
  auto cross = [](const Oct& p, int po, const Oct& q, int qo, int k) -> Scalar {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    return p[po + i] * q[qo + j] - p[po + j] * q[qo + i];
  };
  Oct r;
  r[0] = a * a2;
  r[7] = b * b2;
  for (int i = 0; i < 3; ++i) {
    r[0] += u(x, i) * v(y, i);
    r[7] += v(x, i) * u(y, i);
  }
  for (int k = 0; k < 3; ++k) {
    r[1 + k] = a * u(y, k) + b2 * u(x, k) - cross(x, 4, y, 4, k);
    r[4 + k] = a2 * v(x, k) + b * v(y, k) + cross(x, 1, y, 1, k);
  }
  return r;
}

Oct oct_unit(std::size_t i)
{
  Oct o;
  o[i] = 1;
  return o;
}

/// Derivations of the split octonions as 8x8 matrices in Zorn coordinates.
std::vector<Matrix> octonion_derivations()
{
  // m[i][j] = e_i e_j
  std::array<std::array<Oct, 8>, 8> m;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      m[i][j] = zorn_product(oct_unit(i), oct_unit(j));
  // alternativity on basis pairs: (xx)y = x(xy) for x = e_i + e_j is implied by
  // checking the linearized identity on all basis triples
  auto mul = [&](const Oct& x, const Oct& y) { return zorn_product(x, y); };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        Oct lhs1 = mul(mul(oct_unit(i), oct_unit(j)), oct_unit(k));
        Oct lhs2 = mul(mul(oct_unit(j), oct_unit(i)), oct_unit(k));
        Oct rhs1 = mul(oct_unit(i), mul(oct_unit(j), oct_unit(k)));
        Oct rhs2 = mul(oct_unit(j), mul(oct_unit(i), oct_unit(k)));
        for (std::size_t c = 0; c < 8; ++c)
          if (lhs1[c] + lhs2[c] != rhs1[c] + rhs2[c])
            throw std::logic_error("split octonion product is not alternative");
      }
  // D(e_i e_j) = D(e_i) e_j + e_i D(e_j); unknown D_{rs} at index r*8+s
  SparseEliminator se(64);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t r = 0; r < 8; ++r) {
        Vector row(64);
        for (std::size_t s = 0; s < 8; ++s) {
          row[r * 8 + s] += m[i][j][s];
          row[s * 8 + i] -= m[s][j][r];
          row[s * 8 + j] -= m[i][s][r];
        }
        Sparse sp;
        for (std::size_t c = 0; c < 64; ++c)
          if (row[c] != 0)
            sp.emplace_back(c, row[c]);
        se.add_row(sp);
      }
  std::vector<Matrix> out;
  for (const auto& v : se.null_space())
    out.push_back(unflatten(v, 8));
  return out;
}

/// G2 as 7x7 matrices over (e0, u1, u2, u3, v1, v2, v3), e0 = (1,0,0,-1).
std::vector<Matrix> g2_matrices()
{
  auto ders = octonion_derivations();
  if (ders.size() != 14)
    throw std::logic_error("split octonion derivation algebra has dimension " + std::to_string(ders.size()));
  Matrix p(8, 8);
  p(0, 0) = 1;
  p(7, 0) = 1;
  p(0, 1) = 1;
  p(7, 1) = -1;
  for (std::size_t i = 0; i < 6; ++i)
    p(1 + i, 2 + i) = 1;
  Matrix pinv = *inverse(p);
  std::vector<Matrix> out;
  for (const auto& d : ders) {
    Matrix dp = pinv * d * p;
    for (std::size_t i = 0; i < 8; ++i)
      if (dp(i, 0) != 0 || dp(0, i) != 0)
        throw std::logic_error("derivation does not preserve the trace-zero octonions");
    Matrix block(7, 7);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        block(r, c) = dp(r + 1, c + 1);
    out.push_back(std::move(block));
  }
  return out;
}

Matrix g2_torus(long t1, long t2, long t3)
{
  return diag(Vector{Scalar(0), Scalar(t1), Scalar(t2), Scalar(t3), Scalar(-t1), Scalar(-t2), Scalar(-t3)});
}

///////////////////////////////////
// Classical models              //
///////////////////////////////////

struct ModelData {
  std::size_t d = 0;
  std::optional<Matrix> sigma;
  // equations on the flattened d x d matrix
  std::vector<Sparse> equations;
  std::vector<Matrix> cartan_flag;
  // classical only: e-coordinate vector attached to each diagonal position
  std::vector<Vector> ambient;
};

std::vector<Sparse> sigma_equations(const Matrix& sigma)
{
  // (X^T sigma + sigma X)_{ab} = sum_r X_{ra} sigma_{rb} + sum_r sigma_{ar} X_{rb}
  const std::size_t d = sigma.rows();
  std::vector<Sparse> eqs;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::map<std::size_t, Scalar> row;
      for (std::size_t r = 0; r < d; ++r) {
        if (sigma(r, b) != 0)
          row[r * d + a] += sigma(r, b);
        if (sigma(a, r) != 0)
          row[r * d + b] += sigma(a, r);
      }
      Sparse sp;
      for (auto& [c, v] : row)
        if (v != 0)
          sp.emplace_back(c, v);
      if (!sp.empty())
        eqs.push_back(std::move(sp));
    }
  return eqs;
}

ModelData classical_model(RootType type, std::size_t n)
{
  ModelData md;
  auto e = [](std::size_t dim, std::size_t i, long s) {
    Vector v(dim);
    v[i] = s;
    return v;
  };
  if (type == RootType::A) {
    md.d = n;
    Sparse tr;
    for (std::size_t i = 0; i < n; ++i)
      tr.emplace_back(i * n + i, Scalar(1));
    md.equations.push_back(tr);
    for (std::size_t l = 1; l < n; ++l) {
      Scalar shift(static_cast<long>(l), static_cast<long>(n));
      shift.canonicalize();
      Vector dg(n, -shift);
      for (std::size_t i = 0; i < l; ++i)
        dg[i] += 1;
      md.cartan_flag.push_back(diag(dg));
    }
    for (std::size_t i = 0; i < n; ++i)
      md.ambient.push_back(e(n, i, -1));
    return md;
  }
  const bool odd = type == RootType::B;
  md.d = 2 * n + (odd ? 1 : 0);
  const std::size_t off = n + (odd ? 1 : 0);  // start of the second n-block
  Matrix sigma(md.d, md.d);
  for (std::size_t i = 0; i < n; ++i) {
    sigma(i, off + i) = 1;
    sigma(off + i, i) = type == RootType::C ? -1 : 1;
  }
  if (odd)
    sigma(n, n) = 1;
  md.sigma = sigma;
  md.equations = sigma_equations(sigma);
  for (std::size_t l = 1; l <= n; ++l) {
    Vector dg(md.d);
    for (std::size_t i = 0; i < l; ++i) {
      dg[i] = 1;
      dg[off + i] = -1;
    }
    md.cartan_flag.push_back(diag(dg));
  }
  md.ambient.assign(md.d, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    md.ambient[i] = e(n, i, -1);
    md.ambient[off + i] = e(n, i, 1);
  }
  return md;
}

/// Null space of equations restricted to a set of flattened positions.
std::vector<Vector> solve_on_positions(const std::vector<Sparse>& eqs, const std::vector<std::size_t>& positions,
                                       std::size_t total)
{
  std::vector<long> local(total, -1);
  for (std::size_t i = 0; i < positions.size(); ++i)
    local[positions[i]] = static_cast<long>(i);
  SparseEliminator se(positions.size());
  for (const auto& eq : eqs) {
    Sparse row;
    for (const auto& [c, v] : eq)
      if (local[c] >= 0)
        row.emplace_back(static_cast<std::size_t>(local[c]), v);
    if (!row.empty())
      se.add_row(row);
  }
  std::vector<Vector> out;
  for (const auto& v : se.null_space()) {
    Vector full(total);
    for (std::size_t i = 0; i < positions.size(); ++i)
      full[positions[i]] = v[i];
    out.push_back(std::move(full));
  }
  return out;
}

/// Lexicographic positivity: first nonzero weight coordinate negative.
bool lex_positive(const Vector& w)
{
  for (const auto& x : w)
    if (x != 0)
      return x < 0;
  return false;
}

Expansion negate(Expansion e)
{
  for (auto& x : e)
    x = -x;
  return e;
}

}  // namespace

///////////////////////////////////
// LieAlgebra                    //
///////////////////////////////////

const RootSystem& LieAlgebra::roots() const
{
  if (!roots_)
    throw std::logic_error(name_ + " carries no root data");
  return *roots_;
}

std::size_t LieAlgebra::root_index(const Expansion& e) const
{
  auto it = root_index_.find(e);
  if (it == root_index_.end())
    throw std::invalid_argument("not a root of " + name_);
  return it->second;
}

Vector LieAlgebra::unit(std::size_t i) const
{
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

std::optional<Vector> LieAlgebra::try_coords(const Matrix& x) const
{
  if (x.rows() != d_ || x.cols() != d_)
    throw std::invalid_argument("matrix size does not match " + name_);
  Vector sub(pivot_positions_.size());
  for (std::size_t i = 0; i < sub.size(); ++i)
    sub[i] = x(pivot_positions_[i] / d_, pivot_positions_[i] % d_);
  Vector c = pivot_inverse_ * sub;
  if (to_matrix(c) != x)
    return std::nullopt;
  return c;
}

Vector LieAlgebra::coords(const Matrix& x) const
{
  auto c = try_coords(x);
  if (!c)
    throw std::invalid_argument("matrix does not lie in " + name_);
  return *c;
}

Matrix LieAlgebra::to_matrix(std::span<const Scalar> coords) const
{
  if (coords.size() != dim())
    throw std::invalid_argument("coordinate vector length does not match " + name_);
  Matrix m(d_, d_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0)
      m = m + coords[i] * basis_[i];
  return m;
}

Vector LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const
{
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0)
        continue;
      Scalar f = x[i] * y[j];
      for (const auto& [k, c] : structure(i, j))
        out[k] += f * c;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::span<const Scalar> x) const
{
  Matrix a(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : structure(i, j))
        a(k, j) += x[i] * c;
  }
  return a;
}

namespace {

Scalar gram_pair(const Matrix& g, std::span<const Scalar> x, std::span<const Scalar> y)
{
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0 && g(i, j) != 0)
        s += x[i] * g(i, j) * y[j];
  }
  return s;
}

}  // namespace

Scalar LieAlgebra::trace_form(std::span<const Scalar> x, std::span<const Scalar> y) const
{
  return gram_pair(trace_gram_, x, y);
}

Scalar LieAlgebra::killing_form(std::span<const Scalar> x, std::span<const Scalar> y) const
{
  return gram_pair(killing_gram_, x, y);
}

void LieAlgebra::finish()
{
  const std::size_t n = dim();
  d_ = basis_.front().rows();
  std::vector<Vector> cols;
  for (const auto& b : basis_)
    cols.push_back(flatten(b));
  auto red = rref(Matrix::from_rows(cols, d_ * d_));
  if (red.rank != n)
    throw std::invalid_argument("basis matrices of " + name_ + " are linearly dependent");
  pivot_positions_ = red.pivots;
  Matrix sub(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sub(i, j) = cols[j][pivot_positions_[i]];
  pivot_inverse_ = *inverse(sub);

  sc_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) {
        for (const auto& [k, c] : sc_[j * n + i])
          sc_[i * n + j].emplace_back(k, -c);
        continue;
      }
      auto c = try_coords(commutator(basis_[i], basis_[j]));
      if (!c)
        throw std::invalid_argument(name_ + " is not closed under the commutator");
      for (std::size_t k = 0; k < n; ++k)
        if ((*c)[k] != 0)
          sc_[i * n + j].emplace_back(k, (*c)[k]);
    }

  trace_gram_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = (basis_[i] * basis_[j]).trace();
      trace_gram_(i, j) = t;
      trace_gram_(j, i) = t;
    }
  // K_ij = sum_{l,k} c_il^k c_jk^l
  killing_gram_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar s = 0;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& [k, c] : structure(i, l))
          for (const auto& [l2, c2] : structure(j, k))
            if (l2 == l)
              s += c * c2;
      killing_gram_(i, j) = s;
      killing_gram_(j, i) = s;
    }
  ratio_.reset();
  for (std::size_t i = 0; i < n && !ratio_; ++i)
    for (std::size_t j = 0; j < n && !ratio_; ++j)
      if (trace_gram_(i, j) != 0)
        ratio_ = killing_gram_(i, j) / trace_gram_(i, j);
  if (ratio_ && killing_gram_ != *ratio_ * trace_gram_)
    ratio_.reset();
}

std::shared_ptr<const LieAlgebra> LieAlgebra::from_basis(std::string name, std::vector<Matrix> basis)
{
  if (basis.empty())
    throw std::invalid_argument("empty basis");
  std::shared_ptr<LieAlgebra> alg(new LieAlgebra());
  alg->name_ = std::move(name);
  alg->basis_ = std::move(basis);
  alg->weights_.assign(alg->basis_.size(), Expansion{});
  alg->finish();
  return alg;
}

AlgebraPtr build_algebra(RootType type, int param)
{
  RootSystem rs = build_root_system(type, param);
  const std::size_t r = static_cast<std::size_t>(rs.rank);

  ModelData md;
  if (type == RootType::G2) {
    auto g2 = g2_matrices();
    md.d = 7;
    // annihilator of the span gives the defining equations
    std::vector<Vector> rows;
    for (const auto& m : g2)
      rows.push_back(flatten(m));
    for (const auto& v : null_space(Matrix::from_rows(rows, 49))) {
      Sparse sp;
      for (std::size_t c = 0; c < 49; ++c)
        if (v[c] != 0)
          sp.emplace_back(c, v[c]);
      md.equations.push_back(std::move(sp));
    }
    md.cartan_flag = {g2_torus(1, -1, 0), g2_torus(0, 1, -1)};
  } else {
    md = classical_model(type, static_cast<std::size_t>(param));
  }
  const std::size_t d = md.d;

  // weight of matrix position (row, col) over the flag basis
  auto position_weight = [&](std::size_t row, std::size_t col) {
    Vector w(r);
    for (std::size_t l = 0; l < r; ++l)
      w[l] = md.cartan_flag[l](row, row) - md.cartan_flag[l](col, col);
    return w;
  };
  std::map<Vector, std::vector<std::size_t>> groups;
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t col = 0; col < d; ++col)
      groups[position_weight(row, col)].push_back(row * d + col);

  // Cartan: the zero-weight part must be exactly the flag span
  const Vector zero(r);
  auto cartan = solve_on_positions(md.equations, groups[zero], d * d);
  if (cartan.size() != r)
    throw std::logic_error("zero weight space of " + rs.name() + " has dimension " + std::to_string(cartan.size()));
  for (const auto& h : md.cartan_flag) {
    std::vector<Vector> span = cartan;
    span.push_back(flatten(h));
    if (rank(Matrix::from_rows(span, d * d)) != r)
      throw std::logic_error("flag basis does not lie in the Cartan subalgebra");
  }
  Matrix cartan_trace(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      cartan_trace(a, b) = (md.cartan_flag[a] * md.cartan_flag[b]).trace();
  Matrix cartan_trace_inv = *inverse(cartan_trace);
  auto pairing = [&](const Vector& u, const Vector& v) {
    Vector t = cartan_trace_inv * v;
    Scalar s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s += u[i] * t[i];
    return s;
  };

  struct RootSpace {
    Vector weight;
    Matrix vec;
    Expansion expansion;
  };
  std::vector<RootSpace> spaces;
  for (const auto& [w, pos] : groups) {
    if (w == zero)
      continue;
    auto ns = solve_on_positions(md.equations, pos, d * d);
    if (ns.empty())
      continue;
    if (ns.size() != 1)
      throw std::logic_error("root space of " + rs.name() + " is not one-dimensional");
    Vector v = ns.front();
    auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return s != 0; });
    Scalar inv = 1 / *first;
    for (auto& x : v)
      x *= inv;
    spaces.push_back({w, unflatten(v, d), {}});
  }
  if (spaces.size() != 2 * rs.positive.size())
    throw std::logic_error("root count mismatch for " + rs.name());

  if (type == RootType::G2) {
    std::vector<Vector> positive;
    for (const auto& s : spaces)
      if (lex_positive(s.weight))
        positive.push_back(s.weight);
    std::vector<Vector> simple;
    for (const auto& p : positive) {
      bool decomposable = false;
      for (const auto& a : positive)
        for (const auto& b : positive) {
          Vector sum(r);
          for (std::size_t i = 0; i < r; ++i)
            sum[i] = a[i] + b[i];
          decomposable = decomposable || sum == p;
        }
      if (!decomposable)
        simple.push_back(p);
    }
    if (simple.size() != r)
      throw std::logic_error("G2 positivity order does not yield two simple roots");
    auto cartan_of = [&](const std::vector<Vector>& s) {
      std::vector<std::vector<long>> c(r, std::vector<long>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          c[i][j] = Scalar(2 * pairing(s[i], s[j]) / pairing(s[j], s[j])).get_num().get_si();
      return c;
    };
    if (cartan_of(simple) != rs.cartan)
      std::swap(simple[0], simple[1]);
    if (cartan_of(simple) != rs.cartan)
      throw std::logic_error("G2 Cartan matrix mismatch");
    Matrix sm = Matrix::from_columns(simple, r);
    for (auto& s : spaces) {
      auto x = solve(sm, s.weight);
      for (const auto& c : *x) {
        if (c.get_den() != 1)
          throw std::logic_error("non-integral G2 root expansion");
        s.expansion.push_back(c.get_num().get_si());
      }
    }
  } else {
    for (auto& s : spaces) {
      std::size_t row = 0, col = 0;
      for (std::size_t i = 0; i < d * d; ++i)
        if (s.vec(i / d, i % d) != 0) {
          row = i / d;
          col = i % d;
          break;
        }
      Vector amb = md.ambient[row];
      for (std::size_t i = 0; i < amb.size(); ++i)
        amb[i] -= md.ambient[col][i];
      s.expansion = expand_in_simple(rs, amb);
    }
  }
  // positivity of the expansion must agree with the lexicographic order
  for (const auto& s : spaces) {
    bool pos = std::all_of(s.expansion.begin(), s.expansion.end(), [](long x) { return x >= 0; });
    if (pos != lex_positive(s.weight))
      throw std::logic_error("positivity convention mismatch in " + rs.name());
  }

  std::shared_ptr<LieAlgebra> alg(new LieAlgebra());
  alg->name_ = type == RootType::A   ? "sl(" + std::to_string(param) + ")"
               : type == RootType::B ? "so(" + std::to_string(2 * param + 1) + ")"
               : type == RootType::C ? "sp(" + std::to_string(2 * param) + ")"
               : type == RootType::D ? "so(" + std::to_string(2 * param) + ")"
                                     : "G2";
  alg->sigma_ = md.sigma;
  alg->cartan_dim_ = r;
  for (const auto& h : md.cartan_flag) {
    alg->basis_.push_back(h);
    alg->weights_.push_back(Expansion(r, 0));
  }
  auto find_space = [&](const Expansion& e) -> const RootSpace& {
    for (const auto& s : spaces)
      if (s.expansion == e)
        return s;
    throw std::logic_error("missing root space");
  };
  for (int sign : {1, -1})
    for (const auto& e : rs.positive) {
      Expansion ex = sign > 0 ? e : negate(e);
      alg->root_index_[ex] = alg->basis_.size();
      alg->basis_.push_back(find_space(ex).vec);
      alg->weights_.push_back(ex);
    }
  alg->roots_ = std::move(rs);
  alg->finish();

  // the Cartan is self-centralizing: the centralizer of a regular element is
  // abelian of dimension rank
  {
    Matrix regular(d, d);
    if (type == RootType::G2) {
      regular = g2_torus(1, 2, -3);
    } else {
      for (std::size_t l = 0; l < r; ++l)
        regular = regular + Scalar(static_cast<long>(l + 1) * 7 + 3) * md.cartan_flag[l];
    }
    auto ad_reg = alg->ad(alg->coords(regular));
    auto centralizer = null_space(ad_reg);
    if (centralizer.size() != r)
      throw std::logic_error("centralizer of the regular element has wrong dimension");
    for (const auto& a : centralizer)
      for (const auto& b : centralizer) {
        auto c = alg->bracket(a, b);
        if (std::any_of(c.begin(), c.end(), [](const Scalar& s) { return s != 0; }))
          throw std::logic_error("Cartan subalgebra is not abelian");
      }
  }
  return alg;
}

LieElement bracket(const LieElement& x, const LieElement& y)
{
  if (x.algebra != y.algebra)
    throw std::invalid_argument("bracket of elements of different algebras");
  return {x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

Scalar trace_form(const LieElement& x, const LieElement& y)
{
  if (x.algebra != y.algebra)
    throw std::invalid_argument("trace form of elements of different algebras");
  return x.algebra->trace_form(x.coords, y.coords);
}

Scalar killing_form(const LieElement& x, const LieElement& y)
{
  if (x.algebra != y.algebra)
    throw std::invalid_argument("Killing form of elements of different algebras");
  return x.algebra->killing_form(x.coords, y.coords);
}

std::vector<Matrix> invariant_form_space(const LieAlgebra& alg)
{
  const std::size_t n = alg.dim();
  auto var = [n](std::size_t a, std::size_t b) {
    if (a > b)
      std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
  };
  const std::size_t unknowns = n * (n + 1) / 2;
  SparseEliminator se(unknowns);
  // B([x_i,x_j],x_k) + B(x_j,[x_i,x_k]) = 0; symmetric in (j,k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        std::map<std::size_t, Scalar> row;
        for (const auto& [m, c] : alg.structure(i, j))
          row[var(m, k)] += c;
        for (const auto& [m, c] : alg.structure(i, k))
          row[var(j, m)] += c;
        std::vector<std::pair<std::size_t, Scalar>> sp;
        for (auto& [col, v] : row)
          if (v != 0)
            sp.emplace_back(col, v);
        if (!sp.empty())
          se.add_row(std::move(sp));
      }
  std::vector<Matrix> forms;
  for (const auto& v : se.null_space()) {
    Matrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g(a, b) = v[var(a, b)];
    forms.push_back(std::move(g));
  }
  return forms;
}

bool is_invariant(const LieAlgebra& alg, const Matrix& gram)
{
  const std::size_t n = alg.dim();
  if (gram.rows() != n || gram.cols() != n)
    return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s = 0;
        for (const auto& [m, c] : alg.structure(i, j))
          s += c * gram(m, k);
        for (const auto& [m, c] : alg.structure(i, k))
          s += c * gram(j, m);
        if (s != 0)
          return false;
      }
  return true;
}

AlgebraPtr direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
  const std::size_t da = a.matrix_size(), db = b.matrix_size();
  std::vector<Matrix> basis;
  for (const auto& x : a.basis()) {
    Matrix m(da + db, da + db);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c)
        m(r, c) = x(r, c);
    basis.push_back(std::move(m));
  }
  for (const auto& x : b.basis()) {
    Matrix m(da + db, da + db);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < db; ++c)
        m(da + r, da + c) = x(r, c);
    basis.push_back(std::move(m));
  }
  return LieAlgebra::from_basis(a.name() + "+" + b.name(), std::move(basis));
}

}  // namespace laxalg
