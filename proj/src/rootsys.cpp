#include "laxalg/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace laxalg {

RootType parse_root_type(const std::string& name)
{
  if (name == "A")
    return RootType::A;
  if (name == "B")
    return RootType::B;
  if (name == "C")
    return RootType::C;
  if (name == "D")
    return RootType::D;
  if (name == "G2" || name == "G")
    return RootType::G2;
  throw std::invalid_argument("unknown root system type '" + name + "'");
}

std::string to_string(RootType t)
{
  switch (t) {
  case RootType::A: return "A";
  case RootType::B: return "B";
  case RootType::C: return "C";
  case RootType::D: return "D";
  case RootType::G2: return "G2";
  }
  return "?";
}

std::string RootSystem::name() const
{
  switch (type) {
  case RootType::A: return "sl(" + std::to_string(param) + ")";
  case RootType::B: return "B" + std::to_string(param);
  case RootType::C: return "C" + std::to_string(param);
  case RootType::D: return "D" + std::to_string(param);
  case RootType::G2: return "G2";
  }
  return "?";
}

namespace {

Vector unit(std::size_t dim, std::size_t i, long c = 1)
{
  Vector v(dim);
  v[i] = c;
  return v;
}

Vector add(Vector a, const Vector& b, long sign = 1)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += sign * b[i];
  return a;
}

long height(const Expansion& e)
{
  return std::accumulate(e.begin(), e.end(), 0L);
}

std::vector<Vector> classical_positive(RootType type, std::size_t n)
{
  std::vector<Vector> roots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back(add(unit(n, i), unit(n, j), -1));
      if (type != RootType::A)
        roots.push_back(add(unit(n, i), unit(n, j)));
    }
  if (type == RootType::B)
    for (std::size_t i = 0; i < n; ++i)
      roots.push_back(unit(n, i));
  if (type == RootType::C)
    for (std::size_t i = 0; i < n; ++i)
      roots.push_back(unit(n, i, 2));
  return roots;
}

std::vector<Vector> classical_simple(RootType type, std::size_t n)
{
  std::vector<Vector> simple;
  for (std::size_t i = 0; i + 1 < n; ++i)
    simple.push_back(add(unit(n, i), unit(n, i + 1), -1));
  switch (type) {
  case RootType::B: simple.push_back(unit(n, n - 1)); break;
  case RootType::C: simple.push_back(unit(n, n - 1, 2)); break;
  case RootType::D: simple.push_back(add(unit(n, n - 2), unit(n, n - 1))); break;
  default: break;
  }
  return simple;
}

std::optional<Expansion> try_expand(const RootSystem& rs, const Vector& root)
{
  if (root.size() != rs.ambient_dim)
    return std::nullopt;
  auto x = solve(Matrix::from_columns(rs.simple_roots, rs.ambient_dim), root);
  if (!x)
    return std::nullopt;
  Expansion e;
  for (const auto& c : *x) {
    if (c.get_den() != 1)
      return std::nullopt;
    e.push_back(c.get_num().get_si());
  }
  return e;
}

}  // namespace

RootSystem build_root_system(RootType type, int param)
{
  RootSystem rs;
  rs.type = type;
  rs.param = param;
  if (type == RootType::G2) {
    rs.param = 2;
    rs.rank = 2;
    rs.ambient_dim = 2;
    rs.simple_roots = {unit(2, 0), unit(2, 1)};
    rs.positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    for (const auto& e : rs.positive)
      rs.positive_ambient.push_back(Vector{Scalar(e[0]), Scalar(e[1])});
    // alpha_1 short, alpha_2 long, |alpha_2|^2 = 3 |alpha_1|^2
    rs.gram = Matrix::from_rows({{Scalar(2), Scalar(-3)}, {Scalar(-3), Scalar(6)}}, 2);
  } else {
    const bool ok = (type == RootType::A && param >= 2) || (type == RootType::B && param >= 1) ||
                    (type == RootType::C && param >= 1) || (type == RootType::D && param >= 3);
    if (!ok)
      throw std::invalid_argument("unsupported root system " + to_string(type) + std::to_string(param));
    const auto n = static_cast<std::size_t>(param);
    rs.ambient_dim = n;
    rs.simple_roots = classical_simple(type, n);
    rs.rank = static_cast<int>(rs.simple_roots.size());
    rs.positive_ambient = classical_positive(type, n);
    rs.gram = Matrix(static_cast<std::size_t>(rs.rank), static_cast<std::size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        Scalar s = 0;
        for (std::size_t c = 0; c < n; ++c)
          s += rs.simple_roots[i][c] * rs.simple_roots[j][c];
        rs.gram(i, j) = s;
      }
    for (const auto& r : rs.positive_ambient) {
      auto e = try_expand(rs, r);
      if (!e)
        throw std::logic_error("root table inconsistency");
      rs.positive.push_back(*e);
    }
  }
  // sort by height, ties by expansion descending
  std::vector<std::size_t> order(rs.positive.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    long ha = height(rs.positive[a]), hb = height(rs.positive[b]);
    if (ha != hb)
      return ha < hb;
    return rs.positive[a] > rs.positive[b];
  });
  std::vector<Expansion> pos;
  std::vector<Vector> amb;
  for (auto i : order) {
    pos.push_back(rs.positive[i]);
    amb.push_back(rs.positive_ambient[i]);
  }
  rs.positive = std::move(pos);
  rs.positive_ambient = std::move(amb);

  const auto r = static_cast<std::size_t>(rs.rank);
  rs.cartan.assign(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Scalar a = 2 * rs.gram(i, j) / rs.gram(j, j);
      rs.cartan[i][j] = a.get_num().get_si();
    }
  return rs;
}

Expansion expand_in_simple(const RootSystem& rs, const Vector& root)
{
  auto e = try_expand(rs, root);
  if (e) {
    Expansion neg = *e;
    for (auto& x : neg)
      x = -x;
    if (std::find(rs.positive.begin(), rs.positive.end(), *e) != rs.positive.end() ||
        std::find(rs.positive.begin(), rs.positive.end(), neg) != rs.positive.end())
      return *e;
  }
  throw std::invalid_argument("vector is not a root of " + rs.name());
}

Vector to_ambient(const RootSystem& rs, const Expansion& e)
{
  Vector v(rs.ambient_dim);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t c = 0; c < rs.ambient_dim; ++c)
      v[c] += e[i] * rs.simple_roots[i][c];
  return v;
}

HighestRoot highest_root(const RootSystem& rs)
{
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    const auto& cand = rs.positive[i];
    bool dominates = std::all_of(rs.positive.begin(), rs.positive.end(), [&](const Expansion& e) {
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] > cand[j])
          return false;
      return true;
    });
    if (dominates)
      return {rs.positive_ambient[i], cand};
  }
  throw std::logic_error("no dominant root in " + rs.name());
}

long level(const GradingSpec& spec, const Expansion& root)
{
  if (spec.size() != root.size())
    throw std::invalid_argument("grading spec length does not match rank");
  long s = 0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    s += spec[i] * root[i];
  return s;
}

long level(const RootSystem& rs, const GradingSpec& spec, const Expansion& root)
{
  validate_spec(rs, spec);
  return level(spec, root);
}

long depth(const RootSystem& rs, const GradingSpec& spec)
{
  return level(rs, spec, highest_root(rs).expansion);
}

void validate_spec(const RootSystem& rs, const GradingSpec& spec)
{
  if (spec.size() != static_cast<std::size_t>(rs.rank))
    throw std::invalid_argument("grading spec for " + rs.name() + " needs " + std::to_string(rs.rank) +
                                " entries, got " + std::to_string(spec.size()));
  for (auto p : spec)
    if (p < 0)
      throw std::invalid_argument("grading spec entries must be nonnegative");
}

Scalar root_inner(const RootSystem& rs, const Expansion& a, const Expansion& b)
{
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] && b[j])
        s += a[i] * b[j] * rs.gram(i, j);
  return s;
}

}  // namespace laxalg
