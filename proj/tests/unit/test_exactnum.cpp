#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "laxalg/exactnum.hpp"

#include <random>

using namespace laxalg;

namespace {

Scalar q(long n, long d = 1)
{
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

// Residue at a simple pole from the cover-up rule: num(z0) / den'(z0).
Scalar simple_pole_residue(const Poly& num, const Poly& den, const Scalar& z0)
{
  return num.eval(z0) / den.derivative().eval(z0);
}

RatFun random_ratfun(std::mt19937& rng, int max_deg, const std::vector<Scalar>& poles)
{
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> mult(0, 2);
  Poly den(Scalar(1));
  for (const auto& p : poles)
    den = den * pow(Poly::linear(p), static_cast<std::size_t>(mult(rng)));
  Vector nc(static_cast<std::size_t>(std::max<long>(0, std::min<long>(max_deg, den.degree())) + 1));
  for (auto& c : nc)
    c = coef(rng);
  return RatFun(Poly(nc), den);
}

}  // namespace

TEST_CASE("scalar parsing")
{
  CHECK(parse_scalar("3/6") == q(1, 2));
  CHECK(parse_scalar("-4") == q(-4));
  CHECK(parse_scalar(" 7 / 14 ") == q(1, 2));
  CHECK_THROWS_AS(parse_scalar("7/-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK(to_string(q(-6, 4)) == "-3/2");
}

TEST_CASE("rref basic cases")
{
  auto id = rref(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(null_space(Matrix::identity(3)).empty());

  Matrix zero(2, 5);
  CHECK(rref(zero).rank == 0);
  CHECK(null_space(zero).size() == 5);

  auto m = Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2);
  CHECK(rank(m) == 1);
  // hand elimination: row2 - 2 row1 = 0, so reduced form is [[1,2],[0,0]]
  auto r = rref(m);
  CHECK(r.reduced(0, 0) == 1);
  CHECK(r.reduced(0, 1) == 2);
  CHECK(r.reduced(1, 1) == 0);

  CHECK(rank(Matrix()) == 0);
}

TEST_CASE("null space")
{
  CHECK(null_space(Matrix(1, 3)).size() == 3);
  auto m = Matrix::from_rows({{q(1), q(1), q(0)}}, 3);
  auto ns = null_space(m);
  CHECK(ns.size() == 3 - rank(m));
  for (const auto& v : ns) {
    auto mv = m * v;
    CHECK(mv[0] == 0);
  }
  CHECK(rank(Matrix::from_columns(ns, 3)) == ns.size());
}

TEST_CASE("random matrices: rank + nullity and kernel annihilation")
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3), sz(1, 6);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(sz(rng)), c = static_cast<std::size_t>(sz(rng));
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = d(rng) % 2 == 0 ? 0 : d(rng);
    auto ns = null_space(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& v : ns)
      for (const auto& x : m * v)
        CHECK(x == 0);
    if (!ns.empty())
      CHECK(rank(Matrix::from_columns(ns, c)) == ns.size());
  }
}

TEST_CASE("determinant, inverse and solve")
{
  auto m = Matrix::from_rows({{q(2), q(1)}, {q(1), q(3)}}, 2);
  CHECK(determinant(m) == 5);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2)));
  Vector b{q(3), q(4)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m * *x == b);
  Vector bad{q(1), q(3)};
  CHECK_FALSE(solve(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2), bad));
}

TEST_CASE("column solver agrees with dense solve")
{
  auto a = Matrix::from_rows({{q(1), q(0)}, {q(0), q(0)}, {q(1), q(1)}, {q(2), q(1)}}, 2);
  ColumnSolver cs(a);
  REQUIRE(cs.full_column_rank());
  Vector b = a * Vector{q(3, 2), q(-7)};
  auto x = cs.solve(b);
  REQUIRE(x);
  CHECK((*x)[0] == q(3, 2));
  CHECK((*x)[1] == -7);
  b[1] = 1;
  CHECK_FALSE(cs.solve(b));
}

TEST_CASE("sparse eliminator matches dense null space")
{
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 20; ++t) {
    Matrix m(7, 6);
    SparseEliminator se(6);
    for (std::size_t i = 0; i < 7; ++i) {
      std::vector<std::pair<std::size_t, Scalar>> row;
      for (std::size_t j = 0; j < 6; ++j) {
        int v = d(rng) * (d(rng) == 0);
        m(i, j) = v;
        if (v)
          row.emplace_back(j, Scalar(v));
      }
      se.add_row(row);
    }
    CHECK(se.rank() == rank(m));
    auto ns = se.null_space();
    CHECK(ns.size() == 6 - rank(m));
    for (const auto& v : ns)
      for (const auto& x : m * v)
        CHECK(x == 0);
  }
}

TEST_CASE("polynomial arithmetic")
{
  Poly p(Vector{q(-1), q(0), q(1)});  // z^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(q(1)) == 0);
  auto dm = divmod(p, Poly::linear(q(1)));
  CHECK(dm.remainder.is_zero());
  CHECK(dm.quotient == Poly::linear(q(-1)));
  CHECK(gcd(p, Poly::linear(q(1)) * Poly::linear(q(5))) == Poly::linear(q(1)));
  CHECK(p.root_multiplicity(q(-1)) == 1);
  CHECK(pow(Poly::linear(q(2)), 3).root_multiplicity(q(2)) == 3);
  CHECK(p.shifted(q(1)).eval(q(0)) == 0);
  CHECK(Poly().degree() == -1);
  CHECK(p.to_string() == "z^2 - 1");
}

TEST_CASE("rational function canonical form")
{
  RatFun f(Poly(Vector{q(-2), q(2)}), Poly(Vector{q(-3), q(0), q(3)}));  // (2z-2)/(3z^2-3)
  CHECK(f.den() == Poly::linear(q(-1)));
  CHECK(f.num() == Poly(q(2, 3)));
  CHECK(f - f == RatFun());
  CHECK((f * RatFun(Poly::linear(q(-1)))) == RatFun(q(2, 3)));
  CHECK(RatFun::inverse_power(q(0), 2).order_at(q(0)) == -2);
  CHECK(RatFun().order_at(q(0)) == RatFun::kInfiniteOrder);
  CHECK(f.order_at_infinity() == 1);
  CHECK(RatFun(q(3)).value_at_infinity() == 3);
}

TEST_CASE("laurent expansion examples")
{
  auto a = laurent_expand(RatFun::inverse_power(q(0), 1), q(0), -2, 0);
  CHECK(a.coeff(-2) == 0);
  CHECK(a.coeff(-1) == 1);
  CHECK(a.coeff(0) == 0);

  // geometric series: 1/(z-1) = -(1 + z + z^2 + ...)
  auto b = laurent_expand(RatFun::inverse_power(q(1), 1), q(0), 0, 2);
  for (long p = 0; p <= 2; ++p)
    CHECK(b.coeff(p) == -1);

  auto c = laurent_expand(RatFun(Poly::monomial(q(1), 2)), q(0), 0, 2);
  CHECK(c.coeff(0) == 0);
  CHECK(c.coeff(1) == 0);
  CHECK(c.coeff(2) == 1);
  CHECK_THROWS_AS(c.coeff(3), std::out_of_range);

  auto z = laurent_expand(RatFun(), q(5), -3, 3);
  for (long p = -3; p <= 3; ++p)
    CHECK(z.coeff(p) == 0);
}

TEST_CASE("residue examples")
{
  CHECK(residue(RatFun::inverse_power(q(0), 1), q(0)) == 1);
  CHECK(residue(RatFun::inverse_power(q(0), 2), q(0)) == 0);
  Poly num(Vector{q(3), q(2)});
  Poly den = Poly::linear(q(0)) * Poly::linear(q(1));
  CHECK(residue(RatFun(num, den), q(1)) == simple_pole_residue(num, den, q(1)));
  CHECK(residue(RatFun(num, den), q(1)) == 5);
  CHECK(residue(RatFun(num, den), q(7)) == 0);
}

TEST_CASE("residue theorem and principal part subtraction on random functions")
{
  std::mt19937 rng(3);
  std::vector<Scalar> poles{q(0), q(1), q(-2), q(1, 3)};
  for (int t = 0; t < 50; ++t) {
    RatFun f = random_ratfun(rng, 6, poles);
    Scalar total = residue_at_infinity(f);
    for (const auto& p : poles)
      total += residue(f, p);
    CHECK(total == 0);

    for (const auto& p : poles) {
      long e = f.order_at(p);
      if (e >= 0 || e == RatFun::kInfiniteOrder)
        continue;
      auto s = laurent_expand(f, p, e, -1);
      RatFun principal;
      for (long k = e; k <= -1; ++k)
        principal += s.coeff(k) * RatFun::inverse_power(p, static_cast<std::size_t>(-k));
      CHECK((f - principal).order_at(p) >= 0);
    }
  }
}

TEST_CASE("expansion at infinity")
{
  // z/(z-1) = 1 + 1/z + 1/z^2 + ... in t = 1/z
  RatFun f(Poly::monomial(q(1), 1), Poly::linear(q(1)));
  auto s = laurent_expand_at_infinity(f, 0, 3);
  for (long p = 0; p <= 3; ++p)
    CHECK(s.coeff(p) == 1);
  CHECK(residue_at_infinity(f) == -1);
}

TEST_CASE("rational roots")
{
  Poly p = Poly::linear(q(1, 2)) * Poly::linear(q(-3)) * Poly::linear(q(-3)) * Poly::monomial(q(1), 1);
  auto r = rational_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == -3);
  CHECK(r[1] == 0);
  CHECK(r[2] == q(1, 2));
  CHECK_THROWS(rational_roots(Poly(Vector{q(-2), q(0), q(1)})));
}
