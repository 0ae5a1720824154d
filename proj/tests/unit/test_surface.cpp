#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "laxalg/surface.hpp"

#include <random>

using namespace laxalg;

namespace {

Scalar q(long n, long d = 1)
{
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

MarkedCurve line_with(std::size_t N, std::size_t M)
{
  MarkedCurve c;
  for (std::size_t i = 0; i < N; ++i)
    c.P.push_back(q(static_cast<long>(i) + 1));
  for (std::size_t j = 0; j < M; ++j)
    c.Q.push_back(q(-static_cast<long>(j) - 1, 2));
  return c;
}

RatFun poly(std::vector<long> c)
{
  Vector v;
  for (long x : c)
    v.push_back(x);
  return RatFun(Poly(v));
}

}  // namespace

TEST_CASE("default schedule examples")
{
  auto s11 = default_schedule(line_with(1, 1));
  CHECK(s11.slopes == Vector{1});
  for (long m = -5; m <= 5; ++m)
    CHECK(s11.n(m, 0) == m);
  CHECK(s11.bound() == 0);

  auto s21 = default_schedule(line_with(2, 1));
  CHECK(s21.slopes == Vector{2});
  for (long m = -5; m <= 5; ++m)
    CHECK(s21.n(m, 0) == 2 * m + 1);

  auto s12 = default_schedule(line_with(1, 2));
  CHECK(s12.slopes == Vector{q(1, 2), q(1, 2)});
  // hand table for m = -3..3
  std::vector<std::vector<long>> want{{-2, -1}, {-1, -1}, {-1, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 2}};
  for (long m = -3; m <= 3; ++m)
    CHECK(s12.row(m) == want[m + 3]);
  CHECK(s12.bound() <= 1);
}

TEST_CASE("default schedule invariants")
{
  for (std::size_t N = 1; N <= 7; ++N)
    for (std::size_t M = 1; M <= 7; ++M) {
      auto c = line_with(N, M);
      auto s = default_schedule(c);
      CHECK_NOTHROW(s.validate(N));
      const Scalar B = s.bound();
      for (long m = -20; m <= 20; ++m) {
        long sum = 0, inc = 0;
        for (std::size_t j = 0; j < M; ++j) {
          sum += s.n(m, j);
          inc += s.n(m + 1, j) - s.n(m, j);
          CHECK(s.n(m + 1, j) >= s.n(m, j));
          Scalar b = s.n(m, j) - s.slopes[j] * m;
          CHECK(abs(b) <= B);
        }
        CHECK(sum == static_cast<long>(N) * m + static_cast<long>(N) - 1);
        CHECK(inc == static_cast<long>(N));
      }
    }
}

TEST_CASE("schedule validation rejects bad input")
{
  auto s = default_schedule(line_with(1, 2));
  s.offsets[0][0] += 1;
  CHECK_THROWS_AS(s.validate(1), std::invalid_argument);
  auto t = default_schedule(line_with(2, 1));
  CHECK_THROWS_AS(t.validate(3), std::invalid_argument);
  // row sums fine, not ascending: n(0) = (1, -1), n(1) = (0, 1)
  DegreeSchedule u;
  u.slopes = {q(1, 2), q(1, 2)};
  u.period = 2;
  u.offsets = {{1, -1}, {q(-1, 2), q(1, 2)}};
  CHECK_THROWS_AS(u.validate(1), std::invalid_argument);
}

TEST_CASE("curve validation")
{
  auto c = line_with(1, 1);
  CHECK_NOTHROW(c.validate());
  c.gamma.push_back({c.P[0], {1}});
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  MarkedCurve empty;
  empty.Q.push_back(0);
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("divisor D_m")
{
  auto c = line_with(1, 1);
  auto s = default_schedule(c);
  auto d0 = divisor_Dm(c, s, {}, 0);
  CHECK(d0.degree() == 0);
  CHECK(d0.coeff(c.P[0]) == 0);
  CHECK(d0.coeff(c.Q[0]) == 0);

  c.gamma.push_back({q(5), {1}});
  c.gamma.push_back({q(7), {1}});
  auto d3 = divisor_Dm(c, s, {1, 1}, 3);
  std::vector<long> coeffs;
  for (const auto& t : d3.terms)
    coeffs.push_back(t.second);
  CHECK(coeffs == std::vector<long>{-3, 3, 1, 1});
  CHECK(d3.degree() == 2);

  for (std::size_t N = 1; N <= 4; ++N)
    for (std::size_t M = 1; M <= 3; ++M) {
      auto cc = line_with(N, M);
      cc.gamma.push_back({q(11), {1}});
      cc.gamma.push_back({q(13), {1}});
      auto ss = default_schedule(cc);
      for (long k = 0; k <= 3; ++k)
        for (long m = -6; m <= 6; ++m) {
          auto d = divisor_Dm(cc, ss, {k, k}, m);
          CHECK(d.degree() == static_cast<long>(N) - 1 + 2 * k);
          auto next = divisor_Dm(cc, ss, {k, k}, m + 1);
          for (const auto& p : cc.P)
            CHECK(next.coeff(p) - d.coeff(p) == -1);
        }
    }
}

TEST_CASE("Riemann-Roch bases")
{
  CHECK(rr_basis(Divisor{}) == std::vector<RatFun>{RatFun(Scalar(1))});
  auto two = rr_basis(Divisor{{{q(0), 2}}});
  CHECK(two.size() == 3);
  for (const auto& f : two)
    CHECK(f.order_at(0) >= -2);

  auto mixed = rr_basis(Divisor{{{q(0), -1}, {q(1), 2}}});
  CHECK(mixed.size() == 2);
  for (const auto& f : mixed) {
    CHECK(f.order_at(0) >= 1);
    CHECK(f.order_at(1) >= -2);
    CHECK(f.holomorphic_at_infinity());
  }
  CHECK(rr_basis(Divisor{{{q(0), -2}, {q(1), 1}}}).empty());
}

TEST_CASE("Riemann-Roch dimension property")
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 4);
  const std::vector<Scalar> pts{q(0), q(1), q(-2), q(1, 3), q(5, 2)};
  const std::vector<Scalar> probes{q(7), q(-5), q(3, 7), q(9, 4), q(-11, 3), q(13), q(17, 5), q(-19, 2),
                                   q(23), q(29, 3), q(-31), q(37, 2), q(41), q(-43, 5), q(47)};
  for (int trial = 0; trial < 60; ++trial) {
    Divisor d;
    for (const auto& p : pts)
      d.terms.emplace_back(p, coef(rng));
    auto basis = rr_basis(d);
    const long deg = d.degree();
    CHECK(basis.size() == static_cast<std::size_t>(std::max(0L, deg + 1)));
    for (const auto& f : basis) {
      CHECK(f.holomorphic_at_infinity());
      for (const auto& [p, c] : d.terms)
        CHECK(f.order_at(p) >= -c);
      // no poles off the support
      Poly den = f.den();
      for (const auto& [p, c] : d.terms)
        den = den.divide_root(p, den.root_multiplicity(p));
      CHECK(den.degree() == 0);
    }
    // independence by evaluation at points off the support
    if (!basis.empty() && basis.size() <= probes.size()) {
      Matrix ev(probes.size(), basis.size());
      for (std::size_t r = 0; r < probes.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
          ev(r, c) = basis[c].eval(probes[r]);
      CHECK(rank(ev) == basis.size());
    }
  }
}

TEST_CASE("form residues")
{
  auto f = RatFun::inverse_power(0, 1) - RatFun::inverse_power(1, 1);
  auto r = form_residues(f);
  CHECK(r.size() == 2);
  CHECK(r[q(0)] == 1);
  CHECK(r[q(1)] == -1);
  CHECK(form_residues(RatFun()).empty());
  CHECK_THROWS_AS(form_residues(RatFun(Scalar(1))), std::domain_error);
  CHECK_THROWS_AS(form_residues(RatFun::inverse_power(0, 1)), std::domain_error);

  // (z+1)/(z(z-1)(z-2)); cover-up oracle: 1/2, -2, 3/2
  RatFun g(Poly(Vector{1, 1}), poly({0, 1}).num() * poly({-1, 1}).num() * poly({-2, 1}).num());
  auto rg = form_residues(g);
  CHECK(rg[q(0)] == q(1, 2));
  CHECK(rg[q(1)] == -2);
  CHECK(rg[q(2)] == q(3, 2));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 40; ++t) {
    RatFun h;
    for (long p = -2; p <= 2; ++p)
      for (std::size_t e = 1; e <= 3; ++e)
        h += Scalar(c(rng)) * RatFun::inverse_power(q(p, 3), e);
    // force O(z^-2): subtract the total 1/z mass by a simple pole elsewhere
    Scalar total = 0;
    for (long p = -2; p <= 2; ++p)
      total += residue(h, q(p, 3));
    h -= total * RatFun::inverse_power(q(10), 1);
    Scalar sum = 0;
    for (const auto& [z, v] : form_residues(h))
      sum += v;
    CHECK(sum == 0);
  }
}
