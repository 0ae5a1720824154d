#include "laxalg/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace laxalg {

namespace {

long floor_div(long a, long b)
{
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

long to_integer(const Scalar& s, const char* what)
{
  if (s.get_den() != 1 || !s.get_num().fits_slong_p())
    throw std::invalid_argument(std::string(what) + " is not a machine integer: " + to_string(s));
  return s.get_num().get_si();
}

}  // namespace

void MarkedCurve::validate() const
{
  if (P.empty())
    throw std::invalid_argument("curve needs at least one P point");
  if (Q.empty())
    throw std::invalid_argument("curve needs at least one Q point");
  auto pts = all_points();
  std::set<Scalar> seen;
  for (const auto& p : pts)
    if (!seen.insert(p).second)
      throw std::invalid_argument("marked point " + to_string(p) + " appears twice");
}

std::vector<Scalar> MarkedCurve::all_points() const
{
  std::vector<Scalar> out(P);
  out.insert(out.end(), Q.begin(), Q.end());
  for (const auto& g : gamma)
    out.push_back(g.coord);
  return out;
}

long DegreeSchedule::n(long m, std::size_t j) const
{
  long r = m % period;
  if (r < 0)
    r += period;
  return to_integer(slopes.at(j) * m + offsets.at(r).at(j), "schedule entry");
}

std::vector<long> DegreeSchedule::row(long m) const
{
  std::vector<long> out(slopes.size());
  for (std::size_t j = 0; j < slopes.size(); ++j)
    out[j] = n(m, j);
  return out;
}

Scalar DegreeSchedule::bound() const
{
  Scalar b = 0;
  for (const auto& r : offsets)
    for (const auto& x : r)
      b = std::max(b, Scalar(abs(x)));
  return b;
}

void DegreeSchedule::validate(std::size_t N) const
{
  if (slopes.empty())
    throw std::invalid_argument("schedule has no slopes");
  if (period < 1 || offsets.size() != static_cast<std::size_t>(period))
    throw std::invalid_argument("schedule offsets must have one row per residue class");
  Scalar sum = 0;
  for (const auto& a : slopes) {
    if (a <= 0)
      throw std::invalid_argument("schedule slopes must be positive");
    sum += a;
  }
  if (sum != static_cast<long>(N))
    throw std::invalid_argument("schedule slopes must sum to N");
  for (const auto& r : offsets) {
    if (r.size() != slopes.size())
      throw std::invalid_argument("schedule offset row has the wrong length");
    Scalar s = 0;
    for (const auto& x : r)
      s += x;
    // genus 0: the offsets sum to N - 1
    if (s != static_cast<long>(N) - 1)
      throw std::invalid_argument("schedule offsets must sum to N - 1 in every row");
  }
  // n(m + period) - n(m) = a_j * period is checked through integrality of
  // both ends, so one period of increments covers every m
  for (long m = 0; m <= period; ++m)
    for (std::size_t j = 0; j < slopes.size(); ++j)
      if (n(m + 1, j) < n(m, j))
        throw std::invalid_argument("schedule is not ascending in m");
  for (std::size_t j = 0; j < slopes.size(); ++j)
    to_integer(slopes[j] * period, "slope times period");
}

DegreeSchedule default_schedule(const MarkedCurve& curve)
{
  const long N = static_cast<long>(curve.N());
  const long M = static_cast<long>(curve.M());
  if (N < 1 || M < 1)
    throw std::invalid_argument("default schedule needs N, M >= 1");
  DegreeSchedule s;
  Scalar a(N, M);
  a.canonicalize();
  s.slopes.assign(M, a);
  s.period = M;
  // by Hermite's identity the row sums are N m + N - 1; each entry is a
  // floor of an increasing affine function, hence ascending in m
  for (long r = 0; r < M; ++r) {
    Vector row(M);
    for (long j = 0; j < M; ++j)
      row[j] = Scalar(floor_div(N * r + N - 1 + j, M)) - a * r;
    s.offsets.push_back(std::move(row));
  }
  return s;
}

long Divisor::degree() const
{
  long d = 0;
  for (const auto& [p, c] : terms)
    d += c;
  return d;
}

long Divisor::coeff(const Scalar& point) const
{
  for (const auto& [p, c] : terms)
    if (p == point)
      return c;
  return 0;
}

std::vector<long> gamma_depths(const MarkedCurve& curve, const RootSystem& rs)
{
  std::vector<long> out;
  for (const auto& g : curve.gamma)
    out.push_back(depth(rs, g.spec));
  return out;
}

Divisor divisor_Dm(const MarkedCurve& curve, const DegreeSchedule& schedule,
                   const std::vector<long>& depths, long m)
{
  if (depths.size() != curve.gamma.size())
    throw std::invalid_argument("one depth per gamma point expected");
  if (schedule.slopes.size() != curve.M())
    throw std::invalid_argument("schedule width differs from the number of Q points");
  Divisor d;
  for (const auto& p : curve.P)
    d.terms.emplace_back(p, -m);
  for (std::size_t j = 0; j < curve.M(); ++j)
    d.terms.emplace_back(curve.Q[j], schedule.n(m, j));
  for (std::size_t g = 0; g < curve.gamma.size(); ++g)
    d.terms.emplace_back(curve.gamma[g].coord, depths[g]);
  return d;
}

std::vector<RatFun> rr_basis(const Divisor& d)
{
  if (d.degree() < 0)
    return {};
  std::vector<RatFun> ambient{RatFun(Scalar(1))};
  for (const auto& [p, c] : d.terms)
    for (long j = 1; j <= c; ++j)
      ambient.push_back(RatFun::inverse_power(p, static_cast<std::size_t>(j)));
  std::vector<Vector> rows;
  for (const auto& [p, c] : d.terms) {
    if (c >= 0)
      continue;
    std::vector<LaurentSeries> ex;
    for (const auto& f : ambient)
      ex.push_back(laurent_expand(f, p, 0, -c - 1));
    for (long e = 0; e < -c; ++e) {
      Vector row(ambient.size());
      for (std::size_t i = 0; i < ambient.size(); ++i)
        row[i] = ex[i].coeff(e);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty())
    return ambient;
  std::vector<RatFun> out;
  for (const auto& v : null_space(Matrix::from_rows(rows, ambient.size()))) {
    RatFun f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0)
        f += v[i] * ambient[i];
    out.push_back(std::move(f));
  }
  return out;
}

std::map<Scalar, Scalar> form_residues(const RatFun& f)
{
  if (!f.is_zero() && f.order_at_infinity() < 2)
    throw std::domain_error("f dz has a pole at infinity");
  std::map<Scalar, Scalar> out;
  if (f.is_zero())
    return out;
  for (const auto& z : rational_roots(f.den()))
    out[z] = residue(f, z);
  return out;
}

}  // namespace laxalg
