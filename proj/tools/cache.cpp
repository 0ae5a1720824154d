#include "cache.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace laxalg::cli {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& data)
{
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {

ordered_json poly_json(const Poly& p)
{
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs())
    a.push_back(to_string(c));
  return a;
}

Poly poly_from(const ordered_json& a)
{
  Vector c;
  for (const auto& x : a)
    c.push_back(parse_scalar(x.get<std::string>()));
  return Poly(c);
}

std::string describe(const LaxOperatorAlgebra& lax, long m)
{
  const auto& alg = *lax.algebra();
  std::ostringstream s;
  s << "laxalg-basis v" << BasisCache::kVersion << "\nalgebra " << alg.name() << " dim " << alg.dim();
  s << "\nP";
  for (const auto& p : lax.curve().P)
    s << ' ' << to_string(p);
  s << "\nQ";
  for (const auto& q : lax.curve().Q)
    s << ' ' << to_string(q);
  for (const auto& g : lax.curve().gamma) {
    s << "\ngamma " << to_string(g.coord) << " pvec";
    for (long v : g.spec)
      s << ' ' << v;
  }
  const auto& sc = lax.schedule();
  s << "\nslopes";
  for (const auto& a : sc.slopes)
    s << ' ' << to_string(a);
  s << "\nperiod " << sc.period << "\noffsets";
  for (const auto& row : sc.offsets) {
    s << " |";
    for (const auto& b : row)
      s << ' ' << to_string(b);
  }
  s << "\nm " << m << '\n';
  return s.str();
}

}  // namespace

std::optional<BasisCache> BasisCache::from(const std::string& flag)
{
  if (!flag.empty())
    return BasisCache(flag);
  if (const char* env = std::getenv("LAXALG_CACHE_DIR"); env && *env)
    return BasisCache(env);
  return std::nullopt;
}

std::string BasisCache::key(const LaxOperatorAlgebra& lax, long m) const
{
  return sha256_hex(describe(lax, m));
}

std::filesystem::path BasisCache::file(const LaxOperatorAlgebra& lax, long m) const
{
  return dir_ / ("basis-" + key(lax, m) + ".json");
}

std::shared_ptr<const DegreeBasis> BasisCache::load(const LaxOperatorAlgebra& lax, long m) const
{
  std::ifstream in(file(lax, m));
  if (!in)
    return nullptr;
  try {
    const auto j = ordered_json::parse(in);
    if (j.at("version").get<int>() != kVersion || j.at("key").get<std::string>() != key(lax, m))
      return nullptr;
    const auto& payload = j.at("payload");
    if (sha256_hex(payload.dump()) != j.at("payload_sha256").get<std::string>())
      return nullptr;
    auto b = std::make_shared<DegreeBasis>();
    b->m = payload.at("m").get<long>();
    if (b->m != m)
      return nullptr;
    b->ambient_dim = payload.at("ambient_dim").get<std::size_t>();
    b->constraint_rank = payload.at("constraint_rank").get<std::size_t>();
    b->expected_dim = payload.at("expected_dim").get<std::size_t>();
    for (const auto& t : payload.at("divisor"))
      b->divisor.terms.emplace_back(parse_scalar(t.at(0).get<std::string>()), t.at(1).get<long>());
    const std::size_t dim = lax.algebra()->dim();
    for (const auto& e : payload.at("elements")) {
      const std::size_t a = e.at("coordinate").get<std::size_t>();
      if (a >= dim)
        return nullptr;
      CurrentElement x = lax.zero();
      x.coords[a] = RatFun(poly_from(e.at("num")), poly_from(e.at("den")));
      b->coordinate.push_back(a);
      b->elements.push_back(std::move(x));
    }
    // a recomputed basis must agree; cheap sanity check on membership
    for (const auto& x : b->elements)
      if (!lax.in_degree(x, m).ok)
        return nullptr;
    return b;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void BasisCache::store(const LaxOperatorAlgebra& lax, const DegreeBasis& b) const
{
  ordered_json payload;
  payload["m"] = b.m;
  payload["ambient_dim"] = b.ambient_dim;
  payload["constraint_rank"] = b.constraint_rank;
  payload["expected_dim"] = b.expected_dim;
  payload["divisor"] = ordered_json::array();
  for (const auto& [p, c] : b.divisor.terms)
    payload["divisor"].push_back(ordered_json::array({to_string(p), c}));
  payload["elements"] = ordered_json::array();
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    const RatFun& f = b.elements[i].coords[b.coordinate[i]];
    payload["elements"].push_back(
        ordered_json{{"coordinate", b.coordinate[i]}, {"num", poly_json(f.num())}, {"den", poly_json(f.den())}});
  }
  ordered_json j;
  j["version"] = kVersion;
  j["key"] = key(lax, b.m);
  j["description"] = describe(lax, b.m);
  j["payload_sha256"] = sha256_hex(payload.dump());
  j["payload"] = payload;
  std::filesystem::create_directories(dir_);
  const auto target = file(lax, b.m);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump(1) << '\n';
    if (!out)
      throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::shared_ptr<const DegreeBasis> BasisCache::fetch(const LaxOperatorAlgebra& lax, long m, bool* hit) const
{
  if (auto b = load(lax, m)) {
    lax.adopt(b);
    if (hit)
      *hit = true;
    return lax.degree_subspace(m);
  }
  if (hit)
    *hit = false;
  auto b = lax.degree_subspace(m);
  store(lax, *b);
  return b;
}

}  // namespace laxalg::cli
