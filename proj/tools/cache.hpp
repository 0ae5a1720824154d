#ifndef LAXALG_TOOLS_CACHE_HPP
#define LAXALG_TOOLS_CACHE_HPP

#include "laxalg/current.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace laxalg::cli {

/// One JSON file per degree subspace, named by the SHA-256 of a canonical
/// description of (format version, algebra, curve, schedule, m). The file also
/// stores a hash of its payload; entries with a wrong version, key or payload
/// hash are ignored and recomputed.
class BasisCache {
public:
  static constexpr int kVersion = 1;

  explicit BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// --cache-dir wins over the LAXALG_CACHE_DIR environment variable; nullopt
  /// when neither is set.
  static std::optional<BasisCache> from(const std::string& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::string key(const LaxOperatorAlgebra& lax, long m) const;
  std::filesystem::path file(const LaxOperatorAlgebra& lax, long m) const;

  std::shared_ptr<const DegreeBasis> load(const LaxOperatorAlgebra& lax, long m) const;
  void store(const LaxOperatorAlgebra& lax, const DegreeBasis& b) const;

  /// Cached basis if valid, else computed and written. Seeds lax either way.
  /// hit reports whether the file was used.
  std::shared_ptr<const DegreeBasis> fetch(const LaxOperatorAlgebra& lax, long m, bool* hit = nullptr) const;

private:
  std::filesystem::path dir_;
};

std::string sha256_hex(const std::string& data);

}  // namespace laxalg::cli

#endif
