#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kdeg/int.hpp"

namespace kdeg {

struct CacheEntry {
  int q = 0;
  int n = 0;
  Int degree;
  std::string method;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::string timestamp;
};

// Append-only JSON-lines store of degree records, keyed by
// (q, n, method, seed, prime).  One record per line, fixed field order:
// {"q":..,"n":..,"degree":"..","method":"..","seed":..,"prime":..,"timestamp":".."}
class DegreeCache {
 public:
  explicit DegreeCache(std::filesystem::path file);

  std::optional<Int> lookup(int q, int n, const std::string& method, std::uint64_t seed,
                            std::uint64_t prime) const;
  void append(int q, int n, const std::string& method, std::uint64_t seed, std::uint64_t prime,
              const Int& degree);

  std::vector<CacheEntry> entries() const;
  std::size_t size() const { return entries_.size(); }
  void clear();
  const std::filesystem::path& path() const { return path_; }

 private:
  using Key = std::tuple<int, int, std::string, std::uint64_t, std::uint64_t>;
  void load();

  std::filesystem::path path_;
  std::vector<CacheEntry> entries_;
  std::map<Key, Int> index_;
};

// Resolution order: explicit path, KDEG_CACHE_DIR environment variable,
// then ./.kdeg-cache.
std::filesystem::path default_cache_file(const std::string& override_dir = "");

}  // namespace kdeg
