#include "kdeg/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace kdeg {

namespace {

std::string now_utc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

DegreeCache::DegreeCache(std::filesystem::path file) : path_(std::move(file)) { load(); }

void DegreeCache::load() {
  entries_.clear();
  index_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    CacheEntry e;
    e.q = j.value("q", 0);
    e.n = j.value("n", 0);
    e.degree = Int(j.value("degree", std::string("0")));
    e.method = j.value("method", std::string());
    e.seed = j.value("seed", std::uint64_t(0));
    e.prime = j.value("prime", std::uint64_t(0));
    e.timestamp = j.value("timestamp", std::string());
    index_[Key{e.q, e.n, e.method, e.seed, e.prime}] = e.degree;
    entries_.push_back(std::move(e));
  }
}

std::optional<Int> DegreeCache::lookup(int q, int n, const std::string& method, std::uint64_t seed,
                                       std::uint64_t prime) const {
  auto it = index_.find(Key{q, n, method, seed, prime});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void DegreeCache::append(int q, int n, const std::string& method, std::uint64_t seed,
                         std::uint64_t prime, const Int& degree) {
  Key k{q, n, method, seed, prime};
  if (index_.count(k)) return;
  CacheEntry e{q, n, degree, method, seed, prime, now_utc()};
  if (!path_.parent_path().empty()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  // single formatted write per record, stable field order
  out << "{\"q\":" << q << ",\"n\":" << n << ",\"degree\":\"" << degree.str()
      << "\",\"method\":\"" << method << "\",\"seed\":" << seed << ",\"prime\":" << prime
      << ",\"timestamp\":\"" << e.timestamp << "\"}\n";
  out.flush();
  index_[k] = degree;
  entries_.push_back(std::move(e));
}

std::vector<CacheEntry> DegreeCache::entries() const { return entries_; }

void DegreeCache::clear() {
  entries_.clear();
  index_.clear();
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

std::filesystem::path default_cache_file(const std::string& override_dir) {
  std::filesystem::path dir;
  if (!override_dir.empty()) {
    dir = override_dir;
  } else if (const char* env = std::getenv("KDEG_CACHE_DIR"); env && *env) {
    dir = env;
  } else {
    dir = ".kdeg-cache";
  }
  return dir / "records.jsonl";
}

}  // namespace kdeg
