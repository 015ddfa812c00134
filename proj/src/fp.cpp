#include "kdeg/fp.hpp"

#include <gmpxx.h>

#include <mutex>

#include "kdeg/rng.hpp"

namespace kdeg {

void batch_inverse(std::vector<Fp>& xs) {
  if (xs.empty()) return;
  std::vector<Fp> prefix(xs.size());
  Fp acc = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw degenerate_input("batch_inverse: zero element");
    prefix[i] = acc;
    acc = acc * xs[i];
  }
  Fp inv_all = acc.inv();
  for (std::size_t i = xs.size(); i-- > 0;) {
    Fp inv_i = inv_all * prefix[i];
    inv_all = inv_all * xs[i];
    xs[i] = inv_i;
  }
}

namespace {

std::uint64_t next_prime_at_least(std::uint64_t start) {
  mpz_class s;
  mpz_import(s.get_mpz_t(), 1, 1, sizeof(start), 0, 0, &start);
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), s.get_mpz_t());
  return mpz_get_ui(p.get_mpz_t());
}

}  // namespace

std::uint64_t random_prime(unsigned bits, std::uint64_t seed) {
  if (bits < 61 || bits > 63)
    throw degenerate_input("prime bits must be in [61, 63] so that 2^60 <= p < 2^63");
  SplitMix64 g(seed);
  const std::uint64_t lo = 1ULL << (bits - 1);
  // keep clear of the top so nextprime cannot leave the bit range
  const std::uint64_t hi = (bits == 63 ? UINT64_MAX / 2 : (1ULL << bits) - 1) - (1ULL << 32);
  std::uint64_t p = next_prime_at_least(g.uniform(lo, hi));
  return p;
}

std::uint64_t crt_prime(std::size_t index) {
  static std::vector<std::uint64_t> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= index) {
    std::uint64_t start = primes.empty() ? (1ULL << 61) : primes.back() + 1;
    primes.push_back(next_prime_at_least(start));
  }
  return primes[index];
}

}  // namespace kdeg
