#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdeg/ktuple.hpp"

namespace kdeg {

class DegreeCache;

// One measured or predicted value of deg(K^n).
struct DegreeRecord {
  int q = 0;
  int n = 0;
  Int degree;
  std::string method;                 // "probe" | "picard" | "symbolic"
  std::vector<std::uint64_t> seeds;   // per contributing run
  std::vector<std::uint64_t> primes;  // 0 = rational run
  int agreement = 0;                  // number of agreeing independent runs
};

struct FieldConfig {
  bool modular = true;      // false = exact rational probe (slow path)
  unsigned prime_bits = 61; // p in [2^(bits-1), 2^bits), 61..63
};

struct ProbeOptions {
  FieldConfig field;
  int max_resamples = 5;
  DegreeCache* cache = nullptr;
  // optional explicit base points for the first run's line
  std::optional<std::pair<ProjPoint<Rat>, ProjPoint<Rat>>> line;
};

// Measure deg(K^n) for n = 0..n_max by iterating K on a generic line and
// removing the tuple content after every step.  Two independent
// (line, prime) runs must agree; a third run breaks ties, and full
// disagreement raises probe_failure.
std::vector<DegreeRecord> probe_degrees(int q, int n_max, std::uint64_t seed,
                                        const ProbeOptions& opt = {});

struct DeltaEstimate {
  Rat last_ratio;  // d_n / d_(n-1)
  Rat diff_ratio;  // (d_n - d_(n-1)) / (d_(n-1) - d_(n-2)); 1 for flat tails
};

// Crude growth diagnostics from at least 3 consecutive records.  The
// certified delta comes from the Picard action, not from this.
DeltaEstimate estimate_delta(const std::vector<DegreeRecord>& records);

struct SymbolicOracleResult {
  DegreeRecord record;
  Int common_factor_degree;  // degree removed when reducing the composition
  bool identity_ok = false;  // I o J == Pi^(q-2) K, both construction routes
};

// n = 1: full symbolic verification of the composition identity; n = 2:
// K o K restricted to a random plane, degree read off independent lines
// inside that plane.  Scope: q <= 3, n <= 2.
SymbolicOracleResult symbolic_degree_oracle(int q, int n, std::uint64_t seed);

}  // namespace kdeg
