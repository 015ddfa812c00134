#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdeg/upoly.hpp"

namespace kdeg {

// Incremental Chinese-remainder reconstruction of a vector of integers
// from images modulo distinct word-size primes.
class CrtVec {
 public:
  explicit CrtVec(std::size_t n) : residues_(n, Int(0)), modulus_(1) {}

  // xs[i] in [0, p); p coprime to the accumulated modulus.
  void absorb(const std::vector<std::uint64_t>& xs, std::uint64_t p);

  const Int& modulus() const { return modulus_; }

  // Residue lifted into (-M/2, M/2].
  Int symmetric(std::size_t i) const;
  std::vector<Int> symmetric_all() const;

 private:
  std::vector<Int> residues_;  // in [0, modulus_)
  Int modulus_;
};

// Non-throwing exact division over Int coefficients.
std::optional<UPoly<Int>> try_exact_div(const UPoly<Int>& a, const UPoly<Int>& d);

// Greatest common divisor in Z[x] via Brown's modular algorithm.
// Result is primitive with positive leading coefficient times the gcd of
// the input contents; gcd(f, 0) = |content|-normalized f.
UPoly<Int> zpoly_gcd(const UPoly<Int>& a, const UPoly<Int>& b);

// p / gcd(p, p'), primitive, positive leading coefficient: the product of
// the distinct irreducible factors of p.
UPoly<Int> squarefree_part(const UPoly<Int>& p);

// Monic gcd over Q[x], computed through the integer modular gcd.
UPoly<Rat> upoly_gcd(const UPoly<Rat>& a, const UPoly<Rat>& b);

// Monic gcd over F_p[x] (plain Euclid; same contract as the Q overload).
inline UPoly<Fp> upoly_gcd(const UPoly<Fp>& a, const UPoly<Fp>& b) { return gcd(a, b); }

}  // namespace kdeg
