#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kdeg/errors.hpp"
#include "kdeg/int.hpp"

namespace kdeg {

// Element of a prime field F_p with 2^60 <= p < 2^63.
//
// An Fp either carries its modulus, or is an "integer literal" (modulus 0)
// holding a small signed value.  Literals exist so that generic code can
// write Scalar(0) / Scalar(1) without knowing p; they promote to the other
// operand's field on first contact.  Two elements with different nonzero
// moduli never combine silently: that throws domain_mismatch.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long v) : v_(static_cast<std::uint64_t>(v)), p_(0) {}  // NOLINT: literal
  Fp(int v) : Fp(static_cast<long>(v)) {}                   // NOLINT: literal

  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

  static Fp from_int(const Int& z, std::uint64_t p) {
    return Fp(mpz_fdiv_ui(z.raw().get_mpz_t(), p), p);
  }
  static Fp from_signed(long v, std::uint64_t p) {
    if (v >= 0) return Fp(static_cast<std::uint64_t>(v), p);
    std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v|, no UB at LONG_MIN
    r %= p;
    return Fp(r == 0 ? 0 : p - r, p);
  }

  std::uint64_t value() const {
    if (is_literal()) throw domain_mismatch("value() on Fp literal without modulus");
    return v_;
  }
  std::uint64_t modulus() const { return p_; }
  bool is_literal() const { return p_ == 0; }
  long literal_value() const { return static_cast<long>(v_); }

  bool is_zero() const { return is_literal() ? v_ == 0 : v_ == 0; }
  bool is_one() const { return is_literal() ? literal_value() == 1 : v_ == 1; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return lit_add(x, y);
    std::uint64_t s = x + y;  // p < 2^63, no overflow
    if (s >= p) s -= p;
    return Fp(raw_tag{}, s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return lit_sub(x, y);
    return Fp(raw_tag{}, x >= y ? x - y : x + p - y, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return lit_mul(x, y);
    return Fp(raw_tag{}, mulmod(x, y, p), p);
  }
  Fp operator-() const {
    if (is_literal()) return Fp(-literal_value());
    return Fp(raw_tag{}, v_ == 0 ? 0 : p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const {
    if (is_literal()) {
      long v = literal_value();
      if (v == 1 || v == -1) return *this;
      throw domain_mismatch("inverse of Fp literal without modulus");
    }
    if (v_ == 0) throw degenerate_input("inverse of zero in F_p");
    // extended Euclid on (v, p); the q*tn intermediate can pass 2^63 even
    // though the new coefficient fits, so it goes through 128 bits
    std::int64_t t = 0, tn = 1;
    std::uint64_t r = p_, rn = v_;
    while (rn != 0) {
      std::uint64_t q = r / rn;
      std::int64_t tt = static_cast<std::int64_t>(static_cast<__int128>(t) -
                                                  static_cast<__int128>(q) * tn);
      t = tn; tn = tt;
      std::uint64_t rr = r - q * rn;
      r = rn; rn = rr;
    }
    std::uint64_t u = t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_)) : static_cast<std::uint64_t>(t);
    return Fp(raw_tag{}, u, p_);
  }

  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp pow(std::uint64_t e) const {
    if (is_literal()) throw domain_mismatch("pow on Fp literal");
    std::uint64_t base = v_, acc = 1 % p_;
    while (e) {
      if (e & 1) acc = mulmod(acc, base, p_);
      base = mulmod(base, base, p_);
      e >>= 1;
    }
    return Fp(raw_tag{}, acc, p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return static_cast<std::int64_t>(x) == static_cast<std::int64_t>(y);
    return x == y;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  // Lift to the symmetric range (-p/2, p/2]; literal lifts as itself.
  Int lift_symmetric() const {
    if (is_literal()) return Int(literal_value());
    if (v_ > p_ / 2) return Int::from_u64(v_) - Int::from_u64(p_);
    return Int::from_u64(v_);
  }

  std::string str() const {
    return is_literal() ? std::to_string(literal_value()) : std::to_string(v_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Fp& v) { return os << v.str(); }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }

 private:
  struct raw_tag {};
  Fp(raw_tag, std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {}

  // Returns the two operand values over a common modulus (0 = both literal).
  static std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> align(const Fp& a, const Fp& b) {
    if (a.p_ == b.p_) return {a.v_, b.v_, a.p_};
    if (a.p_ == 0) return {reduce_lit(a.literal_value(), b.p_), b.v_, b.p_};
    if (b.p_ == 0) return {a.v_, reduce_lit(b.literal_value(), a.p_), a.p_};
    throw domain_mismatch("Fp operands carry different moduli: " + std::to_string(a.p_) +
                          " vs " + std::to_string(b.p_));
  }
  static std::uint64_t reduce_lit(long v, std::uint64_t p) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p;
    std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p;
    return r == 0 ? 0 : p - r;
  }
  static Fp lit_add(std::uint64_t x, std::uint64_t y) {
    return Fp(static_cast<long>(x) + static_cast<long>(y));
  }
  static Fp lit_sub(std::uint64_t x, std::uint64_t y) {
    return Fp(static_cast<long>(x) - static_cast<long>(y));
  }
  static Fp lit_mul(std::uint64_t x, std::uint64_t y) {
    long a = static_cast<long>(x), b = static_cast<long>(y);
    __int128 prod = static_cast<__int128>(a) * b;
    if (prod > INT64_MAX / 2 || prod < INT64_MIN / 2)
      throw domain_mismatch("Fp literal product too large without a modulus");
    return Fp(static_cast<long>(prod));
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

// Batch inversion: one field inversion plus 3n multiplications.
// Throws degenerate_input if any element is zero.
void batch_inverse(std::vector<Fp>& xs);

// Random prime with exactly `bits` bits (2^(bits-1) <= p < 2^bits),
// 61 <= bits <= 63, derived deterministically from the seed.
std::uint64_t random_prime(unsigned bits, std::uint64_t seed);

// Deterministic fixed sequence of distinct 62-bit primes, used for CRT
// reconstructions (characteristic polynomials, integer polynomial gcd).
std::uint64_t crt_prime(std::size_t index);

}  // namespace kdeg
