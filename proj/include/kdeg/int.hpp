#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "kdeg/errors.hpp"

namespace kdeg {

// Arbitrary-precision integer.  Thin value wrapper around mpz_class whose
// operators return plain Int, so no gmpxx expression templates leak into
// generic code (Eigen, the polynomial templates).
class Int {
 public:
  Int() : z_(0) {}
  Int(long v) : z_(v) {}  // NOLINT: generic code constructs Scalar(0)
  Int(int v) : z_(v) {}   // NOLINT
  explicit Int(unsigned long v) : z_(v) {}
  explicit Int(const std::string& s) : z_(s, 10) {}
  explicit Int(mpz_class z) : z_(std::move(z)) {}

  const mpz_class& raw() const { return z_; }
  mpz_class& raw() { return z_; }

  bool is_zero() const { return mpz_sgn(z_.get_mpz_t()) == 0; }
  bool is_one() const { return mpz_cmp_ui(z_.get_mpz_t(), 1) == 0; }
  int sign() const { return mpz_sgn(z_.get_mpz_t()); }
  bool odd() const { return mpz_odd_p(z_.get_mpz_t()) != 0; }
  std::size_t bits() const { return mpz_sizeinbase(z_.get_mpz_t(), 2); }

  Int operator-() const { return Int(mpz_class(-z_)); }
  Int& operator+=(const Int& o) { z_ += o.z_; return *this; }
  Int& operator-=(const Int& o) { z_ -= o.z_; return *this; }
  Int& operator*=(const Int& o) { z_ *= o.z_; return *this; }

  friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.z_ + b.z_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.z_ - b.z_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.z_ * b.z_)); }

  friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_.get_mpz_t(), b.z_.get_mpz_t()) == 0; }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
  friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_.get_mpz_t(), b.z_.get_mpz_t()) < 0; }
  friend bool operator>(const Int& a, const Int& b) { return b < a; }
  friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
  friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

  std::string str() const { return z_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.z_; }

  double to_double() const { return z_.get_d(); }
  long to_long() const {
    if (!z_.fits_slong_p()) throw degenerate_input("Int does not fit a long: " + str());
    return z_.get_si();
  }
  std::uint64_t to_u64() const {
    if (sign() < 0 || mpz_sizeinbase(z_.get_mpz_t(), 2) > 64)
      throw degenerate_input("Int does not fit u64: " + str());
    return mpz_get_ui(z_.get_mpz_t());
  }

  static Int from_u64(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Int(z);
  }

 private:
  mpz_class z_;
};

inline Int abs(const Int& a) { return Int(mpz_class(::abs(a.raw()))); }

inline Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(g);
}

inline Int lcm(const Int& a, const Int& b) {
  mpz_class g;
  mpz_lcm(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(g);
}

inline Int pow(const Int& a, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.raw().get_mpz_t(), e);
  return Int(r);
}

// Floor square root.
inline Int isqrt(const Int& a) {
  if (a.sign() < 0) throw degenerate_input("isqrt of negative");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.raw().get_mpz_t());
  return Int(r);
}

inline Int binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Int(r);
}

// Quotient that must be exact; throws internal_inconsistency otherwise.
inline Int divexact(const Int& a, const Int& b) {
  if (b.is_zero()) throw degenerate_input("divexact by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  if (mpz_sgn(r.get_mpz_t()) != 0)
    throw internal_inconsistency("integer division expected exact: " + a.str() + " / " + b.str());
  return Int(q);
}

inline bool divides(const Int& d, const Int& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

// a mod m reduced into [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t());
  return Int(r);
}

// Exact rational, always in lowest terms with positive denominator
// (mpq canonical form).
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long v) : q_(v) {}  // NOLINT
  Rat(int v) : q_(v) {}   // NOLINT
  Rat(const Int& num, const Int& den) : q_(num.raw(), den.raw()) {
    if (den.is_zero()) throw degenerate_input("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const Int& v) : q_(v.raw()) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }

  Int num() const { return Int(mpz_class(q_.get_num())); }
  Int den() const { return Int(mpz_class(q_.get_den())); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_ui(q_.get_mpq_t(), 1, 1) == 0; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }
  bool is_integer() const { return mpz_cmp_ui(q_.get_den().get_mpz_t(), 1) == 0; }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw degenerate_input("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw degenerate_input("rational division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
  }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat inv() const {
    if (is_zero()) throw degenerate_input("inverse of zero rational");
    return Rat(mpq_class(1 / q_));
  }

  std::string str() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.q_; }
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

// Accepts "a", "a/b", decimals ("0.25") and scientific notation ("1e-10").
Rat parse_rat(const std::string& s);

}  // namespace kdeg
