#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kdeg/errors.hpp"
#include "kdeg/fp.hpp"
#include "kdeg/int.hpp"

namespace kdeg {

template <class S>
struct is_field_scalar : std::false_type {};
template <>
struct is_field_scalar<Rat> : std::true_type {};
template <>
struct is_field_scalar<Fp> : std::true_type {};

inline Int exact_scalar_div(const Int& a, const Int& b) { return divexact(a, b); }
inline Rat exact_scalar_div(const Rat& a, const Rat& b) { return a / b; }
inline Fp exact_scalar_div(const Fp& a, const Fp& b) { return a / b; }

// Dense univariate polynomial over S, constant term first.  The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
template <class S>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
  explicit UPoly(S constant) : c_{std::move(constant)} { normalize(); }

  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(S(1)); }
  // c * x^k
  static UPoly monomial(S c, int k) {
    std::vector<S> v(static_cast<std::size_t>(k) + 1, S(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Index of the first nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return std::nullopt;
  }

  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const S& lead() const {
    if (is_zero()) throw degenerate_input("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<S>& coeffs() const { return c_; }

  friend UPoly operator-(const UPoly& a) {
    std::vector<S> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
    return UPoly(std::move(r));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator*(const UPoly& a, const S& s) {
    if (s.is_zero()) return UPoly();
    std::vector<S> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
    return UPoly(std::move(r));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // multiply by x^k
  UPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<S> r(c_.size() + static_cast<std::size_t>(k), S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
    return UPoly(std::move(r));
  }

  // divide by x^k (the k lowest coefficients must vanish)
  UPoly shift_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    auto v = valuation();
    if (!v || *v < k) throw internal_inconsistency("shift_down below valuation");
    std::vector<S> r(c_.begin() + k, c_.end());
    return UPoly(std::move(r));
  }

  S eval(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<S> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * S(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  UPoly pow(unsigned e) const {
    UPoly acc = one();
    UPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Quotient/remainder; requires an invertible leading coefficient
  // (field scalars).
  std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
    static_assert(is_field_scalar<S>::value, "divrem needs a field scalar");
    if (d.is_zero()) throw degenerate_input("polynomial division by zero");
    UPoly r = *this;
    if (r.degree() < d.degree()) return {UPoly(), r};
    std::vector<S> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, S(0));
    S dlead_inv = S(1) / d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      S c = r.lead() * dlead_inv;
      q[static_cast<std::size_t>(k)] = c;
      r = r - (d * c).shifted(k);
    }
    return {UPoly(std::move(q)), r};
  }

  // Exact quotient in S[x]; throws internal_inconsistency if the division
  // leaves a remainder (or a coefficient quotient is not exact over Int).
  UPoly exact_div(const UPoly& d) const {
    if (d.is_zero()) throw degenerate_input("polynomial division by zero");
    if (is_zero()) return UPoly();
    if (degree() < d.degree()) throw internal_inconsistency("exact_div: degree too small");
    UPoly r = *this;
    std::vector<S> q(static_cast<std::size_t>(degree() - d.degree()) + 1, S(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      S c = exact_scalar_div(r.lead(), d.lead());
      q[static_cast<std::size_t>(k)] = c;
      r = r - (d * c).shifted(k);
    }
    if (!r.is_zero()) throw internal_inconsistency("exact_div: nonzero remainder");
    return UPoly(std::move(q));
  }

  UPoly monic() const {
    static_assert(is_field_scalar<S>::value, "monic needs a field scalar");
    if (is_zero()) return *this;
    return *this * (S(1) / lead());
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[i].str();
      if (i > 0) out += "*" + var + "^" + std::to_string(i);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<S> c_;
};

// Monic greatest common divisor over a field; gcd(f, 0) = monic(f).
template <class S>
UPoly<S> gcd(const UPoly<S>& a, const UPoly<S>& b) {
  static_assert(is_field_scalar<S>::value, "field gcd; use zpoly_gcd over Int");
  UPoly<S> f = a, g = b;
  while (!g.is_zero()) {
    auto [q, r] = f.divrem(g);
    (void)q;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  return f.monic();
}

// Integer content (gcd of coefficients, nonnegative).
inline Int content(const UPoly<Int>& p) {
  Int g(0);
  for (const Int& c : p.coeffs()) g = kdeg::gcd(g, c);
  return g;
}

// p divided by its content, sign normalized so the leading coefficient
// is positive.  Zero stays zero.
inline UPoly<Int> primitive_part(const UPoly<Int>& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (p.lead().sign() < 0) c = -c;
  std::vector<Int> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = divexact(p.coeffs()[i], c);
  return UPoly<Int>(std::move(r));
}

template <class S>
UPoly<S> upoly_from_longs(const std::vector<long>& v) {
  std::vector<S> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return UPoly<S>(std::move(c));
}

inline UPoly<Rat> to_rat_poly(const UPoly<Int>& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c.emplace_back(x);
  return UPoly<Rat>(std::move(c));
}

// Clear denominators: returns the primitive integer polynomial with the
// same roots (content removed as well).
inline UPoly<Int> to_int_poly(const UPoly<Rat>& p) {
  Int l(1);
  for (const Rat& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<Int> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat scaled = p.coeffs()[i] * Rat(l);
    r[i] = scaled.num();
  }
  return primitive_part(UPoly<Int>(std::move(r)));
}

inline UPoly<Fp> reduce_mod(const UPoly<Int>& p, std::uint64_t prime) {
  std::vector<Fp> c;
  c.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c.push_back(Fp::from_int(x, prime));
  return UPoly<Fp>(std::move(c));
}

}  // namespace kdeg
