#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kdeg/upoly.hpp"

namespace kdeg {

inline Int scalar_from_int(const Int& z, const Int&) { return z; }
inline Rat scalar_from_int(const Int& z, const Rat&) { return Rat(z); }
inline Fp scalar_from_int(const Int& z, const Fp& proto) {
  if (proto.is_literal()) throw domain_mismatch("Fp prototype without modulus");
  return Fp::from_int(z, proto.modulus());
}

// Sparse multivariate polynomial with integer coefficients.  Terms are kept
// in a map from exponent vectors (lexicographic order) to nonzero
// coefficients.
class MPoly {
 public:
  using Exps = std::vector<std::uint16_t>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, Int c);
  static MPoly variable(int nvars, int i);
  static MPoly monomial(int nvars, Exps e, Int c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  const std::map<Exps, Int>& terms() const { return terms_; }

  int total_degree() const;
  bool is_homogeneous() const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;

  // Exact quotient; throws internal_inconsistency when the division is not
  // exact.  Lex leading-term reduction.
  MPoly exact_div(const MPoly& d) const;

  // True if the variable x_i divides every term.
  bool variable_divides(int i) const;

  template <class F>
  F eval(const std::vector<F>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_) throw degenerate_input("eval arity mismatch");
    F proto = xs.empty() ? F(0) : xs[0];
    F acc(0);
    for (const auto& [e, c] : terms_) {
      F t = scalar_from_int(c, proto);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t = t * xs[static_cast<std::size_t>(i)];
      acc = acc + t;
    }
    return acc;
  }

  // Substitute x_i -> a_i + t*b_i and collect a univariate polynomial in t.
  template <class F>
  UPoly<F> restrict_line(const std::vector<F>& a, const std::vector<F>& b) const {
    if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
      throw degenerate_input("restrict_line arity mismatch");
    F proto = a.empty() ? F(0) : a[0];
    // per-variable powers of (a_i + t b_i), grown on demand
    std::vector<std::vector<UPoly<F>>> pw(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
      pw[static_cast<std::size_t>(i)].push_back(UPoly<F>::one());
      pw[static_cast<std::size_t>(i)].push_back(
          UPoly<F>(std::vector<F>{a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]}));
    }
    UPoly<F> acc;
    for (const auto& [e, c] : terms_) {
      UPoly<F> t(scalar_from_int(c, proto));
      for (int i = 0; i < nvars_; ++i) {
        auto& powers = pw[static_cast<std::size_t>(i)];
        unsigned ei = e[static_cast<std::size_t>(i)];
        while (powers.size() <= ei) powers.push_back(powers.back() * powers[1]);
        if (ei > 0) t = t * powers[ei];
      }
      acc = acc + t;
    }
    return acc;
  }

  // Substitute x_i -> images[i], a polynomial in a fresh variable set.
  MPoly substitute(const std::vector<MPoly>& images) const;

  std::string str() const;

 private:
  void add_term(const Exps& e, const Int& c);

  int nvars_;
  std::map<Exps, Int> terms_;
};

}  // namespace kdeg
