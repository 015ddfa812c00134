#include "kdeg/roots.hpp"

#include "kdeg/linalg.hpp"

namespace kdeg {

int sign_at(const UPoly<Int>& p, const Rat& x) {
  // p(a/b) * b^deg is an integer with the same sign for b > 0
  if (p.is_zero()) return 0;
  Int a = x.num(), b = x.den();
  Int acc(0);
  Int bpow(1);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a + p.coeff(k) * bpow;
    if (k > 0) bpow *= b;
  }
  return acc.sign();
}

namespace {

// Divide by the (positive) content only; the sign pattern is untouched.
UPoly<Int> positive_primitive(const UPoly<Int>& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  std::vector<Int> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = divexact(p.coeffs()[i], c);
  return UPoly<Int>(std::move(r));
}

// Pseudo-remainder scaled by |lc(g)|^(deg f - deg g + 1): a positive multiple
// of the true remainder, exact over Z.
UPoly<Int> pseudo_rem_positive(const UPoly<Int>& f, const UPoly<Int>& g) {
  int d = f.degree() - g.degree();
  Int scale = pow(kdeg::abs(g.lead()), static_cast<unsigned long>(d) + 1);
  UPoly<Int> r = f * scale;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    int k = r.degree() - g.degree();
    Int c = divexact(r.lead(), g.lead());
    r = r - (g * c).shifted(k);
  }
  return r;
}

}  // namespace

std::vector<UPoly<Int>> sturm_chain(const UPoly<Int>& squarefree) {
  std::vector<UPoly<Int>> chain;
  chain.push_back(squarefree);
  if (squarefree.degree() == 0) return chain;
  chain.push_back(positive_primitive(squarefree.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const UPoly<Int>& a = chain[chain.size() - 2];
    const UPoly<Int>& b = chain.back();
    UPoly<Int> r = pseudo_rem_positive(a, b);
    if (r.is_zero()) break;
    chain.push_back(positive_primitive(-r));
  }
  return chain;
}

namespace {

int variations_at(const std::vector<UPoly<Int>>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<UPoly<Int>>& chain, const Rat& a, const Rat& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

namespace {

// 1 + max |c_k / c_n|, rounded up to an integer: every root has modulus
// strictly below this.
Rat cauchy_bound(const UPoly<Int>& p) {
  Int m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Int a = kdeg::abs(p.coeff(k));
    if (a > m) m = a;
  }
  Int lead = kdeg::abs(p.lead());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.raw().get_mpz_t(), lead.raw().get_mpz_t());
  return Rat(Int(q) + Int(2));
}

}  // namespace

std::optional<RealInterval> isolate_max_real_root(const UPoly<Int>& p, const Rat& precision) {
  if (p.is_zero()) throw degenerate_input("root isolation on the zero polynomial");
  if (precision.sign() <= 0) throw degenerate_input("precision must be positive");
  if (p.degree() == 0) return std::nullopt;
  UPoly<Int> s = squarefree_part(p);
  if (s.degree() == 0) return std::nullopt;
  auto chain = sturm_chain(s);
  Rat bound = cauchy_bound(s);
  Rat lo = -bound, hi = bound;
  if (sturm_count(chain, lo, hi) == 0) return std::nullopt;

  // keep at least one root in (lo, hi], none above hi
  Rat half(Int(1), Int(2));
  while (true) {
    int roots = sturm_count(chain, lo, hi);
    if (roots == 1 && (hi - lo) <= precision) break;
    Rat mid = (lo + hi) * half;
    if (sign_at(s, mid) == 0 && sturm_count(chain, mid, hi) == 0)
      return RealInterval{mid, mid};  // exact rational root, and it is the largest
    if (sturm_count(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return RealInterval{lo, hi};
}

std::optional<RealInterval> isolate_max_real_root(const UPoly<Rat>& p, const Rat& precision) {
  if (p.is_zero()) throw degenerate_input("root isolation on the zero polynomial");
  return isolate_max_real_root(to_int_poly(p), precision);
}

UPoly<Int> root_product_poly(const UPoly<Int>& s) {
  const int m = s.degree();
  if (m <= 0) throw degenerate_input("root_product_poly needs positive degree");
  if (s.coeff(0).is_zero()) throw degenerate_input("root_product_poly needs s(0) != 0");
  // Sylvester matrix in lambda of f(lambda) = s(lambda) and
  // g(lambda) = sum_k s_k u^k lambda^(m-k); entries live in Z[u].
  using P = UPoly<Int>;
  const int n = 2 * m;
  MatX<P> sylv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sylv(i, j) = P();
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= m; ++k)
      sylv(row, row + k) = P(s.coeff(m - k));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= m; ++k)
      sylv(m + row, row + k) = P::monomial(s.coeff(k), k);
  return det_bareiss<P>(sylv);
}

RealInterval rational_sqrt(const Rat& x, const Rat& eps) {
  if (x.sign() < 0) throw degenerate_input("rational_sqrt of negative");
  if (eps.sign() <= 0) throw degenerate_input("rational_sqrt eps must be positive");
  if (x.is_zero()) return {Rat(0), Rat(0)};
  Int a = x.num(), b = x.den();
  // sqrt(a/b) = sqrt(a b) / b; scale by k so the bracket width 1/(b k) <= eps
  Rat inv_target = Rat(Int(4)) / (Rat(b) * eps);
  mpz_class kq;
  mpz_cdiv_q(kq.get_mpz_t(), inv_target.num().raw().get_mpz_t(), inv_target.den().raw().get_mpz_t());
  Int k(kq);
  if (k < Int(1)) k = Int(1);
  Int n = isqrt(a * b * k * k);
  Rat lo(n, b * k);
  Rat hi(n + Int(1), b * k);
  return {lo, hi};
}

std::optional<RealInterval> max_root_modulus(const UPoly<Int>& p, const Rat& precision) {
  if (p.is_zero()) throw degenerate_input("max modulus of the zero polynomial");
  if (precision.sign() <= 0) throw degenerate_input("precision must be positive");
  auto v = p.valuation();
  UPoly<Int> q = p.shift_down(*v);
  if (q.degree() == 0) {
    if (*v > 0) return RealInterval{Rat(0), Rat(0)};  // all roots are 0
    return std::nullopt;                              // nonzero constant, no roots
  }
  UPoly<Int> s = squarefree_part(q);
  UPoly<Int> r = root_product_poly(s);

  Rat prec_r = precision;
  for (int iter = 0; iter < 96; ++iter) {
    auto ri = isolate_max_real_root(r, prec_r);
    if (!ri) throw internal_inconsistency("root-product polynomial lost its real root");
    Rat rlo = ri->lo.sign() < 0 ? Rat(0) : ri->lo;
    Rat quarter = precision * Rat(Int(1), Int(4));
    RealInterval lo_b = rational_sqrt(rlo, quarter);
    RealInterval hi_b = rational_sqrt(ri->hi, quarter);
    RealInterval out{lo_b.lo, hi_b.hi};
    if (out.width() <= precision) return out;
    prec_r = prec_r * Rat(Int(1), Int(4));
  }
  throw internal_inconsistency("max_root_modulus did not converge");
}

std::optional<RealInterval> max_root_modulus(const UPoly<Rat>& p, const Rat& precision) {
  if (p.is_zero()) throw degenerate_input("max modulus of the zero polynomial");
  return max_root_modulus(to_int_poly(p), precision);
}

}  // namespace kdeg
