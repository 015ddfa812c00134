#pragma once

#include <vector>

#include "kdeg/maps.hpp"
#include "kdeg/zpoly.hpp"

namespace kdeg {

// A point of P(M_q) with univariate-polynomial coordinates: the restriction
// of the ambient coordinates to a parametrized curve.  Row-major, size q^2.
template <class S>
using PolyTuple = std::vector<UPoly<S>>;

template <class S>
PolyTuple<S> line_tuple(const ProjPoint<S>& a, const ProjPoint<S>& b) {
  if (a.q != b.q) throw degenerate_input("line_tuple: size mismatch");
  PolyTuple<S> t(static_cast<std::size_t>(a.x.size()));
  for (Eigen::Index k = 0; k < a.x.size(); ++k)
    t[static_cast<std::size_t>(k)] = UPoly<S>(std::vector<S>{a.x(k), b.x(k)});
  return t;
}

template <class S>
int max_tuple_degree(const PolyTuple<S>& t) {
  int d = -1;
  for (const auto& p : t) d = std::max(d, p.degree());
  return d;
}

template <class S>
bool tuple_all_zero(const PolyTuple<S>& t) {
  for (const auto& p : t)
    if (!p.is_zero()) return false;
  return true;
}

// Divide the tuple by its polynomial gcd (the content along the curve).
// Returns the degree removed from every entry.  Throws degenerate_input on
// an all-zero tuple.
template <class S>
int tuple_content_reduce(PolyTuple<S>& t) {
  static_assert(is_field_scalar<S>::value);
  if (tuple_all_zero(t)) throw degenerate_input("content of an all-zero tuple");
  UPoly<S> g;
  for (const auto& p : t) {
    g = upoly_gcd(g, p);
    if (g.degree() == 0) break;
  }
  if (g.degree() <= 0) return 0;
  for (auto& p : t)
    if (!p.is_zero()) p = p.exact_div(g);
  return g.degree();
}

// Integer-coefficient variant: removes the full Z[x]-content (polynomial
// part and integer part); the removed degree is the polynomial degree.
int tuple_content_reduce(PolyTuple<Int>& t);

// One application of K to a curve tuple, the literal route: the J-tuple by
// prefix/suffix products, signed (q-1)x(q-1) minors, then exact division of
// every component by Pi^(q-2).  The result is the K-hat image tuple before
// content removal.  Requires every coordinate to be a nonzero polynomial.
template <class S>
PolyTuple<S> kstep_symbolic(int q, const PolyTuple<S>& in) {
  const int n = q * q;
  if (static_cast<int>(in.size()) != n) throw degenerate_input("kstep: tuple size mismatch");
  for (const auto& p : in)
    if (p.is_zero()) throw degenerate_input("kstep_symbolic: zero coordinate on the curve");

  // J-tuple: Jmat(a,b) = product of all entries except (a,b)
  std::vector<UPoly<S>> pre(static_cast<std::size_t>(n) + 1, UPoly<S>::one());
  std::vector<UPoly<S>> suf(static_cast<std::size_t>(n) + 1, UPoly<S>::one());
  for (int k = 0; k < n; ++k) pre[static_cast<std::size_t>(k) + 1] = pre[static_cast<std::size_t>(k)] * in[static_cast<std::size_t>(k)];
  for (int k = n; k-- > 0;) suf[static_cast<std::size_t>(k)] = suf[static_cast<std::size_t>(k) + 1] * in[static_cast<std::size_t>(k)];
  const UPoly<S>& pi_all = pre[static_cast<std::size_t>(n)];

  MatX<UPoly<S>> jmat(q, q);
  for (int k = 0; k < n; ++k)
    jmat(k / q, k % q) = pre[static_cast<std::size_t>(k)] * suf[static_cast<std::size_t>(k) + 1];

  UPoly<S> divisor = pi_all.pow(static_cast<unsigned>(q - 2));
  PolyTuple<S> out(static_cast<std::size_t>(n));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      UPoly<S> minor = det_bareiss<UPoly<S>>(delete_row_col(jmat, j, i));
      if ((i + j) % 2 != 0) minor = -minor;
      out[static_cast<std::size_t>(i) * q + j] = (q == 2) ? minor : minor.exact_div(divisor);
    }
  return out;
}

// Same map over F_p through evaluation and Newton interpolation: sample
// K pointwise (adjugate of the entrywise reciprocal times Pi), then
// reconstruct each coordinate from (q^2-q+1)*deg+1 values.  Identical
// output to kstep_symbolic, a few orders of magnitude faster once degrees
// grow.
PolyTuple<Fp> kstep_interp(int q, const PolyTuple<Fp>& in, std::uint64_t p);

}  // namespace kdeg
