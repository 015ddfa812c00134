#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdeg/linalg.hpp"
#include "kdeg/mpoly.hpp"
#include "kdeg/rng.hpp"

namespace kdeg {

// Point of P(M_q): q^2 homogeneous coordinates laid out row-major as a
// q x q matrix.  Equality is projective.
template <class F>
struct ProjPoint {
  int q = 0;
  VecX<F> x;  // length q*q

  ProjPoint() = default;
  ProjPoint(int q_, VecX<F> coords) : q(q_), x(std::move(coords)) {
    if (x.size() != static_cast<Eigen::Index>(q) * q) throw degenerate_input("ProjPoint size mismatch");
  }

  const F& at(int i, int j) const { return x(static_cast<Eigen::Index>(i) * q + j); }
  F& at(int i, int j) { return x(static_cast<Eigen::Index>(i) * q + j); }

  bool all_zero() const {
    for (Eigen::Index k = 0; k < x.size(); ++k)
      if (!x(k).is_zero()) return false;
    return true;
  }

  MatX<F> matrix() const {
    MatX<F> m(q, q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) m(i, j) = at(i, j);
    return m;
  }

  static ProjPoint from_matrix(const MatX<F>& m) {
    ProjPoint p;
    p.q = static_cast<int>(m.rows());
    p.x.resize(m.rows() * m.cols());
    for (int i = 0; i < p.q; ++i)
      for (int j = 0; j < p.q; ++j) p.at(i, j) = m(i, j);
    return p;
  }

  std::vector<F> coords_vec() const {
    std::vector<F> v(static_cast<std::size_t>(x.size()));
    for (Eigen::Index k = 0; k < x.size(); ++k) v[static_cast<std::size_t>(k)] = x(k);
    return v;
  }
};

// Projective equality: one is a nonzero scalar multiple of the other.
template <class F>
bool proj_equal(const ProjPoint<F>& a, const ProjPoint<F>& b) {
  if (a.q != b.q) return false;
  Eigen::Index pivot = -1;
  for (Eigen::Index k = 0; k < a.x.size(); ++k)
    if (!a.x(k).is_zero()) { pivot = k; break; }
  if (pivot < 0) return b.all_zero();
  if (b.x(pivot).is_zero()) return false;
  for (Eigen::Index k = 0; k < a.x.size(); ++k)
    if (!(a.x(k) * b.x(pivot) == a.x(pivot) * b.x(k))) return false;
  return true;
}

// Homogeneous polynomial representative of a rational self-map of P(M_q).
struct MapRep {
  int q = 0;
  int degree = 0;
  std::string label;           // "I", "J", "K", "IoJ", ...
  std::vector<MPoly> comp;     // q^2 components, row-major (i,j)

  const MPoly& at(int i, int j) const { return comp[static_cast<std::size_t>(i) * q + j]; }
};

// Cofactor map: component (i,j) = (-1)^(i+j) det(x_[j,i]),
// homogeneous of degree q-1.
MapRep build_ihat(int q);

// Hadamard-reciprocal numerator: component (i,j) = product of all
// x_(a,b) with (a,b) != (i,j), homogeneous of degree q^2-1.
MapRep build_jhat(int q);

// Reduced representative of I o J, homogeneous of degree q^2-q+1.
// Built by composing ihat with jhat and dividing every component exactly
// by Pi^(q-2); materialized symbolically for q <= 4 only.
MapRep build_khat(int q);

// Same map assembled termwise from the closed form C_(j,i)(1/x) Pi(x):
// one signed squarefree monomial per permutation of the (j,i) minor.
// Used as an independent route against build_khat.
MapRep khat_closed_form(int q);

// Product of all q^2 variables.
MPoly pi_monomial(int q);

// Shared symbolic K-hat, built once per q (q <= 4).
const MapRep& khat_cached(int q);

// Exact componentwise identity I o J == Pi^(q-2) K, with K taken from the
// closed form (and build_khat pinned against it).  q <= 4.
bool khat_composition_identity(int q);

template <class F>
std::optional<ProjPoint<F>> eval_map(const MapRep& f, const ProjPoint<F>& p) {
  if (f.q != p.q) throw degenerate_input("eval_map: size mismatch");
  std::vector<F> xs = p.coords_vec();
  ProjPoint<F> out;
  out.q = p.q;
  out.x.resize(p.x.size());
  for (Eigen::Index k = 0; k < out.x.size(); ++k)
    out.x(k) = f.comp[static_cast<std::size_t>(k)].eval(xs);
  if (out.all_zero()) return std::nullopt;  // indeterminacy point
  return out;
}

// J on points through prefix/suffix products (no divisions, works with
// zero entries).  nullopt on the indeterminacy locus (>= 2 zero entries).
template <class F>
std::optional<ProjPoint<F>> apply_jhat_point(const ProjPoint<F>& p) {
  const Eigen::Index n = p.x.size();
  std::vector<F> pre(static_cast<std::size_t>(n) + 1, F(1)), suf(static_cast<std::size_t>(n) + 1, F(1));
  for (Eigen::Index k = 0; k < n; ++k) pre[static_cast<std::size_t>(k) + 1] = pre[static_cast<std::size_t>(k)] * p.x(k);
  for (Eigen::Index k = n; k-- > 0;) suf[static_cast<std::size_t>(k)] = suf[static_cast<std::size_t>(k) + 1] * p.x(k);
  ProjPoint<F> out;
  out.q = p.q;
  out.x.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) out.x(k) = pre[static_cast<std::size_t>(k)] * suf[static_cast<std::size_t>(k) + 1];
  if (out.all_zero()) return std::nullopt;
  return out;
}

// I on points: the adjugate, which is the cofactor matrix laid out as
// component (i,j) = C_(j,i).  nullopt exactly on rank <= q-2 (adj = 0).
template <class F>
std::optional<ProjPoint<F>> apply_ihat_point(const ProjPoint<F>& p) {
  MatX<F> adj = adjugate<F>(p.matrix());
  ProjPoint<F> out = ProjPoint<F>::from_matrix(adj);
  if (out.all_zero()) return std::nullopt;
  return out;
}

// K on points with every entry nonzero: projectively adj(1/x).  Points with
// zero entries fall back to the symbolic representative (q <= 4).
template <class F>
std::optional<ProjPoint<F>> apply_khat_point(const ProjPoint<F>& p) {
  bool all_nonzero = true;
  for (Eigen::Index k = 0; k < p.x.size(); ++k)
    if (p.x(k).is_zero()) { all_nonzero = false; break; }
  if (!all_nonzero) {
    if (p.q > 4)
      throw scope_error("K at a point with zero entries needs the symbolic representative (q <= 4)");
    return eval_map(khat_cached(p.q), p);
  }
  MatX<F> r(p.q, p.q);
  for (int i = 0; i < p.q; ++i)
    for (int j = 0; j < p.q; ++j) r(i, j) = F(1) / p.at(i, j);
  MatX<F> adj = adjugate<F>(r);
  ProjPoint<F> out = ProjPoint<F>::from_matrix(adj);
  if (out.all_zero()) return std::nullopt;
  return out;
}

// Outer product (lambda_i nu_j); rank 1 by construction.
template <class F>
MatX<F> outer(const VecX<F>& lambda, const VecX<F>& nu) {
  bool lz = true, nz = true;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (!lambda(i).is_zero()) { lz = false; break; }
  for (Eigen::Index i = 0; i < nu.size(); ++i)
    if (!nu(i).is_zero()) { nz = false; break; }
  if (lz || nz) throw degenerate_input("outer product with a zero vector");
  MatX<F> m(lambda.size(), nu.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    for (Eigen::Index j = 0; j < nu.size(); ++j) m(i, j) = lambda(i) * nu(j);
  return m;
}

// chi_t at position pos: multiplies row pos by t, then column pos by t
// (entry (pos,pos) picks up t^2).
template <class F>
ProjPoint<F> chi_scale(const ProjPoint<F>& p, const F& t, int pos) {
  if (t.is_zero()) throw degenerate_input("chi_scale with t = 0");
  if (pos < 0 || pos >= p.q) throw degenerate_input("chi_scale position out of range");
  ProjPoint<F> out = p;
  for (int j = 0; j < p.q; ++j) out.at(pos, j) = out.at(pos, j) * t;
  for (int i = 0; i < p.q; ++i) out.at(i, pos) = out.at(i, pos) * t;
  return out;
}

enum class SwapKind { Rows, Cols };

template <class F>
ProjPoint<F> permute(const ProjPoint<F>& p, SwapKind kind, int l, int m) {
  if (l < 0 || m < 0 || l >= p.q || m >= p.q) throw degenerate_input("permute index out of range");
  ProjPoint<F> out = p;
  if (kind == SwapKind::Rows)
    for (int j = 0; j < p.q; ++j) std::swap(out.at(l, j), out.at(m, j));
  else
    for (int i = 0; i < p.q; ++i) std::swap(out.at(i, l), out.at(i, m));
  return out;
}

// Random matrices and points for probes and property checks.
inline ProjPoint<Fp> random_fp_point(int q, std::uint64_t p, SplitMix64& g) {
  ProjPoint<Fp> out;
  out.q = q;
  out.x.resize(static_cast<Eigen::Index>(q) * q);
  for (Eigen::Index k = 0; k < out.x.size(); ++k) out.x(k) = Fp(g.uniform(1, p - 1), p);
  return out;
}

inline ProjPoint<Rat> random_rat_point(int q, SplitMix64& g, long hi = 1000000) {
  ProjPoint<Rat> out;
  out.q = q;
  out.x.resize(static_cast<Eigen::Index>(q) * q);
  for (Eigen::Index k = 0; k < out.x.size(); ++k)
    out.x(k) = Rat(static_cast<long>(g.uniform(1, static_cast<std::uint64_t>(hi))));
  return out;
}

}  // namespace kdeg
