#include "kdeg/linalg.hpp"

#include "kdeg/zpoly.hpp"

namespace kdeg {

UPoly<Fp> charpoly_fp(MatX<Fp> m, std::uint64_t p) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n == 0) throw degenerate_input("charpoly of non-square matrix");

  // Hessenberg form by similarity transforms.
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (!m(r, k - 1).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
    }
    Fp inv = m(k, k - 1).inv();
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k - 1).is_zero()) continue;
      Fp f = m(i, k - 1) * inv;
      for (Eigen::Index c = k - 1; c < n; ++c) m(i, c) = m(i, c) - f * m(k, c);
      for (Eigen::Index r = 0; r < n; ++r) m(r, k) = m(r, k) + f * m(r, i);
    }
  }

  // p_k = charpoly of the leading k x k block of the Hessenberg matrix.
  std::vector<UPoly<Fp>> cp(static_cast<std::size_t>(n) + 1);
  cp[0] = UPoly<Fp>::one();
  for (Eigen::Index k = 1; k <= n; ++k) {
    UPoly<Fp> lam_minus = UPoly<Fp>(std::vector<Fp>{
        Fp(0, p) - m(k - 1, k - 1), Fp(1, p)});
    UPoly<Fp> acc = lam_minus * cp[static_cast<std::size_t>(k - 1)];
    Fp subdiag_prod = Fp(1, p);
    for (Eigen::Index i = k - 2; i >= 0; --i) {
      subdiag_prod = subdiag_prod * m(i + 1, i);
      if (subdiag_prod.is_zero()) break;
      Fp w = m(i, k - 1) * subdiag_prod;
      if (!w.is_zero()) acc = acc - cp[static_cast<std::size_t>(i)] * w;
    }
    cp[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return cp[static_cast<std::size_t>(n)];
}

UPoly<Int> charpoly(const MatX<Int>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n == 0) throw degenerate_input("charpoly of non-square matrix");

  Int amax(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Int a = kdeg::abs(m(i, j));
      if (a > amax) amax = a;
    }
  if (amax.is_zero()) amax = Int(1);

  // |c_{n-k}| <= C(n,k) (sqrt(k) amax)^k <= C(n,k) (k amax^2)^ceil(k/2)
  Int bound(1);
  for (unsigned long k = 1; k <= static_cast<unsigned long>(n); ++k) {
    Int term = binomial(static_cast<unsigned long>(n), k) *
               pow(Int(static_cast<long>(k)) * amax * amax, (k + 1) / 2);
    if (term > bound) bound = term;
  }
  Int needed = bound * Int(2) + Int(1);

  CrtVec acc(static_cast<std::size_t>(n) + 1);
  std::size_t pi = 0;
  while (acc.modulus() <= needed) {
    std::uint64_t p = crt_prime(pi++);
    MatX<Fp> mp(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) mp(i, j) = Fp::from_int(m(i, j), p);
    UPoly<Fp> cp = charpoly_fp(std::move(mp), p);
    std::vector<std::uint64_t> vals(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= cp.degree(); ++k) {
      Fp c = cp.coeff(k);
      vals[static_cast<std::size_t>(k)] = c.is_zero() ? 0 : c.value();
    }
    acc.absorb(vals, p);
  }
  UPoly<Int> out(acc.symmetric_all());
  if (out.degree() != static_cast<int>(n) || !out.lead().is_one())
    throw internal_inconsistency("charpoly reconstruction is not monic of full degree");
  return out;
}

}  // namespace kdeg
