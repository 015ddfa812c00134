#pragma once

#include <string>
#include <vector>

#include "kdeg/ktuple.hpp"

namespace kdeg {

struct ChartReport {
  std::string prop;
  int q = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0 && passes > 0; }
};

// pi1 chart at the rank-one stratum: x = lambda (x) nu + s v, with
// lambda_1 = nu_1 = 1, v supported on the lower (q-1) x (q-1) block and
// normalized v(k,l) = 1.  Indices 0-based; the block slots satisfy
// 1 <= k, l <= q-1.
struct Pi1Chart {
  int q = 0;
  int k = 1, l = 1;
  Rat s;
  VecX<Rat> lambda, nu;
  MatX<Rat> v;

  ProjPoint<Rat> project() const;
  static Pi1Chart invert(const ProjPoint<Rat>& y, int k, int l);
};

// pi2 chart at the vanishing row/column center: x = s zeta + v, zeta
// cross-shaped with
// zeta(0,r) = 1, v the lower block with v(k,l) = 1.
struct Pi2Chart {
  int q = 0;
  int r = 1;
  int k = 1, l = 1;
  Rat s;
  MatX<Rat> zeta;
  MatX<Rat> v;

  ProjPoint<Rat> project() const;
  static Pi2Chart invert(const ProjPoint<Rat>& y, int r, int k, int l);
};

// pi3 chart over the codimension-2 center inside the pi2 fiber:
// x = [[t^2 tau, t xi],[t xi, v]], xi
// cross-shaped with xi(0,0) = 0 and xi(0,r) = 1.
struct Pi3Chart {
  int q = 0;
  int r = 1;
  int k = 1, l = 1;
  Rat t, tau;
  MatX<Rat> xi;
  MatX<Rat> v;

  ProjPoint<Rat> project() const;
  static Pi3Chart invert(const ProjPoint<Rat>& y, int r, int k, int l);
};

// Exact round trips chart_invert(chart_project(p)) = p on random generic
// points, plus the s = 0 shape facts (rank-1 image for pi1, vanishing
// first row/column for pi2).
ChartReport chart_roundtrip_check(int q, int trials, std::uint64_t seed);

// Check 2.1: the limit of K along a pi1 normal slice at s = 0 equals
// B diag(0, inv(v')) A with v' = (-v_(j,k) / (lambda_j^2 nu_k^2)); exact
// projective equality over Q, and the predicted image has rank q-1.
ChartReport prop21_limit_check(int q, int trials, std::uint64_t seed);

// Check 2.2: the adjugate of a random rank-(q-1) matrix has rank 1
// (together with prop21_limit_check this covers both inclusion directions
// of K(J R_(q-1)) = R^1).
ChartReport prop22_rank_check(int q, int trials, std::uint64_t seed);

// Check 3.1: K of a point with x_(r,s) = 0 has vanishing s-th row and r-th
// column; at (r,s) = (1,1) the surviving block is K_(q-1) of the submatrix.
// All q^2 slots, `trials` random points each, over F_p.
ChartReport prop31_image_check(int q, int trials, std::uint64_t seed);

// Check 4.4: homogeneity of K under chi_t at random positions over F_p,
// plus the chart-level first-order facts of checks 4.1/4.2: ord_t of the
// image's t coordinate is 1 along pi3, ord_s of the image's t coordinate
// is 1 along pi2 (and the tau slots vanish to order exactly 2).
ChartReport prop4_homogeneity_check(int q, int trials, std::uint64_t seed);

// Vanishing orders along the three charts, exact univariate computations
// with the min taken over 3 parameter samples:
//   P = Pi(x) det(1/x) = det(Jhat(x)) / Pi^(q-1):  q-1, 2q-3, 2q-2
//   h(K(x)) for a random hyperplane h:             q-2, 2q-3, 2q-2
// The two families can be run separately (they support different
// propositions).
ChartReport valuation_orders_check(int q, std::uint64_t seed, bool check_p = true,
                                   bool check_h = true);

}  // namespace kdeg
