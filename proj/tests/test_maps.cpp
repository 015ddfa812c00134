#include <doctest.h>

#include <kdeg/maps.hpp>
#include <kdeg/probe.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("maps");

namespace {

ProjPoint<Rat> rat_point(int q, const std::vector<long>& entries) {
  ProjPoint<Rat> p;
  p.q = q;
  p.x.resize(static_cast<Eigen::Index>(q) * q);
  for (Eigen::Index k = 0; k < p.x.size(); ++k) p.x(k) = Rat(entries[static_cast<std::size_t>(k)]);
  return p;
}

}  // namespace

TEST_CASE("ihat at q=2 is [d, -b, -c, a]") {
  MapRep ih = build_ihat(2);
  CHECK(ih.at(0, 0) == MPoly::variable(4, 3));
  CHECK(ih.at(0, 1) == -MPoly::variable(4, 1));
  CHECK(ih.at(1, 0) == -MPoly::variable(4, 2));
  CHECK(ih.at(1, 1) == MPoly::variable(4, 0));
}

TEST_CASE("ihat at q=3: nine 2-term quadratics") {
  MapRep ih = build_ihat(3);
  CHECK(ih.comp.size() == 9);
  for (const auto& c : ih.comp) {
    CHECK(c.total_degree() == 2);
    CHECK(c.is_homogeneous());
    CHECK(c.nterms() == 2);
  }
}

TEST_CASE("adjugate identity through the symbolic map") {
  SplitMix64 g(23);
  for (int q = 2; q <= 4; ++q) {
    MapRep ih = build_ihat(q);
    for (int trial = 0; trial < 5; ++trial) {
      ProjPoint<Rat> x = random_rat_point(q, g, 50);
      auto img = eval_map(ih, x);
      REQUIRE(img.has_value());
      MatX<Rat> prod = img->matrix() * x.matrix();
      Rat d = det<Rat>(x.matrix());
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) CHECK(prod(i, j) == (i == j ? d : Rat(0)));
    }
  }
}

TEST_CASE("adjugate identity on singular matrices") {
  SplitMix64 g(24);
  for (int q = 3; q <= 4; ++q) {
    for (int trial = 0; trial < 5; ++trial) {
      // rank q-1: both adj(m) m and det(m) I vanish... det(m) = 0, and
      // adj(m) m = 0 as matrices
      MatX<Rat> a(q, q - 1), b(q - 1, q);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j + 1 < q; ++j) a(i, j) = Rat(static_cast<long>(g.uniform(1, 9)));
      for (int i = 0; i + 1 < q; ++i)
        for (int j = 0; j < q; ++j) b(i, j) = Rat(static_cast<long>(g.uniform(1, 9)));
      MatX<Rat> m = a * b;
      CHECK(det<Rat>(m).is_zero());
      MatX<Rat> prod = adjugate<Rat>(m) * m;
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) CHECK(prod(i, j).is_zero());
    }
  }
}

TEST_CASE("jhat components are squarefree monomials") {
  MapRep jh = build_jhat(2);
  // component (1,1) = b c d
  MPoly::Exps e{0, 1, 1, 1};
  CHECK(jh.at(0, 0) == MPoly::monomial(4, e, Int(1)));
  for (int q = 2; q <= 4; ++q) {
    MapRep j = build_jhat(q);
    for (const auto& c : j.comp) {
      CHECK(c.nterms() == 1);
      CHECK(c.total_degree() == q * q - 1);
      for (const auto& [exps, coeff] : c.terms())
        for (auto x : exps) CHECK(x <= 1);
    }
  }
}

TEST_CASE("all-ones matrix is fixed by J") {
  ProjPoint<Rat> ones = rat_point(3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
  auto img = apply_jhat_point(ones);
  REQUIRE(img.has_value());
  CHECK(proj_equal(*img, ones));
}

TEST_CASE("khat degrees match q^2-q+1") {
  for (int q = 2; q <= 4; ++q) {
    MapRep kh = build_khat(q);
    CHECK(kh.degree == q * q - q + 1);
    CHECK(kh.comp.size() == static_cast<std::size_t>(q) * q);
    for (const auto& c : kh.comp) {
      CHECK(c.total_degree() == q * q - q + 1);
      CHECK(c.is_homogeneous());
    }
  }
}

TEST_CASE("khat construction routes agree") {
  for (int q = 2; q <= 4; ++q) {
    MapRep a = build_khat(q), b = khat_closed_form(q);
    for (std::size_t k = 0; k < a.comp.size(); ++k) CHECK(a.comp[k] == b.comp[k]);
  }
}

TEST_CASE("no single variable divides every khat component") {
  for (int q = 2; q <= 4; ++q) {
    MapRep kh = build_khat(q);
    for (int v = 0; v < q * q; ++v) {
      bool divides_all = true;
      for (const auto& c : kh.comp)
        if (!c.variable_divides(v)) { divides_all = false; break; }
      CHECK(!divides_all);
    }
  }
}

TEST_CASE("J at a point with one zero entry") {
  std::uint64_t p = random_prime(61, 3);
  SplitMix64 g(8);
  ProjPoint<Fp> x = random_fp_point(3, p, g);
  x.at(1, 2) = Fp(0, p);
  auto img = apply_jhat_point(x);
  REQUIRE(img.has_value());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(img->at(i, j).is_zero() == !(i == 1 && j == 2));
}

TEST_CASE("I is indeterminate exactly on rank <= q-2") {
  std::uint64_t p = random_prime(61, 4);
  SplitMix64 g(9);
  // rank-1 point at q=3 sits in R_(q-2)
  VecX<Fp> lam(3), nu(3);
  for (int i = 0; i < 3; ++i) {
    lam(i) = Fp(g.uniform(1, p - 1), p);
    nu(i) = Fp(g.uniform(1, p - 1), p);
  }
  ProjPoint<Fp> x = ProjPoint<Fp>::from_matrix(outer<Fp>(lam, nu));
  CHECK(!apply_ihat_point(x).has_value());
  CHECK(!eval_map(build_ihat(3), x).has_value());
}

TEST_CASE("K pointwise equals I after J") {
  SplitMix64 g(10);
  for (int q = 3; q <= 5; ++q) {
    std::uint64_t p = random_prime(61, 100 + static_cast<std::uint64_t>(q));
    for (int trial = 0; trial < 10; ++trial) {
      ProjPoint<Fp> x = random_fp_point(q, p, g);
      auto jx = apply_jhat_point(x);
      REQUIRE(jx.has_value());
      auto ijx = apply_ihat_point(*jx);
      auto kx = apply_khat_point(x);
      REQUIRE(ijx.has_value() == kx.has_value());
      if (kx) CHECK(proj_equal(*kx, *ijx));
    }
  }
}

TEST_CASE("symbolic khat agrees with the point route") {
  SplitMix64 g(12);
  for (int q = 2; q <= 4; ++q) {
    std::uint64_t p = random_prime(61, 55 + static_cast<std::uint64_t>(q));
    const MapRep& kh = khat_cached(q);
    for (int trial = 0; trial < 10; ++trial) {
      ProjPoint<Fp> x = random_fp_point(q, p, g);
      auto sym = eval_map(kh, x);
      auto pt = apply_khat_point(x);
      REQUIRE(sym.has_value());
      REQUIRE(pt.has_value());
      CHECK(proj_equal(*sym, *pt));
    }
  }
}

TEST_CASE("involutivity of J and I on generic points") {
  SplitMix64 g(14);
  for (int q = 2; q <= 5; ++q) {
    std::uint64_t p = random_prime(61, 200 + static_cast<std::uint64_t>(q));
    for (int trial = 0; trial < 25; ++trial) {
      ProjPoint<Fp> x = random_fp_point(q, p, g);
      auto jj = apply_jhat_point(*apply_jhat_point(x));
      REQUIRE(jj.has_value());
      CHECK(proj_equal(*jj, x));
      auto ix = apply_ihat_point(x);
      if (!ix) continue;  // singular sample
      auto ii = apply_ihat_point(*ix);
      REQUIRE(ii.has_value());
      CHECK(proj_equal(*ii, x));
    }
    for (int trial = 0; trial < 10; ++trial) {
      ProjPoint<Rat> x = random_rat_point(q, g, 100);
      auto jj = apply_jhat_point(*apply_jhat_point(x));
      REQUIRE(jj.has_value());
      CHECK(proj_equal(*jj, x));
      auto ix = apply_ihat_point(x);
      if (!ix) continue;
      auto ii = apply_ihat_point(*ix);
      REQUIRE(ii.has_value());
      CHECK(proj_equal(*ii, x));
    }
  }
}

TEST_CASE("rank facts: outer products and adjugates") {
  SplitMix64 g(15);
  CHECK(outer<Rat>((VecX<Rat>(2) << Rat(1), Rat(2)).finished(),
                   (VecX<Rat>(2) << Rat(1), Rat(3)).finished()) ==
        MatX<Rat>((MatX<Rat>(2, 2) << Rat(1), Rat(3), Rat(2), Rat(6)).finished()));
  for (int q = 3; q <= 5; ++q) {
    std::uint64_t p = random_prime(61, 300 + static_cast<std::uint64_t>(q));
    MatX<Fp> id(q, q);
    id.setZero();
    for (int i = 0; i < q; ++i) id(i, i) = Fp(1, p);
    CHECK(rank<Fp>(id) == q);
    for (int trial = 0; trial < 10; ++trial) {
      // random rank-(q-1) matrix as a product of q x (q-1) and (q-1) x q
      MatX<Fp> a(q, q - 1), b(q - 1, q);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j + 1 < q; ++j) a(i, j) = Fp(g.uniform(0, p - 1), p);
      for (int i = 0; i + 1 < q; ++i)
        for (int j = 0; j < q; ++j) b(i, j) = Fp(g.uniform(0, p - 1), p);
      MatX<Fp> m = a * b;
      if (rank<Fp>(m) != q - 1) continue;
      CHECK(rank<Fp>(adjugate<Fp>(m)) == 1);
    }
    // zero vector rejected
    VecX<Fp> z(q), w(q);
    for (int i = 0; i < q; ++i) {
      z(i) = Fp(0, p);
      w(i) = Fp(1, p);
    }
    CHECK_THROWS_AS(outer<Fp>(z, w), degenerate_input);
  }
}

TEST_CASE("chi scaling") {
  SplitMix64 g(16);
  std::uint64_t p = random_prime(61, 21);
  ProjPoint<Fp> x = random_fp_point(3, p, g);
  CHECK(proj_equal(chi_scale(x, Fp(1, p), 0), x));
  Fp t(g.uniform(2, p - 1), p);
  ProjPoint<Fp> back = chi_scale(chi_scale(x, t, 1), t.inv(), 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.at(i, j) == x.at(i, j));
  CHECK_THROWS_AS(chi_scale(x, Fp(0, p), 0), degenerate_input);
}

TEST_CASE("row and column swaps") {
  SplitMix64 g(18);
  std::uint64_t p = random_prime(61, 22);
  ProjPoint<Fp> x = random_fp_point(3, p, g);
  CHECK(proj_equal(permute(permute(x, SwapKind::Rows, 0, 2), SwapKind::Rows, 0, 2), x));
  // J commutes with row swaps
  auto lhs = apply_jhat_point(permute(x, SwapKind::Rows, 0, 1));
  auto rhs = apply_jhat_point(x);
  REQUIRE(lhs.has_value());
  REQUIRE(rhs.has_value());
  CHECK(proj_equal(*lhs, permute(*rhs, SwapKind::Rows, 0, 1)));
  // rho(I(x)) = I(gamma(x))
  auto ix = apply_ihat_point(x);
  REQUIRE(ix.has_value());
  auto igx = apply_ihat_point(permute(x, SwapKind::Cols, 1, 2));
  REQUIRE(igx.has_value());
  CHECK(proj_equal(permute(*ix, SwapKind::Rows, 1, 2), *igx));
  CHECK_THROWS_AS(permute(x, SwapKind::Rows, 0, 5), degenerate_input);
}

TEST_CASE("khat point route falls back to the symbolic map on zero entries") {
  std::uint64_t p = random_prime(61, 26);
  SplitMix64 g(20);
  ProjPoint<Fp> x = random_fp_point(3, p, g);
  x.at(0, 1) = Fp(0, p);
  auto via_point = apply_khat_point(x);
  auto via_symbolic = eval_map(khat_cached(3), x);
  REQUIRE(via_point.has_value());
  REQUIRE(via_symbolic.has_value());
  CHECK(proj_equal(*via_point, *via_symbolic));
  // beyond the symbolic cap the zero-entry case is out of scope
  ProjPoint<Fp> big = random_fp_point(5, p, g);
  big.at(2, 2) = Fp(0, p);
  CHECK_THROWS_AS(apply_khat_point(big), scope_error);
}

TEST_CASE("khat evaluation at a rank-1 point is indeterminate for q >= 3") {
  std::uint64_t p = random_prime(61, 25);
  SplitMix64 g(19);
  VecX<Fp> lam(3), nu(3);
  for (int i = 0; i < 3; ++i) {
    lam(i) = Fp(g.uniform(1, p - 1), p);
    nu(i) = Fp(g.uniform(1, p - 1), p);
  }
  ProjPoint<Fp> x = ProjPoint<Fp>::from_matrix(outer<Fp>(lam, nu));
  CHECK(!apply_khat_point(x).has_value());
}

TEST_SUITE_END();
