#include <doctest.h>

#include <kdeg/roots.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("roots");

namespace {

// (a + b sqrt(5)) / c bracketed through integer square roots: an oracle
// independent of the Sturm machinery.
RealInterval golden_like(long a, long b, long c, int digits) {
  Int scale = pow(Int(10), static_cast<unsigned long>(digits));
  Int s = isqrt(Int(5) * scale * scale);  // s <= sqrt(5)*10^d < s+1
  Rat lo = (Rat(a) + Rat(b) * Rat(s, scale)) / Rat(c);
  Rat hi = (Rat(a) + Rat(b) * Rat(s + Int(1), scale)) / Rat(c);
  return {lo, hi};
}

}  // namespace

TEST_CASE("largest real root of lambda^2 - 7 lambda + 1") {
  auto p = upoly_from_longs<Int>({1, -7, 1});
  Rat prec = parse_rat("1e-10");
  auto iv = isolate_max_real_root(p, prec);
  REQUIRE(iv.has_value());
  CHECK(iv->width() <= prec);
  RealInterval truth = golden_like(7, 3, 2, 14);  // (7 + 3 sqrt 5)/2
  CHECK(iv->hi >= truth.lo);
  CHECK(iv->lo <= truth.hi);
  CHECK(iv->to_double() == doctest::Approx(6.854101966249685).epsilon(1e-9));
}

TEST_CASE("no real root for lambda^2 + lambda + 1") {
  CHECK(!isolate_max_real_root(upoly_from_longs<Int>({1, 1, 1}), Rat(Int(1), Int(1000))).has_value());
}

TEST_CASE("double root at 1") {
  auto iv = isolate_max_real_root(upoly_from_longs<Int>({1, -2, 1}), parse_rat("1e-6"));
  REQUIRE(iv.has_value());
  CHECK(iv->contains(Rat(1)));
  CHECK(iv->width() <= parse_rat("1e-6"));
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(isolate_max_real_root(UPoly<Int>(), Rat(1)), degenerate_input);
  CHECK_THROWS_AS(max_root_modulus(UPoly<Int>(), Rat(1)), degenerate_input);
}

TEST_CASE("max modulus of unit-circle roots is exactly 1") {
  auto iv = max_root_modulus(upoly_from_longs<Int>({1, 1, 1}), parse_rat("1e-8"));
  REQUIRE(iv.has_value());
  CHECK(iv->contains(Rat(1)));
  CHECK(iv->width() <= parse_rat("1e-8"));
}

TEST_CASE("max modulus picks the dominant real root") {
  auto iv = max_root_modulus(upoly_from_longs<Int>({1, -7, 1}), parse_rat("1e-10"));
  REQUIRE(iv.has_value());
  RealInterval truth = golden_like(7, 3, 2, 14);
  CHECK(iv->hi >= truth.lo);
  CHECK(iv->lo <= truth.hi);
}

TEST_CASE("max modulus of a linear polynomial") {
  auto iv = max_root_modulus(upoly_from_longs<Int>({-5, 1}), parse_rat("1e-12"));
  REQUIRE(iv.has_value());
  CHECK(iv->contains(Rat(5)));
}

TEST_CASE("rational sqrt brackets") {
  RealInterval iv = rational_sqrt(Rat(2), parse_rat("1e-12"));
  CHECK(iv.width() <= parse_rat("1e-12"));
  CHECK(iv.lo * iv.lo <= Rat(2));
  CHECK(iv.hi * iv.hi >= Rat(2));
}

TEST_CASE("Sturm counting on a squarefree polynomial") {
  // roots of (x-1)(x-2)(x+3)
  UPoly<Int> f = upoly_from_longs<Int>({-1, 1}) * upoly_from_longs<Int>({-2, 1}) *
                 upoly_from_longs<Int>({3, 1});
  auto chain = sturm_chain(f);
  CHECK(sturm_count(chain, Rat(-4), Rat(3)) == 3);
  CHECK(sturm_count(chain, Rat(0), Rat(3)) == 2);
  CHECK(sturm_count(chain, Rat(Int(3), Int(2)), Rat(3)) == 1);
}

TEST_SUITE_END();
