#include <doctest.h>

#include <kdeg/linalg.hpp>
#include <kdeg/rng.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("scalars");

TEST_CASE("rational arithmetic round-trips exactly") {
  SplitMix64 g(7);
  for (int i = 0; i < 200; ++i) {
    Rat a(Int(static_cast<long>(g.uniform(1, 1000000))), Int(static_cast<long>(g.uniform(1, 1000000))));
    Rat c(Int(static_cast<long>(g.uniform(1, 1000000))), Int(static_cast<long>(g.uniform(1, 1000000))));
    CHECK((a + c) - c == a);
    CHECK((a * c) / c == a);
  }
}

TEST_CASE("rationals stay canonical") {
  Rat r(Int(4), Int(-6));
  CHECK(r.num() == Int(-2));
  CHECK(r.den() == Int(3));
  CHECK(parse_rat("10/4") == Rat(Int(5), Int(2)));
  CHECK(parse_rat("1e-10") == Rat(Int(1), pow(Int(10), 10)));
  CHECK(parse_rat("0.25") == Rat(Int(1), Int(4)));
  CHECK(parse_rat("-3") == Rat(Int(-3), Int(1)));
}

TEST_CASE("prime field arithmetic") {
  std::uint64_t p = random_prime(61, 42);
  CHECK(p >= (1ULL << 60));
  CHECK(p < (1ULL << 63));
  Fp a(123456789, p), b(987654321, p);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK(a.pow(p - 1) == Fp(1, p));  // Fermat
  CHECK((a - a).is_zero());
}

TEST_CASE("literal elements promote into the operand's field") {
  std::uint64_t p = random_prime(61, 1);
  Fp a(5, p);
  CHECK(Fp(0) + a == a);
  CHECK(Fp(1) * a == a);
  CHECK((Fp(-1) * a) + a == Fp(0, p));
}

TEST_CASE("mixing two moduli throws") {
  std::uint64_t p1 = random_prime(61, 5), p2 = random_prime(61, 6);
  REQUIRE(p1 != p2);
  Fp a(3, p1), b(4, p2);
  CHECK_THROWS_AS(a + b, domain_mismatch);
  CHECK_THROWS_AS(a * b, domain_mismatch);
}

TEST_CASE("batch inversion") {
  std::uint64_t p = random_prime(61, 9);
  SplitMix64 g(3);
  std::vector<Fp> xs;
  for (int i = 0; i < 57; ++i) xs.emplace_back(g.uniform(1, p - 1), p);
  std::vector<Fp> inv = xs;
  batch_inverse(inv);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i] * inv[i] == Fp(1, p));
}

TEST_CASE("Eigen products over Int") {
  MatX<Int> a = int_matrix({{1, 2}, {3, 4}});
  MatX<Int> b = a * a;
  CHECK(b(0, 0) == Int(7));
  CHECK(b(1, 1) == Int(22));
  VecX<Int> v(2);
  v << Int(1), Int(1);
  VecX<Int> w = a * v;
  CHECK(w(0) == Int(3));
  CHECK(w(1) == Int(7));
}

TEST_CASE("deterministic seed derivation") {
  CHECK(derive_seed(42, 1) == derive_seed(42, 1));
  CHECK(derive_seed(42, 1) != derive_seed(42, 2));
  CHECK(random_prime(61, 42) == random_prime(61, 42));
}

TEST_SUITE_END();
