#include <doctest.h>

#include <filesystem>

#include <kdeg/cache.hpp>
#include <kdeg/picard.hpp>
#include <kdeg/probe.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("probe");

TEST_CASE("content reduction over a field") {
  std::uint64_t p = random_prime(61, 33);
  UPoly<Fp> s(std::vector<Fp>{Fp(0, p), Fp(1, p)});
  UPoly<Fp> f(std::vector<Fp>{Fp(3, p), Fp(1, p)});
  UPoly<Fp> g(std::vector<Fp>{Fp(5, p), Fp(2, p)});
  PolyTuple<Fp> t{s * f, s * g};
  CHECK(tuple_content_reduce(t) == 1);
  CHECK(t[0] == f);
  CHECK(t[1] == g);
  PolyTuple<Fp> coprime{f, g};
  CHECK(tuple_content_reduce(coprime) == 0);
  PolyTuple<Fp> zeros{UPoly<Fp>(), UPoly<Fp>()};
  CHECK_THROWS_AS(tuple_content_reduce(zeros), degenerate_input);
}

TEST_CASE("composition tuple on a random line drops the degree-9 content at q=3") {
  std::uint64_t p = random_prime(61, 41);
  SplitMix64 g(77);
  MapRep ih = build_ihat(3), jh = build_jhat(3);
  ProjPoint<Fp> a = random_fp_point(3, p, g), b = random_fp_point(3, p, g);
  PolyTuple<Fp> tuple(9);
  for (std::size_t k = 0; k < 9; ++k) {
    MPoly composed = ih.comp[k].substitute(jh.comp);  // degree 16 components
    tuple[k] = composed.restrict_line(a.coords_vec(), b.coords_vec());
  }
  CHECK(max_tuple_degree(tuple) == 16);
  int removed = tuple_content_reduce(tuple);
  CHECK(removed == 9);  // Pi^(q-2) restricted to the line
  CHECK(max_tuple_degree(tuple) == 7);
}

TEST_CASE("removed content degree balances the step degree drop") {
  std::uint64_t p = random_prime(61, 47);
  SplitMix64 g(81);
  for (int q = 3; q <= 4; ++q) {
    ProjPoint<Fp> a = random_fp_point(q, p, g), b = random_fp_point(q, p, g);
    PolyTuple<Fp> tuple = line_tuple(a, b);
    long map_deg = q * q - q + 1;
    int prev = 1;
    for (int n = 1; n <= 3; ++n) {
      PolyTuple<Fp> next = kstep_interp(q, tuple, p);
      int removed = tuple_content_reduce(next);
      int d = max_tuple_degree(next);
      CHECK(removed >= 0);
      CHECK(removed == static_cast<int>(map_deg) * prev - d);
      prev = d;
      tuple = std::move(next);
    }
  }
}

TEST_CASE("explicit base points drive the first probe run") {
  ProjPoint<Rat> a, b;
  a.q = b.q = 3;
  a.x.resize(9);
  b.x.resize(9);
  long av[] = {3, 1, 4, 1, 5, 9, 2, 6, 5};
  long bv[] = {8, 9, 7, 9, 3, 2, 3, 8, 4};
  for (int k = 0; k < 9; ++k) {
    a.x(k) = Rat(av[k]);
    b.x(k) = Rat(bv[k]);
  }
  ProbeOptions opt;
  opt.line = std::make_pair(a, b);
  auto recs = probe_degrees(3, 2, 31337, opt);
  CHECK(recs[1].degree == Int(7));
  CHECK(recs[2].degree == Int(16));
}

TEST_CASE("symbolic and interpolated K-steps agree") {
  SplitMix64 g(91);
  for (int q = 3; q <= 5; ++q) {
    std::uint64_t p = random_prime(61, 400 + static_cast<std::uint64_t>(q));
    ProjPoint<Fp> a = random_fp_point(q, p, g), b = random_fp_point(q, p, g);
    PolyTuple<Fp> tuple = line_tuple(a, b);
    PolyTuple<Fp> s = kstep_symbolic<Fp>(q, tuple);
    PolyTuple<Fp> i = kstep_interp(q, tuple, p);
    REQUIRE(s.size() == i.size());
    for (std::size_t k = 0; k < s.size(); ++k) CHECK(s[k] == i[k]);
  }
}

TEST_CASE("probe anchors at n=1 with degree q^2-q+1") {
  for (int q = 2; q <= 5; ++q) {
    auto recs = probe_degrees(q, 1, 1234);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].degree == Int(1));
    CHECK(recs[1].degree == Int(static_cast<long>(q * q - q + 1)));
    CHECK(recs[1].agreement >= 2);
  }
}

TEST_CASE("probe matches the Picard prediction at q=3 up to n=3") {
  auto probe = probe_degrees(3, 3, 99);
  auto picard = predicted_degrees(3, 3);
  for (int n = 0; n <= 3; ++n)
    CHECK(probe[static_cast<std::size_t>(n)].degree == picard[static_cast<std::size_t>(n)].degree);
}

TEST_CASE("probes are deterministic given seed") {
  auto a = probe_degrees(3, 2, 2024);
  auto b = probe_degrees(3, 2, 2024);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].degree == b[i].degree);
    CHECK(a[i].seeds == b[i].seeds);
    CHECK(a[i].primes == b[i].primes);
  }
}

TEST_CASE("rational probe certifies the modular result at q=3") {
  ProbeOptions opt;
  opt.field.modular = false;
  auto rational = probe_degrees(3, 2, 5150, opt);
  auto modular = probe_degrees(3, 2, 5150);
  for (std::size_t i = 0; i < rational.size(); ++i) {
    CHECK(rational[i].degree == modular[i].degree);
    CHECK(rational[i].primes == std::vector<std::uint64_t>{0, 0});
  }
}

TEST_CASE("probe records flow through the cache") {
  auto dir = std::filesystem::temp_directory_path() / "kdeg_test_cache";
  std::filesystem::remove_all(dir);
  DegreeCache cache(dir / "records.jsonl");
  ProbeOptions opt;
  opt.cache = &cache;
  auto first = probe_degrees(3, 2, 777, opt);
  CHECK(cache.size() == 6);  // 2 runs x n=0..2
  // a fresh instance reads the same file and serves lookups
  DegreeCache reread(dir / "records.jsonl");
  ProbeOptions opt2;
  opt2.cache = &reread;
  auto second = probe_degrees(3, 2, 777, opt2);
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].degree == second[i].degree);
  CHECK(reread.size() == 6);  // nothing recomputed or duplicated
  reread.clear();
  CHECK(!std::filesystem::exists(dir / "records.jsonl"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("estimate_delta diagnostics") {
  auto mk = [](int n, long d) {
    DegreeRecord r;
    r.q = 5;
    r.n = n;
    r.degree = Int(d);
    r.method = "picard";
    return r;
  };
  std::vector<DegreeRecord> recs{mk(1, 21), mk(2, 206), mk(3, 1531)};
  auto est = estimate_delta(recs);
  CHECK(est.last_ratio == Rat(Int(1531), Int(206)));
  std::vector<DegreeRecord> flat{mk(1, 4), mk(2, 4), mk(3, 4)};
  CHECK(estimate_delta(flat).last_ratio == Rat(1));
  std::vector<DegreeRecord> q4{mk(0, 1), mk(1, 13), mk(2, 65), mk(3, 189), mk(4, 417)};
  auto est4 = estimate_delta(q4);
  CHECK(est4.last_ratio == Rat(Int(417), Int(189)));
  CHECK(est4.last_ratio < Rat(Int(65), Int(13)));
  CHECK_THROWS_AS(estimate_delta({mk(1, 1), mk(2, 2)}), degenerate_input);
  CHECK_THROWS_AS(estimate_delta({mk(1, 1), mk(3, 2), mk(4, 3)}), degenerate_input);
}

TEST_CASE("q=2 is an involution and sits outside the stable range") {
  // K_2 squares to the identity projectively: probed degrees alternate
  // 1, 3, 1, 3.  The pullback model is only stable from q = 3 on, so its
  // q=2 prediction (1, 3, 5, ...) legitimately diverges from the probe
  // beyond the n = 1 anchor.
  auto probe = probe_degrees(2, 3, 424242);
  CHECK(probe[0].degree == Int(1));
  CHECK(probe[1].degree == Int(3));
  CHECK(probe[2].degree == Int(1));
  CHECK(probe[3].degree == Int(3));
  auto picard = predicted_degrees(2, 2);
  CHECK(picard[1].degree == Int(3));
  CHECK(picard[2].degree == Int(5));
  CHECK(symbolic_degree_oracle(2, 2, 8).record.degree == Int(1));
}

TEST_CASE("symbolic oracle: composition identity and n=2 plane degree") {
  auto r1 = symbolic_degree_oracle(3, 1, 11);
  CHECK(r1.identity_ok);
  CHECK(r1.record.degree == Int(7));
  CHECK(r1.common_factor_degree == Int(9));
  auto r2 = symbolic_degree_oracle(2, 1, 11);
  CHECK(r2.record.degree == Int(3));
  auto r3 = symbolic_degree_oracle(3, 2, 11);
  CHECK(r3.record.degree == Int(16));
  CHECK_THROWS_AS(symbolic_degree_oracle(4, 1, 11), scope_error);
  CHECK_THROWS_AS(symbolic_degree_oracle(3, 3, 11), scope_error);
}

TEST_SUITE_END();
