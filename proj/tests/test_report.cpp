#include <doctest.h>

#include <kdeg/report.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("report");

TEST_CASE("matrix literals: nested rows of integers and fractions") {
  ProjPoint<Rat> p = parse_point_json("[[1, 2], [\"1/2\", 4]]");
  CHECK(p.q == 2);
  CHECK(p.at(0, 0) == Rat(1));
  CHECK(p.at(1, 0) == Rat(Int(1), Int(2)));
  CHECK(p.at(1, 1) == Rat(4));
}

TEST_CASE("matrix literals: flat arrays") {
  ProjPoint<Rat> p = parse_point_json("[1,2,3,4,5,6,7,8,9]");
  CHECK(p.q == 3);
  CHECK(p.at(2, 2) == Rat(9));
}

TEST_CASE("matrix literals: malformed input") {
  CHECK_THROWS_AS(parse_point_json("[[1,2],[3]]"), degenerate_input);
  CHECK_THROWS_AS(parse_point_json("[1,2,3]"), degenerate_input);
  CHECK_THROWS_AS(parse_point_json("[0,0,0,0]"), degenerate_input);
  CHECK_THROWS_AS(parse_point_json("[[true,2],[3,4]]"), degenerate_input);
}

TEST_CASE("degree records serialize with stable fields") {
  DegreeRecord r;
  r.q = 3;
  r.n = 2;
  r.degree = Int(16);
  r.method = "probe";
  r.seeds = {1, 2};
  r.primes = {11, 13};
  r.agreement = 2;
  Json j = to_json(r);
  CHECK(j.dump() ==
        "{\"q\":3,\"n\":2,\"degree\":\"16\",\"method\":\"probe\",\"seeds\":[1,2],"
        "\"primes\":[11,13],\"agreement\":2}");
}

TEST_CASE("csv degree tables") {
  DegreeRecord r;
  r.q = 5;
  r.n = 1;
  r.degree = Int(21);
  r.method = "picard";
  r.agreement = 1;
  std::string csv = degree_table_csv({r});
  CHECK(csv == "q,n,degree,method,agreement,seeds,primes\n5,1,21,picard,1,,\n");
}

TEST_SUITE_END();
