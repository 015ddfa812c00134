#include <doctest.h>

#include <kdeg/charts.hpp>

using namespace kdeg;

TEST_SUITE_BEGIN("charts");

TEST_CASE("chart round trips are exact") {
  for (int q = 3; q <= 5; ++q) {
    ChartReport rep = chart_roundtrip_check(q, 100, 42);
    CHECK(rep.ok());
    CHECK(rep.failures == 0);
    CHECK(rep.trials == 300);
  }
}

TEST_CASE("inversion outside the chart domain throws") {
  ProjPoint<Rat> y;
  y.q = 3;
  y.x.resize(9);
  for (int k = 0; k < 9; ++k) y.x(k) = Rat(k == 0 ? 0 : k + 1);
  CHECK_THROWS_AS(Pi1Chart::invert(y, 1, 1), chart_out_of_domain);  // y(0,0) = 0
  ProjPoint<Rat> z = y;
  z.x(0) = Rat(1);
  z.x(4) = Rat(0);  // y(1,1) = 0 blocks the pi2/pi3 normalization
  CHECK_THROWS_AS(Pi2Chart::invert(z, 1, 1, 1), chart_out_of_domain);
  CHECK_THROWS_AS(Pi3Chart::invert(z, 1, 1, 1), chart_out_of_domain);
}

TEST_CASE("limit formula check (2.1), q=3") {
  ChartReport rep = prop21_limit_check(3, 4, 7);
  CHECK(rep.ok());
  CHECK(rep.passes == 4);
}

TEST_CASE("exceptional image check (3.1), q=3") {
  ChartReport rep = prop31_image_check(3, 3, 7);
  CHECK(rep.ok());
  CHECK(rep.trials == 27);  // 9 slots x 3 trials
  CHECK(rep.failures == 0);
}

TEST_CASE("homogeneity and chart valuation checks (4.x), q=3") {
  ChartReport rep = prop4_homogeneity_check(3, 10, 7);
  CHECK(rep.ok());
  CHECK(rep.failures == 0);
}

TEST_CASE("valuation orders along the three charts, q=3") {
  ChartReport rep = valuation_orders_check(3, 7);
  INFO("notes: ");
  for (const auto& n : rep.notes) INFO(n);
  CHECK(rep.ok());
}

TEST_SUITE_END();
