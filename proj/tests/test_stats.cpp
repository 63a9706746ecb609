#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "firecp/rng.hpp"
#include "firecp/stats.hpp"

using namespace firecp;

TEST_CASE("wilson interval brackets the point estimate", "[stats]") {
  const auto ci = wilson_interval(40, 100);
  REQUIRE(ci.lo < 0.4);
  REQUIRE(ci.hi > 0.4);
  const auto zero = wilson_interval(0, 50);
  REQUIRE(zero.lo == 0.0);
  REQUIRE(zero.hi > 0.0);
  const auto full = wilson_interval(50, 50);
  REQUIRE(full.hi == 1.0);
  REQUIRE(full.lo < 1.0);
}

TEST_CASE("moment accumulator merge matches sequential", "[stats]") {
  Rng rng(5);
  MomentAccumulator all, left, right;
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform() * 3.0 - 1.0;
    all.add(x);
    (i % 2 ? left : right).add(x);
  }
  MomentAccumulator merged = left;
  merged.merge(right);
  REQUIRE(merged.count() == all.count());
  REQUIRE_THAT(merged.mean(), Catch::Matchers::WithinAbs(all.mean(), 1e-12));
  REQUIRE_THAT(merged.variance(), Catch::Matchers::WithinRel(all.variance(), 1e-10));
}

TEST_CASE("ks statistic accepts exact exponential grid, rejects shifted", "[stats]") {
  // Build a sample that matches Exponential(1) quantiles exactly.
  const std::size_t n = 2000;
  std::vector<double> sample;
  for (std::size_t i = 0; i < n; ++i)
    sample.push_back(-std::log(1.0 - (i + 0.5) / n));
  auto cdf = [](double t) { return 1.0 - std::exp(-t); };
  REQUIRE(ks_statistic(sample, cdf) < ks_critical(1e-3, n));

  auto wrong = [](double t) { return 1.0 - std::exp(-2.0 * t); };
  REQUIRE(ks_statistic(sample, wrong) > ks_critical(1e-3, n));
}

TEST_CASE("normal and chi-square quantiles match tables", "[stats]") {
  REQUIRE_THAT(normal_quantile(0.999), Catch::Matchers::WithinAbs(3.090232, 1e-4));
  REQUIRE_THAT(normal_quantile(0.975), Catch::Matchers::WithinAbs(1.959964, 1e-4));
  // Wilson-Hilferty is approximate; table value for chi2(0.95, df=10) is 18.307.
  REQUIRE_THAT(chi_square_quantile(0.95, 10), Catch::Matchers::WithinAbs(18.307, 0.1));
  REQUIRE_THAT(chi_square_quantile(0.999, 7), Catch::Matchers::WithinRel(24.322, 0.01));
}

TEST_CASE("least squares recovers an exact line", "[stats]") {
  std::vector<double> x, y;
  for (int i = 0; i < 50; ++i) {
    x.push_back(i);
    y.push_back(3.5 * i - 2.0);
  }
  const auto fit = least_squares(x, y);
  REQUIRE_THAT(fit.slope, Catch::Matchers::WithinAbs(3.5, 1e-12));
  REQUIRE_THAT(fit.intercept, Catch::Matchers::WithinAbs(-2.0, 1e-9));
  REQUIRE_THAT(fit.r2, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("convex hull area of a square with interior points", "[stats]") {
  std::vector<std::pair<double, double>> pts = {
      {0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {1, 3}, {3, 1}};
  REQUIRE_THAT(convex_hull_area(pts), Catch::Matchers::WithinAbs(16.0, 1e-12));
}
