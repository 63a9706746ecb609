#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "firecp/process.hpp"
#include "firecp/stats.hpp"

using namespace firecp;

TEST_CASE("condition (1) report", "[process]") {
  const auto pass = check_condition_1(4, 8, 2, 1, 1.65);
  REQUIRE_THAT(pass.lhs1, Catch::Matchers::WithinAbs(8.0 / 3.0, 1e-12));
  REQUIRE(pass.pass1);
  REQUIRE_THAT(pass.lhs2, Catch::Matchers::WithinAbs(2.0, 1e-12));
  REQUIRE(pass.pass2);
  REQUIRE(pass.pass);

  const auto fail = check_condition_1(2, 8, 2, 1, 1.65);
  REQUIRE(fail.pass1);
  REQUIRE_FALSE(fail.pass2);
  REQUIRE_FALSE(fail.pass);
  REQUIRE_THAT(fail.gamma, Catch::Matchers::WithinAbs(4.0, 1e-12));

  REQUIRE_THROWS_AS(check_condition_1(1, 1, 0, 1, 1.0), ConfigError);
  REQUIRE_THROWS_AS(check_condition_1(1, 1, 1, 1, 0.0), ConfigError);
}

TEST_CASE("variant validation", "[process]") {
  ProcessSpec spec;
  spec.width = spec.height = 8;
  spec.variant = Variant::Richardson;
  spec.params.beta1 = 1.0;
  spec.params.delta1 = 0.5;
  REQUIRE_THROWS_AS(spec.validate(), ConfigError);
  spec.params.delta1 = 0.0;
  REQUIRE_NOTHROW(spec.validate());

  spec.variant = Variant::Contact;
  spec.params.delta1 = 1.0;
  spec.params.beta2 = 2.0;
  REQUIRE_THROWS_AS(spec.validate(), ConfigError);

  spec.variant = Variant::ZetaFlip;
  spec.params.delta0 = 0.1;
  REQUIRE_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("richardson never loses occupied sites", "[process]") {
  ProcessSpec spec;
  spec.variant = Variant::Richardson;
  spec.width = spec.height = 64;
  spec.params.beta1 = 2.0;
  spec.init.mode = InitSpec::Mode::SingleCenter;
  const auto proc = make_process(spec);
  std::int64_t last = 1;
  auto on_event = [&](const Event&, const Lattice& lat) {
    const auto n = lat.count(SiteState::One);
    REQUIRE(n >= last);
    last = n;
  };
  const auto traj = proc.run(StopSpec{12.0}, {}, 99, on_event);
  REQUIRE(traj.events > 100);
  REQUIRE_FALSE(traj.extinct1.has_value());
}

TEST_CASE("flip process reaches the two-state stationary density", "[process]") {
  // With no 2's present, every site flips independently; the stationary
  // occupied fraction is beta1 / (beta1 + delta1).
  ProcessSpec spec;
  spec.variant = Variant::ZetaFlip;
  spec.width = spec.height = 128;
  spec.params.beta1 = 3.0;
  spec.params.delta1 = 1.0;
  const auto proc = make_process(spec);
  ObserverSpec obs;
  obs.sample_times = {20.0};
  const auto traj = proc.run(StopSpec{20.0}, obs, 5);
  const double n = 128.0 * 128.0;
  const double pi = 3.0 / 4.0;
  const double sigma = std::sqrt(pi * (1 - pi) / n);
  REQUIRE(std::abs(traj.samples.back().n1 / n - pi) < 4.0 * sigma);
}

TEST_CASE("flip process: a dying 2 rejoins the flip pool", "[process]") {
  ProcessSpec spec;
  spec.variant = Variant::ZetaFlip;
  spec.width = spec.height = 16;
  spec.params.beta1 = 1.0;
  spec.params.delta1 = 1.0;
  spec.params.beta2 = 0.0;
  spec.params.delta2 = 5.0;
  spec.init.mode = InitSpec::Mode::Full;
  spec.init.fill_type = SiteState::Two;
  const auto proc = make_process(spec);
  ObserverSpec obs;
  obs.sample_times = {30.0};
  const auto traj = proc.run(StopSpec{30.0}, obs, 6);
  // All 2's are gone and the vacated sites now flip: density of 1's near 1/2.
  REQUIRE(traj.extinct2.has_value());
  const double rho1 = traj.samples.back().n1 / 256.0;
  REQUIRE(rho1 > 0.3);
  REQUIRE(rho1 < 0.7);
}

TEST_CASE("mix initial state respects densities and determinism", "[process]") {
  ProcessSpec spec;
  spec.variant = Variant::TwoTypeFire;
  spec.width = spec.height = 64;
  spec.params.beta1 = 1.0;
  spec.params.delta1 = 1.0;
  spec.params.beta2 = 1.0;
  spec.params.delta2 = 1.0;
  spec.init.mode = InitSpec::Mode::Mix;
  spec.init.density1 = 0.2;
  spec.init.density2 = 0.3;
  const auto proc = make_process(spec);
  Rng rng1(7), rng2(7);
  const auto a = proc.make_lattice(rng1);
  const auto b = proc.make_lattice(rng2);
  REQUIRE(a.count(SiteState::One) == b.count(SiteState::One));
  const double n = 64.0 * 64.0;
  REQUIRE(std::abs(a.count(SiteState::One) / n - 0.2) < 0.05);
  REQUIRE(std::abs(a.count(SiteState::Two) / n - 0.3) < 0.05);

  spec.init.density2 = 0.9;
  REQUIRE_THROWS_AS(spec.validate(), ConfigError);
}
