#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/rng.hpp"
#include "firecp/stats.hpp"

using namespace firecp;

namespace {
ProcessParams contact1(double beta, double delta) {
  ProcessParams p;
  p.beta1 = beta;
  p.delta1 = delta;
  return p;
}
}  // namespace

TEST_CASE("total rate arithmetic", "[engine]") {
  ProcessParams p;
  p.beta1 = 2.0;
  p.delta1 = 1.0;
  p.delta0 = 0.1;
  TwoTypeDynamics dyn(p);
  Lattice lat(10, 10, Boundary::Torus);
  lat.set_state(0, SiteState::One);
  lat.set_state(1, SiteState::One);
  lat.set_state(2, SiteState::One);
  REQUIRE_THAT(dyn.total_rate(lat), Catch::Matchers::WithinAbs(19.0, 1e-12));

  ProcessParams q;
  TwoTypeDynamics absorbing(q);
  Lattice empty(10, 10, Boundary::Torus);
  REQUIRE(absorbing.total_rate(empty) == 0.0);

  ProcessParams r;
  r.beta2 = 8.0;
  r.delta2 = 1.0;
  TwoTypeDynamics dyn2(r);
  Lattice one2(10, 10, Boundary::Torus);
  one2.set_state(5, SiteState::Two);
  REQUIRE_THAT(dyn2.total_rate(one2), Catch::Matchers::WithinAbs(9.0, 1e-12));
}

TEST_CASE("parameter validation", "[engine]") {
  ProcessParams p;
  p.beta1 = -1.0;
  REQUIRE_THROWS_AS(TwoTypeDynamics(p), ConfigError);
  ProcessParams q;
  q.delta0 = 0.1;
  q.fire_width = 0;
  REQUIRE_THROWS_AS(TwoTypeDynamics(q), ConfigError);
}

TEST_CASE("only clock is a death: step kills the lone particle", "[engine]") {
  Lattice lat(5, 5, Boundary::Torus);
  lat.set_state(lat.index(2, 2), SiteState::One);
  TwoTypeDynamics dyn(contact1(0.0, 1.0));
  Rng rng(4);
  double clock = 0.0;
  const auto ev = step(lat, dyn, clock, rng);
  REQUIRE(ev.has_value());
  REQUIRE(ev->kind == EventKind::Death1);
  REQUIRE(lat.count(SiteState::One) == 0);
  REQUIRE(clock > 0.0);
  // Now absorbing.
  REQUIRE(!step(lat, dyn, clock, rng).has_value());
}

TEST_CASE("suppressed births leave the state unchanged", "[engine]") {
  ProcessParams p;
  p.beta2 = 1.0;  // births only, no deaths: occupied set can only grow
  Lattice lat(3, 3, Boundary::Torus);
  lat.set_state(lat.index(0, 0), SiteState::Two);
  lat.set_state(lat.index(1, 0), SiteState::Two);
  TwoTypeDynamics dyn(p);
  Rng rng(8);
  double clock = 0.0;
  int suppressed = 0;
  for (int i = 0; i < 200 && suppressed == 0; ++i) {
    const auto before = lat.count(SiteState::Two);
    const auto ev = step(lat, dyn, clock, rng);
    REQUIRE(ev.has_value());
    if (ev->kind == EventKind::SuppressedBirth2) {
      REQUIRE(lat.count(SiteState::Two) == before);
      REQUIRE(lat.state(ev->target) != SiteState::Vacant);
      ++suppressed;
    } else {
      REQUIRE(ev->kind == EventKind::Birth2);
      REQUIRE(lat.count(SiteState::Two) == before + 1);
    }
  }
  REQUIRE(suppressed > 0);
}

TEST_CASE("fire-only dynamics clear one block", "[engine]") {
  ProcessParams p;
  p.delta0 = 0.5;
  p.fire_width = 2;
  Lattice lat(9, 9, Boundary::Torus);
  lat.fill(SiteState::One);
  TwoTypeDynamics dyn(p);
  Rng rng(15);
  double clock = 0.0;
  const auto ev = step(lat, dyn, clock, rng);
  REQUIRE(ev.has_value());
  REQUIRE(ev->kind == EventKind::Fire);
  REQUIRE(lat.count(SiteState::One) == 81 - 9);
}

TEST_CASE("extinction time of a lone particle is Exponential(delta)", "[engine]") {
  const double delta = 2.0;
  const int reps = 10000;
  MomentAccumulator acc;
  for (int r = 0; r < reps; ++r) {
    Rng rng(stream_seed(1234, r));
    Lattice lat(3, 3, Boundary::Torus);
    lat.set_state(lat.index(1, 1), SiteState::One);
    TwoTypeDynamics dyn(contact1(0.0, delta));
    StopSpec stop{100.0, ExtinctStop::TypeOne};
    const auto traj = run_until(lat, dyn, stop, {}, rng);
    REQUIRE(traj.extinct1.has_value());
    acc.add(*traj.extinct1);
  }
  const double sigma = (1.0 / delta) / std::sqrt(reps);
  REQUIRE(std::abs(acc.mean() - 1.0 / delta) < 3.0 * sigma);
}

TEST_CASE("inter-event exactness: KS against the exponential law", "[engine]") {
  // A single site with only a death clock: the first event time is
  // Exponential(delta) exactly.
  const double delta = 1.7;
  const int n = 20000;
  std::vector<double> times;
  times.reserve(n);
  for (int r = 0; r < n; ++r) {
    Rng rng(stream_seed(777, r));
    Lattice lat(2, 2, Boundary::Torus);
    lat.set_state(0, SiteState::One);
    TwoTypeDynamics dyn(contact1(0.0, delta));
    double clock = 0.0;
    const auto ev = step(lat, dyn, clock, rng);
    REQUIRE(ev.has_value());
    times.push_back(ev->time);
  }
  const double d = ks_statistic(times, [&](double t) { return 1.0 - std::exp(-delta * t); });
  REQUIRE(d < ks_critical(1e-3, times.size()));
}

TEST_CASE("empty lattice with fires never spawns anything", "[engine]") {
  ProcessParams p;
  p.beta1 = 3.0;
  p.delta1 = 1.0;
  p.delta0 = 1.0;
  p.fire_width = 2;
  Lattice lat(8, 8, Boundary::Torus);
  TwoTypeDynamics dyn(p);
  Rng rng(3);
  ObserverSpec obs;
  obs.sample_every = 1.0;
  const auto traj = run_until(lat, dyn, StopSpec{10.0}, obs, rng);
  REQUIRE(traj.samples.size() == 11);
  for (const auto& row : traj.samples) {
    REQUIRE(row.n1 == 0);
    REQUIRE(row.n2 == 0);
  }
  REQUIRE(traj.events > 0);  // fire clocks still ring
  REQUIRE(traj.extinct1.has_value());
  REQUIRE(*traj.extinct1 == 0.0);
}

TEST_CASE("identical seed and config give identical trajectories", "[engine]") {
  ProcessParams p;
  p.beta1 = 2.0;
  p.delta1 = 1.0;
  p.beta2 = 3.0;
  p.delta2 = 0.5;
  p.delta0 = 0.01;
  p.fire_width = 3;
  auto run_once = [&] {
    Rng rng(42);
    Lattice lat(16, 16, Boundary::Torus);
    for (int i = 0; i < 256; i += 7) lat.set_state(i, SiteState::One);
    for (int i = 3; i < 256; i += 11) lat.set_state(i, SiteState::Two);
    TwoTypeDynamics dyn(p);
    ObserverSpec obs;
    obs.sample_every = 0.25;
    return run_until(lat, dyn, StopSpec{5.0}, obs, rng, 42);
  };
  const auto a = run_once();
  const auto b = run_once();
  REQUIRE(a.events == b.events);
  REQUIRE(a.fires == b.fires);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    REQUIRE(a.samples[i].t == b.samples[i].t);
    REQUIRE(a.samples[i].n1 == b.samples[i].n1);
    REQUIRE(a.samples[i].n2 == b.samples[i].n2);
  }
}

TEST_CASE("count conservation per event kind", "[engine]") {
  ProcessParams p;
  p.beta1 = 2.0;
  p.delta1 = 1.0;
  p.beta2 = 2.0;
  p.delta2 = 1.0;
  p.delta0 = 0.02;
  p.fire_width = 2;
  Rng rng(5);
  Lattice lat(12, 12, Boundary::Torus);
  for (int i = 0; i < 144; i += 3) lat.set_state(i, SiteState::One);
  for (int i = 1; i < 144; i += 3) lat.set_state(i, SiteState::Two);
  TwoTypeDynamics dyn(p);

  std::int64_t n1 = lat.count(SiteState::One);
  std::int64_t n2 = lat.count(SiteState::Two);
  auto on_event = [&](const Event& ev, const Lattice& l) {
    const std::int64_t m1 = l.count(SiteState::One);
    const std::int64_t m2 = l.count(SiteState::Two);
    switch (ev.kind) {
      case EventKind::Birth1: REQUIRE(m1 == n1 + 1); REQUIRE(m2 == n2); break;
      case EventKind::Birth2: REQUIRE(m2 == n2 + 1); REQUIRE(m1 == n1); break;
      case EventKind::Death1: REQUIRE(m1 == n1 - 1); REQUIRE(m2 == n2); break;
      case EventKind::Death2: REQUIRE(m2 == n2 - 1); REQUIRE(m1 == n1); break;
      case EventKind::Fire: REQUIRE(m1 <= n1); REQUIRE(m2 <= n2); break;
      default: REQUIRE(m1 == n1); REQUIRE(m2 == n2); break;
    }
    // Registries agree with a brute-force recount.
    std::int64_t g1 = 0, g2 = 0;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(l.size()); ++i) {
      if (l.state(i) == SiteState::One) ++g1;
      if (l.state(i) == SiteState::Two) ++g2;
    }
    REQUIRE(g1 == m1);
    REQUIRE(g2 == m2);
    n1 = m1;
    n2 = m2;
  };
  run_until(lat, dyn, StopSpec{3.0}, {}, rng, 5, on_event);
}
