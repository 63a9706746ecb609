// Rough throughput probe for the event loop at coexistence-run scale.

#include <chrono>
#include <cstdio>

#include "firecp/engine.hpp"
#include "firecp/kernel.hpp"
#include "firecp/lattice.hpp"
#include "firecp/rng.hpp"

using namespace firecp;

int main() {
  ProcessParams p;
  p.beta1 = 30.0;
  p.delta1 = 10.0;
  p.beta2 = 5.5;
  p.delta2 = 1.0;
  p.delta0 = 1.8e-4;
  p.fire_width = 8;
  const auto [c1, c2] = KernelTable::normalize_weights(0.7, 0.3, 1.0, 168);
  p.kernel1 = KernelTable::power(c1, c2, 1.0, 168);

  Lattice lat(512, 512, Boundary::Torus);
  Rng rng(2);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(lat.size()); ++i) {
    const double u = rng.uniform();
    if (u < 0.05)
      lat.set_state(i, SiteState::One);
    else if (u < 0.60)
      lat.set_state(i, SiteState::Two);
  }
  TwoTypeDynamics dyn(p);

  const auto t0 = std::chrono::steady_clock::now();
  const auto traj = run_until(lat, dyn, StopSpec{20.0}, {}, rng, 2);
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  std::printf("events=%llu  time=%.2fs  rate=%.2f Mev/s  n1=%lld n2=%lld fires=%llu\n",
              static_cast<unsigned long long>(traj.events), secs,
              traj.events / secs / 1e6,
              static_cast<long long>(lat.count(SiteState::One)),
              static_cast<long long>(lat.count(SiteState::Two)),
              static_cast<unsigned long long>(traj.fires));
  return 0;
}
