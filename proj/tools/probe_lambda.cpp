// Scratch scan of contact-process supercriticality indicators.

#include <cstdio>
#include <cstdlib>

#include "firecp/process.hpp"

using namespace firecp;

int main(int argc, char** argv) {
  const int size = argc > 1 ? std::atoi(argv[1]) : 128;
  const double t_max = argc > 2 ? std::atof(argv[2]) : 80.0;
  for (double lam = 1.0; lam <= 2.2; lam += 0.1) {
    // Density decay from full start.
    ProcessSpec spec;
    spec.variant = Variant::Contact;
    spec.width = spec.height = size;
    spec.params.beta1 = lam;
    spec.params.delta1 = 1.0;
    spec.init.mode = InitSpec::Mode::Full;
    spec.init.fill_type = SiteState::One;
    const auto proc = make_process(spec);
    ObserverSpec obs;
    obs.sample_every = t_max / 8.0;
    const auto traj = proc.run(StopSpec{t_max, ExtinctStop::TypeOne}, obs, 11);
    const double n = static_cast<double>(size) * size;
    std::printf("lambda=%.2f rho(T)=%.4f | ", lam, traj.samples.back().n1 / n);
    // Survival from a single seed, 40 replicates.
    int survived = 0;
    for (int r = 0; r < 40; ++r) {
      ProcessSpec s2 = spec;
      s2.init.mode = InitSpec::Mode::SingleCenter;
      const auto p2 = make_process(s2);
      const auto t2 = p2.run(StopSpec{t_max, ExtinctStop::TypeOne}, {}, stream_seed(5, r));
      if (!t2.extinct1 || *t2.extinct1 >= t_max) ++survived;
    }
    std::printf("seed survival=%d/40\n", survived);
  }
  return 0;
}
