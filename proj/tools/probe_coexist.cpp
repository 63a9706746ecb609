// Scratch probe for coexistence parameter hunting; not part of the suite.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "firecp/process.hpp"

using namespace firecp;

int main(int argc, char** argv) {
  int size = 256;
  double t_max = 200.0;
  double beta2 = 5.0, beta1 = 30.0, delta1 = 10.0;
  double w_short = 0.7, rho = 1.0, a = 0.1, d2rate = 1.0;
  int F = 8;
  double alpha = 0.3;
  std::uint64_t seed = 1;
  int patch_count = 60, patch_hw = 8, patch_core = 5;
  double d1 = 0.6, d2 = 0.6;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string k = argv[i];
    const double v = std::atof(argv[i + 1]);
    if (k == "size") size = static_cast<int>(v);
    else if (k == "t") t_max = v;
    else if (k == "beta2") beta2 = v;
    else if (k == "beta1") beta1 = v;
    else if (k == "delta1") delta1 = v;
    else if (k == "ws") w_short = v;
    else if (k == "rho") rho = v;
    else if (k == "a") a = v;
    else if (k == "F") F = static_cast<int>(v);
    else if (k == "alpha") alpha = v;
    else if (k == "seed") seed = static_cast<std::uint64_t>(v);
    else if (k == "patches") patch_count = static_cast<int>(v);
    else if (k == "phw") patch_hw = static_cast<int>(v);
    else if (k == "core") patch_core = static_cast<int>(v);
    else if (k == "d2") d2 = v;
    else if (k == "delta2") d2rate = v;
  }
  const int kk = std::max(1, static_cast<int>(std::lround(std::pow(F, alpha))));
  const int W = F + static_cast<int>(std::lround(std::pow(F, 1.0 + alpha)));
  const int M = 4 * kk * W;

  ProcessSpec spec;
  spec.variant = Variant::TwoTypeFire;
  spec.width = spec.height = size;
  spec.boundary = Boundary::Torus;
  spec.params.beta1 = beta1;
  spec.params.delta1 = delta1;
  spec.params.beta2 = beta2;
  spec.params.delta2 = d2rate;
  spec.params.delta0 = a / (static_cast<double>(F) * F * F);
  spec.params.fire_width = F;
  const auto [c1, c2] = KernelTable::normalize_weights(w_short, 1.0 - w_short, rho, M);
  spec.params.kernel1 = KernelTable::power(c1, c2, rho, M);
  spec.init.mode = InitSpec::Mode::Patches;
  spec.init.patch_count = patch_count;
  spec.init.patch_half_width = patch_hw;
  spec.init.patch_core = patch_core;
  spec.init.density1 = d1;
  spec.init.density2 = d2;

  const auto proc = make_process(spec);
  std::printf("# k=%d W=%d M=%d delta0=%.3g\n", kk, W, M, spec.params.delta0);
  const double n = static_cast<double>(size) * size;

  Rng rng(seed);
  Lattice lat = proc.make_lattice(rng);
  auto coarse_map = [&](double t) {
    const int cell = size / 48 > 0 ? size / 48 : 1;
    std::printf("--- t=%.1f (coarse %dx, '1'>=2 ones, '2' mostly twos, '.' open)\n",
                t, cell);
    for (int cy = 0; cy + cell <= size; cy += cell) {
      for (int cx = 0; cx + cell <= size; cx += cell) {
        int ones = 0, twos = 0;
        for (int y = cy; y < cy + cell; ++y)
          for (int x = cx; x < cx + cell; ++x) {
            if (lat.state(x, y) == SiteState::One) ++ones;
            if (lat.state(x, y) == SiteState::Two) ++twos;
          }
        char ch = '.';
        if (ones >= 2) ch = '1';
        else if (twos > cell * cell / 2) ch = '2';
        std::putchar(ch);
      }
      std::putchar('\n');
    }
  };

  ObserverSpec obs;
  obs.sample_every = t_max / 20.0;
  double next_map = 0.0;
  const double map_every = t_max / 5.0;
  std::uint64_t landings = 0;  // long-range 1-births (distance > 1)
  auto on_event = [&](const Event& ev, const Lattice& l) {
    if (ev.kind == EventKind::Birth1 && ev.target >= 0) {
      const int dx = std::abs(l.x_of(ev.source) - l.x_of(ev.target));
      const int dy = std::abs(l.y_of(ev.source) - l.y_of(ev.target));
      const int ddx = std::min(dx, size - dx), ddy = std::min(dy, size - dy);
      if (std::max(ddx, ddy) > 1) ++landings;
    }
    if (ev.time >= next_map) {
      coarse_map(ev.time);
      next_map += map_every;
    }
  };
  const auto traj = proc.run_on(lat, StopSpec{t_max}, obs, rng, seed, on_event);
  for (const auto& row : traj.samples)
    std::printf("t=%8.1f  rho1=%.4f  rho2=%.4f\n", row.t, row.n1 / n, row.n2 / n);
  std::printf("events=%llu fires=%llu long_range_births=%llu\n",
              static_cast<unsigned long long>(traj.events),
              static_cast<unsigned long long>(traj.fires),
              static_cast<unsigned long long>(landings));
  return 0;
}
