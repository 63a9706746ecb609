// Gap colonization experiment on the nested boxes B1 (half-side L),
// B2 (half-side r1*L) and B3 (half-side r2*L = F): B3 starts vacant with
// 2's filling everything outside and one type-1 immigrant dropped
// uniformly in B1. No fires. Measures the conditional persistence of the
// immigrant's descendants within B2 between the T and 7T/2 checkpoints,
// and the probability that no 2 reaches B2 by 7T/2.

#ifndef FIRECP_GAP_HPP
#define FIRECP_GAP_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/replicate.hpp"
#include "firecp/stats.hpp"

namespace firecp {

struct GapExperimentConfig {
  int L = 16;
  double r1 = 1.5;
  double r2 = 2.0;
  double T = 0.0;          // 0: derive as 8L / (7 * r11_hint)
  double r11_hint = 0.3;   // measured inner-box speed of the type-1 process
  int ring = 24;           // thickness of the type-2 band outside B3

  void validate() const {
    if (L < 2) throw ConfigError("gap experiment needs L >= 2");
    if (!(1.0 < r1 && r1 < r2)) throw ConfigError("gap ratios need 1 < r1 < r2");
    if (T <= 0.0 && r11_hint <= 0.0)
      throw ConfigError("gap experiment needs T > 0 or a positive speed hint");
  }
  double horizon_unit() const { return T > 0.0 ? T : 8.0 * L / (7.0 * r11_hint); }
};

struct GapResult {
  Estimate survive_conditional;  // P(1's in B2 at 7T/2 | 1's in B2 at T)
  Estimate no_two_entry;         // P(no 2 enters B2 by 7T/2)
  std::int64_t passed_checkpoint = 0;
  double t_checkpoint = 0.0;
  double t_final = 0.0;
};

inline GapResult gap_experiment(const GapExperimentConfig& cfg,
                                const ProcessParams& params,
                                std::int64_t replicates, std::uint64_t base_seed,
                                int workers) {
  cfg.validate();
  params.validate();
  if (params.delta0 != 0.0)
    throw ConfigError("gap experiment runs without fires (delta0 = 0)");

  const int b2 = static_cast<int>(std::lround(cfg.r1 * cfg.L));
  const int b3 = static_cast<int>(std::lround(cfg.r2 * cfg.L));
  const int half = b3 + cfg.ring;
  const int side = 2 * half + 1;
  const double t_mid = cfg.horizon_unit();
  const double t_end = 3.5 * t_mid;

  std::vector<char> alive_mid(static_cast<std::size_t>(replicates), 0);
  std::vector<char> alive_end(static_cast<std::size_t>(replicates), 0);
  std::vector<char> two_free(static_cast<std::size_t>(replicates), 0);

  parallel_replicates(replicates, workers, [&](std::int64_t r) {
    Rng rng(stream_seed(base_seed, r));
    Lattice lat(side, side, Boundary::Torus);
    const int c = half;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x)
        if (std::max(std::abs(x - c), std::abs(y - c)) > b3)
          lat.set_state(lat.index(x, y), SiteState::Two);
    const int sx = c - cfg.L + static_cast<int>(rng.below(2 * cfg.L + 1));
    const int sy = c - cfg.L + static_cast<int>(rng.below(2 * cfg.L + 1));
    lat.set_state(lat.index(sx, sy), SiteState::One);

    TwoTypeDynamics dyn(params);
    bool two_entered = false;
    auto on_event = [&](const Event& ev, const Lattice& l) {
      if (two_entered || ev.kind != EventKind::Birth2) return;
      if (std::max(std::abs(l.x_of(ev.target) - c), std::abs(l.y_of(ev.target) - c)) <= b2)
        two_entered = true;
    };
    auto one_in_b2 = [&] {
      for (int y = c - b2; y <= c + b2; ++y)
        for (int x = c - b2; x <= c + b2; ++x)
          if (lat.state(x, y) == SiteState::One) return true;
      return false;
    };

    run_until(lat, dyn, StopSpec{t_mid}, {}, rng, 0, on_event);
    const bool mid = one_in_b2();
    run_until(lat, dyn, StopSpec{t_end - t_mid}, {}, rng, 0, on_event);
    const auto idx = static_cast<std::size_t>(r);
    alive_mid[idx] = mid ? 1 : 0;
    alive_end[idx] = (mid && one_in_b2()) ? 1 : 0;
    two_free[idx] = two_entered ? 0 : 1;
  });

  GapResult res;
  res.t_checkpoint = t_mid;
  res.t_final = t_end;
  res.passed_checkpoint =
      std::accumulate(alive_mid.begin(), alive_mid.end(), std::int64_t{0});
  const std::int64_t both =
      std::accumulate(alive_end.begin(), alive_end.end(), std::int64_t{0});
  const std::int64_t free2 =
      std::accumulate(two_free.begin(), two_free.end(), std::int64_t{0});
  res.survive_conditional =
      res.passed_checkpoint > 0
          ? proportion_estimate(both, res.passed_checkpoint, "gap-conditional",
                                base_seed)
          : Estimate{0.0, 0, {0.0, 1.0}, "gap-conditional", base_seed};
  res.no_two_entry = proportion_estimate(free2, replicates, "gap-no-2-entry", base_seed);
  return res;
}

}  // namespace firecp

#endif  // FIRECP_GAP_HPP
