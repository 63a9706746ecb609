// Source propagation across the W-cell grid: a maintained type-1 colony
// in the upper-right quadrant block J_{0,+} must, with fires creating
// clearings and long-range dispersal seeding them, produce sources in the
// lower quadrant blocks J_{-1,-} and J_{+1,-} one stage later.
//
// A "source" in a W x W cell at stage n is one fixed detection square
// (side 2*r1*L, rounded odd) inside the cell that is free of 2's and holds
// at least one 1 at every checkpoint time in [2nT, 2(n+1)T], checkpoints
// spaced T/8. The stage-0 premise is enforced: at each stage-0 checkpoint
// the source block is cleared of 2's and reseeded with a single 1 if empty.

#ifndef FIRECP_SOURCE_HPP
#define FIRECP_SOURCE_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/formulas.hpp"
#include "firecp/replicate.hpp"
#include "firecp/stats.hpp"

namespace firecp {

struct SourceGridConfig {
  int F = 16;
  double alpha = 0.5;
  double r1 = 1.5;
  double r2 = 2.0;         // L = F / r2
  int k = 0;               // 0: round(F^alpha), floored at 1
  int W = 0;               // 0: F + round(F^(1+alpha))
  int M = 0;               // 0: 4 k W
  double a = 0.02;         // delta0 = a / F^3
  double T = 0.0;          // 0: 8L / (7 * r11_hint)
  double r11_hint = 0.3;
  double rho = 1.0;
  double w_short = 0.7;    // kernel mass split; cutoff is M
  double two_density = 0.75;

  int k_eff() const {
    return k > 0 ? k : std::max(1, static_cast<int>(std::lround(std::pow(F, alpha))));
  }
  int w_eff() const {
    return W > 0 ? W : F + static_cast<int>(std::lround(std::pow(F, 1.0 + alpha)));
  }
  int m_eff() const { return M > 0 ? M : 4 * k_eff() * w_eff(); }
  int l_eff() const {
    return std::max(1, static_cast<int>(std::lround(F / r2)));
  }
  int detect_half() const {
    return std::max(1, static_cast<int>(std::lround(r1 * l_eff())));
  }
  double delta0() const { return a / (static_cast<double>(F) * F * F); }
  double stage_unit() const {
    return T > 0.0 ? T : 8.0 * l_eff() / (7.0 * r11_hint);
  }
  bool bound_vacuous() const { return (1.0 + 2.0 * alpha) * rho >= 3.0; }
};

struct SourceResult {
  Estimate success;        // sources appear in both target blocks at stage 1
  bool bound_vacuous = false;
  double fire_gap_bound = 0.0;
  double spread_bound = 0.0;
  int k = 0, W = 0, M = 0, L = 0, detect_side = 0;
  double delta0 = 0.0, T = 0.0;
};

namespace detail {

// Per-checkpoint detection state for one k x k grid of W-cells: for each
// cell, the set of detection-square positions still qualifying at every
// checkpoint seen so far.
class SourceDetector {
 public:
  SourceDetector(int k, int w, int det_side)
      : k_(k), w_(w), side_(det_side), span_(w - det_side + 1) {
    if (span_ < 1) throw ConfigError("detection square larger than the W cell");
    alive_.assign(static_cast<std::size_t>(k_) * k_,
                  std::vector<char>(static_cast<std::size_t>(span_) * span_, 1));
  }

  // region origin: lattice coords of the block's lower corner.
  void checkpoint(const Lattice& lat, int ox, int oy) {
    const int n = k_ * w_;
    ones_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    twos_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        const auto s = lat.state(ox + x, oy + y);
        const std::size_t i = static_cast<std::size_t>(y + 1) * (n + 1) + (x + 1);
        const std::size_t up = i - (n + 1);
        ones_[i] = ones_[i - 1] + ones_[up] - ones_[up - 1] +
                   (s == SiteState::One ? 1 : 0);
        twos_[i] = twos_[i - 1] + twos_[up] - twos_[up - 1] +
                   (s == SiteState::Two ? 1 : 0);
      }
    auto rect = [&](const std::vector<std::int32_t>& ps, int x0, int y0) {
      const int x1 = x0 + side_, y1 = y0 + side_;
      return ps[static_cast<std::size_t>(y1) * (n + 1) + x1] -
             ps[static_cast<std::size_t>(y0) * (n + 1) + x1] -
             ps[static_cast<std::size_t>(y1) * (n + 1) + x0] +
             ps[static_cast<std::size_t>(y0) * (n + 1) + x0];
    };
    for (int cj = 0; cj < k_; ++cj)
      for (int ci = 0; ci < k_; ++ci) {
        auto& cell = alive_[static_cast<std::size_t>(cj) * k_ + ci];
        for (int py = 0; py < span_; ++py)
          for (int px = 0; px < span_; ++px) {
            auto& ok = cell[static_cast<std::size_t>(py) * span_ + px];
            if (!ok) continue;
            const int x0 = ci * w_ + px, y0 = cj * w_ + py;
            if (rect(twos_, x0, y0) != 0 || rect(ones_, x0, y0) < 1) ok = 0;
          }
      }
  }

  bool any_source() const {
    for (const auto& cell : alive_)
      for (const char ok : cell)
        if (ok) return true;
    return false;
  }

 private:
  int k_, w_, side_, span_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::int32_t> ones_, twos_;
};

}  // namespace detail

inline SourceResult source_propagation(const SourceGridConfig& cfg,
                                       const ProcessParams& base,
                                       std::int64_t replicates,
                                       std::uint64_t base_seed, int workers) {
  base.validate();
  const int k = cfg.k_eff(), W = cfg.w_eff(), M = cfg.m_eff(), L = cfg.l_eff();
  const int hw = cfg.detect_half();
  const int det_side = 2 * hw + 1;
  const double t_unit = cfg.stage_unit();
  const double dt = t_unit / 8.0;
  const int kw = k * W;
  const int pad = W / 2;

  // Logical extent: x in [-3kW, 2kW], y in [-kW, kW], padded.
  const int width = 5 * kw + 2 * pad + 1;
  const int height = 2 * kw + 2 * pad + 1;
  const int ox = 3 * kw + pad;  // array coord of logical origin
  const int oy = kw + pad;

  ProcessParams params = base;
  params.delta0 = cfg.delta0();
  params.fire_width = cfg.F;
  const auto [c1, c2] =
      KernelTable::normalize_weights(cfg.w_short, 1.0 - cfg.w_short, cfg.rho, M);
  params.kernel1 = KernelTable::power(c1, c2, cfg.rho, M);

  // Source block center: middle of J_{0,+} = (0, kW]^2.
  const int scx = ox + kw / 2, scy = oy + kw / 2;

  std::vector<char> success(static_cast<std::size_t>(replicates), 0);
  parallel_replicates(replicates, workers, [&](std::int64_t r) {
    Rng rng(stream_seed(base_seed, r));
    Lattice lat(width, height, Boundary::TruncatedBox);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(lat.size()); ++i)
      if (rng.uniform() < cfg.two_density) lat.set_state(i, SiteState::Two);
    // Clear a moat around the source block and seed its core with 1's.
    for (int dy = -hw - 3; dy <= hw + 3; ++dy)
      for (int dx = -hw - 3; dx <= hw + 3; ++dx) {
        const std::int32_t s = lat.apply_offset(lat.index(scx, scy), dx, dy);
        if (s < 0) continue;
        const bool core = std::abs(dx) <= hw && std::abs(dy) <= hw;
        lat.set_state(s, core && rng.uniform() < 0.6 ? SiteState::One
                                                     : SiteState::Vacant);
      }

    TwoTypeDynamics dyn(params);
    detail::SourceDetector left(k, W, det_side), right(k, W, det_side);
    // Target block origins (array coords): J_{m,-} = [2mkW - kW, 2mkW] x [-kW, 0].
    const int left_ox = ox - 3 * kw, right_ox = ox + kw, targets_oy = oy - kw;

    auto maintain_source = [&] {
      bool has_one = false;
      for (int dy = -hw; dy <= hw; ++dy)
        for (int dx = -hw; dx <= hw; ++dx) {
          const std::int32_t s = lat.index(scx + dx, scy + dy);
          if (lat.state(s) == SiteState::Two) lat.set_state(s, SiteState::Vacant);
          if (lat.state(s) == SiteState::One) has_one = true;
        }
      if (!has_one) lat.set_state(lat.index(scx, scy), SiteState::One);
    };

    maintain_source();
    double elapsed = 0.0;
    for (int step = 1; step <= 32; ++step) {  // 32 legs of T/8 reach 4T
      const double target_t = dt * step;
      run_until(lat, dyn, StopSpec{target_t - elapsed}, {}, rng, 0);
      elapsed = target_t;
      if (step <= 16) maintain_source();
      if (step >= 16) {
        left.checkpoint(lat, left_ox, targets_oy);
        right.checkpoint(lat, right_ox, targets_oy);
      }
    }
    success[static_cast<std::size_t>(r)] =
        (left.any_source() && right.any_source()) ? 1 : 0;
  });

  SourceResult res;
  res.success = proportion_estimate(
      std::accumulate(success.begin(), success.end(), std::int64_t{0}),
      replicates, "source-propagation", base_seed);
  res.bound_vacuous = cfg.bound_vacuous();
  res.fire_gap_bound = fire_gap_probability(cfg.delta0(), W, cfg.F, t_unit);
  res.spread_bound =
      spread_success_bound(c2, base.beta1, k, W, cfg.rho, L, t_unit);
  res.k = k;
  res.W = W;
  res.M = M;
  res.L = L;
  res.detect_side = det_side;
  res.delta0 = cfg.delta0();
  res.T = t_unit;
  return res;
}

}  // namespace firecp

#endif  // FIRECP_SOURCE_HPP
