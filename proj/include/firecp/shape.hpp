// Growth-set measurement for single-type processes started from one seed:
// the hit set H_t (every site ever occupied by time t), its inscribed and
// circumscribed centered squares, directional reach, convexity against the
// convex hull, and fitted linear growth speeds. In coupled mode the same
// run rides shared clocks with a from-full copy and records the agreement
// region by radius, giving the coupled-set trend.

#ifndef FIRECP_SHAPE_HPP
#define FIRECP_SHAPE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "firecp/coupling.hpp"
#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/stats.hpp"

namespace firecp {

struct ShapeConfig {
  double beta = 1.0;
  double delta = 0.0;  // 0 = pure growth
  KernelTable kernel = KernelTable::moore();
  int torus_size = 256;
  double horizon = 80.0;
  int samples = 60;
  bool coupled = false;   // also track agreement with the from-full process
  double epsilon = 0.5;   // box shrink for the coupled-fraction series
  int guard_margin = 2;   // sample invalid once hits reach this close to the edge
};

struct ShapeSample {
  double t = 0.0;
  std::int64_t hits = 0;
  double hull_area = 0.0;
  int r_in = 0;   // largest R with [-R,R]^2 fully hit
  int r_out = 0;  // max L-inf radius of any hit
  std::array<double, 8> extent{};  // E, NE, N, NW, W, SW, S, SE
  std::vector<std::int64_t> agree_cum;  // coupled: agreeing sites within radius R
};

struct ShapeData {
  std::vector<ShapeSample> samples;
  std::array<double, 8> dir_speed{};
  double inner_speed = 0.0;
  double outer_speed = 0.0;
  LinearFit radius_fit;  // sqrt(hits)/2 against t, second half of samples
  std::vector<double> coupled_fraction;  // agreement inside (1-eps)*inner_speed*t
  bool valid = true;
};

namespace detail {

struct HitTracker {
  int size, cx, cy, guard;
  std::vector<char> hit;
  std::vector<std::int64_t> ring_count;
  std::vector<std::pair<double, double>> points;
  std::int64_t hits = 0;
  int r_in = 0, r_out = 0;
  std::array<double, 8> extent{};
  bool valid = true;

  HitTracker(int n, int guard_margin)
      : size(n), cx(n / 2), cy(n / 2), guard(guard_margin),
        hit(static_cast<std::size_t>(n) * n, 0),
        ring_count(static_cast<std::size_t>(n), 0) {}

  void record(int x, int y) {
    const std::size_t i = static_cast<std::size_t>(y) * size + x;
    if (hit[i]) return;
    hit[i] = 1;
    ++hits;
    const int dx = x - cx, dy = y - cy;
    const int r = std::max(std::abs(dx), std::abs(dy));
    if (r >= size / 2 - guard) valid = false;
    ++ring_count[static_cast<std::size_t>(r)];
    while (r_in + 1 < size / 2 &&
           ring_count[static_cast<std::size_t>(r_in + 1)] == 8LL * (r_in + 1))
      ++r_in;
    if (r > r_out) r_out = r;
    points.emplace_back(dx, dy);
    const double fdx = dx, fdy = dy;
    extent[0] = std::max(extent[0], fdx);
    extent[1] = std::max(extent[1], std::min(fdx, fdy));
    extent[2] = std::max(extent[2], fdy);
    extent[3] = std::max(extent[3], std::min(-fdx, fdy));
    extent[4] = std::max(extent[4], -fdx);
    extent[5] = std::max(extent[5], std::min(-fdx, -fdy));
    extent[6] = std::max(extent[6], -fdy);
    extent[7] = std::max(extent[7], std::min(fdx, -fdy));
  }

  ShapeSample snapshot(double t) const {
    ShapeSample s;
    s.t = t;
    s.hits = hits;
    s.hull_area = convex_hull_area(points);
    s.r_in = r_in;
    s.r_out = r_out;
    s.extent = extent;
    return s;
  }
};

inline void fit_shape(ShapeData& data, double epsilon) {
  const std::size_t n = data.samples.size();
  if (n < 4) return;
  const std::size_t from = n / 2;
  std::vector<double> t, v;
  auto fit_series = [&](auto&& get) {
    t.clear();
    v.clear();
    for (std::size_t i = from; i < n; ++i) {
      t.push_back(data.samples[i].t);
      v.push_back(get(data.samples[i]));
    }
    return least_squares(t, v);
  };
  for (int d = 0; d < 8; ++d)
    data.dir_speed[static_cast<std::size_t>(d)] =
        fit_series([d](const ShapeSample& s) {
          return s.extent[static_cast<std::size_t>(d)];
        }).slope;
  data.inner_speed = fit_series([](const ShapeSample& s) {
                       return static_cast<double>(s.r_in);
                     }).slope;
  data.outer_speed = fit_series([](const ShapeSample& s) {
                       return static_cast<double>(s.r_out);
                     }).slope;
  data.radius_fit = fit_series(
      [](const ShapeSample& s) { return std::sqrt(static_cast<double>(s.hits)) / 2.0; });

  if (!data.samples.empty() && !data.samples.front().agree_cum.empty()) {
    data.coupled_fraction.resize(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = data.samples[i];
      const int box = static_cast<int>((1.0 - epsilon) * data.inner_speed * s.t);
      const int r = std::max(0, std::min<int>(box, static_cast<int>(s.agree_cum.size()) - 1));
      const double sites = static_cast<double>(2 * r + 1) * (2 * r + 1);
      data.coupled_fraction[i] = s.agree_cum[static_cast<std::size_t>(r)] / sites;
    }
  }
}

}  // namespace detail

inline ShapeData shape_measure(const ShapeConfig& cfg, std::uint64_t seed) {
  if (cfg.samples < 4) throw ConfigError("shape measurement needs >= 4 samples");
  const int n = cfg.torus_size;
  detail::HitTracker tracker(n, cfg.guard_margin);
  tracker.record(n / 2, n / 2);  // the seed is hit at t = 0

  ShapeData data;
  std::vector<double> schedule;
  for (int i = 1; i <= cfg.samples; ++i)
    schedule.push_back(cfg.horizon * i / cfg.samples);

  Rng rng(seed);
  Lattice a(n, n, Boundary::Torus);
  a.set_state(a.index(n / 2, n / 2), SiteState::One);
  data.samples.push_back(tracker.snapshot(0.0));

  if (!cfg.coupled) {
    ProcessParams p;
    p.beta1 = cfg.beta;
    p.delta1 = cfg.delta;
    p.kernel1 = cfg.kernel;
    TwoTypeDynamics dyn(p);
    auto on_event = [&](const Event& ev, const Lattice& l) {
      if (ev.kind == EventKind::Birth1)
        tracker.record(l.x_of(ev.target), l.y_of(ev.target));
    };
    double elapsed = 0.0;
    for (const double tc : schedule) {
      run_until(a, dyn, StopSpec{tc - elapsed}, {}, rng, seed, on_event);
      elapsed = tc;
      data.samples.push_back(tracker.snapshot(tc));
    }
  } else {
    Lattice b(n, n, Boundary::Torus);
    b.fill(SiteState::One);
    CoupledOptions opt;
    opt.beta = cfg.beta;
    opt.delta = cfg.delta;
    opt.kernel = &cfg.kernel;
    opt.t_max = cfg.horizon;
    opt.sample_times = schedule;
    auto on_sample = [&](double t, const Lattice& la, const Lattice& lb) {
      ShapeSample s = tracker.snapshot(t);
      // Agreement counts by centered L-inf radius, cumulative.
      const int rmax = std::min(n / 2 - 1, std::max(tracker.r_out + 2, 4));
      std::vector<std::int64_t> per_ring(static_cast<std::size_t>(rmax) + 1, 0);
      for (int dy = -rmax; dy <= rmax; ++dy)
        for (int dx = -rmax; dx <= rmax; ++dx) {
          const int x = n / 2 + dx, y = n / 2 + dy;
          if (la.state(x, y) == lb.state(x, y))
            ++per_ring[static_cast<std::size_t>(std::max(std::abs(dx), std::abs(dy)))];
        }
      s.agree_cum.resize(per_ring.size());
      std::int64_t acc = 0;
      for (std::size_t r = 0; r < per_ring.size(); ++r) {
        acc += per_ring[r];
        s.agree_cum[r] = acc;
      }
      data.samples.push_back(std::move(s));
    };
    auto on_birth = [&](int which, std::int32_t target, double) {
      if (which == 0) tracker.record(a.x_of(target), a.y_of(target));
    };
    coupled_run(a, b, opt, rng, on_sample, on_birth);
  }

  data.valid = tracker.valid;
  detail::fit_shape(data, cfg.epsilon);
  return data;
}

}  // namespace firecp

#endif  // FIRECP_SHAPE_HPP
