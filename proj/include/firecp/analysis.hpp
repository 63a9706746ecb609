// Monte Carlo estimators over replicated engine runs: survival
// probabilities, the critical-value bisection, the finite block-survival
// events on a truncated box, and the two-type coexistence experiment with
// its paired no-fire control.

#ifndef FIRECP_ANALYSIS_HPP
#define FIRECP_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/process.hpp"
#include "firecp/replicate.hpp"
#include "firecp/stats.hpp"

namespace firecp {

// Fraction of replicates in which the focal type is alive at t_max.
inline Estimate survival_probability(const ProcessSpec& spec, double t_max,
                                     std::int64_t replicates,
                                     std::uint64_t base_seed, int workers,
                                     SiteState focal = SiteState::One) {
  spec.validate();
  if (replicates < 1) throw ConfigError("survival needs replicates >= 1");
  const auto proc = make_process(spec);
  std::vector<char> alive(static_cast<std::size_t>(replicates), 0);
  parallel_replicates(replicates, workers, [&](std::int64_t r) {
    StopSpec stop{t_max, focal == SiteState::One ? ExtinctStop::TypeOne
                                                 : ExtinctStop::TypeTwo};
    const auto traj = proc.run(stop, {}, stream_seed(base_seed, r));
    const auto& extinct =
        focal == SiteState::One ? traj.extinct1 : traj.extinct2;
    alive[static_cast<std::size_t>(r)] = extinct.has_value() ? 0 : 1;
  });
  const std::int64_t hits = std::accumulate(alive.begin(), alive.end(), std::int64_t{0});
  return proportion_estimate(hits, replicates, "survival", base_seed);
}

enum class LambdaCMethod { SurvivalCrossing, DensityDecay };

inline const char* to_string(LambdaCMethod m) {
  return m == LambdaCMethod::SurvivalCrossing ? "survival-crossing"
                                              : "density-decay";
}

struct LambdaCScales {
  // Survival-crossing: single seed on a torus; reaching escape_count sites
  // before the horizon counts as survival.
  int survival_size = 128;
  double survival_horizon = 100.0;
  std::int64_t survival_replicates = 300;
  std::int64_t escape_count = 4000;
  // Density-decay: quasi-stationary density from a full start, averaged
  // over the tail of the horizon, must clear the threshold on both sizes.
  int density_size_small = 64;
  int density_size_large = 128;
  double density_horizon = 100.0;
  std::int64_t density_replicates = 6;
  // The supercriticality threshold is shared by both methods: by
  // self-duality the single-seed survival probability and the invariant
  // density are the same function of lambda, so cross-method agreement is
  // only possible with matched thresholds.
  double indicator_threshold = 0.05;
  // Bisection bracket on lambda = beta/delta.
  double lo = 0.8;
  double hi = 3.0;
  int iterations = 11;
};

struct LambdaCProbe {
  double lambda;
  double indicator_value;
  bool supercritical;
};

struct LambdaCResult {
  Estimate estimate;
  std::vector<LambdaCProbe> probes;
};

namespace detail {

inline double survival_indicator(const KernelTable& kernel, double lambda,
                                 const LambdaCScales& s, std::uint64_t seed,
                                 int workers) {
  ProcessSpec spec;
  spec.variant = Variant::Contact;
  spec.width = spec.height = s.survival_size;
  spec.params.beta1 = lambda;
  spec.params.delta1 = 1.0;
  spec.params.kernel1 = kernel;
  spec.init.mode = InitSpec::Mode::SingleCenter;
  const auto proc = make_process(spec);
  std::vector<char> alive(static_cast<std::size_t>(s.survival_replicates), 0);
  parallel_replicates(s.survival_replicates, workers, [&](std::int64_t r) {
    StopSpec stop{s.survival_horizon, ExtinctStop::TypeOne, s.escape_count};
    const auto traj = proc.run(stop, {}, stream_seed(seed, r));
    alive[static_cast<std::size_t>(r)] = traj.extinct1.has_value() ? 0 : 1;
  });
  return static_cast<double>(std::accumulate(alive.begin(), alive.end(),
                                             std::int64_t{0})) /
         static_cast<double>(s.survival_replicates);
}

inline double density_indicator(const KernelTable& kernel, double lambda,
                                const LambdaCScales& s, std::uint64_t seed,
                                int workers) {
  double min_density = 1.0;
  int size_index = 0;
  for (const int size : {s.density_size_small, s.density_size_large}) {
    ProcessSpec spec;
    spec.variant = Variant::Contact;
    spec.width = spec.height = size;
    spec.params.beta1 = lambda;
    spec.params.delta1 = 1.0;
    spec.params.kernel1 = kernel;
    spec.init.mode = InitSpec::Mode::Full;
    spec.init.fill_type = SiteState::One;
    const auto proc = make_process(spec);
    std::vector<double> tail_mean(static_cast<std::size_t>(s.density_replicates), 0.0);
    parallel_replicates(s.density_replicates, workers, [&](std::int64_t r) {
      ObserverSpec obs;
      obs.sample_every = s.density_horizon / 30.0;
      const auto traj =
          proc.run(StopSpec{s.density_horizon, ExtinctStop::TypeOne}, obs,
                   stream_seed(seed + 1 + static_cast<std::uint64_t>(size_index), r));
      double acc = 0.0;
      int count = 0;
      for (const auto& row : traj.samples) {
        if (row.t < 2.0 * s.density_horizon / 3.0) continue;
        acc += static_cast<double>(row.n1);
        ++count;
      }
      tail_mean[static_cast<std::size_t>(r)] =
          count > 0 ? acc / count / (static_cast<double>(size) * size) : 0.0;
    });
    const double mean =
        std::accumulate(tail_mean.begin(), tail_mean.end(), 0.0) /
        static_cast<double>(s.density_replicates);
    min_density = std::min(min_density, mean);
    ++size_index;
  }
  return min_density;
}

}  // namespace detail

// Bisection on lambda = beta/delta against the chosen supercriticality
// indicator. Throws when the bracket does not straddle the transition.
inline LambdaCResult estimate_lambda_c(const KernelTable& kernel,
                                       LambdaCMethod method,
                                       const LambdaCScales& scales,
                                       std::uint64_t base_seed, int workers) {
  LambdaCResult result;
  auto indicator = [&](double lambda, std::uint64_t seed) {
    const double v =
        method == LambdaCMethod::SurvivalCrossing
            ? detail::survival_indicator(kernel, lambda, scales, seed, workers)
            : detail::density_indicator(kernel, lambda, scales, seed, workers);
    result.probes.push_back({lambda, v, v > scales.indicator_threshold});
    return v > scales.indicator_threshold;
  };
  double lo = scales.lo, hi = scales.hi;
  if (indicator(lo, mix64(base_seed)))
    throw ConfigError("lambda_c bracket: lower bound already supercritical");
  if (!indicator(hi, mix64(base_seed + 1)))
    throw ConfigError("lambda_c bracket: upper bound still subcritical");
  for (int i = 0; i < scales.iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (indicator(mid, mix64(base_seed + 2 + static_cast<std::uint64_t>(i))))
      hi = mid;
    else
      lo = mid;
  }
  Estimate e;
  e.value = 0.5 * (lo + hi);
  e.ci95 = {lo, hi};  // bisection bracket, not a binomial interval
  e.replicates = static_cast<std::int64_t>(result.probes.size());
  e.method = to_string(method);
  e.base_seed = base_seed;
  result.estimate = e;
  return result;
}

// Scales of the finite block-survival criterion: initial square [-n,n]^2,
// target translates indexed by [0,L]^2, horizon T, all on the truncated
// box [-(L+2n), L+2n]^2.
struct BlockCriterionConfig {
  int n = 1;
  int L = 10;
  double T = 10.0;
  int checkpoints = 16;  // fixed time grid for the side-slab scan
};

struct BlockEventResult {
  Estimate filled_at_end;   // a fully occupied translate exists at T+1
  Estimate side_slab;       // a translate on the {L+n} column filled in [1, T+1)
};

namespace detail {

// Occupancy scan helper: true when some translate x + [-n,n]^2 with
// x in [x0,x1] x [y0,y1] (logical coords, origin at box center) is fully
// occupied by the focal type.
inline bool any_full_translate(const Lattice& lat, int n, int x0, int x1,
                               int y0, int y1, SiteState type) {
  const int c = lat.width() / 2;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      bool full = true;
      for (int dy = -n; full && dy <= n; ++dy)
        for (int dx = -n; full && dx <= n; ++dx)
          if (lat.state(c + x + dx, c + y + dy) != type) full = false;
      if (full) return true;
    }
  }
  return false;
}

}  // namespace detail

// Estimates both block events of the finite-size survival criterion for a
// single-type process (kernel + rates in the type-1 slots) with optional
// fires. The side-slab event is checked exactly at every birth completing
// a slab translate, plus the fixed checkpoint grid.
inline BlockEventResult block_event_prob(const BlockCriterionConfig& cfg,
                                         double beta, double delta,
                                         const KernelTable& kernel,
                                         double delta0, int fire_width,
                                         std::int64_t replicates,
                                         std::uint64_t base_seed, int workers) {
  if (cfg.n < 1 || cfg.L < 1 || cfg.T <= 0)
    throw ConfigError("block criterion needs n, L >= 1 and T > 0");
  const int half = cfg.L + 2 * cfg.n;
  const int side = 2 * half + 1;

  std::vector<char> end_hit(static_cast<std::size_t>(replicates), 0);
  std::vector<char> slab_hit(static_cast<std::size_t>(replicates), 0);

  parallel_replicates(replicates, workers, [&](std::int64_t r) {
    Rng rng(stream_seed(base_seed, r));
    Lattice lat(side, side, Boundary::TruncatedBox);
    const int c = half;
    for (int dy = -cfg.n; dy <= cfg.n; ++dy)
      for (int dx = -cfg.n; dx <= cfg.n; ++dx)
        lat.set_state(lat.index(c + dx, c + dy), SiteState::One);

    ProcessParams p;
    p.beta1 = beta;
    p.delta1 = delta;
    p.kernel1 = kernel;
    p.delta0 = delta0;
    p.fire_width = fire_width;
    TwoTypeDynamics dyn(p);

    bool slab = false;
    double elapsed = 0.0;  // run legs restart their clock at 0
    // Event-driven slab detection: a birth with target in the slab column
    // range may complete a translate centered at (L+n, y), y in [0, L].
    auto on_event = [&](const Event& ev, const Lattice& l) {
      if (slab || ev.kind != EventKind::Birth1) return;
      const double t = elapsed + ev.time;
      if (t < 1.0 || t >= cfg.T + 1.0) return;
      const int tx = l.x_of(ev.target) - c;
      const int ty = l.y_of(ev.target) - c;
      if (tx < cfg.L || tx > cfg.L + 2 * cfg.n) return;
      const int y0 = std::max(0, ty - cfg.n), y1 = std::min(cfg.L, ty + cfg.n);
      if (y0 > y1) return;
      if (detail::any_full_translate(l, cfg.n, cfg.L + cfg.n, cfg.L + cfg.n,
                                     y0, y1, SiteState::One))
        slab = true;
    };

    // Checkpoint grid over [1, T+1), including the boundary point t = 1.
    std::vector<double> checks;
    for (int i = 0; i < cfg.checkpoints; ++i)
      checks.push_back(1.0 + cfg.T * static_cast<double>(i) / cfg.checkpoints);

    for (const double tc : checks) {
      const StopSpec leg{tc - elapsed};
      run_until(lat, dyn, leg, {}, rng, 0, on_event);
      elapsed = tc;
      if (!slab &&
          detail::any_full_translate(lat, cfg.n, cfg.L + cfg.n, cfg.L + cfg.n,
                                     0, cfg.L, SiteState::One))
        slab = true;
    }
    run_until(lat, dyn, StopSpec{cfg.T + 1.0 - elapsed}, {}, rng, 0, on_event);

    slab_hit[static_cast<std::size_t>(r)] = slab ? 1 : 0;
    end_hit[static_cast<std::size_t>(r)] =
        detail::any_full_translate(lat, cfg.n, 0, cfg.L, 0, cfg.L, SiteState::One)
            ? 1
            : 0;
  });

  const auto sum = [](const std::vector<char>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  BlockEventResult res;
  res.filled_at_end =
      proportion_estimate(sum(end_hit), replicates, "block-filled", base_seed);
  res.side_slab =
      proportion_estimate(sum(slab_hit), replicates, "block-side-slab", base_seed);
  return res;
}

// Two-type coexistence experiment: survival fractions of both types at
// t_max plus mean density trajectories, with a paired delta0 = 0 control
// run from the same seeds. The control stops at type-1 extinction (its
// densities are zero from there on).
struct CoexistConfig {
  ProcessSpec spec;  // TwoTypeFire
  double t_max = 100.0;
  std::int64_t replicates = 20;
  int sample_points = 50;
  double lambda_c_for_validation = 0.0;  // > 0: require condition (1) to pass
};

struct CoexistResult {
  Estimate survive1, survive2;
  Estimate control_survive1;
  std::vector<double> times;
  std::vector<double> mean_density1, mean_density2;
  std::vector<double> control_density1, control_density2;
};

inline CoexistResult coexistence_run(const CoexistConfig& cfg,
                                     std::uint64_t base_seed, int workers) {
  cfg.spec.validate();
  if (cfg.spec.variant != Variant::TwoTypeFire)
    throw ConfigError("coexistence experiment runs the two-type fire process");
  if (cfg.lambda_c_for_validation > 0.0) {
    const auto rep = check_condition_1(cfg.spec.params.beta1, cfg.spec.params.beta2,
                                       cfg.spec.params.delta1, cfg.spec.params.delta2,
                                       cfg.lambda_c_for_validation);
    if (!rep.pass)
      throw ConfigError("parameter point fails condition (1) at the supplied lambda_c");
  }
  const auto proc = make_process(cfg.spec);
  ProcessSpec control_spec = cfg.spec;
  control_spec.params.delta0 = 0.0;
  const auto control = make_process(control_spec);

  const std::int64_t n = cfg.replicates;
  const double cell = static_cast<double>(cfg.spec.width) * cfg.spec.height;
  ObserverSpec obs;
  obs.sample_every = cfg.t_max / cfg.sample_points;
  const std::size_t rows = static_cast<std::size_t>(cfg.sample_points) + 1;

  std::vector<char> s1(static_cast<std::size_t>(n)), s2(static_cast<std::size_t>(n)),
      c1(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> d1(static_cast<std::size_t>(n)),
      d2(static_cast<std::size_t>(n)), cd1(static_cast<std::size_t>(n)),
      cd2(static_cast<std::size_t>(n));

  parallel_replicates(n, workers, [&](std::int64_t r) {
    const std::uint64_t seed = stream_seed(base_seed, r);
    const auto traj = proc.run(StopSpec{cfg.t_max}, obs, seed);
    const auto ctraj =
        control.run(StopSpec{cfg.t_max, ExtinctStop::TypeOne}, obs, seed);
    const auto idx = static_cast<std::size_t>(r);
    s1[idx] = traj.extinct1.has_value() ? 0 : 1;
    s2[idx] = traj.extinct2.has_value() ? 0 : 1;
    c1[idx] = ctraj.extinct1.has_value() ? 0 : 1;
    auto densify = [&](const Trajectory& t, std::vector<double>& out1,
                       std::vector<double>& out2) {
      out1.assign(rows, 0.0);
      out2.assign(rows, 0.0);
      for (std::size_t i = 0; i < t.samples.size() && i < rows; ++i) {
        out1[i] = t.samples[i].n1 / cell;
        out2[i] = t.samples[i].n2 / cell;
      }
      // An early-stopped control keeps its last type-2 value; type-1 is 0.
      for (std::size_t i = t.samples.size(); i < rows; ++i)
        out2[i] = t.samples.empty() ? 0.0 : out2[t.samples.size() - 1];
    };
    densify(traj, d1[idx], d2[idx]);
    densify(ctraj, cd1[idx], cd2[idx]);
  });

  CoexistResult res;
  res.survive1 = proportion_estimate(
      std::accumulate(s1.begin(), s1.end(), std::int64_t{0}), n, "coexist-1", base_seed);
  res.survive2 = proportion_estimate(
      std::accumulate(s2.begin(), s2.end(), std::int64_t{0}), n, "coexist-2", base_seed);
  res.control_survive1 = proportion_estimate(
      std::accumulate(c1.begin(), c1.end(), std::int64_t{0}), n, "control-1", base_seed);
  res.times.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) res.times[i] = i * obs.sample_every;
  auto average = [&](const std::vector<std::vector<double>>& per_rep) {
    std::vector<double> mean(rows, 0.0);
    for (const auto& v : per_rep)
      for (std::size_t i = 0; i < rows; ++i) mean[i] += v[i];
    for (auto& m : mean) m /= static_cast<double>(n);
    return mean;
  };
  res.mean_density1 = average(d1);
  res.mean_density2 = average(d2);
  res.control_density1 = average(cd1);
  res.control_density2 = average(cd2);
  return res;
}

}  // namespace firecp

#endif  // FIRECP_ANALYSIS_HPP
