// Exact event-driven simulation of the continuous-time dynamics by
// aggregate-rate Gillespie dispatch. Five clock categories (two birth, two
// death, fire) whose rates depend on the state only through the occupied
// counts, so every event costs O(1) plus O(block) for fires.
//
// A suppressed birth (occupied target, or a target discarded outside a
// truncated box) still consumes simulated time: the arrow exists, its
// effect is null.

#ifndef FIRECP_ENGINE_HPP
#define FIRECP_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "firecp/errors.hpp"
#include "firecp/kernel.hpp"
#include "firecp/lattice.hpp"
#include "firecp/rng.hpp"

namespace firecp {

struct ProcessParams {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta0 = 0.0;
  int fire_width = 1;
  KernelTable kernel1 = KernelTable::moore();
  KernelTable kernel2 = KernelTable::moore();

  void validate() const {
    if (beta1 < 0 || beta2 < 0 || delta1 < 0 || delta2 < 0 || delta0 < 0)
      throw ConfigError("all rates must be >= 0");
    if (delta0 > 0 && fire_width < 1)
      throw ConfigError("fire width F must be >= 1 when delta0 > 0");
  }
};

enum class EventKind : std::uint8_t {
  Birth1,
  Birth2,
  Death1,
  Death2,
  Fire,
  SuppressedBirth1,
  SuppressedBirth2,
};

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::Birth1: return "birth1";
    case EventKind::Birth2: return "birth2";
    case EventKind::Death1: return "death1";
    case EventKind::Death2: return "death2";
    case EventKind::Fire: return "fire";
    case EventKind::SuppressedBirth1: return "suppressed1";
    default: return "suppressed2";
  }
}

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::Fire;
  std::int32_t source = -1;  // birth source, death site, or fire center
  std::int32_t target = -1;  // birth target; -1 when discarded outside the box
};

struct SampleRow {
  double t;
  std::int64_t n1;
  std::int64_t n2;
};

struct Trajectory {
  std::uint64_t seed = 0;
  std::vector<SampleRow> samples;
  double final_time = 0.0;
  std::optional<double> extinct1;
  std::optional<double> extinct2;
  std::uint64_t events = 0;
  std::uint64_t suppressed1 = 0;
  std::uint64_t suppressed2 = 0;
  std::uint64_t fires = 0;
};

// Full dynamics: per-type births and deaths plus block-clearing fires.
// Single-type contact and Richardson processes are the same dispatch with
// the unused rates at zero.
class TwoTypeDynamics {
 public:
  explicit TwoTypeDynamics(const ProcessParams& p) : p_(p) { p_.validate(); }

  const ProcessParams& params() const { return p_; }

  double total_rate(const Lattice& lat) const {
    const double n1 = static_cast<double>(lat.count(SiteState::One));
    const double n2 = static_cast<double>(lat.count(SiteState::Two));
    return n1 * (p_.beta1 + p_.delta1) + n2 * (p_.beta2 + p_.delta2) +
           static_cast<double>(lat.size()) * p_.delta0;
  }

  Event apply(Lattice& lat, Rng& rng, double lambda, double time) const {
    const double n1 = static_cast<double>(lat.count(SiteState::One));
    const double n2 = static_cast<double>(lat.count(SiteState::Two));
    double u = rng.uniform() * lambda;
    if (u < n1 * p_.beta1)
      return birth(lat, rng, time, SiteState::One, p_.kernel1);
    u -= n1 * p_.beta1;
    if (u < n1 * p_.delta1) return death(lat, rng, time, SiteState::One);
    u -= n1 * p_.delta1;
    if (u < n2 * p_.beta2)
      return birth(lat, rng, time, SiteState::Two, p_.kernel2);
    u -= n2 * p_.beta2;
    if (u < n2 * p_.delta2 || p_.delta0 <= 0.0)
      return death(lat, rng, time, SiteState::Two);
    Event ev{time, EventKind::Fire, lat.uniform_site(rng), -1};
    lat.clear_block(ev.source, p_.fire_width);
    return ev;
  }

 private:
  static Event birth(Lattice& lat, Rng& rng, double time, SiteState type,
                     const KernelTable& kernel) {
    const std::int32_t src = lat.sample_occupied(type, rng);
    const Offset off = kernel.sample_offset(rng);
    const std::int32_t tgt = lat.apply_offset(src, off.dx, off.dy);
    const bool one = type == SiteState::One;
    if (tgt < 0 || lat.state(tgt) != SiteState::Vacant)
      return {time, one ? EventKind::SuppressedBirth1 : EventKind::SuppressedBirth2,
              src, tgt};
    lat.set_state(tgt, type);
    return {time, one ? EventKind::Birth1 : EventKind::Birth2, src, tgt};
  }

  static Event death(Lattice& lat, Rng& rng, double time, SiteState type) {
    const std::int32_t site = lat.sample_occupied(type, rng);
    lat.set_state(site, SiteState::Vacant);
    return {time, type == SiteState::One ? EventKind::Death1 : EventKind::Death2,
            site, -1};
  }

  ProcessParams p_;
};

// Variant where type 1 is replaced by independent per-site flips: every
// vacant site turns 1 at rate beta1, every 1 turns vacant at rate delta1,
// sites holding a 2 do not flip. Type-2 dynamics unchanged; no fires.
// Requires a lattice built with vacancy tracking.
class ZetaFlipDynamics {
 public:
  explicit ZetaFlipDynamics(const ProcessParams& p) : p_(p) {
    p_.validate();
    if (p_.delta0 != 0.0)
      throw ConfigError("flip variant requires delta0 = 0");
  }

  const ProcessParams& params() const { return p_; }

  double total_rate(const Lattice& lat) const {
    const double nv = static_cast<double>(lat.count(SiteState::Vacant));
    const double n1 = static_cast<double>(lat.count(SiteState::One));
    const double n2 = static_cast<double>(lat.count(SiteState::Two));
    return nv * p_.beta1 + n1 * p_.delta1 + n2 * (p_.beta2 + p_.delta2);
  }

  Event apply(Lattice& lat, Rng& rng, double lambda, double time) const {
    const double nv = static_cast<double>(lat.count(SiteState::Vacant));
    const double n1 = static_cast<double>(lat.count(SiteState::One));
    const double n2 = static_cast<double>(lat.count(SiteState::Two));
    double u = rng.uniform() * lambda;
    if (u < nv * p_.beta1) {
      const std::int32_t site = lat.sample_occupied(SiteState::Vacant, rng);
      lat.set_state(site, SiteState::One);
      return {time, EventKind::Birth1, site, site};
    }
    u -= nv * p_.beta1;
    if (u < n1 * p_.delta1) {
      const std::int32_t site = lat.sample_occupied(SiteState::One, rng);
      lat.set_state(site, SiteState::Vacant);
      return {time, EventKind::Death1, site, -1};
    }
    u -= n1 * p_.delta1;
    if (u < n2 * p_.beta2) {
      const std::int32_t src = lat.sample_occupied(SiteState::Two, rng);
      const Offset off = p_.kernel2.sample_offset(rng);
      const std::int32_t tgt = lat.apply_offset(src, off.dx, off.dy);
      if (tgt < 0 || lat.state(tgt) != SiteState::Vacant)
        return {time, EventKind::SuppressedBirth2, src, tgt};
      lat.set_state(tgt, SiteState::Two);
      return {time, EventKind::Birth2, src, tgt};
    }
    const std::int32_t site = lat.sample_occupied(SiteState::Two, rng);
    lat.set_state(site, SiteState::Vacant);
    return {time, EventKind::Death2, site, -1};
  }

 private:
  ProcessParams p_;
};

// Advance the clock by Exponential(total rate) and apply one event.
// Empty optional signals an absorbing state (no clock left to ring).
template <class Dynamics>
std::optional<Event> step(Lattice& lat, const Dynamics& dyn, double& clock, Rng& rng) {
  const double lambda = dyn.total_rate(lat);
  if (lambda <= 0.0) return std::nullopt;
  clock += rng.exponential(lambda);
  return dyn.apply(lat, rng, lambda, clock);
}

enum class ExtinctStop { None, TypeOne, TypeTwo, Either, Both };

struct StopSpec {
  double t_max = 0.0;
  ExtinctStop extinct = ExtinctStop::None;
  std::int64_t n1_at_least = 0;  // > 0: stop once the type-1 count reaches this
};

struct ObserverSpec {
  double sample_every = 0.0;            // 0 disables periodic sampling
  std::vector<double> sample_times;     // explicit schedule, must be sorted
};

namespace detail {
struct NoOpOnEvent {
  void operator()(const Event&, const Lattice&) const {}
};

inline bool extinct_stop_met(ExtinctStop mode, std::int64_t n1, std::int64_t n2) {
  switch (mode) {
    case ExtinctStop::None: return false;
    case ExtinctStop::TypeOne: return n1 == 0;
    case ExtinctStop::TypeTwo: return n2 == 0;
    case ExtinctStop::Either: return n1 == 0 || n2 == 0;
    case ExtinctStop::Both: return n1 == 0 && n2 == 0;
  }
  return false;
}
}  // namespace detail

// Drive the dynamics until the stop condition. Identical (seed, config)
// yields an identical Trajectory. The callback sees every event after it
// is applied.
template <class Dynamics, class OnEvent = detail::NoOpOnEvent>
Trajectory run_until(Lattice& lat, const Dynamics& dyn, const StopSpec& stop,
                     const ObserverSpec& obs, Rng& rng, std::uint64_t seed = 0,
                     OnEvent&& on_event = OnEvent{}) {
  Trajectory traj;
  traj.seed = seed;

  std::vector<double> schedule = obs.sample_times;
  if (obs.sample_every > 0.0) {
    for (std::int64_t i = 0;; ++i) {
      const double t = static_cast<double>(i) * obs.sample_every;
      if (t > stop.t_max + 1e-12) break;
      schedule.push_back(t);
    }
    if (!obs.sample_times.empty()) std::sort(schedule.begin(), schedule.end());
  }
  std::size_t next_sample = 0;

  double clock = 0.0;
  std::int64_t n1 = lat.count(SiteState::One);
  std::int64_t n2 = lat.count(SiteState::Two);
  if (n1 == 0) traj.extinct1 = 0.0;
  if (n2 == 0) traj.extinct2 = 0.0;

  auto emit_until = [&](double horizon) {
    while (next_sample < schedule.size() && schedule[next_sample] <= horizon) {
      traj.samples.push_back({schedule[next_sample], n1, n2});
      ++next_sample;
    }
  };

  auto stop_met = [&] {
    return detail::extinct_stop_met(stop.extinct, n1, n2) ||
           (stop.n1_at_least > 0 && n1 >= stop.n1_at_least);
  };
  bool stopped_early = stop_met();
  while (!stopped_early) {
    const double lambda = dyn.total_rate(lat);
    if (lambda <= 0.0) {
      // Absorbing: state is frozen, flush the rest of the schedule.
      emit_until(stop.t_max);
      clock = stop.t_max;
      break;
    }
    const double t_next = clock + rng.exponential(lambda);
    if (t_next > stop.t_max) {
      emit_until(stop.t_max);
      clock = stop.t_max;
      break;
    }
    emit_until(t_next);
    clock = t_next;
    const Event ev = dyn.apply(lat, rng, lambda, clock);
    ++traj.events;
    switch (ev.kind) {
      case EventKind::SuppressedBirth1: ++traj.suppressed1; break;
      case EventKind::SuppressedBirth2: ++traj.suppressed2; break;
      case EventKind::Fire: ++traj.fires; break;
      default: break;
    }
    n1 = lat.count(SiteState::One);
    n2 = lat.count(SiteState::Two);
    if (!traj.extinct1 && n1 == 0) traj.extinct1 = clock;
    if (!traj.extinct2 && n2 == 0) traj.extinct2 = clock;
    on_event(ev, lat);
    stopped_early = stop_met();
  }
  if (stopped_early) emit_until(clock);
  traj.final_time = clock;
  return traj;
}

}  // namespace firecp

#endif  // FIRECP_ENGINE_HPP
